#include "crn/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <tuple>

namespace crn {

std::string_view to_string(Event e) noexcept {
    switch (e) {
        case Event::PuArrivalIdle: return "PuArrivalIdle";
        case Event::PuArrivalHandoff: return "PuArrivalHandoff";
        case Event::PuArrivalDropSu2: return "PuArrivalDropSu2";
        case Event::PuArrivalDropSu1: return "PuArrivalDropSu1";
        case Event::PuDeparture: return "PuDeparture";
        case Event::Su1Arrival: return "Su1Arrival";
        case Event::Su1ArrivalDropSu2: return "Su1ArrivalDropSu2";
        case Event::Su1Departure: return "Su1Departure";
        case Event::Su2Arrival: return "Su2Arrival";
        case Event::Su2Departure: return "Su2Departure";
        case Event::PuArrivalReserved: return "PuArrivalReserved";
        case Event::PuArrivalUnreserved: return "PuArrivalUnreserved";
        case Event::PuArrivalDegradeSu2: return "PuArrivalDegradeSu2";
        case Event::PuArrivalDropSuR1: return "PuArrivalDropSuR1";
        case Event::SuR1Arrival: return "SuR1Arrival";
        case Event::SuR1ArrivalDegradeSu2: return "SuR1ArrivalDegradeSu2";
        case Event::SuR1ArrivalDropSu2: return "SuR1ArrivalDropSu2";
        case Event::SuR1ArrivalDropSu1: return "SuR1ArrivalDropSu1";
        case Event::SuR1Departure: return "SuR1Departure";
        case Event::Su1ArrivalDegradeSu2: return "Su1ArrivalDegradeSu2";
        case Event::Su2ArrivalAggregate: return "Su2ArrivalAggregate";
        case Event::Su2ArrivalDegrade: return "Su2ArrivalDegrade";
        case Event::Su2ArrivalNarrow: return "Su2ArrivalNarrow";
        case Event::Su2DepartureSimple: return "Su2DepartureSimple";
        case Event::Su2DepartureUpgrade: return "Su2DepartureUpgrade";
    }
    return "Unknown";
}

void Generator::add(std::size_t source, std::size_t target, double rate, Event event) {
    if (rate <= 0.0) return;
    rows_.at(source).push_back({target, rate, event});
}

double Generator::rate(std::size_t source, std::size_t target) const {
    double total = 0.0;
    for (const auto& t : rows_.at(source))
        if (t.target == target) total += t.rate;
    return total;
}

double Generator::exit_rate(std::size_t source) const {
    double total = 0.0;
    for (const auto& t : rows_.at(source))
        if (t.target != source) total += t.rate;
    return total;
}

double Generator::max_exit_rate() const {
    double best = 0.0;
    for (std::size_t s = 0; s < rows_.size(); ++s) best = std::max(best, exit_rate(s));
    return best;
}

std::size_t Generator::transition_count() const {
    std::size_t count = 0;
    for (const auto& r : rows_) count += r.size();
    return count;
}

Eigen::MatrixXd Generator::to_dense() const {
    const auto n = static_cast<Eigen::Index>(rows_.size());
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index s = 0; s < n; ++s) {
        for (const auto& t : rows_[s]) {
            if (static_cast<Eigen::Index>(t.target) == s) continue;
            q(s, static_cast<Eigen::Index>(t.target)) += t.rate;
        }
        q(s, s) = -exit_rate(static_cast<std::size_t>(s));
    }
    return q;
}

double Generator::left_residual(const std::vector<double>& x) const {
    std::vector<double> y(rows_.size(), 0.0);
    for (std::size_t s = 0; s < rows_.size(); ++s) {
        double out = 0.0;
        for (const auto& t : rows_[s]) {
            if (t.target == s) continue;
            y[t.target] += x[s] * t.rate;
            out += t.rate;
        }
        y[s] -= x[s] * out;
    }
    double norm = 0.0;
    for (double v : y) norm = std::max(norm, std::abs(v));
    return norm;
}

std::vector<bool> Generator::reachable_from(std::size_t from) const {
    std::vector<bool> seen(rows_.size(), false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (const auto& t : rows_[s]) {
            if (!seen[t.target]) {
                seen[t.target] = true;
                stack.push_back(t.target);
            }
        }
    }
    return seen;
}

bool Generator::strongly_connected() const {
    if (rows_.empty()) return true;
    auto forward = reachable_from(0);
    if (std::find(forward.begin(), forward.end(), false) != forward.end()) return false;

    Generator reversed(rows_.size());
    for (std::size_t s = 0; s < rows_.size(); ++s)
        for (const auto& t : rows_[s]) reversed.rows_[t.target].push_back({s, t.rate, t.event});
    auto backward = reversed.reachable_from(0);
    return std::find(backward.begin(), backward.end(), false) == backward.end();
}

void Generator::write_triples(std::ostream& os) const {
    struct Line {
        std::size_t src, dst;
        double rate;
        std::string_view label;
    };
    std::vector<Line> lines;
    lines.reserve(transition_count());
    for (std::size_t s = 0; s < rows_.size(); ++s)
        for (const auto& t : rows_[s]) lines.push_back({s, t.target, t.rate, to_string(t.event)});
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return std::tie(a.src, a.dst, a.label) < std::tie(b.src, b.dst, b.label);
    });
    char buf[64];
    for (const auto& l : lines) {
        std::snprintf(buf, sizeof buf, "%.17g", l.rate);
        os << l.src << ' ' << l.dst << ' ' << buf << ' ' << l.label << '\n';
    }
}

}  // namespace crn
