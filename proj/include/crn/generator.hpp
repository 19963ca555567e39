#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace crn {

/// What caused a state change. One value per event-table row that moves the
/// chain; blocked arrivals have no label because they emit no edge.
enum class Event {
    // basic model
    PuArrivalIdle,
    PuArrivalHandoff,
    PuArrivalDropSu2,
    PuArrivalDropSu1,
    PuDeparture,
    Su1Arrival,
    Su1ArrivalDropSu2,
    Su1Departure,
    Su2Arrival,
    Su2Departure,
    // reservation model
    PuArrivalReserved,
    PuArrivalUnreserved,
    PuArrivalDegradeSu2,
    PuArrivalDropSuR1,
    SuR1Arrival,
    SuR1ArrivalDegradeSu2,
    SuR1ArrivalDropSu2,
    SuR1ArrivalDropSu1,
    SuR1Departure,
    Su1ArrivalDegradeSu2,
    Su2ArrivalAggregate,
    Su2ArrivalDegrade,
    Su2ArrivalNarrow,
    Su2DepartureSimple,
    Su2DepartureUpgrade,
};

std::string_view to_string(Event e) noexcept;

/// One labelled off-diagonal rate out of a state.
struct Transition {
    std::size_t target;
    double rate;
    Event event;

    bool operator==(const Transition&) const = default;
};

/// Sparse CTMC generator. Off-diagonal entries are stored per source state as
/// labelled transitions; two labels may share a target (their rates add). The
/// diagonal is implicit: q(s,s) = -sum of the row.
class Generator {
public:
    explicit Generator(std::size_t dimension) : rows_(dimension) {}

    std::size_t dimension() const noexcept { return rows_.size(); }

    /// Appends a labelled transition; zero rates are dropped.
    void add(std::size_t source, std::size_t target, double rate, Event event);

    const std::vector<Transition>& row(std::size_t source) const { return rows_[source]; }

    /// Sum of rates of all labels from source to target (source != target).
    double rate(std::size_t source, std::size_t target) const;
    double exit_rate(std::size_t source) const;
    double diagonal(std::size_t source) const { return -exit_rate(source); }

    /// Largest |q(s,s)| over all states.
    double max_exit_rate() const;

    std::size_t transition_count() const;

    /// Dense Q with the diagonal filled in.
    Eigen::MatrixXd to_dense() const;

    /// ∞-norm of x·Q.
    double left_residual(const std::vector<double>& x) const;

    /// True when every state reaches every other along positive-rate edges.
    bool strongly_connected() const;
    /// States reachable from `from` along positive-rate edges.
    std::vector<bool> reachable_from(std::size_t from) const;

    /// `src dst rate label` per labelled transition, sorted by (src, dst, label).
    void write_triples(std::ostream& os) const;

private:
    std::vector<std::vector<Transition>> rows_;
};

}  // namespace crn
