#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crn/params.hpp"
#include "crn/state.hpp"

namespace crn {

enum class ModelKind { Basic, Reservation };

std::string_view to_string(ModelKind m) noexcept;
ModelKind model_from_string(std::string_view s);

/// One value per SU class. `r1` exists only for the reservation model.
struct PerClass {
    std::optional<double> r1;
    double su1 = 0.0;
    double su2 = 0.0;
};

struct HandoffReport {
    PerClass value;
    /// Set when the class's blocking probability is 1 and its handoff
    /// probability was reported as 0 instead of dividing by zero.
    bool degenerate_r1 = false;
    bool degenerate_su1 = false;
    bool degenerate_su2 = false;
};

struct MetricsReport {
    ModelKind model = ModelKind::Basic;
    double lambda_s = 0.0;
    double mu_s = 0.0;
    PerClass capacity;    // completed requests / sec
    double utilization = 0.0;
    PerClass blocking;
    HandoffReport handoff;

    /// Values in the order of metric_columns(); empty where not applicable.
    std::array<std::optional<double>, 10> values() const;
};

/// rho_1, rho_2, rho_r1, U, Pb_r1, Pb_1, Pb_2, Ph_r1, Ph_1, Ph_2
const std::array<std::string_view, 10>& metric_columns();

// Capacity: Σ (users of the class) μs π; SU-2 in the reservation model is
// weighted by channels held, m*jm + n*jn.
PerClass capacity(const BasicSpace& space, const std::vector<double>& pi, const SystemParams& p);
PerClass capacity(const ReservationSpace& space, const std::vector<double>& pi, const SystemParams& p);

double utilization(const BasicSpace& space, const std::vector<double>& pi, const SystemParams& p);
double utilization(const ReservationSpace& space, const std::vector<double>& pi, const SystemParams& p);

/// P_b(c) = Σ_{s blocks c} λs π_s / ((k - i_s) λp + λs), with the blocked
/// sets taken from the chain builders' admission rules.
PerClass blocking(const BasicSpace& space, const std::vector<double>& pi, const SystemParams& p);
PerClass blocking(const ReservationSpace& space, const std::vector<double>& pi, const SystemParams& p);

HandoffReport handoff(const BasicSpace& space, const std::vector<double>& pi, const SystemParams& p,
                      const PerClass& blocking_report);
HandoffReport handoff(const ReservationSpace& space, const std::vector<double>& pi, const SystemParams& p,
                      const PerClass& blocking_report);

MetricsReport compute_metrics(const BasicSpace& space, const std::vector<double>& pi, const SystemParams& p);
MetricsReport compute_metrics(const ReservationSpace& space, const std::vector<double>& pi, const SystemParams& p);

/// Fixed 12-significant-digit rendering used in every CSV.
std::string format_real(double x);

std::string metrics_csv_header();
std::string metrics_csv_row(const MetricsReport& r);

}  // namespace crn
