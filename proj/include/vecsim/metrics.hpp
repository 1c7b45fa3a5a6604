/**
 * @file metrics.hpp
 * @brief Cost, missed deadlines, privacy, result quality and the composite QoS.
 *
 *   cost     = Σ_cloud processing_hours × srp
 *   privacy  = (EP(UL) + K·CP) / (EP(UL) + EP(RSU) + CP)
 *   qor      = mean per-task accuracy (1 for accurate runs, approx_accuracy otherwise)
 *   qos      = 1/(cost+1) × 1/(nmd+1) × privacy × qor
 *
 * Privacy enters QoS as a fraction; the percentage is reported separately.
 */

#pragma once

#include <span>

#include "json.hpp"
#include "vecsim/infrastructure.hpp"
#include "vecsim/simengine.hpp"

namespace vecsim {

enum class PrivacyWeighting : std::uint8_t { Count, Work };
enum class NmdScope : std::uint8_t { All, ExcludeSoft };

[[nodiscard]] constexpr std::string_view to_string(PrivacyWeighting w) noexcept {
    return w == PrivacyWeighting::Count ? "count" : "work";
}
[[nodiscard]] constexpr std::string_view to_string(NmdScope s) noexcept {
    return s == NmdScope::All ? "all" : "exclude_soft";
}

struct MetricsConfig {
    double approx_accuracy{0.95};
    PrivacyWeighting privacy_weighting{PrivacyWeighting::Count};
    NmdScope nmd_scope{NmdScope::All};
};

struct MetricsReport {
    double cost{0.0};
    std::size_t nmd{0};
    double privacy_fraction{0.0};
    double privacy_percent{0.0};
    double qor{0.0};
    double qos{0.0};
    std::size_t ep_ul{0};
    std::size_t ep_rsu{0};
    std::size_t cp{0};

    bool operator==(const MetricsReport&) const = default;
};

/// Throws MetricError if `srp` is negative.
[[nodiscard]] double cost(std::span<const TaskOutcome> outcomes, double srp);

[[nodiscard]] std::size_t nmd(std::span<const TaskOutcome> outcomes, NmdScope scope = NmdScope::All);

/// Throws MetricError on an empty trace or `k` outside [0, 1].
[[nodiscard]] double privacy(std::span<const TaskOutcome> outcomes, double k,
                             PrivacyWeighting weighting = PrivacyWeighting::Count);

/// Throws MetricError on an empty trace.
[[nodiscard]] double qor(std::span<const TaskOutcome> outcomes, double approx_accuracy = 0.95);

[[nodiscard]] double qos(double cost, std::size_t nmd, double privacy_fraction, double qor);

[[nodiscard]] MetricsReport summarize(const TraceReport& trace, const Platform& platform,
                                      const MetricsConfig& config = {});

[[nodiscard]] nlohmann::json to_json(const MetricsReport& m);

}  // namespace vecsim
