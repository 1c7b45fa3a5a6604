/**
 * @file experiment.hpp
 * @brief Single runs, policy comparisons and parameter sweeps, with their
 *        JSON and CSV renderings.
 *
 * Improvement conventions used in comparison output, for policies a and b:
 *
 *   qos_gain_pct       = (QoS_a - QoS_b) / QoS_a × 100   (share of the winner)
 *   qos_ratio          = QoS_a / QoS_b
 *   cost_reduction_pct = (Cost_b - Cost_a) / Cost_b × 100
 */

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vecsim/config.hpp"
#include "vecsim/metrics.hpp"
#include "vecsim/simengine.hpp"

namespace vecsim {

struct RunResult {
    PolicyKind policy{PolicyKind::PVEC};
    std::uint64_t seed{0};
    std::string workload;
    MetricsReport metrics;
    TraceReport trace;
};

[[nodiscard]] RunResult execute(const RunConfig& config);

/// Report document: config echo, metrics, outcomes and, when recorded, the event log.
[[nodiscard]] nlohmann::json run_report(const RunConfig& config, const RunResult& result);

struct PolicySummary {
    PolicyKind policy{PolicyKind::PVEC};
    std::size_t runs{0};
    double qos{0.0};
    double qor{0.0};
    double cost{0.0};
    double nmd{0.0};
    double privacy_percent{0.0};
};

struct Improvement {
    PolicyKind a{PolicyKind::PVEC};
    PolicyKind b{PolicyKind::Random};
    double qos_gain_pct{0.0};
    double qos_ratio{0.0};
    std::optional<double> cost_reduction_pct;  ///< empty when b's cost is zero
    std::optional<double> published_qos_gain_pct;
    std::optional<double> published_cost_reduction_pct;
};

struct Comparison {
    std::string workload;
    std::vector<RunResult> runs;  ///< ordered by (policy as given, seed as given); traces dropped
    std::vector<PolicySummary> summaries;
    std::vector<Improvement> improvements;  ///< every ordered pair (a, b), a listed first
};

/// Published gains of PVEC over `b` on builtin `workload`, if any were reported.
[[nodiscard]] std::optional<double> published_qos_gain(std::string_view workload, PolicyKind b);
[[nodiscard]] std::optional<double> published_cost_reduction(std::string_view workload, PolicyKind b);

/// Runs the cross product of `policies` × `seeds`. Throws ConfigError if either list is empty.
[[nodiscard]] Comparison compare(const RunConfig& base, const std::vector<PolicyKind>& policies,
                                 const std::vector<std::uint64_t>& seeds);

[[nodiscard]] nlohmann::json to_json(const Comparison& c, const RunConfig& base);
[[nodiscard]] std::string to_csv(const Comparison& c);

inline constexpr std::array<std::string_view, 5> kSweepParameters{"k_cloud", "approx_fraction", "rsu_count",
                                                                  "latency_cloud", "srp"};

struct SweepPoint {
    std::string value;
    Comparison comparison;
};

struct Sweep {
    std::string parameter;
    std::vector<SweepPoint> points;
};

/// One comparison per value. Throws ConfigError for unknown parameters or an empty value list.
[[nodiscard]] Sweep sweep(const RunConfig& base, std::string_view parameter, const std::vector<std::string>& values,
                          const std::vector<PolicyKind>& policies, const std::vector<std::uint64_t>& seeds);

[[nodiscard]] nlohmann::json to_json(const Sweep& s, const RunConfig& base);
[[nodiscard]] std::string to_csv(const Sweep& s);

/// Shortest decimal text that round-trips `v`.
[[nodiscard]] std::string format_number(double v);

/// Writes via a temporary sibling and rename, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace vecsim
