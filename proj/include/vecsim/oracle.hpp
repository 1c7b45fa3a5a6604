/**
 * @file oracle.hpp
 * @brief Exhaustive allocator for tiny instances.
 *
 * Enumerates every per-task (layer, mode) choice, simulates each vector with
 * the engine and keeps the best QoS. Used to bound heuristic policies from
 * above and to check the metric pipeline end to end.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "vecsim/metrics.hpp"
#include "vecsim/simengine.hpp"

namespace vecsim {

inline constexpr std::size_t kOracleMaxTasks = 12;

struct OracleOptions {
    /// Restrict Private tasks to the owner OBU and keep Restricted tasks off RSUs.
    bool honor_privacy{true};
    Accounting accounting{Accounting::Standard};
    SimOptions sim{};
    MetricsConfig metrics{};
};

/// One per-task choice. Within a layer the node is picked as least_busy_node() would.
struct OracleChoice {
    Layer layer{Layer::UserLayer};
    ExecutionMode mode{ExecutionMode::AccurateProcessing};

    bool operator==(const OracleChoice&) const = default;
};

struct OracleResult {
    double best_qos{0.0};
    std::vector<Assignment> best_assignment;  ///< in workload order
    std::size_t evaluated{0};
};

/// Choices the oracle considers for `task`, in enumeration order (UL, RSU, cloud; ACP before AXP).
[[nodiscard]] std::vector<OracleChoice> oracle_choices(const TaskSpec& task, bool honor_privacy);

/// Simulates a fixed choice vector (one entry per task, workload order).
[[nodiscard]] TraceReport simulate_choices(const Platform& platform, const WorkloadSpec& workload,
                                           const std::vector<OracleChoice>& choices, const OracleOptions& options);

/**
 * Best QoS over all choice vectors. Ties keep the lexicographically
 * smallest vector, with the first task most significant.
 *
 * Throws ConfigError for an empty workload or more than kOracleMaxTasks tasks.
 */
[[nodiscard]] OracleResult brute_force_best(const Platform& platform, const WorkloadSpec& workload,
                                            const OracleOptions& options = {});

}  // namespace vecsim
