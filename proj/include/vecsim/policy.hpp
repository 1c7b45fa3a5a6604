/**
 * @file policy.hpp
 * @brief Allocation policies: PVEC, Random, and an LSBTS-style baseline.
 *
 * A policy maps one task to a (layer, node, execution mode) triple at the
 * task's arrival instant, reading the capacity ledger but never writing it.
 */

#pragma once

#include <functional>

#include "vecsim/infrastructure.hpp"
#include "vecsim/rng.hpp"
#include "vecsim/types.hpp"
#include "vecsim/workload.hpp"

namespace vecsim {

struct Assignment {
    TaskId task_id{0};
    Layer layer{Layer::Cloud};
    NodeId node_id{0};
    ExecutionMode mode{ExecutionMode::AccurateProcessing};

    bool operator==(const Assignment&) const = default;
};

/// Approximate processing for approximate-tolerant tasks, accurate otherwise.
[[nodiscard]] constexpr ExecutionMode mode_for(AccuracyClass a) noexcept {
    return a == AccuracyClass::Approximate ? ExecutionMode::ApproximateProcessing
                                           : ExecutionMode::AccurateProcessing;
}

/**
 * Node within `layer` that a task of `owner` would run on.
 *
 * User layer: the owner's OBU. RSU and cloud pools: the node whose earliest
 * idle core comes first, ties broken by lowest node id.
 */
[[nodiscard]] NodeId least_busy_node(const Platform& platform, const CapacityLedger& ledger, Layer layer,
                                     VehicleId owner);

/**
 * PVEC decision table.
 *
 * | privacy    | hard | firm                           | soft  |
 * |------------|------|--------------------------------|-------|
 * | private    | UL   | UL                             | UL    |
 * | restricted | UL   | UL if the owner OBU is idle, else cloud | cloud |
 * | public     | RSU  | RSU                            | cloud |
 *
 * The execution mode follows the accuracy class in every cell.
 */
[[nodiscard]] Assignment pvec_assign(const TaskSpec& task, const Platform& platform, const CapacityLedger& ledger,
                                     Seconds t);

/// Layer uniform over {owner OBU, RSU, cloud}, node uniform within the layer, always accurate.
[[nodiscard]] Assignment random_assign(const TaskSpec& task, const Platform& platform, Rng& rng);

struct LsbtsParams {
    Seconds bc_overhead{0.2};  ///< extra latency for non-public tasks
};

/// Extra latency the LSBTS-style stand-in charges `task`.
[[nodiscard]] constexpr Seconds lsbts_overhead(const TaskSpec& task, const LsbtsParams& p) noexcept {
    return task.privacy == PrivacyClass::Public ? 0.0 : p.bc_overhead;
}

/**
 * LSBTS-style stand-in. Scans the owner OBU, then RSUs by ascending id,
 * then cloud nodes by ascending id, and picks the first whose estimated
 * completion (queue wait + accurate processing + both link latencies +
 * overhead) meets the deadline. Falls back to the least busy cloud node.
 */
[[nodiscard]] Assignment lsbts_assign(const TaskSpec& task, const Platform& platform, const CapacityLedger& ledger,
                                      Seconds t, const LsbtsParams& params);

/// Signature the engine drives: decide for `task` at time `t` given the current ledger.
using Assigner = std::function<Assignment(const TaskSpec& task, const CapacityLedger& ledger, Seconds t)>;

/// Binds a policy kind to a platform. Random draws from an internal stream seeded with `seed`.
[[nodiscard]] Assigner make_assigner(PolicyKind kind, const Platform& platform, std::uint64_t seed,
                                     const LsbtsParams& lsbts = {});

}  // namespace vecsim
