/**
 * @file simengine.hpp
 * @brief Deterministic executor turning policy decisions into task outcomes.
 *
 * Tasks are dispatched in (arrival, id) order. Each is assigned once at its
 * arrival instant from the ledger as it stands after all earlier
 * dispatches, then reserved on its node's earliest idle core (FIFO, no
 * preemption). The end-to-end finish adds the uplink and downlink latency
 * of the chosen node.
 */

#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "vecsim/infrastructure.hpp"
#include "vecsim/policy.hpp"
#include "vecsim/workload.hpp"

namespace vecsim {

struct SimOptions {
    double approx_fraction{0.1};  ///< share of the work an approximate run still performs
    LsbtsParams lsbts{};
    bool record_events{false};
};

/// How outcomes are charged. LSBTS-style accounting adds `bc_overhead` to
/// non-public tasks and marks them privacy-preserved wherever they ran.
enum class Accounting : std::uint8_t { Standard, LsbtsStyle };

[[nodiscard]] constexpr Accounting accounting_for(PolicyKind k) noexcept {
    return k == PolicyKind::LSBTS ? Accounting::LsbtsStyle : Accounting::Standard;
}

[[nodiscard]] double effective_size(const TaskSpec& task, ExecutionMode mode, double approx_fraction);

/// Pure compute time of `task` on `node` in `mode`.
[[nodiscard]] Seconds processing_time(const TaskSpec& task, const NodeSpec& node, ExecutionMode mode,
                                      double approx_fraction = 0.1);

struct TaskOutcome {
    TaskId task_id{0};
    Layer layer{Layer::Cloud};
    NodeId node_id{0};
    ExecutionMode mode{ExecutionMode::AccurateProcessing};
    RealTimeClass rt_class{RealTimeClass::Soft};
    Seconds arrival{0.0};
    Seconds deadline{0.0};
    Seconds start{0.0};   ///< compute begins on the core
    Seconds finish{0.0};  ///< result back at the vehicle
    double processing_hours{0.0};
    double work{0.0};  ///< effective work-units executed
    bool deadline_met{false};
    bool privacy_preserved{false};
    bool privacy_override{false};  ///< set by LSBTS-style accounting

    bool operator==(const TaskOutcome&) const = default;
};

enum class EventKind : std::uint8_t { Release, Finish, Arrive, Assign, Start };

[[nodiscard]] constexpr std::string_view to_string(EventKind k) noexcept {
    switch (k) {
        case EventKind::Release: return "release";
        case EventKind::Finish:  return "finish";
        case EventKind::Arrive:  return "arrive";
        case EventKind::Assign:  return "assign";
        case EventKind::Start:   return "start";
    }
    return "unknown";
}

/// Release frees a core; Finish is delivery of the result to the vehicle.
struct Event {
    Seconds time{0.0};
    EventKind kind{EventKind::Arrive};
    TaskId task{0};
    NodeId node{0};

    bool operator==(const Event&) const = default;
};

struct TraceReport {
    std::optional<PolicyKind> policy;  ///< empty for scripted runs
    std::string workload;
    std::uint64_t seed{0};
    std::vector<TaskOutcome> outcomes;
    std::vector<Event> events;  ///< time-ordered; empty unless recorded
};

/// Runs `kind` on `workload`. Throws ConfigError if a task's owner is not a vehicle of `platform`.
[[nodiscard]] TraceReport run(const Platform& platform, const WorkloadSpec& workload, PolicyKind kind,
                              std::uint64_t seed, const SimOptions& opts = {});

/// Runs an arbitrary assigner with the given accounting. The returned trace has no policy.
[[nodiscard]] TraceReport run_with(const Platform& platform, const WorkloadSpec& workload, const Assigner& assign,
                                   Accounting accounting, const SimOptions& opts = {});

/// Largest number of tasks simultaneously executing on `node` according to the event log.
[[nodiscard]] std::uint32_t peak_concurrency(const TraceReport& trace, NodeId node);

[[nodiscard]] nlohmann::json to_json(const TaskOutcome& o);
[[nodiscard]] nlohmann::json to_json(const Event& e);

}  // namespace vecsim
