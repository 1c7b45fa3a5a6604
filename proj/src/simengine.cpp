#include "vecsim/simengine.hpp"

#include <algorithm>
#include <stdexcept>

#include "vecsim/error.hpp"

namespace vecsim {

double effective_size(const TaskSpec& task, ExecutionMode mode, double approx_fraction) {
    return mode == ExecutionMode::ApproximateProcessing ? task.size * approx_fraction : task.size;
}

Seconds processing_time(const TaskSpec& task, const NodeSpec& node, ExecutionMode mode, double approx_fraction) {
    return effective_size(task, mode, approx_fraction) / node.speed;
}

TraceReport run(const Platform& platform, const WorkloadSpec& workload, PolicyKind kind, std::uint64_t seed,
                const SimOptions& opts) {
    auto trace = run_with(platform, workload, make_assigner(kind, platform, seed, opts.lsbts), accounting_for(kind),
                          opts);
    trace.policy = kind;
    trace.seed = seed;
    return trace;
}

TraceReport run_with(const Platform& platform, const WorkloadSpec& workload, const Assigner& assign,
                     Accounting accounting, const SimOptions& opts) {
    if (!(opts.approx_fraction > 0.0 && opts.approx_fraction <= 1.0)) {
        throw ConfigError("approx_fraction must lie in (0, 1]");
    }
    if (!(opts.lsbts.bc_overhead >= 0.0)) throw ConfigError("bc_overhead must be >= 0");
    for (const auto& t : workload.tasks()) {
        if (t.owner_vehicle >= platform.vehicle_count()) {
            throw ConfigError("task " + std::to_string(t.task_id) + ": owner " + std::to_string(t.owner_vehicle) +
                              " is not a vehicle of the platform (" + std::to_string(platform.vehicle_count()) +
                              " vehicles)");
        }
    }

    TraceReport trace;
    trace.workload = workload.name();
    trace.outcomes.reserve(workload.size());
    if (opts.record_events) trace.events.reserve(5 * workload.size());

    CapacityLedger ledger(platform);
    for (const auto& task : workload.tasks()) {
        const Seconds t = task.arrival_time;
        const Assignment a = assign(task, ledger, t);
        const NodeSpec& node = platform.node(a.node_id);
        if (a.task_id != task.task_id || node.layer != a.layer) {
            throw std::logic_error("policy returned an inconsistent assignment for task " +
                                   std::to_string(task.task_id));
        }
        if (a.mode == ExecutionMode::ApproximateProcessing && task.accuracy == AccuracyClass::Accurate) {
            throw std::logic_error("policy approximated accurate task " + std::to_string(task.task_id));
        }

        const double work = effective_size(task, a.mode, opts.approx_fraction);
        const Seconds duration = work / node.speed;
        const Seconds start = std::max(t, ledger.earliest_free(node.node_id));
        ledger.admit(node, task, start, duration, work);

        const bool lsbts = accounting == Accounting::LsbtsStyle;
        const Seconds overhead = lsbts ? lsbts_overhead(task, opts.lsbts) : 0.0;

        TaskOutcome o;
        o.task_id = task.task_id;
        o.layer = a.layer;
        o.node_id = a.node_id;
        o.mode = a.mode;
        o.rt_class = task.rt_class;
        o.arrival = t;
        o.deadline = task.deadline;
        o.start = start;
        o.finish = start + duration + 2.0 * node.link_latency + overhead;
        o.processing_hours = duration / 3600.0;
        o.work = work;
        o.deadline_met = o.finish <= task.deadline;
        o.privacy_override = lsbts && task.privacy != PrivacyClass::Public;
        o.privacy_preserved = o.privacy_override || a.layer != Layer::RSU;
        trace.outcomes.push_back(o);

        if (opts.record_events) {
            trace.events.push_back({t, EventKind::Arrive, task.task_id, node.node_id});
            trace.events.push_back({t, EventKind::Assign, task.task_id, node.node_id});
            trace.events.push_back({start, EventKind::Start, task.task_id, node.node_id});
            trace.events.push_back({start + duration, EventKind::Release, task.task_id, node.node_id});
            trace.events.push_back({o.finish, EventKind::Finish, task.task_id, node.node_id});
        }
    }

    // Releases sort ahead of starts at equal times so a freed core can be reused immediately.
    std::stable_sort(trace.events.begin(), trace.events.end(), [](const Event& a, const Event& b) {
        if (a.time != b.time) return a.time < b.time;
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.task < b.task;
    });
    return trace;
}

std::uint32_t peak_concurrency(const TraceReport& trace, NodeId node) {
    std::int64_t running = 0;
    std::int64_t peak = 0;
    for (const auto& e : trace.events) {
        if (e.node != node) continue;
        if (e.kind == EventKind::Start) peak = std::max(peak, ++running);
        if (e.kind == EventKind::Release) --running;
    }
    return static_cast<std::uint32_t>(peak);
}

nlohmann::json to_json(const TaskOutcome& o) {
    return {
        {"id", o.task_id},
        {"layer", to_string(o.layer)},
        {"node", o.node_id},
        {"mode", to_string(o.mode)},
        {"rt", to_string(o.rt_class)},
        {"arrival", o.arrival},
        {"deadline", o.deadline},
        {"start", o.start},
        {"finish", o.finish},
        {"processing_hours", o.processing_hours},
        {"work", o.work},
        {"deadline_met", o.deadline_met},
        {"privacy_preserved", o.privacy_preserved},
        {"privacy_override", o.privacy_override},
    };
}

nlohmann::json to_json(const Event& e) {
    return {{"time", e.time}, {"event", to_string(e.kind)}, {"task", e.task}, {"node", e.node}};
}

}  // namespace vecsim
