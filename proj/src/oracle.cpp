#include "vecsim/oracle.hpp"

#include <unordered_map>

#include "vecsim/error.hpp"

namespace vecsim {

std::vector<OracleChoice> oracle_choices(const TaskSpec& task, bool honor_privacy) {
    std::vector<OracleChoice> out;
    for (Layer layer : kLayers) {
        if (honor_privacy) {
            if (task.privacy == PrivacyClass::Private && layer != Layer::UserLayer) continue;
            if (task.privacy == PrivacyClass::Restricted && layer == Layer::RSU) continue;
        }
        out.push_back({layer, ExecutionMode::AccurateProcessing});
        if (task.accuracy == AccuracyClass::Approximate) {
            out.push_back({layer, ExecutionMode::ApproximateProcessing});
        }
    }
    return out;
}

TraceReport simulate_choices(const Platform& platform, const WorkloadSpec& workload,
                             const std::vector<OracleChoice>& choices, const OracleOptions& options) {
    if (choices.size() != workload.size()) throw std::invalid_argument("one choice per task required");
    std::unordered_map<TaskId, OracleChoice> by_task;
    for (std::size_t i = 0; i < choices.size(); ++i) by_task.emplace(workload.tasks()[i].task_id, choices[i]);

    const Assigner scripted = [&](const TaskSpec& task, const CapacityLedger& ledger, Seconds) {
        const auto c = by_task.at(task.task_id);
        return Assignment{task.task_id, c.layer, least_busy_node(platform, ledger, c.layer, task.owner_vehicle),
                          c.mode};
    };
    return run_with(platform, workload, scripted, options.accounting, options.sim);
}

OracleResult brute_force_best(const Platform& platform, const WorkloadSpec& workload, const OracleOptions& options) {
    const std::size_t n = workload.size();
    if (n == 0) throw ConfigError("oracle: QoS is undefined on an empty workload");
    if (n > kOracleMaxTasks) {
        throw ConfigError("oracle: instance has " + std::to_string(n) + " tasks; the cap is " +
                          std::to_string(kOracleMaxTasks));
    }

    std::vector<std::vector<OracleChoice>> options_per_task;
    options_per_task.reserve(n);
    for (const auto& t : workload.tasks()) options_per_task.push_back(oracle_choices(t, options.honor_privacy));

    // Odometer over option indices; the last task turns fastest, which yields
    // vectors in lexicographic order.
    std::vector<std::size_t> digits(n, 0);
    std::vector<OracleChoice> current(n);
    OracleResult result;
    std::vector<OracleChoice> best;
    bool have_best = false;

    for (;;) {
        for (std::size_t i = 0; i < n; ++i) current[i] = options_per_task[i][digits[i]];
        const auto trace = simulate_choices(platform, workload, current, options);
        const double q = summarize(trace, platform, options.metrics).qos;
        ++result.evaluated;
        if (!have_best || q > result.best_qos) {
            result.best_qos = q;
            best = current;
            have_best = true;
        }

        std::size_t pos = n;
        bool advanced = false;
        while (pos > 0 && !advanced) {
            --pos;
            if (++digits[pos] < options_per_task[pos].size()) {
                advanced = true;
            } else {
                digits[pos] = 0;
            }
        }
        if (!advanced) break;
    }

    // Recover concrete nodes by replaying the winning vector.
    const auto trace = simulate_choices(platform, workload, best, options);
    for (const auto& o : trace.outcomes) result.best_assignment.push_back({o.task_id, o.layer, o.node_id, o.mode});
    return result;
}

}  // namespace vecsim
