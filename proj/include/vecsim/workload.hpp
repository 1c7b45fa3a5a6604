/**
 * @file workload.hpp
 * @brief Task model, deterministic synthetic workloads, and workload files.
 */

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vecsim/types.hpp"

namespace vecsim {

struct TaskSpec {
    TaskId task_id{0};
    VehicleId owner_vehicle{0};
    double size{0.0};  ///< abstract work-units, > 0
    PrivacyClass privacy{PrivacyClass::Public};
    RealTimeClass rt_class{RealTimeClass::Soft};
    AccuracyClass accuracy{AccuracyClass::Accurate};
    Seconds arrival_time{0.0};
    Seconds deadline{0.0};  ///< absolute

    bool operator==(const TaskSpec&) const = default;
};

/// Per-(privacy × real-time × accuracy) task tallies.
class ClassTally {
public:
    static constexpr std::size_t kCells = 3 * 3 * 2;

    void add(const TaskSpec& t) { ++cells_[cell(t.privacy, t.rt_class, t.accuracy)]; }

    [[nodiscard]] std::size_t count(PrivacyClass p, RealTimeClass r, AccuracyClass a) const {
        return cells_[cell(p, r, a)];
    }
    [[nodiscard]] std::size_t count(PrivacyClass p) const;
    [[nodiscard]] std::size_t count(RealTimeClass r) const;
    [[nodiscard]] std::size_t count(AccuracyClass a) const;
    [[nodiscard]] std::size_t total() const;

    bool operator==(const ClassTally&) const = default;

private:
    static constexpr std::size_t cell(PrivacyClass p, RealTimeClass r, AccuracyClass a) {
        return (index_of(p) * 3 + index_of(r)) * 2 + index_of(a);
    }
    std::array<std::size_t, kCells> cells_{};
};

/**
 * An ordered, validated task list.
 *
 * Construction sorts tasks by (arrival_time, task_id), checks every task
 * invariant and recomputes the class tally, so a WorkloadSpec value is
 * always consistent.
 */
class WorkloadSpec {
public:
    WorkloadSpec() = default;
    WorkloadSpec(std::string name, std::vector<TaskSpec> tasks);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<TaskSpec>& tasks() const noexcept { return tasks_; }
    [[nodiscard]] const ClassTally& class_counts() const noexcept { return counts_; }
    [[nodiscard]] std::size_t size() const noexcept { return tasks_.size(); }
    [[nodiscard]] bool empty() const noexcept { return tasks_.empty(); }

    bool operator==(const WorkloadSpec&) const = default;

private:
    std::string name_;
    std::vector<TaskSpec> tasks_;
    ClassTally counts_;
};

/// Throws ValidationError naming the task and field when `t` is malformed.
void validate_task(const TaskSpec& t);

/**
 * Knobs for the synthetic generator.
 *
 * Class shares are fractions of `task_count`; the resulting counts are
 * rounded to the nearest integer and then placed exactly. Shares within
 * one dimension must not sum above 1.
 */
struct GenParams {
    std::size_t task_count{0};
    std::uint32_t vehicles{100};  ///< owners drawn uniformly from [0, vehicles)

    double private_share{0.0};
    double restricted_share{0.0};
    double hard_share{0.0};
    double firm_share{0.0};
    double approx_share{0.6};

    double size_min{50.0};
    double size_max{500.0};  ///< sizes are log-uniform in [size_min, size_max]

    /// Deadline = arrival + size / reference_speed × slack. The default is
    /// twice the default cloud speed, so an accurate Hard task can never
    /// finish in time over the cloud link.
    double reference_speed{400.0};
    std::array<double, 2> slack_hard{1.2, 2.0};
    std::array<double, 2> slack_firm{2.0, 5.0};
    std::array<double, 2> slack_soft{5.0, 20.0};

    /// Arrivals uniform in [0, arrival_window]; 0 puts every task at t = 0.
    Seconds arrival_window{60.0};
};

/// One row of the builtin workload table.
struct BuiltinCounts {
    std::string_view name;
    std::size_t general;
    std::size_t private_tasks;
    std::size_t real_time_tasks;
};

inline constexpr std::array kBuiltinWorkloads{
    BuiltinCounts{"healthcare", 1500, 300, 200},
    BuiltinCounts{"e-transport", 1000, 150, 250},
    BuiltinCounts{"e-business", 1500, 250, 250},
};

/// Returns the builtin counts for `name` or throws ConfigError listing the valid names.
[[nodiscard]] const BuiltinCounts& builtin_counts(std::string_view name);

/**
 * Parameters that reproduce a builtin workload: totals, Private and Hard
 * counts from the table, Restricted = floor(Private / 2), non-Hard split
 * evenly (Firm gets the floor), everything else from `base`.
 */
[[nodiscard]] GenParams builtin_params(std::string_view name, GenParams base = {});

[[nodiscard]] WorkloadSpec generate_workload(const GenParams& params, std::uint64_t seed,
                                             std::string name = "synthetic");

/// `params.task_count` and the class shares are overwritten from the builtin table.
[[nodiscard]] WorkloadSpec builtin_workload(std::string_view name, const GenParams& params,
                                            std::uint64_t seed);

// Workload files

[[nodiscard]] nlohmann::json to_json(const WorkloadSpec& w);
[[nodiscard]] WorkloadSpec workload_from_json(const nlohmann::json& j);

/// Canonical text form: stable key order, tasks sorted by (arrival, id).
[[nodiscard]] std::string serialize_workload(const WorkloadSpec& w);
[[nodiscard]] WorkloadSpec parse_workload(std::string_view text);

void save_workload(const WorkloadSpec& w, const std::filesystem::path& path);
[[nodiscard]] WorkloadSpec load_workload(const std::filesystem::path& path);

}  // namespace vecsim
