#include "vecsim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "vecsim/error.hpp"
#include "vecsim/rng.hpp"

namespace vecsim {

using nlohmann::json;

// ─────────────────────────────────────────────
// ClassTally
// ─────────────────────────────────────────────

std::size_t ClassTally::count(PrivacyClass p) const {
    std::size_t n = 0;
    for (auto r : kRealTimeClasses)
        for (auto a : kAccuracyClasses) n += count(p, r, a);
    return n;
}

std::size_t ClassTally::count(RealTimeClass r) const {
    std::size_t n = 0;
    for (auto p : kPrivacyClasses)
        for (auto a : kAccuracyClasses) n += count(p, r, a);
    return n;
}

std::size_t ClassTally::count(AccuracyClass a) const {
    std::size_t n = 0;
    for (auto p : kPrivacyClasses)
        for (auto r : kRealTimeClasses) n += count(p, r, a);
    return n;
}

std::size_t ClassTally::total() const { return std::accumulate(cells_.begin(), cells_.end(), std::size_t{0}); }

// ─────────────────────────────────────────────
// WorkloadSpec
// ─────────────────────────────────────────────

void validate_task(const TaskSpec& t) {
    const auto fail = [&](std::string_view field, const std::string& why) {
        throw ValidationError("task " + std::to_string(t.task_id) + ": field '" + std::string(field) +
                              "' " + why);
    };
    if (!std::isfinite(t.size) || t.size <= 0.0) fail("size", "must be > 0");
    if (!std::isfinite(t.arrival_time) || t.arrival_time < 0.0) fail("arrival", "must be >= 0");
    if (!std::isfinite(t.deadline) || t.deadline <= t.arrival_time)
        fail("deadline", "must be greater than arrival");
}

WorkloadSpec::WorkloadSpec(std::string name, std::vector<TaskSpec> tasks)
    : name_(std::move(name)), tasks_(std::move(tasks)) {
    std::set<TaskId> seen;
    for (const auto& t : tasks_) {
        validate_task(t);
        if (!seen.insert(t.task_id).second) {
            throw ValidationError("task " + std::to_string(t.task_id) + ": field 'id' is duplicated");
        }
        counts_.add(t);
    }
    std::sort(tasks_.begin(), tasks_.end(), [](const TaskSpec& a, const TaskSpec& b) {
        if (a.arrival_time != b.arrival_time) return a.arrival_time < b.arrival_time;
        return a.task_id < b.task_id;
    });
}

// ─────────────────────────────────────────────
// Generation
// ─────────────────────────────────────────────

const BuiltinCounts& builtin_counts(std::string_view name) {
    for (const auto& b : kBuiltinWorkloads) {
        if (b.name == name) return b;
    }
    std::string valid;
    for (const auto& b : kBuiltinWorkloads) {
        if (!valid.empty()) valid += ", ";
        valid += b.name;
    }
    throw ConfigError("unknown workload '" + std::string(name) + "' (valid: " + valid + ")");
}

GenParams builtin_params(std::string_view name, GenParams base) {
    const auto& b = builtin_counts(name);
    const auto total = static_cast<double>(b.general);
    const std::size_t restricted = b.private_tasks / 2;
    const std::size_t firm = (b.general - b.real_time_tasks) / 2;

    base.task_count = b.general;
    base.private_share = static_cast<double>(b.private_tasks) / total;
    base.restricted_share = static_cast<double>(restricted) / total;
    base.hard_share = static_cast<double>(b.real_time_tasks) / total;
    base.firm_share = static_cast<double>(firm) / total;
    return base;
}

namespace {

std::size_t share_count(double share, std::size_t total, std::string_view what) {
    if (!std::isfinite(share) || share < 0.0 || share > 1.0) {
        throw ConfigError("share '" + std::string(what) + "' must lie in [0, 1]");
    }
    return static_cast<std::size_t>(std::llround(share * static_cast<double>(total)));
}

/// Exactly `counts[i]` copies of `values[i]`, remainder filled with `fallback`, shuffled.
template <typename Enum>
std::vector<Enum> placed_labels(std::size_t total, std::initializer_list<std::pair<Enum, std::size_t>> counts,
                                Enum fallback, Rng& rng) {
    std::vector<Enum> labels;
    labels.reserve(total);
    for (const auto& [value, n] : counts) labels.insert(labels.end(), n, value);
    labels.resize(total, fallback);
    rng.shuffle(std::span<Enum>(labels));
    return labels;
}

void check_range(const std::array<double, 2>& r, std::string_view what) {
    if (!(r[0] > 0.0) || r[1] < r[0]) {
        throw ConfigError("slack range '" + std::string(what) + "' must satisfy 0 < lo <= hi");
    }
}

}  // namespace

WorkloadSpec generate_workload(const GenParams& p, std::uint64_t seed, std::string name) {
    const std::size_t n = p.task_count;
    const std::size_t n_private = share_count(p.private_share, n, "private");
    const std::size_t n_restricted = share_count(p.restricted_share, n, "restricted");
    const std::size_t n_hard = share_count(p.hard_share, n, "hard");
    const std::size_t n_firm = share_count(p.firm_share, n, "firm");
    const std::size_t n_approx = share_count(p.approx_share, n, "approximate");

    if (p.private_share + p.restricted_share > 1.0 + 1e-12 || n_private + n_restricted > n) {
        throw ConfigError("privacy shares sum above 1 (private + restricted)");
    }
    if (p.hard_share + p.firm_share > 1.0 + 1e-12 || n_hard + n_firm > n) {
        throw ConfigError("real-time shares sum above 1 (hard + firm)");
    }
    if (n > 0 && p.vehicles == 0) throw ConfigError("vehicles must be >= 1");
    if (!(p.size_min > 0.0) || p.size_max < p.size_min) {
        throw ConfigError("size range must satisfy 0 < size_min <= size_max");
    }
    if (!(p.reference_speed > 0.0)) throw ConfigError("reference_speed must be > 0");
    if (!(p.arrival_window >= 0.0)) throw ConfigError("arrival_window must be >= 0");
    check_range(p.slack_hard, "hard");
    check_range(p.slack_firm, "firm");
    check_range(p.slack_soft, "soft");

    // Independent streams per dimension keep each class marginal stable when
    // another dimension's parameters change.
    Rng privacy_rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Rng rt_rng(seed ^ 0xbf58476d1ce4e5b9ULL);
    Rng accuracy_rng(seed ^ 0x94d049bb133111ebULL);
    Rng task_rng(seed);

    const auto privacy = placed_labels(
        n, {{PrivacyClass::Private, n_private}, {PrivacyClass::Restricted, n_restricted}},
        PrivacyClass::Public, privacy_rng);
    const auto rt = placed_labels(n, {{RealTimeClass::Hard, n_hard}, {RealTimeClass::Firm, n_firm}},
                                  RealTimeClass::Soft, rt_rng);
    const auto accuracy = placed_labels(n, {{AccuracyClass::Approximate, n_approx}},
                                        AccuracyClass::Accurate, accuracy_rng);

    const double log_lo = std::log(p.size_min);
    const double log_hi = std::log(p.size_max);

    std::vector<TaskSpec> tasks;
    tasks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        TaskSpec t;
        t.task_id = i;
        t.privacy = privacy[i];
        t.rt_class = rt[i];
        t.accuracy = accuracy[i];
        t.owner_vehicle = static_cast<VehicleId>(task_rng.below(p.vehicles));
        t.size = std::exp(task_rng.uniform(log_lo, log_hi));
        t.arrival_time = p.arrival_window > 0.0 ? task_rng.uniform(0.0, p.arrival_window) : 0.0;

        const auto& slack_range = t.rt_class == RealTimeClass::Hard   ? p.slack_hard
                                  : t.rt_class == RealTimeClass::Firm ? p.slack_firm
                                                                      : p.slack_soft;
        const double slack = task_rng.uniform(slack_range[0], slack_range[1]);
        t.deadline = t.arrival_time + t.size / p.reference_speed * slack;
        tasks.push_back(t);
    }
    return WorkloadSpec(std::move(name), std::move(tasks));
}

WorkloadSpec builtin_workload(std::string_view name, const GenParams& params, std::uint64_t seed) {
    return generate_workload(builtin_params(name, params), seed, std::string(name));
}

// ─────────────────────────────────────────────
// Files
// ─────────────────────────────────────────────

json to_json(const WorkloadSpec& w) {
    json tasks = json::array();
    for (const auto& t : w.tasks()) {
        tasks.push_back({
            {"id", t.task_id},
            {"owner", t.owner_vehicle},
            {"size", t.size},
            {"privacy", to_string(t.privacy)},
            {"rt", to_string(t.rt_class)},
            {"accuracy", to_string(t.accuracy)},
            {"arrival", t.arrival_time},
            {"deadline", t.deadline},
        });
    }
    return {{"name", w.name()}, {"tasks", std::move(tasks)}};
}

namespace {

template <typename T>
T required(const json& obj, const char* field, const std::string& where) {
    const auto it = obj.find(field);
    if (it == obj.end()) throw ValidationError(where + ": missing field '" + field + "'");
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw ValidationError(where + ": field '" + field + "' has the wrong type");
    }
}

template <typename Enum>
Enum required_enum(const json& obj, const char* field, const std::string& where,
                   std::optional<Enum> (*parse)(std::string_view) noexcept) {
    const auto text = required<std::string>(obj, field, where);
    const auto value = parse(text);
    if (!value) throw ValidationError(where + ": field '" + field + "' has invalid value '" + text + "'");
    return *value;
}

}  // namespace

WorkloadSpec workload_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("workload: top level must be an object");
    static const std::set<std::string> kTopKeys{"name", "tasks"};
    static const std::set<std::string> kTaskKeys{"id",       "owner", "size",    "privacy",
                                                 "rt",       "accuracy", "arrival", "deadline"};
    for (const auto& [key, _] : j.items()) {
        if (!kTopKeys.contains(key)) throw ValidationError("workload: unknown field '" + key + "'");
    }
    auto name = required<std::string>(j, "name", "workload");
    const auto it = j.find("tasks");
    if (it == j.end() || !it->is_array()) throw ValidationError("workload: 'tasks' must be an array");

    std::vector<TaskSpec> tasks;
    tasks.reserve(it->size());
    std::size_t index = 0;
    for (const auto& rec : *it) {
        std::string where = "tasks[" + std::to_string(index++) + "]";
        if (!rec.is_object()) throw ValidationError(where + ": must be an object");
        if (rec.contains("id") && rec["id"].is_number_unsigned()) {
            where = "task " + std::to_string(rec["id"].get<TaskId>());
        }
        for (const auto& [key, _] : rec.items()) {
            if (!kTaskKeys.contains(key)) throw ValidationError(where + ": unknown field '" + key + "'");
        }
        TaskSpec t;
        t.task_id = required<TaskId>(rec, "id", where);
        t.owner_vehicle = required<VehicleId>(rec, "owner", where);
        t.size = required<double>(rec, "size", where);
        t.privacy = required_enum(rec, "privacy", where, &parse_privacy);
        t.rt_class = required_enum(rec, "rt", where, &parse_rt_class);
        t.accuracy = required_enum(rec, "accuracy", where, &parse_accuracy);
        t.arrival_time = required<double>(rec, "arrival", where);
        t.deadline = required<double>(rec, "deadline", where);
        tasks.push_back(t);
    }
    return WorkloadSpec(std::move(name), std::move(tasks));
}

std::string serialize_workload(const WorkloadSpec& w) { return to_json(w).dump(2) + "\n"; }

WorkloadSpec parse_workload(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("workload parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return workload_from_json(j);
}

void save_workload(const WorkloadSpec& w, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
    out << serialize_workload(w);
    if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

WorkloadSpec load_workload(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open workload file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_workload(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

}  // namespace vecsim
