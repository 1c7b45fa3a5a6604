#include "vecsim/experiment.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "vecsim/error.hpp"

namespace vecsim {

using nlohmann::json;

RunResult execute(const RunConfig& config) {
    validate(config);
    const Platform platform = build_platform(config.platform);
    const WorkloadSpec workload = resolve_workload(config, config.seed);

    RunResult r;
    r.policy = config.policy;
    r.seed = config.seed;
    r.workload = workload.name();
    r.trace = run(platform, workload, config.policy, config.seed, config.sim);
    if (!r.trace.outcomes.empty()) r.metrics = summarize(r.trace, platform, config.metrics);
    return r;
}

json run_report(const RunConfig& config, const RunResult& result) {
    json outcomes = json::array();
    for (const auto& o : result.trace.outcomes) outcomes.push_back(to_json(o));
    json doc{
        {"schema", "vecsim.report/1"},
        {"config", to_json(config)},
        {"policy", to_string(result.policy)},
        {"policy_label", display_name(result.policy)},
        {"workload", result.workload},
        {"seed", result.seed},
        {"tasks", result.trace.outcomes.size()},
        {"metrics", result.trace.outcomes.empty() ? json(nullptr) : to_json(result.metrics)},
        {"outcomes", std::move(outcomes)},
    };
    if (config.sim.record_events) {
        json events = json::array();
        for (const auto& e : result.trace.events) events.push_back(to_json(e));
        doc["events"] = std::move(events);
    }
    return doc;
}

// ─────────────────────────────────────────────
// Comparison
// ─────────────────────────────────────────────

namespace {

struct Published {
    std::string_view workload;
    PolicyKind against;
    double qos_gain_pct;
    double cost_reduction_pct;
};

// Reported PVEC gains on the builtin workloads.
constexpr std::array kPublished{
    Published{"healthcare", PolicyKind::Random, 55.0, 61.0},
    Published{"e-transport", PolicyKind::Random, 53.0, 60.0},
    Published{"e-business", PolicyKind::Random, 50.0, 63.0},
    Published{"healthcare", PolicyKind::LSBTS, 30.0, 56.0},
    Published{"e-transport", PolicyKind::LSBTS, 25.0, 49.0},
    Published{"e-business", PolicyKind::LSBTS, 24.0, 53.0},
};

const Published* find_published(std::string_view workload, PolicyKind b) {
    for (const auto& p : kPublished) {
        if (p.workload == workload && p.against == b) return &p;
    }
    return nullptr;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string csv_optional(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

}  // namespace

std::optional<double> published_qos_gain(std::string_view workload, PolicyKind b) {
    const auto* p = find_published(workload, b);
    return p ? std::optional(p->qos_gain_pct) : std::nullopt;
}

std::optional<double> published_cost_reduction(std::string_view workload, PolicyKind b) {
    const auto* p = find_published(workload, b);
    return p ? std::optional(p->cost_reduction_pct) : std::nullopt;
}

Comparison compare(const RunConfig& base, const std::vector<PolicyKind>& policies,
                   const std::vector<std::uint64_t>& seeds) {
    if (policies.empty()) throw ConfigError("compare: at least one policy is required");
    if (seeds.empty()) throw ConfigError("compare: at least one seed is required");
    validate(base);
    const Platform platform = build_platform(base.platform);

    Comparison c;
    std::map<std::uint64_t, WorkloadSpec> workloads;
    for (auto seed : seeds) workloads.emplace(seed, resolve_workload(base, seed));
    c.workload = workloads.begin()->second.name();

    for (PolicyKind kind : policies) {
        PolicySummary s;
        s.policy = kind;
        for (auto seed : seeds) {
            const auto& w = workloads.at(seed);
            if (w.empty()) throw ConfigError("compare: workload is empty; metrics are undefined");
            RunResult r;
            r.policy = kind;
            r.seed = seed;
            r.workload = w.name();
            const auto trace = run(platform, w, kind, seed, base.sim);
            r.metrics = summarize(trace, platform, base.metrics);
            s.qos += r.metrics.qos;
            s.qor += r.metrics.qor;
            s.cost += r.metrics.cost;
            s.nmd += static_cast<double>(r.metrics.nmd);
            s.privacy_percent += r.metrics.privacy_percent;
            ++s.runs;
            c.runs.push_back(std::move(r));
        }
        const auto n = static_cast<double>(s.runs);
        s.qos /= n;
        s.qor /= n;
        s.cost /= n;
        s.nmd /= n;
        s.privacy_percent /= n;
        c.summaries.push_back(s);
    }

    for (const auto& a : c.summaries) {
        for (const auto& b : c.summaries) {
            if (a.policy == b.policy) continue;
            Improvement imp;
            imp.a = a.policy;
            imp.b = b.policy;
            imp.qos_gain_pct = (a.qos - b.qos) / a.qos * 100.0;
            imp.qos_ratio = a.qos / b.qos;
            if (b.cost > 0.0) imp.cost_reduction_pct = (b.cost - a.cost) / b.cost * 100.0;
            if (a.policy == PolicyKind::PVEC) {
                imp.published_qos_gain_pct = published_qos_gain(c.workload, b.policy);
                imp.published_cost_reduction_pct = published_cost_reduction(c.workload, b.policy);
            }
            c.improvements.push_back(imp);
        }
    }
    return c;
}

json to_json(const Comparison& c, const RunConfig& base) {
    json runs = json::array();
    for (const auto& r : c.runs) {
        json row = to_json(r.metrics);
        row["policy"] = to_string(r.policy);
        row["seed"] = r.seed;
        runs.push_back(std::move(row));
    }
    json summaries = json::array();
    for (const auto& s : c.summaries) {
        summaries.push_back({{"policy", to_string(s.policy)},
                             {"policy_label", display_name(s.policy)},
                             {"runs", s.runs},
                             {"qos", s.qos},
                             {"qor", s.qor},
                             {"cost", s.cost},
                             {"nmd", s.nmd},
                             {"privacy_percent", s.privacy_percent}});
    }
    json improvements = json::array();
    for (const auto& i : c.improvements) {
        improvements.push_back({{"a", to_string(i.a)},
                                {"b", to_string(i.b)},
                                {"qos_gain_pct", i.qos_gain_pct},
                                {"qos_ratio", i.qos_ratio},
                                {"cost_reduction_pct", optional_number(i.cost_reduction_pct)},
                                {"published_qos_gain_pct", optional_number(i.published_qos_gain_pct)},
                                {"published_cost_reduction_pct", optional_number(i.published_cost_reduction_pct)}});
    }
    return {
        {"schema", "vecsim.compare/1"},
        {"config", to_json(base)},
        {"workload", c.workload},
        {"conventions",
         {{"qos_gain_pct", "(qos_a - qos_b) / qos_a * 100"},
          {"qos_ratio", "qos_a / qos_b"},
          {"cost_reduction_pct", "(cost_b - cost_a) / cost_b * 100"}}},
        {"runs", std::move(runs)},
        {"summary", std::move(summaries)},
        {"improvements", std::move(improvements)},
    };
}

namespace {

constexpr std::string_view kCsvHeader = "row_type,policy,seed,qos,qor,cost,nmd,privacy_percent,ep_ul,ep_rsu,cp";

void append_rows(std::ostringstream& out, const Comparison& c, std::string_view prefix) {
    for (const auto& r : c.runs) {
        const auto& m = r.metrics;
        out << prefix << "run," << to_string(r.policy) << ',' << r.seed << ',' << format_number(m.qos) << ','
            << format_number(m.qor) << ',' << format_number(m.cost) << ',' << m.nmd << ','
            << format_number(m.privacy_percent) << ',' << m.ep_ul << ',' << m.ep_rsu << ',' << m.cp << '\n';
    }
    for (const auto& s : c.summaries) {
        out << prefix << "summary," << to_string(s.policy) << ",," << format_number(s.qos) << ','
            << format_number(s.qor) << ',' << format_number(s.cost) << ',' << format_number(s.nmd) << ','
            << format_number(s.privacy_percent) << ",,,\n";
    }
}

}  // namespace

std::string to_csv(const Comparison& c) {
    std::ostringstream out;
    out << "# vecsim compare; workload=" << c.workload << '\n'
        << "# qos_gain_pct = (qos_a - qos_b) / qos_a * 100; qos_ratio = qos_a / qos_b;"
           " cost_reduction_pct = (cost_b - cost_a) / cost_b * 100\n";
    for (const auto& i : c.improvements) {
        out << "# improvement a=" << to_string(i.a) << " b=" << to_string(i.b)
            << " qos_gain_pct=" << format_number(i.qos_gain_pct) << " qos_ratio=" << format_number(i.qos_ratio)
            << " cost_reduction_pct=" << csv_optional(i.cost_reduction_pct);
        if (i.published_qos_gain_pct) {
            out << " published_qos_gain_pct=" << csv_optional(i.published_qos_gain_pct)
                << " published_cost_reduction_pct=" << csv_optional(i.published_cost_reduction_pct);
        }
        out << '\n';
    }
    out << kCsvHeader << '\n';
    append_rows(out, c, "");
    return out.str();
}

// ─────────────────────────────────────────────
// Sweep
// ─────────────────────────────────────────────

Sweep sweep(const RunConfig& base, std::string_view parameter, const std::vector<std::string>& values,
            const std::vector<PolicyKind>& policies, const std::vector<std::uint64_t>& seeds) {
    if (std::find(kSweepParameters.begin(), kSweepParameters.end(), parameter) == kSweepParameters.end()) {
        std::string valid;
        for (auto p : kSweepParameters) valid += (valid.empty() ? "" : ", ") + std::string(p);
        throw ConfigError("sweep: unknown parameter '" + std::string(parameter) + "' (valid: " + valid + ")");
    }
    if (values.empty()) throw ConfigError("sweep: at least one value is required");

    const std::string_view section = parameter == "approx_fraction" ? "sim" : "platform";
    Sweep s;
    s.parameter = std::string(parameter);
    for (const auto& v : values) {
        RunConfig cfg = base;
        apply_setting(cfg, section, parameter, v);
        s.points.push_back({v, compare(cfg, policies, seeds)});
    }
    return s;
}

json to_json(const Sweep& s, const RunConfig& base) {
    json points = json::array();
    for (const auto& p : s.points) {
        json c = to_json(p.comparison, base);
        c.erase("config");
        points.push_back({{"value", p.value}, {"comparison", std::move(c)}});
    }
    return {{"schema", "vecsim.sweep/1"}, {"config", to_json(base)}, {"parameter", s.parameter},
            {"points", std::move(points)}};
}

std::string to_csv(const Sweep& s) {
    std::ostringstream out;
    out << "# vecsim sweep; parameter=" << s.parameter << '\n';
    out << "parameter,value," << kCsvHeader << '\n';
    for (const auto& p : s.points) append_rows(out, p.comparison, s.parameter + "," + p.value + ",");
    return out.str();
}

// ─────────────────────────────────────────────
// Output helpers
// ─────────────────────────────────────────────

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot open '" + tmp.string() + "' for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            throw Error("failed writing '" + tmp.string() + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace vecsim
