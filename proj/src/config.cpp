#include "vecsim/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "vecsim/error.hpp"

namespace vecsim {

namespace {

std::string qualified(std::string_view section, std::string_view key) {
    return std::string(section) + "." + std::string(key);
}

double to_double(std::string_view section, std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw ConfigError("config: '" + qualified(section, key) + "' expects a number, got '" + std::string(text) + "'");
    }
    return v;
}

template <typename Int>
Int to_int(std::string_view section, std::string_view key, std::string_view text) {
    Int v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError("config: '" + qualified(section, key) + "' expects a non-negative integer, got '" +
                          std::string(text) + "'");
    }
    return v;
}

bool to_bool(std::string_view section, std::string_view key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ConfigError("config: '" + qualified(section, key) + "' expects true|false, got '" + std::string(text) + "'");
}

void apply_platform(PlatformConfig& p, std::string_view key, std::string_view v) {
    constexpr std::string_view s = "platform";
    if (key == "vehicles") p.vehicles = to_int<std::uint32_t>(s, key, v);
    else if (key == "obu_speed") p.obu_speed = to_double(s, key, v);
    else if (key == "rsu_count") p.rsu_count = to_int<std::uint32_t>(s, key, v);
    else if (key == "rsu_speed") p.rsu_speed = to_double(s, key, v);
    else if (key == "rsu_cores") p.rsu_cores = to_int<std::uint32_t>(s, key, v);
    else if (key == "cloud_speed") p.cloud_speed = to_double(s, key, v);
    else if (key == "cloud_cores") p.cloud_cores = to_int<std::uint32_t>(s, key, v);
    else if (key == "elastic") p.elastic = to_bool(s, key, v);
    else if (key == "latency_rsu") p.latency_rsu = to_double(s, key, v);
    else if (key == "latency_cloud") p.latency_cloud = to_double(s, key, v);
    else if (key == "srp") p.srp = to_double(s, key, v);
    else if (key == "k_cloud") p.k_cloud = to_double(s, key, v);
    else throw ConfigError("config: unknown key '" + qualified(s, key) + "'");
}

void apply_workload(RunConfig& c, std::string_view key, std::string_view v) {
    constexpr std::string_view s = "workload";
    if (key == "name") c.workload = std::string(v);
    else if (key == "file") c.workload_file = v.empty() ? std::nullopt : std::optional<std::filesystem::path>(v);
    else if (key == "approx_share") c.gen.approx_share = to_double(s, key, v);
    else if (key == "arrival_window") c.gen.arrival_window = to_double(s, key, v);
    else if (key == "size_min") c.gen.size_min = to_double(s, key, v);
    else if (key == "size_max") c.gen.size_max = to_double(s, key, v);
    else if (key == "reference_speed") c.gen.reference_speed = to_double(s, key, v);
    else throw ConfigError("config: unknown key '" + qualified(s, key) + "'");
}

void apply_sim(RunConfig& c, std::string_view key, std::string_view v) {
    constexpr std::string_view s = "sim";
    if (key == "approx_fraction") {
        c.sim.approx_fraction = to_double(s, key, v);
    } else if (key == "approx_accuracy") {
        c.metrics.approx_accuracy = to_double(s, key, v);
    } else if (key == "privacy_weighting") {
        if (v == "count") c.metrics.privacy_weighting = PrivacyWeighting::Count;
        else if (v == "work") c.metrics.privacy_weighting = PrivacyWeighting::Work;
        else throw ConfigError("config: 'sim.privacy_weighting' expects count|work");
    } else if (key == "nmd_scope") {
        if (v == "all") c.metrics.nmd_scope = NmdScope::All;
        else if (v == "exclude_soft") c.metrics.nmd_scope = NmdScope::ExcludeSoft;
        else throw ConfigError("config: 'sim.nmd_scope' expects all|exclude_soft");
    } else if (key == "trace") {
        c.sim.record_events = to_bool(s, key, v);
    } else {
        throw ConfigError("config: unknown key '" + qualified(s, key) + "'");
    }
}

void apply_run(RunConfig& c, std::string_view key, std::string_view v) {
    constexpr std::string_view s = "run";
    if (key == "policy") {
        const auto k = parse_policy(v);
        if (!k) throw ConfigError("config: unknown policy '" + std::string(v) + "' (valid: pvec, random, lsbts)");
        c.policy = *k;
    } else if (key == "seed") {
        c.seed = to_int<std::uint64_t>(s, key, v);
    } else if (key == "out") {
        c.out = v.empty() ? std::nullopt : std::optional<std::filesystem::path>(v);
    } else {
        throw ConfigError("config: unknown key '" + qualified(s, key) + "'");
    }
}

}  // namespace

void apply_setting(RunConfig& c, std::string_view section, std::string_view key, std::string_view value) {
    if (section == "platform") apply_platform(c.platform, key, value);
    else if (section == "workload") apply_workload(c, key, value);
    else if (section == "sim") apply_sim(c, key, value);
    else if (section == "lsbts" && key == "bc_overhead") c.sim.lsbts.bc_overhead = to_double(section, key, value);
    else if (section == "run") apply_run(c, key, value);
    else if (section == "lsbts") throw ConfigError("config: unknown key '" + qualified(section, key) + "'");
    else throw ConfigError("config: unknown section '" + std::string(section) + "'");
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    boost::property_tree::ptree tree;
    std::istringstream in{std::string(text)};
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ParseError("config parse error at line " + std::to_string(e.line()) + ": " + e.message());
    }
    for (const auto& [section, entries] : tree) {
        if (entries.empty() && !entries.data().empty()) {
            throw ConfigError("config: key '" + section + "' must appear inside a section");
        }
        for (const auto& [key, node] : entries) apply_setting(base, section, key, node.data());
    }
    return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

void validate(const RunConfig& c) {
    (void)build_platform(c.platform);
    if (!c.workload_file) (void)builtin_counts(c.workload);
    if (!(c.gen.approx_share >= 0.0 && c.gen.approx_share <= 1.0))
        throw ConfigError("config: 'workload.approx_share' must lie in [0, 1]");
    if (!(c.gen.arrival_window >= 0.0)) throw ConfigError("config: 'workload.arrival_window' must be >= 0");
    if (!(c.gen.size_min > 0.0) || c.gen.size_max < c.gen.size_min)
        throw ConfigError("config: workload sizes must satisfy 0 < size_min <= size_max");
    if (!(c.gen.reference_speed > 0.0)) throw ConfigError("config: 'workload.reference_speed' must be > 0");
    if (!(c.sim.approx_fraction > 0.0 && c.sim.approx_fraction <= 1.0))
        throw ConfigError("config: 'sim.approx_fraction' must lie in (0, 1]");
    if (!(c.metrics.approx_accuracy >= 0.0 && c.metrics.approx_accuracy <= 1.0))
        throw ConfigError("config: 'sim.approx_accuracy' must lie in [0, 1]");
    if (!(c.sim.lsbts.bc_overhead >= 0.0)) throw ConfigError("config: 'lsbts.bc_overhead' must be >= 0");
}

nlohmann::json to_json(const RunConfig& c) {
    const auto& p = c.platform;
    return {
        {"platform",
         {{"vehicles", p.vehicles},
          {"obu_speed", p.obu_speed},
          {"rsu_count", p.rsu_count},
          {"rsu_speed", p.rsu_speed},
          {"rsu_cores", p.rsu_cores},
          {"cloud_speed", p.cloud_speed},
          {"cloud_cores", p.cloud_cores},
          {"elastic", p.elastic},
          {"latency_rsu", p.latency_rsu},
          {"latency_cloud", p.latency_cloud},
          {"srp", p.srp},
          {"k_cloud", p.k_cloud}}},
        {"workload",
         {{"name", c.workload},
          {"file", c.workload_file ? c.workload_file->string() : std::string()},
          {"approx_share", c.gen.approx_share},
          {"arrival_window", c.gen.arrival_window},
          {"size_min", c.gen.size_min},
          {"size_max", c.gen.size_max},
          {"reference_speed", c.gen.reference_speed}}},
        {"sim",
         {{"approx_fraction", c.sim.approx_fraction},
          {"approx_accuracy", c.metrics.approx_accuracy},
          {"privacy_weighting", to_string(c.metrics.privacy_weighting)},
          {"nmd_scope", to_string(c.metrics.nmd_scope)},
          {"trace", c.sim.record_events}}},
        {"lsbts", {{"bc_overhead", c.sim.lsbts.bc_overhead}}},
        {"run", {{"policy", to_string(c.policy)}, {"seed", c.seed}}},
    };
}

WorkloadSpec resolve_workload(const RunConfig& c, std::uint64_t seed) {
    if (c.workload_file) return load_workload(*c.workload_file);
    GenParams params = c.gen;
    params.vehicles = c.platform.vehicles;
    return builtin_workload(c.workload, params, seed);
}

}  // namespace vecsim
