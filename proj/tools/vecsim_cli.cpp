// vecsim: command-line frontend for the vehicular edge placement simulator.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime error.

#include <charconv>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vecsim/config.hpp"
#include "vecsim/error.hpp"
#include "vecsim/experiment.hpp"
#include "vecsim/oracle.hpp"

namespace {

using namespace vecsim;

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct CommonFlags {
    std::string config;
    std::string workload;
    std::string workload_file;
    std::vector<std::string> policies;
    std::optional<std::uint64_t> seed;
    std::string seeds;
    std::string out;
    std::string format{"json"};
    bool trace{false};
};

void add_common(CLI::App* cmd, CommonFlags& f, bool multi_policy) {
    cmd->add_option("--config", f.config, "INI-style run config");
    cmd->add_option("--workload", f.workload, "builtin workload: healthcare | e-transport | e-business");
    cmd->add_option("--workload-file", f.workload_file, "workload JSON file (overrides --workload)");
    if (multi_policy) {
        cmd->add_option("--policy", f.policies, "policies to compare (pvec,random,lsbts)")->delimiter(',');
    } else {
        cmd->add_option("--policy", f.policies, "pvec | random | lsbts")->expected(1);
    }
    cmd->add_option("--seed", f.seed, "run seed");
    cmd->add_option("--out", f.out, "output file (default: stdout)");
}

RunConfig resolve_config(const CommonFlags& f) {
    RunConfig c = f.config.empty() ? RunConfig{} : load_config(f.config);
    if (!f.workload.empty()) {
        c.workload = f.workload;
        c.workload_file.reset();
    }
    if (!f.workload_file.empty()) c.workload_file = f.workload_file;
    if (f.policies.size() == 1) apply_setting(c, "run", "policy", f.policies.front());
    if (f.seed) c.seed = *f.seed;
    if (!f.out.empty()) c.out = f.out;
    if (f.trace) c.sim.record_events = true;
    validate(c);
    return c;
}

std::vector<PolicyKind> resolve_policies(const CommonFlags& f) {
    if (f.policies.empty()) return {kPolicyKinds.begin(), kPolicyKinds.end()};
    std::vector<PolicyKind> out;
    for (const auto& p : f.policies) {
        const auto k = parse_policy(p);
        if (!k) throw ConfigError("unknown policy '" + p + "' (valid: pvec, random, lsbts)");
        out.push_back(*k);
    }
    return out;
}

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConfigError("invalid seed '" + std::string(s) + "'");
    }
    return v;
}

/// "1,2,5" or "1-10" (inclusive) or a mix: "1-3,7".
std::vector<std::uint64_t> parse_seeds(const std::string& text, std::uint64_t fallback) {
    if (text.empty()) return {fallback};
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ConfigError("empty entry in --seeds");
        if (const auto dash = item.find('-'); dash != std::string::npos) {
            const auto lo = parse_u64(item.substr(0, dash));
            const auto hi = parse_u64(item.substr(dash + 1));
            if (hi < lo) throw ConfigError("descending seed range '" + item + "'");
            for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
        } else {
            seeds.push_back(parse_u64(item));
        }
    }
    return seeds;
}

void emit(const std::optional<std::filesystem::path>& out, const std::string& text) {
    if (out) {
        write_file_atomic(*out, text);
    } else {
        std::cout << text;
    }
}

std::string render(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

void check_format(const std::string& format) {
    if (format != "json" && format != "csv") throw ConfigError("--format expects csv|json");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Privacy- and latency-aware task placement simulator for vehicular edge platforms"};
    app.require_subcommand(1);

    CommonFlags run_f, cmp_f, sweep_f, oracle_f, gen_f;

    auto* run_cmd = app.add_subcommand("run", "simulate one policy on one workload and write a report");
    add_common(run_cmd, run_f, false);
    run_cmd->add_flag("--trace", run_f.trace, "include the event log in the report");

    auto* cmp_cmd = app.add_subcommand("compare", "run policies x seeds and tabulate QoS, QoR and cost");
    add_common(cmp_cmd, cmp_f, true);
    cmp_cmd->add_option("--seeds", cmp_f.seeds, "seed list, e.g. 1-10 or 1,2,3");
    cmp_cmd->add_option("--format", cmp_f.format, "csv | json");

    std::string sweep_param;
    std::vector<std::string> sweep_values;
    auto* sweep_cmd = app.add_subcommand("sweep", "repeat compare over values of one parameter");
    add_common(sweep_cmd, sweep_f, true);
    sweep_cmd->add_option("--seeds", sweep_f.seeds, "seed list, e.g. 1-10 or 1,2,3");
    sweep_cmd->add_option("--format", sweep_f.format, "csv | json");
    sweep_cmd->add_option("--param", sweep_param, "k_cloud | approx_fraction | rsu_count | latency_cloud | srp")
        ->required();
    sweep_cmd->add_option("--values", sweep_values, "comma-separated values")->delimiter(',');

    bool honor_privacy = true;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive best QoS for a workload of at most 12 tasks");
    add_common(oracle_cmd, oracle_f, false);
    oracle_cmd->add_option("--honor-privacy", honor_privacy, "restrict private/restricted placements (true|false)");

    auto* gen_cmd = app.add_subcommand("gen", "write a builtin workload to a file");
    add_common(gen_cmd, gen_f, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return kExitConfig;
    }

    try {
        if (*run_cmd) {
            const RunConfig c = resolve_config(run_f);
            const RunResult r = execute(c);
            emit(c.out, render(run_report(c, r)));
        } else if (*cmp_cmd) {
            check_format(cmp_f.format);
            const RunConfig c = resolve_config(cmp_f);
            const auto cmp = compare(c, resolve_policies(cmp_f), parse_seeds(cmp_f.seeds, c.seed));
            emit(c.out, cmp_f.format == "csv" ? to_csv(cmp) : render(to_json(cmp, c)));
        } else if (*sweep_cmd) {
            check_format(sweep_f.format);
            const RunConfig c = resolve_config(sweep_f);
            const auto s = sweep(c, sweep_param, sweep_values, resolve_policies(sweep_f),
                                 parse_seeds(sweep_f.seeds, c.seed));
            emit(c.out, sweep_f.format == "csv" ? to_csv(s) : render(to_json(s, c)));
        } else if (*oracle_cmd) {
            const RunConfig c = resolve_config(oracle_f);
            const Platform platform = build_platform(c.platform);
            const WorkloadSpec w = resolve_workload(c, c.seed);
            OracleOptions opts;
            opts.honor_privacy = honor_privacy;
            opts.sim = c.sim;
            opts.metrics = c.metrics;
            const auto best = brute_force_best(platform, w, opts);

            nlohmann::json assignment = nlohmann::json::array();
            for (const auto& a : best.best_assignment) {
                assignment.push_back({{"id", a.task_id},
                                      {"layer", to_string(a.layer)},
                                      {"node", a.node_id},
                                      {"mode", to_string(a.mode)}});
            }
            nlohmann::json policies;
            for (PolicyKind k : kPolicyKinds) {
                policies[std::string(to_string(k))] = summarize(run(platform, w, k, c.seed, c.sim), platform, c.metrics).qos;
            }
            emit(c.out, render({{"schema", "vecsim.oracle/1"},
                                {"config", to_json(c)},
                                {"workload", w.name()},
                                {"honor_privacy", honor_privacy},
                                {"best_qos", best.best_qos},
                                {"evaluated", best.evaluated},
                                {"best_assignment", std::move(assignment)},
                                {"policy_qos", std::move(policies)}}));
        } else if (*gen_cmd) {
            const RunConfig c = resolve_config(gen_f);
            emit(c.out, serialize_workload(resolve_workload(c, c.seed)));
        }
    } catch (const ConfigError& e) {
        std::cerr << "vecsim: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "vecsim: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
