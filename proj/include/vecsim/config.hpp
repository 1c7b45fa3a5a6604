/**
 * @file config.hpp
 * @brief Run configuration: INI-style file with sections, overridable by flags.
 *
 *     [platform]  vehicles obu_speed rsu_count rsu_speed rsu_cores cloud_speed
 *                 cloud_cores elastic latency_rsu latency_cloud srp k_cloud
 *     [workload]  name file approx_share arrival_window size_min size_max reference_speed
 *     [sim]       approx_fraction approx_accuracy privacy_weighting nmd_scope trace
 *     [lsbts]     bc_overhead
 *     [run]       policy seed out
 *
 * Unknown sections or keys are rejected.
 */

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "vecsim/infrastructure.hpp"
#include "vecsim/metrics.hpp"
#include "vecsim/simengine.hpp"
#include "vecsim/workload.hpp"

namespace vecsim {

struct RunConfig {
    PlatformConfig platform{};

    std::string workload{"healthcare"};
    std::optional<std::filesystem::path> workload_file;
    GenParams gen{};  ///< shape knobs; counts come from the builtin table, owners from platform.vehicles

    PolicyKind policy{PolicyKind::PVEC};
    std::uint64_t seed{42};
    SimOptions sim{};
    MetricsConfig metrics{};
    std::optional<std::filesystem::path> out;
};

/// Sets one `section.key` from its text form. Throws ConfigError on unknown keys or bad values.
void apply_setting(RunConfig& config, std::string_view section, std::string_view key, std::string_view value);

[[nodiscard]] RunConfig parse_config(std::string_view text, RunConfig base = {});
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Throws ConfigError when a value is outside its documented range.
void validate(const RunConfig& config);

/// Fully resolved echo for reports.
[[nodiscard]] nlohmann::json to_json(const RunConfig& config);

/// The workload file when one is set, otherwise the builtin workload generated with `seed`.
[[nodiscard]] WorkloadSpec resolve_workload(const RunConfig& config, std::uint64_t seed);

}  // namespace vecsim
