/**
 * @file types.hpp
 * @brief Shared vocabulary for the vehicular edge simulator.
 *
 * Task classes, platform layers, execution modes and policy identifiers,
 * plus their canonical lowercase spellings used in files and on the
 * command line.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace vecsim {

using TaskId = std::uint64_t;
using NodeId = std::uint32_t;
using VehicleId = std::uint32_t;

/// Seconds of simulated time.
using Seconds = double;

// ─────────────────────────────────────────────
// Task classes
// ─────────────────────────────────────────────

enum class PrivacyClass : std::uint8_t { Public, Restricted, Private };
enum class RealTimeClass : std::uint8_t { Soft, Firm, Hard };
enum class AccuracyClass : std::uint8_t { Accurate, Approximate };

inline constexpr std::array kPrivacyClasses{PrivacyClass::Public, PrivacyClass::Restricted,
                                            PrivacyClass::Private};
inline constexpr std::array kRealTimeClasses{RealTimeClass::Soft, RealTimeClass::Firm,
                                             RealTimeClass::Hard};
inline constexpr std::array kAccuracyClasses{AccuracyClass::Accurate, AccuracyClass::Approximate};

// ─────────────────────────────────────────────
// Platform and placement
// ─────────────────────────────────────────────

enum class Layer : std::uint8_t { UserLayer, RSU, Cloud };
inline constexpr std::array kLayers{Layer::UserLayer, Layer::RSU, Layer::Cloud};

enum class ExecutionMode : std::uint8_t { AccurateProcessing, ApproximateProcessing };

enum class PolicyKind : std::uint8_t { PVEC, Random, LSBTS };
inline constexpr std::array kPolicyKinds{PolicyKind::PVEC, PolicyKind::Random, PolicyKind::LSBTS};

[[nodiscard]] constexpr std::size_t index_of(PrivacyClass c) noexcept { return static_cast<std::size_t>(c); }
[[nodiscard]] constexpr std::size_t index_of(RealTimeClass c) noexcept { return static_cast<std::size_t>(c); }
[[nodiscard]] constexpr std::size_t index_of(AccuracyClass c) noexcept { return static_cast<std::size_t>(c); }
[[nodiscard]] constexpr std::size_t index_of(Layer l) noexcept { return static_cast<std::size_t>(l); }

[[nodiscard]] constexpr std::string_view to_string(PrivacyClass c) noexcept {
    switch (c) {
        case PrivacyClass::Public:     return "public";
        case PrivacyClass::Restricted: return "restricted";
        case PrivacyClass::Private:    return "private";
    }
    return "unknown";
}

[[nodiscard]] constexpr std::string_view to_string(RealTimeClass c) noexcept {
    switch (c) {
        case RealTimeClass::Soft: return "soft";
        case RealTimeClass::Firm: return "firm";
        case RealTimeClass::Hard: return "hard";
    }
    return "unknown";
}

[[nodiscard]] constexpr std::string_view to_string(AccuracyClass c) noexcept {
    switch (c) {
        case AccuracyClass::Accurate:    return "accurate";
        case AccuracyClass::Approximate: return "approximate";
    }
    return "unknown";
}

[[nodiscard]] constexpr std::string_view to_string(Layer l) noexcept {
    switch (l) {
        case Layer::UserLayer: return "ul";
        case Layer::RSU:       return "rsu";
        case Layer::Cloud:     return "cloud";
    }
    return "unknown";
}

[[nodiscard]] constexpr std::string_view to_string(ExecutionMode m) noexcept {
    switch (m) {
        case ExecutionMode::AccurateProcessing:    return "acp";
        case ExecutionMode::ApproximateProcessing: return "axp";
    }
    return "unknown";
}

/// Identifier used by `--policy`.
[[nodiscard]] constexpr std::string_view to_string(PolicyKind k) noexcept {
    switch (k) {
        case PolicyKind::PVEC:   return "pvec";
        case PolicyKind::Random: return "random";
        case PolicyKind::LSBTS:  return "lsbts";
    }
    return "unknown";
}

/// Human-facing label for reports. The LSBTS entry is a stand-in, and says so.
[[nodiscard]] constexpr std::string_view display_name(PolicyKind k) noexcept {
    switch (k) {
        case PolicyKind::PVEC:   return "PVEC";
        case PolicyKind::Random: return "Random";
        case PolicyKind::LSBTS:  return "LSBTS-style";
    }
    return "unknown";
}

[[nodiscard]] std::optional<PrivacyClass> parse_privacy(std::string_view s) noexcept;
[[nodiscard]] std::optional<RealTimeClass> parse_rt_class(std::string_view s) noexcept;
[[nodiscard]] std::optional<AccuracyClass> parse_accuracy(std::string_view s) noexcept;
[[nodiscard]] std::optional<Layer> parse_layer(std::string_view s) noexcept;
[[nodiscard]] std::optional<ExecutionMode> parse_mode(std::string_view s) noexcept;
[[nodiscard]] std::optional<PolicyKind> parse_policy(std::string_view s) noexcept;

}  // namespace vecsim
