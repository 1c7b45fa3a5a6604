#include "vecsim/types.hpp"

namespace vecsim {

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> parse_enum(std::string_view s, const std::array<Enum, N>& values) noexcept {
    for (Enum v : values) {
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

}  // namespace

std::optional<PrivacyClass> parse_privacy(std::string_view s) noexcept {
    return parse_enum(s, kPrivacyClasses);
}

std::optional<RealTimeClass> parse_rt_class(std::string_view s) noexcept {
    return parse_enum(s, kRealTimeClasses);
}

std::optional<AccuracyClass> parse_accuracy(std::string_view s) noexcept {
    return parse_enum(s, kAccuracyClasses);
}

std::optional<Layer> parse_layer(std::string_view s) noexcept { return parse_enum(s, kLayers); }

std::optional<ExecutionMode> parse_mode(std::string_view s) noexcept {
    return parse_enum(s, std::array{ExecutionMode::AccurateProcessing,
                                    ExecutionMode::ApproximateProcessing});
}

std::optional<PolicyKind> parse_policy(std::string_view s) noexcept {
    return parse_enum(s, kPolicyKinds);
}

}  // namespace vecsim
