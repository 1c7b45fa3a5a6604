// Expected PVEC targets, one row per (privacy, rt, accuracy, owner OBU idle).
// Rows where the OBU state does not matter are listed once with owner_idle = true.

#pragma once

#include <array>

#include "vecsim/types.hpp"

namespace vecsim::testing {

struct TableRow {
    PrivacyClass privacy;
    RealTimeClass rt;
    AccuracyClass accuracy;
    bool owner_idle;
    Layer layer;
    ExecutionMode mode;
};

namespace dt {
inline constexpr auto P = PrivacyClass::Private;
inline constexpr auto R = PrivacyClass::Restricted;
inline constexpr auto U = PrivacyClass::Public;
inline constexpr auto H = RealTimeClass::Hard;
inline constexpr auto F = RealTimeClass::Firm;
inline constexpr auto S = RealTimeClass::Soft;
inline constexpr auto ACC = AccuracyClass::Accurate;
inline constexpr auto APX = AccuracyClass::Approximate;
inline constexpr auto UL = Layer::UserLayer;
inline constexpr auto RSU = Layer::RSU;
inline constexpr auto C = Layer::Cloud;
inline constexpr auto ACP = ExecutionMode::AccurateProcessing;
inline constexpr auto AXP = ExecutionMode::ApproximateProcessing;
}  // namespace dt

inline constexpr std::array<TableRow, 20> kDecisionTable{{
    {dt::P, dt::H, dt::ACC, true, dt::UL, dt::ACP},
    {dt::P, dt::H, dt::APX, true, dt::UL, dt::AXP},
    {dt::P, dt::F, dt::ACC, true, dt::UL, dt::ACP},
    {dt::P, dt::F, dt::APX, true, dt::UL, dt::AXP},
    {dt::P, dt::S, dt::ACC, true, dt::UL, dt::ACP},
    {dt::P, dt::S, dt::APX, true, dt::UL, dt::AXP},
    {dt::R, dt::H, dt::ACC, true, dt::UL, dt::ACP},
    {dt::R, dt::H, dt::APX, true, dt::UL, dt::AXP},
    {dt::R, dt::F, dt::ACC, true, dt::UL, dt::ACP},
    {dt::R, dt::F, dt::ACC, false, dt::C, dt::ACP},
    {dt::R, dt::F, dt::APX, true, dt::UL, dt::AXP},
    {dt::R, dt::F, dt::APX, false, dt::C, dt::AXP},
    {dt::R, dt::S, dt::ACC, true, dt::C, dt::ACP},
    {dt::R, dt::S, dt::APX, true, dt::C, dt::AXP},
    {dt::U, dt::H, dt::ACC, true, dt::RSU, dt::ACP},
    {dt::U, dt::H, dt::APX, true, dt::RSU, dt::AXP},
    {dt::U, dt::F, dt::ACC, true, dt::RSU, dt::ACP},
    {dt::U, dt::F, dt::APX, true, dt::RSU, dt::AXP},
    {dt::U, dt::S, dt::ACC, true, dt::C, dt::ACP},
    {dt::U, dt::S, dt::APX, true, dt::C, dt::AXP},
}};

}  // namespace vecsim::testing
