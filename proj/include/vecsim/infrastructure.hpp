/**
 * @file infrastructure.hpp
 * @brief Tiered platform model and the per-core capacity ledger.
 *
 * Three layers: one single-core OBU per vehicle (the user layer), a shared
 * pool of roadside units, and a cloud pool priced per rented hour.
 */

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vecsim/types.hpp"
#include "vecsim/workload.hpp"

namespace vecsim {

struct NodeSpec {
    NodeId node_id{0};
    Layer layer{Layer::Cloud};
    double speed{1.0};  ///< work-units per second
    std::uint32_t cores{1};
    Seconds link_latency{0.0};  ///< one-way
    std::optional<VehicleId> vehicle;  ///< set iff layer == UserLayer
    bool elastic{false};  ///< unbounded cores (cloud only)

    bool operator==(const NodeSpec&) const = default;
};

/// Inputs of build_platform(). Field names match the `[platform]` config keys.
struct PlatformConfig {
    std::uint32_t vehicles{100};
    double obu_speed{25.0};
    std::uint32_t rsu_count{4};
    double rsu_speed{100.0};
    std::uint32_t rsu_cores{4};
    double cloud_speed{200.0};
    std::uint32_t cloud_cores{16};
    bool elastic{false};
    Seconds latency_ul{0.0};
    Seconds latency_rsu{0.05};
    Seconds latency_cloud{0.5};
    double srp{0.959};  ///< $/h for a rented cloud server
    double k_cloud{1.0};

    bool operator==(const PlatformConfig&) const = default;
};

/**
 * Immutable node inventory.
 *
 * Nodes are stored by id; ids must be 0..n-1. Each vehicle owns exactly one
 * OBU. The constructor throws ValidationError when an invariant fails.
 */
class Platform {
public:
    Platform(std::vector<NodeSpec> nodes, double srp, double k_cloud);

    [[nodiscard]] const std::vector<NodeSpec>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const NodeSpec& node(NodeId id) const { return nodes_.at(id); }
    [[nodiscard]] std::span<const NodeId> nodes_in(Layer layer) const noexcept {
        return by_layer_[index_of(layer)];
    }
    [[nodiscard]] std::uint32_t vehicle_count() const noexcept {
        return static_cast<std::uint32_t>(obu_of_.size());
    }
    /// The OBU of `vehicle`. Throws std::out_of_range for unknown vehicles.
    [[nodiscard]] const NodeSpec& obu_of(VehicleId vehicle) const { return nodes_.at(obu_of_.at(vehicle)); }

    [[nodiscard]] double srp() const noexcept { return srp_; }
    [[nodiscard]] double k_cloud() const noexcept { return k_cloud_; }

private:
    std::vector<NodeSpec> nodes_;
    std::array<std::vector<NodeId>, 3> by_layer_;
    std::vector<NodeId> obu_of_;
    double srp_;
    double k_cloud_;
};

/// Throws ConfigError naming the offending field.
[[nodiscard]] Platform build_platform(const PlatformConfig& config);

/// A committed slot of compute on one core.
struct Reservation {
    NodeId node{0};
    std::uint32_t core{0};
    TaskId task{0};
    Seconds start{0.0};
    Seconds end{0.0};
    double work{0.0};
};

/**
 * Per-core busy-until bookkeeping for one simulation run.
 *
 * Work is admitted only onto a core that is idle at the reservation start,
 * so no node ever runs more tasks at once than it has cores. Busy-until
 * times include work that is queued but not yet started.
 */
class CapacityLedger {
public:
    explicit CapacityLedger(const Platform& platform);

    /// True iff some eligible node of `layer` has a core idle at `t`.
    /// For the user layer only the OBU of `vehicle` is eligible.
    [[nodiscard]] bool available(Layer layer, std::optional<VehicleId> vehicle, Seconds t) const;

    /// Earliest time at which a core of `node` is idle. Elastic nodes are always idle.
    [[nodiscard]] Seconds earliest_free(NodeId node) const;

    [[nodiscard]] std::span<const Seconds> busy_until(NodeId node) const { return busy_until_.at(node); }

    /// Reserves [start, start + duration) on the lowest-numbered idle core of `node`.
    /// Throws AdmissionError if no core is idle at `start`.
    const Reservation& admit(const NodeSpec& node, const TaskSpec& task, Seconds start, Seconds duration,
                             double work);

    /// Effective work of reservations on `layer` whose interval contains `t`.
    [[nodiscard]] double in_flight_work(Layer layer, Seconds t) const;

    [[nodiscard]] const std::vector<Reservation>& reservations() const noexcept { return reservations_; }

private:
    const Platform* platform_;
    std::vector<std::vector<Seconds>> busy_until_;
    std::vector<Reservation> reservations_;
};

}  // namespace vecsim
