#include "vecsim/infrastructure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vecsim/error.hpp"

namespace vecsim {

Platform::Platform(std::vector<NodeSpec> nodes, double srp, double k_cloud)
    : nodes_(std::move(nodes)), srp_(srp), k_cloud_(k_cloud) {
    if (!(srp_ >= 0.0) || !std::isfinite(srp_)) throw ValidationError("platform: srp must be >= 0");
    if (!(k_cloud_ >= 0.0 && k_cloud_ <= 1.0)) throw ValidationError("platform: k_cloud must lie in [0, 1]");

    std::vector<std::optional<NodeId>> obu_slots;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const auto& n = nodes_[i];
        const std::string where = "node " + std::to_string(n.node_id);
        if (n.node_id != i) throw ValidationError(where + ": ids must be 0..n-1 in order");
        if (!(n.speed > 0.0) || !std::isfinite(n.speed)) throw ValidationError(where + ": speed must be > 0");
        if (n.cores < 1) throw ValidationError(where + ": cores must be >= 1");
        if (!(n.link_latency >= 0.0) || !std::isfinite(n.link_latency))
            throw ValidationError(where + ": link_latency must be >= 0");
        if ((n.layer == Layer::UserLayer) != n.vehicle.has_value())
            throw ValidationError(where + ": vehicle must be set iff the node is on the user layer");
        if (n.elastic && n.layer != Layer::Cloud) throw ValidationError(where + ": only cloud nodes may be elastic");

        by_layer_[index_of(n.layer)].push_back(n.node_id);
        if (n.vehicle) {
            if (*n.vehicle >= obu_slots.size()) obu_slots.resize(*n.vehicle + 1);
            if (obu_slots[*n.vehicle]) throw ValidationError(where + ": vehicle already has an OBU");
            obu_slots[*n.vehicle] = n.node_id;
        }
    }
    for (std::size_t v = 0; v < obu_slots.size(); ++v) {
        if (!obu_slots[v]) throw ValidationError("platform: vehicle " + std::to_string(v) + " has no OBU");
        obu_of_.push_back(*obu_slots[v]);
    }
    if (obu_of_.empty()) throw ValidationError("platform: no user layer (zero vehicles)");
    if (nodes_in(Layer::RSU).empty()) throw ValidationError("platform: no RSU nodes");
    if (nodes_in(Layer::Cloud).empty()) throw ValidationError("platform: no cloud nodes");
}

Platform build_platform(const PlatformConfig& c) {
    const auto positive = [](double v, const char* field) {
        if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string("platform: ") + field + " must be > 0");
    };
    const auto non_negative = [](double v, const char* field) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError(std::string("platform: ") + field + " must be >= 0");
    };
    positive(c.vehicles, "vehicles");
    positive(c.obu_speed, "obu_speed");
    positive(c.rsu_count, "rsu_count");
    positive(c.rsu_speed, "rsu_speed");
    positive(c.rsu_cores, "rsu_cores");
    positive(c.cloud_speed, "cloud_speed");
    positive(c.cloud_cores, "cloud_cores");
    non_negative(c.latency_ul, "latency_ul");
    non_negative(c.latency_rsu, "latency_rsu");
    non_negative(c.latency_cloud, "latency_cloud");
    non_negative(c.srp, "srp");
    if (!(c.k_cloud >= 0.0 && c.k_cloud <= 1.0)) throw ConfigError("platform: k_cloud must lie in [0, 1]");

    std::vector<NodeSpec> nodes;
    nodes.reserve(c.vehicles + c.rsu_count + 1);
    for (VehicleId v = 0; v < c.vehicles; ++v) {
        nodes.push_back({static_cast<NodeId>(nodes.size()), Layer::UserLayer, c.obu_speed, 1, c.latency_ul, v, false});
    }
    for (std::uint32_t r = 0; r < c.rsu_count; ++r) {
        nodes.push_back({static_cast<NodeId>(nodes.size()), Layer::RSU, c.rsu_speed, c.rsu_cores, c.latency_rsu,
                         std::nullopt, false});
    }
    nodes.push_back({static_cast<NodeId>(nodes.size()), Layer::Cloud, c.cloud_speed, c.cloud_cores,
                     c.latency_cloud, std::nullopt, c.elastic});
    return Platform(std::move(nodes), c.srp, c.k_cloud);
}

// ─────────────────────────────────────────────
// CapacityLedger
// ─────────────────────────────────────────────

CapacityLedger::CapacityLedger(const Platform& platform) : platform_(&platform) {
    busy_until_.reserve(platform.nodes().size());
    for (const auto& n : platform.nodes()) {
        busy_until_.emplace_back(n.elastic ? 0 : n.cores, 0.0);
    }
}

Seconds CapacityLedger::earliest_free(NodeId node) const {
    const auto& cores = busy_until_.at(node);
    if (platform_->node(node).elastic || cores.empty()) return 0.0;
    return *std::min_element(cores.begin(), cores.end());
}

bool CapacityLedger::available(Layer layer, std::optional<VehicleId> vehicle, Seconds t) const {
    if (layer == Layer::UserLayer) {
        if (!vehicle || *vehicle >= platform_->vehicle_count()) return false;
        return earliest_free(platform_->obu_of(*vehicle).node_id) <= t;
    }
    return std::any_of(platform_->nodes_in(layer).begin(), platform_->nodes_in(layer).end(),
                       [&](NodeId id) { return earliest_free(id) <= t; });
}

const Reservation& CapacityLedger::admit(const NodeSpec& node, const TaskSpec& task, Seconds start,
                                         Seconds duration, double work) {
    auto& cores = busy_until_.at(node.node_id);
    auto it = std::find_if(cores.begin(), cores.end(), [&](Seconds busy) { return busy <= start; });
    if (it == cores.end()) {
        if (!node.elastic) {
            throw AdmissionError("no idle core on node " + std::to_string(node.node_id) + " at t=" +
                                 std::to_string(start) + " for task " + std::to_string(task.task_id));
        }
        cores.push_back(0.0);
        it = std::prev(cores.end());
    }
    *it = start + duration;
    reservations_.push_back({node.node_id, static_cast<std::uint32_t>(it - cores.begin()), task.task_id, start,
                             start + duration, work});
    return reservations_.back();
}

double CapacityLedger::in_flight_work(Layer layer, Seconds t) const {
    double total = 0.0;
    for (const auto& r : reservations_) {
        if (platform_->node(r.node).layer == layer && r.start <= t && t < r.end) total += r.work;
    }
    return total;
}

}  // namespace vecsim
