#include "vecsim/policy.hpp"

#include <memory>

namespace vecsim {

NodeId least_busy_node(const Platform& platform, const CapacityLedger& ledger, Layer layer, VehicleId owner) {
    if (layer == Layer::UserLayer) return platform.obu_of(owner).node_id;
    const auto pool = platform.nodes_in(layer);
    NodeId best = pool.front();
    Seconds best_free = ledger.earliest_free(best);
    for (NodeId id : pool.subspan(1)) {
        const Seconds f = ledger.earliest_free(id);
        if (f < best_free) {
            best = id;
            best_free = f;
        }
    }
    return best;
}

Assignment pvec_assign(const TaskSpec& task, const Platform& platform, const CapacityLedger& ledger, Seconds t) {
    Layer layer = Layer::Cloud;
    switch (task.privacy) {
        case PrivacyClass::Private:
            layer = Layer::UserLayer;
            break;
        case PrivacyClass::Restricted:
            switch (task.rt_class) {
                case RealTimeClass::Hard: layer = Layer::UserLayer; break;
                case RealTimeClass::Firm:
                    layer = ledger.available(Layer::UserLayer, task.owner_vehicle, t) ? Layer::UserLayer
                                                                                     : Layer::Cloud;
                    break;
                case RealTimeClass::Soft: layer = Layer::Cloud; break;
            }
            break;
        case PrivacyClass::Public:
            layer = task.rt_class == RealTimeClass::Soft ? Layer::Cloud : Layer::RSU;
            break;
    }
    return {task.task_id, layer, least_busy_node(platform, ledger, layer, task.owner_vehicle),
            mode_for(task.accuracy)};
}

Assignment random_assign(const TaskSpec& task, const Platform& platform, Rng& rng) {
    const Layer layer = kLayers[rng.below(kLayers.size())];
    NodeId node = 0;
    if (layer == Layer::UserLayer) {
        node = platform.obu_of(task.owner_vehicle).node_id;
    } else {
        const auto pool = platform.nodes_in(layer);
        node = pool[rng.below(pool.size())];
    }
    return {task.task_id, layer, node, ExecutionMode::AccurateProcessing};
}

Assignment lsbts_assign(const TaskSpec& task, const Platform& platform, const CapacityLedger& ledger, Seconds t,
                        const LsbtsParams& params) {
    const Seconds overhead = lsbts_overhead(task, params);
    const auto meets_deadline = [&](const NodeSpec& n) {
        const Seconds start = std::max(t, ledger.earliest_free(n.node_id));
        return start + task.size / n.speed + 2.0 * n.link_latency + overhead <= task.deadline;
    };
    const auto accurate = [&](const NodeSpec& n) {
        return Assignment{task.task_id, n.layer, n.node_id, ExecutionMode::AccurateProcessing};
    };

    if (const auto& obu = platform.obu_of(task.owner_vehicle); meets_deadline(obu)) return accurate(obu);
    for (Layer layer : {Layer::RSU, Layer::Cloud}) {
        for (NodeId id : platform.nodes_in(layer)) {
            if (meets_deadline(platform.node(id))) return accurate(platform.node(id));
        }
    }
    return accurate(platform.node(least_busy_node(platform, ledger, Layer::Cloud, task.owner_vehicle)));
}

Assigner make_assigner(PolicyKind kind, const Platform& platform, std::uint64_t seed, const LsbtsParams& lsbts) {
    switch (kind) {
        case PolicyKind::PVEC:
            return [&platform](const TaskSpec& task, const CapacityLedger& ledger, Seconds t) {
                return pvec_assign(task, platform, ledger, t);
            };
        case PolicyKind::Random: {
            auto rng = std::make_shared<Rng>(seed);
            return [&platform, rng](const TaskSpec& task, const CapacityLedger&, Seconds) {
                return random_assign(task, platform, *rng);
            };
        }
        case PolicyKind::LSBTS:
            return [&platform, lsbts](const TaskSpec& task, const CapacityLedger& ledger, Seconds t) {
                return lsbts_assign(task, platform, ledger, t, lsbts);
            };
    }
    return {};
}

}  // namespace vecsim
