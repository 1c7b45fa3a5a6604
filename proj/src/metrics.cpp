#include "vecsim/metrics.hpp"

#include <cmath>

#include "vecsim/error.hpp"

namespace vecsim {

double cost(std::span<const TaskOutcome> outcomes, double srp) {
    if (!(srp >= 0.0)) throw MetricError("srp must be >= 0");
    double hours = 0.0;
    for (const auto& o : outcomes) {
        if (o.layer == Layer::Cloud) hours += o.processing_hours;
    }
    return hours * srp;
}

std::size_t nmd(std::span<const TaskOutcome> outcomes, NmdScope scope) {
    std::size_t missed = 0;
    for (const auto& o : outcomes) {
        if (scope == NmdScope::ExcludeSoft && o.rt_class == RealTimeClass::Soft) continue;
        if (!o.deadline_met) ++missed;
    }
    return missed;
}

double privacy(std::span<const TaskOutcome> outcomes, double k, PrivacyWeighting weighting) {
    if (outcomes.empty()) throw MetricError("privacy is undefined on an empty trace");
    if (!(k >= 0.0 && k <= 1.0)) throw MetricError("k_cloud must lie in [0, 1]");
    double preserved = 0.0;
    double total = 0.0;
    for (const auto& o : outcomes) {
        const double w = weighting == PrivacyWeighting::Work ? o.work : 1.0;
        total += w;
        if (o.privacy_override || o.layer == Layer::UserLayer) {
            preserved += w;
        } else if (o.layer == Layer::Cloud) {
            preserved += k * w;
        }
    }
    return preserved / total;
}

double qor(std::span<const TaskOutcome> outcomes, double approx_accuracy) {
    if (outcomes.empty()) throw MetricError("qor is undefined on an empty trace");
    double sum = 0.0;
    for (const auto& o : outcomes) {
        sum += o.mode == ExecutionMode::ApproximateProcessing ? approx_accuracy : 1.0;
    }
    return sum / static_cast<double>(outcomes.size());
}

double qos(double cost, std::size_t nmd, double privacy_fraction, double qor) {
    return 1.0 / (cost + 1.0) * (1.0 / (static_cast<double>(nmd) + 1.0)) * privacy_fraction * qor;
}

MetricsReport summarize(const TraceReport& trace, const Platform& platform, const MetricsConfig& config) {
    if (!(config.approx_accuracy >= 0.0 && config.approx_accuracy <= 1.0)) {
        throw MetricError("approx_accuracy must lie in [0, 1]");
    }
    const std::span<const TaskOutcome> outcomes(trace.outcomes);
    MetricsReport m;
    m.cost = cost(outcomes, platform.srp());
    m.nmd = nmd(outcomes, config.nmd_scope);
    m.privacy_fraction = privacy(outcomes, platform.k_cloud(), config.privacy_weighting);
    m.privacy_percent = 100.0 * m.privacy_fraction;
    m.qor = qor(outcomes, config.approx_accuracy);
    m.qos = qos(m.cost, m.nmd, m.privacy_fraction, m.qor);
    for (const auto& o : outcomes) {
        switch (o.layer) {
            case Layer::UserLayer: ++m.ep_ul; break;
            case Layer::RSU:       ++m.ep_rsu; break;
            case Layer::Cloud:     ++m.cp; break;
        }
    }
    return m;
}

nlohmann::json to_json(const MetricsReport& m) {
    return {
        {"cost", m.cost},
        {"nmd", m.nmd},
        {"privacy_fraction", m.privacy_fraction},
        {"privacy_percent", m.privacy_percent},
        {"qor", m.qor},
        {"qos", m.qos},
        {"ep_ul", m.ep_ul},
        {"ep_rsu", m.ep_rsu},
        {"cp", m.cp},
    };
}

}  // namespace vecsim
