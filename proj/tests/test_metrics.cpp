#include <vector>

#include "doctest.h"
#include "support/instances.hpp"
#include "support/oracles.hpp"
#include "vecsim/error.hpp"
#include "vecsim/metrics.hpp"

using namespace vecsim;

namespace {

TaskOutcome on(Layer layer, double hours = 0.0, bool met = true,
               ExecutionMode mode = ExecutionMode::AccurateProcessing) {
    TaskOutcome o;
    o.layer = layer;
    o.processing_hours = hours;
    o.deadline = 10.0;
    o.finish = met ? 5.0 : 15.0;
    o.deadline_met = met;
    o.mode = mode;
    o.work = 1.0;
    return o;
}

std::vector<TaskOutcome> split(std::size_t ul, std::size_t rsu, std::size_t cloud) {
    std::vector<TaskOutcome> v;
    v.insert(v.end(), ul, on(Layer::UserLayer));
    v.insert(v.end(), rsu, on(Layer::RSU));
    v.insert(v.end(), cloud, on(Layer::Cloud));
    return v;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("cost") {
    CHECK(cost(split(5, 0, 0), 0.959) == 0.0);
    CHECK(cost(std::vector{on(Layer::Cloud, 1.0)}, 0.959) == doctest::Approx(0.959).epsilon(1e-15));
    CHECK(cost(std::vector<TaskOutcome>(10, on(Layer::Cloud, 0.5)), 0.959) == doctest::Approx(4.795).epsilon(1e-14));
    // edge compute is free
    CHECK(cost(std::vector{on(Layer::RSU, 3.0), on(Layer::UserLayer, 2.0)}, 0.959) == 0.0);
    CHECK_THROWS_AS((void)cost(split(1, 0, 0), -1.0), MetricError);
}

TEST_CASE("nmd") {
    CHECK(nmd(split(3, 3, 3)) == 0);
    auto v = split(3, 3, 3);
    v[4] = on(Layer::RSU, 0.0, false);
    CHECK(nmd(v) == 1);
    v[4].rt_class = RealTimeClass::Soft;
    CHECK(nmd(v, NmdScope::ExcludeSoft) == 0);
    CHECK(nmd(v, NmdScope::All) == 1);
}

TEST_CASE("privacy spot values") {
    const auto v = split(300, 200, 1000);
    CHECK(privacy(v, 1.0) == doctest::Approx(1300.0 / 1500.0).epsilon(1e-15));
    CHECK(std::abs(privacy(v, 1.0) - 0.8667) < 1e-4);
    CHECK(std::abs(privacy(v, 0.0) - 0.2) < 1e-9);
    CHECK(privacy(split(7, 0, 0), 0.3) == 1.0);
    CHECK(privacy(split(2, 0, 9), 1.0) == 1.0);
    CHECK(privacy(split(0, 4, 0), 1.0) == 0.0);
    CHECK_THROWS_AS((void)privacy({}, 1.0), MetricError);
    CHECK_THROWS_AS((void)privacy(v, 1.5), MetricError);
}

TEST_CASE("privacy weighted by work") {
    auto v = split(1, 1, 0);
    v[0].work = 30.0;
    v[1].work = 10.0;
    CHECK(privacy(v, 1.0, PrivacyWeighting::Count) == 0.5);
    CHECK(privacy(v, 1.0, PrivacyWeighting::Work) == 0.75);
}

TEST_CASE("privacy is non-decreasing in k") {
    const auto v = split(3, 5, 8);
    double prev = -1.0;
    for (double k = 0.0; k <= 1.0; k += 0.125) {
        const double p = privacy(v, k);
        CHECK(p >= prev);
        prev = p;
    }
}

TEST_CASE("qor") {
    const auto axp = on(Layer::UserLayer, 0.0, true, ExecutionMode::ApproximateProcessing);
    CHECK(qor(split(4, 0, 0)) == 1.0);
    CHECK(qor(std::vector<TaskOutcome>(6, axp), 0.95) == doctest::Approx(0.95).epsilon(1e-15));
    CHECK(qor(std::vector{axp, on(Layer::Cloud)}, 0.95) == doctest::Approx(0.975).epsilon(1e-15));
    CHECK_THROWS_AS((void)qor({}), MetricError);
}

TEST_CASE("qos") {
    CHECK(qos(0.0, 0, 1.0, 1.0) == 1.0);
    CHECK(qos(1.0, 1, 1.0, 0.95) == doctest::Approx(0.2375).epsilon(1e-15));
    CHECK(qos(0.0, 0, 13.0 / 15.0, 0.975) == doctest::Approx(13.0 / 15.0 * 0.975).epsilon(1e-15));
    CHECK(std::abs(qos(0.0, 0, 0.8667, 0.975) - 0.8450) < 1e-4);
}

TEST_CASE("qos is monotone in each argument") {
    const std::vector<double> costs{0.0, 0.1, 1.0, 7.5};
    const std::vector<std::size_t> misses{0, 1, 4, 30};
    const std::vector<double> fractions{0.05, 0.3, 0.8, 1.0};
    for (double c : costs) {
        for (std::size_t n : misses) {
            for (double p : fractions) {
                for (double q : fractions) {
                    const double base = qos(c, n, p, q);
                    CHECK(base > 0.0);
                    CHECK(base <= 1.0);
                    CHECK(qos(c + 0.5, n, p, q) < base);
                    CHECK(qos(c, n + 1, p, q) < base);
                    if (p < 1.0) CHECK(qos(c, n, std::min(1.0, p + 0.05), q) > base);
                    if (q < 1.0) CHECK(qos(c, n, p, std::min(1.0, q + 0.05)) > base);
                }
            }
        }
    }
}

TEST_CASE("summarize on a hand-built ten-task trace") {
    PlatformConfig cfg;
    cfg.vehicles = 1;
    cfg.rsu_count = 1;
    const Platform p = build_platform(cfg);

    TraceReport trace;
    const auto axp = ExecutionMode::ApproximateProcessing;
    trace.outcomes = {
        on(Layer::UserLayer),        on(Layer::UserLayer),        on(Layer::UserLayer, 0, true, axp),
        on(Layer::UserLayer, 0, false), on(Layer::RSU, 0, true, axp), on(Layer::RSU),
        on(Layer::Cloud, 0.25),      on(Layer::Cloud, 0.25, false), on(Layer::Cloud, 0.25, true, axp),
        on(Layer::Cloud, 0.25),
    };
    const auto m = summarize(trace, p);
    // 4 cloud tasks × 0.25 h at 0.959 $/h
    CHECK(m.cost == doctest::Approx(0.959).epsilon(1e-15));
    CHECK(m.nmd == 2);
    CHECK(m.ep_ul == 4);
    CHECK(m.ep_rsu == 2);
    CHECK(m.cp == 4);
    CHECK(m.privacy_fraction == 0.8);
    CHECK(m.privacy_percent == doctest::Approx(80.0));
    CHECK(m.qor == doctest::Approx(0.985).epsilon(1e-15));
    CHECK(m.qos == doctest::Approx(0.8 * 0.985 / (1.959 * 3.0)).epsilon(1e-14));
    CHECK(m.qos == qos(m.cost, m.nmd, m.privacy_fraction, m.qor));
}

TEST_CASE("summarize with no cloud work costs nothing") {
    PlatformConfig cfg;
    cfg.vehicles = 1;
    cfg.rsu_count = 1;
    const Platform p = build_platform(cfg);
    TraceReport trace;
    trace.outcomes = split(3, 2, 0);
    CHECK(summarize(trace, p).cost == 0.0);
}

TEST_CASE("summarize agrees with the independent recomputation") {
    MetricsConfig variants[] = {
        {},
        {0.9, PrivacyWeighting::Work, NmdScope::ExcludeSoft},
    };
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto inst = testing::random_small_instance(seed, 12);
        inst.platform.k_cloud = (seed % 5) / 4.0;
        const Platform p = build_platform(inst.platform);
        for (PolicyKind k : kPolicyKinds) {
            const auto trace = run(p, inst.workload, k, seed);
            for (const auto& cfg : variants) {
                const auto m = summarize(trace, p, cfg);
                const auto b = testing::brute_metrics(trace, inst.workload, p, accounting_for(k), {}, cfg);
                CAPTURE(seed);
                CAPTURE(to_string(k));
                CHECK(testing::close_rel(m.cost, b.cost));
                CHECK(m.nmd == b.nmd);
                CHECK(testing::close_rel(m.privacy_fraction, b.privacy));
                CHECK(testing::close_rel(m.qor, b.qor));
                CHECK(testing::close_rel(m.qos, b.qos));
            }
        }
    }
}

}  // TEST_SUITE
