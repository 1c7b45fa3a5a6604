#include "doctest.h"
#include "vecsim/error.hpp"
#include "vecsim/infrastructure.hpp"
#include "vecsim/rng.hpp"

using namespace vecsim;

namespace {

TaskSpec task(TaskId id, VehicleId owner = 0) {
    TaskSpec t;
    t.task_id = id;
    t.owner_vehicle = owner;
    t.size = 10.0;
    t.deadline = 100.0;
    return t;
}

PlatformConfig tiny_config() {
    PlatformConfig c;
    c.vehicles = 3;
    c.rsu_count = 2;
    return c;
}

}  // namespace

TEST_SUITE("infrastructure") {

TEST_CASE("default platform matches the rented cloud server") {
    const Platform p = build_platform({});
    REQUIRE(p.nodes_in(Layer::Cloud).size() == 1);
    const auto& cloud = p.node(p.nodes_in(Layer::Cloud).front());
    CHECK(cloud.cores == 16);
    CHECK(p.srp() == 0.959);
    CHECK(p.k_cloud() == 1.0);
    CHECK(p.vehicle_count() == 100);
    CHECK(p.nodes_in(Layer::UserLayer).size() == 100);
    CHECK(p.nodes_in(Layer::RSU).size() == 4);
}

TEST_CASE("default node shapes order OBU < RSU < cloud") {
    const Platform p = build_platform({});
    const auto& obu = p.obu_of(0);
    const auto& rsu = p.node(p.nodes_in(Layer::RSU).front());
    const auto& cloud = p.node(p.nodes_in(Layer::Cloud).front());
    CHECK(obu.speed == 25.0);
    CHECK(obu.cores == 1);
    CHECK(obu.link_latency == 0.0);
    CHECK(rsu.speed == 100.0);
    CHECK(rsu.cores == 4);
    CHECK(rsu.link_latency == 0.05);
    CHECK(cloud.speed == 200.0);
    CHECK(cloud.link_latency == 0.5);
}

TEST_CASE("each vehicle owns exactly one OBU") {
    const Platform p = build_platform(tiny_config());
    for (VehicleId v = 0; v < p.vehicle_count(); ++v) {
        const auto& n = p.obu_of(v);
        CHECK(n.layer == Layer::UserLayer);
        CHECK(n.vehicle == v);
    }
    for (NodeId id : p.nodes_in(Layer::RSU)) CHECK_FALSE(p.node(id).vehicle.has_value());
}

TEST_CASE("build_platform rejects degenerate configs, naming the field") {
    auto expect_field = [](PlatformConfig c, const char* field) {
        CAPTURE(field);
        CHECK_THROWS_WITH_AS((void)build_platform(c), doctest::Contains(field), ConfigError);
    };
    PlatformConfig c;
    c.vehicles = 0;
    expect_field(c, "vehicles");
    c = {};
    c.obu_speed = 0.0;
    expect_field(c, "obu_speed");
    c = {};
    c.rsu_speed = -1.0;
    expect_field(c, "rsu_speed");
    c = {};
    c.cloud_cores = 0;
    expect_field(c, "cloud_cores");
    c = {};
    c.rsu_count = 0;
    expect_field(c, "rsu_count");
    c = {};
    c.srp = -0.1;
    expect_field(c, "srp");
    c = {};
    c.k_cloud = 1.5;
    expect_field(c, "k_cloud");
    c = {};
    c.latency_cloud = -1.0;
    expect_field(c, "latency_cloud");
}

TEST_CASE("Platform constructor enforces node invariants") {
    const NodeSpec obu{0, Layer::UserLayer, 25.0, 1, 0.0, VehicleId{0}, false};
    const NodeSpec rsu{1, Layer::RSU, 100.0, 4, 0.05, std::nullopt, false};
    const NodeSpec cloud{2, Layer::Cloud, 200.0, 16, 0.5, std::nullopt, false};
    CHECK_NOTHROW(Platform({obu, rsu, cloud}, 1.0, 1.0));

    auto rsu_with_vehicle = rsu;
    rsu_with_vehicle.vehicle = 0;
    CHECK_THROWS_AS(Platform({obu, rsu_with_vehicle, cloud}, 1.0, 1.0), ValidationError);

    auto obu_without_vehicle = obu;
    obu_without_vehicle.vehicle.reset();
    CHECK_THROWS_AS(Platform({obu_without_vehicle, rsu, cloud}, 1.0, 1.0), ValidationError);

    CHECK_THROWS_AS(Platform({obu, rsu}, 1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(Platform({obu, rsu, cloud}, 1.0, 1.5), ValidationError);

    auto elastic_rsu = rsu;
    elastic_rsu.elastic = true;
    CHECK_THROWS_AS(Platform({obu, elastic_rsu, cloud}, 1.0, 1.0), ValidationError);
}

TEST_CASE("available") {
    const Platform p = build_platform(tiny_config());
    CapacityLedger ledger(p);

    SUBCASE("idle platform is available everywhere") {
        CHECK(ledger.available(Layer::UserLayer, 0, 0.0));
        CHECK(ledger.available(Layer::RSU, std::nullopt, 0.0));
        CHECK(ledger.available(Layer::Cloud, std::nullopt, 0.0));
    }
    SUBCASE("busy owner OBU") {
        ledger.admit(p.obu_of(0), task(1), 0.0, 10.0, 10.0);
        CHECK_FALSE(ledger.available(Layer::UserLayer, 0, 5.0));
        CHECK(ledger.available(Layer::UserLayer, 0, 10.0));
    }
    SUBCASE("other idle OBUs do not make the owner's layer available") {
        ledger.admit(p.obu_of(1), task(1, 1), 0.0, 10.0, 10.0);
        CHECK(ledger.available(Layer::UserLayer, 0, 5.0));
        CHECK(ledger.available(Layer::UserLayer, 2, 5.0));
        CHECK_FALSE(ledger.available(Layer::UserLayer, 1, 5.0));
    }
    SUBCASE("user layer without an owner is never available") {
        CHECK_FALSE(ledger.available(Layer::UserLayer, std::nullopt, 0.0));
    }
}

TEST_CASE("admit") {
    const Platform p = build_platform(tiny_config());
    CapacityLedger ledger(p);
    const auto& obu = p.obu_of(0);

    SUBCASE("single admission sets busy-until") {
        const auto& r = ledger.admit(obu, task(1), 3.0, 2.0, 50.0);
        CHECK(r.end == 5.0);
        CHECK(ledger.busy_until(obu.node_id)[0] == 5.0);
        CHECK(ledger.earliest_free(obu.node_id) == 5.0);
        CHECK(ledger.in_flight_work(Layer::UserLayer, 4.0) == 50.0);
        CHECK(ledger.in_flight_work(Layer::UserLayer, 5.0) == 0.0);
    }
    SUBCASE("capacity conflict on a single core") {
        ledger.admit(obu, task(1), 0.0, 2.0, 1.0);
        CHECK_THROWS_AS(ledger.admit(obu, task(2), 0.0, 2.0, 1.0), AdmissionError);
        CHECK_NOTHROW(ledger.admit(obu, task(2), 2.0, 2.0, 1.0));
    }
    SUBCASE("sixteen parallel admissions fill the cloud server") {
        const auto& cloud = p.node(p.nodes_in(Layer::Cloud).front());
        for (TaskId i = 0; i < 16; ++i) CHECK_NOTHROW(ledger.admit(cloud, task(i), 0.0, 1.0, 1.0));
        CHECK_THROWS_AS(ledger.admit(cloud, task(16), 0.0, 1.0, 1.0), AdmissionError);
        CHECK_FALSE(ledger.available(Layer::Cloud, std::nullopt, 0.5));
        CHECK(ledger.available(Layer::Cloud, std::nullopt, 1.0));
    }
}

TEST_CASE("elastic cloud never runs out of cores") {
    auto c = tiny_config();
    c.elastic = true;
    const Platform p = build_platform(c);
    CapacityLedger ledger(p);
    const auto& cloud = p.node(p.nodes_in(Layer::Cloud).front());
    for (TaskId i = 0; i < 100; ++i) CHECK_NOTHROW(ledger.admit(cloud, task(i), 0.0, 5.0, 1.0));
    CHECK(ledger.earliest_free(cloud.node_id) == 0.0);
    CHECK(ledger.busy_until(cloud.node_id).size() == 100);
}

TEST_CASE("ledger conserves admitted time and never exceeds core counts") {
    const Platform p = build_platform(tiny_config());
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        CapacityLedger ledger(p);
        Rng rng(seed);
        double admitted = 0.0;
        for (TaskId i = 0; i < 200; ++i) {
            const NodeId id = static_cast<NodeId>(rng.below(p.nodes().size()));
            const auto& node = p.node(id);
            const double t = rng.uniform(0.0, 50.0);
            const double start = std::max(t, ledger.earliest_free(id));
            const double duration = rng.uniform(0.1, 5.0);
            const auto before = std::vector<Seconds>(ledger.busy_until(id).begin(), ledger.busy_until(id).end());
            ledger.admit(node, task(i), start, duration, duration);
            admitted += duration;
            // busy-until times only move forward
            const auto after = ledger.busy_until(id);
            for (std::size_t c = 0; c < before.size(); ++c) CHECK(after[c] >= before[c]);
        }
        double reserved = 0.0;
        for (const auto& r : ledger.reservations()) reserved += r.end - r.start;
        CHECK(reserved == doctest::Approx(admitted).epsilon(1e-12));

        // Per node, no instant is covered by more reservations than cores.
        for (const auto& node : p.nodes()) {
            for (const auto& r : ledger.reservations()) {
                if (r.node != node.node_id) continue;
                std::uint32_t overlapping = 0;
                for (const auto& q : ledger.reservations()) {
                    if (q.node == node.node_id && q.start <= r.start && r.start < q.end) ++overlapping;
                }
                CHECK(overlapping <= node.cores);
            }
        }
    }
}

}  // TEST_SUITE
