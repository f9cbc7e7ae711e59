#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "halflow/flow.hpp"
#include "halflow/grid.hpp"
#include "halflow/sampling.hpp"
#include "halflow/spectral.hpp"

using namespace halflow;

TEST_CASE("scheme names") {
    CHECK(scheme_from_string("exponential") == Scheme::exponential);
    CHECK(scheme_from_string("semi-implicit") == Scheme::semi_implicit);
    CHECK(scheme_from_string("explicit-reference") == Scheme::explicit_reference);
    CHECK(scheme_to_string(Scheme::semi_implicit) == "semi-implicit");
    CHECK_THROWS_AS(scheme_from_string("rk4"), std::invalid_argument);
}

TEST_CASE("config validation") {
    FlowConfig c;
    c.validate();
    FlowConfig bad = c;
    bad.dt = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.components = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.initial_family = "spiral";
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.grid_size = 64;
    bad.band = 40;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.horizon = c.dt / 2.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("nonlinearity at the identity map is the map itself") {
    CircleGrid g(128);
    SphereField u = degree_map(g, 1);
    GridField n = nonlinearity(u);
    GridField d = n;
    d -= u.field();
    CHECK(d.sup_norm() <= 1e-12);
}

TEST_CASE("constant maps are stationary") {
    CircleGrid g(64);
    GridField f(g, 2);
    for (int a = 0; a < g.size(); ++a) { f.at(0, a) = 0.6; f.at(1, a) = 0.8; }
    for (Scheme s : {Scheme::exponential, Scheme::semi_implicit,
                     Scheme::explicit_reference}) {
        StepResult r = step(f, 0.05, s, true);
        GridField d = r.u;
        d -= f;
        CHECK(d.sup_norm() <= 1e-13);
    }
}

TEST_CASE("identity map is a discrete fixed point") {
    CircleGrid g(128);
    GridField u = degree_map(g, 1).field();
    const GridField u0 = u;
    for (int n = 0; n < 20; ++n) {
        StepResult r = step(u, 0.01, Scheme::exponential, true);
        GridField inc = r.u;
        inc -= u;
        CHECK(inc.sup_norm() <= 1e-10);
        u = r.u;
    }
    GridField d = u;
    d -= u0;
    CHECK(d.sup_norm() <= 1e-9);
}

TEST_CASE("short run decays energy and stays on the sphere") {
    FlowConfig cfg;
    cfg.grid_size = 128;
    cfg.dt = 0.02;
    cfg.horizon = 0.5;
    cfg.band = 6;
    cfg.amplitude = 0.2;
    cfg.seed = 5;
    cfg.diag_cadence = 5;
    RunResult r = run(cfg);
    CHECK_FALSE(r.failed);
    CHECK(r.halt_event.empty());
    REQUIRE(r.diagnostics.size() >= 2);
    for (size_t i = 1; i < r.diagnostics.size(); ++i)
        CHECK(r.diagnostics[i].energy <= r.diagnostics[i - 1].energy + 1e-8);
    CHECK(SphereField::drift(r.final_u) <= 1e-12);
    REQUIRE(r.snapshots.size() == 2); // initial and final only at cadence 0
    CHECK(r.snapshots.back().t == doctest::Approx(r.final_time));
}

TEST_CASE("twin run of a scheme against itself never diverges") {
    CircleGrid g(64);
    Rng rng(6);
    GridField u0 = perturbed_constant(g, 2, 4, 0.2, rng).field();
    TwinReport t = twin_run(u0, Scheme::exponential, Scheme::exponential,
                            {0.05, 0.025}, 0.5);
    CHECK(t.event.empty());
    REQUIRE(t.sup_divergence.size() == 2);
    for (double d : t.sup_divergence) CHECK(d == 0.0);
}

TEST_CASE("orthogonality residual vanishes on stationary identity data") {
    CircleGrid g(128);
    SphereField u = degree_map(g, 1);
    GridField zero(g, 2);
    OrthogonalityResidual r = orthogonality_residual(u, zero);
    CHECK(r.tangential <= 1e-10);
    CHECK(r.normal <= 1e-10);
    CHECK(harmonic_residual(u) <= 1e-10);
    CHECK(harmonic_residual(degree_map(g, 2)) <= 1e-10);
}

TEST_CASE("local energy of the identity map is the arc radius") {
    CircleGrid g(512);
    SphereField u = degree_map(g, 1);
    // |(-Delta)^{1/4} u|^2 = 1 pointwise, so E_R = R up to one grid cell
    CHECK(std::fabs(local_energy(u, 0.0, 0.25) - 0.25) <= 2.0 * g.weight());
    CHECK(std::fabs(local_energy(u, kPi, 1.0) - 1.0) <= 2.0 * g.weight());
}

TEST_CASE("linearized flow") {
    CircleGrid g(128);
    LinearizedFlow lin(degree_map(g, 1));
    CHECK(lin.growth_constant() == doctest::Approx(2.0).epsilon(1e-10));
    GridField zero(g, 2);
    CHECK(lin.step(zero, 0.1).sup_norm() == 0.0);
    // the frozen map itself is the sharp direction: growth e^{2t} at most
    GridField h = degree_map(g, 1).field();
    double sup0 = h.sup_norm();
    const double dt = 0.05;
    for (int n = 1; n <= 10; ++n) {
        h = lin.step(h, dt);
        CHECK(h.sup_norm() <= std::exp(2.0 * n * dt) * sup0 * (1.0 + 1e-9));
    }
}

TEST_CASE("long-time harness rejects large energy") {
    FlowConfig cfg;
    cfg.grid_size = 128;
    cfg.initial_family = "degree";
    cfg.degree = 3; // energy 3 pi, above any small-energy threshold
    cfg.horizon = 1.0;
    CHECK_THROWS_AS(long_time_harness(cfg, 0.5), std::invalid_argument);
}
