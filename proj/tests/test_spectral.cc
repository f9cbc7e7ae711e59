#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "halflow/grid.hpp"
#include "halflow/sampling.hpp"
#include "halflow/spectral.hpp"

using namespace halflow;

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(CircleGrid(7), std::invalid_argument);
    CHECK_THROWS_AS(CircleGrid(12), std::invalid_argument);
    CHECK_THROWS_AS(CircleGrid(4), std::invalid_argument);
    CHECK_THROWS_AS(CircleGrid(0), std::invalid_argument);
    CHECK(CircleGrid(8).max_mode() == 3);
    CHECK(CircleGrid(256).max_mode() == 127);
}

TEST_CASE("chordal and arc distances") {
    CircleGrid g(16);
    CHECK(g.node_distance(3, 3) == 0.0);
    CHECK(g.node_distance(0, 8) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(circle_distance(0.0, kPi) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(arc_distance(0.1, kTwoPi - 0.1) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("transform roundtrip on band-limited data") {
    CircleGrid g(128);
    Rng rng(42);
    GridField f = random_band_limited(g, 2, g.max_mode(), rng);
    GridField back = synthesize(analyze(f), g);
    back -= f;
    CHECK(back.sup_norm() <= 1e-12 * f.sup_norm());
}

TEST_CASE("derivative and fractional multipliers") {
    CircleGrid g(64);
    GridField f(g, 1);
    for (int j = 0; j < g.size(); ++j) f.at(0, j) = std::cos(3.0 * g.node(j));
    GridField fp = synthesize(riesz_gradient(analyze(f)), g);
    GridField half = synthesize(fractional_laplacian(analyze(f), 0.5), g);
    for (int j = 0; j < g.size(); ++j) {
        CHECK(fp.at(0, j) == doctest::Approx(-3.0 * std::sin(3.0 * g.node(j))).epsilon(1e-12));
        CHECK(half.at(0, j) == doctest::Approx(3.0 * std::cos(3.0 * g.node(j))).epsilon(1e-12));
    }
    // zero mode annihilated
    GridField c(g, 1);
    for (int j = 0; j < g.size(); ++j) c.at(0, j) = 5.0;
    CHECK(synthesize(fractional_laplacian(analyze(c), 0.5), g).sup_norm() <= 1e-13);
}

TEST_CASE("Parseval") {
    CircleGrid g(256);
    Rng rng(7);
    GridField f = random_band_limited(g, 3, 100, rng);
    SpectralField c = analyze(f);
    double acc = 0.0;
    for (int comp = 0; comp < 3; ++comp)
        for (int k = -g.max_mode(); k <= g.max_mode(); ++k)
            acc += std::norm(c.at(comp, k));
    CHECK(std::sqrt(kTwoPi * acc) == doctest::Approx(f.l2_norm()).epsilon(1e-12));
}

TEST_CASE("Sobolev norms of a single mode") {
    CircleGrid g(128);
    const int j = 5;
    GridField f(g, 1);
    for (int a = 0; a < g.size(); ++a) f.at(0, a) = std::cos(j * g.node(a));
    SpectralField c = analyze(f);
    const double s = 0.5;
    CHECK(sobolev_norm(c, s, true) ==
          doctest::Approx(std::sqrt(kPi) * std::pow(j, s)).epsilon(1e-12));
    CHECK(sobolev_norm(c, s, false) ==
          doctest::Approx(std::sqrt(kPi * std::pow(1.0 + j * j, s))).epsilon(1e-12));
    // negative order is the inverse multiplier
    CHECK(sobolev_norm(c, -s, true) ==
          doctest::Approx(std::sqrt(kPi) * std::pow(j, -s)).epsilon(1e-12));
}

TEST_CASE("heat semigroup") {
    CircleGrid g(64);
    GridField f(g, 1);
    for (int a = 0; a < g.size(); ++a) f.at(0, a) = std::cos(4.0 * g.node(a));
    GridField h = synthesize(heat_propagate(analyze(f), 0.3), g);
    for (int a = 0; a < g.size(); ++a)
        CHECK(h.at(0, a) ==
              doctest::Approx(std::exp(-4.0 * 0.3) * f.at(0, a)).epsilon(1e-12));
    // composition e^{-s}e^{-t} = e^{-(s+t)}
    SpectralField one = heat_propagate(heat_propagate(analyze(f), 0.2), 0.5);
    SpectralField two = heat_propagate(analyze(f), 0.7);
    one -= two;
    CHECK(synthesize(one, g).sup_norm() <= 1e-13);
    CHECK_THROWS_AS(heat_propagate(analyze(f), -1e-9), std::domain_error);
}

TEST_CASE("synthesize rejects too-coarse targets") {
    CircleGrid fine(256), coarse(64);
    Rng rng(3);
    GridField f = random_band_limited(fine, 1, 100, rng);
    CHECK_THROWS_AS(synthesize(analyze(f), coarse), std::invalid_argument);
}

TEST_CASE("half energy of the identity map") {
    CircleGrid g(512);
    GridField f(g, 2);
    for (int a = 0; a < g.size(); ++a) {
        f.at(0, a) = std::cos(g.node(a));
        f.at(1, a) = std::sin(g.node(a));
    }
    CHECK(half_energy(SphereField::trusted(f)) == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("sphere field projection and drift") {
    CircleGrid g(16);
    GridField f(g, 2);
    for (int a = 0; a < g.size(); ++a) {
        f.at(0, a) = 2.0;
        f.at(1, a) = 0.0;
    }
    SphereField u = SphereField::project(f);
    CHECK(SphereField::drift(u.field()) <= 1e-15);
    f.at(0, 5) = 0.0;
    CHECK_THROWS_AS(SphereField::project(f), std::domain_error);
    CHECK_THROWS_AS(SphereField::trusted(f), std::domain_error);
}
