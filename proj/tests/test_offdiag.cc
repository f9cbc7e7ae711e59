#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "halflow/grid.hpp"
#include "halflow/offdiag.hpp"
#include "halflow/sampling.hpp"
#include "halflow/spectral.hpp"

using namespace halflow;

namespace {

SphereField identity_map(const CircleGrid& g) {
    GridField f(g, 2);
    for (int a = 0; a < g.size(); ++a) {
        f.at(0, a) = std::cos(g.node(a));
        f.at(1, a) = std::sin(g.node(a));
    }
    return SphereField::trusted(f);
}

} // namespace

TEST_CASE("fractional gradient swap-antisymmetry is exact") {
    CircleGrid g(64);
    Rng rng(11);
    GridField f = random_band_limited(g, 2, 20, rng);
    OffDiagonalKernel d = frac_gradient_kernel(f, 0.5);
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < g.size(); ++i) {
            CHECK(d.at(c, i, i) == 0.0);
            for (int j = 0; j < g.size(); ++j)
                CHECK(d.at(c, i, j) == -d.at(c, j, i));
        }
    CHECK_THROWS_AS(frac_gradient_kernel(f, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(frac_gradient_kernel(f, -0.1), std::invalid_argument);
}

TEST_CASE("two-point Leibniz rule") {
    CircleGrid g(64);
    Rng rng(12);
    GridField f = random_band_limited(g, 1, 20, rng);
    GridField h = random_band_limited(g, 1, 20, rng);
    GridField fh(g, 1);
    for (int a = 0; a < g.size(); ++a) fh.at(0, a) = f.at(0, a) * h.at(0, a);
    OffDiagonalKernel dfh = frac_gradient_kernel(fh, 0.5);
    OffDiagonalKernel df = frac_gradient_kernel(f, 0.5);
    OffDiagonalKernel dh = frac_gradient_kernel(h, 0.5);
    double scale = f.sup_norm() * h.sup_norm();
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            double lhs = dfh.at(0, i, j);
            double rhs = f.at(0, i) * dh.at(0, i, j) + df.at(0, i, j) * h.at(0, j);
            CHECK(std::fabs(lhs - rhs) <=
                  1e-12 * scale / std::sqrt(g.node_distance(i, j)));
        }
}

TEST_CASE("pair on the identity map") {
    CircleGrid g(512);
    SphereField u = identity_map(g);
    OffDiagonalKernel du = frac_gradient_kernel(u.field(), 0.5);
    // without the diagonal cell the constant misses exactly one weight
    GridField p = pair(du, du);
    for (int a = 0; a < g.size(); ++a)
        CHECK(std::fabs(p.at(0, a) - kTwoPi) <= 2e-2);
    // lambda_raw restores it through the analytic diagonal limit
    GridField lam = lambda_raw(u);
    for (int a = 0; a < g.size(); ++a)
        CHECK(lam.at(0, a) == doctest::Approx(kTwoPi).epsilon(1e-13));
}

TEST_CASE("divergence-gradient composition has the discrete symbol") {
    CircleGrid g(256);
    const int k = 2;
    GridField f(g, 1);
    for (int a = 0; a < g.size(); ++a) f.at(0, a) = std::cos(k * g.node(a));
    GridField div = frac_divergence(frac_gradient_kernel(f, 0.5), 0.5);
    // exact value 2pi k - w k^2; the defect against 2pi(-Delta)^{1/2} is O(k/N)
    double symbol = kTwoPi * k - g.weight() * k * k;
    for (int a = 0; a < g.size(); ++a)
        CHECK(div.at(0, a) == doctest::Approx(symbol * f.at(0, a)).epsilon(1e-10));
    CHECK(std::fabs(symbol - kTwoPi * k) / (kTwoPi * k) ==
          doctest::Approx(double(k) / g.size()).epsilon(1e-12));
}

TEST_CASE("gradient-divergence duality") {
    CircleGrid g(128);
    Rng rng(13);
    GridField phi = random_band_limited(g, 1, 30, rng);
    // arbitrary kernel: duality is a structural summation-by-parts identity
    OffDiagonalKernel F(g, 1);
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (i != j) F.at(0, i, j) = rng.normal();
    double lhs = offdiag_pairing(F, frac_gradient_kernel(phi, 0.5));
    GridField div = frac_divergence(F, 0.5);
    double rhs = 0.0;
    for (int a = 0; a < g.size(); ++a) rhs += phi.at(0, a) * div.at(0, a);
    rhs *= g.weight();
    CHECK(std::fabs(lhs - rhs) <= 1e-6 * offdiag_l2_norm(F) * phi.l2_norm());
}

TEST_CASE("antisymmetric potential") {
    CircleGrid g(64);
    Rng rng(14);
    SphereField u = perturbed_constant(g, 3, 6, 0.4, rng);
    OffDiagonalKernel O = omega_potential(u);
    const int n = 3;
    REQUIRE(O.components() == n * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < g.size(); ++a)
                for (int b = 0; b < g.size(); ++b)
                    CHECK(O.at(i * n + k, a, b) == -O.at(k * n + i, a, b));
}

TEST_CASE("identity-map potential is divergence free") {
    CircleGrid g(256);
    OffDiagonalKernel O = omega_potential(identity_map(g));
    CHECK(frac_divergence(O, 0.5).sup_norm() <= 1e-10);
}

TEST_CASE("divergence correction collapses a generic divergence") {
    CircleGrid g(128);
    Rng rng(15);
    SphereField u = perturbed_constant(g, 2, 8, 0.5, rng);
    OffDiagonalKernel O = omega_potential(u);
    double before = frac_divergence(O, 0.5).l2_norm();
    double after = frac_divergence(divfree_correction(O), 0.5).l2_norm();
    CHECK(before > 0.0);
    CHECK(after <= before / 1e3);
}

TEST_CASE("three-point functional") {
    CircleGrid g(64);
    Rng rng(16);
    GridField u = random_band_limited(g, 2, 10, rng);
    GridField v = random_band_limited(g, 2, 10, rng);
    GridField w = random_band_limited(g, 2, 10, rng);
    GridField a = t_functional(u, v, w);
    GridField b = t_functional(u, w, v);
    b -= a;
    CHECK(b.sup_norm() <= 1e-13 * (1.0 + a.sup_norm()));
    GridField c(g, 2); // constant second slot kills the functional
    for (int i = 0; i < g.size(); ++i) { c.at(0, i) = 1.0; c.at(1, i) = -2.0; }
    CHECK(t_functional(u, c, w).sup_norm() == 0.0);
}

TEST_CASE("off-diagonal pairing shape checks") {
    CircleGrid g(16);
    OffDiagonalKernel a(g, 2), b(g, 3);
    CHECK_THROWS_AS(pair(a, b), std::invalid_argument);
    CHECK_THROWS_AS(offdiag_pairing(a, b), std::invalid_argument);
}
