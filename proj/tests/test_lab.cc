#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "halflow/flow.hpp"
#include "halflow/grid.hpp"
#include "halflow/lab.hpp"
#include "halflow/sampling.hpp"
#include "halflow/spectral.hpp"

using namespace halflow;

TEST_CASE("sample families") {
    SampleFamily fam;
    fam.generator = "vortex";
    CircleGrid g(64);
    Rng rng(1);
    CHECK_THROWS_AS(make_sample(fam, g, rng), std::invalid_argument);
    fam.generator = "band_limited";
    fam.band = 8;
    GridField f = make_sample(fam, g, rng);
    CHECK(f.components() == fam.components);
    CHECK(f.size() == 64);
}

TEST_CASE("interpolation inequality sweep") {
    SampleFamily fam;
    fam.seed = 2;
    fam.count = 50;
    fam.band = 32;
    fam.grid_size = 256;
    RatioReport rep = ladyzhenskaya_report(fam);
    CHECK(rep.verdict == "pass");
    CHECK(rep.violations == 0);
    CHECK(int(rep.samples.size()) >= fam.count);
}

TEST_CASE("gradient-energy ratio is 2 pi") {
    SampleFamily fam;
    fam.seed = 3;
    fam.count = 3;
    fam.band = 8;
    fam.grid_size = 256;
    RatioReport rep = fracgrad_constant(fam);
    CHECK(rep.verdict == "pass");
    for (const SampleRow& r : rep.samples)
        CHECK(r.ratio == doctest::Approx(kTwoPi).epsilon(1e-3));
}

TEST_CASE("compensation ratio stays finite for a divergence-free source") {
    SampleFamily fam;
    fam.seed = 4;
    fam.count = 2;
    fam.band = 8;
    fam.components = 1;
    fam.grid_size = 128;
    RatioReport rep = wente_report(degree_map(CircleGrid(128), 1), fam);
    CHECK(rep.verdict == "pass");
    for (const SampleRow& r : rep.samples) CHECK(std::isfinite(r.ratio));
}

TEST_CASE("product regularity argument checks") {
    SampleFamily fam;
    fam.grid_size = 128;
    fam.count = 1;
    fam.band = 8;
    fam.components = 2;
    CHECK_THROWS_AS(product_regularity_report(fam, fam, 1.5, 0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(product_regularity_report(fam, fam, 0.5, 0.0),
                    std::invalid_argument);
    RatioReport rep = product_regularity_report(fam, fam, 0.5, 0.125);
    for (const SampleRow& r : rep.samples) CHECK(std::isfinite(r.ratio));
}

TEST_CASE("singular quadrature probe") {
    CHECK_THROWS_AS(holder_laplacian_probe(1.5, 0.3, {128, 256}),
                    std::domain_error);
    std::vector<int> res{128, 256, 512, 1024};
    CHECK(holder_laplacian_probe(0.8, 0.3, res).verdict == "pass");
    CHECK(holder_laplacian_probe(0.4, 0.3, res).verdict == "pass");
}

TEST_CASE("line-circle quadrature identity") {
    CircleGrid g(256);
    GridField u = degree_map(g, 1).field();
    RatioReport rep = stereographic_check(u, {0.0, g.node(32)}, 1000.0);
    CHECK(rep.violations == 0);
    CHECK_THROWS_AS(stereographic_check(u, {0.0}, 1e-2), std::invalid_argument);
}

TEST_CASE("mollify and project") {
    CircleGrid g(256);
    SphereField u = degree_map(g, 1);
    CHECK_THROWS_AS(mollify_project(u, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(mollify_project(u, 1.0), std::invalid_argument);
    SphereField m = mollify_project(u, 0.25);
    CHECK(SphereField::drift(m.field()) <= 1e-12);
    GridField d = m.field();
    d -= u.field();
    CHECK(d.sup_norm() <= 0.1);
    RatioReport rep = approximation_report(u, {0.125, 0.0625, 0.03125});
    CHECK(rep.verdict == "pass");
}

TEST_CASE("local monitors argument checks") {
    CircleGrid g(64);
    std::vector<Snapshot> traj;
    traj.push_back({0.0, degree_map(g, 1).field()});
    CHECK_THROWS_AS(local_l4_monitor(traj, 0.0, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(local_energy_monitor(traj, 0.0, 0.75), std::invalid_argument);
    traj.push_back({0.5, degree_map(g, 1).field()});
    RatioReport rep = local_l4_monitor(traj, 0.0, 0.25);
    CHECK(std::isfinite(rep.max_ratio));
}

TEST_CASE("norm equivalence hypothesis") {
    SampleFamily fam;
    fam.grid_size = 128;
    fam.count = 3;
    fam.band = 8;
    // p > q/(1+sq) required; p = 1, q = 2, s = 1/2 sits exactly on the edge
    CHECK_THROWS_AS(norm_equivalence_report(fam, 0.5, 1.0, 2.0),
                    std::invalid_argument);
    RatioReport rep = norm_equivalence_report(fam, 0.5, 4.0, 2.0);
    CHECK(rep.verdict == "pass");
    for (const SampleRow& r : rep.samples) CHECK(std::isfinite(r.ratio));
}

TEST_CASE("dyadic blocks resum a band-limited field") {
    CircleGrid g(128);
    Rng rng(9);
    GridField f = random_band_limited(g, 1, 40, rng);
    GridField mean_removed = f;
    std::vector<double> mu = f.mean();
    for (int a = 0; a < g.size(); ++a) mean_removed.at(0, a) -= mu[0];
    SpectralField c = analyze(f);
    int jmax = 0;
    while ((1 << jmax) < g.max_mode()) ++jmax;
    ++jmax;
    GridField sum(g, 1);
    for (int b = 0; b <= jmax; ++b) sum += lp_block(c, b, g);
    sum -= mean_removed;
    CHECK(sum.sup_norm() <= 1e-10);
}
