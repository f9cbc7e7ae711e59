#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "halflow/cjk.hpp"
#include "halflow/grid.hpp"

using namespace halflow;

TEST_CASE("closed form of the pair-interaction constants") {
    // C(j,k) = pi (|j| + |k| - |j+k|), by linearity of the Fejer integral
    for (int j = -12; j <= 12; ++j)
        for (int k = -12; k <= 12; ++k) {
            double exact = kPi * (std::abs(j) + std::abs(k) - std::abs(j + k));
            CHECK(std::fabs(cjk(j, k) - exact) <= 1e-10 * std::max(1.0, exact));
        }
}

TEST_CASE("structural identities") {
    for (int k = -8; k <= 8; ++k) CHECK(cjk(0, k) == 0.0);
    for (int j = 1; j <= 16; ++j)
        CHECK(cjk(j, -j) == doctest::Approx(kTwoPi * j).epsilon(1e-12));
    for (int j = -6; j <= 6; ++j)
        for (int k = -6; k <= 6; ++k) {
            CHECK(cjk(j, k) == doctest::Approx(cjk(k, j)).epsilon(1e-13));
            CHECK(cjk(j, k) <=
                  kTwoPi * std::sqrt(double(std::abs(j)) * std::abs(k)) + 1e-9);
        }
}

TEST_CASE("table construction and csv round trip") {
    CjkTable t = build_table(12);
    for (int j = -12; j <= 12; ++j)
        for (int k = -12; k <= 12; ++k)
            CHECK(t.at(j, k) == doctest::Approx(cjk(j, k)).epsilon(1e-13));
    std::string path = "cjk_roundtrip_test.csv";
    save_table_csv(t, path);
    CjkTable r = load_table_csv(path);
    REQUIRE(r.max_frequency() == 12);
    for (int j = -12; j <= 12; ++j)
        for (int k = -12; k <= 12; ++k)
            CHECK(r.at(j, k) == t.at(j, k)); // bitwise through %.17g
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_table_csv("no_such_table.csv"), std::runtime_error);
    CHECK_THROWS_AS(CjkTable(-1), std::invalid_argument);
}

TEST_CASE("product spectrum of single modes") {
    CircleGrid g(64);
    CjkTable t = build_table(8);
    SpectralField u(g, 1), v(g, 1);
    u.at(0, 1) = 1.0;
    v.at(0, -1) = 1.0;
    SpectralField w = product_spectrum(u, v, t);
    CHECK(std::abs(w.at(0, 0) - kTwoPi) <= 1e-10);
    for (int n = -g.max_mode(); n <= g.max_mode(); ++n)
        if (n != 0) CHECK(std::abs(w.at(0, n)) <= 1e-14);
    // a constant factor annihilates the product
    SpectralField c(g, 1);
    c.at(0, 0) = 3.0;
    SpectralField z = product_spectrum(c, v, t);
    for (int n = -g.max_mode(); n <= g.max_mode(); ++n)
        CHECK(std::abs(z.at(0, n)) == 0.0);
}

TEST_CASE("product spectrum rejects out-of-band input") {
    CircleGrid g(64);
    CjkTable small = build_table(4);
    SpectralField u(g, 1), v(g, 1);
    u.at(0, 10) = 1.0;
    v.at(0, 1) = 1.0;
    CHECK_THROWS_AS(product_spectrum(u, v, small), std::invalid_argument);
    SpectralField w(g, 2);
    CHECK_THROWS_AS(product_spectrum(u, w, small), std::invalid_argument);
}
