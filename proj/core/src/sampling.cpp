#include "halflow/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace halflow {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    has_spare_ = true;
    return r * std::cos(kTwoPi * u2);
}

GridField random_band_limited(const CircleGrid& grid, int components, int band,
                              Rng& rng, double amplitude) {
    if (band > grid.max_mode())
        throw std::invalid_argument("random_band_limited: band exceeds grid band");
    SpectralField c(grid, components);
    for (int comp = 0; comp < components; ++comp) {
        c.at(comp, 0) = amplitude * rng.normal();
        for (int k = 1; k <= band; ++k) {
            double decay = amplitude * std::pow(1.0 + k, -1.5);
            std::complex<double> z{rng.normal() * decay, rng.normal() * decay};
            c.at(comp, k) = z;
            c.at(comp, -k) = std::conj(z);
        }
    }
    return synthesize(c, grid);
}

SphereField perturbed_constant(const CircleGrid& grid, int components, int band,
                               double eps, Rng& rng) {
    GridField noise = random_band_limited(grid, components, band, rng, eps);
    for (int j = 0; j < grid.size(); ++j) noise.at(components - 1, j) += 1.0;
    return SphereField::project(noise);
}

SphereField degree_map(const CircleGrid& grid, int q) {
    GridField f(grid, 2);
    for (int j = 0; j < grid.size(); ++j) {
        double x = grid.node(j);
        f.at(0, j) = std::cos(q * x);
        f.at(1, j) = std::sin(q * x);
    }
    return SphereField::trusted(f);
}

SphereField projected_highband(const CircleGrid& grid, int components, int band,
                               Rng& rng) {
    GridField f = random_band_limited(grid, components, band, rng, 1.0);
    // shift the last component off zero so the pointwise projection is defined
    for (int j = 0; j < grid.size(); ++j) f.at(components - 1, j) += 2.0;
    return SphereField::project(f);
}

} // namespace halflow
