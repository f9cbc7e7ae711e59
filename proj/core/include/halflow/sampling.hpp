#ifndef HALFLOW_SAMPLING_HPP
#define HALFLOW_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "halflow/grid.hpp"
#include "halflow/spectral.hpp"

namespace halflow {

/// Deterministic random source. The transforms (uniform via 2^-53 scaling,
/// normal via Box-Muller) are implemented here because the std distributions
/// are implementation-defined and would break bitwise reproducibility.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }
    double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    double normal();

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Real band-limited field: independent Gaussian coefficients for
/// 0 <= k <= band with decay (1+k)^{-3/2}, conjugate-symmetric extension.
GridField random_band_limited(const CircleGrid& grid, int components, int band,
                              Rng& rng, double amplitude = 1.0);

/// Small perturbation of the constant north-pole map, projected to the sphere.
SphereField perturbed_constant(const CircleGrid& grid, int components, int band,
                               double eps, Rng& rng);

/// Degree-q covering of the circle, u(x) = (cos qx, sin qx). q = 1 is the
/// identity map.
SphereField degree_map(const CircleGrid& grid, int q);

/// Steep-transition sphere data: an O(1) high-band field shifted off zero and
/// projected pointwise.
SphereField projected_highband(const CircleGrid& grid, int components, int band,
                               Rng& rng);

} // namespace halflow

#endif
