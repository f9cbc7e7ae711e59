#ifndef HALFLOW_LAB_HPP
#define HALFLOW_LAB_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "halflow/flow.hpp"
#include "halflow/grid.hpp"
#include "halflow/sampling.hpp"

namespace halflow {

struct SampleFamily {
    std::string generator = "band_limited"; // band_limited | sphere_perturbed | highband
    uint64_t seed = 1;
    int count = 100;
    int band = 64;
    int components = 1;
    double amplitude = 1.0;
    int grid_size = 1024;
};

/// One sample drawn from the family; deterministic given the rng state.
GridField make_sample(const SampleFamily& fam, const CircleGrid& grid, Rng& rng);

struct SampleRow {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

struct RatioReport {
    std::string name;
    std::vector<SampleRow> samples;
    double max_ratio = 0.0;
    int violations = 0;
    bool resolution_stable = true;
    std::string verdict; // pass | fail | inconclusive
    std::vector<std::string> notes;
};

/// Exact Cauchy-Schwarz step ||u||_{H^{1/4}}^2 <= ||u||_{L^2} ||u||_{H^{1/2}}
/// per sample (relative tolerance 1e-10), plus the empirical embedding ratio
/// ||u||_{L^4} / ||u||_{H^{1/4}}.
RatioReport ladyzhenskaya_report(const SampleFamily& fam);

/// Ratio (int |d_{1/2}u|^2 dx) / ||(-Delta)^{1/4}u||_{L^2}^2; asserts 2*pi
/// within 1e-3 relative for band-limited samples. Constant samples skipped.
RatioReport fracgrad_constant(const SampleFamily& fam);

/// Wente-type ratio ||F.d_{1/2}g - mean||_{H^{-1/2}} / (||F||_{L^2_od} ||g||_{H^{1/2}})
/// with F = omega_potential(u_source); refuses if div_{1/2}F exceeds 1e-3
/// relative to ||F||_{L^2_od}. Notes carry the homogeneous-norm variant.
RatioReport wente_report(const SphereField& u_source, const SampleFamily& g_family);

/// ||d_{1/2}u . d_{1/2}v||_{H^s-dot} (via product_spectrum) against both
/// right sides ||(-D)^{1/4+s/2+e}u|| ||(-D)^{1/2}v|| + (sym) and the
/// e-shifted variant; reports the per-sample ratios for each.
RatioReport product_regularity_report(const SampleFamily& u_family,
                                      const SampleFamily& v_family, double s,
                                      double eps);

/// ||(-Delta)^s u_alpha||_inf by raw P.V. quadrature at each resolution,
/// u_alpha(x) = |sin(x/2)|^alpha. Pass when the probe stabilizes (variation
/// <= 10% across the last two doublings) exactly if 2s < alpha.
RatioReport holder_laplacian_probe(double alpha, double s,
                                   const std::vector<int>& resolutions);

/// Line-side quadrature of int_R |v(x)-v(y)|^2/|x-y|^2 dy, v = u o inverse
/// stereographic projection, against (1 + sin x0) times the circle-side
/// quadrature. Base points are grid nodes, kept away from the pole -pi/2.
RatioReport stereographic_check(const GridField& u, const std::vector<double>& x0_list,
                                double truncation);

/// Periodic mollification with a C^inf bump of unit mass supported in
/// B_eps, then pointwise projection. Throws if the convolution vanishes.
SphereField mollify_project(const SphereField& u, double eps);

/// Tracks sup-node distance to the sphere before projection and
/// ||u_eps - u||_{H^{1/2}} along the eps schedule; pass when both decrease.
RatioReport approximation_report(const SphereField& u,
                                 const std::vector<double>& eps_schedule);

/// intint_{B_{3R/4}} |(-D)^{1/4}u|^4 against
/// sup_t int_{B_R} |(-D)^{1/4}u|^2 * (intint_{B_R} |(-D)^{1/2}u|^2
/// + R^{-2} intint |(-D)^{1/4}u|^2); trapezoid in time over the snapshots.
RatioReport local_l4_monitor(const std::vector<Snapshot>& trajectory, double x0,
                             double radius);

/// (E_R(t) - E_{2R}(0)) / ((t/R^2 + sqrt(t)/R) E(u0)); sup over snapshots.
RatioReport local_energy_monitor(const std::vector<Snapshot>& trajectory, double x0,
                                 double radius);

/// Two-sided comparison of the double-quadrature W^{s,(p,q)}-dot norm with
/// the Littlewood-Paley F^s_{p,q}-dot norm built from a frozen smooth dyadic
/// partition. Requires p > q/(1+sq).
RatioReport norm_equivalence_report(const SampleFamily& fam, double s, double p,
                                    double q);

/// Littlewood-Paley block j of f (frozen smooth dyadic partition), exposed
/// for the homogeneity tests.
GridField lp_block(const SpectralField& f, int j, const CircleGrid& grid);

} // namespace halflow

#endif
