#ifndef HALFLOW_FLOW_HPP
#define HALFLOW_FLOW_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "halflow/grid.hpp"
#include "halflow/offdiag.hpp"
#include "halflow/spectral.hpp"

namespace halflow {

enum class Scheme { exponential, semi_implicit, explicit_reference };

Scheme scheme_from_string(const std::string& s);
std::string scheme_to_string(Scheme s);

struct FlowConfig {
    int grid_size = 512;
    int components = 2;
    double dt = 0.01;
    double horizon = 1.0;
    Scheme scheme = Scheme::exponential;
    bool projection = true;
    // initial data: identity | degree | perturbed_constant | projected_highband
    std::string initial_family = "perturbed_constant";
    int degree = 1;
    int band = 8;
    double amplitude = 0.1;
    uint64_t seed = 1;
    int diag_cadence = 10;
    int snapshot_cadence = 0; // 0: keep only initial and final snapshots
    double energy_tolerance = 1e-8;
    double drift_tolerance = 1e-3;

    void validate() const; // throws std::invalid_argument
};

struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;
    double dissipation = 0.0;    // ||increment/dt||_{L^2}^2
    double sphere_drift = 0.0;
    double orth_residual = 0.0;
    double harmonic_residual = 0.0;
    double eps_r = 0.0;          // local energy at R = 1/4, max over centers
};

struct Snapshot {
    double t;
    GridField u;
};

struct RunResult {
    GridField final_u;
    double final_time = 0.0;
    std::vector<DiagnosticsRecord> diagnostics;
    std::vector<Snapshot> snapshots;
    std::string halt_event; // empty when the horizon was reached
    bool failed = false;    // integration failure (NaN / lost sphere)
};

/// Right side u(x) lambda(x) with lambda = lambda_raw / (2 pi), the scaling
/// under which the identity map is stationary.
GridField nonlinearity(const SphereField& u);

struct StepResult {
    GridField u;
    GridField increment; // u_new - u_old
};

/// One time step. exponential: u_hat <- e^{-|k|dt}(u_hat + dt N_hat);
/// semi-implicit: u_hat <- (u_hat + dt N_hat)/(1 + |k|dt); explicit-reference:
/// forward Euler. Pointwise renormalization follows when projection is on;
/// throws std::runtime_error if |u| vanishes at a node during projection.
StepResult step(const GridField& u, double dt, Scheme scheme, bool projection);

GridField initial_data(const FlowConfig& config);

/// Advances to the horizon, recording diagnostics at the configured cadence.
/// Halts early (labelled event) on sphere drift beyond tolerance with
/// projection off, or on an energy increase beyond tolerance per step.
RunResult run(const FlowConfig& config);

struct OrthogonalityResidual {
    double tangential = 0.0; // L^2 norm of the tangential part of u_t + (-Dl)^{1/2}u - u lambda
    double normal = 0.0;     // L^2 norm of u . residual, the sphere-preservation defect
};

OrthogonalityResidual orthogonality_residual(const SphereField& u, const GridField& u_t);

/// Harmonic residual || u ^ (-Delta)^{1/2} u ||_{L^2} (all component pairs).
double harmonic_residual(const SphereField& u);

/// E_R(u; x0) = 1/2 int_{B_R(x0)} |(-Delta)^{1/4}u|^2 dx over the arc ball.
double local_energy(const SphereField& u, double x0, double radius);

/// Max of local_energy over the stored snapshots and 16 equispaced centers.
double epsilon_of_r(const std::vector<Snapshot>& snapshots, double radius);

struct TwinReport {
    std::vector<double> dts;
    std::vector<double> sup_divergence; // sup_t ||u_a - u_b||_{L^2} per dt
    std::string event;                  // nonempty if a run failed
};

TwinReport twin_run(const GridField& u0, Scheme scheme_a, Scheme scheme_b,
                    const std::vector<double>& dts, double horizon);

/// Flow linearized at a frozen sphere field u:
/// h_t = -(-Delta)^{1/2}h + h lambda + (1/pi) u (d_{1/2}u . d_{1/2}h),
/// advanced by the exponential scheme.
class LinearizedFlow {
  public:
    explicit LinearizedFlow(const SphereField& u);

    GridField step(const GridField& h, double dt) const;
    /// sup lambda + 1, the constant of the discrete maximum-principle bound.
    double growth_constant() const;

  private:
    SphereField u_;
    GridField lambda_;
    OffDiagonalKernel du_;
};

struct LongTimeReport {
    std::vector<double> times;
    std::vector<double> energy;
    std::vector<double> h_half_to_mean;     // ||u - mean(u)||_{H^{1/2}}
    std::vector<double> harmonic_residuals;
    std::vector<double> dissipation_tails;  // int_t^{t+1} ||u_t||^2
    std::string verdict;                    // pass | fail | inconclusive
};

/// Requires E(u0) <= energy_threshold; verdict inconclusive when the horizon
/// is too short for the indicators to settle.
LongTimeReport long_time_harness(const FlowConfig& config,
                                 double energy_threshold = 0.5);

} // namespace halflow

#endif
