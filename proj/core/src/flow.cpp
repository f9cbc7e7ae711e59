#include "halflow/flow.hpp"

#include <cmath>
#include <stdexcept>

#include "halflow/sampling.hpp"

namespace halflow {

Scheme scheme_from_string(const std::string& s) {
    if (s == "exponential") return Scheme::exponential;
    if (s == "semi-implicit") return Scheme::semi_implicit;
    if (s == "explicit-reference") return Scheme::explicit_reference;
    throw std::invalid_argument("unknown scheme: " + s);
}

std::string scheme_to_string(Scheme s) {
    switch (s) {
        case Scheme::exponential: return "exponential";
        case Scheme::semi_implicit: return "semi-implicit";
        case Scheme::explicit_reference: return "explicit-reference";
    }
    return "?";
}

void FlowConfig::validate() const {
    if (dt <= 0.0) throw std::invalid_argument("FlowConfig: dt must be > 0");
    if (horizon < dt) throw std::invalid_argument("FlowConfig: horizon must be >= dt");
    if (components < 2) throw std::invalid_argument("FlowConfig: components must be >= 2");
    if (diag_cadence < 1) throw std::invalid_argument("FlowConfig: diag_cadence must be >= 1");
    CircleGrid g(grid_size); // validates power-of-two >= 8
    if (band > g.max_mode()) throw std::invalid_argument("FlowConfig: band exceeds grid band");
    if (initial_family != "identity" && initial_family != "degree" &&
        initial_family != "perturbed_constant" && initial_family != "projected_highband")
        throw std::invalid_argument("FlowConfig: unknown initial family " + initial_family);
}

namespace {

/// lambda_raw extended to fields off the sphere (the integrand only sees
/// differences), so non-projected runs can still be stepped.
GridField raw_density(const GridField& f) {
    GridField fp = synthesize(riesz_gradient(analyze(f)), f.grid());
    GridField diag(f.grid(), 1);
    for (int i = 0; i < f.size(); ++i) {
        double s = 0.0;
        for (int c = 0; c < f.components(); ++c) s += fp.at(c, i) * fp.at(c, i);
        diag.at(0, i) = s;
    }
    OffDiagonalKernel d = frac_gradient_kernel(f, 0.5);
    return pair(d, d, &diag);
}

GridField scaled_nonlinearity(const GridField& f) {
    GridField lam = raw_density(f);
    GridField out(f.grid(), f.components());
    for (int c = 0; c < f.components(); ++c)
        for (int j = 0; j < f.size(); ++j)
            out.at(c, j) = f.at(c, j) * lam.at(0, j) / kTwoPi;
    return out;
}

} // namespace

GridField nonlinearity(const SphereField& u) {
    GridField lam = lambda_raw(u);
    const GridField& f = u.field();
    GridField out(f.grid(), f.components());
    for (int c = 0; c < f.components(); ++c)
        for (int j = 0; j < f.size(); ++j)
            out.at(c, j) = f.at(c, j) * lam.at(0, j) / kTwoPi;
    return out;
}

StepResult step(const GridField& u, double dt, Scheme scheme, bool projection) {
    const CircleGrid& g = u.grid();
    SpectralField uh = analyze(u);
    SpectralField nh = analyze(scaled_nonlinearity(u));
    SpectralField next(g, u.components());
    for (int c = 0; c < u.components(); ++c)
        for (int k = -uh.max_mode(); k <= uh.max_mode(); ++k) {
            double ak = std::abs(double(k));
            std::complex<double> z = uh.at(c, k) + dt * nh.at(c, k);
            switch (scheme) {
                case Scheme::exponential: next.at(c, k) = std::exp(-ak * dt) * z; break;
                case Scheme::semi_implicit: next.at(c, k) = z / (1.0 + ak * dt); break;
                case Scheme::explicit_reference:
                    next.at(c, k) = z - dt * ak * uh.at(c, k);
                    break;
            }
        }
    GridField v = synthesize(next, g);
    if (projection) {
        for (int j = 0; j < v.size(); ++j) {
            double r2 = 0.0;
            for (int c = 0; c < v.components(); ++c) r2 += v.at(c, j) * v.at(c, j);
            double r = std::sqrt(r2);
            if (r == 0.0)
                throw std::runtime_error("step: field vanished at a node during projection");
            for (int c = 0; c < v.components(); ++c) v.at(c, j) /= r;
        }
    }
    StepResult out{v, v};
    out.increment -= u;
    return out;
}

GridField initial_data(const FlowConfig& config) {
    config.validate();
    CircleGrid g(config.grid_size);
    Rng rng(config.seed);
    if (config.initial_family == "identity") return degree_map(g, 1).field();
    if (config.initial_family == "degree") return degree_map(g, config.degree).field();
    if (config.initial_family == "perturbed_constant")
        return perturbed_constant(g, config.components, config.band, config.amplitude, rng)
            .field();
    return projected_highband(g, config.components, config.band, rng).field();
}

namespace {

DiagnosticsRecord diagnostics_at(const GridField& u, const GridField& u_t, double t) {
    // tolerant wrap: diagnostics must not abort a deliberately drifting run
    SphereField su = SphereField::trusted(u, 0.5);
    DiagnosticsRecord r;
    r.t = t;
    r.energy = half_energy(analyze(u));
    double d2 = u_t.l2_norm();
    r.dissipation = d2 * d2;
    r.sphere_drift = SphereField::drift(u);
    OrthogonalityResidual orth = orthogonality_residual(su, u_t);
    r.orth_residual = orth.tangential;
    r.harmonic_residual = harmonic_residual(su);
    double er = 0.0;
    for (int c = 0; c < 16; ++c)
        er = std::max(er, local_energy(su, kTwoPi * c / 16.0, 0.25));
    r.eps_r = er;
    return r;
}

} // namespace

RunResult run(const FlowConfig& config) {
    config.validate();
    GridField u = initial_data(config);
    RunResult res{u, 0.0, {}, {}, "", false};
    res.snapshots.push_back({0.0, u});

    GridField zero(u.grid(), u.components());
    res.diagnostics.push_back(diagnostics_at(u, zero, 0.0));

    const int nsteps = int(std::floor(config.horizon / config.dt + 0.5));
    double energy_prev = res.diagnostics.front().energy;
    for (int n = 1; n <= nsteps; ++n) {
        StepResult s{u, GridField(u.grid(), u.components())};
        try {
            s = step(u, config.dt, config.scheme, config.projection);
        } catch (const std::runtime_error&) {
            res.failed = true;
            res.halt_event = "projection_degenerate";
            break;
        }
        u = s.u;
        double t = n * config.dt;
        double energy = half_energy(analyze(u));
        if (!std::isfinite(energy)) {
            res.failed = true;
            res.halt_event = "nan";
            break;
        }
        bool record = n % config.diag_cadence == 0 || n == nsteps;
        if (record) {
            GridField ut = s.increment;
            ut *= 1.0 / config.dt;
            res.diagnostics.push_back(diagnostics_at(u, ut, t));
        }
        if (config.snapshot_cadence > 0 && n % config.snapshot_cadence == 0)
            res.snapshots.push_back({t, u});
        if (!config.projection && SphereField::drift(u) > config.drift_tolerance) {
            res.halt_event = "sphere_drift";
            res.final_u = u;
            res.final_time = t;
            break;
        }
        if (energy > energy_prev + config.energy_tolerance) {
            res.halt_event = "energy_increase";
            res.final_u = u;
            res.final_time = t;
            break;
        }
        energy_prev = energy;
        res.final_u = u;
        res.final_time = t;
    }
    if (res.snapshots.back().t != res.final_time)
        res.snapshots.push_back({res.final_time, res.final_u});
    return res;
}

OrthogonalityResidual orthogonality_residual(const SphereField& u, const GridField& u_t) {
    const GridField& f = u.field();
    const CircleGrid& g = f.grid();
    GridField lap = synthesize(fractional_laplacian(analyze(f), 0.5), g);
    GridField lam = lambda_raw(u);
    GridField r(g, f.components());
    for (int c = 0; c < f.components(); ++c)
        for (int j = 0; j < f.size(); ++j)
            r.at(c, j) = u_t.at(c, j) + lap.at(c, j) - f.at(c, j) * lam.at(0, j) / kTwoPi;
    OrthogonalityResidual out;
    double tan2 = 0.0, nor2 = 0.0;
    for (int j = 0; j < f.size(); ++j) {
        double ur = 0.0;
        for (int c = 0; c < f.components(); ++c) ur += f.at(c, j) * r.at(c, j);
        for (int c = 0; c < f.components(); ++c) {
            double tc = r.at(c, j) - ur * f.at(c, j);
            tan2 += tc * tc;
        }
        nor2 += ur * ur;
    }
    out.tangential = std::sqrt(tan2 * g.weight());
    out.normal = std::sqrt(nor2 * g.weight());
    return out;
}

double harmonic_residual(const SphereField& u) {
    const GridField& f = u.field();
    const CircleGrid& g = f.grid();
    GridField lap = synthesize(fractional_laplacian(analyze(f), 0.5), g);
    double acc = 0.0;
    for (int a = 0; a < f.components(); ++a)
        for (int b = a + 1; b < f.components(); ++b)
            for (int j = 0; j < f.size(); ++j) {
                double w = f.at(a, j) * lap.at(b, j) - f.at(b, j) * lap.at(a, j);
                acc += w * w;
            }
    return std::sqrt(acc * g.weight());
}

double local_energy(const SphereField& u, double x0, double radius) {
    const GridField& f = u.field();
    const CircleGrid& g = f.grid();
    GridField q = synthesize(fractional_laplacian(analyze(f), 0.25), g);
    double acc = 0.0;
    for (int j = 0; j < f.size(); ++j) {
        if (arc_distance(g.node(j), x0) > radius) continue;
        double e = 0.0;
        for (int c = 0; c < f.components(); ++c) e += q.at(c, j) * q.at(c, j);
        acc += e;
    }
    return 0.5 * acc * g.weight();
}

double epsilon_of_r(const std::vector<Snapshot>& snapshots, double radius) {
    double worst = 0.0;
    for (const Snapshot& s : snapshots) {
        SphereField u = SphereField::trusted(s.u, 0.5);
        for (int c = 0; c < 16; ++c) {
            double x0 = kTwoPi * c / 16.0;
            worst = std::max(worst, local_energy(u, x0, radius));
        }
    }
    return worst;
}

TwinReport twin_run(const GridField& u0, Scheme scheme_a, Scheme scheme_b,
                    const std::vector<double>& dts, double horizon) {
    TwinReport rep;
    for (double dt : dts) {
        GridField ua = u0, ub = u0;
        const int nsteps = int(std::floor(horizon / dt + 0.5));
        double sup = 0.0;
        try {
            for (int n = 1; n <= nsteps; ++n) {
                ua = step(ua, dt, scheme_a, true).u;
                ub = step(ub, dt, scheme_b, true).u;
                GridField d = ua;
                d -= ub;
                sup = std::max(sup, d.l2_norm());
            }
        } catch (const std::runtime_error& e) {
            rep.event = e.what();
        }
        rep.dts.push_back(dt);
        rep.sup_divergence.push_back(sup);
    }
    return rep;
}

LinearizedFlow::LinearizedFlow(const SphereField& u)
    : u_(u), lambda_(lambda_raw(u)), du_(frac_gradient_kernel(u.field(), 0.5)) {
    lambda_ *= 1.0 / kTwoPi;
}

GridField LinearizedFlow::step(const GridField& h, double dt) const {
    const GridField& f = u_.field();
    const CircleGrid& g = f.grid();
    OffDiagonalKernel dh = frac_gradient_kernel(h, 0.5);
    GridField p = pair(du_, dh); // d_{1/2}u . d_{1/2}h
    GridField rhs(g, h.components());
    for (int c = 0; c < h.components(); ++c)
        for (int j = 0; j < h.size(); ++j)
            rhs.at(c, j) = h.at(c, j) * lambda_.at(0, j)
                           + f.at(c, j) * p.at(0, j) / kPi;
    SpectralField hh = analyze(h);
    SpectralField nh = analyze(rhs);
    SpectralField next(g, h.components());
    for (int c = 0; c < h.components(); ++c)
        for (int k = -hh.max_mode(); k <= hh.max_mode(); ++k) {
            double ak = std::abs(double(k));
            next.at(c, k) = std::exp(-ak * dt) * (hh.at(c, k) + dt * nh.at(c, k));
        }
    return synthesize(next, g);
}

double LinearizedFlow::growth_constant() const {
    return lambda_.sup_norm() + 1.0;
}

LongTimeReport long_time_harness(const FlowConfig& config, double energy_threshold) {
    config.validate();
    GridField u = initial_data(config);
    LongTimeReport rep;
    double e0 = half_energy(analyze(u));
    if (e0 > energy_threshold)
        throw std::invalid_argument("long_time_harness: initial energy above threshold");

    const int nsteps = int(std::floor(config.horizon / config.dt + 0.5));
    const int window = std::max(1, int(std::floor(1.0 / config.dt + 0.5)));
    const int sample_every = std::max(window, nsteps / 10);
    std::vector<double> diss_hist; // per-step ||u_t||^2 * dt
    diss_hist.reserve(nsteps);

    auto record = [&](double t, const GridField& v) {
        SphereField sv = SphereField::trusted(v, 1e-2);
        rep.times.push_back(t);
        rep.energy.push_back(half_energy(analyze(v)));
        std::vector<double> mu = v.mean();
        GridField w = v;
        for (int c = 0; c < w.components(); ++c)
            for (int j = 0; j < w.size(); ++j) w.at(c, j) -= mu[c];
        rep.h_half_to_mean.push_back(sobolev_norm(analyze(w), 0.5, false));
        rep.harmonic_residuals.push_back(harmonic_residual(sv));
        double tail = 0.0;
        int avail = std::min<int>(window, int(diss_hist.size()));
        for (int q = int(diss_hist.size()) - avail; q < int(diss_hist.size()); ++q)
            tail += diss_hist[q];
        rep.dissipation_tails.push_back(tail);
    };

    record(0.0, u);
    for (int n = 1; n <= nsteps; ++n) {
        StepResult s = step(u, config.dt, config.scheme, config.projection);
        u = s.u;
        double d = s.increment.l2_norm() / config.dt;
        diss_hist.push_back(d * d * config.dt);
        if (n % sample_every == 0 || n == nsteps) record(n * config.dt, u);
    }

    double ef = rep.energy.back();
    double hf = rep.harmonic_residuals.back();
    double mf = rep.h_half_to_mean.back();
    if (ef <= 1e-6 && hf <= 1e-4 && mf <= 1e-3) {
        rep.verdict = "pass";
    } else if (ef < rep.energy.front() && hf <= rep.harmonic_residuals.front() &&
               mf <= rep.h_half_to_mean.front()) {
        rep.verdict = "inconclusive"; // trending down but the horizon was too short
    } else {
        rep.verdict = "fail";
    }
    return rep;
}

} // namespace halflow
