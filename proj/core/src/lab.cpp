#include "halflow/lab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "halflow/cjk.hpp"
#include "halflow/offdiag.hpp"

namespace halflow {

GridField make_sample(const SampleFamily& fam, const CircleGrid& grid, Rng& rng) {
    if (fam.generator == "band_limited")
        return random_band_limited(grid, fam.components, fam.band, rng, fam.amplitude);
    if (fam.generator == "sphere_perturbed")
        return perturbed_constant(grid, std::max(2, fam.components), fam.band,
                                  fam.amplitude, rng)
            .field();
    if (fam.generator == "highband")
        return projected_highband(grid, std::max(2, fam.components), fam.band, rng)
            .field();
    throw std::invalid_argument("make_sample: unknown generator " + fam.generator);
}

namespace {

double l4_norm(const GridField& u) {
    double acc = 0.0;
    for (int j = 0; j < u.size(); ++j) {
        double m2 = 0.0;
        for (int c = 0; c < u.components(); ++c) m2 += u.at(c, j) * u.at(c, j);
        acc += m2 * m2;
    }
    return std::pow(acc * u.grid().weight(), 0.25);
}

/// |d_{1/2}f|^2(x) = int |f(x)-f(y)|^2/|x-y|^2 dy with the analytic
/// diagonal limit |f'(x)|^2 (same quadrature lambda_raw uses).
GridField dsq_density(const GridField& f) {
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

double integral(const GridField& f) {
    double acc = 0.0;
    for (int j = 0; j < f.size(); ++j) acc += f.at(0, j);
    return acc * f.grid().weight();
}

GridField subtract_mean(const GridField& f) {
    GridField out = f;
    std::vector<double> mu = f.mean();
    for (int c = 0; c < f.components(); ++c)
        for (int j = 0; j < f.size(); ++j) out.at(c, j) -= mu[c];
    return out;
}

} // namespace

RatioReport ladyzhenskaya_report(const SampleFamily& fam) {
    RatioReport rep;
    rep.name = "ladyzhenskaya";
    CircleGrid grid(fam.grid_size);
    Rng rng(fam.seed);
    for (int i = 0; i < fam.count; ++i) {
        GridField u = make_sample(fam, grid, rng);
        SpectralField c = analyze(u);
        double h14 = sobolev_norm(c, 0.25, false);
        double l2 = sobolev_norm(c, 0.0, false);
        double h12 = sobolev_norm(c, 0.5, false);
        SampleRow row;
        row.lhs = h14 * h14;
        row.rhs = l2 * h12;
        if (row.lhs > row.rhs * (1.0 + 1e-10)) ++rep.violations;
        row.ratio = h14 > 0.0 ? l4_norm(u) / h14 : 0.0;
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
        rep.samples.push_back(row);
    }
    rep.verdict = rep.violations == 0 ? "pass" : "fail";
    return rep;
}

RatioReport fracgrad_constant(const SampleFamily& fam) {
    RatioReport rep;
    rep.name = "fracgrad_constant";
    CircleGrid grid(fam.grid_size);
    Rng rng(fam.seed);
    for (int i = 0; i < fam.count; ++i) {
        GridField u = make_sample(fam, grid, rng);
        double rhs = sobolev_norm(analyze(u), 0.5, true);
        rhs *= rhs; // ||(-Delta)^{1/4}u||_{L^2}^2
        if (rhs == 0.0) {
            rep.notes.push_back("sample skipped: constant input");
            continue;
        }
        double lhs = integral(dsq_density(u));
        SampleRow row{lhs, rhs, lhs / rhs};
        if (std::fabs(row.ratio - kTwoPi) > 1e-3 * kTwoPi) ++rep.violations;
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
        rep.samples.push_back(row);
    }
    rep.verdict = rep.violations == 0 ? "pass" : "fail";
    return rep;
}

RatioReport wente_report(const SphereField& u_source, const SampleFamily& g_family) {
    RatioReport rep;
    rep.name = "wente";
    OffDiagonalKernel F = omega_potential(u_source);
    double fnorm = offdiag_l2_norm(F);
    GridField div = frac_divergence(F, 0.5);
    double div_rel = fnorm > 0.0 ? div.sup_norm() / fnorm : 0.0;
    if (div_rel > 1e-3) {
        rep.verdict = "refused";
        rep.notes.push_back("divergence precondition violated: relative residual "
                            + std::to_string(div_rel));
        return rep;
    }
    rep.notes.push_back("divergence residual (relative): " + std::to_string(div_rel));
    if (fnorm == 0.0) {
        rep.verdict = "pass";
        rep.notes.push_back("F = 0: all ratios skipped");
        return rep;
    }
    const CircleGrid& grid = u_source.grid();
    Rng rng(g_family.seed);
    SampleFamily scalar = g_family;
    scalar.components = 1;
    double max_hom = 0.0;
    for (int i = 0; i < g_family.count; ++i) {
        GridField g = make_sample(scalar, grid, rng);
        double gnorm = sobolev_norm(analyze(g), 0.5, false);
        if (gnorm == 0.0) continue;
        OffDiagonalKernel dg = frac_gradient_kernel(g, 0.5);
        GridField w = subtract_mean(pair_matrix(F, dg));
        SpectralField wc = analyze(w);
        SampleRow row;
        row.lhs = sobolev_norm(wc, -0.5, false);
        row.rhs = fnorm * gnorm;
        row.ratio = row.lhs / row.rhs;
        if (!std::isfinite(row.ratio)) ++rep.violations;
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
        max_hom = std::max(max_hom, sobolev_norm(wc, -0.5, true) / row.rhs);
        rep.samples.push_back(row);
    }
    rep.notes.push_back("max ratio with homogeneous H^{-1/2}: " + std::to_string(max_hom));
    rep.verdict = rep.violations == 0 ? "pass" : "fail";
    return rep;
}

RatioReport product_regularity_report(const SampleFamily& u_family,
                                      const SampleFamily& v_family, double s,
                                      double eps) {
    if (s <= 0.0 || s >= 1.5)
        throw std::invalid_argument("product_regularity_report: s must be in (0, 3/2)");
    if (eps <= 0.0) throw std::invalid_argument("product_regularity_report: eps > 0 required");
    RatioReport rep;
    rep.name = "product_regularity";
    CircleGrid grid(u_family.grid_size);
    CjkTable table = build_table(std::max(u_family.band, v_family.band));
    Rng rng_u(u_family.seed);
    Rng rng_v(v_family.seed);
    for (int i = 0; i < u_family.count; ++i) {
        SpectralField cu = analyze(make_sample(u_family, grid, rng_u));
        SpectralField cv = analyze(make_sample(v_family, grid, rng_v));
        SpectralField w = product_spectrum(cu, cv, table);
        double lhs = sobolev_norm(w, s, true);
        // ||(-Delta)^a f||_{L^2} is the homogeneous norm of order 2a
        auto da = [](const SpectralField& c, double a) {
            return sobolev_norm(c, 2.0 * a, true);
        };
        double rhs1 = da(cu, 0.25 + s / 2 + eps) * da(cv, 0.5)
                      + da(cu, 0.5) * da(cv, 0.25 + s / 2 + eps);
        double rhs2 = da(cu, 0.25 + s / 2 + 2 * eps) * da(cv, 0.5 - eps)
                      + da(cu, 0.5 - eps) * da(cv, 0.25 + s / 2 + 2 * eps);
        for (double rhs : {rhs1, rhs2}) {
            SampleRow row{lhs, rhs, rhs > 0.0 ? lhs / rhs : 0.0};
            if (!std::isfinite(row.ratio)) ++rep.violations;
            rep.max_ratio = std::max(rep.max_ratio, row.ratio);
            rep.samples.push_back(row);
        }
    }
    rep.notes.push_back("rows alternate between the two right-hand-side variants");
    rep.verdict = rep.violations == 0 ? "pass" : "fail";
    return rep;
}

RatioReport holder_laplacian_probe(double alpha, double s,
                                   const std::vector<int>& resolutions) {
    if (alpha <= 0.0 || alpha >= 1.0)
        throw std::domain_error("holder_laplacian_probe: alpha must be in (0,1)");
    RatioReport rep;
    rep.name = "holder_laplacian_probe";
    std::vector<double> sups;
    for (int n : resolutions) {
        CircleGrid grid(n);
        std::vector<double> u(n);
        for (int j = 0; j < n; ++j)
            u[j] = std::pow(std::fabs(std::sin(0.5 * grid.node(j))), alpha);
        std::vector<double> dinv(n, 0.0);
        for (int h = 1; h < n; ++h)
            dinv[h] = std::pow(grid.node_distance(0, h), -(1.0 + 2.0 * s));
        double sup = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int h = 1; h < n / 2; ++h) {
                int jp = i + h >= n ? i + h - n : i + h;
                int jm = i - h < 0 ? i - h + n : i - h;
                acc += (2.0 * u[i] - u[jp] - u[jm]) * dinv[h];
            }
            int ja = i + n / 2 >= n ? i - n / 2 : i + n / 2;
            acc += (u[i] - u[ja]) * dinv[n / 2];
            sup = std::max(sup, std::fabs(acc * grid.weight()));
        }
        sups.push_back(sup);
        double change = sups.size() > 1
                            ? std::fabs(sup - sups[sups.size() - 2]) / sup
                            : 0.0;
        rep.samples.push_back({double(n), sup, change});
    }
    bool stable = true;
    const size_t m = sups.size();
    if (m >= 3) {
        stable = std::fabs(sups[m - 1] - sups[m - 2]) <= 0.10 * sups[m - 1]
                 && std::fabs(sups[m - 2] - sups[m - 3]) <= 0.10 * sups[m - 2];
    }
    bool predicted = 2.0 * s < alpha;
    rep.notes.push_back(stable ? "stabilizes" : "grows");
    rep.resolution_stable = stable;
    rep.verdict = stable == predicted ? "pass" : "fail";
    rep.max_ratio = sups.back();
    return rep;
}

namespace {

// inverse stereographic projection of Pi(theta) = cos(theta)/(1+sin(theta))
double inverse_projection(double x) { return 2.0 * std::atan2(1.0 - x, 1.0 + x); }

struct PointEvaluator {
    std::vector<std::complex<double>> coeffs; // modes 0..band per component
    int components;
    int band;

    explicit PointEvaluator(const GridField& u) {
        SpectralField c = analyze(u);
        components = c.components();
        band = 0;
        for (int comp = 0; comp < components; ++comp)
            for (int k = 1; k <= c.max_mode(); ++k)
                if (c.at(comp, k) != std::complex<double>{0.0, 0.0})
                    band = std::max(band, k);
        coeffs.assign(size_t(components) * (band + 1), {0.0, 0.0});
        for (int comp = 0; comp < components; ++comp)
            for (int k = 0; k <= band; ++k)
                coeffs[size_t(comp) * (band + 1) + k] = c.at(comp, k);
    }

    void eval(double theta, double* out) const {
        std::complex<double> e{std::cos(theta), std::sin(theta)};
        for (int comp = 0; comp < components; ++comp) {
            const std::complex<double>* a = &coeffs[size_t(comp) * (band + 1)];
            std::complex<double> z{1.0, 0.0};
            double acc = a[0].real();
            for (int k = 1; k <= band; ++k) {
                z *= e;
                acc += 2.0 * (a[k] * z).real();
            }
            out[comp] = acc;
        }
    }

    void eval_derivative(double theta, double* out) const {
        std::complex<double> e{std::cos(theta), std::sin(theta)};
        for (int comp = 0; comp < components; ++comp) {
            const std::complex<double>* a = &coeffs[size_t(comp) * (band + 1)];
            std::complex<double> z{1.0, 0.0};
            double acc = 0.0;
            for (int k = 1; k <= band; ++k) {
                z *= e;
                acc += 2.0 * (a[k] * z * std::complex<double>{0.0, double(k)}).real();
            }
            out[comp] = acc;
        }
    }
};

} // namespace

RatioReport stereographic_check(const GridField& u, const std::vector<double>& x0_list,
                                double truncation) {
    RatioReport rep;
    rep.name = "stereographic";
    const CircleGrid& grid = u.grid();
    const int nc = u.components();
    const double pole = -kPi / 2.0;
    PointEvaluator ev(u);

    const double delta = 1e-3;
    const long half = long(truncation / delta);
    // sample v = u o Pi^{-1} on the line grid once, reused for every base point
    std::vector<double> v(size_t(2 * half + 1) * nc);
    double supv2 = 0.0;
    for (long q = -half; q <= half; ++q) {
        double* row = &v[size_t(q + half) * nc];
        ev.eval(inverse_projection(q * delta), row);
        double m2 = 0.0;
        for (int c = 0; c < nc; ++c) m2 += row[c] * row[c];
        supv2 = std::max(supv2, m2);
    }

    std::vector<double> ux0(nc), up(nc);
    for (double x0 : x0_list) {
        if (arc_distance(x0, pole) < 0.2) {
            rep.notes.push_back("base point refused: too close to the pole");
            ++rep.violations;
            continue;
        }
        double xhat = std::cos(x0) / (1.0 + std::sin(x0));
        if (std::fabs(xhat) >= truncation / 2)
            throw std::invalid_argument("stereographic_check: truncation too small");
        ev.eval(x0, ux0.data());
        ev.eval_derivative(x0, up.data());
        double up2 = 0.0;
        for (int c = 0; c < nc; ++c) up2 += up[c] * up[c];

        double lhs = 0.0;
        for (long q = -half; q <= half; ++q) {
            double d = xhat - q * delta;
            const double* row = &v[size_t(q + half) * nc];
            if (std::fabs(d) < 0.5 * delta) {
                // removable singularity: |v'(xhat)|^2 = |u'(x0)|^2 (1+sin x0)^2
                double vp2 = up2 * (1.0 + std::sin(x0)) * (1.0 + std::sin(x0));
                lhs += vp2 * delta;
                continue;
            }
            double m2 = 0.0;
            for (int c = 0; c < nc; ++c) {
                double dc = ux0[c] - row[c];
                m2 += dc * dc;
            }
            lhs += m2 / (d * d) * delta;
        }

        double rhs = 0.0;
        for (int j = 0; j < grid.size(); ++j) {
            double dist = circle_distance(x0, grid.node(j));
            if (dist < 1e-9) {
                rhs += up2; // diagonal cell: base point is a grid node
                continue;
            }
            double m2 = 0.0;
            for (int c = 0; c < nc; ++c) {
                double dc = ux0[c] - u.at(c, j);
                m2 += dc * dc;
            }
            rhs += m2 / (dist * dist);
        }
        rhs *= grid.weight() * (1.0 + std::sin(x0));

        double tail = 4.0 * supv2 * (1.0 / (truncation - std::fabs(xhat)) + 1.0 / truncation);
        double budget = 1e-3 * std::max(1.0, rhs) + tail;
        SampleRow row{lhs, rhs, std::fabs(lhs - rhs) / budget};
        if (row.ratio > 1.0) ++rep.violations;
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
        rep.samples.push_back(row);
    }
    rep.verdict = rep.violations == 0 ? "pass" : "fail";
    return rep;
}

namespace {

GridField mollify(const GridField& u, double eps) {
    if (eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("mollify: eps must be in (0,1)");
    const CircleGrid& g = u.grid();
    const double dx = g.weight();
    const int reach = int(std::floor(eps / dx));
    std::vector<double> w(2 * reach + 1, 0.0);
    double total = 0.0;
    for (int o = -reach; o <= reach; ++o) {
        double t = o * dx / eps;
        if (std::fabs(t) < 1.0) w[o + reach] = std::exp(-1.0 / (1.0 - t * t));
        total += w[o + reach];
    }
    for (double& x : w) x /= total;
    GridField out(g, u.components());
    const int n = g.size();
    for (int c = 0; c < u.components(); ++c)
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int o = -reach; o <= reach; ++o) {
                int j = i - o;
                if (j < 0) j += n;
                if (j >= n) j -= n;
                acc += w[o + reach] * u.at(c, j);
            }
            out.at(c, i) = acc;
        }
    return out;
}

} // namespace

SphereField mollify_project(const SphereField& u, double eps) {
    GridField v = mollify(u.field(), eps);
    for (int j = 0; j < v.size(); ++j) {
        double r2 = 0.0;
        for (int c = 0; c < v.components(); ++c) r2 += v.at(c, j) * v.at(c, j);
        if (r2 == 0.0)
            throw std::runtime_error("mollify_project: convolution vanished at a node; "
                                     "eps too large for this map");
    }
    return SphereField::project(v);
}

RatioReport approximation_report(const SphereField& u,
                                 const std::vector<double>& eps_schedule) {
    RatioReport rep;
    rep.name = "mollify_project";
    const double dx = u.grid().weight();
    double prev_dist = -1.0, prev_err = -1.0;
    bool monotone = true;
    for (double eps : eps_schedule) {
        if (eps < 4.0 * dx)
            rep.notes.push_back("eps below the grid resolution floor (4 spacings)");
        GridField conv = mollify(u.field(), eps);
        double dist = SphereField::drift(conv);
        SphereField ue = mollify_project(u, eps);
        GridField diff = ue.field();
        diff -= u.field();
        double err = sobolev_norm(analyze(diff), 0.5, false);
        // roundoff allowance: converged indicators may jitter at 1e-15
        const double slack = 1e-12;
        if (prev_dist >= 0.0 && (dist > prev_dist + slack || err > prev_err + slack))
            monotone = false;
        prev_dist = dist;
        prev_err = err;
        rep.samples.push_back({dist, err, eps});
        rep.max_ratio = std::max(rep.max_ratio, err);
    }
    rep.verdict = monotone ? "pass" : "fail";
    return rep;
}

RatioReport local_l4_monitor(const std::vector<Snapshot>& trajectory, double x0,
                             double radius) {
    RatioReport rep;
    rep.name = "local_l4";
    if (trajectory.size() < 2)
        throw std::invalid_argument("local_l4_monitor: need at least two snapshots");
    const CircleGrid& g = trajectory.front().u.grid();
    std::vector<double> a, b, d, loc;
    for (const Snapshot& s : trajectory) {
        SpectralField c = analyze(s.u);
        GridField q14 = synthesize(fractional_laplacian(c, 0.25), g);
        GridField q12 = synthesize(fractional_laplacian(c, 0.5), g);
        double ai = 0.0, bi = 0.0, di = 0.0, li = 0.0;
        for (int j = 0; j < g.size(); ++j) {
            double m14 = 0.0, m12 = 0.0;
            for (int cc = 0; cc < s.u.components(); ++cc) {
                m14 += q14.at(cc, j) * q14.at(cc, j);
                m12 += q12.at(cc, j) * q12.at(cc, j);
            }
            double arc = arc_distance(g.node(j), x0);
            if (arc <= 0.75 * radius) ai += m14 * m14;
            if (arc <= radius) {
                bi += m12;
                li += m14;
            }
            di += m14;
        }
        a.push_back(ai * g.weight());
        b.push_back(bi * g.weight());
        d.push_back(di * g.weight());
        loc.push_back(li * g.weight());
    }
    double lhs = 0.0, ib = 0.0, id = 0.0, sup_loc = 0.0;
    for (size_t i = 0; i + 1 < trajectory.size(); ++i) {
        double dt = trajectory[i + 1].t - trajectory[i].t;
        lhs += 0.5 * (a[i] + a[i + 1]) * dt;
        ib += 0.5 * (b[i] + b[i + 1]) * dt;
        id += 0.5 * (d[i] + d[i + 1]) * dt;
    }
    for (double l : loc) sup_loc = std::max(sup_loc, l);
    double rhs = sup_loc * (ib + id / (radius * radius));
    double ratio = rhs > 0.0 ? lhs / rhs : 0.0;
    rep.samples.push_back({lhs, rhs, ratio});
    rep.max_ratio = ratio;
    rep.verdict = std::isfinite(ratio) ? "pass" : "fail";
    return rep;
}

RatioReport local_energy_monitor(const std::vector<Snapshot>& trajectory, double x0,
                                 double radius) {
    if (radius <= 0.0 || radius >= 0.5)
        throw std::invalid_argument("local_energy_monitor: radius must be in (0, 1/2)");
    RatioReport rep;
    rep.name = "local_energy";
    if (trajectory.empty())
        throw std::invalid_argument("local_energy_monitor: empty trajectory");
    SphereField u0 = SphereField::trusted(trajectory.front().u, 1e-2);
    double e2r0 = local_energy(u0, x0, 2.0 * radius);
    double e0 = half_energy(analyze(trajectory.front().u));
    for (const Snapshot& s : trajectory) {
        if (s.t <= 0.0) continue;
        SphereField u = SphereField::trusted(s.u, 1e-2);
        double er = local_energy(u, x0, radius);
        double denom = (s.t / (radius * radius) + std::sqrt(s.t) / radius) * e0;
        double ratio = denom > 0.0 ? (er - e2r0) / denom : 0.0;
        rep.samples.push_back({er, e2r0 + denom, ratio});
        if (!std::isfinite(ratio)) ++rep.violations;
        rep.max_ratio = std::max(rep.max_ratio, ratio);
    }
    rep.verdict = rep.violations == 0 ? "pass" : "fail";
    return rep;
}

namespace {

// smooth cutoff: 1 for t <= 1, 0 for t >= 2
double chi(double t) {
    if (t <= 1.0) return 1.0;
    if (t >= 2.0) return 0.0;
    double a = std::exp(-1.0 / (2.0 - t));
    double b = std::exp(-1.0 / (t - 1.0));
    return a / (a + b);
}

double dyadic_window(double ak, int j) {
    double scale = std::pow(2.0, double(j));
    double inner = j == 0 ? (ak > 0.0 ? 0.0 : 1.0) : chi(ak / (scale / 2.0));
    return chi(ak / scale) - inner;
}

} // namespace

GridField lp_block(const SpectralField& f, int j, const CircleGrid& grid) {
    SpectralField out = f;
    for (int c = 0; c < f.components(); ++c)
        for (int k = -f.max_mode(); k <= f.max_mode(); ++k) {
            double w = k == 0 ? 0.0 : dyadic_window(std::fabs(double(k)), j);
            out.at(c, k) = f.at(c, k) * w;
        }
    return synthesize(out, grid);
}

RatioReport norm_equivalence_report(const SampleFamily& fam, double s, double p,
                                    double q) {
    if (!(p > q / (1.0 + s * q)))
        throw std::invalid_argument(
            "norm_equivalence_report: hypothesis p > q/(1+sq) violated");
    RatioReport rep;
    rep.name = "norm_equivalence";
    CircleGrid grid(fam.grid_size);
    Rng rng(fam.seed);
    const int n = grid.size();
    std::vector<double> dinv(n, 0.0);
    for (int h = 1; h < n; ++h)
        dinv[h] = std::pow(grid.node_distance(0, h), -(1.0 + s * q));
    int jmax = 0;
    while ((1 << jmax) < grid.max_mode()) ++jmax;
    ++jmax;
    double min_ratio = 0.0;
    for (int i = 0; i < fam.count; ++i) {
        GridField f = make_sample(fam, grid, rng);
        // gagliardo-type side via the double quadrature
        double wacc = 0.0;
        for (int a = 0; a < n; ++a) {
            double di = 0.0;
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                int h = a - b;
                if (h < 0) h += n;
                double m2 = 0.0;
                for (int c = 0; c < f.components(); ++c) {
                    double dc = f.at(c, a) - f.at(c, b);
                    m2 += dc * dc;
                }
                double mq = q == 2.0 ? m2 : std::pow(m2, 0.5 * q);
                di += mq * dinv[h];
            }
            di = std::pow(di * grid.weight(), 1.0 / q);
            wacc += std::pow(di, p);
        }
        double wnorm = std::pow(wacc * grid.weight(), 1.0 / p);
        // littlewood-paley side
        SpectralField c = analyze(f);
        std::vector<GridField> blocks;
        blocks.reserve(jmax + 1);
        for (int j = 0; j <= jmax; ++j) blocks.push_back(lp_block(c, j, grid));
        double facc = 0.0;
        for (int a = 0; a < n; ++a) {
            double gi = 0.0;
            for (int j = 0; j <= jmax; ++j) {
                double m2 = 0.0;
                for (int cc = 0; cc < f.components(); ++cc)
                    m2 += blocks[j].at(cc, a) * blocks[j].at(cc, a);
                gi += std::pow(2.0, double(j) * s * q) * std::pow(m2, 0.5 * q);
            }
            facc += std::pow(gi, p / q);
        }
        double fnorm = std::pow(facc * grid.weight(), 1.0 / p);
        if (fnorm == 0.0) {
            rep.notes.push_back("sample skipped: constant input");
            continue;
        }
        double ratio = wnorm / fnorm;
        if (!std::isfinite(ratio)) ++rep.violations;
        rep.max_ratio = std::max(rep.max_ratio, ratio);
        min_ratio = min_ratio == 0.0 ? ratio : std::min(min_ratio, ratio);
        rep.samples.push_back({wnorm, fnorm, ratio});
    }
    if (min_ratio > 0.0)
        rep.notes.push_back("two-sided spread: " + std::to_string(rep.max_ratio / min_ratio));
    rep.verdict = rep.violations == 0 ? "pass" : "fail";
    return rep;
}

} // namespace halflow
