#include "halflow/offdiag.hpp"

#include <cmath>
#include <stdexcept>

namespace halflow {

namespace {

// |x_0 - x_h|^{-e} as a function of the offset, folded to min(h, n-h) so the
// table is exactly symmetric (sin(pi h/n) and sin(pi (n-h)/n) differ by an ulp)
std::vector<double> inverse_distance_table(const CircleGrid& g, double e) {
    const int n = g.size();
    std::vector<double> dinv(n, 0.0);
    for (int h = 1; h < n; ++h) {
        int m = h <= n - h ? h : n - h;
        dinv[h] = std::pow(g.node_distance(0, m), -e);
    }
    return dinv;
}

} // namespace

OffDiagonalKernel::OffDiagonalKernel(const CircleGrid& grid, int components)
    : grid_(grid), m_(components),
      v_(size_t(components) * grid.size() * grid.size(), 0.0) {
    if (components < 1)
        throw std::invalid_argument("OffDiagonalKernel: components must be >= 1");
}

OffDiagonalKernel& OffDiagonalKernel::operator+=(const OffDiagonalKernel& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}
OffDiagonalKernel& OffDiagonalKernel::operator-=(const OffDiagonalKernel& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}
OffDiagonalKernel& OffDiagonalKernel::operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
}

OffDiagonalKernel frac_gradient_kernel(const GridField& f, double s) {
    if (s < 0.0 || s >= 1.0)
        throw std::invalid_argument("frac_gradient_kernel: s must be in [0,1)");
    const CircleGrid& g = f.grid();
    const int n = g.size();
    OffDiagonalKernel out(g, f.components());
    // precompute |x_i - x_j|^{-s}, a function of i - j only
    std::vector<double> dinv = inverse_distance_table(g, s);
    for (int c = 0; c < f.components(); ++c)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                int h = i - j; if (h < 0) h += n;
                out.at(c, i, j) = (f.at(c, i) - f.at(c, j)) * dinv[h];
            }
    return out;
}

GridField pair(const OffDiagonalKernel& F, const OffDiagonalKernel& G,
               const GridField* diag) {
    if (F.components() != G.components() || F.size() != G.size())
        throw std::invalid_argument("pair: incompatible kernel shapes");
    const CircleGrid& g = F.grid();
    const int n = g.size();
    const int m = F.components();
    std::vector<double> dinv = inverse_distance_table(g, 1.0);
    GridField out(g, 1);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int h = i - j; if (h < 0) h += n;
            double s = 0.0;
            for (int c = 0; c < m; ++c) s += F.at(c, i, j) * G.at(c, i, j);
            acc += s * dinv[h];
        }
        if (diag) acc += diag->at(0, i);
        out.at(0, i) = acc * g.weight();
    }
    return out;
}

GridField pair_matrix(const OffDiagonalKernel& M, const OffDiagonalKernel& G,
                      const GridField* diag) {
    const int cols = G.components();
    if (M.size() != G.size() || M.components() % cols != 0)
        throw std::invalid_argument("pair_matrix: incompatible kernel shapes");
    const int rows = M.components() / cols;
    const CircleGrid& g = M.grid();
    const int n = g.size();
    std::vector<double> dinv = inverse_distance_table(g, 1.0);
    GridField out(g, rows);
    for (int a = 0; a < rows; ++a)
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                int h = i - j; if (h < 0) h += n;
                double s = 0.0;
                for (int k = 0; k < cols; ++k)
                    s += M.at(a * cols + k, i, j) * G.at(k, i, j);
                acc += s * dinv[h];
            }
            if (diag) acc += diag->at(a, i);
            out.at(a, i) = acc * g.weight();
        }
    return out;
}

GridField lambda_raw(const SphereField& u) {
    const GridField& f = u.field();
    // analytic diagonal limit |u'(x)|^2
    GridField du = synthesize(riesz_gradient(analyze(f)), f.grid());
    GridField diag(f.grid(), 1);
    for (int i = 0; i < f.size(); ++i) {
        double s = 0.0;
        for (int c = 0; c < f.components(); ++c) s += du.at(c, i) * du.at(c, i);
        diag.at(0, i) = s;
    }
    OffDiagonalKernel d = frac_gradient_kernel(f, 0.5);
    return pair(d, d, &diag);
}

GridField frac_divergence(const OffDiagonalKernel& F, double s) {
    const CircleGrid& g = F.grid();
    const int n = g.size();
    std::vector<double> dinv = inverse_distance_table(g, 1.0 + s);
    GridField out(g, F.components());
    for (int c = 0; c < F.components(); ++c)
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int h = 1; h < n / 2; ++h) {
                int jp = i + h; if (jp >= n) jp -= n;
                int jm = i - h; if (jm < 0) jm += n;
                double tp = (F.at(c, i, jp) - F.at(c, jp, i)) * dinv[h];
                double tm = (F.at(c, i, jm) - F.at(c, jm, i)) * dinv[h];
                acc += tp + tm;
            }
            int ja = i + n / 2; if (ja >= n) ja -= n; // antipodal node, once
            acc += (F.at(c, i, ja) - F.at(c, ja, i)) * dinv[n / 2];
            out.at(c, i) = acc * g.weight();
        }
    return out;
}

OffDiagonalKernel omega_potential(const SphereField& u) {
    const GridField& f = u.field();
    const int nc = f.components();
    const int n = f.size();
    OffDiagonalKernel du = frac_gradient_kernel(f, 0.5);
    OffDiagonalKernel out(f.grid(), nc * nc);
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b) {
            if (a == b) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    out.at(a * nc + b, i, j) =
                        f.at(a, i) * du.at(b, i, j) - f.at(b, i) * du.at(a, i, j);
                }
        }
    return out;
}

GridField t_functional(const GridField& u, const GridField& v, const GridField& w) {
    if (v.components() != w.components() || u.size() != v.size() || u.size() != w.size())
        throw std::invalid_argument("t_functional: incompatible shapes");
    const CircleGrid& g = u.grid();
    const int n = g.size();
    OffDiagonalKernel du = frac_gradient_kernel(u, 0.5);
    OffDiagonalKernel dv = frac_gradient_kernel(v, 0.25);
    OffDiagonalKernel dw = frac_gradient_kernel(w, 0.25);
    std::vector<double> dinv = inverse_distance_table(g, 1.0);
    GridField out(g, u.components());
    for (int a = 0; a < u.components(); ++a)
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                int h = i - j; if (h < 0) h += n;
                double s = 0.0;
                for (int k = 0; k < v.components(); ++k)
                    s += dv.at(k, i, j) * dw.at(k, i, j);
                acc += du.at(a, i, j) * s * dinv[h];
            }
            out.at(a, i) = 0.5 * acc * g.weight();
        }
    return out;
}

OffDiagonalKernel divfree_correction(const OffDiagonalKernel& Omega) {
    const CircleGrid& g = Omega.grid();
    const int n = g.size();
    GridField d = frac_divergence(Omega, 0.5);
    std::vector<double> mu = d.mean();
    for (int c = 0; c < d.components(); ++c)
        for (int i = 0; i < d.size(); ++i) d.at(c, i) -= mu[c];
    // div_{1/2}(d_{1/2} h) is a grid convolution; its exact symbol (which is
    // 2 pi |k| up to quadrature error) is inverted so the corrected kernel's
    // divergence cancels to roundoff, not just to quadrature order.
    std::vector<double> symbol(g.max_mode() + 1, 0.0);
    for (int k = 1; k <= g.max_mode(); ++k) {
        double acc = 0.0;
        for (int h = 1; h < n / 2; ++h) {
            double dist = g.node_distance(0, h);
            acc += 2.0 * (1.0 - std::cos(k * g.node(h))) / (dist * dist);
        }
        double da = g.node_distance(0, n / 2);
        acc += (1.0 - std::cos(k * kPi)) / (da * da);
        symbol[k] = 2.0 * g.weight() * acc;
    }
    SpectralField dh = analyze(d);
    for (int c = 0; c < d.components(); ++c)
        for (int k = -dh.max_mode(); k <= dh.max_mode(); ++k)
            dh.at(c, k) = k == 0 ? std::complex<double>{0.0, 0.0}
                                 : dh.at(c, k) / symbol[std::abs(k)];
    GridField h = synthesize(dh, g);
    OffDiagonalKernel out = Omega;
    out -= frac_gradient_kernel(h, 0.5);
    return out;
}

double offdiag_l2_norm(const OffDiagonalKernel& F) {
    return std::sqrt(offdiag_pairing(F, F));
}

double offdiag_pairing(const OffDiagonalKernel& F, const OffDiagonalKernel& G) {
    if (F.components() != G.components() || F.size() != G.size())
        throw std::invalid_argument("offdiag_pairing: incompatible kernel shapes");
    const CircleGrid& g = F.grid();
    const int n = g.size();
    std::vector<double> dinv = inverse_distance_table(g, 1.0);
    double acc = 0.0;
    for (int c = 0; c < F.components(); ++c)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                int h = i - j; if (h < 0) h += n;
                acc += F.at(c, i, j) * G.at(c, i, j) * dinv[h];
            }
    return acc * g.weight() * g.weight();
}

} // namespace halflow
