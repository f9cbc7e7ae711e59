#include "halflow/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace halflow {

namespace {

// One forward and one backward in-place c2c plan per grid size. FFTW plan
// creation is not thread safe, so the cache is guarded.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    fftw_complex* buf = nullptr;
    int n = 0;
};

PlanPair& plans_for(int n) {
    static std::map<int, PlanPair> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    PlanPair p;
    p.n = n;
    p.buf = fftw_alloc_complex(n);
    p.fwd = fftw_plan_dft_1d(n, p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_1d(n, p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    return cache.emplace(n, p).first->second;
}

std::mutex& transform_mutex() {
    static std::mutex mtx;
    return mtx;
}

} // namespace

SpectralField::SpectralField(const CircleGrid& grid, int components)
    : grid_(grid),
      m_(components),
      stride_(size_t(2 * grid.max_mode() + 1)),
      c_(size_t(components) * stride_, {0.0, 0.0}) {
    if (components < 1) throw std::invalid_argument("SpectralField: components must be >= 1");
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}
SpectralField& SpectralField::operator-=(const SpectralField& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}
SpectralField& SpectralField::operator*=(double s) {
    for (auto& z : c_) z *= s;
    return *this;
}

SpectralField analyze(const GridField& f) {
    const int n = f.grid().size();
    const int kmax = f.grid().max_mode();
    SpectralField out(f.grid(), f.components());

    std::lock_guard<std::mutex> lock(transform_mutex());
    PlanPair& p = plans_for(n);
    for (int c = 0; c < f.components(); ++c) {
        for (int j = 0; j < n; ++j) {
            p.buf[j][0] = f.at(c, j);
            p.buf[j][1] = 0.0;
        }
        fftw_execute(p.fwd);
        const double scale = 1.0 / n;
        for (int k = -kmax; k <= kmax; ++k) {
            int m = k >= 0 ? k : k + n;
            out.at(c, k) = {p.buf[m][0] * scale, p.buf[m][1] * scale};
        }
        // Nyquist mode m = n/2 is dropped by construction.
    }
    return out;
}

GridField synthesize(const SpectralField& c, const CircleGrid& g) {
    if (c.max_mode() > g.max_mode())
        throw std::invalid_argument("synthesize: target grid too coarse for band-width");
    const int n = g.size();
    const int kmax = c.max_mode();
    GridField out(g, c.components());

    std::lock_guard<std::mutex> lock(transform_mutex());
    PlanPair& p = plans_for(n);
    for (int cc = 0; cc < c.components(); ++cc) {
        for (int j = 0; j < n; ++j) p.buf[j][0] = p.buf[j][1] = 0.0;
        for (int k = -kmax; k <= kmax; ++k) {
            int m = k >= 0 ? k : k + n;
            p.buf[m][0] = c.at(cc, k).real();
            p.buf[m][1] = c.at(cc, k).imag();
        }
        fftw_execute(p.bwd);
        for (int j = 0; j < n; ++j) out.at(cc, j) = p.buf[j][0];
    }
    return out;
}

std::vector<std::complex<double>> synthesize_complex(const SpectralField& c,
                                                     const CircleGrid& g, int comp) {
    if (c.max_mode() > g.max_mode())
        throw std::invalid_argument("synthesize_complex: target grid too coarse");
    const int n = g.size();
    std::vector<std::complex<double>> out(n);

    std::lock_guard<std::mutex> lock(transform_mutex());
    PlanPair& p = plans_for(n);
    for (int j = 0; j < n; ++j) p.buf[j][0] = p.buf[j][1] = 0.0;
    for (int k = -c.max_mode(); k <= c.max_mode(); ++k) {
        int m = k >= 0 ? k : k + n;
        p.buf[m][0] = c.at(comp, k).real();
        p.buf[m][1] = c.at(comp, k).imag();
    }
    fftw_execute(p.bwd);
    for (int j = 0; j < n; ++j) out[j] = {p.buf[j][0], p.buf[j][1]};
    return out;
}

SpectralField fractional_laplacian(const SpectralField& f, double s) {
    SpectralField out = f;
    for (int c = 0; c < f.components(); ++c)
        for (int k = -f.max_mode(); k <= f.max_mode(); ++k)
            out.at(c, k) = k == 0 ? std::complex<double>{0.0, 0.0}
                                  : f.at(c, k) * std::pow(std::abs(double(k)), 2.0 * s);
    return out;
}

SpectralField riesz_gradient(const SpectralField& f) {
    SpectralField out = f;
    for (int c = 0; c < f.components(); ++c)
        for (int k = -f.max_mode(); k <= f.max_mode(); ++k)
            out.at(c, k) = f.at(c, k) * std::complex<double>{0.0, double(k)};
    return out;
}

double sobolev_norm(const SpectralField& f, double s, bool homogeneous) {
    double acc = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        for (int k = -f.max_mode(); k <= f.max_mode(); ++k) {
            double a2 = std::norm(f.at(c, k));
            if (homogeneous) {
                if (k != 0) acc += std::pow(std::abs(double(k)), 2.0 * s) * a2;
            } else {
                acc += std::pow(1.0 + double(k) * double(k), s) * a2;
            }
        }
    }
    return std::sqrt(kTwoPi * acc);
}

SpectralField heat_propagate(const SpectralField& f, double t) {
    if (t < 0.0) throw std::domain_error("heat_propagate: t must be >= 0");
    SpectralField out = f;
    for (int c = 0; c < f.components(); ++c)
        for (int k = -f.max_mode(); k <= f.max_mode(); ++k)
            out.at(c, k) = f.at(c, k) * std::exp(-std::abs(double(k)) * t);
    return out;
}

double half_energy(const SpectralField& c) {
    double acc = 0.0;
    for (int cc = 0; cc < c.components(); ++cc)
        for (int k = -c.max_mode(); k <= c.max_mode(); ++k)
            acc += std::abs(double(k)) * std::norm(c.at(cc, k));
    return kPi * acc;
}

double half_energy(const SphereField& u) { return half_energy(analyze(u.field())); }

} // namespace halflow
