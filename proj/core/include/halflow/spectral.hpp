#ifndef HALFLOW_SPECTRAL_HPP
#define HALFLOW_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "halflow/grid.hpp"

namespace halflow {

/// Truncated Fourier series: coefficients u_hat(k) for |k| <= K = N/2 - 1,
/// per component, under the convention u_hat(k) = (1/2pi) \int f e^{-ikx} dx.
/// Parseval: ||f||_{L^2}^2 = 2pi sum_k |u_hat(k)|^2.
class SpectralField {
  public:
    SpectralField(const CircleGrid& grid, int components);

    const CircleGrid& grid() const { return grid_; }
    int components() const { return m_; }
    int max_mode() const { return grid_.max_mode(); }

    std::complex<double>& at(int comp, int k) {
        return c_[size_t(comp) * stride_ + size_t(k + max_mode())];
    }
    std::complex<double> at(int comp, int k) const {
        return c_[size_t(comp) * stride_ + size_t(k + max_mode())];
    }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);

  private:
    CircleGrid grid_;
    int m_;
    size_t stride_;
    std::vector<std::complex<double>> c_;
};

/// Forward transform (FFT, 1/2pi normalization). Throws on grid mismatch.
SpectralField analyze(const GridField& f);

/// Pointwise evaluation of the truncated series at the nodes of g.
/// Requires max_mode of c <= max_mode of g; imaginary parts are dropped
/// (the coefficients of a real field are conjugate-symmetric).
GridField synthesize(const SpectralField& c, const CircleGrid& g);

/// Complex-valued synthesis, one component.
std::vector<std::complex<double>> synthesize_complex(const SpectralField& c,
                                                     const CircleGrid& g, int comp = 0);

/// (-Delta)^s: multiplier |k|^{2s}; the zero mode is annihilated.
SpectralField fractional_laplacian(const SpectralField& f, double s);

/// Spatial derivative d/dx: multiplier ik.
SpectralField riesz_gradient(const SpectralField& f);

/// Sobolev norm. Inhomogeneous: sqrt( 2pi sum (1+k^2)^s |u_hat|^2 );
/// homogeneous: sqrt( 2pi sum |k|^{2s} |u_hat|^2 ). Negative s allowed.
double sobolev_norm(const SpectralField& f, double s, bool homogeneous);

/// Fractional heat semigroup e^{-t(-Delta)^{1/2}}: multiplier e^{-|k|t}.
/// Throws std::domain_error for t < 0.
SpectralField heat_propagate(const SpectralField& f, double t);

/// Half-Dirichlet energy E_{1/2}(u) = pi sum_k |k| |u_hat(k)|^2 over components.
double half_energy(const SphereField& u);
double half_energy(const SpectralField& c);

} // namespace halflow

#endif
