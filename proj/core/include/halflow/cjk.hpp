#ifndef HALFLOW_CJK_HPP
#define HALFLOW_CJK_HPP

#include <string>
#include <vector>

#include "halflow/spectral.hpp"

namespace halflow {

/// C(j,k) = int_{S^1} (e^{ijh}-1)(e^{ikh}-1) / |h|^2 dh with |h| the chordal
/// distance; real by h -> -h symmetry. The integrand is a trigonometric
/// polynomial of degree |j|+|k|, so uniform trapezoid quadrature with enough
/// nodes is exact; the h = 0 cell takes the limit value -jk.
double cjk(int j, int k);

/// Symmetric table of C(j,k) for |j|,|k| <= J.
class CjkTable {
  public:
    explicit CjkTable(int max_frequency);

    int max_frequency() const { return jmax_; }
    double at(int j, int k) const {
        return v_[size_t(j + jmax_) * (2 * jmax_ + 1) + size_t(k + jmax_)];
    }
    double& at(int j, int k) {
        return v_[size_t(j + jmax_) * (2 * jmax_ + 1) + size_t(k + jmax_)];
    }

  private:
    int jmax_;
    std::vector<double> v_;
};

/// Builds the full table by quadrature, filling symmetric entries once.
CjkTable build_table(int max_frequency);

/// CSV round trip, columns j,k,value.
void save_table_csv(const CjkTable& t, const std::string& path);
CjkTable load_table_csv(const std::string& path);

/// Fourier coefficients of d_{1/2}u . d_{1/2}v (contraction over components):
/// w_hat(n) = sum_c sum_j C(j, n-j) u_hat_c(j) v_hat_c(n-j), truncated to the
/// grid band. Throws if the table lacks entries for the active bands.
SpectralField product_spectrum(const SpectralField& u, const SpectralField& v,
                               const CjkTable& table);

} // namespace halflow

#endif
