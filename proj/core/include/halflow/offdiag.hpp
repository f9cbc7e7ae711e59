#ifndef HALFLOW_OFFDIAG_HPP
#define HALFLOW_OFFDIAG_HPP

#include "halflow/grid.hpp"
#include "halflow/spectral.hpp"

namespace halflow {

/// Two-point kernel F(x_i, x_j) sampled on all node pairs, component-major.
/// The diagonal cells are stored but by convention hold 0 (diagonal policy
/// "omit"); quadratures below never read them unless stated.
class OffDiagonalKernel {
  public:
    OffDiagonalKernel(const CircleGrid& grid, int components);

    const CircleGrid& grid() const { return grid_; }
    int components() const { return m_; }
    int size() const { return grid_.size(); }

    double& at(int comp, int i, int j) {
        return v_[(size_t(comp) * grid_.size() + i) * grid_.size() + j];
    }
    double at(int comp, int i, int j) const {
        return v_[(size_t(comp) * grid_.size() + i) * grid_.size() + j];
    }

    OffDiagonalKernel& operator+=(const OffDiagonalKernel& o);
    OffDiagonalKernel& operator-=(const OffDiagonalKernel& o);
    OffDiagonalKernel& operator*=(double s);

  private:
    CircleGrid grid_;
    int m_;
    std::vector<double> v_;
};

/// Fractional s-gradient d_s f(x,y) = (f(x) - f(y)) / |x-y|^s, s in [0,1).
/// Swap-antisymmetric exactly; diagonal set to 0.
OffDiagonalKernel frac_gradient_kernel(const GridField& f, double s);

/// Pairing F.G(x) = int F(x,y) G(x,y) dy/|x-y|, contracting over components;
/// scalar output. `diag` optionally supplies the analytic diagonal limit of
/// the integrand (a 1-component density); when null the diagonal cell is
/// omitted.
GridField pair(const OffDiagonalKernel& F, const OffDiagonalKernel& G,
               const GridField* diag = nullptr);

/// Matrix-vector pairing: M has rows*cols components (index a*cols + k),
/// G has cols components; out^a(x) = int sum_k M_{ak} G^k dy/|x-y|.
/// `diag`, if given, has `rows` components.
GridField pair_matrix(const OffDiagonalKernel& M, const OffDiagonalKernel& G,
                      const GridField* diag = nullptr);

/// lambda_raw(x) = int |u(x) - u(y)|^2 / |x-y|^2 dy, with the analytic
/// diagonal limit |u'(x)|^2 (u' via riesz_gradient).
GridField lambda_raw(const SphereField& u);

/// div_s F(x) = P.V. int (F(x,y) - F(y,x)) / |x-y|^{1+s} dy, evaluated by
/// symmetric pairing: offsets +h and -h are summed in matched pairs.
GridField frac_divergence(const OffDiagonalKernel& F, double s);

/// Antisymmetric potential Omega_{ik}(x,y) = u^i(x) d_{1/2}u^k(x,y)
/// - u^k(x) d_{1/2}u^i(x,y); n^2 components, index i*n + k.
OffDiagonalKernel omega_potential(const SphereField& u);

/// T^i(u,v,w)(x) = (1/2) sum_k int d_{1/2}u^i d_{1/4}v^k d_{1/4}w^k dy/|x-y|.
/// The explicit factor 1/2 makes u lambda_raw = Omega.d_{1/2}u + T(u) close.
GridField t_functional(const GridField& u, const GridField& v, const GridField& w);

/// Solves 2*pi*(-Delta)^{1/2} h = div_{1/2} Omega per component (zero mean
/// enforced) and returns Omega - d_{1/2}h.
OffDiagonalKernel divfree_correction(const OffDiagonalKernel& Omega);

/// ||F||_{L^2_od} = sqrt( intint |F|^2 dx dy / |x-y| ), diagonal omitted.
double offdiag_l2_norm(const OffDiagonalKernel& F);

/// intint sum_c F G dx dy / |x-y|, diagonal omitted (duality-test helper).
double offdiag_pairing(const OffDiagonalKernel& F, const OffDiagonalKernel& G);

} // namespace halflow

#endif
