#ifndef HALFLOW_GRID_HPP
#define HALFLOW_GRID_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace halflow {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

/// Uniform grid on S^1 = R / 2*pi*Z with nodes x_j = 2*pi*j/N.
/// N must be a power of two, N >= 8; the retained spectral band is
/// |k| <= K = N/2 - 1 (Nyquist mode dropped).
class CircleGrid {
  public:
    explicit CircleGrid(int size);

    int size() const { return n_; }
    int max_mode() const { return n_ / 2 - 1; }
    double node(int j) const { return kTwoPi * j / n_; }
    double weight() const { return kTwoPi / n_; }

    /// Chordal distance 2|sin((x-y)/2)| between nodes i and j.
    double node_distance(int i, int j) const {
        return 2.0 * std::fabs(std::sin(kPi * double(i - j) / n_));
    }

  private:
    int n_;
};

/// Chordal distance on S^1 for arbitrary angles.
double circle_distance(double x, double y);

/// Geodesic (arc) distance on S^1, used for arc neighbourhoods B_R(x).
double arc_distance(double x, double y);

/// Real vector-valued samples on a CircleGrid, component-major storage.
class GridField {
  public:
    GridField(const CircleGrid& grid, int components);

    const CircleGrid& grid() const { return grid_; }
    int components() const { return m_; }
    int size() const { return grid_.size(); }

    double& at(int comp, int node) { return v_[size_t(comp) * grid_.size() + node]; }
    double at(int comp, int node) const { return v_[size_t(comp) * grid_.size() + node]; }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }

    GridField& operator+=(const GridField& o);
    GridField& operator-=(const GridField& o);
    GridField& operator*=(double s);

    /// Quadrature L^2 norm: sqrt( (2pi/N) sum_j |v_j|^2 ), all components.
    double l2_norm() const;
    double sup_norm() const;
    /// Mean of each component; returned as a vector of length components().
    std::vector<double> mean() const;

  private:
    CircleGrid grid_;
    int m_;
    std::vector<double> v_;
};

/// Sphere-valued map S^1 -> S^{n-1}: a GridField with |v_j| = 1 at every node.
class SphereField {
  public:
    /// Projects f pointwise onto the sphere. Throws if |f| vanishes at a node.
    static SphereField project(const GridField& f);
    /// Wraps f, validating the unit-norm invariant to `tol`.
    static SphereField trusted(const GridField& f, double tol = 1e-12);

    const GridField& field() const { return f_; }
    const CircleGrid& grid() const { return f_.grid(); }
    int components() const { return f_.components(); }

    /// max_j | |v_j| - 1 |, the sphere drift of the underlying field.
    static double drift(const GridField& f);

  private:
    explicit SphereField(GridField f) : f_(std::move(f)) {}
    GridField f_;
};

} // namespace halflow

#endif
