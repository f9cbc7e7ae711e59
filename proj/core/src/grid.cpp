#include "halflow/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace halflow {

CircleGrid::CircleGrid(int size) : n_(size) {
    if (size < 8 || (size & (size - 1)) != 0)
        throw std::invalid_argument("CircleGrid: size must be a power of two >= 8");
}

double circle_distance(double x, double y) {
    return 2.0 * std::fabs(std::sin(0.5 * (x - y)));
}

double arc_distance(double x, double y) {
    double d = std::fmod(std::fabs(x - y), kTwoPi);
    return d <= kPi ? d : kTwoPi - d;
}

GridField::GridField(const CircleGrid& grid, int components)
    : grid_(grid), m_(components), v_(size_t(components) * grid.size(), 0.0) {
    if (components < 1) throw std::invalid_argument("GridField: components must be >= 1");
}

GridField& GridField::operator+=(const GridField& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}
GridField& GridField::operator-=(const GridField& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}
GridField& GridField::operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
}

double GridField::l2_norm() const {
    double acc = 0.0;
    for (double x : v_) acc += x * x;
    return std::sqrt(acc * grid_.weight());
}

double GridField::sup_norm() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::fabs(x));
    return m;
}

std::vector<double> GridField::mean() const {
    std::vector<double> out(m_, 0.0);
    for (int c = 0; c < m_; ++c) {
        double acc = 0.0;
        for (int j = 0; j < grid_.size(); ++j) acc += at(c, j);
        out[c] = acc / grid_.size();
    }
    return out;
}

SphereField SphereField::project(const GridField& f) {
    if (f.components() < 2)
        throw std::invalid_argument("SphereField: needs >= 2 components");
    GridField g = f;
    const int n = f.components();
    for (int j = 0; j < f.size(); ++j) {
        double r2 = 0.0;
        for (int c = 0; c < n; ++c) r2 += f.at(c, j) * f.at(c, j);
        double r = std::sqrt(r2);
        if (r == 0.0)
            throw std::domain_error("SphereField::project: zero vector at a node");
        for (int c = 0; c < n; ++c) g.at(c, j) = f.at(c, j) / r;
    }
    return SphereField(std::move(g));
}

SphereField SphereField::trusted(const GridField& f, double tol) {
    if (f.components() < 2)
        throw std::invalid_argument("SphereField: needs >= 2 components");
    if (drift(f) > tol)
        throw std::domain_error("SphereField::trusted: unit-norm invariant violated");
    return SphereField(f);
}

double SphereField::drift(const GridField& f) {
    double worst = 0.0;
    for (int j = 0; j < f.size(); ++j) {
        double r2 = 0.0;
        for (int c = 0; c < f.components(); ++c) r2 += f.at(c, j) * f.at(c, j);
        worst = std::max(worst, std::fabs(std::sqrt(r2) - 1.0));
    }
    return worst;
}

} // namespace halflow
