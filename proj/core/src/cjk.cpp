#include "halflow/cjk.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace halflow {

double cjk(int j, int k) {
    if (j == 0 || k == 0) return 0.0;
    // integrand in real form: [cos((j+k)h) - cos(jh) - cos(kh) + 1] / (4 sin^2(h/2)),
    // a trig polynomial of degree |j|+|k|-1; M nodes beyond that give the exact integral.
    const int deg = std::abs(j) + std::abs(k);
    const int m = 2 * deg + 8;
    double acc = 0.0;
    for (int q = 0; q < m; ++q) {
        if (q == 0) {
            acc += double(-j) * double(k);
            continue;
        }
        double h = kTwoPi * q / m;
        double s = 2.0 * std::sin(0.5 * h);
        double num = std::cos(double(j + k) * h) - std::cos(double(j) * h)
                     - std::cos(double(k) * h) + 1.0;
        acc += num / (s * s);
    }
    return acc * kTwoPi / m;
}

CjkTable::CjkTable(int max_frequency)
    : jmax_(max_frequency),
      v_(size_t(2 * max_frequency + 1) * size_t(2 * max_frequency + 1), 0.0) {
    if (max_frequency < 0) throw std::invalid_argument("CjkTable: negative max frequency");
}

CjkTable build_table(int max_frequency) {
    CjkTable t(max_frequency);
    for (int j = -max_frequency; j <= max_frequency; ++j)
        for (int k = j; k <= max_frequency; ++k) {
            double v = cjk(j, k);
            t.at(j, k) = v;
            t.at(k, j) = v;
        }
    return t;
}

void save_table_csv(const CjkTable& t, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("save_table_csv: cannot open " + path);
    std::fprintf(f, "j,k,value\n");
    const int jm = t.max_frequency();
    for (int j = -jm; j <= jm; ++j)
        for (int k = -jm; k <= jm; ++k)
            std::fprintf(f, "%d,%d,%.17g\n", j, k, t.at(j, k));
    std::fclose(f);
}

CjkTable load_table_csv(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "r");
    if (!f) throw std::runtime_error("load_table_csv: cannot open " + path);
    char header[64];
    if (!std::fgets(header, sizeof header, f)) {
        std::fclose(f);
        throw std::runtime_error("load_table_csv: empty file " + path);
    }
    int jm = -1;
    {
        // first pass: find the max frequency
        long pos = std::ftell(f);
        int j, k;
        double v;
        while (std::fscanf(f, "%d,%d,%lf", &j, &k, &v) == 3)
            jm = std::max(jm, std::max(std::abs(j), std::abs(k)));
        if (jm < 0) {
            std::fclose(f);
            throw std::runtime_error("load_table_csv: no rows in " + path);
        }
        std::fseek(f, pos, SEEK_SET);
    }
    CjkTable t(jm);
    int j, k;
    double v;
    while (std::fscanf(f, "%d,%d,%lf", &j, &k, &v) == 3) t.at(j, k) = v;
    std::fclose(f);
    return t;
}

namespace {

double max_magnitude(const SpectralField& u) {
    double m = 0.0;
    for (int c = 0; c < u.components(); ++c)
        for (int k = -u.max_mode(); k <= u.max_mode(); ++k)
            m = std::max(m, std::abs(u.at(c, k)));
    return m;
}

// modes below roundoff relative to the peak coefficient do not count:
// transform round trips leave ~1e-16 tails across the whole band
int active_band(const SpectralField& u, double floor) {
    int b = 0;
    for (int c = 0; c < u.components(); ++c)
        for (int k = -u.max_mode(); k <= u.max_mode(); ++k)
            if (std::abs(u.at(c, k)) > floor) b = std::max(b, std::abs(k));
    return b;
}

} // namespace

SpectralField product_spectrum(const SpectralField& u, const SpectralField& v,
                               const CjkTable& table) {
    if (u.components() != v.components() || u.grid().size() != v.grid().size())
        throw std::invalid_argument("product_spectrum: incompatible fields");
    const double fu = 1e-13 * max_magnitude(u);
    const double fv = 1e-13 * max_magnitude(v);
    const int bu = active_band(u, fu);
    const int bv = active_band(v, fv);
    if (bu > table.max_frequency() || bv > table.max_frequency())
        throw std::invalid_argument("product_spectrum: C-table too small for active bands");
    const int kmax = u.max_mode();
    SpectralField out(u.grid(), 1);
    for (int c = 0; c < u.components(); ++c)
        for (int j = -bu; j <= bu; ++j) {
            if (std::abs(u.at(c, j)) <= fu) continue;
            for (int l = -bv; l <= bv; ++l) {
                int n = j + l;
                if (n < -kmax || n > kmax) continue;
                out.at(0, n) += table.at(j, l) * u.at(c, j) * v.at(c, l);
            }
        }
    return out;
}

} // namespace halflow
