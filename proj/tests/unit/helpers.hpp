#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "kreiss/linalg.hpp"
#include "kreiss/matio.hpp"

namespace testutil {

using kreiss::Complex;
using kreiss::Index;
using kreiss::Matrix;

inline Matrix random_matrix(Index rows, Index cols, std::mt19937& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    Matrix M(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) M(i, j) = Complex(d(rng), d(rng));
    return M;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Closest element of `values` to `target`.
template <class Range>
double nearest_distance(const Range& values, Complex target) {
    double best = 1e300;
    for (const auto& v : values) best = std::min(best, std::abs(Complex(v) - target));
    return best;
}

// Unitary Q from a QR of a random matrix.
inline Matrix random_unitary(Index n, std::mt19937& rng) {
    Eigen::HouseholderQR<Matrix> qr(random_matrix(n, n, rng));
    return qr.householderQ() * Matrix::Identity(n, n);
}

// Parameters t in [lo, hi] where some singular value of matrix_at(t) crosses gamma: uniform scan of
// the sorted singular values followed by bisection. Tangential touches are not reported.
template <class F>
std::vector<double> brute_level_points(F matrix_at, double gamma, double lo, double hi, int samples = 4000) {
    std::vector<double> roots;
    auto diff = [&](double t) { return kreiss::RealVector(kreiss::singular_values(matrix_at(t)).array() - gamma); };
    double t0 = lo;
    kreiss::RealVector d0 = diff(t0);
    for (int i = 1; i <= samples; ++i) {
        const double t1 = lo + (hi - lo) * i / samples;
        const kreiss::RealVector d1 = diff(t1);
        for (Index k = 0; k < d0.size(); ++k) {
            if ((d0(k) > 0) == (d1(k) > 0)) continue;
            double a = t0, b = t1;
            const bool pos_a = d0(k) > 0;
            for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
                const double m = 0.5 * (a + b);
                if ((diff(m)(k) > 0) == pos_a) a = m;
                else b = m;
            }
            roots.push_back(0.5 * (a + b));
        }
        t0 = t1;
        d0 = d1;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace testutil
