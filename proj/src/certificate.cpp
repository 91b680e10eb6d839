#include "kreiss/certificate.hpp"

#include <algorithm>
#include <cmath>

namespace kreiss {

namespace {

constexpr int kNewtonSteps = 12;
constexpr double kClusterTol = 1e-6;

bool discrete(const MatrixProblem& prob) { return prob.time_domain == TimeDomain::Discrete; }

double coord_distance(const MatrixProblem& prob, double a, double b) {
    if (!discrete(prob)) return std::abs(a - b);
    const double d = std::abs(normalize_angle(a) - normalize_angle(b));
    return std::min(d, 2.0 * kPi - d);
}

double cluster_tol(const MatrixProblem& prob, double c) {
    return discrete(prob) ? kClusterTol : kClusterTol * std::max(1.0, std::abs(c));
}

// Singular value closest to gamma and its derivative along the second coordinate.
struct SliceValue {
    double residual;
    double slope;
};

SliceValue slice_value(const MatrixProblem& prob, double c1, double c2, double gamma) {
    const SvdResult svd = svd_full(objective_matrix(prob, c1, c2));
    Index k = 0;
    for (Index i = 1; i < svd.sigma.size(); ++i)
        if (std::abs(svd.sigma(i) - gamma) < std::abs(svd.sigma(k) - gamma)) k = i;
    const MatrixPartials d = objective_partials(prob, c1, c2, false);
    const double slope = svd.U.col(k).dot(d.d2 * svd.V.col(k)).real();
    return {svd.sigma(k) - gamma, slope};
}

Crossing newton_refine(const MatrixProblem& prob, double c1, double c2, double gamma) {
    Crossing best{c2, kInf};
    const double max_step = discrete(prob) ? 0.25 : 0.25 * std::max(1.0, std::abs(c1));
    for (int it = 0; it < kNewtonSteps; ++it) {
        const SliceValue sv = slice_value(prob, c1, c2, gamma);
        if (std::abs(sv.residual) < best.residual) best = {c2, std::abs(sv.residual)};
        if (std::abs(sv.residual) <= 1e-15 * std::max(1.0, gamma)) break;
        if (std::abs(sv.slope) < 1e-14) break;
        double step = sv.residual / sv.slope;
        if (std::abs(step) > max_step) break;
        c2 -= step;
    }
    if (discrete(prob)) best.coord = normalize_angle(best.coord);
    return best;
}

}  // namespace

std::optional<std::pair<double, double>> project_to_level(const MatrixProblem& prob, double c1, double c2,
                                                          double gamma, int max_steps) {
    for (int it = 0; it < max_steps; ++it) {
        if (!is_feasible(prob, c1, c2)) return std::nullopt;
        const SvdResult svd = svd_full(objective_matrix(prob, c1, c2));
        Index k = 0;
        for (Index i = 1; i < svd.sigma.size(); ++i)
            if (std::abs(svd.sigma(i) - gamma) < std::abs(svd.sigma(k) - gamma)) k = i;
        const double f = svd.sigma(k) - gamma;
        if (std::abs(f) <= 1e-13 * gamma) return std::make_pair(c1, c2);
        const MatrixPartials d = objective_partials(prob, c1, c2, false);
        const double g1 = svd.U.col(k).dot(d.d1 * svd.V.col(k)).real();
        const double g2 = svd.U.col(k).dot(d.d2 * svd.V.col(k)).real();
        const double gg = g1 * g1 + g2 * g2;
        if (!(gg > 0.0)) return std::nullopt;
        const double s1 = f * g1 / gg, s2 = f * g2 / gg;
        const double limit = discrete(prob) ? 0.5 : 0.1 * std::max(1.0, std::abs(c1));
        if (std::hypot(s1, s2) > limit) return std::nullopt;
        c1 -= s1;
        c2 -= s2;
    }
    return std::nullopt;
}

const char* cert_variant_name(CertVariant v) {
    switch (v) {
        case CertVariant::FixedDistance: return "fixed";
        case CertVariant::VariableVertical: return "variable-vertical";
        case CertVariant::VariableHorizontal: return "variable-horizontal";
        case CertVariant::FixedRadial: return "fixed-radial";
        case CertVariant::VariableRadial: return "variable-radial";
    }
    return "unknown";
}

std::vector<Crossing> refine_crossings(const MatrixProblem& prob, double c1, std::vector<double> raw, double gamma) {
    std::sort(raw.begin(), raw.end());
    std::vector<double> seeds = raw;
    // A tangency shows up as a split pair of nearly equal eigenvalues; their midpoint is the accurate one.
    for (size_t i = 0; i + 1 < raw.size(); ++i) {
        if (coord_distance(prob, raw[i], raw[i + 1]) <= cluster_tol(prob, raw[i]))
            seeds.push_back(0.5 * (raw[i] + raw[i + 1]));
    }
    // A pair split across theta = 0 sits at both ends of the sorted list.
    if (discrete(prob) && raw.size() >= 2 && raw.back() - raw.front() > kPi &&
        coord_distance(prob, raw.front(), raw.back()) <= kClusterTol)
        seeds.push_back(normalize_angle(0.5 * (raw.front() + raw.back() - 2.0 * kPi)));

    std::vector<Crossing> refined;
    refined.reserve(seeds.size());
    for (double s : seeds) refined.push_back(newton_refine(prob, c1, s, gamma));
    std::sort(refined.begin(), refined.end(),
              [](const Crossing& a, const Crossing& b) { return a.residual < b.residual; });
    std::vector<Crossing> kept;
    for (const Crossing& c : refined) {
        const bool dup = std::any_of(kept.begin(), kept.end(), [&](const Crossing& k) {
            return coord_distance(prob, k.coord, c.coord) <= cluster_tol(prob, c.coord);
        });
        if (!dup) kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(), [](const Crossing& a, const Crossing& b) { return a.coord < b.coord; });
    return kept;
}

bool verify_level_point(const MatrixProblem& prob, double c1, double c2, double gamma, double verify_tol,
                        double* residual) {
    if (!is_feasible(prob, c1, c2)) return false;
    const RealVector s = singular_values(objective_matrix(prob, c1, c2));
    double best = kInf;
    for (Index i = 0; i < s.size(); ++i) best = std::min(best, std::abs(s(i) - gamma));
    if (residual) *residual = best;
    // Relative to the level itself when that is the smaller scale; never looser than verify_tol * ||A||.
    return best <= verify_tol * std::min(prob.norm2, gamma);
}

double resolvent_floor(const MatrixProblem& prob) {
    const Matrix I = Matrix::Identity(prob.n, prob.n);
    const Matrix As = prob.A.adjoint();
    const Matrix P = prob.time_domain == TimeDomain::Continuous ? solve_sylvester(As, prob.A, -I)
                                                                : solve_gen_sylvester(As, As, I, I, -I);
    const double norm = singular_values(P)(0);
    return std::isfinite(norm) && norm > 0.0 ? 0.5 / norm : 0.0;
}

double level_coord_floor(const MatrixProblem& prob, double gamma) {
    const double c = 0.5 * resolvent_floor(prob) / std::max(gamma, kEps);
    if (prob.time_domain == TimeDomain::Continuous) return c;
    return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * c));  // root of r (r - 1) = c
}

double real_band(const CertOptions& opts, double eta_rel) {
    if (!(eta_rel > 0.0)) return opts.real_rtol;
    return std::max(opts.real_rtol, std::min(1e-2, opts.band_factor * std::sqrt(kEps / eta_rel)));
}

std::vector<double> dedup_sorted(std::vector<double> v, double tol) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
        if (out.empty() || x - out.back() > tol) out.push_back(x);
    return out;
}

std::vector<double> real_candidates(const std::vector<Complex>& eigs, double rtol, double lo) {
    std::vector<double> out;
    for (const Complex& l : eigs) {
        if (!std::isfinite(l.real()) || !std::isfinite(l.imag())) continue;
        if (std::abs(l.imag()) <= rtol * std::max(1.0, std::abs(l.real())) && l.real() > lo) out.push_back(l.real());
    }
    return dedup_sorted(std::move(out));
}

}  // namespace kreiss
