#include "kreiss/objective.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace kreiss {

namespace {

constexpr double kGapTol = 1e-10;
constexpr double kDenominatorTol = 1e-12;

void require_domain(const MatrixProblem& prob, TimeDomain td) {
    if (prob.time_domain != td) fail(ErrorCode::InvalidArgument, "objective does not match the problem's time domain");
}

EvalPoint eval_matrix(const MatrixProblem& prob, double c1, double c2) {
    EvalPoint pt;
    pt.c1 = c1;
    pt.c2 = c2;
    if (!is_feasible(prob, c1, c2)) return pt;
    pt.svd = svd_full(objective_matrix(prob, c1, c2));
    const Index n = prob.n;
    pt.value = pt.svd.sigma(n - 1);
    pt.u = pt.svd.U.col(n - 1);
    pt.v = pt.svd.V.col(n - 1);
    pt.simple = n == 1 || pt.svd.sigma(n - 2) - pt.svd.sigma(n - 1) > kGapTol * pt.svd.sigma(0);
    return pt;
}

void check_smooth(const EvalPoint& pt, bool allow_nonsimple) {
    if (!pt.feasible()) fail(ErrorCode::InvalidArgument, "derivatives requested at an infeasible point");
    if (pt.value <= 0.0) fail(ErrorCode::ZeroSigma, "smallest singular value is zero");
    if (!pt.simple && !allow_nonsimple) fail(ErrorCode::NonsimpleSigma, "smallest singular value is not simple");
}

Derivatives first_order(const EvalPoint& pt, const MatrixProblem& prob, bool allow_nonsimple) {
    check_smooth(pt, allow_nonsimple);
    const MatrixPartials d = objective_partials(prob, pt.c1, pt.c2, false);
    Derivatives out;
    out.grad(0) = pt.u.dot(d.d1 * pt.v).real();
    out.grad(1) = pt.u.dot(d.d2 * pt.v).real();
    out.simple = pt.simple;
    return out;
}

// Second derivatives of the n-th largest eigenvalue of [[0, M], [M^*, 0]], whose eigenpairs are
// (+-sigma_i, [u_i; +-v_i] / sqrt(2)).
Derivatives second_order(const EvalPoint& pt, const MatrixProblem& prob) {
    check_smooth(pt, false);
    const Index n = prob.n;
    const MatrixPartials d = objective_partials(prob, pt.c1, pt.c2, true);
    const Matrix& U = pt.svd.U;
    const Matrix& V = pt.svd.V;
    const double s2 = 1.0 / std::sqrt(2.0);
    Matrix Q(2 * n, 2 * n);
    RealVector lambda(2 * n);
    for (Index i = 0; i < n; ++i) {
        Q.col(i) << U.col(i) * s2, V.col(i) * s2;
        lambda(i) = pt.svd.sigma(i);
        const Index j = 2 * n - 1 - i;
        Q.col(j) << U.col(i) * s2, -V.col(i) * s2;
        lambda(j) = -pt.svd.sigma(i);
    }
    auto augment = [n](const Matrix& M) {
        Matrix out = Matrix::Zero(2 * n, 2 * n);
        out.topRightCorner(n, n) = M;
        out.bottomLeftCorner(n, n) = M.adjoint();
        return out;
    };
    const Matrix p1 = Q.adjoint() * augment(d.d1) * Q;
    const Matrix p2 = Q.adjoint() * augment(d.d2) * Q;
    const Index j = n - 1;
    auto diag_term = [&](const Matrix& M) { return (Q.col(j).adjoint() * augment(M) * Q.col(j))(0, 0).real(); };
    double h11 = diag_term(d.d11), h22 = diag_term(d.d22), h12 = diag_term(d.d12);
    for (Index k = 0; k < 2 * n; ++k) {
        if (k == j) continue;
        const double gap = lambda(j) - lambda(k);
        if (std::abs(gap) < kDenominatorTol) fail(ErrorCode::DegenerateGap, "eigenvalue gap below tolerance");
        h11 += 2.0 * (p1(j, k) * p1(k, j)).real() / gap;
        h22 += 2.0 * (p2(j, k) * p2(k, j)).real() / gap;
        h12 += 2.0 * (p1(j, k) * p2(k, j)).real() / gap;
    }
    Derivatives out;
    out.grad(0) = p1(j, j).real();
    out.grad(1) = p2(j, j).real();
    Eigen::Matrix2d H;
    H << h11, h12, h12, h22;
    out.hess = H;
    return out;
}

}  // namespace

double normalize_angle(double theta) {
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    if (t >= 2.0 * kPi) t = 0.0;
    return t;
}

bool is_feasible(const MatrixProblem& prob, double c1, double c2) {
    if (!std::isfinite(c1) || !std::isfinite(c2)) return false;
    return prob.time_domain == TimeDomain::Continuous ? c1 > 0.0 : c1 > 1.0;
}

Matrix objective_matrix(const MatrixProblem& prob, double c1, double c2) {
    Matrix M = -prob.A;
    if (prob.time_domain == TimeDomain::Continuous) {
        M.diagonal().array() += Complex(c1, c2);
        return M / c1;
    }
    M.diagonal().array() += std::polar(c1, c2);
    return M / (c1 - 1.0);
}

MatrixPartials objective_partials(const MatrixProblem& prob, double c1, double c2, bool second) {
    const Index n = prob.n;
    const Matrix I = Matrix::Identity(n, n);
    MatrixPartials d;
    if (prob.time_domain == TimeDomain::Continuous) {
        const double x = c1, y = c2;
        const Matrix shifted = prob.A - kI * y * I;
        d.d1 = shifted / (x * x);
        d.d2 = (kI / x) * I;
        if (second) {
            d.d11 = -2.0 * shifted / (x * x * x);
            d.d22 = Matrix::Zero(n, n);
            d.d12 = (-kI / (x * x)) * I;
        }
    } else {
        const double r = c1, t = c2, rm1 = c1 - 1.0;
        const Complex e = std::polar(1.0, t);
        const Matrix shifted = prob.A - e * I;
        d.d1 = shifted / (rm1 * rm1);
        d.d2 = (kI * r * e / rm1) * I;
        if (second) {
            d.d11 = -2.0 * shifted / (rm1 * rm1 * rm1);
            d.d22 = (-r * e / rm1) * I;
            d.d12 = (-kI * e / (rm1 * rm1)) * I;
        }
    }
    return d;
}

EvalPoint g_eval(const MatrixProblem& prob, double x, double y) {
    require_domain(prob, TimeDomain::Continuous);
    return eval_matrix(prob, x, y);
}

EvalPoint h_eval(const MatrixProblem& prob, double r, double theta) {
    require_domain(prob, TimeDomain::Discrete);
    return eval_matrix(prob, r, normalize_angle(theta));
}

EvalPoint evaluate(const MatrixProblem& prob, double c1, double c2) {
    return prob.time_domain == TimeDomain::Continuous ? g_eval(prob, c1, c2) : h_eval(prob, c1, c2);
}

double objective_value(const MatrixProblem& prob, double c1, double c2) {
    if (!is_feasible(prob, c1, c2)) return kInf;
    return sigma_min(objective_matrix(prob, c1, c2));
}

Derivatives g_grad(const EvalPoint& pt, const MatrixProblem& prob, bool allow_nonsimple) {
    require_domain(prob, TimeDomain::Continuous);
    return first_order(pt, prob, allow_nonsimple);
}

Derivatives g_hess(const EvalPoint& pt, const MatrixProblem& prob) {
    require_domain(prob, TimeDomain::Continuous);
    return second_order(pt, prob);
}

Derivatives h_grad(const EvalPoint& pt, const MatrixProblem& prob, bool allow_nonsimple) {
    require_domain(prob, TimeDomain::Discrete);
    return first_order(pt, prob, allow_nonsimple);
}

Derivatives h_hess(const EvalPoint& pt, const MatrixProblem& prob) {
    require_domain(prob, TimeDomain::Discrete);
    return second_order(pt, prob);
}

Derivatives gradient(const EvalPoint& pt, const MatrixProblem& prob, bool allow_nonsimple) {
    return first_order(pt, prob, allow_nonsimple);
}

Derivatives hessian(const EvalPoint& pt, const MatrixProblem& prob) { return second_order(pt, prob); }

}  // namespace kreiss
