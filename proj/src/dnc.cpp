#include "kreiss/dnc.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

namespace kreiss {

namespace {

SparseMatrix sparse_identity(Index m) {
    SparseMatrix I(m, m);
    I.setIdentity();
    return I;
}

SparseMatrix to_sparse(const Matrix& M) { return M.sparseView(); }

struct Interval {
    double lo, hi;
};

}  // namespace

LinearOperator op_from_form(const SylvesterForm& form) {
    const Index m = form.P0.rows();
    auto f = std::make_shared<const SylvesterForm>(form);
    LinearOperator op;
    op.dim = m * m;
    op.apply = [f, m](const Vector& v) -> Vector {
        const Matrix W = unvec(v, m, m);
        return vec(f->P0 * W + W * f->R0);
    };
    op.apply_mass = [f, m](const Vector& v) -> Vector {
        const Matrix W = unvec(v, m, m);
        return vec(f->P1 * W + W * f->R1);
    };
    op.mass_matrix = kron_sparse(sparse_identity(m), to_sparse(form.P1)) +
                     kron_sparse(to_sparse(form.R1.transpose()), sparse_identity(m));
    op.factor_shifted = [f, m](Complex s) -> VectorMap {
        auto solver = std::make_shared<SylvesterSolver>(f->P0 - s * f->P1, f->R0 - s * f->R1);
        return [solver, m](const Vector& y) -> Vector { return vec(solver->solve(unvec(y, m, m))); };
    };
    return op;
}

LinearOperator op_fixed_ct(const MatrixProblem& prob, double gamma, double eta, double orientation) {
    return op_from_form(build_fixed_pencil(prob, gamma, eta, orientation).form);
}

LinearOperator op_variable_ct(const MatrixProblem& prob, double gamma, double eta) {
    if (prob.time_domain != TimeDomain::Continuous) fail(ErrorCode::InvalidArgument, "continuous-time problem required");
    return op_from_form(variable_form(prob, gamma, eta));
}

LinearOperator op_horizontal_ct(const MatrixProblem& prob, double gamma, double eta) {
    if (prob.time_domain != TimeDomain::Continuous) fail(ErrorCode::InvalidArgument, "continuous-time problem required");
    return op_from_form(horizontal_form(prob, gamma, eta));
}

Vector quad_apply_q0(const QuadraticForm& f, const Vector& w) {
    const Index m = f.M0.rows();
    const Matrix W = unvec(w, m, m);
    return vec(f.M0 * W * f.S0 - f.N0 * W * f.T0);
}

Vector quad_apply_q1(const QuadraticForm& f, const Vector& w) {
    const Index m = f.M0.rows();
    const Matrix W = unvec(w, m, m);
    return vec(f.M0 * W * f.S1 + f.M1 * W * f.S0 - f.N0 * W * f.T1 - f.N1 * W * f.T0);
}

Vector quad_apply_q2(const QuadraticForm& f, const Vector& w) {
    const Index m = f.M0.rows();
    const Matrix W = unvec(w, m, m);
    return vec(f.M1 * W * f.S1 - f.N1 * W * f.T1);
}

LinearOperator op_from_quad_form(const QuadraticForm& form) {
    const Index m = form.M0.rows();
    const Index N = m * m;
    auto f = std::make_shared<const QuadraticForm>(form);
    LinearOperator op;
    op.dim = 2 * N;
    op.apply = [f, N](const Vector& w) -> Vector {
        Vector out(2 * N);
        out.head(N) = quad_apply_q1(*f, w.head(N)) + quad_apply_q0(*f, w.tail(N));
        out.tail(N) = -w.head(N);
        return out;
    };
    op.apply_mass = [f, N](const Vector& w) -> Vector {
        Vector out(2 * N);
        out.head(N) = -quad_apply_q2(*f, w.head(N));
        out.tail(N) = -w.tail(N);
        return out;
    };
    const SparseMatrix q2 = kron_sparse(to_sparse(form.S1.transpose()), to_sparse(form.M1)) -
                            kron_sparse(to_sparse(form.T1.transpose()), to_sparse(form.N1));
    std::vector<Eigen::Triplet<Complex>> trips;
    for (Index c = 0; c < q2.outerSize(); ++c)
        for (SparseMatrix::InnerIterator it(q2, c); it; ++it) trips.emplace_back(it.row(), it.col(), -it.value());
    for (Index i = 0; i < N; ++i) trips.emplace_back(N + i, N + i, -1.0);
    op.mass_matrix.resize(2 * N, 2 * N);
    op.mass_matrix.setFromTriplets(trips.begin(), trips.end());
    op.factor_shifted = [f, m, N](Complex s) -> VectorMap {
        if (s == 0.0) fail(ErrorCode::ZeroShift, "the linearization cannot be shifted at zero");
        auto solver = std::make_shared<GenSylvesterSolver>(f->M0 + s * f->M1, f->S0 + s * f->S1, f->N0 + s * f->N1,
                                                           f->T0 + s * f->T1);
        return [f, solver, s, m, N](const Vector& y) -> Vector {
            const Vector y1 = y.head(N), y2 = y.tail(N);
            const Vector rhs = s * y1 - quad_apply_q0(*f, y2);
            const Vector w1 = vec(solver->solve(unvec(rhs, m, m)));
            Vector out(2 * N);
            out.head(N) = w1;
            out.tail(N) = (y2 + w1) / s;
            return out;
        };
    };
    return op;
}

LinearOperator op_quad_dt(const MatrixProblem& prob, double gamma, double eta, bool variable) {
    if (prob.time_domain != TimeDomain::Discrete) fail(ErrorCode::InvalidArgument, "discrete-time problem required");
    return op_from_quad_form(variable ? variable_quad_form(prob, gamma, eta) : fixed_quad_form(prob, gamma, eta));
}

IntervalSearch real_eigs_in_interval(const LinearOperator& op, double lo, double hi, Index k_per_shift,
                                     const IntervalOptions& opts) {
    if (!(lo < hi)) fail(ErrorCode::InvalidArgument, "interval must satisfy lo < hi");
    if (k_per_shift < 1) fail(ErrorCode::InvalidArgument, "k_per_shift must be positive");
    const Index k = std::min(k_per_shift, op.dim);
    const long budget = static_cast<long>(opts.max_shift_factor) * static_cast<long>(op.dim);
    std::mt19937 rng(opts.eigs.seed);
    std::uniform_real_distribution<double> jitter(-1.0, 1.0);

    IntervalSearch out;
    std::vector<Interval> stack{{lo, hi}};
    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();
        const double width = iv.hi - iv.lo;
        if (width <= 1e-13 * std::max({1.0, std::abs(iv.lo), std::abs(iv.hi)})) continue;
        double c = 0.5 * (iv.lo + iv.hi);
        ShiftInvertResult res;
        bool solved = false;
        for (int attempt = 0; attempt < 6 && !solved; ++attempt) {
            if (++out.shifts > budget) fail(ErrorCode::MaxShifts, "shift budget exhausted");
            try {
                res = eigs_shift_invert(op, c, k, opts.eigs);
                solved = true;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NearSingularOperator && e.code() != ErrorCode::MaxIterations) throw;
                c = 0.5 * (iv.lo + iv.hi) + 0.05 * width * jitter(rng);
            }
        }
        if (!solved) fail(ErrorCode::MaxShifts, "no usable shift in subinterval");

        double radius = kInf;
        if (k < op.dim) {
            radius = std::abs(res.values.back().value - c);
            for (const RitzValue& rv : res.values)
                if (!rv.converged) radius = std::min(radius, std::abs(rv.value - c));
            radius *= opts.radius_factor;
        }
        for (const RitzValue& rv : res.values) {
            if (!rv.converged) {
                ++out.unconverged;
                continue;
            }
            if (std::abs(rv.value - c) <= radius / opts.radius_factor) out.found.push_back(rv.value);
        }
        if (c - radius > iv.lo) stack.push_back({iv.lo, c - radius});
        if (c + radius < iv.hi) stack.push_back({c + radius, iv.hi});
    }
    // A real multiple eigenvalue splits into a cluster of size O(sqrt(perturbation)); a member of a
    // tight pair counts as real when its imaginary part is within the split.
    std::vector<double> reals;
    for (size_t i = 0; i < out.found.size(); ++i) {
        const Complex& l = out.found[i];
        if (l.real() < lo || l.real() > hi) continue;
        const double scale = std::max(1.0, std::abs(l.real()));
        if (std::abs(l.imag()) <= opts.real_rtol * scale) {
            reals.push_back(l.real());
            continue;
        }
        for (size_t j = 0; j < out.found.size(); ++j) {
            const double d = std::abs(out.found[j] - l);
            if (j != i && d > 1e-14 * scale && d <= opts.pair_rtol * scale && std::abs(l.imag()) <= d) {
                reals.push_back(0.5 * (l.real() + out.found[j].real()));
                break;
            }
        }
    }
    std::sort(reals.begin(), reals.end());
    for (double x : reals)
        if (out.eigenvalues.empty() || x - out.eigenvalues.back() > 1e-10 * std::max(1.0, std::abs(x)))
            out.eigenvalues.push_back(x);
    return out;
}

}  // namespace kreiss
