#include "kreiss/localopt.hpp"

#include <Eigen/Cholesky>
#include <cmath>

namespace kreiss {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-16;

double coord_scale(const MatrixProblem& prob, const EvalPoint& pt) {
    return prob.time_domain == TimeDomain::Continuous ? pt.c1 : pt.c1 - 1.0;
}

Eigen::Vector2d newton_direction(const Eigen::Matrix2d& H, const Eigen::Vector2d& g) {
    double mu = 0.0;
    const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
    for (int attempt = 0; attempt < 40; ++attempt) {
        Eigen::LLT<Eigen::Matrix2d> llt(H + mu * Eigen::Matrix2d::Identity());
        if (llt.info() == Eigen::Success) {
            const Eigen::Vector2d p = -llt.solve(g);
            if (p.allFinite() && p.dot(g) < 0.0) return p;
        }
        mu = mu == 0.0 ? 1e-12 * scale : mu * 10.0;
    }
    return -g;
}

}  // namespace

const char* opt_status_name(OptStatus s) {
    switch (s) {
        case OptStatus::Converged: return "Converged";
        case OptStatus::MaxIter: return "MaxIter";
        case OptStatus::StalledNonsmooth: return "StalledNonsmooth";
    }
    return "Unknown";
}

double scaled_grad_norm(const MatrixProblem& prob, const EvalPoint& pt, const Eigen::Vector2d& grad) {
    const double s = coord_scale(prob, pt);
    if (prob.time_domain == TimeDomain::Continuous) return s * grad.norm();
    return std::hypot(s * grad(0), grad(1));
}

OptResult minimize(const MatrixProblem& prob, double c1, double c2, const OptOptions& opts) {
    EvalPoint pt = evaluate(prob, c1, c2);
    if (!pt.feasible()) fail(ErrorCode::InfeasibleStart, "starting point is outside the feasible domain");

    OptResult res;
    int nonsmooth_run = 0;
    for (int it = 0; it < opts.max_iter; ++it) {
        res.iterations = it;
        Derivatives d;
        bool have_hessian = false;
        if (pt.simple && opts.use_hessian) {
            try {
                d = hessian(pt, prob);
                have_hessian = true;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::DegenerateGap) throw;
                d = gradient(pt, prob, true);
            }
        } else {
            d = gradient(pt, prob, true);
        }
        const bool at_cap = pt.c1 >= opts.coord_cap;
        Eigen::Vector2d g = d.grad;
        if (at_cap && g(0) < 0.0) g(0) = 0.0;  // the cap acts as a bound constraint
        res.grad_norm = scaled_grad_norm(prob, pt, g);
        res.minimizer = pt;
        if (res.grad_norm <= opts.grad_tol * pt.value) {
            res.status = OptStatus::Converged;
            return res;
        }

        Eigen::Vector2d p;
        if (have_hessian) {
            Eigen::Matrix2d H = *d.hess;
            if (at_cap) {
                H.row(0).setZero();
                H.col(0).setZero();
                H(0, 0) = 1.0;
            }
            p = newton_direction(H, g);
            nonsmooth_run = 0;
        } else {
            const double s = coord_scale(prob, pt);
            p = -g / g.norm() * 0.1 * std::max(s, 1e-8);
            nonsmooth_run = pt.simple ? 0 : nonsmooth_run + 1;
            if (nonsmooth_run >= opts.max_nonsmooth_steps) {
                res.status = OptStatus::StalledNonsmooth;
                return res;
            }
        }

        const double slope = g.dot(p);
        if (have_hessian && -slope <= 4.0 * kEps * pt.value) {
            // Predicted Newton decrease is below the rounding level of the value.
            res.status = OptStatus::Converged;
            return res;
        }
        bool accepted = false;
        for (double t = 1.0; t > kMinStep; t *= 0.5) {
            double n1 = pt.c1 + t * p(0);
            const double n2 = pt.c2 + t * p(1);
            if (n1 > opts.coord_cap) n1 = opts.coord_cap;
            EvalPoint trial = evaluate(prob, n1, n2);
            if (trial.feasible() && trial.value <= pt.value + kArmijo * t * slope && trial.value <= pt.value) {
                accepted = !(n1 == pt.c1 && trial.c2 == pt.c2);
                pt = std::move(trial);
                break;
            }
        }
        if (!accepted) {
            // No representable decrease along the search direction.
            res.status = OptStatus::StalledNonsmooth;
            return res;
        }
    }
    res.minimizer = pt;
    const Derivatives d = gradient(pt, prob, true);
    res.grad_norm = scaled_grad_norm(prob, pt, d.grad);
    res.iterations = opts.max_iter;
    res.status = res.grad_norm <= opts.grad_tol * pt.value ? OptStatus::Converged : OptStatus::MaxIter;
    return res;
}

}  // namespace kreiss
