#pragma once

#include <optional>

#include "kreiss/linalg.hpp"
#include "kreiss/matio.hpp"

namespace kreiss {

// A point of the search domain: (x, y) in continuous time, (r, theta) in discrete time.
struct EvalPoint {
    double c1 = 0.0;
    double c2 = 0.0;
    double value = kInf;
    Vector u, v;       // singular vectors of the smallest singular value
    bool simple = false;
    SvdResult svd;     // full SVD of the objective matrix when feasible

    bool feasible() const { return value < kInf; }
};

struct Derivatives {
    Eigen::Vector2d grad = Eigen::Vector2d::Zero();
    std::optional<Eigen::Matrix2d> hess;
    bool simple = true;
};

// First and second partial derivatives of the objective matrix with respect to the two coordinates.
struct MatrixPartials {
    Matrix d1, d2, d11, d22, d12;
};

double normalize_angle(double theta);

// G(x, y) = ((x + iy) I - A) / x  or  H(r, theta) = (r e^{i theta} I - A) / (r - 1).
Matrix objective_matrix(const MatrixProblem& prob, double c1, double c2);
MatrixPartials objective_partials(const MatrixProblem& prob, double c1, double c2, bool second = true);
bool is_feasible(const MatrixProblem& prob, double c1, double c2);

EvalPoint g_eval(const MatrixProblem& prob, double x, double y);
EvalPoint h_eval(const MatrixProblem& prob, double r, double theta);
// Dispatches on the problem's time domain.
EvalPoint evaluate(const MatrixProblem& prob, double c1, double c2);
// Value only, skipping singular vectors.
double objective_value(const MatrixProblem& prob, double c1, double c2);

// Gradients throw NonsimpleSigma at non-simple points unless `allow_nonsimple` is set, in which case
// the returned vector is one element of the subdifferential.
Derivatives g_grad(const EvalPoint& pt, const MatrixProblem& prob, bool allow_nonsimple = false);
Derivatives g_hess(const EvalPoint& pt, const MatrixProblem& prob);
Derivatives h_grad(const EvalPoint& pt, const MatrixProblem& prob, bool allow_nonsimple = false);
Derivatives h_hess(const EvalPoint& pt, const MatrixProblem& prob);
Derivatives gradient(const EvalPoint& pt, const MatrixProblem& prob, bool allow_nonsimple = false);
Derivatives hessian(const EvalPoint& pt, const MatrixProblem& prob);

}  // namespace kreiss
