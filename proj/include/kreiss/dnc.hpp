#pragma once

#include "kreiss/cert_ct.hpp"
#include "kreiss/cert_dt.hpp"
#include "kreiss/linalg.hpp"

namespace kreiss {

// Operators of dimension 4n^2 whose products and shifted solves go through 2n x 2n Sylvester equations.
LinearOperator op_from_form(const SylvesterForm& form);
LinearOperator op_fixed_ct(const MatrixProblem& prob, double gamma, double eta, double orientation);
LinearOperator op_variable_ct(const MatrixProblem& prob, double gamma, double eta);
LinearOperator op_horizontal_ct(const MatrixProblem& prob, double gamma, double eta);

// Companion linearization of the quadratic problem, dimension 8n^2; shifted solves use one
// generalized Sylvester equation plus back-substitution.
LinearOperator op_from_quad_form(const QuadraticForm& form);
LinearOperator op_quad_dt(const MatrixProblem& prob, double gamma, double eta, bool variable);

// Products with the quadratic coefficients through their Sylvester forms.
Vector quad_apply_q0(const QuadraticForm& form, const Vector& w);
Vector quad_apply_q1(const QuadraticForm& form, const Vector& w);
Vector quad_apply_q2(const QuadraticForm& form, const Vector& w);

struct IntervalOptions {
    double real_rtol = 1e-8;
    double pair_rtol = 1e-6;   // separation below which a split pair may be a real multiple eigenvalue
    double radius_factor = 0.95;
    int max_shift_factor = 4;  // shift budget = factor * dim
    EigsOptions eigs;
};

struct IntervalSearch {
    std::vector<double> eigenvalues;  // real eigenvalues in [lo, hi], ascending
    std::vector<Complex> found;       // every converged eigenvalue inside a cleared disk
    int shifts = 0;
    int unconverged = 0;
};

IntervalSearch real_eigs_in_interval(const LinearOperator& op, double lo, double hi, Index k_per_shift,
                                     const IntervalOptions& opts = {});

}  // namespace kreiss
