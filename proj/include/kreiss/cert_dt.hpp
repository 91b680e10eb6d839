#pragma once

#include <utility>

#include "kreiss/certificate.hpp"

namespace kreiss {

// Generalized Sylvester form of a discrete-time pair condition on circles r and rho(r) = a r + b:
//   M(r) W S(r) - N(r) W T(r) = 0,  with every coefficient affine in r (X(r) = X0 + r X1).
struct QuadraticForm {
    Matrix M0, M1, N0, N1, S0, S1, T0, T1;
    double a = 1.0;
    double b = 0.0;
};

struct QuadPencil {
    Matrix Q0, Q1, Q2;  // Q0 + r Q1 + r^2 Q2
    double gamma = 0.0;
    double eta = 0.0;
    double slope = 1.0;   // rho(r) = slope * r + offset
    double offset = 0.0;
    CertVariant variant = CertVariant::FixedRadial;
    QuadraticForm form;
};

// Pencil [[A, gamma (r-1) I], [0, rI]] - lambda [[rI, 0], [gamma (r-1) I, A^*]].
std::pair<Matrix, Matrix> symplectic_pencil(const MatrixProblem& prob, double gamma, double r);

// All theta in [0, 2 pi) where gamma is a singular value of H(r, theta), refined and deduplicated.
// Arguments of the `count` symplectic-pencil eigenvalues nearest the unit circle.
std::vector<double> circular_near_unit(const MatrixProblem& prob, double gamma, double r, int count = 2);
std::vector<double> circular_level_points(const MatrixProblem& prob, double gamma, double r,
                                          double crossing_tol = 1e-6);

QuadraticForm fixed_quad_form(const MatrixProblem& prob, double gamma, double eta);
QuadraticForm variable_quad_form(const MatrixProblem& prob, double gamma, double eta);
QuadPencil assemble_quad_pencil(const QuadraticForm& form);

QuadPencil build_quad_pencil_fixed(const MatrixProblem& prob, double gamma, double eta);
QuadPencil build_quad_pencil_variable(const MatrixProblem& prob, double gamma, double eta);

// delta = -eta / (1 + gamma), beta = 1 - delta.
double radial_delta(double gamma, double eta);
double radial_beta(double gamma, double eta);

// Moves gamma by 1e-6 gamma away from any singular value of A within 1e-8, keeping Q0 invertible.
double nudge_gamma(const MatrixProblem& prob, double gamma);

CertificateReport fixed_distance_test_dt(const MatrixProblem& prob, double gamma, double eta,
                                         const CertOptions& opts = {});
CertificateReport variable_distance_test_dt(const MatrixProblem& prob, double gamma, double eta,
                                            const CertOptions& opts = {});

}  // namespace kreiss
