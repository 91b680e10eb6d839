#pragma once

#include "kreiss/certificate.hpp"

namespace kreiss {

// Sylvester form of a continuous-time pair condition:
//   (P0 - x P1) W + W (R0 - x R1) = 0  has a nonzero solution.
// Vectorized, this is the pencil  A1 - x A2  with A1 = I (x) P0 + R0^T (x) I  and  A2 = I (x) P1 + R1^T (x) I.
struct SylvesterForm {
    Matrix P0, P1, R0, R1;
};

struct KroneckerPencil {
    Matrix A1, A2;
    double gamma = 0.0;
    double eta = 0.0;
    double orientation = 0.0;
    CertVariant variant = CertVariant::FixedDistance;
    SylvesterForm form;
};

// [[A - xI, gamma x I], [-gamma x I, xI - A^*]]; iy is an eigenvalue iff gamma is a singular value of G(x, y).
Matrix hamiltonian_matrix(const MatrixProblem& prob, double gamma, double x);

// All y where gamma is a singular value of G(x, y), refined and deduplicated.
std::vector<double> vertical_level_points(const MatrixProblem& prob, double gamma, double x,
                                          double crossing_tol = 1e-6);

// Imaginary parts of the `count` Hamiltonian eigenvalues nearest the imaginary axis.
std::vector<double> vertical_near_axis(const MatrixProblem& prob, double gamma, double x, int count = 2);

SylvesterForm fixed_form(const MatrixProblem& prob, double gamma, double eta, double orientation);
SylvesterForm variable_form(const MatrixProblem& prob, double gamma, double eta);
SylvesterForm horizontal_form(const MatrixProblem& prob, double gamma, double eta);
KroneckerPencil assemble_pencil(const SylvesterForm& form);

KroneckerPencil build_fixed_pencil(const MatrixProblem& prob, double gamma, double eta, double orientation);
KroneckerPencil build_variable_pencil(const MatrixProblem& prob, double gamma, double eta);
KroneckerPencil build_horizontal_pencil(const MatrixProblem& prob, double gamma, double eta);

// Scale factor of the horizontal pair (x, y), (beta x, y).
double horizontal_beta(double gamma, double eta);

CertificateReport fixed_distance_test(const MatrixProblem& prob, double gamma, double eta,
                                      double orientation = kPi / 2, const CertOptions& opts = {});
CertificateReport variable_distance_test(const MatrixProblem& prob, double gamma, double eta,
                                         const CertOptions& opts = {});
CertificateReport horizontal_variable_test(const MatrixProblem& prob, double gamma, double eta,
                                           const CertOptions& opts = {});

// C(a, b) = [[aI, -bI], [bI, -aI]] with n x n blocks.
Matrix kron_block_c(double a, double b, Index n);
// Factors with U V = I_{2k} (x) C + C (x) I_{2k} and V U = 2 I_k (x) C.
Matrix kron_factor_u(double a, double b, Index k, Index n);
Matrix kron_factor_v(double a, double b, Index k, Index n);

// Closed-form inverse of D = I_{2k} (x) C + (C + sI) (x) I_{2k}:
//   D^{-1} = s^{-1} I - beta^{-1} U (I - 2 s^{-1} I_k (x) C) V,  beta = s^2 + 4 (b^2 - a^2).
class KronSumInverse {
public:
    KronSumInverse(double a, double b, Index k, Index n, Complex s);

    Complex s() const { return s_; }
    Complex beta() const { return beta_; }
    Index dim() const { return 4 * k_ * n_; }

    Vector apply(const Vector& y) const;     // D^{-1} y
    Vector apply_d(const Vector& w) const;   // D w = s w + U V w
    Matrix dense() const;
    Matrix dense_d() const;

private:
    Vector apply_v(const Vector& y) const;
    Vector apply_u(const Vector& z) const;
    Vector apply_middle(const Vector& z) const;

    double a_, b_;
    Index k_, n_;
    Complex s_, beta_;
};

KronSumInverse kron_sum_inverse(double a, double b, Index k, Index n, Complex s);

}  // namespace kreiss
