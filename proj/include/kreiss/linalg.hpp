#pragma once

#include <Eigen/SparseCore>
#include <functional>
#include <vector>

#include "kreiss/errors.hpp"
#include "kreiss/types.hpp"

namespace kreiss {

// Singular value decomposition with sigma sorted nonincreasing.
struct SvdResult {
    RealVector sigma;
    Matrix U;
    Matrix V;
};

SvdResult svd_full(const Matrix& M);
RealVector singular_values(const Matrix& M);
double sigma_min(const Matrix& M);

// Eigenvalues as generalized pairs lambda = alpha / beta. Standard problems use beta = 1.
struct Spectrum {
    Vector alpha;
    Vector beta;
    double norm_m = 0.0;  // Frobenius norms of the two pencil matrices
    double norm_n = 0.0;

    Index size() const { return alpha.size(); }
    bool is_infinite(Index i, double tol = 1e-11) const;
    Complex eigenvalue(Index i) const;
    // Finite eigenvalues only.
    std::vector<Complex> finite(double tol = 1e-11) const;
    Index infinite_count(double tol = 1e-11) const;
};

Spectrum eig_dense(const Matrix& M);

struct EigDecomposition {
    Vector values;
    Matrix vectors;
};
EigDecomposition eig_dense_vectors(const Matrix& M);

// Generalized eigenvalues of det(M - lambda N) = 0. Real inputs take the real QZ path.
Spectrum eig_pencil(const Matrix& M, const Matrix& N);

// Eigenvalues r of Q0 + r Q1 + r^2 Q2 via the companion linearization
// [[Q1, Q0], [-I, 0]] - r [[-Q2, 0], [0, -I]].
Spectrum eig_quadratic(const Matrix& Q0, const Matrix& Q1, const Matrix& Q2, bool check_well_posed = true);

// Solves P W + W Q = C.
Matrix solve_sylvester(const Matrix& P, const Matrix& Q, const Matrix& C);

// Solves M W Mt^* - N W Nt^* = Y.
Matrix solve_gen_sylvester(const Matrix& M, const Matrix& Mt, const Matrix& N, const Matrix& Nt,
                           const Matrix& Y);

// Bartels-Stewart with the Schur forms cached, for repeated solves of P W + W Q = C.
class SylvesterSolver {
public:
    SylvesterSolver(const Matrix& P, const Matrix& Q, double sep_tol = 1e-13);
    Matrix solve(const Matrix& C) const;

private:
    Matrix up_, tp_, uq_, tq_;
};

// Solves A X B - C X D = E using QZ forms of (A, C) and (B, D), cached for repeated solves.
class GenSylvesterSolver {
public:
    GenSylvesterSolver(const Matrix& A, const Matrix& B, const Matrix& C, const Matrix& D,
                       double sep_tol = 1e-13);
    Matrix solve(const Matrix& E) const;

private:
    Matrix s1_, t1_, q1_, z1_;
    Matrix s2_, t2_, q2_, z2_;
};

using SparseMatrix = Eigen::SparseMatrix<Complex>;
using VectorMap = std::function<Vector(const Vector&)>;

// Implicit operator for the generalized problem A v = lambda B v (B = I when apply_mass is empty).
struct LinearOperator {
    Index dim = 0;
    VectorMap apply;
    VectorMap apply_mass;
    // Returns a solver for (A - s B) w = y, factorized once per shift.
    std::function<VectorMap(Complex)> factor_shifted;
    SparseMatrix mass_matrix;

    Vector mass(const Vector& v) const { return apply_mass ? apply_mass(v) : v; }
    Vector shifted_inverse_apply(Complex s, const Vector& y) const { return factor_shifted(s)(y); }

    static LinearOperator from_dense(const Matrix& A);
    static LinearOperator from_dense(const Matrix& A, const Matrix& B);
};

struct RitzValue {
    Complex value;
    double residual = 0.0;  // relative residual of the Ritz pair against the operator
    bool converged = false;
};

struct EigsOptions {
    int max_restarts = 300;
    double tol = 1e-12;        // Arnoldi convergence on the shift-inverted problem
    double accept_tol = 1e-8;  // final residual check on the original problem
    Index subspace = 0;        // 0 selects a default
    unsigned seed = 0;
};

struct ShiftInvertResult {
    std::vector<RitzValue> values;  // sorted by distance to the shift
    int restarts = 0;
};

ShiftInvertResult eigs_shift_invert(const LinearOperator& op, Complex shift, Index k,
                                    const EigsOptions& opts = {});

// Kronecker product helpers.
Matrix kron(const Matrix& X, const Matrix& Y);
SparseMatrix kron_sparse(const SparseMatrix& X, const SparseMatrix& Y);
Vector vec(const Matrix& W);
Matrix unvec(const Vector& w, Index rows, Index cols);

}  // namespace kreiss
