#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "kreiss/cert_dt.hpp"
#include "kreiss/localopt.hpp"
#include "kreiss/oracle.hpp"

using namespace kreiss;
using testutil::brute_level_points;

namespace {

Matrix h_matrix(const MatrixProblem& p, double r, double theta) {
    return (std::polar(r, theta) * Matrix::Identity(p.n, p.n) - p.A) / (r - 1.0);
}

std::vector<double> brute_circular(const MatrixProblem& p, double gamma, double r) {
    return brute_level_points([&](double t) { return h_matrix(p, r, t); }, gamma, 0.0, 2 * kPi, 6000);
}

double angle_gap(double a, double b) {
    const double d = std::fmod(std::abs(a - b), 2 * kPi);
    return std::min(d, 2 * kPi - d);
}

bool share_angle(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    for (double u : a)
        for (double v : b)
            if (angle_gap(u, v) <= tol) return true;
    return false;
}

double global_min(const MatrixProblem& p) {
    const GridResult g = grid_min(p, default_grid_ranges(p));
    return minimize(p, g.c1, g.c2).minimizer.value;
}

MatrixProblem nonnormal_dt(std::uint64_t seed) {
    std::mt19937 rng(static_cast<unsigned>(seed) + 100);
    Matrix A = 1.5 * testutil::random_matrix(3, 3, rng);
    A = A.triangularView<Eigen::Upper>();
    for (Index i = 0; i < 3; ++i) A(i, i) = std::polar(0.4 + 0.15 * i, 1.1 * i + 0.3);
    return make_problem(A, TimeDomain::Discrete);
}

Matrix q_at(const QuadPencil& q, double r) { return q.Q0 + r * q.Q1 + r * r * q.Q2; }

std::vector<double> real_roots_above_one(const QuadPencil& q) {
    std::vector<double> out;
    for (const Complex& l : eig_quadratic(q.Q0, q.Q1, q.Q2, false).finite())
        if (l.real() > 1.0 + 1e-6 && std::abs(l.imag()) <= 1e-6 * std::abs(l)) out.push_back(l.real());
    return out;
}

}  // namespace

TEST_CASE("symplectic pencil eigenvalues mark singular value crossings") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const MatrixProblem p = nonnormal_dt(seed);
        const double r = 1.3 + 0.2 * seed, theta = 0.7 * seed + 0.2;
        const RealVector s = singular_values(h_matrix(p, r, theta));
        for (Index k = 0; k < s.size(); ++k) {
            const auto [M, N] = symplectic_pencil(p, s(k), r);
            CHECK(testutil::nearest_distance(eig_pencil(M, N).finite(), std::polar(1.0, theta)) < 1e-8);
        }
    }
}

TEST_CASE("circular level points on the scalar example") {
    Matrix A(1, 1);
    A(0, 0) = 0.5;
    const MatrixProblem p = make_problem(A, TimeDomain::Discrete);
    const std::vector<double> th = circular_level_points(p, 1.5, 2.0);
    REQUIRE_FALSE(th.empty());
    for (double t : th) CHECK(angle_gap(t, 0.0) < 1e-10);
    CHECK(circular_level_points(p, 1.4, 2.0).empty());
    // A transversal case: |2 e^{it} - 0.5| = 2 gives cos t = 0.125.
    const std::vector<double> two = circular_level_points(p, 2.0, 2.0);
    REQUIRE(two.size() == 2);
    CHECK(std::abs(two[0] - std::acos(0.125)) < 1e-10);
    CHECK(std::abs(two[1] - (2 * kPi - std::acos(0.125))) < 1e-10);
}

TEST_CASE("circular level points match a brute-force scan") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const MatrixProblem p = nonnormal_dt(seed);
        const double r = 1.2 + 0.3 * seed;
        for (double gamma : {0.3, 0.6, 0.9}) {
            const std::vector<double> ref = brute_circular(p, gamma, r);
            const std::vector<double> got = circular_level_points(p, gamma, r);
            CHECK(got.size() == ref.size());
            for (double t : ref) {
                double best = kInf;
                for (double u : got) best = std::min(best, angle_gap(u, t));
                CHECK(best < 1e-8);
            }
        }
    }
}

TEST_CASE("quadratic pencils are the vectorized generalized Sylvester operators") {
    std::mt19937 rng(8);
    const MatrixProblem p = nonnormal_dt(1);
    for (const QuadraticForm& f : {fixed_quad_form(p, 0.4, 0.05), variable_quad_form(p, 0.4, 0.05)}) {
        const QuadPencil q = assemble_quad_pencil(f);
        const double r = 1.37;
        const Matrix M = f.M0 + r * f.M1, N = f.N0 + r * f.N1, S = f.S0 + r * f.S1, T = f.T0 + r * f.T1;
        const Matrix W = testutil::random_matrix(M.cols(), S.rows(), rng);
        const Matrix lhs = M * W * S - N * W * T;
        CHECK((q_at(q, r) * vec(W) - vec(lhs)).norm() < 1e-12 * std::max(1.0, lhs.norm()));
    }
}

TEST_CASE("leading coefficient is singular and the constant term tracks the spectrum of A") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> u(0.05, 0.9);
    for (int trial = 0; trial < 10; ++trial) {
        const MatrixProblem p = nonnormal_dt(trial);
        const double gamma = u(rng), eta = 0.01 + 0.1 * u(rng);
        for (const QuadPencil& q : {build_quad_pencil_fixed(p, gamma, eta), build_quad_pencil_variable(p, gamma, eta)})
            CHECK(sigma_min(q.Q2) <= 1e-10 * std::max(1.0, q.Q2.norm()));
    }
    // Singular values of A inside (0, 1) so the constant term can be probed at gamma = sigma_i(A).
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const MatrixProblem p = nonnormal_dt(seed);
        const RealVector sv = singular_values(p.A);
        for (Index i = 0; i < sv.size(); ++i) {
            if (!(sv(i) > 2e-3 && sv(i) < 1.0 - 2e-3)) continue;
            auto q0_min = [&](double g) {
                const QuadPencil q = build_quad_pencil_fixed(p, g, 0.05);
                return sigma_min(q.Q0) / std::max(1.0, q.Q0.norm());
            };
            CHECK(q0_min(sv(i)) <= 1e-10);
            CHECK(q0_min(sv(i) - 1e-3) > 1e-8);
            CHECK(q0_min(sv(i) + 1e-3) > 1e-8);
        }
    }
}

TEST_CASE("radial pair helpers") {
    CHECK(radial_delta(0.5, 0.3) == doctest::Approx(-0.2));
    CHECK(radial_beta(0.5, 0.3) == doctest::Approx(1.2));
    Matrix A = Matrix::Zero(2, 2);
    A(0, 0) = 0.5;
    A(1, 1) = 0.25;
    const MatrixProblem p = make_problem(A, TimeDomain::Discrete);
    CHECK(nudge_gamma(p, 0.3) == 0.3);
    const double moved = nudge_gamma(p, 0.5);
    CHECK(moved != 0.5);
    CHECK(std::abs(moved - 0.5) == doctest::Approx(0.5e-6).epsilon(1e-6));
}

TEST_CASE("real quadratic eigenvalues are circles carrying level-set pairs") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const MatrixProblem p = nonnormal_dt(seed);
        const double gamma = std::min(0.95, 1.3 * global_min(p));
        for (const QuadPencil& q :
             {build_quad_pencil_fixed(p, gamma, 0.02), build_quad_pencil_variable(p, gamma, 0.02)}) {
            const std::vector<double> rs = real_roots_above_one(q);
            CHECK_FALSE(rs.empty());
            for (double r : rs) {
                const double rho = q.slope * r + q.offset;
                CHECK(share_angle(brute_circular(p, gamma, r), brute_circular(p, gamma, rho), 1e-6));
            }
        }
    }
}

TEST_CASE("discrete certificates: empty below the minimum, verified points above") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const MatrixProblem p = nonnormal_dt(seed);
        const double gmin = global_min(p);
        CHECK(fixed_distance_test_dt(p, 0.9 * gmin, 0.01).empty());
        CHECK(variable_distance_test_dt(p, 0.9 * gmin, 0.01).empty());

        const double gamma = std::min(0.95, 1.1 * gmin);
        const double tol = 1e-8 * std::min(p.norm2, gamma);
        for (const CertificateReport& rep :
             {fixed_distance_test_dt(p, gamma, 1e-4), variable_distance_test_dt(p, gamma, 1e-3)}) {
            CHECK_FALSE(rep.empty());
            for (const EvalPoint& pt : rep.points) {
                CHECK(pt.c1 > 1.0);
                const RealVector s = singular_values(h_matrix(p, pt.c1, pt.c2));
                CHECK((s.array() - gamma).abs().minCoeff() <= tol);
            }
        }
    }
}
