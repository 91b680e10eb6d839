// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "kreiss/cert_ct.hpp"
#include "kreiss/cert_dt.hpp"
#include "kreiss/dnc.hpp"
#include "kreiss/oracle.hpp"
#include "kreiss/solver.hpp"

using namespace kreiss;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
};

std::vector<bool> g_results(11, true);

void report(int id, const char* title, const Outcome& o, const std::string& summary) {
    g_results[id] = o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, summary.c_str());
    for (const std::string& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
}

// Level points gathered from every solver run of criteria 1 to 3.
struct LevelAudit {
    long checked = 0;
    long failed = 0;

    void add(const MatrixProblem& p, const KreissResult& r) {
        for (const LevelPointRecord& lp : r.level_points) {
            const RealVector s = singular_values(objective_matrix(p, lp.c1, lp.c2));
            ++checked;
            if ((s.array() - lp.gamma).abs().minCoeff() > 1e-8 * p.norm2) ++failed;
        }
    }
} g_audit;

MatrixProblem companion_problem() {
    // Companion matrix of the degree-10 truncated exponential series.
    const int n = 10;
    Matrix B = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) B(0, j) = -std::tgamma(n + 1.0) / std::tgamma(n - j);
    for (int i = 1; i < n; ++i) B(i, i - 1) = 1.0;
    GenOptions go;
    go.base = B;
    return gen_test_matrix(TestMatrixKind::CompanionShifted, n, 0, go);
}

void criterion_reference() {
    Outcome o;
    const MatrixProblem p = companion_problem();
    const double ref_owr = 1.29186707004828e5, ref_bt = 1.29186707015132e5;

    auto t0 = Clock::now();
    const KreissResult bt = solve_owr_backtracking(p, Coords{6.0, 6.0});
    const double t_bt = seconds_since(t0);
    t0 = Clock::now();
    const KreissResult owr = solve_owr(p, Coords{6.0, 6.0});
    const double t_owr = seconds_since(t0);
    SolverOptions to;
    to.gamma_tol = 1e-6;
    t0 = Clock::now();
    const KreissResult tri = solve_trisection(p, Coords{1.0, 0.0}, to);
    const double t_tri = seconds_since(t0);
    for (const KreissResult* r : {&bt, &owr, &tri}) g_audit.add(p, *r);

    o.require(rel(owr.kreiss, ref_owr) <= 1e-8, fmt::format("owr {:.15g} vs {:.15g}", owr.kreiss, ref_owr));
    o.require(rel(bt.kreiss, ref_bt) <= 1e-8, fmt::format("owr-bt {:.15g} vs {:.15g}", bt.kreiss, ref_bt));
    o.require(rel(tri.kreiss, ref_owr) <= 1e-4, fmt::format("trisection {:.15g}", tri.kreiss));
    o.require(owr.restarts + 1 == 2, fmt::format("owr rounds {}", owr.restarts + 1));
    o.require(bt.restarts + 1 == 2, fmt::format("owr-bt rounds {}", bt.restarts + 1));
    o.require(t_bt < 60 && t_owr < 60 && t_tri < 60, "runtime above 60 s");
    report(1, "reference table (continuous)", o,
           fmt::format("owr {:.15g} ({:.1e} rel, {} rounds, {:.1f}s); owr-bt {:.15g} ({:.1e} rel, {} rounds, {:.1f}s); "
                       "trisection {:.10g} ({:.1e} rel, {:.1f}s); discrete reference matrix unavailable, covered by 2",
                       owr.kreiss, rel(owr.kreiss, ref_owr), owr.restarts + 1, t_owr, bt.kreiss, rel(bt.kreiss, ref_bt),
                       bt.restarts + 1, t_bt, tri.kreiss, rel(tri.kreiss, ref_owr), t_tri));
}

void criterion_agreement() {
    Outcome o;
    const auto t0 = Clock::now();
    struct Slot {
        Index n;
        int per_domain;
    };
    int count = 0;
    double worst_pair = 0.0, worst_grid = 0.0;
    for (const Slot& s : {Slot{3, 4}, Slot{5, 4}, Slot{8, 2}}) {
        for (TimeDomain td : {TimeDomain::Continuous, TimeDomain::Discrete}) {
            GenOptions go;
            go.time_domain = td;
            for (int seed = 0; seed < s.per_domain; ++seed) {
                const MatrixProblem p = gen_test_matrix(TestMatrixKind::RandomStableShifted, s.n, 1000 + seed, go);
                const KreissResult bt = solve_owr_backtracking(p);
                const KreissResult owr = solve_owr(p);
                SolverOptions to;
                to.gamma_tol = 1e-7;
                const KreissResult tri = solve_trisection(p, std::nullopt, to);
                const KreissResult grid = solve_grid(p);
                for (const KreissResult* r : {&bt, &owr, &tri}) g_audit.add(p, *r);
                const std::string tag = fmt::format("n={} {} seed={}", s.n, td == TimeDomain::Continuous ? "ct" : "dt", seed);
                for (const KreissResult* r : {&bt, &owr, &tri, &grid})
                    o.require(r->status != ResultStatus::Failed, tag + " failed: " + r->message);
                const double pair = std::max({rel(bt.kreiss, owr.kreiss), rel(tri.kreiss, owr.kreiss), rel(tri.kreiss, bt.kreiss)});
                const double g = rel(grid.kreiss, owr.kreiss);
                worst_pair = std::max(worst_pair, pair);
                worst_grid = std::max(worst_grid, g);
                o.require(pair <= 1e-6, fmt::format("{}: bt {:.12g} owr {:.12g} tri {:.12g}", tag, bt.kreiss, owr.kreiss, tri.kreiss));
                o.require(g <= 1e-3, fmt::format("{}: grid {:.12g} owr {:.12g}", tag, grid.kreiss, owr.kreiss));
                ++count;
            }
        }
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < 600, fmt::format("runtime {:.0f}s", elapsed));
    report(2, "cross-method agreement", o,
           fmt::format("{} matrices, worst pairwise {:.1e}, worst grid {:.1e}, {:.0f}s", count, worst_pair, worst_grid, elapsed));
}

void criterion_normal() {
    Outcome o;
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (TimeDomain td : {TimeDomain::Continuous, TimeDomain::Discrete}) {
        for (int k = 0; k < 10; ++k) {
            const Index n = 2 + k % 4;
            // Unitary similarity of a stable diagonal.
            Matrix Z(n, n);
            std::normal_distribution<double> nd;
            for (Index i = 0; i < n; ++i)
                for (Index j = 0; j < n; ++j) Z(i, j) = Complex(nd(rng), nd(rng));
            const Matrix Q = Eigen::HouseholderQR<Matrix>(Z).householderQ() * Matrix::Identity(n, n);
            Vector d(n);
            for (Index i = 0; i < n; ++i)
                d(i) = td == TimeDomain::Continuous ? Complex(-0.05 - 2.0 * u(rng), 4.0 * (u(rng) - 0.5))
                                                    : std::polar(0.95 * u(rng), 2 * kPi * u(rng));
            const MatrixProblem p = make_problem(Q * d.asDiagonal() * Q.adjoint(), td);
            const KreissResult r = solve_owr(p);
            g_audit.add(p, r);
            worst = std::max(worst, r.kreiss - 1.0);
            o.require(r.kreiss >= 1.0 - 1e-12 && r.kreiss <= 1.0 + 1e-4, fmt::format("n={} K={:.15g}", n, r.kreiss));
        }
    }
    report(3, "normal matrices", o, fmt::format("20 matrices, max K - 1 = {:.1e}", worst));
}

Eigen::Vector2d fd_grad(const MatrixProblem& p, double c1, double c2, double h) {
    return {(objective_value(p, c1 + h, c2) - objective_value(p, c1 - h, c2)) / (2 * h),
            (objective_value(p, c1, c2 + h) - objective_value(p, c1, c2 - h)) / (2 * h)};
}

Eigen::Matrix2d fd_hess(const MatrixProblem& p, double c1, double c2, double h) {
    auto f = [&](double a, double b) { return objective_value(p, a, b); };
    const double f0 = f(c1, c2);
    Eigen::Matrix2d H;
    H(0, 0) = (f(c1 + h, c2) - 2 * f0 + f(c1 - h, c2)) / (h * h);
    H(1, 1) = (f(c1, c2 + h) - 2 * f0 + f(c1, c2 - h)) / (h * h);
    H(0, 1) = H(1, 0) = (f(c1 + h, c2 + h) - f(c1 + h, c2 - h) - f(c1 - h, c2 + h) + f(c1 - h, c2 - h)) / (4 * h * h);
    return H;
}

void criterion_derivatives() {
    Outcome o;
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_g = 0.0, worst_h = 0.0;
    for (TimeDomain td : {TimeDomain::Continuous, TimeDomain::Discrete}) {
        GenOptions go;
        go.time_domain = td;
        int done = 0;
        for (int attempt = 0; done < 50 && attempt < 500; ++attempt) {
            const MatrixProblem p = gen_test_matrix(TestMatrixKind::RandomStableShifted, 3 + attempt % 3, attempt, go);
            const bool ct = td == TimeDomain::Continuous;
            const double c1 = ct ? 0.2 + 2.0 * u(rng) : 1.2 + u(rng);
            const double c2 = ct ? 4.0 * (u(rng) - 0.5) : 2 * kPi * u(rng);
            const EvalPoint pt = evaluate(p, c1, c2);
            const RealVector& s = pt.svd.sigma;
            const Index n = s.size();
            // Smooth points only: the smallest singular value is well separated.
            if (!pt.feasible() || s(n - 2) - s(n - 1) <= 1e-3 * s(0)) continue;
            const Derivatives d = hessian(pt, p);
            const Eigen::Vector2d fg = fd_grad(p, c1, c2, 1e-6);
            const Eigen::Matrix2d fh = fd_hess(p, c1, c2, 1e-4);
            const double eg = (d.grad - fg).norm() / std::max(1.0, fg.norm());
            const double eh = d.hess ? (*d.hess - fh).norm() / std::max(1.0, fh.norm()) : kInf;
            worst_g = std::max(worst_g, eg);
            worst_h = std::max(worst_h, eh);
            o.require(eg <= 1e-6, fmt::format("gradient error {:.1e} at ({}, {})", eg, c1, c2));
            o.require(eh <= 1e-4, fmt::format("Hessian error {:.1e} at ({}, {})", eh, c1, c2));
            ++done;
        }
        o.require(done == 50, "not enough smooth points");
    }
    report(4, "derivatives", o, fmt::format("50 points per objective, gradient {:.1e}, Hessian {:.1e}", worst_g, worst_h));
}

void criterion_soundness() {
    Outcome o;
    o.require(g_audit.failed == 0, fmt::format("{} points off the level", g_audit.failed));
    o.require(g_audit.checked > 0, "no level points recorded");
    report(5, "certificate soundness", o, fmt::format("{} level points verified by SVD", g_audit.checked));
}

void criterion_structure() {
    Outcome o;
    std::mt19937 rng(51);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::normal_distribution<double> nd;
    auto random_vec = [&](Index m) {
        Vector v(m);
        for (Index i = 0; i < m; ++i) v(i) = Complex(nd(rng), nd(rng));
        return v;
    };
    double worst_id = 0.0, worst_inv = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const double a = coef(rng), b = 0.2 + std::abs(coef(rng));
        const Index k = 1 + trial % 3, n = 1 + (trial / 3) % 3;
        const Matrix C = kron_block_c(a, b, n);
        const Matrix I2k = Matrix::Identity(2 * k, 2 * k);
        const Matrix U = kron_factor_u(a, b, k, n), V = kron_factor_v(a, b, k, n);
        const Matrix ref_uv = kron(I2k, C) + kron(C, I2k), ref_vu = 2.0 * kron(Matrix::Identity(k, k), C);
        const double e1 = (U * V - ref_uv).cwiseAbs().maxCoeff() / std::max(1.0, ref_uv.cwiseAbs().maxCoeff());
        const double e2 = (V * U - ref_vu).cwiseAbs().maxCoeff() / std::max(1.0, ref_vu.cwiseAbs().maxCoeff());
        worst_id = std::max({worst_id, e1, e2});
        o.require(e1 <= 1e-12 && e2 <= 1e-12, fmt::format("factorization error {:.1e}/{:.1e}", e1, e2));

        const Complex s(coef(rng), coef(rng));
        const Matrix D = kron(I2k, C) + kron(C + s * Matrix::Identity(C.rows(), C.cols()), I2k);
        const Matrix ref = D.inverse();
        const KronSumInverse inv(a, b, k, n, s);
        const Vector y = random_vec(D.rows());
        const double ei = std::max((inv.dense() - ref).norm() / ref.norm(), (inv.apply(y) - ref * y).norm() / (ref * y).norm());
        worst_inv = std::max(worst_inv, ei);
        o.require(ei <= 1e-10, fmt::format("inverse error {:.1e}", ei));
    }
    auto singular_raised = [](double a, double b, Complex s) {
        try {
            KronSumInverse(a, b, 2, 2, s);
        } catch (const Error& e) {
            return e.code() == ErrorCode::SingularD;
        }
        return false;
    };
    o.require(singular_raised(0.7, 0.3, 0.0), "s = 0 accepted");
    o.require(singular_raised(0.7, 0.3, 2.0 * std::sqrt(0.4)), "beta = 0 (real s) accepted");
    o.require(singular_raised(0.3, 0.7, Complex(0.0, 2.0 * std::sqrt(0.4))), "beta = 0 (imaginary s) accepted");

    int flips = 0;
    std::uniform_real_distribution<double> g(0.05, 0.9);
    for (int trial = 0; trial < 10; ++trial) {
        std::mt19937 mrng(100 + trial);
        Matrix A(3, 3);
        for (Index i = 0; i < 3; ++i)
            for (Index j = 0; j < 3; ++j) A(i, j) = j > i ? 1.5 * Complex(nd(mrng), nd(mrng)) : Complex(0.0);
        for (Index i = 0; i < 3; ++i) A(i, i) = std::polar(0.4 + 0.15 * i, 1.1 * i + 0.3);
        const MatrixProblem p = make_problem(A, TimeDomain::Discrete);
        const double gamma = g(rng), eta = 0.01 + 0.1 * g(rng);
        for (const QuadPencil& q : {build_quad_pencil_fixed(p, gamma, eta), build_quad_pencil_variable(p, gamma, eta)})
            o.require(sigma_min(q.Q2) <= 1e-10 * std::max(1.0, q.Q2.norm()), "Q2 nonsingular");
        const RealVector sv = singular_values(p.A);
        for (Index i = 0; i < sv.size(); ++i) {
            if (!(sv(i) > 2e-3 && sv(i) < 1.0 - 2e-3)) continue;
            auto q0_min = [&](double gm) {
                const QuadPencil q = build_quad_pencil_fixed(p, gm, 0.05);
                return sigma_min(q.Q0) / std::max(1.0, q.Q0.norm());
            };
            const bool ok = q0_min(sv(i)) <= 1e-10 && q0_min(sv(i) - 1e-3) > 1e-8 && q0_min(sv(i) + 1e-3) > 1e-8;
            o.require(ok, fmt::format("Q0 singularity does not flip at sigma = {}", sv(i)));
            ++flips;
        }
    }
    o.require(flips > 0, "no singular value of A inside (0, 1)");
    report(6, "structural identities", o,
           fmt::format("factorization {:.1e}, inverse {:.1e}, {} Q0 probes", worst_id, worst_inv, flips));
}

void criterion_exact_1d() {
    Outcome o;
    Matrix a(1, 1);
    a(0, 0) = -1.0;
    const std::vector<double> ys = vertical_level_points(make_problem(a, TimeDomain::Continuous), std::sqrt(5.0), 1.0);
    o.require(ys.size() == 2 && std::abs(ys[0] + 1.0) <= 1e-10 && std::abs(ys[1] - 1.0) <= 1e-10, "vertical case");
    Matrix b(1, 1);
    b(0, 0) = 0.5;
    const std::vector<double> th = circular_level_points(make_problem(b, TimeDomain::Discrete), 1.5, 2.0);
    bool at_zero = !th.empty();
    for (double t : th) at_zero = at_zero && std::min(t, 2 * kPi - t) <= 1e-10;
    o.require(at_zero, "circular case");
    std::string got;
    for (double y : ys) got += fmt::format(" y={:.3e}", y);
    for (double t : th) got += fmt::format(" theta={:.3e}", t);
    report(7, "1D exact cases", o, got.empty() ? "no points" : got.substr(1));
}

// Dense eigenvalues split into those the sweep must find and those it may find.
struct DenseReal {
    std::vector<double> must;
    std::vector<double> may;
};

// Member of a tight pair that a real multiple eigenvalue could have split into.
bool split_pair(const std::vector<Complex>& eigs, const Complex& l, double pair_rtol) {
    const double scale = std::max(1.0, std::abs(l.real()));
    for (const Complex& m : eigs) {
        const double d = std::abs(m - l);
        if (d > 0.0 && d <= 2 * pair_rtol * scale && std::abs(l.imag()) <= 2 * d) return true;
    }
    return false;
}

DenseReal classify(const std::vector<Complex>& eigs, double lo, double hi, const IntervalOptions& io) {
    DenseReal out;
    const double rtol = io.real_rtol;
    for (const Complex& l : eigs) {
        if (!std::isfinite(l.real())) continue;
        const double scale = std::max(1.0, std::abs(l.real())), im = std::abs(l.imag()) / scale;
        const double edge = 1e-6 * scale;
        if (l.real() < lo - edge || l.real() > hi + edge) continue;
        if (im > 10 * rtol && !split_pair(eigs, l, io.pair_rtol)) continue;
        out.may.push_back(l.real());
        // Eigenvalues on the band or interval boundary may fall either way.
        if (im <= 0.1 * rtol && l.real() > lo + edge && l.real() < hi - edge) out.must.push_back(l.real());
    }
    return out;
}

double nearest(const std::vector<double>& v, double x) {
    double best = kInf;
    for (double u : v) best = std::min(best, std::abs(u - x));
    return best;
}

void criterion_dnc() {
    Outcome o;
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int configs = 0, matched = 0;
    auto check = [&](const std::string& tag, const std::vector<Complex>& dense, const LinearOperator& op, double lo, double hi) {
        IntervalOptions io;
        const DenseReal ref = classify(dense, lo, hi, io);
        IntervalSearch s;
        try {
            s = real_eigs_in_interval(op, lo, hi, 8, io);
        } catch (const Error& e) {
            o.require(false, tag + ": " + e.what());
            return;
        }
        for (double x : ref.must) {
            const bool ok = nearest(s.eigenvalues, x) <= 1e-7 * std::max(1.0, std::abs(x));
            o.require(ok, fmt::format("{}: dense eigenvalue {:.12g} missed", tag, x));
            matched += ok ? 1 : 0;
        }
        for (double x : s.eigenvalues)
            o.require(nearest(ref.may, x) <= 1e-7 * std::max(1.0, std::abs(x)), fmt::format("{}: spurious {:.12g}", tag, x));
        ++configs;
    };
    for (Index n : {2, 4, 6}) {
        for (int c = 0; c < 10; ++c) {
            const double gamma = 0.2 + 0.7 * u(rng), eta = 0.02 + 0.2 * u(rng);
            GenOptions go;
            const MatrixProblem pc = gen_test_matrix(TestMatrixKind::RandomStableShifted, n, 500 + 10 * n + c, go);
            const double lo = level_coord_floor(pc, gamma), hi = 4.0 * pc.norm2 + 1.0;
            const std::vector<std::pair<std::string, SylvesterForm>> forms = {
                {"fixed-v", fixed_form(pc, gamma, eta, kPi / 2)},
                {"fixed-h", fixed_form(pc, gamma, eta, 0.0)},
                {"variable-v", variable_form(pc, gamma, eta)},
                {"variable-h", horizontal_form(pc, gamma, eta)}};
            for (const auto& [name, f] : forms) {
                const KroneckerPencil kp = assemble_pencil(f);
                check(fmt::format("n={} {} #{}", n, name, c), eig_pencil(kp.A1, kp.A2).finite(), op_from_form(f), lo, hi);
            }
            go.time_domain = TimeDomain::Discrete;
            const MatrixProblem pd = gen_test_matrix(TestMatrixKind::RandomStableShifted, n, 700 + 10 * n + c, go);
            const double rlo = level_coord_floor(pd, gamma), rhi = 4.0 + 2.0 * pd.norm2;
            for (bool variable : {false, true}) {
                const QuadraticForm f = variable ? variable_quad_form(pd, gamma, eta) : fixed_quad_form(pd, gamma, eta);
                const QuadPencil q = assemble_quad_pencil(f);
                check(fmt::format("n={} dt-{} #{}", n, variable ? "variable" : "fixed", c),
                      eig_quadratic(q.Q0, q.Q1, q.Q2, false).finite(), op_from_quad_form(f), rlo, rhi);
            }
        }
    }
    report(8, "divide-and-conquer equivalence", o,
           fmt::format("{} configurations (6 variants x 10 x n in {{2,4,6}}), {} real eigenvalues matched", configs, matched));
}

void criterion_trisection() {
    Outcome o;
    int traces = 0, steps = 0;
    std::vector<MatrixProblem> probs;
    for (double e : {0.1, 0.3}) probs.push_back(gen_test_matrix(TestMatrixKind::JordanShifted, 3, 0, GenOptions{TimeDomain::Continuous, e}));
    GenOptions go;
    for (TimeDomain td : {TimeDomain::Continuous, TimeDomain::Discrete}) {
        go.time_domain = td;
        for (int seed = 0; seed < 3; ++seed) probs.push_back(gen_test_matrix(TestMatrixKind::RandomStableShifted, 4, 2000 + seed, go));
    }
    for (const MatrixProblem& p : probs) {
        SolverOptions to;
        to.gamma_tol = 1e-8;
        const KreissResult r = solve_trisection(p, std::nullopt, to);
        std::vector<const TraceEntry*> tri;
        for (const TraceEntry& t : r.trace)
            if (t.phase == "trisect") tri.push_back(&t);
        if (tri.size() < 2) {
            o.require(false, "trace too short");
            continue;
        }
        const double w0 = tri[0]->bounds.ub - tri[0]->bounds.lb, tau = r.gamma_inv;
        for (size_t k = 1; k < tri.size(); ++k) {
            const Bounds& a = tri[k - 1]->bounds;
            const Bounds& b = tri[k]->bounds;
            const double expected = std::pow(2.0 / 3.0, static_cast<double>(k)) * w0;
            o.require(std::abs((b.ub - b.lb) - expected) <= 1e-12 * w0, fmt::format("width at step {}", k));
            o.require(b.lb >= a.lb && b.ub <= a.ub, fmt::format("bounds not monotone at step {}", k));
            const double psi = std::abs(tau - tri[k]->gamma) / tau;
            o.require(tri[k]->eta <= (1.0 + psi) * tau * (1.0 + 1e-12), fmt::format("eta bound at step {}", k));
            ++steps;
        }
        ++traces;
    }
    report(9, "trisection geometry", o, fmt::format("{} traces, {} iterations checked", traces, steps));
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    struct Entry {
        int id;
        const char* title;
        std::function<void()> run;
    };
    const std::vector<Entry> criteria = {
        {1, "reference table (continuous)", criterion_reference}, {2, "cross-method agreement", criterion_agreement},
        {3, "normal matrices", criterion_normal},                 {4, "derivatives", criterion_derivatives},
        {5, "certificate soundness", criterion_soundness},        {6, "structural identities", criterion_structure},
        {7, "1D exact cases", criterion_exact_1d},                {8, "divide-and-conquer equivalence", criterion_dnc},
        {9, "trisection geometry", criterion_trisection}};
    for (const Entry& c : criteria) {
        try {
            c.run();
        } catch (const std::exception& e) {
            Outcome o;
            o.require(false, e.what());
            report(c.id, c.title, o, "exception");
        }
    }
    Outcome excluded;
    for (int id = 2; id <= 9; ++id) excluded.require(g_results[id], fmt::format("criterion {} failed", id));
    report(10, "excluded results", excluded,
           "timing comparisons and exact ratio curves are not run; the property suites 2-9 stand in for them");
    bool all = true;
    for (int id = 1; id <= 10; ++id) all = all && g_results[id];
    std::printf("%s (%.0fs)\n", all ? "ALL PASS" : "SOME FAILED", seconds_since(t0));
    return all ? 0 : 1;
}
