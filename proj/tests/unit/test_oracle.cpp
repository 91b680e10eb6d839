#include <doctest.h>

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "kreiss/oracle.hpp"
#include "kreiss/solver.hpp"

using namespace kreiss;

TEST_CASE("grid minimum on simple problems") {
    const MatrixProblem j = gen_test_matrix(TestMatrixKind::JordanShifted, 2, 0, GenOptions{TimeDomain::Continuous, 0.1});
    const GridResult g = grid_min(j, default_grid_ranges(j));
    CHECK(g.value == doctest::Approx(5.0 / 13.0).epsilon(1e-3));
    CHECK(g.value >= 5.0 / 13.0 * (1 - 1e-12));
    CHECK(objective_value(j, g.c1, g.c2) == doctest::Approx(g.value).epsilon(1e-14));
    for (size_t i = 1; i < g.level_values.size(); ++i) CHECK(g.level_values[i] <= g.level_values[i - 1]);

    Matrix A(1, 1);
    A(0, 0) = -1.0;
    const MatrixProblem s = make_problem(A, TimeDomain::Continuous);
    const GridResult gs = grid_min(s, default_grid_ranges(s));
    CHECK(gs.value >= 1.0);
    CHECK(gs.value <= 1.01);
}

TEST_CASE("default ranges are inside the domain") {
    GenOptions go;
    for (TimeDomain td : {TimeDomain::Continuous, TimeDomain::Discrete}) {
        go.time_domain = td;
        const MatrixProblem p = gen_test_matrix(TestMatrixKind::RandomStableShifted, 4, 1, go);
        const GridRanges r = default_grid_ranges(p);
        CHECK(r.lo1 > 0.0);
        CHECK(r.hi1 > r.lo1);
        CHECK(r.hi2 > r.lo2);
    }
}

TEST_CASE("grid agrees with the solver on random problems") {
    for (TimeDomain td : {TimeDomain::Continuous, TimeDomain::Discrete}) {
        GenOptions go;
        go.time_domain = td;
        for (std::uint64_t seed = 0; seed < 2; ++seed) {
            const MatrixProblem p = gen_test_matrix(TestMatrixKind::RandomStableShifted, 3, seed, go);
            const double k = solve_owr(p).kreiss;
            GridOptions opts;
            opts.threads = 2;
            const GridResult g = grid_min(p, default_grid_ranges(p), 4, opts);
            CHECK(1.0 / g.value <= k * (1 + 1e-10));
            CHECK(1.0 / g.value >= k * (1 - 1e-3));
        }
    }
}

TEST_CASE("ratio curve of a normal matrix is exact and bounded by the constant") {
    Matrix A = Matrix::Zero(2, 2);
    A(0, 0) = -1.0;
    A(1, 1) = Complex(-2.0, 3.0);
    const MatrixProblem p = make_problem(A, TimeDomain::Continuous);
    const std::vector<double> eps = log_spaced(1e-2, 1e2, 9);
    REQUIRE(eps.size() == 9);
    CHECK(eps.front() == doctest::Approx(1e-2));
    CHECK(eps.back() == doctest::Approx(1e2));
    for (const RatioPoint& r : ratio_curve(p, eps)) {
        // The rightmost point of the disk around -1 is -1 + eps.
        CHECK(r.ratio == doctest::Approx((-1.0 + r.eps) / r.eps).epsilon(1e-8));
        CHECK(r.ratio <= 1.0);
    }

    Matrix D = Matrix::Zero(2, 2);
    D(0, 0) = 0.5;
    D(1, 1) = -0.25;
    const MatrixProblem d = make_problem(D, TimeDomain::Discrete);
    for (const RatioPoint& r : ratio_curve(d, eps)) CHECK(r.ratio == doctest::Approx((0.5 + r.eps - 1.0) / r.eps).epsilon(1e-8));
}

TEST_CASE("ratio curve never exceeds the Kreiss constant") {
    const MatrixProblem p = gen_test_matrix(TestMatrixKind::JordanShifted, 3, 0, GenOptions{TimeDomain::Continuous, 0.3});
    const double k = solve_owr(p).kreiss;
    double best = 0.0;
    for (const RatioPoint& r : ratio_curve(p, log_spaced(1e-3, 1e1, 40))) {
        CHECK(r.ratio <= k * (1 + 1e-8));
        best = std::max(best, r.ratio);
    }
    CHECK(best >= 0.9 * k);
}

TEST_CASE("CSV writers") {
    std::ostringstream ratio;
    write_ratio_csv(ratio, {{0.1, 0.5}, {1.0, 0.75}});
    const std::string r = ratio.str();
    CHECK(r.rfind("eps,ratio\n", 0) == 0);
    CHECK(std::count(r.begin(), r.end(), '\n') == 3);

    const MatrixProblem p = gen_test_matrix(TestMatrixKind::JordanShifted, 2, 0, GenOptions{TimeDomain::Discrete, 0.5});
    std::ostringstream field;
    write_field_csv(field, p, default_grid_ranges(p), 4, 3);
    const std::string s = field.str();
    CHECK(s.rfind("r,theta,h\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 13);
}
