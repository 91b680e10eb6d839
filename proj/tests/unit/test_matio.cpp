#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "kreiss/matio.hpp"

using namespace kreiss;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name, const std::string& contents) {
    const fs::path p = fs::temp_directory_path() / ("kreiss_matio_" + name);
    std::ofstream(p) << contents;
    return p;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("load a scalar stable matrix") {
    const fs::path p = temp_file("scalar.mtx", "%%MatrixMarket matrix array real general\n1 1\n-1.0\n");
    const MatrixProblem prob = load_matrix(p.string(), MatrixFormat::MatrixMarket, TimeDomain::Continuous);
    CHECK(prob.n == 1);
    CHECK(prob.spectral_abscissa == doctest::Approx(-1.0));
    CHECK(prob.norm2 == doctest::Approx(1.0));
}

TEST_CASE("unstable and malformed inputs are rejected") {
    const fs::path p = temp_file("unstable.mtx", "%%MatrixMarket matrix array real general\n1 1\n2.0\n");
    CHECK(code_of([&] { load_matrix(p.string(), MatrixFormat::MatrixMarket, TimeDomain::Continuous); }) ==
          ErrorCode::Unstable);
    const fs::path q = temp_file("rect.csv", "1,2\n3,4\n5,6\n");
    CHECK(code_of([&] { load_matrix(q.string(), MatrixFormat::CSV, TimeDomain::Continuous); }) ==
          ErrorCode::NotSquare);
    const fs::path r = temp_file("bad.csv", "1,abc\n3,4\n");
    CHECK(code_of([&] { load_matrix(r.string(), MatrixFormat::CSV, TimeDomain::Continuous); }) ==
          ErrorCode::ParseError);
    // Borderline stability is rejected.
    const fs::path s = temp_file("edge.csv", "0\n");
    CHECK(code_of([&] { load_matrix(s.string(), MatrixFormat::CSV, TimeDomain::Continuous); }) ==
          ErrorCode::Unstable);
}

TEST_CASE("discrete problems") {
    const fs::path p = temp_file("half.csv", "0.5,0\n0,0.5\n");
    const MatrixProblem prob = load_matrix(p.string(), MatrixFormat::CSV, TimeDomain::Discrete);
    CHECK(prob.spectral_radius == doctest::Approx(0.5));

    Matrix A = Matrix::Zero(2, 2);
    A(0, 0) = 0.5;
    CHECK(code_of([&] { make_problem(A, TimeDomain::Discrete); }) == ErrorCode::ZeroEigenvalue);
    A(1, 1) = 1.0;
    CHECK(code_of([&] { make_problem(A, TimeDomain::Discrete); }) == ErrorCode::Unstable);
}

TEST_CASE("complex CSV cells") {
    const fs::path p = temp_file("complex.csv", "-1+2i,0\n0,-2-0.5i\n");
    const MatrixProblem prob = load_matrix(p.string(), MatrixFormat::CSV, TimeDomain::Continuous);
    CHECK(prob.A(0, 0) == Complex(-1.0, 2.0));
    CHECK(prob.A(1, 1) == Complex(-2.0, -0.5));
    CHECK(prob.spectral_abscissa == doctest::Approx(-1.0));
}

TEST_CASE("round trips preserve entries") {
    std::mt19937 rng(1);
    Matrix A = testutil::random_matrix(4, 4, rng);
    A.diagonal().array() -= 6.0;
    const fs::path dir = fs::temp_directory_path();

    const std::string json = (dir / "kreiss_rt.json").string();
    save_matrix(json, A, MatrixFormat::JSON, TimeDomain::Continuous);
    const MatrixProblem pj = load_matrix(json, MatrixFormat::JSON);
    CHECK((pj.A - A).cwiseAbs().maxCoeff() == 0.0);
    CHECK(pj.time_domain == TimeDomain::Continuous);

    for (MatrixFormat f : {MatrixFormat::CSV, MatrixFormat::MatrixMarket}) {
        const std::string path = (dir / (f == MatrixFormat::CSV ? "kreiss_rt.csv" : "kreiss_rt.mtx")).string();
        save_matrix(path, A, f);
        const MatrixProblem p = load_matrix(path, f, TimeDomain::Continuous);
        for (Index i = 0; i < 4; ++i)
            for (Index j = 0; j < 4; ++j) CHECK(std::abs(p.A(i, j) - A(i, j)) <= 1e-15 * std::abs(A(i, j)));
    }
}

TEST_CASE("generated Jordan blocks") {
    MatrixProblem p = gen_test_matrix(TestMatrixKind::JordanShifted, 1, 0, GenOptions{TimeDomain::Continuous, 1.0});
    CHECK(p.A(0, 0) == Complex(-1.0, 0.0));
    p = gen_test_matrix(TestMatrixKind::JordanShifted, 2, 0, GenOptions{TimeDomain::Continuous, 0.1});
    CHECK(p.spectral_abscissa == doctest::Approx(-0.1));
    CHECK(p.A(0, 1) == Complex(1.0, 0.0));
    p = gen_test_matrix(TestMatrixKind::JordanShifted, 3, 0, GenOptions{TimeDomain::Discrete, 0.2});
    CHECK(p.spectral_radius == doctest::Approx(0.8));
}

TEST_CASE("random generator is stable and deterministic") {
    for (TimeDomain td : {TimeDomain::Continuous, TimeDomain::Discrete}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GenOptions go;
            go.time_domain = td;
            const MatrixProblem a = gen_test_matrix(TestMatrixKind::RandomStableShifted, 5, seed, go);
            const MatrixProblem b = gen_test_matrix(TestMatrixKind::RandomStableShifted, 5, seed, go);
            CHECK((a.A - b.A).norm() == 0.0);
            if (td == TimeDomain::Continuous) CHECK(a.spectral_abscissa < 0.0);
            else CHECK(a.spectral_radius < 1.0);
        }
    }
}

TEST_CASE("shifted constructions need a base matrix") {
    CHECK(code_of([] { gen_test_matrix(TestMatrixKind::CompanionShifted, 3, 0); }) == ErrorCode::MissingBaseMatrix);
    CHECK(code_of([] { test_matrix_kind_from_name("spiral"); }) == ErrorCode::UnknownKind);

    Matrix B(2, 2);
    B << 1.0, 2.0, 0.0, -3.0;
    GenOptions go;
    go.base = B;
    const MatrixProblem c = gen_test_matrix(TestMatrixKind::CompanionShifted, 2, 0, go);
    CHECK(c.spectral_abscissa == doctest::Approx(1.0 - 1.001 * 1.0));

    B << -3.0, 2.0, 0.0, -5.0;
    go.base = B;
    go.time_domain = TimeDomain::Discrete;
    const MatrixProblem d = gen_test_matrix(TestMatrixKind::ConvDiffShifted, 2, 0, go);
    CHECK((d.A - (B / 13.0 + 1.1 * Matrix::Identity(2, 2))).norm() < 1e-15);
}
