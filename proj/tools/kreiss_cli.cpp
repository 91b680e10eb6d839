// Command-line front end: compute the Kreiss constant, run one certificate, or emit a ratio curve.

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kreiss/cert_ct.hpp"
#include "kreiss/cert_dt.hpp"
#include "kreiss/matio.hpp"
#include "kreiss/oracle.hpp"
#include "kreiss/solver.hpp"

using json = nlohmann::json;
using namespace kreiss;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kUsage = 1, kUnstable = 2, kFailed = 3 };

struct InputFlags {
    std::string input;
    std::string format;
    std::string time;
    std::string generate;
    int size = 0;
    std::string base;
    double epsilon = 0.1;
    std::uint64_t seed = 0;
};

void add_input_flags(CLI::App* app, InputFlags& in) {
    app->add_option("--input", in.input, "matrix file");
    app->add_option("--format", in.format, "mm, csv or json (default: from the extension)")
        ->check(CLI::IsMember({"mm", "csv", "json"}));
    app->add_option("--time", in.time, "continuous or discrete")->check(CLI::IsMember({"continuous", "discrete"}));
    app->add_option("--generate", in.generate, "generate a test matrix instead of reading one")
        ->check(CLI::IsMember({"jordan", "random", "companion", "convdiff"}));
    app->add_option("--size", in.size, "dimension of the generated matrix");
    app->add_option("--base", in.base, "base matrix file for the companion/convdiff generators");
    app->add_option("--epsilon", in.epsilon, "eigenvalue offset of the generated Jordan block");
    app->add_option("--seed", in.seed, "seed for generation and randomized kernels");
}

std::optional<TimeDomain> parse_time(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return s == "discrete" ? TimeDomain::Discrete : TimeDomain::Continuous;
}

MatrixProblem load_problem(const InputFlags& in) {
    const std::optional<TimeDomain> td = parse_time(in.time);
    if (!in.generate.empty()) {
        if (!in.input.empty()) fail(ErrorCode::InvalidArgument, "--input and --generate are exclusive");
        if (in.size < 1) fail(ErrorCode::InvalidArgument, "--generate needs --size N");
        GenOptions go;
        go.time_domain = td.value_or(TimeDomain::Continuous);
        go.epsilon = in.epsilon;
        if (!in.base.empty()) go.base_path = in.base;
        return gen_test_matrix(test_matrix_kind_from_name(in.generate), in.size, in.seed, go);
    }
    if (in.input.empty()) fail(ErrorCode::InvalidArgument, "one of --input or --generate is required");
    const MatrixFormat fmt = in.format.empty() ? format_from_path(in.input) : format_from_name(in.format);
    return load_matrix(in.input, fmt, td);
}

std::optional<Coords> parse_start(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto comma = s.find(',');
    if (comma == std::string::npos) fail(ErrorCode::InvalidArgument, "--start expects \"a,b\"");
    try {
        size_t used1 = 0, used2 = 0;
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        Coords c{std::stod(a, &used1), std::stod(b, &used2)};
        if (used1 != a.size() || used2 != b.size()) throw std::invalid_argument("trailing characters");
        return c;
    } catch (const std::logic_error&) {
        fail(ErrorCode::InvalidArgument, "--start expects two numbers \"a,b\"");
    }
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::Unstable: return kUnstable;
        case ErrorCode::InvalidArgument:
        case ErrorCode::ParseError:
        case ErrorCode::NotSquare:
        case ErrorCode::ZeroEigenvalue:
        case ErrorCode::UnknownKind:
        case ErrorCode::MissingBaseMatrix:
        case ErrorCode::InfeasibleStart: return kUsage;
        default: return kFailed;
    }
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json result_json(const MatrixProblem& prob, Method method, const KreissResult& r) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = "kreiss";
    out["method"] = method_name(method);
    out["time_domain"] = time_domain_name(prob.time_domain);
    out["n"] = prob.n;
    out["kreiss"] = number_or_null(r.kreiss);
    out["gamma_inv"] = number_or_null(r.gamma_inv);
    out["minimizer"] = r.minimizer ? json::array({r.minimizer->c1, r.minimizer->c2}) : json(nullptr);
    out["restarts"] = r.restarts;
    out["certificate_calls"] = r.certificate_calls;
    out["status"] = result_status_name(r.status);
    out["message"] = r.message;
    out["approximate"] = method == Method::Grid;
    out["bounds"] = {{"lb", r.bounds.lb}, {"ub", r.bounds.ub}};
    out["wall_time_s"] = r.wall_time;
    return out;
}

json trace_json(const KreissResult& r) {
    json t = json::array();
    for (const TraceEntry& e : r.trace) {
        json row = {{"phase", e.phase}, {"gamma", e.gamma}, {"eta", e.eta}, {"verdict", e.verdict}};
        if (e.phase == "trisect") row["bounds"] = {{"lb", e.bounds.lb}, {"ub", e.bounds.ub}};
        t.push_back(row);
    }
    json pts = json::array();
    for (const LevelPointRecord& p : r.level_points)
        pts.push_back({{"c1", p.c1}, {"c2", p.c2}, {"gamma", p.gamma}, {"residual", p.residual}});
    return {{"schema_version", kSchemaVersion}, {"trace", t}, {"local_minima", r.local_minima}, {"level_points", pts}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) fail(ErrorCode::InvalidArgument, "cannot open " + path + " for writing");
    f << text;
}

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("kreiss");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* lvl = std::getenv("KREISS_LOG")) {
        const std::string s(lvl);
        if (s == "debug") spdlog::set_level(spdlog::level::debug);
        else if (s == "info") spdlog::set_level(spdlog::level::info);
    }
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();

    CLI::App app{"Kreiss constants of stable matrices"};
    app.require_subcommand(1);

    InputFlags kin, cin, vin;
    std::string method = "owr", start, certificate, dnc = "off", trace_path, field_path;
    double tol = 0.0;
    int threads = 0, field_size = 64;
    auto* kcmd = app.add_subcommand("kreiss", "compute the Kreiss constant");
    add_input_flags(kcmd, kin);
    kcmd->add_option("--method", method, "owr-bt, owr, trisection or grid")
        ->check(CLI::IsMember({"owr-bt", "owr", "trisection", "grid"}));
    kcmd->add_option("--tol", tol, "gamma_tol (owr, trisection) or relative eta_tol (owr-bt)")
        ->check(CLI::PositiveNumber);
    kcmd->add_option("--start", start, "starting point \"x,y\" or \"r,theta\"");
    kcmd->add_option("--certificate", certificate, "fixed-v, fixed-h, variable-v or variable-h")
        ->check(CLI::IsMember({"fixed-v", "fixed-h", "variable-v", "variable-h"}));
    kcmd->add_option("--dnc", dnc, "divide-and-conquer eigensolver for the certificates")
        ->check(CLI::IsMember({"on", "off"}));
    kcmd->add_option("--emit-trace", trace_path, "write the solver trace as JSON");
    kcmd->add_option("--emit-field", field_path, "write the objective on a grid as CSV");
    kcmd->add_option("--field-size", field_size, "grid points per axis for --emit-field")->check(CLI::PositiveNumber);
    kcmd->add_option("--threads", threads, "threads for grid evaluation (0: all cores)")->check(CLI::NonNegativeNumber);

    double gamma = 0.0, eta = 0.0;
    std::string variant;
    std::string cdnc = "off";
    auto* ccmd = app.add_subcommand("certify", "run one level-set certificate");
    add_input_flags(ccmd, cin);
    ccmd->add_option("--gamma", gamma, "level")->required();
    ccmd->add_option("--eta", eta, "pair separation")->required();
    ccmd->add_option("--variant", variant, "fixed-v, fixed-h, variable-v or variable-h (default variable-v)")
        ->check(CLI::IsMember({"fixed-v", "fixed-h", "variable-v", "variable-h"}));
    ccmd->add_option("--dnc", cdnc, "divide-and-conquer eigensolver")->check(CLI::IsMember({"on", "off"}));

    double eps_min = 1e-4, eps_max = 1e2;
    int points = 25;
    std::string curve_out;
    auto* vcmd = app.add_subcommand("curve", "approximate ratio curve as CSV");
    add_input_flags(vcmd, vin);
    vcmd->add_option("--eps-min", eps_min, "smallest epsilon")->check(CLI::PositiveNumber);
    vcmd->add_option("--eps-max", eps_max, "largest epsilon")->check(CLI::PositiveNumber);
    vcmd->add_option("--points", points, "number of epsilon values")->check(CLI::PositiveNumber);
    vcmd->add_option("--output", curve_out, "CSV path (default stdout)");

    // `kreiss` is the default subcommand.
    std::vector<std::string> args(argv + 1, argv + argc);
    const bool has_sub = !args.empty() && (args[0] == "kreiss" || args[0] == "certify" || args[0] == "curve" ||
                                           args[0] == "--help" || args[0] == "-h");
    if (!has_sub) args.insert(args.begin(), "kreiss");
    std::reverse(args.begin(), args.end());

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (kcmd->parsed()) {
            const MatrixProblem prob = load_problem(kin);
            const Method m = method_from_name(method);
            SolverOptions opts;
            if (!certificate.empty()) opts.certificate = cert_choice_from_name(certificate);
            opts.cert.use_dnc = dnc == "on";
            opts.cert.seed = static_cast<unsigned>(kin.seed);
            opts.threads = threads;
            if (tol > 0.0) {
                if (m == Method::OwrBacktracking) opts.eta_tol_rel = tol;
                else opts.gamma_tol = tol;
            }
            const KreissResult r = solve_kreiss(prob, m, parse_start(start), opts);
            std::cout << result_json(prob, m, r).dump(2) << '\n';
            if (!trace_path.empty()) write_text(trace_path, trace_json(r).dump(2) + "\n");
            if (!field_path.empty()) {
                std::ostringstream csv;
                write_field_csv(csv, prob, default_grid_ranges(prob), field_size, field_size);
                write_text(field_path, csv.str());
            }
            return r.status == ResultStatus::Failed ? kFailed : kOk;
        }
        if (ccmd->parsed()) {
            if (!(gamma > 0.0 && gamma < 1.0)) {
                std::cerr << "error: --gamma must lie in (0, 1)\n";
                return kUsage;
            }
            if (!(eta > 0.0)) {
                std::cerr << "error: --eta must be positive\n";
                return kUsage;
            }
            const MatrixProblem prob = load_problem(cin);
            const CertChoice choice = variant.empty() ? CertChoice::VariableVertical : cert_choice_from_name(variant);
            const bool fixed = choice == CertChoice::FixedVertical || choice == CertChoice::FixedHorizontal;
            CertOptions co;
            co.use_dnc = cdnc == "on";
            co.seed = static_cast<unsigned>(cin.seed);
            const CertificateReport rep = run_certificate(prob, fixed, choice, gamma, eta, co);
            json pts = json::array();
            for (size_t i = 0; i < rep.points.size(); ++i)
                pts.push_back({{"c1", rep.points[i].c1},
                               {"c2", rep.points[i].c2},
                               {"value", rep.points[i].value},
                               {"residual", i < rep.residuals.size() ? rep.residuals[i] : 0.0}});
            json out = {{"schema_version", kSchemaVersion},
                        {"command", "certify"},
                        {"variant", cert_variant_name(rep.variant)},
                        {"gamma", rep.gamma},
                        {"eta", rep.eta},
                        {"candidates", rep.candidates},
                        {"points", pts},
                        {"large_eig_count", rep.large_eig_count},
                        {"real_eig_tol_used", rep.real_eig_tol_used},
                        {"rejected", rep.rejected},
                        {"used_dnc", rep.used_dnc}};
            std::cout << out.dump(2) << '\n';
            return kOk;
        }
        if (vcmd->parsed()) {
            if (!(eps_max >= eps_min)) {
                std::cerr << "error: --eps-max must be at least --eps-min\n";
                return kUsage;
            }
            const MatrixProblem prob = load_problem(vin);
            const std::vector<RatioPoint> curve = ratio_curve(prob, log_spaced(eps_min, eps_max, points));
            if (curve_out.empty()) {
                write_ratio_csv(std::cout, curve);
            } else {
                std::ostringstream csv;
                write_ratio_csv(csv, curve);
                write_text(curve_out, csv.str());
            }
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
