#include "kreiss/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <thread>

namespace kreiss {

namespace {

bool discrete(const MatrixProblem& prob) { return prob.time_domain == TimeDomain::Discrete; }

double to_c1(const MatrixProblem& prob, double dist) { return discrete(prob) ? 1.0 + dist : dist; }

// Log-distance box: u = log(dist), v = second coordinate.
struct Box {
    double u_lo, u_hi, v_lo, v_hi;
};

struct Cell {
    double value;
    double u, v;
};

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) out[i] = count == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (count - 1);
    return out;
}

std::vector<double> sample_box(const MatrixProblem& prob, const Box& box, int pts, int threads) {
    const std::vector<double> us = linspace(box.u_lo, box.u_hi, pts);
    const std::vector<double> vs = linspace(box.v_lo, box.v_hi, pts);
    std::vector<double> values(static_cast<size_t>(pts) * pts, kInf);
    auto work = [&](int row_begin, int row_end) {
        for (int i = row_begin; i < row_end; ++i)
            for (int j = 0; j < pts; ++j)
                values[static_cast<size_t>(i) * pts + j] = objective_value(prob, to_c1(prob, std::exp(us[i])), vs[j]);
    };
    if (threads <= 1) {
        work(0, pts);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (pts + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int b = t * chunk, e = std::min(pts, b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return values;
}

// Grid cells no larger than any of their 8 neighbours, best first.
std::vector<Cell> local_minima(const std::vector<double>& values, const Box& box, int pts) {
    const std::vector<double> us = linspace(box.u_lo, box.u_hi, pts);
    const std::vector<double> vs = linspace(box.v_lo, box.v_hi, pts);
    std::vector<Cell> out;
    for (int i = 0; i < pts; ++i) {
        for (int j = 0; j < pts; ++j) {
            const double f = values[static_cast<size_t>(i) * pts + j];
            if (!std::isfinite(f)) continue;
            bool is_min = true;
            for (int di = -1; di <= 1 && is_min; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    const int a = i + di, b = j + dj;
                    if ((di == 0 && dj == 0) || a < 0 || b < 0 || a >= pts || b >= pts) continue;
                    if (values[static_cast<size_t>(a) * pts + b] < f) {
                        is_min = false;
                        break;
                    }
                }
            if (is_min) out.push_back({f, us[i], vs[j]});
        }
    }
    std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) { return a.value < b.value; });
    return out;
}

Cell best_cell(const std::vector<double>& values, const Box& box, int pts) {
    const auto it = std::min_element(values.begin(), values.end());
    const size_t k = static_cast<size_t>(it - values.begin());
    const std::vector<double> us = linspace(box.u_lo, box.u_hi, pts);
    const std::vector<double> vs = linspace(box.v_lo, box.v_hi, pts);
    return {*it, us[k / pts], vs[k % pts]};
}

double sigma_min_shift(const MatrixProblem& prob, Complex z) {
    Matrix M = -prob.A;
    M.diagonal().array() += z;
    return sigma_min(M);
}

// Furthest point (by the domain's growth measure) along a ray from `center` that stays in the eps-pseudospectrum.
double ray_extent(const MatrixProblem& prob, Complex center, Complex dir, double eps, double reach) {
    auto measure = [&](Complex z) { return discrete(prob) ? std::abs(z) : z.real(); };
    const std::vector<double> radii = log_spaced(1e-8 * std::max(eps, 1e-300), reach, 48);
    double inside = 0.0, best = measure(center);
    double outside = -1.0;
    for (double t : radii) {
        if (sigma_min_shift(prob, center + t * dir) <= eps) {
            inside = t;
            best = std::max(best, measure(center + t * dir));
        } else if (inside > 0.0 || t > eps) {
            outside = t;
            break;
        }
    }
    if (outside > inside) {
        double lo = inside, hi = outside;
        for (int it = 0; it < 40; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (sigma_min_shift(prob, center + mid * dir) <= eps) lo = mid;
            else hi = mid;
        }
        best = std::max(best, measure(center + lo * dir));
    }
    return best;
}

}  // namespace

std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> out(count);
    const double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < count; ++i) out[i] = std::exp(count == 1 ? a : a + (b - a) * i / (count - 1));
    return out;
}

GridRanges default_grid_ranges(const MatrixProblem& prob) {
    GridRanges r;
    const double nrm = std::max(prob.norm2, 1e-300);
    if (discrete(prob)) {
        const double gap = 1.0 - prob.spectral_radius;
        r.lo1 = 1e-3 * gap;
        r.hi1 = 1e3 * std::max(gap, 1e-3);
        r.lo2 = 0.0;
        r.hi2 = 2.0 * kPi;
    } else {
        r.lo1 = 1e-3 * std::max(std::abs(prob.spectral_abscissa), 1e-300);
        r.hi1 = 1e3 * nrm;
        r.lo2 = -2.0 * nrm;
        r.hi2 = 2.0 * nrm;
    }
    return r;
}

GridResult grid_min(const MatrixProblem& prob, const GridRanges& ranges, int levels, const GridOptions& opts) {
    if (!(ranges.lo1 > 0.0 && ranges.hi1 > ranges.lo1 && ranges.hi2 > ranges.lo2))
        fail(ErrorCode::InvalidArgument, "invalid grid ranges");
    const int pts = std::max(3, opts.points | 1);
    int threads = opts.threads;
    if (threads == 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    const Box coarse{std::log(ranges.lo1), std::log(ranges.hi1), ranges.lo2, ranges.hi2};
    const std::vector<double> values = sample_box(prob, coarse, pts, threads);
    std::vector<Cell> seeds = local_minima(values, coarse, pts);
    if (seeds.empty()) seeds.push_back(best_cell(values, coarse, pts));
    if (static_cast<int>(seeds.size()) > opts.seeds) seeds.resize(opts.seeds);

    GridResult out;
    out.level_values.assign(std::max(levels, 1), kInf);
    Cell best = seeds.front();
    out.level_values[0] = best.value;
    for (const Cell& seed : seeds) {
        Cell cur = seed;
        double hu = 0.5 * (coarse.u_hi - coarse.u_lo), hv = 0.5 * (coarse.v_hi - coarse.v_lo);
        for (int lvl = 1; lvl < levels; ++lvl) {
            // Zoom around the current cell; the centre is a grid node, so values never increase.
            hu /= opts.zoom;
            hv /= opts.zoom;
            const Box box{cur.u - hu, cur.u + hu, cur.v - hv, cur.v + hv};
            const Cell c = best_cell(sample_box(prob, box, pts, threads), box, pts);
            if (c.value <= cur.value) cur = c;
            out.level_values[lvl] = std::min(out.level_values[lvl], cur.value);
        }
        if (cur.value < best.value) best = cur;
    }
    for (int lvl = 1; lvl < levels; ++lvl)
        out.level_values[lvl] = std::min(out.level_values[lvl], out.level_values[lvl - 1]);
    out.value = best.value;
    out.c1 = to_c1(prob, std::exp(best.u));
    out.c2 = discrete(prob) ? normalize_angle(best.v) : best.v;
    return out;
}

std::vector<RatioPoint> ratio_curve(const MatrixProblem& prob, const std::vector<double>& eps_grid) {
    constexpr int kDirections = 32;
    std::vector<RatioPoint> out;
    out.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        if (!(eps > 0.0)) fail(ErrorCode::InvalidArgument, "eps values must be positive");
        const double reach = 2.0 * (prob.norm2 + eps);
        double best = discrete(prob) ? prob.spectral_radius : prob.spectral_abscissa;
        for (Index i = 0; i < prob.eigenvalues.size(); ++i) {
            const Complex lam = prob.eigenvalues(i);
            for (int d = 0; d < kDirections; ++d) {
                // Rays start at the outward direction of the growth measure.
                const double base = discrete(prob) ? std::arg(lam) : 0.0;
                const Complex dir = std::polar(1.0, base + 2.0 * kPi * d / kDirections);
                best = std::max(best, ray_extent(prob, lam, dir, eps, reach));
            }
        }
        const double ratio = discrete(prob) ? (best - 1.0) / eps : best / eps;
        out.push_back({eps, ratio});
    }
    return out;
}

void write_ratio_csv(std::ostream& out, const std::vector<RatioPoint>& curve) {
    out << "eps,ratio\n" << std::setprecision(17);
    for (const RatioPoint& p : curve) out << p.eps << ',' << p.ratio << '\n';
}

void write_field_csv(std::ostream& out, const MatrixProblem& prob, const GridRanges& ranges, int nx, int ny) {
    if (nx < 1 || ny < 1) fail(ErrorCode::InvalidArgument, "field dimensions must be positive");
    out << (discrete(prob) ? "r,theta,h\n" : "x,y,g\n") << std::setprecision(17);
    const std::vector<double> d1 = log_spaced(ranges.lo1, ranges.hi1, nx);
    const std::vector<double> c2 = linspace(ranges.lo2, ranges.hi2, ny);
    for (double d : d1) {
        const double c1 = to_c1(prob, d);
        for (double v : c2) out << c1 << ',' << v << ',' << objective_value(prob, c1, v) << '\n';
    }
}

}  // namespace kreiss
