#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kreiss/objective.hpp"

namespace kreiss {

// Search box for the brute-force oracle. The first coordinate is sampled on a log scale of its
// distance to the boundary (x, or r - 1).
struct GridRanges {
    double lo1 = 0.0, hi1 = 0.0;  // x or r - 1, both positive
    double lo2 = 0.0, hi2 = 0.0;  // y or theta
};

struct GridResult {
    double value = kInf;
    double c1 = 0.0;                    // x or r
    double c2 = 0.0;                    // y or theta
    std::vector<double> level_values;   // best value after each level
};

struct GridOptions {
    int points = 101;       // per axis
    double zoom = 10.0;
    int seeds = 8;          // coarse-grid local minima refined independently
    int threads = 1;        // 0 selects the hardware concurrency
};

GridRanges default_grid_ranges(const MatrixProblem& prob);

// Multilevel grid minimization of g or h. Heuristic, about 1e-4 relative after 4 levels on smooth basins.
GridResult grid_min(const MatrixProblem& prob, const GridRanges& ranges, int levels = 4, const GridOptions& opts = {});

struct RatioPoint {
    double eps = 0.0;
    double ratio = 0.0;   // alpha_eps / eps  or  (rho_eps - 1) / eps, approximate
};

// Approximate ratio curve from ray sampling of {z : sigma_min(zI - A) <= eps} around each eigenvalue.
// Every sampled point lies in the pseudospectrum, so each ratio is a lower estimate.
std::vector<RatioPoint> ratio_curve(const MatrixProblem& prob, const std::vector<double>& eps_grid);

std::vector<double> log_spaced(double lo, double hi, int count);

void write_ratio_csv(std::ostream& out, const std::vector<RatioPoint>& curve);
// Objective values on an nx x ny grid of the box; columns x,y,g or r,theta,h.
void write_field_csv(std::ostream& out, const MatrixProblem& prob, const GridRanges& ranges, int nx, int ny);

}  // namespace kreiss
