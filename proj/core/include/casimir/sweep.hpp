#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/planar.hpp"
#include "casimir/scenario.hpp"

namespace casimir {

// One evaluated sweep point. ok = false marks a point whose computation
// threw; the partial value and error carried by the exception are kept so
// the emitted row is still informative.
struct CurveRecord {
    double separation = 0.0;   // m
    double temperature = 0.0;  // K
    double value = 0.0;        // J/m^2
    double abs_error = 0.0;
    std::size_t n_terms = 0;
    std::size_t quad_evals = 0;
    bool ok = true;
};

struct SweepResult {
    std::vector<CurveRecord> records;
    bool all_ok = true;
};

struct SweepRequest {
    DielectricModel halfspace;
    DielectricModel gap;
    double separation = 0.0;   // fixed value when sweeping T
    double temperature = 0.0;  // fixed value when sweeping d
    SweepSpec spec;
    double tol = 1e-8;
    int threads = 1;
};

// Grid points for a spec (log- or linear-spaced, endpoints included).
std::vector<double> sweep_grid(const SweepSpec& spec);

// Evaluates free_energy over the grid. Points run concurrently across
// `threads` workers; records land in grid order and are bitwise independent
// of the thread count.
SweepResult run_sweep(const SweepRequest& req);

// "%.15e" rendering used for every floating-point cell.
std::string format_sci(double v);

// Header + one row per record:
//   d[m],T[K],value[J/m^2],abs_error[J/m^2],n_terms,quad_evals,status
std::string render_sweep_csv(const SweepResult& result);

// Pressure P = -dF/dd from an energy curve by central differences on the
// (possibly non-uniform) grid, one-sided at the ends. abs_error combines the
// stencil truncation estimate with the propagated point errors.
struct ForceRecord {
    double separation = 0.0;
    double pressure = 0.0;  // J/m^3
    double abs_error = 0.0;
};

std::vector<ForceRecord> force_from_energy(
    const std::vector<CurveRecord>& curve);

std::string render_force_csv(const std::vector<ForceRecord>& records);

}  // namespace casimir
