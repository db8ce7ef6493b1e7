#pragma once

#include "xyqc/correlators.hpp"
#include "xyqc/measures.hpp"

#include <string>
#include <vector>

namespace xyqc {

// lambda runs over start + i * step for every i with value <= end (to within 1e-9 step).
struct LambdaRange {
    double start = 0.01;
    double end   = 2.0;
    double step  = 0.01;

    std::vector<double> values() const;
};

struct SweepGrid {
    LambdaRange         lambdas;
    std::vector<double> gammas       = {0.5};
    std::vector<double> temperatures = {0.0};
    std::vector<int>    separations  = {1};
};

// Throws DomainError listing every violated constraint.
void validate(const SweepGrid &grid);

struct SweepRecord {
    double gamma       = 0.0;
    double lambda      = 0.0;
    double temperature = 0.0;
    int    n           = 1;
    double sz = 0.0, xx = 0.0, yy = 0.0, zz = 0.0;
    double deficit   = 0.0;
    double c_l1      = 0.0;
    double c_rel     = 0.0;
    double theta_opt = 0.0;
    double phi_opt   = 0.0;
};

struct DerivativeRecord {
    double gamma       = 0.0;
    double temperature = 0.0;
    int    n           = 1;
    double lambda      = 0.0;
    double d_deficit   = 0.0;
    double d_c_l1      = 0.0;
    double d_c_rel     = 0.0;
};

struct CriticalPointEstimate {
    double      lambda_c        = 0.0;
    double      uncertainty     = 0.0;
    std::string measure_name;
    double      derivative_peak = 0.0;
};

// Evaluates one (gamma, lambda, T) point for several separations; records in separation order.
std::vector<SweepRecord> evaluate_point(const ChainParams &params, const std::vector<int> &separations,
                                        const QuadratureConfig &quad = {}, const OptimizerConfig &opt = {});

// One record per grid point ordered by (gamma, temperature, n, lambda). `workers` threads share the
// grid; output order does not depend on it. A failing point aborts with a message naming the point.
std::vector<SweepRecord> run_sweep(const SweepGrid &grid, const QuadratureConfig &quad = {},
                                   const OptimizerConfig &opt = {}, int workers = 1);

// Fixed gamma and n over a lambda x kT grid; all temperatures must be > 0.
std::vector<SweepRecord> thermal_map(double gamma, const LambdaRange &lambdas, const std::vector<double> &temperatures,
                                     int n, const QuadratureConfig &quad = {}, const OptimizerConfig &opt = {},
                                     int workers = 1);

// d/dlambda of deficit, c_l1 and c_rel for records sharing (gamma, T, n) on a uniform lambda grid.
// Central differences inside, one-sided at the ends. Throws SpacingError on nonuniform spacing.
std::vector<DerivativeRecord> derivative_lambda(const std::vector<SweepRecord> &records);

// Splits a sweep into its (gamma, T, n) series and differentiates each; output keeps sweep order.
std::vector<DerivativeRecord> derivatives_by_series(const std::vector<SweepRecord> &records);

// Measure names accepted by detect_critical_point: "deficit", "c_l1", "c_rel".
const std::vector<std::string> &measure_names();

// lambda at the largest |dQ/dlambda|; ties go to the smaller lambda. Throws EmptyInputError.
CriticalPointEstimate detect_critical_point(const std::vector<DerivativeRecord> &derivatives,
                                            const std::string &measure_name);

} // namespace xyqc
