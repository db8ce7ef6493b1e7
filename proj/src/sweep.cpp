#include "xyqc/sweep.hpp"

#include "xyqc/errors.hpp"
#include "xyqc/xstate.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <optional>
#include <thread>

namespace xyqc {

namespace {

// Runs task(i) for i in [0, count) on `workers` threads. Rethrows the failure with the smallest index.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)> &task) {
    std::vector<std::exception_ptr> failures(count);
    std::atomic<std::size_t>        next{0};
    auto                            drain = [&] {
        for(std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch(...) { failures[i] = std::current_exception(); }
        }
    };
    const auto threads = static_cast<std::size_t>(std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, count));
    if(threads <= 1) {
        drain();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for(std::size_t t = 0; t < threads; ++t) pool.emplace_back(drain);
    }
    for(const auto &f : failures)
        if(f) std::rethrow_exception(f);
}

struct PointTask {
    double gamma;
    double temperature;
    double lambda;
};

std::vector<SweepRecord> evaluate_task(const PointTask &task, const std::vector<int> &separations,
                                       const QuadratureConfig &quad, const OptimizerConfig &opt) {
    const ChainParams params{task.gamma, task.lambda, task.temperature};
    std::vector<CorrelatorSet> sets;
    try {
        sets = correlator_sets(params, separations, quad);
    } catch(const std::exception &e) {
        throw Error(fmt::format("point gamma={} lambda={} kT={}: correlators failed: {}", task.gamma, task.lambda,
                                task.temperature, e.what()));
    }
    std::vector<SweepRecord> out;
    out.reserve(sets.size());
    for(const auto &c : sets) {
        try {
            const auto m = all_measures(assemble(c), opt);
            out.push_back({task.gamma, task.lambda, task.temperature, c.n, c.sz, c.xx, c.yy, c.zz, m.deficit, m.c_l1,
                           m.c_rel, m.argmin.theta, m.argmin.phi});
        } catch(const std::exception &e) {
            throw Error(fmt::format("point gamma={} lambda={} kT={} n={}: measures failed: {}", task.gamma,
                                    task.lambda, task.temperature, c.n, e.what()));
        }
    }
    return out;
}

double measure_value(const DerivativeRecord &d, const std::string &name) {
    if(name == "deficit") return d.d_deficit;
    if(name == "c_l1") return d.d_c_l1;
    if(name == "c_rel") return d.d_c_rel;
    throw DomainError(fmt::format("unknown measure '{}'", name));
}

} // namespace

std::vector<double> LambdaRange::values() const {
    if(!(step > 0.0) || !(start < end)) throw DomainError("lambda range needs step > 0 and start < end");
    std::vector<double> out;
    for(long i = 0;; ++i) {
        const double v = start + static_cast<double>(i) * step;
        if(v > end + 1e-9 * step) break;
        out.push_back(v);
    }
    return out;
}

void validate(const SweepGrid &grid) {
    std::vector<std::string> problems;
    if(!(grid.lambdas.step > 0.0)) problems.push_back("lambda step must be > 0");
    if(!(grid.lambdas.start < grid.lambdas.end)) problems.push_back("lambda start must be < lambda end");
    if(!(grid.lambdas.start >= 0.0)) problems.push_back("lambda start must be >= 0");
    if(grid.gammas.empty()) problems.push_back("at least one gamma is required");
    for(double g : grid.gammas)
        if(!(g >= 0.0 && g <= 1.0)) problems.push_back(fmt::format("gamma {} outside [0, 1]", g));
    if(grid.temperatures.empty()) problems.push_back("at least one temperature is required");
    for(double t : grid.temperatures)
        if(!(t >= 0.0) || !std::isfinite(t)) problems.push_back(fmt::format("temperature {} must be finite and >= 0", t));
    if(grid.separations.empty()) problems.push_back("at least one separation is required");
    for(int n : grid.separations)
        if(n < 1 || n > max_separation) problems.push_back(fmt::format("separation {} outside [1, {}]", n, max_separation));
    if(!problems.empty()) throw DomainError(fmt::format("invalid sweep grid: {}", fmt::join(problems, "; ")));
}

std::vector<SweepRecord> evaluate_point(const ChainParams &params, const std::vector<int> &separations,
                                        const QuadratureConfig &quad, const OptimizerConfig &opt) {
    return evaluate_task({params.gamma, params.temperature, params.lambda}, separations, quad, opt);
}

std::vector<SweepRecord> run_sweep(const SweepGrid &grid, const QuadratureConfig &quad, const OptimizerConfig &opt,
                                   int workers) {
    validate(grid);
    validate(quad);
    validate(opt);
    const auto lambdas = grid.lambdas.values();

    std::vector<PointTask> tasks;
    for(double g : grid.gammas)
        for(double t : grid.temperatures)
            for(double l : lambdas) tasks.push_back({g, t, l});

    std::vector<std::vector<SweepRecord>> results(tasks.size());
    parallel_for(tasks.size(), workers,
                 [&](std::size_t i) { results[i] = evaluate_task(tasks[i], grid.separations, quad, opt); });

    // Tasks are (gamma, T, lambda)-major with separations inside; reorder to (gamma, T, n, lambda).
    std::vector<SweepRecord> out;
    out.reserve(tasks.size() * grid.separations.size());
    const std::size_t per_series = lambdas.size();
    for(std::size_t block = 0; block < tasks.size(); block += per_series)
        for(std::size_t s = 0; s < grid.separations.size(); ++s)
            for(std::size_t l = 0; l < per_series; ++l) out.push_back(results[block + l][s]);
    return out;
}

std::vector<SweepRecord> thermal_map(double gamma, const LambdaRange &lambdas, const std::vector<double> &temperatures,
                                     int n, const QuadratureConfig &quad, const OptimizerConfig &opt, int workers) {
    for(double t : temperatures)
        if(!(t > 0.0)) throw DomainError(fmt::format("thermal map temperatures must be > 0, got {}", t));
    SweepGrid grid;
    grid.lambdas      = lambdas;
    grid.gammas       = {gamma};
    grid.temperatures = temperatures;
    grid.separations  = {n};
    return run_sweep(grid, quad, opt, workers);
}

std::vector<DerivativeRecord> derivative_lambda(const std::vector<SweepRecord> &records) {
    if(records.size() < 2) throw SpacingError("derivative needs at least two lambda samples");
    const auto &first = records.front();
    for(const auto &r : records)
        if(r.gamma != first.gamma || r.temperature != first.temperature || r.n != first.n)
            throw DomainError("derivative_lambda: records do not share (gamma, T, n)");
    const double h = records[1].lambda - records[0].lambda;
    if(!(h > 0.0)) throw SpacingError("lambda samples must be strictly increasing");
    for(std::size_t i = 1; i < records.size(); ++i) {
        const double d = records[i].lambda - records[i - 1].lambda;
        if(std::abs(d - h) > 1e-12)
            throw SpacingError(fmt::format("nonuniform lambda spacing at lambda={}: {} vs {}", records[i].lambda, d, h));
    }

    const std::size_t             count = records.size();
    std::vector<DerivativeRecord> out(count);
    auto diff = [&](std::size_t i, auto field) {
        if(i == 0) return (records[1].*field - records[0].*field) / h;
        if(i + 1 == count) return (records[i].*field - records[i - 1].*field) / h;
        return (records[i + 1].*field - records[i - 1].*field) / (2.0 * h);
    };
    for(std::size_t i = 0; i < count; ++i) {
        out[i] = {first.gamma,
                  first.temperature,
                  first.n,
                  records[i].lambda,
                  diff(i, &SweepRecord::deficit),
                  diff(i, &SweepRecord::c_l1),
                  diff(i, &SweepRecord::c_rel)};
    }
    return out;
}

std::vector<DerivativeRecord> derivatives_by_series(const std::vector<SweepRecord> &records) {
    std::vector<DerivativeRecord> out;
    out.reserve(records.size());
    std::size_t begin = 0;
    while(begin < records.size()) {
        std::size_t end = begin + 1;
        while(end < records.size() && records[end].gamma == records[begin].gamma &&
              records[end].temperature == records[begin].temperature && records[end].n == records[begin].n)
            ++end;
        const std::vector<SweepRecord> series(records.begin() + static_cast<long>(begin),
                                              records.begin() + static_cast<long>(end));
        const auto d = derivative_lambda(series);
        out.insert(out.end(), d.begin(), d.end());
        begin = end;
    }
    return out;
}

const std::vector<std::string> &measure_names() {
    static const std::vector<std::string> names{"deficit", "c_l1", "c_rel"};
    return names;
}

CriticalPointEstimate detect_critical_point(const std::vector<DerivativeRecord> &derivatives,
                                            const std::string &measure_name) {
    if(derivatives.empty()) throw EmptyInputError("detect_critical_point: no derivative samples");
    std::optional<std::size_t> peak;
    for(std::size_t i = 0; i < derivatives.size(); ++i) {
        const double mag = std::abs(measure_value(derivatives[i], measure_name));
        if(!peak) {
            peak = i;
            continue;
        }
        const double best = std::abs(measure_value(derivatives[*peak], measure_name));
        if(mag > best || (mag == best && derivatives[i].lambda < derivatives[*peak].lambda)) peak = i;
    }
    CriticalPointEstimate est;
    est.lambda_c        = derivatives[*peak].lambda;
    est.uncertainty     = derivatives.size() > 1 ? std::abs(derivatives[1].lambda - derivatives[0].lambda) : 0.0;
    est.measure_name    = measure_name;
    est.derivative_peak = measure_value(derivatives[*peak], measure_name);
    return est;
}

} // namespace xyqc
