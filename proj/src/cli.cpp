#include "xyqc/cli.hpp"

#include "xyqc/errors.hpp"
#include "xyqc/oracle.hpp"
#include "xyqc/xstate.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace xyqc::cli {

namespace {

struct OptionSpec {
    std::string key;
    std::string names;
    std::string help;
    bool        flag = false;
};

const std::vector<OptionSpec> &common_options() {
    static const std::vector<OptionSpec> specs{
        {"workers", "--workers", "Worker threads (default: $XYQC_WORKERS or 1)"},
        {"quad-nodes", "--quad-nodes", "Initial quadrature nodes per subinterval (>= 16)"},
        {"quad-doublings", "--quad-doublings", "Maximum node doublings (>= 1)"},
        {"quad-tol", "--quad-tol", "Absolute quadrature tolerance in (0, 1e-6]"},
        {"grid-points", "--grid-points", "Deficit coarse-grid points per axis (>= 8)"},
        {"refine-tol", "--refine-tol", "Deficit refinement tolerance (> 0)"},
        {"max-refine-iters", "--max-refine-iters", "Deficit refinement iteration cap (>= 1)"},
    };
    return specs;
}

std::vector<OptionSpec> subcommand_options(Subcommand sub) {
    switch(sub) {
        case Subcommand::point:
            return {{"gamma", "--gamma", "Anisotropy in [0, 1]"},
                    {"lambda", "--lambda", "Inverse field strength >= 0"},
                    {"temperature", "--temperature,--kt", "kT >= 0 (0: ground state)"},
                    {"n", "--n", "Separation(s), comma separated"},
                    {"out", "--out", "Write records as CSV to this path"}};
        case Subcommand::sweep:
            return {{"gamma", "--gamma", "Anisotropies, comma separated"},
                    {"lambda-range", "--lambda-range", "start:end:step"},
                    {"temperature", "--temperature,--kt", "Temperatures, comma separated (0 allowed)"},
                    {"n", "--n", "Separations, comma separated"},
                    {"out", "--out", "CSV output path (default: stdout)"},
                    {"deriv-out", "--deriv-out", "Write lambda derivatives as CSV to this path"},
                    {"plot-out", "--plot-out", "Write whitespace-separated plot data to this path"}};
        case Subcommand::thermal_map:
            return {{"gamma", "--gamma", "Anisotropy in [0, 1] (0: XX, 1: Ising)"},
                    {"lambda-range", "--lambda-range", "start:end:step"},
                    {"kt-range", "--kt-range", "start:end:step, all > 0"},
                    {"n", "--n", "Separation"},
                    {"out", "--out", "CSV output path (default: stdout)"},
                    {"plot-out", "--plot-out", "Write whitespace-separated plot data to this path"}};
        case Subcommand::oracle_compare:
            return {{"gamma", "--gamma", "Anisotropy in [0, 1]"},
                    {"lambda", "--lambda", "Inverse field strength >= 0"},
                    {"kt", "--kt,--temperature", "kT > 0"},
                    {"n", "--n", "Separation"},
                    {"sizes", "--sizes", "Chain sizes, comma separated (default 6,8,10)"},
                    {"allow-large", "--allow-large", "Permit N = 11, 12", true}};
    }
    return {};
}

const char *subcommand_name(Subcommand sub) {
    switch(sub) {
        case Subcommand::point: return "point";
        case Subcommand::sweep: return "sweep";
        case Subcommand::thermal_map: return "thermal-map";
        case Subcommand::oracle_compare: return "oracle-compare";
    }
    return "";
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if(b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::string              part;
    std::istringstream       in(text);
    while(std::getline(in, part, sep)) parts.push_back(trim(part));
    if(!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

// Accumulates parse problems instead of stopping at the first.
class ValueReader {
  public:
    explicit ValueReader(const std::map<std::string, std::string> &values) : values_(values) {}

    bool has(const std::string &key) const { return values_.count(key) != 0; }

    std::optional<double> real(const std::string &key) {
        if(!has(key)) return std::nullopt;
        return to_real(key, values_.at(key));
    }

    std::optional<int> integer(const std::string &key) {
        if(!has(key)) return std::nullopt;
        return to_int(key, values_.at(key));
    }

    std::optional<std::vector<double>> reals(const std::string &key) {
        if(!has(key)) return std::nullopt;
        std::vector<double> out;
        for(const auto &p : split(values_.at(key), ','))
            if(auto v = to_real(key, p)) out.push_back(*v);
        return out;
    }

    std::optional<std::vector<int>> integers(const std::string &key) {
        if(!has(key)) return std::nullopt;
        std::vector<int> out;
        for(const auto &p : split(values_.at(key), ','))
            if(auto v = to_int(key, p)) out.push_back(*v);
        return out;
    }

    std::optional<LambdaRange> range(const std::string &key) {
        if(!has(key)) return std::nullopt;
        const auto parts = split(values_.at(key), ':');
        if(parts.size() != 3) {
            problems.push_back(fmt::format("--{} expects start:end:step, got '{}'", key, values_.at(key)));
            return std::nullopt;
        }
        const auto a = to_real(key, parts[0]);
        const auto b = to_real(key, parts[1]);
        const auto s = to_real(key, parts[2]);
        if(!a || !b || !s) return std::nullopt;
        if(!(*a < *b)) problems.push_back(fmt::format("--{}: start {} must be < end {}", key, *a, *b));
        if(!(*s > 0.0)) problems.push_back(fmt::format("--{}: step {} must be > 0", key, *s));
        return LambdaRange{*a, *b, *s};
    }

    bool flag(const std::string &key) {
        if(!has(key)) return false;
        const auto &v = values_.at(key);
        if(v.empty() || v == "true" || v == "1" || v == "yes") return true;
        if(v == "false" || v == "0" || v == "no") return false;
        problems.push_back(fmt::format("--{} expects a boolean, got '{}'", key, v));
        return false;
    }

    std::string text(const std::string &key) const { return has(key) ? values_.at(key) : std::string{}; }

    std::vector<std::string> problems;

  private:
    std::optional<double> to_real(const std::string &key, const std::string &text) {
        double      v   = 0.0;
        const char *end = text.data() + text.size();
        auto [ptr, ec]  = std::from_chars(text.data(), end, v);
        if(text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) {
            problems.push_back(fmt::format("--{}: '{}' is not a finite number", key, text));
            return std::nullopt;
        }
        return v;
    }

    std::optional<int> to_int(const std::string &key, const std::string &text) {
        int         v   = 0;
        const char *end = text.data() + text.size();
        auto [ptr, ec]  = std::from_chars(text.data(), end, v);
        if(text.empty() || ec != std::errc{} || ptr != end) {
            problems.push_back(fmt::format("--{}: '{}' is not an integer", key, text));
            return std::nullopt;
        }
        return v;
    }

    const std::map<std::string, std::string> &values_;
};

void check_gamma(double g, std::vector<std::string> &problems) {
    if(!(g >= 0.0 && g <= 1.0)) problems.push_back(fmt::format("gamma {} must lie in [0, 1]", g));
}

void check_separation(int n, std::vector<std::string> &problems) {
    if(n < 1 || n > max_separation) problems.push_back(fmt::format("separation {} must lie in [1, {}]", n, max_separation));
}

RunConfig build_config(Subcommand sub, const std::map<std::string, std::string> &values) {
    ValueReader  in(values);
    RunConfig    cfg;
    auto        &problems = in.problems;
    cfg.subcommand        = sub;

    // Common numerics.
    if(const char *env = std::getenv("XYQC_WORKERS"); env && !in.has("workers")) {
        int w = 0;
        const std::string text(env);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
        if(ec != std::errc{} || ptr != text.data() + text.size() || w < 1)
            problems.push_back(fmt::format("XYQC_WORKERS must be a positive integer, got '{}'", text));
        else
            cfg.workers = w;
    }
    if(auto v = in.integer("workers")) cfg.workers = *v;
    if(cfg.workers < 1) problems.push_back(fmt::format("--workers must be >= 1, got {}", cfg.workers));
    if(auto v = in.integer("quad-nodes")) cfg.quad.initial_nodes = *v;
    if(auto v = in.integer("quad-doublings")) cfg.quad.max_doublings = *v;
    if(auto v = in.real("quad-tol")) cfg.quad.abs_tol = *v;
    if(auto v = in.integer("grid-points")) cfg.opt.grid_points = *v;
    if(auto v = in.real("refine-tol")) cfg.opt.refine_tol = *v;
    if(auto v = in.integer("max-refine-iters")) cfg.opt.max_refine_iters = *v;
    try {
        validate(cfg.quad);
    } catch(const DomainError &e) { problems.push_back(e.what()); }
    try {
        validate(cfg.opt);
    } catch(const DomainError &e) { problems.push_back(e.what()); }

    cfg.output_path     = in.text("out");
    cfg.derivative_path = in.text("deriv-out");
    cfg.plot_path       = in.text("plot-out");

    switch(sub) {
        case Subcommand::point: {
            const auto g = in.real("gamma");
            const auto l = in.real("lambda");
            if(!in.has("gamma")) problems.push_back("point requires --gamma");
            if(!in.has("lambda")) problems.push_back("point requires --lambda");
            cfg.params.gamma       = g.value_or(0.0);
            cfg.params.lambda      = l.value_or(0.0);
            cfg.params.temperature = in.real("temperature").value_or(0.0);
            if(g) check_gamma(*g, problems);
            if(l && *l < 0.0) problems.push_back(fmt::format("lambda {} must be >= 0", *l));
            if(cfg.params.temperature < 0.0)
                problems.push_back(fmt::format("temperature {} must be >= 0", cfg.params.temperature));
            cfg.separations = in.integers("n").value_or(std::vector<int>{1});
            if(cfg.separations.empty()) problems.push_back("--n needs at least one separation");
            for(int n : cfg.separations) check_separation(n, problems);
            break;
        }
        case Subcommand::sweep: {
            cfg.grid.gammas       = in.reals("gamma").value_or(std::vector<double>{0.5});
            cfg.grid.lambdas      = in.range("lambda-range").value_or(LambdaRange{0.01, 2.0, 0.01});
            cfg.grid.temperatures = in.reals("temperature").value_or(std::vector<double>{0.0});
            cfg.grid.separations  = in.integers("n").value_or(std::vector<int>{1});
            if(cfg.grid.gammas.empty()) problems.push_back("--gamma needs at least one value");
            for(double g : cfg.grid.gammas) check_gamma(g, problems);
            if(cfg.grid.lambdas.start < 0.0) problems.push_back("lambda range must start at >= 0");
            for(double t : cfg.grid.temperatures)
                if(t < 0.0) problems.push_back(fmt::format("temperature {} must be >= 0", t));
            for(int n : cfg.grid.separations) check_separation(n, problems);
            break;
        }
        case Subcommand::thermal_map: {
            const auto g = in.reals("gamma");
            if(!g) problems.push_back("thermal-map requires --gamma");
            else if(g->size() != 1) problems.push_back("thermal-map takes a single --gamma");
            else check_gamma(g->front(), problems);
            cfg.grid.gammas  = g && !g->empty() ? std::vector<double>{g->front()} : std::vector<double>{0.0};
            cfg.grid.lambdas = in.range("lambda-range").value_or(LambdaRange{0.05, 2.0, 1.95 / 49.0});
            if(cfg.grid.lambdas.start < 0.0) problems.push_back("lambda range must start at >= 0");
            const auto kt = in.range("kt-range").value_or(LambdaRange{0.05, 2.0, 1.95 / 49.0});
            if(!(kt.start > 0.0)) problems.push_back(fmt::format("kt range must start above 0, got {}", kt.start));
            else if(kt.start < kt.end && kt.step > 0.0) cfg.grid.temperatures = kt.values();
            const auto n = in.integers("n").value_or(std::vector<int>{1});
            if(n.size() != 1) problems.push_back("thermal-map takes a single --n");
            else check_separation(n.front(), problems);
            cfg.grid.separations = {n.empty() ? 1 : n.front()};
            break;
        }
        case Subcommand::oracle_compare: {
            const auto g = in.real("gamma");
            const auto l = in.real("lambda");
            if(!in.has("gamma")) problems.push_back("oracle-compare requires --gamma");
            if(!in.has("lambda")) problems.push_back("oracle-compare requires --lambda");
            cfg.params.gamma       = g.value_or(0.0);
            cfg.params.lambda      = l.value_or(0.0);
            cfg.params.temperature = in.real("kt").value_or(0.25);
            if(g) check_gamma(*g, problems);
            if(l && *l < 0.0) problems.push_back(fmt::format("lambda {} must be >= 0", *l));
            if(!(cfg.params.temperature > 0.0))
                problems.push_back(fmt::format("oracle-compare needs --kt > 0, got {}", cfg.params.temperature));
            const auto n = in.integers("n").value_or(std::vector<int>{1});
            if(n.size() != 1) problems.push_back("oracle-compare takes a single --n");
            cfg.separations = {n.empty() ? 1 : n.front()};
            cfg.allow_large = in.flag("allow-large");
            cfg.sizes       = in.integers("sizes").value_or(std::vector<int>{6, 8, 10});
            if(cfg.sizes.empty()) problems.push_back("--sizes needs at least one chain size");
            const int cap = cfg.allow_large ? oracle::max_sites : 10;
            for(int size : cfg.sizes) {
                if(size < 2 || size > cap)
                    problems.push_back(fmt::format("chain size {} must lie in [2, {}]{}", size, cap,
                                                   cfg.allow_large ? "" : " (use --allow-large for up to 12)"));
                else if(2 * cfg.separations.front() > size || cfg.separations.front() < 1)
                    problems.push_back(fmt::format("separation {} needs 1 <= n <= N/2 for N={}", cfg.separations.front(), size));
            }
            if(!std::is_sorted(cfg.sizes.begin(), cfg.sizes.end()))
                problems.push_back("--sizes must be listed in increasing order");
            break;
        }
    }

    if(!problems.empty()) throw UsageError(std::move(problems));
    return cfg;
}

void write_text(const std::string &text, const std::string &path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if(!file) throw IoError(fmt::format("cannot open '{}' for writing", path));
    file << text;
    file.close();
    if(!file) throw IoError(fmt::format("failed writing '{}'", path));
}

void print_measures(std::ostream &out, const SweepRecord &r) {
    fmt::print(out, "gamma={} lambda={} kT={} n={}\n", format_real(r.gamma), format_real(r.lambda),
               format_real(r.temperature), r.n);
    fmt::print(out, "  sz       {}\n  xx       {}\n  yy       {}\n  zz       {}\n", format_real(r.sz),
               format_real(r.xx), format_real(r.yy), format_real(r.zz));
    fmt::print(out, "  deficit  {}  (theta={}, phi={})\n", format_real(r.deficit), format_real(r.theta_opt),
               format_real(r.phi_opt));
    fmt::print(out, "  c_l1     {}\n  c_rel    {}\n", format_real(r.c_l1), format_real(r.c_rel));
}

int run_oracle_compare(const RunConfig &cfg, std::ostream &out) {
    const int  n        = cfg.separations.front();
    const auto integral = correlator_set(cfg.params, n, cfg.quad);

    std::vector<CorrelatorSet> finite;
    for(int size : cfg.sizes)
        finite.push_back(oracle::thermal_two_site({size, cfg.params.gamma, cfg.params.lambda, cfg.params.temperature}, n).corr);

    fmt::print(out, "oracle-compare gamma={} lambda={} kT={} n={}\n", format_real(cfg.params.gamma),
               format_real(cfg.params.lambda), format_real(cfg.params.temperature), n);
    std::string header = fmt::format("{:<6} {:>17}", "qty", "integral");
    for(int size : cfg.sizes) header += fmt::format(" {:>17} {:>11}", fmt::format("ED N={}", size), "|diff|");
    fmt::print(out, "{}\n", header);

    struct Row {
        const char *name;
        double CorrelatorSet::*field;
        bool        magnitude;
    };
    const Row rows[] = {{"|sz|", &CorrelatorSet::sz, true},
                        {"xx", &CorrelatorSet::xx, false},
                        {"yy", &CorrelatorSet::yy, false},
                        {"zz", &CorrelatorSet::zz, false}};
    bool trend_ok = true;
    for(const auto &row : rows) {
        auto value = [&](const CorrelatorSet &c) { return row.magnitude ? std::abs(c.*row.field) : c.*row.field; };
        std::string line = fmt::format("{:<6} {:>17}", row.name, format_real(value(integral)));
        double      prev = std::numeric_limits<double>::infinity();
        bool        monotone = true;
        for(const auto &c : finite) {
            const double diff = std::abs(value(c) - value(integral));
            line += fmt::format(" {:>17} {:>11.3e}", format_real(value(c)), diff);
            if(diff > prev + 1e-12) monotone = false;
            prev = diff;
        }
        if(!row.magnitude) {
            line += monotone ? "  converging" : "  NOT converging";
            trend_ok = trend_ok && monotone;
        }
        fmt::print(out, "{}\n", line);
    }
    bool same_sign = true;
    for(const auto &c : finite) same_sign = same_sign && (std::signbit(c.sz) == std::signbit(integral.sz));
    fmt::print(out, "sign of sz: integral {}, ED {} ({})\n", integral.sz < 0 ? "negative" : "non-negative",
               finite.front().sz < 0 ? "negative" : "non-negative", same_sign ? "same" : "opposite");
    fmt::print(out, "convergence trend: {}\n", trend_ok ? "PASS" : "FAIL");
    return trend_ok ? 0 : 1;
}

void print_critical_points(std::ostream &out, const std::vector<DerivativeRecord> &derivs) {
    std::size_t begin = 0;
    while(begin < derivs.size()) {
        std::size_t end = begin + 1;
        while(end < derivs.size() && derivs[end].gamma == derivs[begin].gamma &&
              derivs[end].temperature == derivs[begin].temperature && derivs[end].n == derivs[begin].n)
            ++end;
        const std::vector<DerivativeRecord> series(derivs.begin() + static_cast<long>(begin),
                                                   derivs.begin() + static_cast<long>(end));
        for(const auto &name : measure_names()) {
            const auto est = detect_critical_point(series, name);
            fmt::print(out, "critical point gamma={} kT={} n={} {:<8} lambda_c={} +/- {} (peak dQ/dlambda={})\n",
                       format_real(series.front().gamma), format_real(series.front().temperature), series.front().n,
                       name, format_real(est.lambda_c), format_real(est.uncertainty), format_real(est.derivative_peak));
        }
        begin = end;
    }
}

} // namespace

std::map<std::string, std::string> read_config_file(const std::string &path) {
    std::ifstream file(path);
    if(!file) throw IoError(fmt::format("cannot read config file '{}'", path));
    std::map<std::string, std::string> values;
    std::vector<std::string>           problems;
    std::string                        line;
    for(int lineno = 1; std::getline(file, line); ++lineno) {
        if(const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto text = trim(line);
        if(text.empty()) continue;
        const auto eq = text.find('=');
        if(eq == std::string::npos) {
            problems.push_back(fmt::format("{}:{}: expected 'key = value'", path, lineno));
            continue;
        }
        auto key = trim(std::string_view(text).substr(0, eq));
        if(key.rfind("--", 0) == 0) key.erase(0, 2);
        if(key.empty()) problems.push_back(fmt::format("{}:{}: empty key", path, lineno));
        else values[key] = trim(std::string_view(text).substr(eq + 1));
    }
    if(!problems.empty()) throw UsageError(std::move(problems));
    return values;
}

RunConfig parse_args(int argc, const char *const *argv) {
    CLI::App app{"Quantum correlations of the anisotropic XY chain in a transverse field", "xyqc"};
    app.require_subcommand(1);

    const Subcommand all[] = {Subcommand::point, Subcommand::sweep, Subcommand::thermal_map, Subcommand::oracle_compare};
    std::map<Subcommand, CLI::App *>                          subapps;
    std::map<Subcommand, std::map<std::string, std::string>>  given;
    std::map<Subcommand, std::map<std::string, CLI::Option *>> options;
    std::map<Subcommand, std::map<std::string, bool>>          flags;
    std::map<Subcommand, std::string>                         config_paths;

    for(auto sub : all) {
        auto *s = app.add_subcommand(subcommand_name(sub));
        subapps[sub] = s;
        s->add_option("--config", config_paths[sub], "Read `key = value` defaults from this file");
        auto specs = subcommand_options(sub);
        specs.insert(specs.end(), common_options().begin(), common_options().end());
        for(const auto &spec : specs) {
            if(spec.flag) options[sub][spec.key] = s->add_flag(spec.names, flags[sub][spec.key], spec.help);
            else options[sub][spec.key] = s->add_option(spec.names, given[sub][spec.key], spec.help);
        }
    }

    try {
        app.parse(argc, argv);
    } catch(const CLI::CallForHelp &) {
        for(auto sub : all)
            if(subapps[sub]->parsed()) throw HelpRequested(subapps[sub]->help());
        throw HelpRequested(app.help());
    } catch(const CLI::ParseError &e) {
        throw UsageError({e.what()});
    }

    Subcommand chosen = Subcommand::point;
    for(auto sub : all)
        if(subapps[sub]->parsed()) chosen = sub;

    std::map<std::string, std::string> values;
    if(!config_paths[chosen].empty()) {
        values = read_config_file(config_paths[chosen]);
        std::vector<std::string> problems;
        for(const auto &[key, value] : values)
            if(!options[chosen].count(key))
                problems.push_back(fmt::format("config key '{}' is not an option of {}", key, subcommand_name(chosen)));
        if(!problems.empty()) throw UsageError(std::move(problems));
    }
    for(const auto &[key, opt] : options[chosen]) {
        if(opt->count() == 0) continue;
        values[key] = flags[chosen].count(key) ? (flags[chosen][key] ? "true" : "false") : given[chosen][key];
    }
    return build_config(chosen, values);
}

std::string format_real(double v) { return fmt::format("{:.12g}", v); }

std::string records_csv(const std::vector<SweepRecord> &records) {
    std::string out = std::string(record_header) + "\n";
    for(const auto &r : records)
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", format_real(r.gamma), format_real(r.lambda),
                           format_real(r.temperature), r.n, format_real(r.sz), format_real(r.xx), format_real(r.yy),
                           format_real(r.zz), format_real(r.deficit), format_real(r.theta_opt), format_real(r.phi_opt),
                           format_real(r.c_l1), format_real(r.c_rel));
    return out;
}

std::string derivatives_csv(const std::vector<DerivativeRecord> &derivatives) {
    std::string out = std::string(derivative_header) + "\n";
    for(const auto &d : derivatives)
        out += fmt::format("{},{},{},{},{},{},{}\n", format_real(d.gamma), format_real(d.temperature), d.n,
                           format_real(d.lambda), format_real(d.d_deficit), format_real(d.d_c_l1),
                           format_real(d.d_c_rel));
    return out;
}

std::string records_plot_data(const std::vector<SweepRecord> &records) {
    std::string out = "# gamma lambda temperature n sz xx yy zz deficit theta_opt phi_opt c_l1 c_rel\n";
    for(const auto &r : records)
        out += fmt::format("{} {} {} {} {} {} {} {} {} {} {} {} {}\n", format_real(r.gamma), format_real(r.lambda),
                           format_real(r.temperature), r.n, format_real(r.sz), format_real(r.xx), format_real(r.yy),
                           format_real(r.zz), format_real(r.deficit), format_real(r.theta_opt), format_real(r.phi_opt),
                           format_real(r.c_l1), format_real(r.c_rel));
    return out;
}

void emit_csv(const std::vector<SweepRecord> &records, const std::string &path) {
    if(records.empty()) throw IoError("refusing to write an empty record set");
    write_text(records_csv(records), path);
}

void emit_derivative_csv(const std::vector<DerivativeRecord> &derivatives, const std::string &path) {
    write_text(derivatives_csv(derivatives), path);
}

void emit_plot_data(const std::vector<SweepRecord> &records, const std::string &path) {
    write_text(records_plot_data(records), path);
}

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        switch(cfg.subcommand) {
            case Subcommand::point: {
                const auto records = evaluate_point(cfg.params, cfg.separations, cfg.quad, cfg.opt);
                for(const auto &r : records) print_measures(out, r);
                if(!cfg.output_path.empty()) emit_csv(records, cfg.output_path);
                if(!cfg.plot_path.empty()) emit_plot_data(records, cfg.plot_path);
                return 0;
            }
            case Subcommand::sweep:
            case Subcommand::thermal_map: {
                const auto records =
                    cfg.subcommand == Subcommand::sweep
                        ? run_sweep(cfg.grid, cfg.quad, cfg.opt, cfg.workers)
                        : thermal_map(cfg.grid.gammas.front(), cfg.grid.lambdas, cfg.grid.temperatures,
                                      cfg.grid.separations.front(), cfg.quad, cfg.opt, cfg.workers);
                std::ostream &info  = cfg.output_path.empty() ? err : out;
                if(cfg.output_path.empty()) out << records_csv(records);
                else emit_csv(records, cfg.output_path);
                if(!cfg.plot_path.empty()) emit_plot_data(records, cfg.plot_path);
                if(cfg.subcommand == Subcommand::sweep && records.size() / (cfg.grid.gammas.size() *
                                                                             cfg.grid.temperatures.size() *
                                                                             cfg.grid.separations.size()) >= 2) {
                    const auto derivs = derivatives_by_series(records);
                    if(!cfg.derivative_path.empty()) emit_derivative_csv(derivs, cfg.derivative_path);
                    print_critical_points(info, derivs);
                }
                fmt::print(info, "{} records\n", records.size());
                return 0;
            }
            case Subcommand::oracle_compare: return run_oracle_compare(cfg, out);
        }
    } catch(const IoError &e) {
        fmt::print(err, "error: {}\n", e.what());
        return 3;
    } catch(const std::exception &e) {
        fmt::print(err, "error: {}\n", e.what());
        return 1;
    }
    return 1;
}

} // namespace xyqc::cli
