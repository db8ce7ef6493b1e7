#pragma once

#include "xyqc/correlators.hpp"
#include "xyqc/measures.hpp"
#include "xyqc/sweep.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace xyqc::cli {

enum class Subcommand { point, sweep, thermal_map, oracle_compare };

struct RunConfig {
    Subcommand subcommand = Subcommand::point;

    // point and oracle-compare
    ChainParams      params;
    std::vector<int> separations = {1};

    // sweep and thermal-map
    SweepGrid grid;

    // oracle-compare
    std::vector<int> sizes       = {6, 8, 10};
    bool             allow_large = false;

    std::string output_path;     // empty: CSV to stdout (sweep, thermal-map) or no CSV (point)
    std::string derivative_path; // sweep only
    std::string plot_path;       // whitespace-separated columns

    int              workers = 1;
    QuadratureConfig quad;
    OptimizerConfig  opt;
};

// Thrown by parse_args for --help; what() holds the help text.
class HelpRequested : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Parses argv into a validated RunConfig. Values from --config FILE (plain `key = value` lines, `#`
// comments, keys named like the long flags) apply first and are overridden by flags. The default
// worker count comes from XYQC_WORKERS when set. Throws UsageError listing every problem found.
RunConfig parse_args(int argc, const char *const *argv);

// Reads a `key = value` config file into a map. Throws UsageError on malformed lines, IoError if unreadable.
std::map<std::string, std::string> read_config_file(const std::string &path);

inline constexpr const char *record_header =
    "gamma,lambda,temperature,n,sz,xx,yy,zz,deficit,theta_opt,phi_opt,c_l1,c_rel";
inline constexpr const char *derivative_header = "gamma,temperature,n,lambda,d_deficit,d_c_l1,d_c_rel";

// 12 significant digits, '.' decimal point, independent of the global locale.
std::string format_real(double v);

std::string records_csv(const std::vector<SweepRecord> &records);
std::string derivatives_csv(const std::vector<DerivativeRecord> &derivatives);
std::string records_plot_data(const std::vector<SweepRecord> &records);

// Write the corresponding text to `path`. Throw IoError on failure; emit_csv also rejects empty input.
void emit_csv(const std::vector<SweepRecord> &records, const std::string &path);
void emit_derivative_csv(const std::vector<DerivativeRecord> &derivatives, const std::string &path);
void emit_plot_data(const std::vector<SweepRecord> &records, const std::string &path);

// Executes a parsed config. Returns 0 on success, 1 on computation or check failure, 3 on I/O failure.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace xyqc::cli
