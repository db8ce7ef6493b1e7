#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace xyqc {

// A point of the anisotropic XY chain in a transverse field.
//   gamma       anisotropy in [0, 1] (0: XX chain, 1: transverse Ising chain)
//   lambda      inverse field strength, >= 0
//   temperature kT >= 0; exactly 0 selects the ground-state limit (tanh -> 1)
struct ChainParams {
    double gamma       = 0.0;
    double lambda      = 0.0;
    double temperature = 0.0;

    bool zero_temperature() const noexcept { return temperature == 0.0; }

    // 1/kT. Throws DomainError at zero temperature; callers branch on zero_temperature() first.
    double beta() const;
};

// Throws DomainError when any field is outside its domain.
void validate(const ChainParams &params);

struct QuadratureConfig {
    int    initial_nodes = 128;
    int    max_doublings = 6;
    double abs_tol       = 1e-10;
};

void validate(const QuadratureConfig &quad);

// Largest |k| for which F_k may be requested, and largest correlator separation.
inline constexpr int max_f_index    = 64;
inline constexpr int max_separation = 50;

// F_k for k in [-n_max, n_max]. Immutable once built.
class FTable {
  public:
    FTable(int n_max, std::vector<double> values);

    int n_max() const noexcept { return n_max_; }

    // Throws IndexError when |k| > n_max.
    double operator[](int k) const;

  private:
    int                 n_max_;
    std::vector<double> values_; // values_[k + n_max_]
};

struct CorrelatorSet {
    int    n  = 1;
    double sz = 0.0; // <sigma^z>
    double xx = 0.0; // <sigma_0^x sigma_n^x>
    double yy = 0.0; // <sigma_0^y sigma_n^y>
    double zz = 0.0; // <sigma_0^z sigma_n^z>
};

// omega_phi = sqrt((gamma lambda sin phi)^2 + (1 + lambda cos phi)^2) / 2, phi in [0, pi].
double dispersion(const ChainParams &params, double phi);

// tanh(beta omega) / omega, or 1/omega at zero temperature. Finite limit beta at omega = 0, T > 0.
double thermal_weight(const ChainParams &params, double omega);

// <sigma^z> = -(1/2pi) int_0^pi (1 + lambda cos phi) tanh(beta omega)/omega dphi.
double transverse_magnetization(const ChainParams &params, const QuadratureConfig &quad = {});

// F_k = (1/2pi) int_0^pi tanh(beta omega)/omega [cos(k phi)(1 + lambda cos phi) - gamma lambda sin(k phi) sin phi] dphi.
double f_coefficient(const ChainParams &params, int k, const QuadratureConfig &quad = {});

// All F_k with |k| <= n_max from one shared set of kernel evaluations.
FTable build_f_table(const ChainParams &params, int n_max, const QuadratureConfig &quad = {});

// n x n Toeplitz matrix with entry (i, j) = F_{i - j + offset}.
Eigen::MatrixXd toeplitz_matrix(const FTable &table, int n, int offset);

// det[F_{i-j-1}]
double xx_correlator(const FTable &table, int n);
// det[F_{i-j+1}]
double yy_correlator(const FTable &table, int n);
// sz^2 - F_n F_{-n}
double zz_correlator(const FTable &table, double sz, int n);

CorrelatorSet correlator_set(const ChainParams &params, int n, const QuadratureConfig &quad = {});

// Correlator sets for several separations sharing one magnetization and one F table.
std::vector<CorrelatorSet> correlator_sets(const ChainParams &params, std::span<const int> separations,
                                           const QuadratureConfig &quad = {});

} // namespace xyqc
