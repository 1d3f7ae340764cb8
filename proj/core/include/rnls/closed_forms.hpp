#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rnls/grid.hpp"

namespace rnls {

/// Physical parameters of the model. The last k of d coordinate directions
/// carry the regularization of strength beta.
struct ModelParams {
  int d = 1;
  int k = 0;
  double p = 2.0;
  double beta = 1.0;
  std::optional<double> omega;
  std::optional<double> m;
};

void validate_params(const ModelParams& params);

/// 4/(d-2) for d >= 3, +infinity for d in {1,2}.
double p_critical(int d);

/// Ground-state amplitude-normalized 1D profile:
/// Q(x) = ((p+2)/2)^{1/p} sech^{2/p}(p x / 2), solving -Q'' + Q = Q^{p+1}.
double q_exact_1d(double p, double x);

/// Bound-state profile on the line for d = 1, k in {0,1}:
/// (omega (p+2)/2)^{1/p} sech^{2/p}(p theta x / 2),
/// theta = sqrt(omega / (1 + beta omega)) when k = 1, sqrt(omega) when k = 0.
double phi_exact_1d(const ModelParams& params, double x);

/// L2-type norms of Q_{d,p}. grad_l2sq and pp2 (= int Q^{p+2}) follow from
/// l2sq through the Pohozaev identities at omega = 1; the y-split of the
/// gradient is exact for radial profiles (each axis carries 1/d of it).
struct QNorms {
  double l2sq = 0.0;       // |Q|_2^2
  double grad_l2sq = 0.0;  // |grad Q|_2^2
  double y_grad_l2sq = 0.0;
  double pp2 = 0.0;        // int Q^{p+2}
};

QNorms make_q_norms(int d, int k, double p, double l2sq);
QNorms q_norms_closed_1d(double p, int k);

/// Samples the scaled bound-state profile
/// phi(x, y) = omega^{1/p} Q(sqrt(omega) x, sqrt(omega/(1+beta omega)) y)
/// on the grid. `radial` evaluates Q at a radius. Rejects grids whose
/// boundary value exceeds 1e-10 of the peak.
Field phi_profile(const ModelParams& params, const GridSpec& grid,
                  const std::function<double(double)>& radial);
Field phi_profile(const ModelParams& params, const GridSpec& grid);  // d = 1

/// Box big enough for the profile to decay below ~1e-11 of its peak:
/// 52/sqrt(omega) per axis, stretched by sqrt(1+beta*omega) on y axes.
GridSpec default_profile_grid(const ModelParams& params, int n_per_axis = 0);

/// Mass of the bound state as a function of omega. For k >= 1 it equals
/// f(beta omega) with f(x) = x^a (1+x)^b (A + Bx); the derivative sign is
/// governed by the quadratic c0 + c1 x + c2 x^2.
struct MassCurve {
  ModelParams params;
  QNorms norms;
  double a = 0.0;  // (4 - p d) / (2 p)
  double b = 0.0;  // (k - 2) / 2
  double A = 0.0;
  double B = 0.0;
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
  std::optional<double> omega0;  // positive root of the c-quadratic, / beta
  std::optional<double> omega1;  // d=1, k=1, p>4 only
  std::optional<double> omega2;

  double eval_m(double omega) const;
  double eval_m_prime(double omega) const;     // closed form
  double eval_m_prime_fd(double omega) const;  // central difference
  double eval_E(double omega) const;           // E(phi_omega)
};

MassCurve mass_curve(const ModelParams& params, const QNorms& norms);

/// Explicit d=1, k=1 mass/energy of phi_omega, with
/// C_p = Gamma(1/2) Gamma(2/p) / Gamma(2/p + 1/2).
struct MEValues {
  double theta = 0.0;
  double Cp = 0.0;
  double M = 0.0;
  double E = 0.0;
};
MEValues me_explicit_d1k1(double p, double beta, double omega);

/// (omega1, omega2) for d=1, k=1, p>4: omega1 is the minimum of m(omega),
/// omega2 = (p-4)/(4 beta) is the zero of E(phi_omega). Empty for p <= 4.
std::optional<std::pair<double, double>> omega_thresholds(double p,
                                                          double beta);

enum class Regime {
  SubcriticalAllStable,
  CriticalK0,
  SupercriticalK0,
  BandWithM0,     // k>=1, 4/d <= p < min(4/(d-k), p_c)
  SupercriticalKge1,
  BoundaryUncovered,
};

std::string regime_label(Regime r);

struct RegimeReport {
  Regime regime;
  std::string im_verdict;  // finiteness/sign of I_m over the mass range
  std::optional<double> omega0;
  std::optional<double> omega1;
  std::optional<double> omega2;
  std::optional<double> m0;
  // Sampled sign of m'(omega); reported instead of any universal claim in
  // the regime where the sign for all omega is not settled.
  std::vector<std::pair<double, int>> m_prime_signs;
};

/// Classifies (d, k, p) against the stability theory. Thresholds that need
/// profile norms are filled from `norms` (computed internally for d = 1).
RegimeReport classify_regime(const ModelParams& params,
                             std::optional<QNorms> norms = std::nullopt);

}  // namespace rnls
