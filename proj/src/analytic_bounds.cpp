#include "cheb/analytic_bounds.hpp"

#include <cmath>

namespace cheb::bounds {
namespace {

double n_log_n(int n) { return n * std::log(static_cast<double>(n)); }

}  // namespace

void FieldInvariants::validate() const {
  require(n_K >= 1, "FieldInvariants: n_K must be positive");
  require(D_K >= 1.0, "FieldInvariants: D_K must be >= 1");
  require(Q >= 1.0, "FieldInvariants: Q must be >= 1");
  require(degree_LK >= 1, "FieldInvariants: [L:K] must be positive");
  require(delta0 > 0.0 && delta0 <= 0.01, "FieldInvariants: delta0 must lie in (0, 0.01]");
  for (const auto p : ramified_primes) require(p >= 2, "FieldInvariants: ramified entries must be primes");
}

ScriptL script_L(const FieldInvariants& inv) {
  inv.validate();
  const double d0 = inv.delta0;
  const double logD = std::log(inv.D_K);
  const double logQ = std::log(inv.Q);
  const double nlogn = n_log_n(inv.n_K);
  ScriptL out;
  if ((5.0 / 6.0) * nlogn >= (4.0 / 3.0) * logD + (4.0 / 9.0) * logQ) {
    out.which = ScriptLCase::degree_dominated;
    out.value = (1.0 / 3.0 + d0) * logD + (19.0 / 36.0 + d0) * logQ + (5.0 / 12.0 + d0) * nlogn;
  } else {
    out.which = ScriptLCase::discriminant_dominated;
    out.value = (1.0 + d0) * logD + (0.75 + d0) * logQ + d0 * nlogn;
  }
  out.outside_regime = out.value < 10.0;
  return out;
}

DegreeBound character_group_bound(double script_l) {
  require(script_l >= 0.0, "character_group_bound: L must be non-negative");
  DegreeBound b;
  b.degree_LK = LogValue::from_log(4.0 * script_l / 3.0);
  b.degree_L = LogValue::from_log(std::log(script_l) + 4.0 * script_l / 3.0);
  return b;
}

bool ZeroPoint::in_low_lying_set(double script_l, double eta) const {
  require(script_l > 0.0, "ZeroPoint: L must be positive");
  const double b = beta(script_l);
  return b > 0.0 && b < 1.0 && std::abs(gamma(script_l)) <= 1.0 / (eta * eta);
}

LogValue density_bound(double script_l, int n_K, double sigma, double T, double constant) {
  require(sigma > 0.0 && sigma <= 1.0, "density_bound: sigma must lie in (0, 1]");
  require(T >= 1.0, "density_bound: T must be >= 1");
  require(n_K >= 1, "density_bound: n_K must be positive");
  require(constant > 0.0, "density_bound: implied constant must be positive");
  const double exponent = 162.0 * script_l + (81.0 * n_K + 162.0) * std::log(T);
  return LogValue::from_log((1.0 - sigma) * exponent + std::log(constant));
}

LogValue density_bound(const FieldInvariants& inv, double sigma, double T, double constant) {
  return density_bound(script_L(inv).value, inv.n_K, sigma, T, constant);
}

LogValue low_lying_density_bound(double lambda, bool clamp) {
  require(lambda >= 0.0, "low_lying_density_bound: lambda must be non-negative");
  double lv = 162.0 * lambda + 188.0;
  if (clamp) {
    if (lambda <= 0.0875) {
      lv = std::min(lv, 0.0);
    } else if (lambda <= 0.2866) {
      lv = std::min(lv, std::log(2.0));
    }
  }
  return LogValue::from_log(lv);
}

RepulsionBound repulsion_threshold(double lambda1, double eta) {
  require(lambda1 > 0.0, "repulsion_threshold: lambda1 must be positive");
  require(eta > 0.0, "repulsion_threshold: eta must be positive");
  RepulsionBound best{0.2866, RepulsionBranch::zero_free_region};
  if (lambda1 < 0.0875) {
    if (0.44 > best.value) best = {0.44, RepulsionBranch::siegel_zero};
    if (eta <= lambda1) {
      const double v = 0.2103 * std::log(1.0 / lambda1);
      if (v > best.value) best = {v, RepulsionBranch::log_repulsion};
    }
  }
  return best;
}

double deuring_heilbronn_exclusion(double script_l, int n_K, double beta1, double T, double c1) {
  require(T >= 1.0, "deuring_heilbronn_exclusion: T must be >= 1");
  require(beta1 >= 0.5 && beta1 < 1.0, "deuring_heilbronn_exclusion: beta1 must lie in [1/2, 1)");
  require(c1 > 0.0, "deuring_heilbronn_exclusion: c1 must be positive");
  require(n_K >= 1, "deuring_heilbronn_exclusion: n_K must be positive");
  const double logT = std::log(T);
  const double inner = script_l + n_K * logT;
  const double denom = 81.0 * script_l + 25.0 * n_K * logT;
  require(inner > 0.0 && denom > 0.0, "deuring_heilbronn_exclusion: L + n_K log T must be positive");
  return 1.0 - std::log(c1 / ((1.0 - beta1) * inner)) / denom;
}

double deuring_heilbronn_exclusion(const FieldInvariants& inv, double beta1, double T, double c1) {
  return deuring_heilbronn_exclusion(script_L(inv).value, inv.n_K, beta1, T, c1);
}

double classical_C_theta(double theta) {
  require(theta > 0.0 && theta < 1.0, "classical_C_theta: theta must lie in (0, 1)");
  if (theta >= 2.0 / 3.0) {
    const double r = (1.0 - theta) / 4.0;
    return (2.0 - std::pow(r, 6)) / (1.0 - theta);
  }
  if (theta > 9.0 / 20.0) return 8.0 / (6.0 - 7.0 * theta);
  if (theta > 1.0 / 8.0) return 16.0 / (8.0 - 3.0 * theta);
  return 2.0;
}

RangeReport range_thresholds(const FieldInvariants& inv, double constant) {
  inv.validate();
  require(constant > 0.0, "range_thresholds: implied constant must be positive");
  const double lD = std::log(inv.D_K);
  const double lQ = std::log(inv.Q);
  const double nln = n_log_n(inv.n_K);
  const double lc = std::log(constant);

  RangeReport r;
  r.upper = LogValue::from_log(lc + log_add(246 * lD + 185 * lQ, 82 * lD + 130 * lQ + 246 * nln));
  r.upper_alt = LogValue::from_log(
      lc + log_add(log_add(164 * lD + 123 * lQ, 55 * lD + 87 * lQ + 68 * nln),
                   2 * lD + 2 * lQ + 14000 * nln));
  r.sharp = LogValue::from_log(lc + log_add(695 * lD + 522 * lQ, 232 * lD + 367 * lQ + 290 * nln));

  double logM = std::log(static_cast<double>(inv.degree_LK)) + lD / inv.n_K;
  for (const auto p : inv.ramified_primes) logM += std::log(static_cast<double>(p));
  r.M = std::exp(logM);
  r.degree = LogValue::from_log(constant * inv.n_K * (logM + std::log(static_cast<double>(inv.n_K))));
  return r;
}

}  // namespace cheb::bounds
