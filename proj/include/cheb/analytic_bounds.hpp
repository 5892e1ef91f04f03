#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cheb/common.hpp"

// Evaluators for the explicit closed-form quantities attached to the
// Chebotarev Brun-Titchmarsh bounds. Implied constants are explicit
// multipliers defaulting to 1; power laws are carried in log space.
namespace cheb::bounds {

inline constexpr double kDefaultDelta0 = 1e-3;
inline constexpr double kDefaultEta = 1e-2;
inline constexpr double kDefaultC1 = 1.0;

/// Invariants of the abelian extension L/K entering the range calculators.
struct FieldInvariants {
  int n_K = 1;                        // [K:Q]
  double D_K = 1.0;                   // |disc(K)|
  double Q = 1.0;                     // max conductor norm over characters of L/K
  std::uint64_t degree_LK = 1;        // [L:K]
  std::vector<std::uint64_t> ramified_primes;  // rational primes below ramified primes of K
  double delta0 = kDefaultDelta0;

  void validate() const;
};

enum class ScriptLCase { degree_dominated, discriminant_dominated };

struct ScriptL {
  double value = 0.0;
  ScriptLCase which = ScriptLCase::degree_dominated;
  /// The zero-free-region statements hold only for large L; flagged below 10.
  bool outside_regime = false;
};

/// The logarithmic complexity quantity, choosing the branch by testing
/// n_K^{5 n_K / 6} >= D_K^{4/3} Q^{4/9} in log space.
ScriptL script_L(const FieldInvariants& inv);

/// Degree bounds [L:K] << e^{4L/3} and n_L << L e^{4L/3} (constant 1).
struct DegreeBound {
  LogValue degree_LK;
  LogValue degree_L;
};
DegreeBound character_group_bound(double script_l);

/// Zero (beta, gamma) written as beta = 1 - lambda/L, gamma = mu/L.
struct ZeroPoint {
  double lambda = 0.0;
  double mu = 0.0;
  bool is_real_zero = false;
  int multiplicity = 1;

  double beta(double script_l) const { return 1.0 - lambda / script_l; }
  double gamma(double script_l) const { return mu / script_l; }
  /// Whether |gamma| <= eta^{-2} and 0 < beta < 1.
  bool in_low_lying_set(double script_l, double eta = kDefaultEta) const;
};

/// (e^{162 L} T^{81 n_K + 162})^{1 - sigma} * constant, for 0 < sigma <= 1, T >= 1.
LogValue density_bound(double script_l, int n_K, double sigma, double T, double constant = 1.0);
LogValue density_bound(const FieldInvariants& inv, double sigma, double T, double constant = 1.0);

/// e^{162 lambda + 188}; with clamp, also min'd with N(0.0875) <= 1 and N(0.2866) <= 2.
LogValue low_lying_density_bound(double lambda, bool clamp = false);

enum class RepulsionBranch { zero_free_region, siegel_zero, log_repulsion };

struct RepulsionBound {
  double value = 0.0;
  RepulsionBranch branch = RepulsionBranch::zero_free_region;
};

/// Largest applicable lower bound on min(lambda', lambda_2).
RepulsionBound repulsion_threshold(double lambda1, double eta = kDefaultEta);

/// Boundary of the Deuring-Heilbronn excluded region:
/// 1 - log(c1 / ((1 - beta1)(L + n_K log T))) / (81 L + 25 n_K log T).
double deuring_heilbronn_exclusion(double script_l, int n_K, double beta1, double T,
                                   double c1 = kDefaultC1);
double deuring_heilbronn_exclusion(const FieldInvariants& inv, double beta1, double T,
                                   double c1 = kDefaultC1);

/// Classical Brun-Titchmarsh constant C(theta), 0 < theta < 1.
double classical_C_theta(double theta);

struct RangeReport {
  LogValue upper;      // D^246 Q^185 + D^82 Q^130 n^{246 n}
  LogValue upper_alt;  // D^164 Q^123 + D^55 Q^87 n^{68 n} + D^2 Q^2 n^{14000 n}
  LogValue sharp;      // D^695 Q^522 + D^232 Q^367 n^{290 n}
  LogValue degree;     // x with log x = constant * n log(M n)
  double M = 0.0;  // [L:K] D^{1/n} prod_{p in P} p
};

/// All x-range thresholds for the inputs. The constant multiplies x for the
/// power-law thresholds and multiplies log x for the M(L/K) threshold.
RangeReport range_thresholds(const FieldInvariants& inv, double constant = 1.0);

}  // namespace cheb::bounds
