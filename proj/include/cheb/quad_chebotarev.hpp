#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cheb/analytic_bounds.hpp"
#include "cheb/common.hpp"
#include "cheb/weights.hpp"

// Chebotarev counting over Q for quadratic fields Q(sqrt d) and cyclotomic
// fields Q(zeta_q). Galois groups are abelian, so a conjugacy class is a single
// element: +1 (split) / -1 (inert) for quadratic fields, a unit residue mod q
// for cyclotomic ones.
namespace cheb {

class AbelianExtension {
 public:
  enum class Kind { quadratic, cyclotomic };

  /// Q(sqrt d), d squarefree, d != 0, 1.
  static AbelianExtension quadratic(std::int64_t d);
  /// Q(zeta_q). q = 1 and q = 2 give the trivial extension (every prime in one class).
  static AbelianExtension cyclotomic(std::uint64_t q);

  Kind kind() const { return kind_; }
  std::int64_t d() const { return d_; }
  std::uint64_t q() const { return q_; }
  /// Field discriminant for quadratic fields; the modulus q for cyclotomic ones.
  std::int64_t disc() const { return disc_; }
  std::uint64_t group_order() const { return group_order_; }
  const std::vector<std::uint64_t>& ramified() const { return ramified_; }
  bool is_ramified(std::uint64_t p) const;
  /// Largest conductor among the characters of the Galois group.
  std::uint64_t max_conductor() const;

 private:
  Kind kind_ = Kind::quadratic;
  std::int64_t d_ = 0;
  std::uint64_t q_ = 0;
  std::int64_t disc_ = 0;
  std::uint64_t group_order_ = 1;
  std::vector<std::uint64_t> ramified_;
};

struct ConjClass {
  std::int64_t element = 1;

  static ConjClass split() { return {1}; }
  static ConjClass inert() { return {-1}; }
  static ConjClass residue(std::uint64_t a) { return {static_cast<std::int64_t>(a)}; }
  friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

/// Checks that the class is an element of the Galois group of ext.
void validate_class(const AbelianExtension& ext, const ConjClass& cls);

/// Frobenius of the prime p; std::nullopt when p ramifies.
std::optional<ConjClass> artin_class(const AbelianExtension& ext, std::uint64_t p);

/// 1 when Frob_p^m lies in the class, 0 otherwise and at ramified primes.
int theta_indicator(const AbelianExtension& ext, const ConjClass& cls, std::uint64_t p, int m);

/// Sum of log p over prime powers p^m < x with Frob_p^m in the class.
double psi_C(const AbelianExtension& ext, const ConjClass& cls, double x);

/// Unramified primes p <= x with Frobenius in the class.
std::uint64_t pi_C(const AbelianExtension& ext, const ConjClass& cls, std::uint64_t x);

/// pi_C at each ascending checkpoint, from one sieve pass.
CountSeries pi_C_series(const AbelianExtension& ext, const ConjClass& cls,
                        const std::vector<std::uint64_t>& checkpoints);

/// pi_C(x) <= psi_C(x)/log x + int_{x0}^{x} psi_C(t)/(t log^2 t) dt + constant * n_F * x0,
/// with n_F = 1. The integral of the step function is taken exactly.
BoundReport lemma21_check(const AbelianExtension& ext, const ConjClass& cls, double x0, double x,
                          double constant = 1.0);

/// Weighted sum over prime powers n of Lambda(n) Theta_C(n) f(log n / log x).
double S_direct(const AbelianExtension& ext, const ConjClass& cls, const WeightSpec& spec);

struct DensityReport {
  std::uint64_t count = 0;
  double density = 0.0;  // |C| / |G|
  double ratio = 0.0;    // count / (density Li(x))
  LogValue threshold;    // range for x with K = F = Q and Q = max conductor
  bool in_proven_range = false;
};

DensityReport theorem11_report(const AbelianExtension& ext, const ConjClass& cls, std::uint64_t x);

}  // namespace cheb
