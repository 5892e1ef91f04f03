#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cheb/characters.hpp"
#include "cheb/quad_chebotarev.hpp"
#include "cheb/weights.hpp"

namespace cheb {

inline constexpr std::uint64_t kDefaultNmax = 1'000'000;
inline constexpr double kSigma0 = 2.0;
inline constexpr double kDefaultQuadStep = 0.05;

/// -L'/L(s, chi) = sum Lambda(n) chi(n) n^{-s}, truncated at N_max.
struct LogDerivSeries {
  DirichletCharacter chi;
  std::uint64_t N_max = kDefaultNmax;
  double sigma0 = kSigma0;

  /// Truncated series at s (Re s > 1).
  Complex eval(Complex s) const;
  /// Bound 2 log N / N on sum_{n > N} Lambda(n) n^{-2}.
  static double tail_bound(std::uint64_t N);
};

/// sum_j w_j (-L'/L)(s, chi_j), i.e. the series with coefficients
/// Lambda(n) sum_j w_j chi_j(n). With class-selecting weights the coefficient
/// is Lambda(n) Theta_C(n).
class SeriesCombination {
 public:
  explicit SeriesCombination(std::uint64_t N_max = kDefaultNmax);

  static SeriesCombination single(const LogDerivSeries& series);
  static SeriesCombination zeta(std::uint64_t N_max = kDefaultNmax);
  /// (1/phi(q)) sum_chi conj(chi(a)) chi: the class a in Gal(Q(zeta_q)/Q).
  static SeriesCombination cyclotomic_class(std::uint64_t q, std::uint64_t a,
                                            std::uint64_t N_max = kDefaultNmax);
  /// (chi_0 +- chi_D) / 2 with chi_0 principal mod |D|: split (+) or inert (-).
  static SeriesCombination quadratic_class(std::int64_t d, const ConjClass& cls,
                                           std::uint64_t N_max = kDefaultNmax);
  /// The combination selecting cls in ext.
  static SeriesCombination for_class(const AbelianExtension& ext, const ConjClass& cls,
                                     std::uint64_t N_max = kDefaultNmax);

  void add(Complex weight, DirichletCharacter chi);
  std::uint64_t N_max() const { return N_max_; }
  std::size_t size() const { return parts_.size(); }
  /// sum_j w_j chi_j(n), without the Lambda(n) factor.
  Complex coefficient(std::uint64_t n) const;
  /// sum_j |w_j|, a bound on |coefficient(n)|.
  double coefficient_bound() const;
  Complex eval(Complex s) const;

 private:
  std::uint64_t N_max_;
  std::vector<std::pair<Complex, DirichletCharacter>> parts_;
};

/// The contour value and every component of its error budget.
struct ContourResult {
  double value = 0.0;        // real part of the step-h trapezoid sum
  double imag = 0.0;         // imaginary part (cancels for real coefficients)
  double half_step_value = 0.0;
  double half_step_diff = 0.0;
  bool half_step_ok = false;  // |S_h - S_{h/2}| within the two budgets
  double T = 0.0;             // truncation height actually used (multiple of step)
  double step = 0.0;
  double discretization = 0.0;  // trapezoid error from cutting the line at +-T
  double aliasing = 0.0;        // trapezoid error on the full line
  double truncation = 0.0;      // Dirichlet series terms beyond N_max
  double rounding = 0.0;
  double budget = 0.0;          // sum of the four above
  double coarse_tail = 0.0;     // tail_bound() for the same inputs, for reference
  std::size_t terms = 0;        // prime powers carried
};

/// (log x / 2 pi) int_{-T}^{T} Z(2 + it) F(-(2 + it) log x) dt by the
/// trapezoid rule. The budget bounds |value - S(x)| rigorously.
/// Requires ell >= 2, T_max >= 10, quad_step > 0.
ContourResult contour_S(const SeriesCombination& series, const WeightSpec& spec, double T_max,
                        double quad_step = kDefaultQuadStep);

/// z_sup (1/pi) e^{sigma0 eps} x^{sigma0} (1 + x^{-sigma0/2}) (2 ell/eps)^ell T^{-ell} / ell:
/// the two-sided tail beyond T_max from the uniform transform bound with alpha = ell.
double tail_bound(const WeightSpec& spec, double T_max, double sigma0, double z_sup);

/// Upper bound on |Z(sigma0 + it)| from the absolute series.
double z_sup(const SeriesCombination& series, double sigma0 = kSigma0);

/// sum_n Lambda(n) c(n) f(log n / log x) over the truncated series.
Complex S_direct_series(const SeriesCombination& series, const WeightSpec& spec);

}  // namespace cheb
