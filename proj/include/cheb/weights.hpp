#pragma once

#include <complex>

#include "cheb/common.hpp"

namespace cheb {

/// Parameters (x, ell, eps) of the smoothed weight; A = eps / (2 ell log x)
/// is always recomputed from the other three.
class WeightSpec {
 public:
  /// Throws DomainError unless x >= 3, ell >= 1 and 0 < eps < 1/4.
  WeightSpec(double x, int ell, double eps);

  double x() const { return x_; }
  int ell() const { return ell_; }
  double eps() const { return eps_; }
  double log_x() const { return log_x_; }
  double A() const { return eps_ / (2.0 * ell_ * log_x_); }

  /// Support of f is [support_lo(), support_hi()] = [1/2 - eps/log x, 1 + eps/log x].
  double support_lo() const { return 0.5 - eps_ / log_x_; }
  double support_hi() const { return 1.0 + eps_ / log_x_; }

 private:
  double x_;
  int ell_;
  double eps_;
  double log_x_;
};

using Complex = std::complex<double>;

/// Closed-form Laplace transform F(z) = int f(t) e^{-zt} dt of the weight.
/// The removable singularity at z = 0 is handled by a series expansion.
Complex laplace_F(const WeightSpec& spec, Complex z);

/// The weight f(t) = g_ell(t): the indicator of [1/2 - ell A, 1 + ell A]
/// convolved ell times with the box kernel (1/2A) 1_[-A, A]. Evaluated
/// exactly through the Irwin-Hall distribution function, so f is exactly 1
/// on [1/2, 1] and exactly 0 outside the support.
double weight_f(const WeightSpec& spec, double t);

/// |F(-s log x)| against e^{sigma eps} x^sigma (1 + x^{-sigma/2}) (2 ell/(eps|s|))^alpha
/// / (|s| log x). Requires Re s > 0 and 0 <= alpha <= ell.
BoundReport verify_bound_iv(const WeightSpec& spec, Complex s, double alpha);

/// |F(-s log x)| against e^{sigma eps} x^sigma for Re s > 0.
BoundReport verify_bound_v(const WeightSpec& spec, Complex s);

/// F(-sigma log x) against e^{sigma eps} x^sigma / (sigma log x) for real sigma > 0.
BoundReport verify_bound_v_real(const WeightSpec& spec, double sigma);

/// 1/2 < F(0) < 3/4, reported as lhs = F(0), rhs = 3/4 (pass also needs F(0) > 1/2).
BoundReport verify_F0(const WeightSpec& spec);

/// |F(-s log x)| at s = -1/2 + it against
/// (5 x^{-1/4} / log x) (2 ell/eps)^ell (1/4 + t^2)^{-ell/2}.
BoundReport verify_bound_vi(const WeightSpec& spec, double t);

}  // namespace cheb
