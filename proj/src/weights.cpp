#include "cheb/weights.hpp"

#include <cmath>
#include <vector>

namespace cheb {
namespace {

// Relative rounding allowance when comparing a computed |F| against a bound.
constexpr double kRoundingSlack = 1e-12;

/// (e^w - 1) / w, with a 6-term series near the removable singularity.
Complex expm1_over(Complex w) {
  if (std::abs(w) < 1e-4) {
    Complex term(1.0, 0.0);
    Complex sum(1.0, 0.0);
    for (int k = 2; k <= 6; ++k) {
      term *= w / static_cast<double>(k);
      sum += term;
    }
    return sum;
  }
  const double a = w.real();
  const double b = w.imag();
  const double sh = std::sin(0.5 * b);
  const Complex em1(std::expm1(a) * std::cos(b) - 2.0 * sh * sh, std::exp(a) * std::sin(b));
  return em1 / w;
}

/// (1 - e^{cz}) / (-z), whose limit at z = 0 is c.
Complex box_factor(double c, Complex z) { return c * expm1_over(c * z); }

/// Cardinal B-spline of order k (degree k - 1) supported on [0, k].
double cardinal_bspline(int k, double u) {
  if (u <= 0.0 || u >= k) return 0.0;
  // values[i] holds M_r(u - i) for i = 0..k-1
  std::vector<double> values(static_cast<std::size_t>(k) + 1, 0.0);
  const int cell = static_cast<int>(std::floor(u));
  values[static_cast<std::size_t>(cell)] = 1.0;
  for (int r = 2; r <= k; ++r) {
    for (int i = 0; i < k; ++i) {
      const double v = u - i;
      const double left = values[static_cast<std::size_t>(i)];
      const double right = values[static_cast<std::size_t>(i) + 1];
      values[static_cast<std::size_t>(i)] = (v * left + (r - v) * right) / (r - 1);
    }
  }
  return values[0];
}

/// Distribution function of a sum of n independent U[0,1] variables.
double irwin_hall_cdf(int n, double u) {
  if (u <= 0.0) return 0.0;
  if (u >= n) return 1.0;
  // d/du sum_{j>=0} M_{n+1}(u - j) = M_n(u), so the CDF is a positive sum.
  double sum = 0.0;
  for (int j = 0; j <= static_cast<int>(std::floor(u)); ++j) sum += cardinal_bspline(n + 1, u - j);
  return std::min(sum, 1.0);
}

}  // namespace

WeightSpec::WeightSpec(double x, int ell, double eps) : x_(x), ell_(ell), eps_(eps) {
  require(std::isfinite(x) && x >= 3.0, "WeightSpec: x must be >= 3");
  require(ell >= 1, "WeightSpec: ell must be >= 1");
  require(eps > 0.0 && eps < 0.25, "WeightSpec: eps must lie in (0, 1/4)");
  log_x_ = std::log(x);
}

Complex laplace_F(const WeightSpec& spec, Complex z) {
  require(std::isfinite(z.real()) && std::isfinite(z.imag()), "laplace_F: non-finite argument");
  const double A = spec.A();
  const int ell = spec.ell();
  const Complex head = std::exp(-(1.0 + 2.0 * ell * A) * z);
  const Complex g0 = box_factor(0.5 + 2.0 * ell * A, z);
  const Complex w = expm1_over(2.0 * A * z);
  return head * g0 * std::pow(w, ell);
}

double weight_f(const WeightSpec& spec, double t) {
  const double A = spec.A();
  const int ell = spec.ell();
  // f(t) = P(t - 1 - ell A <= S <= t - 1/2 + ell A), S a sum of ell U[-A, A].
  const double upper = (t - 0.5 + 2.0 * ell * A) / (2.0 * A);
  const double lower = (t - 1.0) / (2.0 * A);
  return irwin_hall_cdf(ell, upper) - irwin_hall_cdf(ell, lower);
}

BoundReport verify_bound_iv(const WeightSpec& spec, Complex s, double alpha) {
  require(s.real() > 0.0, "verify_bound_iv: Re s must be positive");
  require(alpha >= 0.0 && alpha <= spec.ell(), "verify_bound_iv: alpha must lie in [0, ell]");
  const double sigma = s.real();
  const double L = spec.log_x();
  const double abs_s = std::abs(s);
  const double lhs = std::abs(laplace_F(spec, -s * L));
  const double log_rhs = sigma * spec.eps() + sigma * L - std::log(abs_s * L) +
                         std::log1p(std::exp(-0.5 * sigma * L)) +
                         alpha * std::log(2.0 * spec.ell() / (spec.eps() * abs_s));
  return BoundReport::compare(lhs, std::exp(log_rhs), kRoundingSlack);
}

BoundReport verify_bound_v(const WeightSpec& spec, Complex s) {
  require(s.real() > 0.0, "verify_bound_v: Re s must be positive");
  const double sigma = s.real();
  const double lhs = std::abs(laplace_F(spec, -s * spec.log_x()));
  return BoundReport::compare(lhs, std::exp(sigma * (spec.eps() + spec.log_x())), kRoundingSlack);
}

BoundReport verify_bound_v_real(const WeightSpec& spec, double sigma) {
  require(sigma > 0.0, "verify_bound_v_real: sigma must be positive");
  const double L = spec.log_x();
  const Complex F = laplace_F(spec, Complex(-sigma * L, 0.0));
  auto r = BoundReport::compare(F.real(), std::exp(sigma * (spec.eps() + L)) / (sigma * L),
                                kRoundingSlack);
  r.pass = r.pass && F.real() > 0.0;
  return r;
}

BoundReport verify_F0(const WeightSpec& spec) {
  const double f0 = laplace_F(spec, Complex(0.0, 0.0)).real();
  auto r = BoundReport::compare(f0, 0.75);
  r.pass = f0 > 0.5 && f0 < 0.75;
  return r;
}

BoundReport verify_bound_vi(const WeightSpec& spec, double t) {
  require(std::isfinite(t), "verify_bound_vi: t must be finite");
  const double L = spec.log_x();
  const int ell = spec.ell();
  const Complex s(-0.5, t);
  const double lhs = std::abs(laplace_F(spec, -s * L));
  const double log_rhs = std::log(5.0) - 0.25 * L - std::log(L) +
                         ell * std::log(2.0 * ell / spec.eps()) -
                         0.5 * ell * std::log(0.25 + t * t);
  return BoundReport::compare(lhs, std::exp(log_rhs), kRoundingSlack);
}

}  // namespace cheb
