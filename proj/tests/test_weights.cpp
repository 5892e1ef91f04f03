#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "cheb/weights.hpp"
#include "quadrature.hpp"

using namespace cheb;

namespace {

// f by repeated numerical convolution of the indicator with the box kernel on
// a uniform grid, with linear interpolation between nodes.
class GridConvolution {
 public:
  explicit GridConvolution(const WeightSpec& spec, int per_width = 256) {
    const double A = spec.A();
    const int ell = spec.ell();
    h_ = (2.0 * A) / per_width;
    lo_ = 0.5 - 2.0 * ell * A - 4.0 * A;
    const double hi = 1.0 + 2.0 * ell * A + 4.0 * A;
    const auto n = static_cast<std::size_t>((hi - lo_) / h_) + 2;
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = lo_ + static_cast<double>(i) * h_;
      const double a = 0.5 - ell * A, b = 1.0 + ell * A;
      // Cell-averaged indicator keeps the edge error at O(h^2).
      const double left = std::max(a, t - 0.5 * h_), right = std::min(b, t + 0.5 * h_);
      g[i] = std::max(0.0, right - left) / h_;
    }
    const int half = per_width / 2;
    for (int k = 0; k < ell; ++k) {
      std::vector<double> next(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = -half; j <= half; ++j) {
          const auto idx = static_cast<std::ptrdiff_t>(i) + j;
          if (idx < 0 || idx >= static_cast<std::ptrdiff_t>(n)) continue;
          const double w = (j == -half || j == half) ? 0.5 : 1.0;
          acc += w * g[static_cast<std::size_t>(idx)];
        }
        next[i] = acc / per_width;
      }
      g.swap(next);
    }
    g_ = std::move(g);
  }

  double operator()(double t) const {
    const double u = (t - lo_) / h_;
    if (u <= 0.0) return g_.front();
    const auto i = static_cast<std::size_t>(u);
    if (i + 1 >= g_.size()) return g_.back();
    const double frac = u - static_cast<double>(i);
    return (1.0 - frac) * g_[i] + frac * g_[i + 1];
  }

 private:
  double lo_ = 0.0, h_ = 0.0;
  std::vector<double> g_;
};


}  // namespace

TEST_CASE("WeightSpec validation and A") {
  const WeightSpec s(std::exp(10.0), 2, 0.1);
  CHECK(s.A() == doctest::Approx(0.1 / (2 * 2 * 10.0)).epsilon(1e-15));
  CHECK_THROWS_AS(WeightSpec(2.0, 2, 0.1), DomainError);
  CHECK_THROWS_AS(WeightSpec(100.0, 0, 0.1), DomainError);
  CHECK_THROWS_AS(WeightSpec(100.0, 2, 0.3), DomainError);
  CHECK_THROWS_AS(WeightSpec(100.0, 2, 0.0), DomainError);
}

TEST_CASE("F(0) = 1/2 + eps/log x") {
  const WeightSpec s(std::exp(10.0), 2, 0.1);
  const Complex F0 = laplace_F(s, 0.0);
  CHECK(F0.real() == doctest::Approx(0.51).epsilon(1e-14));
  CHECK(F0.imag() == 0.0);
  for (double x : {3.0, 50.0, 1e6}) {
    for (int ell : {1, 3}) {
      const WeightSpec w(x, ell, 0.2);
      CHECK(laplace_F(w, 0.0).real() == doctest::Approx(0.5 + 0.2 / std::log(x)).epsilon(1e-14));
      const auto r = verify_F0(w);
      CHECK(r.pass == (0.5 + 0.2 / std::log(x) < 0.75));
    }
  }
  // Continuity across the series switch.
  const Complex tiny(3e-5, 2e-5);
  CHECK(std::abs(laplace_F(s, tiny) - oracle::numerical_laplace(s, tiny)) < 1e-9);
}

TEST_CASE("weight_f plateau, support and interior values") {
  const WeightSpec s(std::exp(10.0), 2, 0.1);
  CHECK(weight_f(s, 0.75) == 1.0);
  CHECK(weight_f(s, 0.3) == 0.0);
  const double mid = weight_f(s, 1.0 + 0.1 / (2.0 * 10.0));
  CHECK(mid > 0.0);
  CHECK(mid < 1.0);
  for (int ell : {1, 2, 3, 4}) {
    for (double eps : {0.05, 0.2}) {
      const WeightSpec w(1000.0, ell, eps);
      for (int i = 0; i <= 1000; ++i) {
        const double t = -0.1 + 1.3 * i / 1000.0;
        const double f = weight_f(w, t);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        if (t >= 0.5 && t <= 1.0) CHECK(f == 1.0);
        if (t < w.support_lo() || t > w.support_hi()) CHECK(f == 0.0);
      }
    }
  }
}

TEST_CASE("weight_f matches the grid convolution") {
  for (int ell : {1, 2, 3, 4}) {
    const WeightSpec w(500.0, ell, 0.15);
    // The grid carries an O(1/per_width) error, so require agreement at that
    // scale and convergence under refinement.
    auto worst_at = [&](int per_width) {
      const GridConvolution grid(w, per_width);
      double worst = 0.0;
      for (int i = 0; i <= 2000; ++i) {
        const double t = w.support_lo() - 0.01 + (w.support_hi() - w.support_lo() + 0.02) * i / 2000.0;
        worst = std::max(worst, std::abs(weight_f(w, t) - grid(t)));
      }
      return worst;
    };
    const double coarse = worst_at(128), fine = worst_at(512);
    CAPTURE(ell);
    CHECK(coarse < 1.0 / 128);
    CHECK(fine < 1.0 / 512);
    CHECK(fine < 0.5 * coarse);
  }
}

TEST_CASE("laplace_F matches quadrature of weight_f") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int ell = 1; ell <= 4; ++ell) {
    for (double x : {10.0, 1e3, 1e6}) {
      const WeightSpec w(x, ell, 0.1);
      for (int k = 0; k < 6; ++k) {
        Complex z(50.0 * u(rng), 50.0 * u(rng));
        if (std::abs(z) > 50.0) z *= 50.0 / std::abs(z);
        const Complex closed = laplace_F(w, z);
        const Complex quad = oracle::numerical_laplace(w, z);
        CAPTURE(ell);
        CAPTURE(x);
        CAPTURE(z);
        CHECK(std::abs(closed - quad) <= 1e-6 * std::abs(quad));
      }
    }
  }
}

TEST_CASE("F is conjugate symmetric") {
  const WeightSpec w(1e4, 3, 0.2);
  for (Complex z : {Complex(1.0, 2.0), Complex(-30.0, 400.0), Complex(5.0, -0.1)}) {
    const Complex a = laplace_F(w, std::conj(z));
    const Complex b = std::conj(laplace_F(w, z));
    CHECK(std::abs(a - b) <= 1e-14 * std::abs(a));
  }
}

TEST_CASE("bound examples") {
  const WeightSpec w(std::exp(10.0), 2, 0.1);
  CHECK(verify_bound_iv(w, 1.0, 0.0).pass);
  CHECK(verify_bound_iv(w, Complex(2.0, 10.0), 2.0).pass);
  CHECK_THROWS_AS(verify_bound_iv(w, Complex(0.0, 3.0), 1.0), DomainError);
  CHECK_THROWS_AS(verify_bound_iv(w, 1.0, 2.5), DomainError);
  CHECK(verify_bound_vi(w, 0.0).pass);
  const auto r0 = verify_bound_vi(w, 0.0);
  const auto r100 = verify_bound_vi(w, 100.0);
  CHECK(r100.pass);
  CHECK(r100.rhs / r0.rhs == doctest::Approx(std::pow((0.25 + 1e4) / 0.25, -1.0)).epsilon(1e-12));
  CHECK(verify_bound_v_real(w, 0.7).pass);
  CHECK(verify_bound_v(w, Complex(0.3, -7.0)).pass);
}

TEST_CASE("bounds hold on randomized grids") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> logx(std::log(3.0), std::log(1e12));
  std::uniform_real_distribution<double> epsd(1e-3, 0.2499);
  std::uniform_int_distribution<int> elld(1, 5);
  std::uniform_real_distribution<double> sig(1e-4, 4.0), tt(-1000.0, 1000.0), unit(0.0, 1.0);
  int bad_iv = 0, bad_v = 0, bad_vi = 0, bad_vr = 0;
  for (int i = 0; i < 10000; ++i) {
    const WeightSpec w(std::exp(logx(rng)), elld(rng), epsd(rng));
    const Complex s(sig(rng), tt(rng));
    bad_iv += !verify_bound_iv(w, s, unit(rng) * w.ell()).pass;
    bad_v += !verify_bound_v(w, s).pass;
    bad_vr += !verify_bound_v_real(w, sig(rng)).pass;
    bad_vi += !verify_bound_vi(w, tt(rng)).pass;
  }
  CHECK(bad_iv == 0);
  CHECK(bad_v == 0);
  CHECK(bad_vr == 0);
  CHECK(bad_vi == 0);
}
