#include "cheb/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cheb/arith.hpp"
#include "cheb/parallel.hpp"
#include "cheb/sieve.hpp"

namespace cheb {
namespace {

constexpr double kPi = std::numbers::pi;
// Relative allowance for floating-point error in the node sums.
constexpr double kRoundingRel = 1e-12;
// Fixed chunking keeps the reduction order independent of the thread count.
constexpr std::size_t kChunks = 64;

struct Term {
  double log_n;
  Complex coef;  // Lambda(n) c(n)
};

// Prime powers n <= limit with non-zero coefficient.
std::vector<Term> collect_terms(const SeriesCombination& series, std::uint64_t limit) {
  std::vector<std::pair<std::uint64_t, Term>> raw;
  if (limit >= 2) {
    for (const auto p : segmented_primes(2, limit + 1).primes) {
      const double lp = std::log(static_cast<double>(p));
      std::uint64_t pm = p;
      for (int m = 1;; ++m) {
        const Complex c = series.coefficient(pm);
        if (std::abs(c) > 0.0) raw.push_back({pm, {m * lp, lp * c}});
        if (pm > limit / p) break;
        pm *= p;
      }
    }
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (const auto& r : raw) out.push_back(r.second);
  return out;
}

Complex eval_terms(const std::vector<Term>& terms, Complex s) {
  Complex sum = 0.0;
  for (const auto& t : terms) sum += t.coef * std::exp(-s * t.log_n);
  return sum;
}

// sum over prime powers N < n <= top of Lambda(n) |c(n)|.
double truncated_mass(const SeriesCombination& series, std::uint64_t top) {
  if (top <= series.N_max()) return 0.0;
  double mass = 0.0;
  for (const auto p : segmented_primes(2, top + 1).primes) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t pm = p;; pm *= p) {
      if (pm > series.N_max()) mass += lp * std::abs(series.coefficient(pm));
      if (pm > top / p) break;
    }
  }
  return mass;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Complex LogDerivSeries::eval(Complex s) const {
  require(s.real() > 1.0, "LogDerivSeries::eval: need Re s > 1");
  SeriesCombination c(N_max);
  c.add(1.0, chi);
  return c.eval(s);
}

double LogDerivSeries::tail_bound(std::uint64_t N) {
  require(N >= 3, "LogDerivSeries::tail_bound: N must be >= 3");
  return 2.0 * std::log(static_cast<double>(N)) / static_cast<double>(N);
}

SeriesCombination::SeriesCombination(std::uint64_t N_max) : N_max_(N_max) {
  require(N_max >= 2, "SeriesCombination: N_max must be >= 2");
}

SeriesCombination SeriesCombination::single(const LogDerivSeries& series) {
  require(series.sigma0 > 1.0, "SeriesCombination: abscissa must exceed 1");
  SeriesCombination c(series.N_max);
  c.add(1.0, series.chi);
  return c;
}

SeriesCombination SeriesCombination::zeta(std::uint64_t N_max) {
  SeriesCombination c(N_max);
  c.add(1.0, DirichletCharacter(1, {1.0}));
  return c;
}

SeriesCombination SeriesCombination::cyclotomic_class(std::uint64_t q, std::uint64_t a,
                                                      std::uint64_t N_max) {
  if (q <= 2) return zeta(N_max);
  require(arith::gcd(a % q, q) == 1, "cyclotomic_class: gcd(a, q) must be 1");
  const DirichletGroup group(q);
  SeriesCombination c(N_max);
  const double inv = 1.0 / static_cast<double>(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) c.add(std::conj(group[i](a)) * inv, group[i]);
  return c;
}

SeriesCombination SeriesCombination::quadratic_class(std::int64_t d, const ConjClass& cls,
                                                     std::uint64_t N_max) {
  const auto ext = AbelianExtension::quadratic(d);
  validate_class(ext, cls);
  const std::int64_t disc = ext.disc();
  const auto q = static_cast<std::uint64_t>(std::abs(disc));
  std::vector<Complex> principal(q, 0.0);
  for (std::uint64_t r = 0; r < q; ++r) principal[r] = arith::gcd(r, q) == 1 ? 1.0 : 0.0;
  SeriesCombination c(N_max);
  c.add(0.5, DirichletCharacter(q, std::move(principal)));
  c.add(0.5 * static_cast<double>(cls.element), kronecker_character(disc));
  return c;
}

SeriesCombination SeriesCombination::for_class(const AbelianExtension& ext, const ConjClass& cls,
                                               std::uint64_t N_max) {
  validate_class(ext, cls);
  if (ext.kind() == AbelianExtension::Kind::quadratic) return quadratic_class(ext.d(), cls, N_max);
  return cyclotomic_class(ext.q(), static_cast<std::uint64_t>(cls.element), N_max);
}

double SeriesCombination::coefficient_bound() const {
  double b = 0.0;
  for (const auto& part : parts_) b += std::abs(part.first);
  return b;
}

void SeriesCombination::add(Complex weight, DirichletCharacter chi) {
  parts_.emplace_back(weight, std::move(chi));
}

Complex SeriesCombination::coefficient(std::uint64_t n) const {
  Complex c = 0.0;
  for (const auto& [w, chi] : parts_) c += w * chi(n);
  // Character tables carry rounding noise; snap values that should vanish.
  if (std::abs(c) < 1e-12) return 0.0;
  return c;
}

Complex SeriesCombination::eval(Complex s) const {
  require(s.real() > 1.0, "SeriesCombination::eval: need Re s > 1");
  return eval_terms(collect_terms(*this, N_max_), s);
}

double tail_bound(const WeightSpec& spec, double T_max, double sigma0, double z_sup) {
  require(T_max > 0.0, "tail_bound: T_max must be positive");
  require(sigma0 > 0.0, "tail_bound: sigma0 must be positive");
  require(z_sup >= 0.0, "tail_bound: z_sup must be non-negative");
  const int ell = spec.ell();
  const double x = spec.x();
  const double lead = std::exp(sigma0 * spec.eps()) * std::pow(x, sigma0) * (1.0 + std::pow(x, -sigma0 / 2.0));
  const double decay = std::pow(2.0 * ell / (spec.eps() * T_max), ell) / ell;
  return z_sup / kPi * lead * decay;
}

double z_sup(const SeriesCombination& series, double sigma0) {
  require(sigma0 > 1.0, "z_sup: sigma0 must exceed 1");
  double sum = 0.0;
  for (const auto& t : collect_terms(series, series.N_max())) {
    sum += std::abs(t.coef) * std::exp(-sigma0 * t.log_n);
  }
  // psi(t) < 1.04 t gives sum_{n > N} Lambda(n) n^{-sigma} < 1.04 sigma/(sigma - 1) N^{1 - sigma}.
  const double N = static_cast<double>(series.N_max());
  return sum + series.coefficient_bound() * 1.04 * sigma0 / (sigma0 - 1.0) * std::pow(N, 1.0 - sigma0);
}

Complex S_direct_series(const SeriesCombination& series, const WeightSpec& spec) {
  const double L = spec.log_x();
  const auto top = static_cast<std::uint64_t>(std::floor(std::exp(spec.support_hi() * L)));
  Complex sum = 0.0;
  for (const auto& t : collect_terms(series, std::min(top, series.N_max()))) {
    sum += t.coef * weight_f(spec, t.log_n / L);
  }
  return sum;
}

ContourResult contour_S(const SeriesCombination& series, const WeightSpec& spec, double T_max,
                        double quad_step) {
  require(spec.ell() >= 2, "contour_S: ell must be >= 2 for the tail to converge");
  require(T_max >= 10.0, "contour_S: T_max must be >= 10");
  require(quad_step > 0.0 && quad_step <= 1.0, "contour_S: quad_step must lie in (0, 1]");

  const double L = spec.log_x();
  const int ell = spec.ell();
  const int m = ell + 1;
  const double eps = spec.eps();
  const double A = spec.A();
  // Terms beyond the support of f integrate to zero exactly.
  const auto top = static_cast<std::uint64_t>(std::floor(std::exp(spec.support_hi() * L)));
  const auto terms = collect_terms(series, std::min(top, series.N_max()));

  ContourResult r;
  r.terms = terms.size();
  r.step = quad_step;
  const auto K = static_cast<std::size_t>(std::ceil(T_max / quad_step - 1e-9));
  r.T = static_cast<double>(K) * quad_step;
  const double T = r.T;

  // Nodes of the half-step grid: t_k = (k - 2K) h/2, k = 0..4K. Even k are the step-h nodes.
  const std::size_t nodes = 4 * K + 1;
  const double hh = 0.5 * quad_step;
  std::vector<std::complex<long double>> fine(kChunks), coarse(kChunks);
  parallel_for(kChunks, [&](std::size_t chunk) {
    const std::size_t lo = chunk * nodes / kChunks;
    const std::size_t hi = (chunk + 1) * nodes / kChunks;
    std::complex<long double> acc_f = 0.0L, acc_c = 0.0L;
    for (std::size_t k = lo; k < hi; ++k) {
      const double t = (static_cast<double>(k) - 2.0 * static_cast<double>(K)) * hh;
      const Complex s(kSigma0, t);
      const Complex g = L / (2.0 * kPi) * eval_terms(terms, s) * laplace_F(spec, -s * L);
      const long double w = (k == 0 || k == nodes - 1) ? 0.5L : 1.0L;
      const std::complex<long double> gl(g.real(), g.imag());
      acc_f += w * gl;
      if (k % 2 == 0) acc_c += w * gl;
    }
    fine[chunk] = acc_f;
    coarse[chunk] = acc_c;
  });
  std::complex<long double> sum_f = 0.0L, sum_c = 0.0L;
  for (std::size_t c = 0; c < kChunks; ++c) {
    sum_f += fine[c];
    sum_c += coarse[c];
  }
  const Complex S_h(static_cast<double>(sum_c.real()) * quad_step, static_cast<double>(sum_c.imag()) * quad_step);
  const Complex S_hh(static_cast<double>(sum_f.real()) * hh, static_cast<double>(sum_f.imag()) * hh);
  r.value = S_h.real();
  r.imag = S_h.imag();
  r.half_step_value = S_hh.real();
  r.half_step_diff = std::abs(S_h - S_hh);

  // Error budget. Expanding F turns each term into pieces
  //   a e^{-(2+it) mu} (2+it)^{-m},  a = |coef| C(ell, j) (ell/eps)^ell / (2 pi),
  // with mu = log n + v log x, v = -(1 + 2 ell A) + i (1/2 + 2 ell A) + 2 A j.
  const double scale = std::pow(ell / eps, ell) / (2.0 * kPi);
  const double tail_cont = std::pow(T, 1.0 - m) / (m - 1);
  const double full_line_l1 = 0.5 * kPi * std::pow(2.0, 2 - m);
  auto piece_budget = [&](double h, double& disc, double& alias, double& round) {
    const double Tm = std::pow(T, -m);
    for (const auto& term : terms) {
      const double cabs = std::abs(term.coef);
      for (int i = 0; i <= 1; ++i) {
        for (int j = 0; j <= ell; ++j) {
          const double v = -(1.0 + 2.0 * ell * A) + i * (0.5 + 2.0 * ell * A) + 2.0 * A * j;
          const double mu = term.log_n + v * L;
          const double a = cabs * binomial(ell, j) * scale;
          const double amp = a * std::exp(-2.0 * mu);
          // Tail of the trapezoid sum beyond +-T: monotone bound or summation by parts.
          const double sn = std::abs(std::sin(0.5 * h * mu));
          double side = 0.5 * h * Tm + tail_cont;
          if (sn > 0.0) side = std::min(side, 0.5 * h * Tm + h * Tm / sn);
          disc += 2.0 * amp * side;
          // Poisson aliasing: transform mass at r = -(2 pi k/h) - mu > 0, k != 0.
          const double w0 = 2.0 * kPi / h;
          for (long k = -1;; --k) {
            const double rr = -w0 * k - mu;
            if (rr <= 0.0) continue;
            const double val = a * 2.0 * kPi * std::pow(rr, m - 1) * std::exp(2.0 * w0 * k) / factorial(m - 1);
            alias += val;
            if (val < 1e-300 || k < -1000) break;
          }
          for (long k = 1; w0 * k < -mu; ++k) {
            const double rr = -w0 * k - mu;
            alias += a * 2.0 * kPi * std::pow(rr, m - 1) * std::exp(2.0 * w0 * k) / factorial(m - 1);
          }
          round += kRoundingRel * amp * full_line_l1;
        }
      }
    }
  };
  double disc_h = 0.0, alias_h = 0.0, round_h = 0.0;
  piece_budget(quad_step, disc_h, alias_h, round_h);
  double disc_hh = 0.0, alias_hh = 0.0, round_hh = 0.0;
  piece_budget(hh, disc_hh, alias_hh, round_hh);

  r.discretization = disc_h;
  r.aliasing = alias_h;
  r.truncation = truncated_mass(series, top);
  r.rounding = round_h;
  r.budget = r.discretization + r.aliasing + r.truncation + r.rounding;
  const double budget_hh = disc_hh + alias_hh + r.truncation + round_hh;
  r.half_step_ok = r.half_step_diff <= r.budget + budget_hh;
  r.coarse_tail = tail_bound(spec, T, kSigma0, z_sup(series));
  return r;
}

}  // namespace cheb
