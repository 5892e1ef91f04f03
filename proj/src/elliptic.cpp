#include "cheb/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <random>
#include <set>
#include <sstream>

#include "cheb/arith.hpp"
#include "cheb/parallel.hpp"
#include "cheb/sieve.hpp"

namespace cheb {
namespace {

constexpr std::int64_t kMaxCoefficient = 1'000'000;
constexpr int kBsgsPoints = 8;

// The 13 j-invariants of elliptic curves over Q with complex multiplication.
constexpr std::array<std::int64_t, 13> kCmJ = {
    0,       1728,     -3375,     8000,       -32768,        54000,          287496,
    -884736, -12288000, 16581375, -884736000, -147197952000, -262537412640768000};

struct Point {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  bool inf = true;
  bool operator==(const Point&) const = default;
};

class CurveModP {
 public:
  CurveModP(const CurveModel& c, std::uint64_t p) : p_(p), a_(arith::mod(c.A, p)), b_(arith::mod(c.B, p)) {}

  std::uint64_t rhs(std::uint64_t x) const {
    const std::uint64_t x2 = arith::mulmod(x, x, p_);
    return (arith::mulmod(x2, x, p_) + arith::mulmod(a_, x, p_) + b_) % p_;
  }

  Point add(const Point& P, const Point& Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    std::uint64_t lambda;
    if (P.x == Q.x) {
      if ((P.y + Q.y) % p_ == 0) return {};
      const std::uint64_t num = (3 * arith::mulmod(P.x, P.x, p_) % p_ + a_) % p_;
      lambda = arith::mulmod(num, arith::invmod(2 * P.y % p_, p_), p_);
    } else {
      const std::uint64_t num = (Q.y + p_ - P.y) % p_;
      lambda = arith::mulmod(num, arith::invmod((Q.x + p_ - P.x) % p_, p_), p_);
    }
    const std::uint64_t x3 = (arith::mulmod(lambda, lambda, p_) + 2 * p_ - P.x - Q.x) % p_;
    const std::uint64_t y3 = (arith::mulmod(lambda, (P.x + p_ - x3) % p_, p_) + p_ - P.y) % p_;
    return {x3, y3, false};
  }

  Point neg(const Point& P) const { return P.inf ? P : Point{P.x, (p_ - P.y) % p_, false}; }

  Point mul(Point P, std::int64_t k) const {
    if (k < 0) {
      P = neg(P);
      k = -k;
    }
    Point R;
    auto n = static_cast<std::uint64_t>(k);
    while (n) {
      if (n & 1) R = add(R, P);
      P = add(P, P);
      n >>= 1;
    }
    return R;
  }

  std::uint64_t p() const { return p_; }

 private:
  std::uint64_t p_, a_, b_;
};

int legendre(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) return 0;
  return arith::powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Square root of a quadratic residue modulo an odd prime (Tonelli-Shanks).
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p % 4 == 3) return arith::powmod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (legendre(z, p) != -1) ++z;
  std::uint64_t c = arith::powmod(z, q, p);
  std::uint64_t r = arith::powmod(a, (q + 1) / 2, p);
  std::uint64_t t = arith::powmod(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = arith::mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (int j = 0; j < m - i - 1; ++j) b = arith::mulmod(b, b, p);
    r = arith::mulmod(r, b, p);
    c = arith::mulmod(b, b, p);
    t = arith::mulmod(t, c, p);
    m = i;
  }
  return r;
}

// Group orders N in the Hasse interval with N P = O.
std::set<std::uint64_t> annihilating_orders(const CurveModP& E, const Point& P) {
  const std::uint64_t p = E.p();
  const auto M = static_cast<std::int64_t>(p + 1);
  const auto B = static_cast<std::int64_t>(arith::isqrt(4 * p));
  const auto m = static_cast<std::int64_t>(arith::isqrt(static_cast<std::uint64_t>(B))) + 1;

  std::vector<std::pair<std::uint64_t, std::int64_t>> baby;  // (x(jP), j), j = 1..m
  Point jP = P;
  for (std::int64_t j = 1; j <= m; ++j) {
    if (!jP.inf) baby.push_back({jP.x, j});
    jP = E.add(jP, P);
  }
  std::sort(baby.begin(), baby.end());

  std::set<std::uint64_t> out;
  auto consider = [&](std::int64_t N) {
    if (N < M - B || N > M + B || N <= 0) return;
    if (E.mul(P, N).inf) out.insert(static_cast<std::uint64_t>(N));
  };
  const std::int64_t kmax = (B + m) / (2 * m) + 1;
  const Point step = E.mul(P, 2 * m);
  Point G = E.mul(P, M - 2 * m * kmax);
  for (std::int64_t k = -kmax; k <= kmax; ++k) {
    const std::int64_t base = M + 2 * m * k;
    if (G.inf) {
      // P has order dividing base; every multiple of it near base is a candidate.
      for (std::int64_t j = -m; j <= m; ++j) consider(base + j);
    } else {
      auto it = std::lower_bound(baby.begin(), baby.end(), std::make_pair(G.x, std::int64_t{0}));
      for (; it != baby.end() && it->first == G.x; ++it) {
        consider(base - it->second);
        consider(base + it->second);
      }
    }
    G = E.add(G, step);
  }
  return out;
}

std::int64_t naive_count_trace(const CurveModel& curve, std::uint64_t p) {
  const CurveModP E(curve, p);
  std::int64_t sum = 0;
  if (p < kNaiveTraceLimit * 4) {
    std::vector<char> square(p, 0);
    for (std::uint64_t y = 1; y < p; ++y) square[arith::mulmod(y, y, p)] = 1;
    for (std::uint64_t x = 0; x < p; ++x) {
      const std::uint64_t v = E.rhs(x);
      sum += v == 0 ? 0 : (square[v] ? 1 : -1);
    }
  } else {
    for (std::uint64_t x = 0; x < p; ++x) sum += legendre(E.rhs(x), p);
  }
  return -sum;
}

}  // namespace

__int128 CurveModel::delta() const {
  const __int128 a = A;
  const __int128 b = B;
  return 4 * a * a * a + 27 * b * b;
}

void CurveModel::validate() const {
  require(std::abs(A) <= kMaxCoefficient && std::abs(B) <= kMaxCoefficient,
          "CurveModel: |A|, |B| must not exceed 10^6");
  require(delta() != 0, "CurveModel: 4A^3 + 27B^2 must be non-zero");
}

bool CurveModel::has_cm() const {
  validate();
  // j = 6912 A^3 / (4A^3 + 27B^2); compare cross-multiplied.
  const __int128 num = static_cast<__int128>(6912) * A * A * A;
  const __int128 den = delta();
  return std::any_of(kCmJ.begin(), kCmJ.end(), [&](std::int64_t j) { return num == den * j; });
}

bool CurveModel::is_bad_prime(std::uint64_t p) const {
  if (p == 2 || p == 3) return true;
  const __int128 d = delta() % static_cast<__int128>(p);
  return d == 0;
}

std::optional<std::int64_t> trace_naive(const CurveModel& curve, std::uint64_t p) {
  curve.validate();
  require(arith::is_prime(p), "trace_of_frobenius: p must be prime");
  if (curve.is_bad_prime(p)) return std::nullopt;
  return naive_count_trace(curve, p);
}

std::optional<std::int64_t> trace_bsgs(const CurveModel& curve, std::uint64_t p) {
  curve.validate();
  require(arith::is_prime(p), "trace_of_frobenius: p must be prime");
  require(p < (std::uint64_t{1} << 62), "trace_bsgs: p too large");
  if (curve.is_bad_prime(p)) return std::nullopt;
  const CurveModP E(curve, p);
  std::mt19937_64 rng(p);
  std::set<std::uint64_t> candidates;
  bool first = true;
  for (int used = 0; used < kBsgsPoints;) {
    const std::uint64_t x = rng() % p;
    const std::uint64_t v = E.rhs(x);
    if (v != 0 && legendre(v, p) != 1) continue;
    const Point P{x, sqrt_mod(v, p), false};
    ++used;
    const auto orders = annihilating_orders(E, P);
    if (first) {
      candidates = orders;
      first = false;
    } else {
      std::set<std::uint64_t> both;
      std::set_intersection(candidates.begin(), candidates.end(), orders.begin(), orders.end(),
                            std::inserter(both, both.begin()));
      candidates = std::move(both);
    }
    if (candidates.size() == 1) {
      return static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(*candidates.begin());
    }
  }
  return naive_count_trace(curve, p);
}

std::optional<std::int64_t> trace_of_frobenius(const CurveModel& curve, std::uint64_t p) {
  return p < kNaiveTraceLimit ? trace_naive(curve, p) : trace_bsgs(curve, p);
}

std::vector<FrobeniusRecord> frobenius_records(const CurveModel& curve, std::uint64_t x) {
  curve.validate();
  if (x < 2) return {};
  const auto primes = segmented_primes(2, x + 1).primes;
  std::vector<std::optional<FrobeniusRecord>> slots(primes.size());
  parallel_for(primes.size(), [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    const auto a = trace_of_frobenius(curve, p);
    if (!a) return;
    const std::int64_t w = *a * *a - 4 * static_cast<std::int64_t>(p);
    slots[i] = FrobeniusRecord{p, *a, arith::squarefree_kernel(w)};
  });
  std::vector<FrobeniusRecord> out;
  for (auto& s : slots) {
    if (s) out.push_back(*s);
  }
  return out;
}

namespace {

std::vector<std::uint64_t> normalise_checkpoints(std::vector<std::uint64_t> checkpoints, std::uint64_t x) {
  if (checkpoints.empty()) checkpoints.push_back(x);
  require(std::adjacent_find(checkpoints.begin(), checkpoints.end(),
                             [](auto a, auto b) { return a >= b; }) == checkpoints.end(),
          "checkpoints must be strictly ascending");
  require(checkpoints.back() == x, "last checkpoint must equal x");
  return checkpoints;
}

template <class Pred>
CountSeries count_records(const std::vector<FrobeniusRecord>& records,
                          const std::vector<std::uint64_t>& checkpoints, Pred pred, std::string label) {
  require(!checkpoints.empty(), "need at least one checkpoint");
  CountSeries out;
  out.label = std::move(label);
  std::size_t next = 0;
  double running = 0.0;
  for (const auto& r : records) {
    while (next < checkpoints.size() && r.p > checkpoints[next]) {
      out.checkpoints.push_back(static_cast<double>(checkpoints[next++]));
      out.counts.push_back(running);
    }
    if (next == checkpoints.size()) break;
    if (pred(r)) running += 1.0;
  }
  while (next < checkpoints.size()) {
    out.checkpoints.push_back(static_cast<double>(checkpoints[next++]));
    out.counts.push_back(running);
  }
  return out;
}

}  // namespace

CountSeries pi_f_count(const std::vector<FrobeniusRecord>& records, std::int64_t a,
                       const std::vector<std::uint64_t>& checkpoints) {
  return count_records(records, checkpoints, [a](const FrobeniusRecord& r) { return r.a_p == a; },
                       "pi_f(x, " + std::to_string(a) + ")");
}

CountSeries pi_f_count(const CurveModel& curve, std::int64_t a, std::uint64_t x,
                       std::vector<std::uint64_t> checkpoints) {
  checkpoints = normalise_checkpoints(std::move(checkpoints), x);
  return pi_f_count(frobenius_records(curve, x), a, checkpoints);
}

CountSeries pi_E_count(const std::vector<FrobeniusRecord>& records, std::int64_t D_k,
                       const std::vector<std::uint64_t>& checkpoints) {
  require(arith::is_negative_fundamental_discriminant(D_k),
          "pi_E_count: D_k must be a negative fundamental discriminant");
  const std::int64_t kernel = arith::squarefree_kernel(D_k);
  return count_records(records, checkpoints,
                       [kernel](const FrobeniusRecord& r) { return r.disc_part == kernel; },
                       "pi_E(x, Q(sqrt " + std::to_string(kernel) + "))");
}

CountSeries pi_E_count(const CurveModel& curve, std::int64_t D_k, std::uint64_t x,
                       std::vector<std::uint64_t> checkpoints) {
  require(arith::is_negative_fundamental_discriminant(D_k),
          "pi_E_count: D_k must be a negative fundamental discriminant");
  checkpoints = normalise_checkpoints(std::move(checkpoints), x);
  return pi_E_count(frobenius_records(curve, x), D_k, checkpoints);
}

ShapeReport lt_shape_report(const CountSeries& series, ShapeMode mode, bool cm) {
  series.validate();
  ShapeReport r;
  r.mode = mode;
  r.cm = cm;
  r.checkpoints = series.checkpoints;
  r.counts = series.counts;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double x = series.checkpoints[i];
    require(x >= 3.0, "lt_shape_report: checkpoints must be >= 3");
    const double c = series.counts[i];
    const double lx = std::log(x);
    const double llx = std::log(lx);
    r.ratio_loglog1.push_back(c * lx * lx / (x * llx));
    r.ratio_loglog2.push_back(c * lx * lx / (x * llx * llx));
    r.ratio_sqrt.push_back(c * lx / std::sqrt(x));
  }
  return r;
}

std::vector<CurveModel> read_curves(std::istream& in) {
  std::vector<CurveModel> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    CurveModel c;
    if (!(ss >> c.A)) {
      require(line.find_first_not_of(" \t\r") == std::string::npos,
              "curve file line " + std::to_string(lineno) + ": expected 'A B [label]'");
      continue;
    }
    require(static_cast<bool>(ss >> c.B), "curve file line " + std::to_string(lineno) + ": missing B");
    std::getline(ss >> std::ws, c.label);
    while (!c.label.empty() && (c.label.back() == ' ' || c.label.back() == '\r')) c.label.pop_back();
    c.validate();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cheb
