#include "doctest.h"

#include <cmath>
#include <map>
#include <sstream>

#include "cheb/arith.hpp"
#include "cheb/elliptic.hpp"
#include "cheb/sieve.hpp"

using namespace cheb;

namespace {

// #E(F_p) by testing every (x, y) pair.
std::int64_t brute_trace(std::int64_t A, std::int64_t B, std::int64_t p) {
  std::int64_t points = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t r = (((x * x % p) * x + A * x + B) % p + p) % p;
    for (std::int64_t y = 0; y < p; ++y) points += (y * y % p == r);
  }
  return p + 1 - points;
}

const CurveModel kCurves[] = {
    {1, 1, {}, "x3+x+1"}, {-1, 1, {}, ""}, {2, 3, {}, ""}, {-7, 10, {}, ""}, {13, -29, {}, ""},
};

}  // namespace

TEST_CASE("trace examples") {
  const CurveModel e{1, 1, {}, ""};
  CHECK(*trace_of_frobenius(e, 5) == -3);
  CHECK(*trace_of_frobenius(e, 7) == 3);
  CHECK(brute_trace(1, 1, 5) == -3);
  CHECK(brute_trace(1, 1, 7) == 3);
  CHECK_FALSE(trace_of_frobenius(e, 2).has_value());
  CHECK_FALSE(trace_of_frobenius(e, 3).has_value());
  CHECK_FALSE(trace_of_frobenius(e, 31).has_value());  // 4 + 27 = 31
  CHECK_THROWS_AS(trace_of_frobenius(e, 9), DomainError);
  CHECK_THROWS_AS(trace_of_frobenius(CurveModel{0, 0, {}, ""}, 5), DomainError);
  CHECK_THROWS_AS(trace_of_frobenius(CurveModel{2000000, 1, {}, ""}, 5), DomainError);
}

TEST_CASE("character sum matches point enumeration") {
  for (const auto& c : kCurves) {
    for (std::uint64_t p = 5; p < 600; ++p) {
      if (!arith::is_prime(p) || c.is_bad_prime(p)) continue;
      CHECK(*trace_naive(c, p) == brute_trace(c.A, c.B, static_cast<std::int64_t>(p)));
    }
  }
}

TEST_CASE("baby-step giant-step agrees with the character sum below 10^4") {
  for (const auto& c : kCurves) {
    for (const auto p : segmented_primes(2, kNaiveTraceLimit).primes) {
      const auto a = trace_naive(c, p);
      const auto b = trace_bsgs(c, p);
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(*a == *b);
    }
  }
}

TEST_CASE("records respect Hasse and carry squarefree kernels") {
  const CurveModel e{1, 1, {}, ""};
  const auto recs = frobenius_records(e, 30000);
  CHECK(recs.front().p == 5);
  CHECK(recs.front().a_p == -3);
  CHECK(recs.front().disc_part == -11);
  for (const auto& r : recs) {
    CHECK(static_cast<double>(r.a_p * r.a_p) < 4.0 * static_cast<double>(r.p));
    CHECK(r.disc_part < 0);
    CHECK(arith::is_squarefree(static_cast<std::uint64_t>(-r.disc_part)));
    const std::int64_t w = r.a_p * r.a_p - 4 * static_cast<std::int64_t>(r.p);
    const auto q = w / r.disc_part;
    CHECK(w % r.disc_part == 0);
    const auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(q))));
    CHECK(s * s == q);
  }
}

TEST_CASE("pi_f partitions the good primes") {
  const CurveModel e{1, 1, {}, ""};
  const std::uint64_t x = 20000;
  const auto recs = frobenius_records(e, x);
  const auto bound = static_cast<std::int64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(x))));
  double total = 0.0;
  for (std::int64_t a = -bound; a <= bound; ++a) total += pi_f_count(recs, a, {x}).counts.back();
  CHECK(total == static_cast<double>(recs.size()));
  std::uint64_t bad = 0;
  for (const auto p : segmented_primes(2, x + 1).primes) bad += e.is_bad_prime(p);
  CHECK(recs.size() + bad == PrimeTable(x).pi(x));
  CHECK(pi_f_count(recs, bound + 1, {x}).counts.back() == 0.0);
  const auto s = pi_f_count(e, -3, 100, {10, 50, 100});
  CHECK(s.counts[0] >= 1.0);
  CHECK_NOTHROW(s.validate());
  CHECK_THROWS_AS(pi_f_count(e, 0, 100, {50, 60}), DomainError);
}

TEST_CASE("pi_E counts Frobenius fields") {
  const CurveModel e{1, 1, {}, ""};
  const auto recs = frobenius_records(e, 10000);
  CHECK(pi_E_count(e, -11, 5).counts.back() == 1.0);
  CHECK(pi_E_count(recs, -4, {10000}).counts.back() == pi_E_count(recs, -4, {10000}).counts.back());
  std::map<std::int64_t, int> kernels;
  for (const auto& r : recs) ++kernels[r.disc_part];
  double total = 0.0;
  for (const auto& [k, n] : kernels) {
    const std::int64_t D = arith::mod(k, 4) == 1 ? k : 4 * k;
    const auto c = pi_E_count(recs, D, {10000}).counts.back();
    CHECK(c == n);
    total += c;
  }
  CHECK(total == static_cast<double>(recs.size()));
  CHECK_THROWS_AS(pi_E_count(e, 5, 100), DomainError);
  CHECK_THROWS_AS(pi_E_count(e, -12, 100), DomainError);
}

TEST_CASE("CM detection") {
  CHECK(CurveModel{1, 0, {}, ""}.has_cm());
  CHECK(CurveModel{0, 1, {}, ""}.has_cm());
  CHECK(CurveModel{-35, 98, {}, ""}.has_cm());  // j = -3375, CM by Z[(1 + sqrt -7)/2]
  CHECK_FALSE(CurveModel{1, 1, {}, ""}.has_cm());
  CHECK_FALSE(CurveModel{-1, 1, {}, ""}.has_cm());
}

TEST_CASE("shape report") {
  CountSeries zero{{10.0, 100.0, 1000.0}, {0.0, 0.0, 0.0}, ""};
  const auto z = lt_shape_report(zero, ShapeMode::trace);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(z.ratio_loglog1[i] == 0.0);
    CHECK(z.ratio_loglog2[i] == 0.0);
    CHECK(z.ratio_sqrt[i] == 0.0);
  }
  CountSeries s{{100.0, 1000.0}, {3.0, 7.0}, ""};
  const auto r = lt_shape_report(s, ShapeMode::field, true);
  CHECK(r.cm);
  const double lx = std::log(1000.0);
  CHECK(r.ratio_sqrt[1] == doctest::Approx(7.0 * lx / std::sqrt(1000.0)));
  CHECK(r.ratio_loglog1[1] == doctest::Approx(7.0 * lx * lx / (1000.0 * std::log(lx))));
  CHECK(r.ratio_loglog2[1] == doctest::Approx(7.0 * lx * lx / (1000.0 * std::log(lx) * std::log(lx))));
  CHECK_THROWS_AS(lt_shape_report(CountSeries{{2.0}, {0.0}, ""}, ShapeMode::trace), DomainError);
}

TEST_CASE("read_curves") {
  std::istringstream in("# header\n1 1 E1\n\n-1 1   # no label\n2 3 two words \n");
  const auto cs = read_curves(in);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].label == "E1");
  CHECK(cs[1].A == -1);
  CHECK(cs[1].label.empty());
  CHECK(cs[2].label == "two words");
  std::istringstream bad("1\n");
  CHECK_THROWS_AS(read_curves(bad), DomainError);
  std::istringstream junk("a b\n");
  CHECK_THROWS_AS(read_curves(junk), DomainError);
  std::istringstream singular("0 0\n");
  CHECK_THROWS_AS(read_curves(singular), DomainError);
}

TEST_CASE("baby-step giant-step above the naive cutoff") {
  for (const auto& c : kCurves) {
    for (const auto p : segmented_primes(200000, 201000).primes) {
      const auto a = trace_naive(c, p);
      const auto b = trace_of_frobenius(c, p);
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(*a == *b);
    }
  }
}
