#pragma once

#include <cstdint>
#include <vector>

#include "cheb/common.hpp"

namespace cheb {

/// Positive-definite primitive form a X^2 + b XY + c Y^2.
struct ReducedForm {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;

  std::int64_t disc() const { return b * b - 4 * a * c; }
  /// Value at (m, n), exact in 128-bit arithmetic.
  __int128 eval(std::int64_t m, std::int64_t n) const {
    return static_cast<__int128>(a) * m * m + static_cast<__int128>(b) * m * n +
           static_cast<__int128>(c) * n * n;
  }
  bool is_reduced() const;
  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

/// Unique reduced representative of the SL2(Z)-class of (a, b, c):
/// -a < b <= a <= c, with b >= 0 when a == c.
ReducedForm reduce_form(std::int64_t a, std::int64_t b, std::int64_t c);

struct ClassGroupSummary {
  std::int64_t D = 0;  // discriminant is -D
  std::vector<ReducedForm> forms;
  std::vector<double> delta;  // delta_Q per form
  std::size_t h() const { return forms.size(); }
};

/// All reduced primitive forms of discriminant -D, sorted by (a, b).
ClassGroupSummary class_number(std::int64_t D);

/// 1/2 when the form is properly equivalent to its opposite (a, -b, c), else 1.
double delta_Q(const ReducedForm& form);

/// Primes p <= checkpoint represented by the form, for each checkpoint
/// (ascending, last one = x). Enumerates lattice points with Q(m, n) <= x.
CountSeries count_represented_primes(const ReducedForm& form, std::uint64_t x,
                                     std::vector<std::uint64_t> checkpoints = {});

struct ClassCountReport {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  std::size_t h = 0;
  double delta_Q = 1.0;
  double target = 0.0;  // delta_Q Li(x) / h
  double bound = 0.0;   // 2 delta_Q Li(x) / h
  double ratio = 0.0;   // count / target
  BoundReport strict;   // count < bound
  /// x >= D^695; never reachable at desk scale, so the check is one of consistency.
  bool in_proven_range = false;
};

ClassCountReport corollary13_report(const ReducedForm& form, std::uint64_t x);
ClassCountReport corollary13_report(const ReducedForm& form, std::uint64_t x,
                                     const ClassGroupSummary& group, std::uint64_t count);

}  // namespace cheb
