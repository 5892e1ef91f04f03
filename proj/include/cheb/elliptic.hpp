#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cheb/common.hpp"

namespace cheb {

/// y^2 = x^3 + A x + B over Q.
struct CurveModel {
  std::int64_t A = 0;
  std::int64_t B = 0;
  std::optional<std::uint64_t> conductor_hint;
  std::string label;

  /// 4A^3 + 27B^2 (the discriminant up to the factor -16).
  __int128 delta() const;
  /// True when the j-invariant is one of the 13 rational CM j-invariants.
  bool has_cm() const;
  /// p | 6 (4A^3 + 27B^2).
  bool is_bad_prime(std::uint64_t p) const;
  void validate() const;
};

struct FrobeniusRecord {
  std::uint64_t p = 0;
  std::int64_t a_p = 0;
  /// Squarefree kernel of a_p^2 - 4p (always negative for good p).
  std::int64_t disc_part = 0;
};

inline constexpr std::uint64_t kNaiveTraceLimit = 10'000;

/// a_p = p + 1 - #E(F_p), std::nullopt at bad primes. Uses the character sum
/// below kNaiveTraceLimit and baby-step giant-step above.
std::optional<std::int64_t> trace_of_frobenius(const CurveModel& curve, std::uint64_t p);
std::optional<std::int64_t> trace_naive(const CurveModel& curve, std::uint64_t p);
std::optional<std::int64_t> trace_bsgs(const CurveModel& curve, std::uint64_t p);

/// Records for all good primes p <= x, ascending.
std::vector<FrobeniusRecord> frobenius_records(const CurveModel& curve, std::uint64_t x);

/// #{good p <= c : a_p = a} at each ascending checkpoint c (last = x).
CountSeries pi_f_count(const CurveModel& curve, std::int64_t a, std::uint64_t x,
                       std::vector<std::uint64_t> checkpoints = {});
CountSeries pi_f_count(const std::vector<FrobeniusRecord>& records, std::int64_t a,
                       const std::vector<std::uint64_t>& checkpoints);

/// #{good p <= c : Q(sqrt(a_p^2 - 4p)) = Q(sqrt D_k)} for a negative field discriminant D_k.
CountSeries pi_E_count(const CurveModel& curve, std::int64_t D_k, std::uint64_t x,
                       std::vector<std::uint64_t> checkpoints = {});
CountSeries pi_E_count(const std::vector<FrobeniusRecord>& records, std::int64_t D_k,
                       const std::vector<std::uint64_t>& checkpoints);

enum class ShapeMode { trace, field };

/// Normalised trajectories of a count series. Descriptive only.
struct ShapeReport {
  ShapeMode mode = ShapeMode::trace;
  bool cm = false;
  std::vector<double> checkpoints;
  std::vector<double> counts;
  std::vector<double> ratio_loglog1;  // count (log x)^2 / (x log log x)
  std::vector<double> ratio_loglog2;  // count (log x)^2 / (x (log log x)^2)
  std::vector<double> ratio_sqrt;     // count log x / sqrt x
};

ShapeReport lt_shape_report(const CountSeries& series, ShapeMode mode, bool cm = false);

/// Reads "A B [label]" lines; '#' starts a comment. Throws DomainError on bad lines.
std::vector<CurveModel> read_curves(std::istream& in);

}  // namespace cheb
