#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cheb {

/// Raised when an operation's precondition is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a request would exceed the configured memory budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

/// Both sides of a checked inequality lhs <= rhs.
struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool pass = false;
  bool heuristic = false;
  std::string note;

  static BoundReport compare(double lhs, double rhs, double rel_slack = 0.0) {
    BoundReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.pass = std::isfinite(lhs) && !std::isnan(rhs) &&
             lhs <= rhs + rel_slack * std::abs(rhs);
    return r;
  }
};

/// A positive quantity carried in log space; `value` is +inf when exp overflows.
struct LogValue {
  double log_value = -std::numeric_limits<double>::infinity();
  double value = 0.0;

  static LogValue from_log(double lv) {
    LogValue r;
    r.log_value = lv;
    r.value = lv > 709.0 ? std::numeric_limits<double>::infinity() : std::exp(lv);
    return r;
  }
  static LogValue from_value(double v) { return from_log(std::log(v)); }
  bool representable() const { return std::isfinite(value); }
};

/// log(e^a + e^b) without overflow.
inline double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

/// Monotone table of (x, count) pairs.
struct CountSeries {
  std::vector<double> checkpoints;
  std::vector<double> counts;
  std::string label;

  void validate() const {
    require(checkpoints.size() == counts.size(), "CountSeries: length mismatch");
    for (std::size_t i = 1; i < checkpoints.size(); ++i) {
      require(checkpoints[i] > checkpoints[i - 1], "CountSeries: checkpoints not ascending");
      require(counts[i] >= counts[i - 1], "CountSeries: counts not monotone");
    }
  }
  std::size_t size() const { return checkpoints.size(); }
};

}  // namespace cheb
