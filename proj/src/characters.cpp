#include "cheb/characters.hpp"

#include <numbers>

#include "cheb/arith.hpp"
#include "cheb/common.hpp"

namespace cheb {
namespace {

// One cyclic factor of (Z/q)^*: its order and, for each residue mod q, the
// exponent of that factor's generator (-1 when the residue is not a unit).
struct CyclicFactor {
  std::uint64_t order = 1;
  std::vector<std::int64_t> dlog;
};

std::uint64_t primitive_root_prime_power(std::uint64_t p, std::uint64_t pk) {
  const std::uint64_t phi = pk / p * (p - 1);
  const auto fac = arith::factorize(phi);
  for (std::uint64_t g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (const auto& [r, e] : fac) {
      if (arith::powmod(g, phi / r, pk) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

// Lifts a discrete log table on residues mod pk to residues mod q.
CyclicFactor lift(std::uint64_t q, std::uint64_t pk, std::uint64_t order,
                  const std::vector<std::int64_t>& local) {
  CyclicFactor f{order, std::vector<std::int64_t>(q, -1)};
  for (std::uint64_t r = 0; r < q; ++r) {
    if (arith::gcd(r, q) == 1) f.dlog[r] = local[r % pk];
  }
  return f;
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::vector<std::complex<double>> values)
    : q_(modulus), values_(std::move(values)) {
  require(q_ >= 1 && values_.size() == q_, "DirichletCharacter: value table must have q entries");
}

bool DirichletCharacter::is_principal() const {
  for (std::uint64_t r = 0; r < q_; ++r) {
    const double expect = arith::gcd(r, q_) == 1 ? 1.0 : 0.0;
    if (std::abs(values_[r] - expect) > 1e-12) return false;
  }
  return true;
}

bool DirichletCharacter::is_real() const {
  for (const auto& v : values_) {
    if (std::abs(v.imag()) > 1e-12) return false;
  }
  return true;
}

DirichletGroup::DirichletGroup(std::uint64_t q) : q_(q) {
  require(q >= 1, "DirichletGroup: q must be >= 1");
  require(q <= (std::uint64_t{1} << 20), "DirichletGroup: modulus too large for tabulated characters");
  std::vector<CyclicFactor> factors;
  for (const auto& [p, k] : arith::factorize(q)) {
    std::uint64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    if (p == 2) {
      if (k == 1) continue;
      std::vector<std::int64_t> sign(pk, -1);
      for (std::uint64_t r = 1; r < pk; r += 2) sign[r] = (r % 4 == 1) ? 0 : 1;
      factors.push_back(lift(q, pk, 2, sign));
      if (k >= 3) {
        // Every odd residue is +-5^e for a unique e < 2^{k-2}.
        const std::uint64_t order = pk / 4;
        std::vector<std::int64_t> five(pk, -1);
        std::uint64_t v = 1;
        for (std::uint64_t e = 0; e < order; ++e) {
          five[v] = five[pk - v] = static_cast<std::int64_t>(e);
          v = v * 5 % pk;
        }
        factors.push_back(lift(q, pk, order, five));
      }
    } else {
      const std::uint64_t g = primitive_root_prime_power(p, pk);
      const std::uint64_t order = pk / p * (p - 1);
      std::vector<std::int64_t> local(pk, -1);
      std::uint64_t v = 1;
      for (std::uint64_t e = 0; e < order; ++e) {
        local[v] = static_cast<std::int64_t>(e);
        v = arith::mulmod(v, g, pk);
      }
      factors.push_back(lift(q, pk, order, local));
    }
  }

  std::vector<std::uint64_t> index(factors.size(), 0);
  for (;;) {
    std::vector<std::complex<double>> values(q, 0.0);
    for (std::uint64_t r = 0; r < q; ++r) {
      if (arith::gcd(r, q) != 1) continue;
      double phase = 0.0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto e = static_cast<std::uint64_t>(factors[i].dlog[r]);
        phase += static_cast<double>((index[i] * e) % factors[i].order) /
                 static_cast<double>(factors[i].order);
      }
      values[r] = std::polar(1.0, 2.0 * std::numbers::pi * phase);
    }
    chars_.emplace_back(q, std::move(values));
    std::size_t i = 0;
    while (i < factors.size() && ++index[i] == factors[i].order) index[i++] = 0;
    if (i == factors.size()) break;
  }
}

DirichletCharacter kronecker_character(std::int64_t disc) {
  require(disc != 0 && disc != 1, "kronecker_character: disc must not be 0 or 1");
  const std::int64_t r = arith::mod(disc, 4) == 0 ? disc / 4 : disc;
  const bool fundamental = arith::is_squarefree(static_cast<std::uint64_t>(r < 0 ? -r : r)) &&
                           (r == disc ? arith::mod(disc, 4) == 1 : arith::mod(r, 4) == 2 || arith::mod(r, 4) == 3);
  require(fundamental, "kronecker_character: disc must be a fundamental discriminant");
  const std::uint64_t q = static_cast<std::uint64_t>(disc < 0 ? -disc : disc);
  std::vector<std::complex<double>> values(q, 0.0);
  for (std::uint64_t r = 1; r < q; ++r) values[r] = static_cast<double>(arith::kronecker(disc, r));
  return DirichletCharacter(q, std::move(values));
}

}  // namespace cheb
