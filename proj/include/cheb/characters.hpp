#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace cheb {

/// A Dirichlet character stored as its value table on residues 0..q-1.
/// Values vanish on residues sharing a factor with q (characters are not
/// replaced by the primitive character inducing them).
class DirichletCharacter {
 public:
  DirichletCharacter(std::uint64_t modulus, std::vector<std::complex<double>> values);

  std::uint64_t modulus() const { return q_; }
  std::complex<double> operator()(std::uint64_t n) const { return values_[n % q_]; }
  bool is_principal() const;
  bool is_real() const;

 private:
  std::uint64_t q_;
  std::vector<std::complex<double>> values_;
};

/// The full group of phi(q) characters mod q, built from generators of the
/// cyclic factors of (Z/p^k)^* (for 2^k, k >= 3: <-1> x <5>).
class DirichletGroup {
 public:
  explicit DirichletGroup(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }
  std::size_t size() const { return chars_.size(); }
  const DirichletCharacter& operator[](std::size_t i) const { return chars_[i]; }
  /// Index 0 is always the principal character.
  const DirichletCharacter& principal() const { return chars_.front(); }

 private:
  std::uint64_t q_;
  std::vector<DirichletCharacter> chars_;
};

/// n -> Kronecker symbol (disc / n) as a character mod |disc|; disc must be a
/// fundamental discriminant.
DirichletCharacter kronecker_character(std::int64_t disc);

}  // namespace cheb
