#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qdouble {

// Element of Z[zeta_M], stored as an integer combination of powers
// zeta_M^e (0 <= e < M). Equality and zero tests reduce modulo the M-th
// cyclotomic polynomial, so they are exact in the cyclotomic ring.
class Cyclotomic {
 public:
  explicit Cyclotomic(int modulus = 1);
  static Cyclotomic root(int modulus, int exponent, std::int64_t multiplicity = 1);

  int modulus() const { return modulus_; }
  const std::vector<std::pair<int, std::int64_t>>& terms() const { return terms_; }

  void add_root(int exponent, std::int64_t multiplicity = 1);
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic operator+(const Cyclotomic& other) const;
  Cyclotomic operator-(const Cyclotomic& other) const;
  Cyclotomic operator*(const Cyclotomic& other) const;
  Cyclotomic times_root(int exponent) const;

  bool is_zero() const;
  bool operator==(const Cyclotomic& other) const { return (*this - other).is_zero(); }
  // e if the value equals zeta_M^e.
  std::optional<int> as_root() const;
  // Coefficients of the canonical remainder modulo Phi_M (length phi(M)).
  std::vector<std::int64_t> canonical() const;

 private:
  int modulus_;
  std::vector<std::pair<int, std::int64_t>> terms_;  // sorted by exponent, nonzero multiplicities
};

// Integer coefficients of Phi_n, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

}  // namespace qdouble
