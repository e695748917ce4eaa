#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qdouble/cleft.hpp"
#include "qdouble/cyclotomic.hpp"

namespace qdouble {

// Sparse element of H^{⊗rank} with coefficients in Z[zeta_M]. A basis tuple
// (b_1, ..., b_rank) is packed into one key in base `dim`, b_1 most significant.
class Tensor {
 public:
  Tensor(int rank, int dim, int modulus);

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  int modulus() const { return modulus_; }
  const std::unordered_map<std::uint64_t, Cyclotomic>& terms() const { return terms_; }

  std::uint64_t key(std::span<const int> basis) const;
  std::vector<int> decode(std::uint64_t key) const;

  void add(std::uint64_t key, const Cyclotomic& c);
  void add_root(std::uint64_t key, int exponent, std::int64_t multiplicity = 1);
  Tensor scaled(int exponent) const;
  Tensor operator-(const Tensor& other) const;

  // Drops coefficients equal to zero in Z[zeta_M].
  void prune();
  // First basis tuple (in key order) where the two tensors differ.
  std::optional<std::vector<int>> difference(const Tensor& other) const;
  bool operator==(const Tensor& other) const { return !difference(other).has_value(); }

 private:
  int rank_;
  int dim_;
  int modulus_;
  std::unordered_map<std::uint64_t, Cyclotomic> terms_;
};

// zeta^exponent times a basis element.
struct Monomial {
  int basis;
  int exponent;
};

// Terms of Delta(e_g x): (e_a x) ⊗ (e_b x) weighted by gamma_x(a, b), ab = g.
struct CoproductTerm {
  int left;
  int right;
  int exponent;
};

// The quasi-Hopf algebra k^G_omega #_c kF on the basis e_g x, indexed
// b = x * |G| + g:
//   e_g x * e_h y = delta_{g<x, h} theta_g(x, y) e_g xy
//   Delta(e_g x) = sum_{ab = g} gamma_x(a, b) e_a x ⊗ e_b x,  eps(e_g x) = delta_{g, 1}
//   S(e_g x) = theta_{g^-1}(x, x^-1)^-1 gamma_x(g, g^-1)^-1 e_{(g^-1)<x} x^-1
//   alpha = 1, beta = sum_g omega(g, g^-1, g) e_g, phi = sum omega(a, b, c)^-1 e_a ⊗ e_b ⊗ e_c
class QuasiHopfAlgebra {
 public:
  explicit QuasiHopfAlgebra(CleftObject c);

  const CleftObject& cleft() const { return c_; }
  int dim() const { return dim_; }
  int modulus() const { return c_.modulus; }
  int g_order() const { return ng_; }
  int f_order() const { return nf_; }

  int basis(int g, int x) const { return x * ng_ + g; }
  int basis_g(int b) const { return b % ng_; }
  int basis_x(int b) const { return b / ng_; }

  std::optional<Monomial> multiply_basis(int b1, int b2) const;
  std::vector<CoproductTerm> comultiply_basis(int b) const;
  Monomial antipode_basis(int b) const;
  bool counit_basis(int b) const { return basis_g(b) == 0; }

  Tensor zero(int rank) const { return Tensor(rank, dim_, modulus()); }
  Tensor basis_element(int b, int exponent = 0) const;
  Tensor unit() const;
  Tensor alpha() const { return unit(); }
  Tensor beta_element() const;
  // Exponents of the beta element: beta_exponents()[g] = omega(g, g^-1, g).
  std::vector<int> beta_exponents() const;
  Tensor associator() const;
  Tensor associator_inverse() const;

  Tensor multiply(const Tensor& a, const Tensor& b) const;
  // Applies Delta to tensor factor `slot` (0-based).
  Tensor comultiply(const Tensor& t, int slot) const;
  // Applies eps to tensor factor `slot`.
  Tensor counit(const Tensor& t, int slot) const;
  Tensor antipode(const Tensor& t) const;
  Tensor tensor(const Tensor& a, const Tensor& b) const;

 private:
  CleftObject c_;
  int ng_;
  int nf_;
  int dim_;
};

QuasiHopfAlgebra build_algebra(const CleftObject& c);

struct IdentityFamily {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  // Basis indices of the first failing instance; `detail` names the identity.
  std::vector<int> witness;
  std::string detail;

  bool passed() const { return failures == 0; }
};

struct VerificationReport {
  bool exhaustive = true;
  std::vector<IdentityFamily> families;

  bool passed() const;
  const IdentityFamily* family(std::string_view name) const;
  std::size_t checked() const;
};

struct VerifyOptions {
  // Associativity over all basis triples up to this dimension, sampled above.
  int exhaustive_dim = 64;
  std::size_t samples = 20000;
  std::uint64_t seed = 20240601;
};

// Families: associativity, comultiplicativity, counit, quasi-coassociativity,
// pentagon, antipode. Each family stops at its first failure.
VerificationReport verify_quasi_hopf(const QuasiHopfAlgebra& h, const VerifyOptions& options = {});

}  // namespace qdouble
