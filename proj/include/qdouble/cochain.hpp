#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qdouble/group.hpp"
#include "qdouble/smith.hpp"

namespace qdouble {

// Multiplicative k-cochain G^k -> mu_M in exponent form: the value at
// (g1, ..., gk) is zeta_M^values[index(g1, ..., gk)].
class Cochain {
 public:
  Cochain(GroupPtr group, int degree, int modulus);
  Cochain(GroupPtr group, int degree, int modulus, std::vector<int> values);

  const GroupPtr& group() const { return group_; }
  int degree() const { return degree_; }
  int modulus() const { return modulus_; }
  const std::vector<int>& values() const { return values_; }

  int at(std::span<const int> args) const { return values_[index(args)]; }
  int at(int a) const { return values_[a]; }
  int at(int a, int b) const { return values_[static_cast<std::size_t>(a) * n_ + b]; }
  int at(int a, int b, int c) const { return values_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c]; }
  void set(std::span<const int> args, int exponent);

  std::size_t index(std::span<const int> args) const;
  // Inverse of index().
  std::vector<int> arguments(std::size_t index) const;

  // Same roots of unity written over a multiple of the modulus.
  Cochain lifted(int modulus) const;
  bool is_normalized() const;
  // Order of the subgroup of mu_M generated by the values.
  int value_order() const;

  bool operator==(const Cochain& other) const;

 private:
  GroupPtr group_;
  int degree_;
  int modulus_;
  int n_;
  std::vector<int> values_;
};

// (delta c)(g1..g_{k+1}) in additive exponent form with trivial coefficients.
Cochain coboundary(const Cochain& c);

struct CocycleReport {
  bool normalized = true;
  bool closed = true;
  std::vector<int> witness;  // first failing tuple
  bool ok() const { return normalized && closed; }
};

CocycleReport is_normalized_cocycle(const Cochain& c);

// sum coefficient * t(element) == rhs (mod M); rhs is an exponent mod the
// modulus of the target it accompanies.
struct LinearConstraint {
  std::vector<std::pair<int, int>> terms;
  int rhs = 0;
};

// t with delta t == target (plus the extra constraints), normalized so t(1) == 0.
struct CoboundarySolution {
  int modulus = 1;
  LinearSystemSolution system;  // unknowns are t(g) for g = 1 .. |G|-1

  // Degree-1 cochain from an unknown vector (particular by default).
  Cochain cochain(const GroupPtr& group, std::span<const int> unknowns) const;
  Cochain particular(const GroupPtr& group) const;
  std::vector<Cochain> all(const GroupPtr& group) const;
};

// Smallest modulus at which solving delta t = target is complete over C:
// lcm(M, n |G|) with n the value order of the target.
int solve_modulus(const Cochain& target);

// Solves at solve_modulus(target); the target and the constraint right-hand
// sides are lifted first. NoSolution certifies target is not in B^2 (with the
// constraints) over any field containing the needed roots of unity.
std::variant<CoboundarySolution, NoSolution> solve_coboundary(const Cochain& target,
                                                              std::span<const LinearConstraint> extra = {});

// omega(a,b,c) = zeta_{N^2}^{q a (b + c - [(b + c) mod N])} on Z_N.
Cochain cyclic_cocycle(int n, int q);

// Pullback along a homomorphism G -> Q in every argument.
Cochain pullback(const Cochain& c, GroupPtr domain, std::span<const int> hom);
// Pullback along the projection of a quotient whose group has the same table
// as the cochain's group.
Cochain inflate(const Cochain& c, const QuotientData& quotient);

}  // namespace qdouble
