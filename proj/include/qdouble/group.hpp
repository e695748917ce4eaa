#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace qdouble {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A subgroup of a finite group, stored as its sorted member list plus a
// membership mask over the parent's elements.
class Subgroup {
 public:
  Subgroup() = default;

  // Throws Error(NotSubgroup) if the set is not closed or misses the identity.
  static Subgroup from_members(const FiniteGroup& parent, std::vector<int> members);
  static Subgroup generated_by(const FiniteGroup& parent, std::span<const int> generators);
  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  int parent_order() const { return static_cast<int>(mask_.size()); }
  bool contains(int g) const { return g >= 0 && g < parent_order() && mask_[g]; }
  // Position of g in members(), or -1.
  int position(int g) const;
  bool is_subset_of(const Subgroup& other) const;

  bool operator==(const Subgroup& other) const { return members_ == other.members_ && mask_.size() == other.mask_.size(); }

 private:
  std::vector<int> members_;
  std::vector<bool> mask_;
};

// Finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  // Validates the table (entries in range, identity, inverses, associativity).
  // If the identity is not element 0 the elements are relabelled by swapping
  // it with 0; relabeling() maps new indices back to the input labels.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // g^-1 x g
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
  int element_order(int a) const { return element_orders_[a]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return center_.size() == static_cast<std::size_t>(order_); }

  const Subgroup& center() const { return center_; }
  const Subgroup& commutator_subgroup() const { return commutator_; }
  const std::vector<int>& relabeling() const { return labels_; }

  std::vector<std::vector<int>> table() const;
  bool same_table(const FiniteGroup& other) const { return table_ == other.table_; }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> element_orders_;
  int exponent_ = 1;
  Subgroup center_;
  Subgroup commutator_;
  std::vector<int> labels_;
};

GroupPtr make_group(const std::vector<std::vector<int>>& table);

// Standard tables used by the examples and tests.
GroupPtr cyclic_group(int n);
// Dihedral group of order 2n; element r^a s^b has index a + n*b.
GroupPtr dihedral_group(int n);
// Quaternion group; indices 0..7 are 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternion_group();
// Element (a, b) has index a * |H| + b.
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, std::span<const int> map);

// Right action of `acting` (F) on `target` (G) by automorphisms:
// perm[x][g] = g ◁ x, with g ◁ (xy) = (g ◁ x) ◁ y.
struct GroupAction {
  GroupPtr acting;
  GroupPtr target;
  std::vector<std::vector<int>> perm;
  Subgroup kernel;  // elements of F acting trivially

  int act(int g, int x) const { return perm[x][g]; }
};

// Throws Error(NotAutomorphism | NotRightAction | InvalidInput).
GroupAction validate_action(GroupPtr acting, GroupPtr target, std::vector<std::vector<int>> perm);
// g ◁ x = x^-1 g x
GroupAction conjugation_action(GroupPtr g);
GroupAction trivial_action(GroupPtr acting, GroupPtr target);

// Linear character of G with values chi(g) = zeta_E^{values[g]}, E the group
// exponent.
struct Character {
  int modulus = 1;
  std::vector<int> values;

  int at(int g) const { return values[g]; }
  // Exponents of the same values as powers of a primitive m-th root; E | m.
  std::vector<int> exponents(int m) const;
  bool is_trivial() const;
  Character operator*(const Character& other) const;
  Character inverse() const;

  auto operator<=>(const Character&) const = default;
};

// All |G/[G,G]| linear characters, sorted with the trivial character first.
std::vector<Character> characters(const FiniteGroup& g);
// Characters fixed by the action: chi(g ◁ x) == chi(g).
std::vector<Character> invariant_characters(const GroupAction& action);
// Interprets exponents mod m as a character if they define a homomorphism
// G -> mu_m with values in mu_E.
std::optional<Character> character_from_exponents(const FiniteGroup& g, std::span<const int> exponents, int m);
int character_index(std::span<const Character> chars, const Character& chi);

struct QuotientData {
  GroupPtr parent;
  Subgroup kernel;
  GroupPtr quotient;
  std::vector<int> proj;     // F -> F/A
  std::vector<int> section;  // F/A -> F, minimal index in each coset

  // r(x) = section(proj(x))
  int rep(int x) const { return section[proj[x]]; }
};

// Cosets are numbered by their minimal element, so the identity coset is 0.
// Throws Error(NotNormal).
QuotientData quotient_with_section(GroupPtr parent, const Subgroup& kernel);

}  // namespace qdouble
