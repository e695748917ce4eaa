#include "qdouble/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "qdouble/error.hpp"
#include "qdouble/modular.hpp"

namespace qdouble {

namespace {

std::string tuple_text(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------- Subgroup

Subgroup Subgroup::from_members(const FiniteGroup& parent, std::vector<int> members) {
  const int n = parent.order();
  Subgroup s;
  s.mask_.assign(n, false);
  for (int g : members) {
    if (g < 0 || g >= n) throw Error(ErrorCode::InvalidInput, "element " + std::to_string(g) + " out of range", {g});
    s.mask_[g] = true;
  }
  for (int g = 0; g < n; ++g)
    if (s.mask_[g]) s.members_.push_back(g);
  if (!s.mask_[0]) throw Error(ErrorCode::NotSubgroup, "identity missing");
  for (int a : s.members_) {
    if (!s.mask_[parent.inv(a)])
      throw Error(ErrorCode::NotSubgroup, "inverse of " + std::to_string(a) + " missing", {a});
    for (int b : s.members_)
      if (!s.mask_[parent.mul(a, b)])
        throw Error(ErrorCode::NotSubgroup, "product " + tuple_text({a, b}) + " not a member", {a, b});
  }
  return s;
}

Subgroup Subgroup::generated_by(const FiniteGroup& parent, std::span<const int> generators) {
  const int n = parent.order();
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    for (int s : generators) {
      if (s < 0 || s >= n) throw Error(ErrorCode::InvalidInput, "generator out of range", {s});
      const int h = parent.mul(g, s);
      if (!seen[h]) {
        seen[h] = true;
        queue.push_back(h);
      }
    }
  }
  std::vector<int> members;
  for (int g = 0; g < n; ++g)
    if (seen[g]) members.push_back(g);
  Subgroup sub;
  sub.members_ = std::move(members);
  sub.mask_ = std::move(seen);
  return sub;
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  const int e = 0;
  return generated_by(parent, std::span<const int>(&e, 0));
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<int> all(parent.order());
  std::iota(all.begin(), all.end(), 0);
  return generated_by(parent, all);
}

int Subgroup::position(int g) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), g);
  if (it == members_.end() || *it != g) return -1;
  return static_cast<int>(it - members_.begin());
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](int g) { return other.contains(g); });
}

// ------------------------------------------------------------- FiniteGroup

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& input) {
  const int n = static_cast<int>(input.size());
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty multiplication table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(input[a].size()) != n)
      throw Error(ErrorCode::InvalidInput, "row " + std::to_string(a) + " has wrong length", {a});
    for (int b = 0; b < n; ++b)
      if (input[a][b] < 0 || input[a][b] >= n)
        throw Error(ErrorCode::InvalidInput, "entry " + tuple_text({a, b}) + " out of range", {a, b});
  }

  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = input[a][b] == b && input[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");

  // Swap e and 0 so that the identity is element 0.
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::swap(labels[0], labels[e]);
  std::vector<int> relabel(n);
  for (int i = 0; i < n; ++i) relabel[labels[i]] = i;

  FiniteGroup g;
  g.order_ = n;
  g.labels_ = labels;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[static_cast<std::size_t>(a) * n + b] = relabel[input[labels[a]][labels[b]]];

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0) throw Error(ErrorCode::NoInverse, "element " + std::to_string(labels[a]) + " has no inverse", {labels[a]});
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorCode::NotAssociative, "triple " + tuple_text({labels[a], labels[b], labels[c]}),
                      {labels[a], labels[b], labels[c]});

  g.element_orders_.assign(n, 1);
  g.exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int k = 1;
    for (int p = a; p != 0; p = g.mul(p, a)) ++k;
    g.element_orders_[a] = (a == 0) ? 1 : k;
    g.exponent_ = std::lcm(g.exponent_, g.element_orders_[a]);
  }

  std::vector<int> central;
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul(z, a) == g.mul(a, z);
    if (ok) central.push_back(z);
  }
  g.center_ = Subgroup::generated_by(g, central);

  std::vector<int> commutators;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) commutators.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  g.commutator_ = Subgroup::generated_by(g, commutators);
  return g;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

GroupPtr make_group(const std::vector<std::vector<int>>& table) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(table));
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return make_group(t);
}

GroupPtr dihedral_group(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "dihedral parameter must be positive");
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int a = x % n, b = x / n, c = y % n, d = y / n;
      const int rot = ((b == 0 ? a + c : a - c) % n + n) % n;
      t[x][y] = rot + n * ((b + d) % 2);
    }
  return make_group(t);
}

GroupPtr quaternion_group() {
  // units 1, i, j, k as 0..3; product u*v = sign * w
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2) ^ (y % 2) ^ neg[u][v];
      t[x][y] = 2 * unit[u][v] + sign;
    }
  return make_group(t);
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = g.order(), n = h.order();
  std::vector<std::vector<int>> t(m * n, std::vector<int>(m * n));
  for (int x = 0; x < m * n; ++x)
    for (int y = 0; y < m * n; ++y) t[x][y] = g.mul(x / n, y / n) * n + h.mul(x % n, y % n);
  return make_group(t);
}

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, std::span<const int> map) {
  if (static_cast<int>(map.size()) != from.order()) return false;
  for (int v : map)
    if (v < 0 || v >= to.order()) return false;
  for (int a = 0; a < from.order(); ++a)
    for (int b = 0; b < from.order(); ++b)
      if (map[from.mul(a, b)] != to.mul(map[a], map[b])) return false;
  return true;
}

// ----------------------------------------------------------------- Actions

GroupAction validate_action(GroupPtr acting, GroupPtr target, std::vector<std::vector<int>> perm) {
  const FiniteGroup& f = *acting;
  const FiniteGroup& g = *target;
  if (static_cast<int>(perm.size()) != f.order())
    throw Error(ErrorCode::InvalidInput, "expected one permutation per element of the acting group");
  for (int x = 0; x < f.order(); ++x) {
    if (static_cast<int>(perm[x].size()) != g.order())
      throw Error(ErrorCode::InvalidInput, "permutation " + std::to_string(x) + " has wrong length", {x});
    std::vector<bool> hit(g.order(), false);
    for (int v : perm[x]) {
      if (v < 0 || v >= g.order() || hit[v])
        throw Error(ErrorCode::InvalidInput, "entry list " + std::to_string(x) + " is not a permutation", {x});
      hit[v] = true;
    }
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (perm[x][g.mul(a, b)] != g.mul(perm[x][a], perm[x][b]))
          throw Error(ErrorCode::NotAutomorphism, "element " + std::to_string(x) + " fails on " + tuple_text({a, b}), {x});
  }
  for (int a = 0; a < g.order(); ++a)
    if (perm[0][a] != a) throw Error(ErrorCode::NotRightAction, "identity acts nontrivially", {0, 0});
  for (int x = 0; x < f.order(); ++x)
    for (int y = 0; y < f.order(); ++y)
      for (int a = 0; a < g.order(); ++a)
        if (perm[f.mul(x, y)][a] != perm[y][perm[x][a]])
          throw Error(ErrorCode::NotRightAction, "pair " + tuple_text({x, y}), {x, y});

  std::vector<int> kernel;
  for (int x = 0; x < f.order(); ++x) {
    bool trivial = true;
    for (int a = 0; a < g.order() && trivial; ++a) trivial = perm[x][a] == a;
    if (trivial) kernel.push_back(x);
  }
  GroupAction act{std::move(acting), std::move(target), std::move(perm), {}};
  act.kernel = Subgroup::generated_by(*act.acting, kernel);
  return act;
}

GroupAction conjugation_action(GroupPtr g) {
  std::vector<std::vector<int>> perm(g->order(), std::vector<int>(g->order()));
  for (int x = 0; x < g->order(); ++x)
    for (int a = 0; a < g->order(); ++a) perm[x][a] = g->conj(a, x);
  return validate_action(g, g, std::move(perm));
}

GroupAction trivial_action(GroupPtr acting, GroupPtr target) {
  std::vector<int> id(target->order());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> perm(acting->order(), id);
  return validate_action(std::move(acting), std::move(target), std::move(perm));
}

// -------------------------------------------------------------- Characters

std::vector<int> Character::exponents(int m) const {
  if (m % modulus != 0) throw Error(ErrorCode::ModulusMismatch, "character modulus does not divide target modulus");
  const int scale = m / modulus;
  std::vector<int> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] * scale;
  return out;
}

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

Character Character::operator*(const Character& other) const {
  Character out{modulus, values};
  for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = static_cast<int>(mod(values[i] + other.values[i], modulus));
  return out;
}

Character Character::inverse() const {
  Character out{modulus, values};
  for (auto& v : out.values) v = static_cast<int>(mod(-v, modulus));
  return out;
}

std::vector<Character> characters(const FiniteGroup& g) {
  const int e = g.exponent();
  const int n = g.order();
  const Subgroup& derived = g.commutator_subgroup();

  // Work on coset labels of [G,G]: label[x] = minimal element of x[G,G].
  std::vector<int> label(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (label[x] >= 0) continue;
    reps.push_back(x);
    for (int d : derived.members()) label[g.mul(x, d)] = x;
  }
  auto coset_order = [&](int x) {
    int k = 1;
    for (int p = label[x]; p != 0; p = label[g.mul(p, x)]) ++k;
    return k;
  };

  // Greedy generators of the abelianization, by maximal order.
  std::vector<int> gens;
  std::vector<bool> spanned(n, false);
  auto recompute_span = [&] {
    std::vector<int> with_derived = gens;
    with_derived.insert(with_derived.end(), derived.members().begin(), derived.members().end());
    Subgroup span = Subgroup::generated_by(g, with_derived);
    for (int x = 0; x < n; ++x) spanned[x] = span.contains(x);
  };
  recompute_span();
  while (true) {
    int best = -1, best_order = 0;
    for (int x : reps) {
      if (spanned[x]) continue;
      const int o = coset_order(x);
      if (o > best_order) best = x, best_order = o;
    }
    if (best < 0) break;
    gens.push_back(best);
    recompute_span();
  }

  std::vector<int> orders;
  for (int s : gens) orders.push_back(coset_order(s));

  std::vector<Character> out;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    // Extend the assignment on generators over the abelianization.
    std::vector<int> value(n, -1);
    value[0] = 0;
    std::deque<int> queue{0};
    bool consistent = true;
    while (!queue.empty() && consistent) {
      const int x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size() && consistent; ++i) {
        const int y = label[g.mul(x, gens[i])];
        const int v = static_cast<int>(mod(value[x] + choice[i] * (e / orders[i]), e));
        if (value[y] < 0) {
          value[y] = v;
          queue.push_back(y);
        } else if (value[y] != v) {
          consistent = false;
        }
      }
    }
    if (consistent) {
      Character chi{e, std::vector<int>(n)};
      for (int x = 0; x < n; ++x) chi.values[x] = value[label[x]];
      out.push_back(std::move(chi));
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == orders[i]) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  std::sort(out.begin(), out.end());
  if (out.size() != reps.size())
    throw InternalError("character count " + std::to_string(out.size()) + " differs from |G/[G,G]| = " +
                        std::to_string(reps.size()));
  return out;
}

std::vector<Character> invariant_characters(const GroupAction& action) {
  std::vector<Character> out;
  for (auto& chi : characters(*action.target)) {
    bool invariant = true;
    for (int x = 0; x < action.acting->order() && invariant; ++x)
      for (int g = 0; g < action.target->order() && invariant; ++g) invariant = chi.at(action.act(g, x)) == chi.at(g);
    if (invariant) out.push_back(std::move(chi));
  }
  return out;
}

std::optional<Character> character_from_exponents(const FiniteGroup& g, std::span<const int> exponents, int m) {
  const int e = g.exponent();
  if (m % e != 0 || static_cast<int>(exponents.size()) != g.order()) return std::nullopt;
  const int scale = m / e;
  Character chi{e, std::vector<int>(g.order())};
  for (int x = 0; x < g.order(); ++x) {
    const auto v = mod(exponents[x], m);
    if (v % scale != 0) return std::nullopt;
    chi.values[x] = static_cast<int>(v / scale);
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (mod(chi.values[a] + chi.values[b] - chi.values[g.mul(a, b)], e) != 0) return std::nullopt;
  return chi;
}

int character_index(std::span<const Character> chars, const Character& chi) {
  auto it = std::lower_bound(chars.begin(), chars.end(), chi);
  if (it != chars.end() && *it == chi) return static_cast<int>(it - chars.begin());
  auto linear = std::find(chars.begin(), chars.end(), chi);
  return linear == chars.end() ? -1 : static_cast<int>(linear - chars.begin());
}

// ---------------------------------------------------------------- Quotients

QuotientData quotient_with_section(GroupPtr parent, const Subgroup& kernel) {
  const FiniteGroup& f = *parent;
  const int n = f.order();
  if (kernel.parent_order() != n) throw Error(ErrorCode::InvalidInput, "subgroup belongs to a different group");
  for (int x = 0; x < n; ++x)
    for (int a : kernel.members())
      if (!kernel.contains(f.conj(a, x)))
        throw Error(ErrorCode::NotNormal, "conjugate of " + std::to_string(a) + " by " + std::to_string(x) + " leaves the subgroup",
                    {a, x});

  std::vector<int> proj(n, -1);
  std::vector<int> section;
  for (int x = 0; x < n; ++x) {
    if (proj[x] >= 0) continue;
    const int coset = static_cast<int>(section.size());
    section.push_back(x);
    for (int a : kernel.members()) proj[f.mul(x, a)] = coset;
  }
  const int q = static_cast<int>(section.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i][j] = proj[f.mul(section[i], section[j])];

  QuotientData data{std::move(parent), kernel, make_group(table), std::move(proj), std::move(section)};
  if (!data.quotient->relabeling().empty() && data.quotient->relabeling()[0] != 0)
    throw InternalError("identity coset is not labelled 0");
  return data;
}

}  // namespace qdouble
