#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qdouble/cochain.hpp"
#include "qdouble/cyclotomic.hpp"
#include "qdouble/smith.hpp"

using namespace qdouble;

namespace {

Cochain random_cochain(const GroupPtr& g, int degree, int m, std::mt19937& rng, bool normalized) {
  Cochain c(g, degree, m);
  std::uniform_int_distribution<int> dist(0, m - 1);
  std::vector<int> vals(c.values().size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const auto args = c.arguments(i);
    const bool has_one = std::find(args.begin(), args.end(), 0) != args.end();
    vals[i] = normalized && has_one ? 0 : dist(rng);
  }
  return Cochain(g, degree, m, vals);
}

// Heisenberg-type 2-cocycle on Z2 x Z2: (-1)^{a1 b2}.
Cochain heisenberg(const GroupPtr& v) {
  Cochain c(v, 2, 2);
  std::vector<int> vals(16, 0);
  // direct_product(Z2, Z2) labels (a, b) as a * 2 + b.
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) vals[x * 4 + y] = (x / 2) * (y % 2);
  return Cochain(v, 2, 2, vals);
}

}  // namespace

TEST_CASE("coboundary examples") {
  auto z4 = cyclic_group(4);
  // t(g) = g as an exponent mod 4 is a homomorphism, so delta t == 0.
  Cochain t(z4, 1, 4, {0, 1, 2, 3});
  const Cochain dt = coboundary(t);
  for (int v : dt.values()) CHECK(v == 0);

  // t(g) = g mod 8 on Z4: (delta t)(a, b) = a + b - (a+b mod 4) = 4 carry.
  Cochain carry(z4, 1, 8, {0, 1, 2, 3});
  const Cochain d = coboundary(carry);
  CHECK(d.at(1, 1) == 0);
  CHECK(d.at(2, 2) == 4);
  CHECK(d.at(3, 1) == 4);
  CHECK(d.at(1, 2) == 0);
}

TEST_CASE("delta of delta vanishes") {
  std::mt19937 rng(7);
  for (const GroupPtr& g : {cyclic_group(3), dihedral_group(3), quaternion_group()}) {
    for (int degree = 1; degree <= 2; ++degree) {
      const Cochain c = random_cochain(g, degree, 6, rng, false);
      const Cochain dd = coboundary(coboundary(c));
      for (int v : dd.values()) REQUIRE(v == 0);
    }
  }
}

TEST_CASE("normalized cocycle checks") {
  auto z2 = cyclic_group(2);
  Cochain zero(z2, 3, 2);
  CHECK(is_normalized_cocycle(zero).ok());

  // (1,1,1) -> i is not closed; (1,1,1) -> -1 is.
  Cochain sign(z2, 3, 2);
  sign.set(std::vector<int>{1, 1, 1}, 1);
  CHECK(is_normalized_cocycle(sign).ok());
  Cochain bad(z2, 3, 4);
  bad.set(std::vector<int>{1, 1, 1}, 1);
  const auto rep = is_normalized_cocycle(bad);
  CHECK(rep.normalized);
  CHECK_FALSE(rep.closed);
  CHECK(rep.witness == std::vector<int>{1, 1, 1, 1});

  Cochain unnormalized(z2, 3, 2);
  unnormalized.set(std::vector<int>{0, 1, 1}, 1);
  CHECK_FALSE(is_normalized_cocycle(unnormalized).normalized);

  for (int n : {2, 3, 4, 6})
    for (int q = 0; q < n; ++q) {
      const Cochain w = cyclic_cocycle(n, q);
      CHECK(w.modulus() == n * n);
      CHECK(is_normalized_cocycle(w).ok());
    }
  // Value at (1, 1, n-1) is zeta_{n^2}^{qn} = zeta_n^q.
  CHECK(cyclic_cocycle(4, 1).at(1, 1, 3) == 4);
  CHECK(cyclic_cocycle(2, 1).at(1, 1, 1) == 2);
  CHECK(cyclic_cocycle(4, 1).at(1, 1, 1) == 0);
}

TEST_CASE("solve_coboundary examples") {
  auto z4 = cyclic_group(4);
  // Carry cocycle mod 8 is delta of t(g) = g at modulus 8.
  Cochain carry(z4, 2, 2);
  std::vector<int> vals(16, 0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) vals[a * 4 + b] = a + b >= 4 ? 1 : 0;
  carry = Cochain(z4, 2, 2, vals);
  auto res = solve_coboundary(carry);
  REQUIRE(std::holds_alternative<CoboundarySolution>(res));
  const auto& sol = std::get<CoboundarySolution>(res);
  CHECK(sol.modulus == solve_modulus(carry));
  const Cochain t = sol.particular(z4);
  CHECK(coboundary(t) == carry.lifted(sol.modulus));

  // The Heisenberg cocycle on Z2 x Z2 is not symmetric, so it is no coboundary
  // with trivial coefficients.
  auto v = direct_product(*cyclic_group(2), *cyclic_group(2));
  const Cochain h = heisenberg(v);
  CHECK(is_normalized_cocycle(h).ok());
  CHECK(std::holds_alternative<NoSolution>(solve_coboundary(h)));
  CHECK(oracle::coboundary_preimages(*v, solve_modulus(h), [&](int a, int b) {
          return h.lifted(solve_modulus(h)).at(a, b);
        }).empty());
}

TEST_CASE("solve_coboundary is complete against brute force") {
  std::mt19937 rng(11);
  for (const GroupPtr& g : {cyclic_group(3), cyclic_group(4), direct_product(*cyclic_group(2), *cyclic_group(2)),
                            dihedral_group(3)}) {
    for (int trial = 0; trial < 4; ++trial) {
      // Targets that are coboundaries at modulus 4.
      const Cochain t = random_cochain(g, 1, 4, rng, true);
      const Cochain target = coboundary(t);
      auto res = solve_coboundary(target);
      REQUIRE(std::holds_alternative<CoboundarySolution>(res));
      const auto& sol = std::get<CoboundarySolution>(res);
      const auto all = sol.all(g);
      const auto lifted = target.lifted(sol.modulus);
      const auto brute = oracle::coboundary_preimages(*g, sol.modulus, [&](int a, int b) { return lifted.at(a, b); });
      CHECK(all.size() == brute.size());
      std::set<std::vector<int>> ours;
      for (const auto& c : all) {
        CHECK(coboundary(c) == lifted);
        ours.insert(c.values());
      }
      std::set<std::vector<int>> theirs(brute.begin(), brute.end());
      CHECK(ours == theirs);
    }
  }
}

TEST_CASE("lifting the modulus preserves solvability") {
  // On Z2 the symmetric cocycle (1,1) -> -1 becomes delta(i) only after adding
  // 4th roots: solve_modulus must account for it.
  auto z2 = cyclic_group(2);
  Cochain c(z2, 2, 2, {0, 0, 0, 1});
  CHECK(solve_modulus(c) % 4 == 0);
  auto res = solve_coboundary(c);
  REQUIRE(std::holds_alternative<CoboundarySolution>(res));
  const auto& sol = std::get<CoboundarySolution>(res);
  CHECK(coboundary(sol.particular(z2)) == c.lifted(sol.modulus));
  // At modulus 2 alone brute force finds nothing.
  CHECK(oracle::coboundary_preimages(*z2, 2, [&](int a, int b) { return c.at(a, b); }).empty());
}

TEST_CASE("solve_coboundary with extra constraints") {
  auto z3 = cyclic_group(3);
  Cochain zero(z3, 2, 3);
  // Homomorphisms Z3 -> mu_3 with t(1) pinned to zeta_3.
  const LinearConstraint pin{{{1, 1}}, 1};
  auto res = solve_coboundary(zero, std::span<const LinearConstraint>(&pin, 1));
  REQUIRE(std::holds_alternative<CoboundarySolution>(res));
  const auto& sol = std::get<CoboundarySolution>(res);
  CHECK(sol.modulus == 3);
  const auto all = sol.all(z3);
  REQUIRE(all.size() == 1);
  CHECK(all[0].values() == std::vector<int>{0, 1, 2});

  const LinearConstraint twice{{{1, 3}}, 1};
  CHECK(std::holds_alternative<NoSolution>(solve_coboundary(zero, std::span<const LinearConstraint>(&twice, 1))));
}

TEST_CASE("smith_solve examples") {
  // 2x == 1 mod 4 has no solution; 2x == 2 mod 4 has two.
  IntMatrix a(1, 1);
  a(0, 0) = 2;
  CHECK(std::holds_alternative<NoSolution>(smith_solve(a, {1}, 4)));
  auto two = smith_solve(a, {2}, 4);
  REQUIRE(std::holds_alternative<LinearSystemSolution>(two));
  CHECK(std::get<LinearSystemSolution>(two).count() == 2);
  CHECK(std::get<LinearSystemSolution>(two).enumerate() == std::vector<std::vector<int>>{{1}, {3}});

  // Random systems against exhaustive search.
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = std::vector<int>{2, 4, 6, 8, 12}[trial % 5];
    const int rows = 1 + trial % 3, cols = 1 + (trial / 3) % 3;
    IntMatrix mat(rows, cols);
    std::uniform_int_distribution<int> dist(0, m - 1);
    for (auto& e : mat.data) e = dist(rng);
    std::vector<std::int64_t> b(rows);
    for (auto& e : b) e = dist(rng);
    std::vector<std::vector<int>> brute;
    std::vector<int> x(cols, 0);
    std::function<void(int)> go = [&](int k) {
      if (k == cols) {
        for (int i = 0; i < rows; ++i) {
          long long s = 0;
          for (int j = 0; j < cols; ++j) s += mat(i, j) * x[j];
          if (oracle::md(s - b[i], m) != 0) return;
        }
        brute.push_back(x);
        return;
      }
      for (int v = 0; v < m; ++v) {
        x[k] = v;
        go(k + 1);
      }
    };
    go(0);
    auto res = smith_solve(mat, b, m);
    if (brute.empty()) {
      CHECK(std::holds_alternative<NoSolution>(res));
    } else {
      REQUIRE(std::holds_alternative<LinearSystemSolution>(res));
      const auto& sol = std::get<LinearSystemSolution>(res);
      CHECK(sol.count() == brute.size());
      CHECK(sol.enumerate() == brute);
    }
  }
}

TEST_CASE("smith_diagonalize reproduces the matrix") {
  IntMatrix a(2, 3);
  a.data = {2, 4, 4, -6, 6, 12};
  const auto f = smith_diagonalize(a, 12);
  // U A V == D (mod 12).
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      long long s = 0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 3; ++l) s += f.u(i, k) * a(k, l) * f.v(l, j);
      const long long want = i == j ? f.diagonal[i] : 0;
      CHECK(oracle::md(s - want, 12) == 0);
    }
}

TEST_CASE("cyclotomic arithmetic") {
  // 1 + zeta_3 + zeta_3^2 == 0.
  Cyclotomic s(3);
  for (int e = 0; e < 3; ++e) s.add_root(e);
  CHECK(s.is_zero());
  // zeta_4^2 == -1.
  CHECK(Cyclotomic::root(4, 2) == Cyclotomic::root(4, 0, -1));
  CHECK(Cyclotomic::root(8, 3).as_root() == 3);
  CHECK_FALSE((Cyclotomic::root(4, 0) + Cyclotomic::root(4, 1)).as_root().has_value());
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK((Cyclotomic::root(6, 1) * Cyclotomic::root(6, 5)).as_root() == 0);
}

TEST_CASE("pullback and inflation") {
  auto q = quaternion_group();
  const auto quot = quotient_with_section(q, Subgroup::from_members(*q, {0, 2, 3, 1}));
  REQUIRE(quot.quotient->order() == 2);
  const Cochain w = cyclic_cocycle(2, 1);
  // cyclic_cocycle lives on its own Z2, which shares the table of the quotient.
  const Cochain inflated = inflate(w, quot);
  CHECK(inflated.group()->order() == 8);
  CHECK(is_normalized_cocycle(inflated).ok());
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) CHECK(inflated.at(a, b, c) == w.at(quot.proj[a], quot.proj[b], quot.proj[c]));

  auto z4 = cyclic_group(4);
  const std::vector<int> mod2 = {0, 1, 0, 1};
  const Cochain pb = pullback(w, z4, mod2);
  CHECK(is_normalized_cocycle(pb).ok());
  CHECK(pb.at(1, 1, 1) == w.at(1, 1, 1));
  CHECK(pb.at(3, 1, 3) == w.at(1, 1, 1));
}
