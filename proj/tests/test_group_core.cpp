#include <doctest.h>

#include <array>
#include <complex>

#include "oracles.hpp"
#include "qdouble/group.hpp"

using namespace qdouble;

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

void check_group_axioms(const FiniteGroup& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    CHECK(g.mul(0, a) == a);
    CHECK(g.mul(a, 0) == a);
    CHECK(g.mul(a, g.inv(a)) == 0);
    CHECK(g.mul(g.inv(a), a) == 0);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

// 2x2 matrices over Z[i] for the quaternion units.
using Mat = std::array<std::complex<int>, 4>;

Mat matmul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat negate(const Mat& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

}  // namespace

TEST_CASE("load_group validates tables") {
  auto trivial = make_group({{0}});
  CHECK(trivial->order() == 1);
  CHECK(trivial->exponent() == 1);

  auto z4 = make_group(cyclic_table(4));
  CHECK(z4->order() == 4);
  CHECK(z4->exponent() == 4);
  CHECK(z4->center().size() == 4);
  check_group_axioms(*z4);

  CHECK_THROWS_AS(make_group({{0, 1}, {1, 1}}), Error);
  try {
    make_group({{1, 0}, {0, 0}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::NoIdentity || e.code() == ErrorCode::NoInverse || e.code() == ErrorCode::NotAssociative));
  }
  // Identity 0, every element has an inverse, but not associative.
  const std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    make_group(loop);
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAssociative);
  }
  // No inverse: 1*x is never 0.
  try {
    make_group({{0, 1, 2}, {1, 1, 1}, {2, 1, 2}});
    FAIL("expected NoInverse");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::NoInverse || e.code() == ErrorCode::NotAssociative));
  }
}

TEST_CASE("identity is moved to index 0") {
  // Z_3 with the identity stored as element 2.
  auto g = make_group({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  CHECK(g->relabeling()[0] == 2);
  check_group_axioms(*g);
}

TEST_CASE("quaternion table agrees with the matrix representation") {
  const std::complex<int> i{0, 1};
  const Mat one{1, 0, 0, 1}, qi{i, 0, 0, -i}, qj{0, 1, -1, 0}, qk{0, i, i, 0};
  const std::vector<Mat> m = {one, negate(one), qi, negate(qi), qj, negate(qj), qk, negate(qk)};
  auto q = quaternion_group();
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(matmul(m[a], m[b]) == m[q->mul(a, b)]);
  check_group_axioms(*q);
  CHECK(q->center().members() == std::vector<int>{0, 1});
  CHECK(q->commutator_subgroup() == q->center());
  CHECK(q->exponent() == 4);
}

TEST_CASE("conjugation action") {
  auto z6 = cyclic_group(6);
  const GroupAction ab = conjugation_action(z6);
  for (int x = 0; x < 6; ++x)
    for (int g = 0; g < 6; ++g) CHECK(ab.act(g, x) == g);

  auto q = quaternion_group();
  const GroupAction c = conjugation_action(q);
  CHECK(c.act(4, 2) == 5);  // i^-1 j i = -j
  CHECK(c.kernel == q->center());

  auto d4 = dihedral_group(4);
  CHECK(conjugation_action(d4).kernel == d4->center());
}

TEST_CASE("quotient_with_section") {
  auto q = quaternion_group();
  const auto same = quotient_with_section(q, Subgroup::trivial(*q));
  CHECK(same.quotient->order() == 8);
  for (int x = 0; x < 8; ++x) CHECK(same.section[same.proj[x]] == x);

  auto z4 = cyclic_group(4);
  const auto z2 = quotient_with_section(z4, Subgroup::from_members(*z4, {0, 2}));
  CHECK(z2.quotient->order() == 2);
  CHECK(z2.section == std::vector<int>{0, 1});

  const auto v = quotient_with_section(q, q->center());
  CHECK(v.quotient->order() == 4);
  CHECK(v.quotient->exponent() == 2);
  CHECK(v.quotient->is_abelian());
  CHECK(v.quotient->order() * static_cast<int>(q->center().size()) == q->order());
  for (int y = 0; y < 4; ++y) CHECK(v.proj[v.section[y]] == y);
  CHECK(is_homomorphism(*q, *v.quotient, v.proj));
  for (int x = 0; x < 8; ++x) CHECK((v.proj[x] == 0) == q->center().contains(x));

  auto d3 = dihedral_group(3);
  CHECK_THROWS_AS(quotient_with_section(d3, Subgroup::from_members(*d3, {0, 3})), Error);
}

TEST_CASE("characters against a brute-force homomorphism count") {
  for (const GroupPtr& g : {cyclic_group(1), cyclic_group(4), quaternion_group(), dihedral_group(4), dihedral_group(3),
                            direct_product(*cyclic_group(2), *cyclic_group(4))}) {
    const auto chars = characters(*g);
    const int ab = g->order() / static_cast<int>(g->commutator_subgroup().size());
    CHECK(static_cast<int>(chars.size()) == ab);
    CHECK(oracle::homs_to_cyclic(*g, g->exponent()).size() == chars.size());
    CHECK(chars.front().is_trivial());
    for (const auto& a : chars)
      for (const auto& b : chars) CHECK(character_index(chars, a * b) >= 0);
  }
  CHECK(characters(*quaternion_group()).size() == 4);
  CHECK(characters(*cyclic_group(4)).size() == 4);
}

TEST_CASE("invariant characters") {
  auto z3 = cyclic_group(3);
  auto z2 = cyclic_group(2);
  CHECK(invariant_characters(trivial_action(z2, z3)).size() == 3);
  const GroupAction inversion = validate_action(z2, z3, {{0, 1, 2}, {0, 2, 1}});
  CHECK(invariant_characters(inversion).size() == 1);
  auto q = quaternion_group();
  CHECK(invariant_characters(conjugation_action(q)).size() == characters(*q).size());
}

TEST_CASE("validate_action") {
  auto z2 = cyclic_group(2);
  auto z3 = cyclic_group(3);
  CHECK(validate_action(z2, z3, {{0, 1, 2}, {0, 1, 2}}).kernel.size() == 2);
  auto q = quaternion_group();
  std::vector<std::vector<int>> perm(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int g = 0; g < 8; ++g) perm[x][g] = q->conj(g, x);
  CHECK(validate_action(q, q, perm).kernel == q->center());

  try {
    validate_action(z2, z3, {{0, 1, 2}, {1, 0, 2}});
    FAIL("expected NotAutomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAutomorphism);
  }
  // Z_4 acting on Z_3 through inversion at the generator, but with the square
  // also acting by inversion: not a homomorphism into Aut.
  auto z4 = cyclic_group(4);
  try {
    validate_action(z4, z3, {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}, {0, 2, 1}});
    FAIL("expected NotRightAction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRightAction);
  }
}
