#include <doctest.h>

#include <algorithm>
#include <functional>

#include "oracles.hpp"
#include "qdouble/central_quotient.hpp"
#include "qdouble/twisted_double.hpp"

using namespace qdouble;

namespace {

Cochain trivial_omega(const GroupPtr& g) { return Cochain(g, 3, 1); }

GroupLikeData double_data(const GroupPtr& g, const Cochain& w) { return group_likes(canonical_cleft(g, w)); }

AdmissibilityCertificate certificate(const GroupLikeData& data, const Subgroup& a) {
  auto res = is_admissible(data, a);
  REQUIRE(std::holds_alternative<AdmissibilityCertificate>(res));
  return std::get<AdmissibilityCertificate>(res);
}

CharacterFamily inverse(const CharacterFamily& f, int m) {
  CharacterFamily out = f;
  for (auto& row : out)
    for (auto& v : row) v = (m - v) % m;
  return out;
}

// Cleft object over Z2 acting trivially on Z2 with theta_g(x, y) = (-1)^{gxy}:
// beta(1,1) is the sign character, which is not a square in G^.
CleftObject nonsplit() {
  auto z2 = cyclic_group(2);
  CleftObject c = trivial_cleft(trivial_action(cyclic_group(2), z2), Cochain(z2, 3, 2));
  c.theta_ref(1, 1, 1) = 1;
  return validate_cleft(c);
}

// |Hom(A, G^F)| by trying every assignment of invariant characters.
std::size_t oracle_homs(const GroupLikeData& data, const Subgroup& a) {
  const CleftObject& c = data.cleft;
  std::vector<std::vector<int>> inv;
  for (auto& chi : oracle::homs_to_cyclic(c.g_group(), data.modulus()))
    if (oracle::invariant(c.action, chi)) inv.push_back(chi);
  const auto& mem = a.members();
  const int na = static_cast<int>(mem.size());
  std::size_t count = 0;
  std::vector<int> pick(na, 0);
  std::function<void(int)> go = [&](int k) {
    if (k == na) {
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
          const int l = a.position(c.f_group().mul(mem[i], mem[j]));
          for (int g = 0; g < c.g_order(); ++g)
            if (oracle::md(static_cast<long long>(inv[pick[i]][g]) + inv[pick[j]][g] - inv[pick[l]][g], data.modulus()) != 0)
              return;
        }
      ++count;
      return;
    }
    for (std::size_t v = 0; v < inv.size(); ++v) {
      pick[k] = static_cast<int>(v);
      go(k + 1);
    }
  };
  go(0);
  return count;
}

void check_quotient(const GroupLikeData& data, const CleftObject& c, const Subgroup& a, int expected_dim) {
  const auto cert = certificate(data, a);
  CHECK(check_certificate(data, cert).ok);
  const QuotientBuild qb = build_quotient(data, cert);
  CHECK(qb.dim() == expected_dim);
  CHECK_FALSE(find_cleft_violation(qb.cbar).has_value());
  CHECK(verify_quasi_hopf(build_algebra(qb.cbar)).passed());
  const auto rep = verify_quotient(qb, c);
  CHECK(rep.ok());
  CHECK(rep.morphism.checked > 0);
}

}  // namespace

TEST_CASE("the trivial subgroup gives back the same cleft object") {
  auto q = quaternion_group();
  for (const GroupLikeData& data : {double_data(cyclic_group(4), cyclic_cocycle(4, 1)), double_data(q, trivial_omega(q))}) {
    const Subgroup one = Subgroup::trivial(data.cleft.f_group());
    const auto cert = certificate(data, one);
    const QuotientBuild qb = build_quotient(data, cert);
    CHECK(qb.cbar.modulus == data.modulus());
    CHECK(qb.cbar.gamma == data.cleft.gamma);
    CHECK(qb.cbar.theta == data.cleft.theta);
    CHECK(std::all_of(qb.chi.begin(), qb.chi.end(), [](int v) { return v == 0; }));
    CHECK(verify_quotient(qb, data.cleft).ok());
  }
}

TEST_CASE("admissible quotients of doubles") {
  const auto z2 = double_data(cyclic_group(2), cyclic_cocycle(2, 1));
  const Subgroup all2 = Subgroup::whole(z2.cleft.f_group());
  const auto cert = certificate(z2, all2);
  // nu trivial is a solution here and it is the smallest.
  for (const auto& row : cert.nu) CHECK(std::all_of(row.begin(), row.end(), [](int v) { return v == 0; }));
  check_quotient(z2, z2.cleft, all2, 2);

  auto q = quaternion_group();
  const auto q8 = double_data(q, trivial_omega(q));
  check_quotient(q8, q8.cleft, q->center(), 32);

  const auto z4 = double_data(cyclic_group(4), cyclic_cocycle(4, 1));
  check_quotient(z4, z4.cleft, Subgroup::from_members(z4.cleft.f_group(), {0, 2}), 8);

  auto z8 = cyclic_group(8);
  const auto d8 = double_data(z8, trivial_omega(z8));
  check_quotient(d8, d8.cleft, Subgroup::from_members(*z8, {0, 2, 4, 6}), 16);
}

TEST_CASE("nu solutions agree with exhaustive search") {
  auto q = quaternion_group();
  auto v = direct_product(*cyclic_group(2), *cyclic_group(2));
  struct Case {
    GroupLikeData data;
    std::vector<int> a;
  };
  std::vector<Case> cases = {
      {double_data(cyclic_group(2), cyclic_cocycle(2, 1)), {0, 1}},
      {double_data(cyclic_group(4), cyclic_cocycle(4, 1)), {0, 2}},
      {double_data(cyclic_group(4), cyclic_cocycle(4, 1)), {0, 1, 2, 3}},
      {double_data(cyclic_group(4), cyclic_cocycle(4, 2)), {0, 1, 2, 3}},
      {double_data(cyclic_group(8), cyclic_cocycle(8, 1)), {0, 2, 4, 6}},
      {double_data(q, trivial_omega(q)), {0, 1}},
      {double_data(q, pullback(cyclic_cocycle(2, 1), q, std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1})), {0, 1}},
      {double_data(v, trivial_omega(v)), {0, 1, 2, 3}},
  };
  int admissible = 0;
  for (const Case& c : cases) {
    const Subgroup a = Subgroup::from_members(c.data.cleft.f_group(), c.a);
    const auto ours = enumerate_nu(c.data, a);
    auto brute = oracle::nu_search(c.data, a);
    std::sort(brute.begin(), brute.end());
    CHECK(ours == brute);
    // Empty, or a torsor under Hom(A, G^F).
    const auto homs = character_homs(c.data, a);
    CHECK((ours.empty() || ours.size() == homs.size()));
    CHECK(homs.size() == oracle_homs(c.data, a));
    if (!ours.empty()) ++admissible;
  }
  CHECK(admissible > 0);
  CHECK(admissible < static_cast<int>(cases.size()));
}

TEST_CASE("dropping the theta correction from chi breaks the morphism") {
  const auto z4 = double_data(cyclic_group(4), cyclic_cocycle(4, 1));
  const Subgroup a = Subgroup::from_members(z4.cleft.f_group(), {0, 2});
  const auto cert = certificate(z4, a);
  // With the minimal section theta_g(a, r(x)) vanishes on Z4; pick r(1) = 3.
  QuotientData section = quotient_with_section(cyclic_group(4), a);
  section.section[section.proj[1]] = 3;
  const QuotientBuild qb = build_quotient(z4, cert, nullptr, &section);
  CHECK(verify_quotient(qb, z4.cleft).ok());
  const int m = qb.cbar.modulus;
  const CleftObject lifted = z4.cleft.lifted(m);
  const int ng = lifted.g_order();

  // chi_x(g) = nu(a)(g) / t_a(g), leaving out theta_g(a, r(x)).
  std::vector<int> wrong(qb.chi.size());
  bool differs = false;
  for (int x = 0; x < lifted.f_order(); ++x) {
    const int rx = qb.section.section[qb.section.proj[x]];
    const int ax = lifted.f_group().mul(x, lifted.f_group().inv(rx));
    const int i = a.position(ax);
    REQUIRE(i >= 0);
    for (int g = 0; g < ng; ++g) {
      wrong[static_cast<std::size_t>(x) * ng + g] = oracle::md(static_cast<long long>(cert.nu[i][g]) - cert.t[i][g], m);
      differs = differs || wrong[static_cast<std::size_t>(x) * ng + g] != qb.chi_at(x, g);
    }
  }
  REQUIRE(differs);
  CHECK(check_cleft_morphism(lifted, qb.cbar, qb.chi, qb.section.proj).ok);
  const auto rep = check_cleft_morphism(lifted, qb.cbar, wrong, qb.section.proj);
  CHECK_FALSE(rep.ok);
}

TEST_CASE("non-admissible subgroups") {
  const GroupLikeData ns = group_likes(nonsplit());
  const Subgroup whole = Subgroup::whole(ns.cleft.f_group());
  CHECK(ns.z_c.size() == 2);
  auto res = is_admissible(ns, whole);
  REQUIRE(std::holds_alternative<NotAdmissible>(res));
  CHECK(std::get<NotAdmissible>(res).reason == AdmissibilityFailure::ExtensionNonSplit);
  CHECK(oracle::nu_search(ns, whole).empty());

  // Z2^3 with (-1)^{a1 b2 c3}: central in F but never c-central.
  auto v = direct_product(*direct_product(*cyclic_group(2), *cyclic_group(2)), *cyclic_group(2));
  Cochain w3(v, 3, 2);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z) w3.set(std::vector<int>{x, y, z}, ((x >> 2) & 1) * ((y >> 1) & 1) * (z & 1));
  const GroupLikeData t3 = double_data(v, w3);
  for (int g = 1; g < 8; ++g) {
    auto r = is_admissible(t3, Subgroup::generated_by(*v, std::vector<int>{g}));
    REQUIRE(std::holds_alternative<NotAdmissible>(r));
    CHECK(std::get<NotAdmissible>(r).reason == AdmissibilityFailure::NotCCentral);
    CHECK(std::get<NotAdmissible>(r).witness == g);
  }
}

TEST_CASE("precondition errors") {
  auto d4 = dihedral_group(4);
  const GroupLikeData dd = double_data(d4, trivial_omega(d4));
  const Subgroup rotations = Subgroup::from_members(*d4, {0, 1, 2, 3});
  try {
    is_admissible(dd, rotations);
    FAIL("expected NotCentral");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCentral);
  }

  // Z2 acting on Z3 by inversion: central in F but moves G.
  auto z3 = cyclic_group(3);
  const GroupAction inv = validate_action(cyclic_group(2), z3, {{0, 1, 2}, {0, 2, 1}});
  const GroupLikeData sd = group_likes(validate_cleft(trivial_cleft(inv, Cochain(z3, 3, 1))));
  try {
    is_admissible(sd, Subgroup::whole(sd.cleft.f_group()));
    FAIL("expected ActsNontrivially");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ActsNontrivially);
  }

  const GroupLikeData z2 = double_data(cyclic_group(2), cyclic_cocycle(2, 1));
  const Subgroup whole = Subgroup::whole(z2.cleft.f_group());
  const int n = static_cast<int>(enumerate_nu(z2, whole).size());
  CHECK(n == 2);
  CHECK(std::holds_alternative<AdmissibilityCertificate>(is_admissible(z2, whole, n - 1)));
  try {
    is_admissible(z2, whole, n);
    FAIL("expected InvalidInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
  }
}

TEST_CASE("certificate round trip") {
  auto q = quaternion_group();
  const auto q8 = double_data(q, trivial_omega(q));
  const int count = static_cast<int>(enumerate_nu(q8, q->center()).size());
  for (int i = 0; i < count; ++i) {
    auto res = is_admissible(q8, q->center(), i);
    REQUIRE(std::holds_alternative<AdmissibilityCertificate>(res));
    const auto& cert = std::get<AdmissibilityCertificate>(res);
    CHECK(cert.nu == enumerate_nu(q8, q->center())[i]);
    CHECK(cert.s == cert.nu);
    CHECK(check_certificate(q8, cert).ok);
  }

  // A corrupted s is caught.
  auto cert = certificate(q8, q->center());
  cert.s[1][2] = (cert.s[1][2] + 1) % cert.modulus;
  CHECK_FALSE(check_certificate(q8, cert).ok);
}

TEST_CASE("twisting nu multiplies theta-bar by f on the section defect") {
  struct Case {
    GroupLikeData data;
    std::vector<int> a;
  };
  auto z8 = cyclic_group(8);
  std::vector<Case> cases = {
      {double_data(z8, trivial_omega(z8)), {0, 2, 4, 6}},
      {double_data(cyclic_group(4), cyclic_cocycle(4, 1)), {0, 2}},
      {double_data(cyclic_group(2), cyclic_cocycle(2, 1)), {0, 1}},
  };
  for (const Case& c : cases) {
    const Subgroup a = Subgroup::from_members(c.data.cleft.f_group(), c.a);
    const auto cert = certificate(c.data, a);
    const QuotientBuild base = build_quotient(c.data, cert);
    const auto homs = character_homs(c.data, a);
    for (std::size_t k = 0; k < homs.size(); ++k) {
      const QuotientBuild twisted = build_quotient(c.data, cert, &homs[k]);
      CHECK_FALSE(check_twist_law(base, twisted, homs[k]).has_value());
      CHECK(verify_quotient(twisted, c.data.cleft).ok());
      CHECK(twisted.cbar.gamma == base.cbar.gamma);
    }
  }

  // On Z8 / {0,2,4,6} the section defect r(1) r(1) r(0)^-1 = 2 has f(2) of
  // order 4 for some f; there multiplying and dividing by f differ.
  const Case& z = cases[0];
  const Subgroup a = Subgroup::from_members(z.data.cleft.f_group(), z.a);
  const auto cert = certificate(z.data, a);
  const QuotientBuild base = build_quotient(z.data, cert);
  int violated = 0;
  for (const auto& f : character_homs(z.data, a)) {
    const QuotientBuild twisted = build_quotient(z.data, cert, &f);
    if (check_twist_law(base, twisted, inverse(f, z.data.modulus())).has_value()) ++violated;
  }
  CHECK(violated > 0);
}
