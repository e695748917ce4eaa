#include "qdouble/simple_currents.hpp"

#include <algorithm>

#include "qdouble/modular.hpp"

namespace qdouble {

namespace {

Tensor r_matrix_at(const QuasiHopfAlgebra& h, bool flipped) {
  Tensor r = h.zero(2);
  for (int g = 0; g < h.g_order(); ++g)
    for (int k = 0; k < h.g_order(); ++k) {
      int b[2] = {h.basis(g, 0), h.basis(k, g)};
      if (flipped) std::swap(b[0], b[1]);
      r.add_root(r.key(b), 0);
    }
  return r;
}

// (xi_{u_1} ⊗ ... ⊗ xi_{u_k})(t) as an element of Z[zeta_M].
Cyclotomic evaluate(const SimpleCurrents& sc, const Tensor& t, std::span<const int> us) {
  Cyclotomic out(sc.modulus());
  for (const auto& [k, c] : t.terms()) {
    const auto bs = t.decode(k);
    std::int64_t e = 0;
    bool zero = false;
    for (std::size_t i = 0; i < bs.size() && !zero; ++i) {
      const auto v = sc.evaluate(us[i], bs[i]);
      if (v) e += *v;
      else zero = true;
    }
    if (!zero) out += c.times_root(static_cast<int>(mod(e, sc.modulus())));
  }
  return out;
}

int evaluate_root(const SimpleCurrents& sc, const Tensor& t, std::span<const int> us, const char* what) {
  const auto r = evaluate(sc, t, us).as_root();
  if (!r) throw InternalError(std::string(what) + " does not act by a root of unity", std::vector<int>(us.begin(), us.end()));
  return *r;
}

int character_position(const SimpleCurrents& sc, std::span<const int> exps) {
  const auto chi = character_from_exponents(sc.data.cleft.g_group(), exps, sc.modulus());
  const int i = chi ? character_index(sc.data.g_hat, *chi) : -1;
  if (i < 0) throw InternalError("exponent table is not a linear character", std::vector<int>(exps.begin(), exps.end()));
  return i;
}

}  // namespace

int SimpleCurrents::index(int chi, int z) const {
  const int p = data.z_c.position(z);
  if (p < 0 || chi < 0 || chi >= static_cast<int>(data.g_hat.size()))
    throw Error(ErrorCode::InvalidInput, "no simple current with this label", {chi, z});
  return p * static_cast<int>(data.g_hat.size()) + chi;
}

std::optional<int> SimpleCurrents::evaluate(int u, int basis) const {
  const SimpleCurrent& s = currents[u];
  if (algebra.basis_g(basis) != s.z) return std::nullopt;
  return s.lambda[algebra.basis_x(basis)];
}

SimpleCurrents simple_currents(const DoubleContext& ctx) {
  GroupLikeData data = group_likes(ctx.c_omega);
  QuasiHopfAlgebra h(data.cleft);
  Tensor r = r_matrix_at(h, false);
  SimpleCurrents sc{std::move(data), std::move(h), std::move(r), {}};
  const int m = sc.modulus();
  const int ng = sc.algebra.g_order();

  // Put the trivial character first so that index(0, 0) is the unit.
  auto& g_hat = sc.data.g_hat;
  std::stable_partition(g_hat.begin(), g_hat.end(), [](const Character& c) { return c.is_trivial(); });

  for (int z : sc.data.z_c.members())
    for (int chi = 0; chi < static_cast<int>(g_hat.size()); ++chi) {
      SimpleCurrent s;
      s.z = z;
      s.chi = chi;
      s.chi_exp = g_hat[chi].exponents(m);
      const auto& tz = sc.data.t(z);
      s.lambda.resize(ng);
      for (int x = 0; x < ng; ++x) s.lambda[x] = static_cast<int>(mod(tz[x] + s.chi_exp[x], m));
      sc.currents.push_back(std::move(s));
    }

  const int dim = sc.algebra.dim();
  for (int u = 0; u < sc.size(); ++u) {
    Cyclotomic one = evaluate(sc, sc.algebra.unit(), std::span<const int>(&u, 1));
    if (one.as_root() != 0) throw InternalError("simple current character is not unital", {u});
    for (int b1 = 0; b1 < dim; ++b1)
      for (int b2 = 0; b2 < dim; ++b2) {
        const auto v1 = sc.evaluate(u, b1), v2 = sc.evaluate(u, b2);
        std::optional<int> lhs;
        if (const auto p = sc.algebra.multiply_basis(b1, b2))
          if (const auto v = sc.evaluate(u, p->basis)) lhs = static_cast<int>(mod(static_cast<std::int64_t>(*v) + p->exponent, m));
        std::optional<int> rhs;
        if (v1 && v2) rhs = static_cast<int>(mod(static_cast<std::int64_t>(*v1) + *v2, m));
        if (lhs != rhs) throw InternalError("simple current character is not multiplicative", {u, b1, b2});
      }
  }
  return sc;
}

int sc_tensor(const SimpleCurrents& sc, int u1, int u2) {
  const SimpleCurrent& s1 = sc.currents[u1];
  const SimpleCurrent& s2 = sc.currents[u2];
  const CleftObject& c = sc.data.cleft;
  const FiniteGroup& G = c.g_group();
  const int m = sc.modulus(), ng = G.order();
  const int z = G.mul(s1.z, s2.z);
  const auto& t1 = sc.t(s1.z);
  const auto& t2 = sc.t(s2.z);
  const auto& t12 = sc.t(z);

  std::vector<int> chi(ng);
  for (int x = 0; x < ng; ++x) {
    const std::int64_t beta = static_cast<std::int64_t>(t1[x]) + t2[c.action.act(x, s1.z)] - t12[x] + c.theta_at(x, s1.z, s2.z);
    chi[x] = static_cast<int>(mod(beta + s1.chi_exp[x] + s2.chi_exp[x], m));
  }
  const int out = sc.index(character_position(sc, chi), z);

  // (xi1 ⊗ xi2)(Delta(e_g x)) must be xi_out(e_g x) for every basis element.
  const int us[2] = {u1, u2};
  for (int b = 0; b < sc.algebra.dim(); ++b) {
    const Cyclotomic lhs = evaluate(sc, sc.algebra.comultiply(sc.algebra.basis_element(b), 0), us);
    Cyclotomic rhs(m);
    if (const auto v = sc.evaluate(out, b)) rhs.add_root(*v);
    if (!(lhs == rhs)) throw InternalError("tensor product formula disagrees with the coproduct", {u1, u2, b});
  }
  return out;
}

EMData em_data(const SimpleCurrents& sc) {
  EMData em;
  em.modulus = sc.modulus();
  em.n = sc.size();
  const int n = em.n, m = em.modulus;
  const Cochain& omega = sc.data.cleft.omega;
  const Tensor phi_inv = sc.algebra.associator_inverse();
  em.phi.resize(static_cast<std::size_t>(n) * n * n);
  em.d.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const int v = omega.at(sc.currents[i].z, sc.currents[j].z, sc.currents[k].z);
        const int us[3] = {i, j, k};
        if (evaluate_root(sc, phi_inv, us, "phi^-1") != v) throw InternalError("phi-tilde disagrees with the associator", {i, j, k});
        em.phi[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SimpleCurrent& s1 = sc.currents[i];
      const SimpleCurrent& s2 = sc.currents[j];
      const int v = static_cast<int>(mod(s2.chi_exp[s1.z] + sc.t(s2.z)[s1.z], m));
      const int us[2] = {i, j};
      if (evaluate_root(sc, sc.r_matrix, us, "R") != v) throw InternalError("d disagrees with the R-matrix", {i, j});
      em.d[static_cast<std::size_t>(i) * n + j] = v;
    }
  return em;
}

int bicharacter(const SimpleCurrents& sc, int u1, int u2) {
  const SimpleCurrent& s1 = sc.currents[u1];
  const SimpleCurrent& s2 = sc.currents[u2];
  const int m = sc.modulus();
  const std::int64_t v =
      static_cast<std::int64_t>(s1.chi_exp[s2.z]) + s2.chi_exp[s1.z] + sc.t(s2.z)[s1.z] + sc.t(s1.z)[s2.z];
  const std::int64_t d12 = static_cast<std::int64_t>(s2.chi_exp[s1.z]) + sc.t(s2.z)[s1.z];
  const std::int64_t d21 = static_cast<std::int64_t>(s1.chi_exp[s2.z]) + sc.t(s1.z)[s2.z];
  if (mod(v - d12 - d21, m) != 0) throw InternalError("bicharacter is not d(u1|u2) d(u2|u1)", {u1, u2});
  return static_cast<int>(mod(v, m));
}

namespace {

int section_current(const SimpleCurrents& sc, const std::vector<int>& nu_a, int a) {
  std::vector<int> inv(nu_a.size());
  for (std::size_t g = 0; g < nu_a.size(); ++g) inv[g] = static_cast<int>(mod(-static_cast<std::int64_t>(nu_a[g]), sc.modulus()));
  return sc.index(character_position(sc, inv), a);
}

}  // namespace

PairingTable admissible_pairing(const SimpleCurrents& sc, const Subgroup& a, const CharacterFamily& nu) {
  const int m = sc.modulus();
  const auto& mem = a.members();
  const int na = static_cast<int>(mem.size());
  if (nu.size() != mem.size()) throw Error(ErrorCode::InvalidInput, "nu does not match the subgroup");
  PairingTable pt{a, m, std::vector<std::vector<int>>(na, std::vector<int>(na))};
  std::vector<int> p(na);
  for (int i = 0; i < na; ++i) p[i] = section_current(sc, nu[i], mem[i]);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const int x = mem[i], y = mem[j];
      const std::int64_t v = static_cast<std::int64_t>(sc.t(y)[x]) + sc.t(x)[y] - nu[j][x] - nu[i][y];
      pt.values[i][j] = static_cast<int>(mod(v, m));
      if (pt.values[i][j] != bicharacter(sc, p[i], p[j])) throw InternalError("(a|b)_nu differs from the bicharacter of the section", {x, y});
    }
  const FiniteGroup& F = sc.data.cleft.f_group();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      if (pt.values[i][j] != pt.values[j][i]) throw InternalError("pairing is not symmetric", {mem[i], mem[j]});
      for (int k = 0; k < na; ++k) {
        const int ij = a.position(F.mul(mem[i], mem[j]));
        if (mod(static_cast<std::int64_t>(pt.values[i][k]) + pt.values[j][k] - pt.values[ij][k], m) != 0)
          throw InternalError("pairing is not bimultiplicative", {mem[i], mem[j], mem[k]});
      }
    }
  return pt;
}

bool is_nondegenerate(const PairingTable& pt) {
  const auto& mem = pt.domain.members();
  for (std::size_t i = 0; i < mem.size(); ++i) {
    if (mem[i] == 0) continue;
    if (std::all_of(pt.values[i].begin(), pt.values[i].end(), [](int v) { return v == 0; })) return false;
  }
  return true;
}

ModularityReport modularity_verdict(const SimpleCurrents& sc, const AdmissibilityCertificate& cert) {
  ModularityReport report;
  report.pairing = admissible_pairing(sc, cert.a, cert.nu);
  report.modular = is_nondegenerate(report.pairing);

  const QuotientBuild qb = build_quotient(sc.data, cert);
  report.quotient_dim = qb.dim();
  const QuasiHopfAlgebra hbar(qb.cbar);
  const QuasiHopfAlgebra& h = sc.algebra;
  const int m = sc.modulus();

  const Tensor r21r = h.multiply(r_matrix_at(h, true), sc.r_matrix);
  const Tensor one = hbar.unit();
  for (std::size_t i = 0; i < cert.a.size(); ++i) {
    const int a = cert.a.members()[i];
    const int u = section_current(sc, cert.nu[i], a);
    for (int pi_slot = 0; pi_slot < 2; ++pi_slot) {
      ++report.braiding_checked;
      // Apply pi to one factor and xi_u to the other.
      Tensor out = hbar.zero(1);
      for (const auto& [k, c] : r21r.terms()) {
        const auto bs = r21r.decode(k);
        const auto xi = sc.evaluate(u, bs[1 - pi_slot]);
        if (!xi) continue;
        const int b = bs[pi_slot];
        const int g = h.basis_g(b), x = h.basis_x(b);
        const int e = static_cast<int>(mod(static_cast<std::int64_t>(*xi) + qb.chi_at(x, g), m));
        const int nb = hbar.basis(g, qb.section.proj[x]);
        out.add(static_cast<std::uint64_t>(nb), c.times_root(e));
      }
      if (!(out == one)) {
        report.double_braiding_trivial = false;
        if (report.witness.empty()) report.witness = {a, pi_slot};
      }
    }
  }
  return report;
}

IndependenceReport independence_check(const SimpleCurrents& sc, const Subgroup& a) {
  IndependenceReport report;
  report.hypothesis = a.size() == 2 || a.is_subset_of(sc.data.cleft.f_group().commutator_subgroup());
  for (const auto& nu : enumerate_nu(sc.data, a)) {
    report.tables.push_back(admissible_pairing(sc, a, nu));
    if (report.tables.back().values != report.tables.front().values) report.identical = false;
  }
  report.choices = static_cast<int>(report.tables.size());
  return report;
}

CovarianceReport twist_covariance(const SimpleCurrents& sc, const Subgroup& a, const CharacterFamily& nu) {
  CovarianceReport report;
  const int m = sc.modulus();
  const auto& mem = a.members();
  const PairingTable base = admissible_pairing(sc, a, nu);
  const auto homs = character_homs(sc.data, a);
  for (std::size_t k = 0; k < homs.size(); ++k) {
    CharacterFamily twisted = nu;
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t g = 0; g < twisted[i].size(); ++g) twisted[i][g] = static_cast<int>(mod(twisted[i][g] + homs[k][i][g], m));
    const PairingTable pt = admissible_pairing(sc, a, twisted);
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t j = 0; j < mem.size(); ++j) {
        ++report.checked;
        const std::int64_t want = static_cast<std::int64_t>(base.values[i][j]) - homs[k][i][mem[j]] - homs[k][j][mem[i]];
        if (report.ok && mod(want - pt.values[i][j], m) != 0) {
          report.ok = false;
          report.witness = {static_cast<int>(k), mem[i], mem[j]};
        }
      }
  }
  return report;
}

}  // namespace qdouble
