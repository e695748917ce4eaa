#include "qdouble/central_quotient.hpp"

#include <algorithm>

#include "qdouble/modular.hpp"

namespace qdouble {

std::string_view to_string(AdmissibilityFailure f) {
  switch (f) {
    case AdmissibilityFailure::NotCCentral: return "NotCCentral";
    case AdmissibilityFailure::ExtensionNonSplit: return "ExtensionNonSplit";
  }
  return "?";
}

namespace {

void check_preconditions(const GroupLikeData& data, const Subgroup& a) {
  const CleftObject& c = data.cleft;
  if (a.parent_order() != c.f_order()) throw Error(ErrorCode::InvalidInput, "subgroup is not a subgroup of F");
  for (int x : a.members())
    if (!c.f_group().center().contains(x)) throw Error(ErrorCode::NotCentral, "subgroup is not central in F", {x});
  for (int x : a.members())
    if (!c.action.kernel.contains(x)) throw Error(ErrorCode::ActsNontrivially, "subgroup acts nontrivially on G", {x});
}

// Solutions of: nu(a) a homomorphism G -> mu_M, F-invariant, and
// nu(a) + nu(b) - nu(ab) == rhs(a, b) pointwise, with rhs = beta|_A or 0.
std::vector<CharacterFamily> solve_nu(const GroupLikeData& data, const Subgroup& a, bool with_beta) {
  const CleftObject& c = data.cleft;
  const FiniteGroup& G = c.g_group();
  const FiniteGroup& F = c.f_group();
  const int ng = G.order(), na = static_cast<int>(a.size());
  const auto& mem = a.members();

  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
  auto row = [&]() -> std::vector<std::int64_t>& {
    rows.emplace_back(static_cast<std::size_t>(na) * ng, 0);
    rhs.push_back(0);
    return rows.back();
  };
  for (int i = 0; i < na; ++i) {
    for (int g = 0; g < ng; ++g)
      for (int h = 0; h < ng; ++h) {
        auto& r = row();
        r[i * ng + g] += 1;
        r[i * ng + h] += 1;
        r[i * ng + G.mul(g, h)] -= 1;
      }
    for (int g = 0; g < ng; ++g)
      for (int y = 0; y < F.order(); ++y) {
        auto& r = row();
        r[i * ng + g] += 1;
        r[i * ng + c.action.act(g, y)] -= 1;
      }
  }
  std::optional<BetaCocycle> beta;
  if (with_beta) beta = beta_cocycle(data, a);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const int k = a.position(F.mul(mem[i], mem[j]));
      for (int g = 0; g < ng; ++g) {
        auto& r = row();
        r[i * ng + g] += 1;
        r[j * ng + g] += 1;
        r[k * ng + g] -= 1;
        if (beta) rhs.back() = beta->at(mem[i], mem[j])[g];
      }
    }

  IntMatrix m(static_cast<int>(rows.size()), na * ng);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int col = 0; col < na * ng; ++col) m(static_cast<int>(r), col) = rows[r][col];
  auto result = smith_solve(m, rhs, data.modulus());
  if (std::holds_alternative<NoSolution>(result)) return {};
  std::vector<CharacterFamily> out;
  for (const auto& v : std::get<LinearSystemSolution>(result).enumerate()) {
    CharacterFamily fam(na, std::vector<int>(ng));
    for (int i = 0; i < na; ++i)
      for (int g = 0; g < ng; ++g) fam[i][g] = v[i * ng + g];
    out.push_back(std::move(fam));
  }
  return out;
}

}  // namespace

std::vector<CharacterFamily> character_homs(const GroupLikeData& data, const Subgroup& a) {
  check_preconditions(data, a);
  return solve_nu(data, a, false);
}

std::vector<CharacterFamily> enumerate_nu(const GroupLikeData& data, const Subgroup& a) {
  check_preconditions(data, a);
  if (!a.is_subset_of(data.z_c)) return {};
  auto out = solve_nu(data, a, true);
  if (!out.empty() && out.size() != solve_nu(data, a, false).size())
    throw InternalError("solutions of delta nu = beta are not a torsor over Hom(A, G^F)");

  // Each nu gives a section a -> sum_g t_a(g) / nu(a)(g) e_g a of Gamma_0(H)
  // over A; check it is central and multiplicative.
  const QuasiHopfAlgebra h(data.cleft);
  const FiniteGroup& F = data.cleft.f_group();
  const int m = data.modulus();
  const auto& mem = a.members();
  for (const auto& nu : out) {
    std::vector<Tensor> p;
    for (std::size_t i = 0; i < mem.size(); ++i) {
      std::vector<int> e(data.t(mem[i]));
      for (std::size_t g = 0; g < e.size(); ++g) e[g] = static_cast<int>(mod(e[g] - nu[i][g], m));
      p.push_back(group_like_element(h, e, mem[i]));
      if (!is_central(h, p.back())) throw InternalError("section element is not central", {mem[i]});
    }
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t j = 0; j < mem.size(); ++j)
        if (!(h.multiply(p[i], p[j]) == p[a.position(F.mul(mem[i], mem[j]))]))
          throw InternalError("section over A is not a homomorphism", {mem[i], mem[j]});
  }
  return out;
}

AdmissibilityResult is_admissible(const GroupLikeData& data, const Subgroup& a, int nu_index) {
  check_preconditions(data, a);
  for (int x : a.members())
    if (!data.z_c.contains(x)) return NotAdmissible{AdmissibilityFailure::NotCCentral, x};
  const auto sols = enumerate_nu(data, a);
  if (sols.empty()) return NotAdmissible{AdmissibilityFailure::ExtensionNonSplit, -1};
  if (nu_index < 0 || nu_index >= static_cast<int>(sols.size()))
    throw Error(ErrorCode::InvalidInput, "nu index out of range (" + std::to_string(sols.size()) + " choices)", {nu_index});

  const int ng = data.cleft.g_order(), na = static_cast<int>(a.size());
  const int m = data.modulus();
  AdmissibilityCertificate cert;
  cert.a = a;
  cert.modulus = m;
  cert.nu = sols[nu_index];
  cert.tau.assign(ng, std::vector<int>(na));
  for (int i = 0; i < na; ++i) {
    cert.t.push_back(data.t(a.members()[i]));
    // tau_g(a) = chi_a(g) = nu(a)(g) / t_a(g), since r(a) = 1 and theta_g(a, 1) = 1.
    for (int g = 0; g < ng; ++g) cert.tau[g][i] = static_cast<int>(mod(cert.nu[i][g] - cert.t[i][g], m));
    std::vector<int> s(ng);
    for (int g = 0; g < ng; ++g) s[g] = static_cast<int>(mod(cert.t[i][g] + cert.tau[g][i], m));
    cert.s.push_back(std::move(s));
  }
  return cert;
}

AdmissibilityResult is_admissible(const CleftObject& c, const Subgroup& a, int nu_index) {
  return is_admissible(group_likes(c), a, nu_index);
}

CertificateReport check_certificate(const GroupLikeData& data, const AdmissibilityCertificate& cert) {
  CertificateReport report;
  auto fail = [&](const char* what, std::vector<int> w) {
    report.ok = false;
    report.failed = what;
    report.witness = std::move(w);
    return report;
  };
  const CleftObject& c = data.cleft;
  const FiniteGroup& G = c.g_group();
  const FiniteGroup& F = c.f_group();
  const int m = cert.modulus;
  if (m != data.modulus()) return fail("certificate modulus matches the analysis", {m});
  const auto& mem = cert.a.members();
  const int na = static_cast<int>(mem.size());

  for (int i = 0; i < na; ++i)
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < G.order(); ++h) {
        ++report.checked;
        if (mod(static_cast<std::int64_t>(cert.t[i][g]) + cert.t[i][h] - cert.t[i][G.mul(g, h)] - c.gamma_at(mem[i], g, h), m) != 0)
          return fail("delta t_a == gamma_a", {mem[i], g, h});
      }
  for (int g = 0; g < G.order(); ++g)
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j) {
        ++report.checked;
        const int k = cert.a.position(F.mul(mem[i], mem[j]));
        if (mod(static_cast<std::int64_t>(cert.tau[g][i]) + cert.tau[g][j] - cert.tau[g][k] - c.theta_at(g, mem[i], mem[j]), m) != 0)
          return fail("delta tau_g == theta_g on A", {g, mem[i], mem[j]});
      }
  for (int i = 0; i < na; ++i) {
    ++report.checked;
    for (int g = 0; g < G.order(); ++g)
      if (mod(cert.s[i][g] - cert.t[i][g] - cert.tau[g][i], m) != 0) return fail("s_a(g) == t_a(g) tau_g(a)", {mem[i], g});
    const auto chi = character_from_exponents(G, cert.s[i], m);
    if (!chi || character_index(data.g_hat_invariant, *chi) < 0) return fail("s_a is an F-invariant linear character", {mem[i]});
  }
  // Round trip: nu(a) := s_a splits beta on A.
  const BetaCocycle beta = beta_cocycle(data, cert.a);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      ++report.checked;
      const int k = cert.a.position(F.mul(mem[i], mem[j]));
      const auto& b = beta.at(mem[i], mem[j]);
      for (int g = 0; g < G.order(); ++g)
        if (mod(static_cast<std::int64_t>(cert.s[i][g]) + cert.s[j][g] - cert.s[k][g] - b[g], m) != 0)
          return fail("delta s == beta on A", {mem[i], mem[j], g});
    }
  return report;
}

QuotientBuild build_quotient(const GroupLikeData& data, const AdmissibilityCertificate& cert, const CharacterFamily* twist,
                             const QuotientData* section) {
  const CleftObject& c = data.cleft;
  const FiniteGroup& G = c.g_group();
  const FiniteGroup& F = c.f_group();
  const int ng = G.order(), nf = F.order();
  const int m = data.modulus();
  const Subgroup& a = cert.a;
  const int na = static_cast<int>(a.size());
  if (cert.modulus != m) throw Error(ErrorCode::ModulusMismatch, "certificate was built at a different modulus");

  CharacterFamily nu = cert.nu;
  if (twist) {
    if (twist->size() != static_cast<std::size_t>(na)) throw Error(ErrorCode::InvalidInput, "twist has the wrong size");
    const auto homs = solve_nu(data, a, false);
    if (std::find(homs.begin(), homs.end(), *twist) == homs.end())
      throw Error(ErrorCode::InvalidInput, "twist is not a homomorphism A -> G^F");
    for (int i = 0; i < na; ++i)
      for (int g = 0; g < ng; ++g) nu[i][g] = static_cast<int>(mod(nu[i][g] + (*twist)[i][g], m));
  }

  QuotientData r = section ? *section : quotient_with_section(c.action.acting, a);
  if (!(r.kernel == a) || r.section.empty() || r.section[0] != 0)
    throw Error(ErrorCode::InvalidInput, "section must be for F/A and send the identity coset to 1");
  for (int q = 0; q < r.quotient->order(); ++q)
    if (r.proj[r.section[q]] != q) throw Error(ErrorCode::InvalidInput, "section is not a right inverse of the projection", {q});

  std::vector<int> chi(static_cast<std::size_t>(nf) * ng);
  for (int x = 0; x < nf; ++x) {
    const int rx = r.rep(x);
    const int ax = F.mul(x, F.inv(rx));
    const int i = a.position(ax);
    if (i < 0) throw InternalError("x r(x)^-1 not in A", {x});
    for (int g = 0; g < ng; ++g)
      chi[x * ng + g] = static_cast<int>(mod(static_cast<std::int64_t>(nu[i][g]) - cert.t[i][g] - c.theta_at(g, ax, rx), m));
  }
  auto chi_at = [&](int x, int g) -> std::int64_t { return chi[x * ng + g]; };

  const GroupPtr& fbar = r.quotient;
  const int nq = fbar->order();
  std::vector<std::vector<int>> perm(nq, std::vector<int>(ng));
  for (int q = 0; q < nq; ++q)
    for (int g = 0; g < ng; ++g) perm[q][g] = c.action.act(g, r.section[q]);
  GroupAction bar_action = validate_action(fbar, c.action.target, std::move(perm));

  std::vector<int> gamma(static_cast<std::size_t>(nq) * ng * ng, -1);
  std::vector<int> theta(static_cast<std::size_t>(ng) * nq * nq, -1);
  for (int x = 0; x < nf; ++x) {
    const int q = r.proj[x];
    for (int g = 0; g < ng; ++g)
      for (int h = 0; h < ng; ++h) {
        const int v = static_cast<int>(mod(chi_at(x, g) + chi_at(x, h) - chi_at(x, G.mul(g, h)) + c.gamma_at(x, g, h), m));
        int& slot = gamma[(static_cast<std::size_t>(q) * ng + g) * ng + h];
        if (slot >= 0 && slot != v) throw InternalError("gamma-bar depends on the coset representative", {x, g, h});
        slot = v;
      }
  }
  for (int x = 0; x < nf; ++x)
    for (int y = 0; y < nf; ++y) {
      const int qx = r.proj[x], qy = r.proj[y];
      for (int g = 0; g < ng; ++g) {
        const int v = static_cast<int>(
            mod(chi_at(F.mul(x, y), g) - chi_at(x, g) - chi_at(y, c.action.act(g, x)) + c.theta_at(g, x, y), m));
        int& slot = theta[(static_cast<std::size_t>(g) * nq + qx) * nq + qy];
        if (slot >= 0 && slot != v) throw InternalError("theta-bar depends on the coset representatives", {g, x, y});
        slot = v;
      }
    }

  CleftObject cbar = make_cleft(std::move(bar_action), m, std::move(gamma), std::move(theta), c.omega);
  if (auto v = find_cleft_violation(cbar)) throw InternalError("quotient data is not a cleft object", v->witness);
  return QuotientBuild{std::move(r), std::move(cbar), std::move(chi), std::move(nu)};
}

QuotientReport verify_quotient(const QuotientBuild& qb, const CleftObject& c) {
  QuotientReport report;
  const CleftObject lifted = c.modulus == qb.cbar.modulus ? c : c.lifted(qb.cbar.modulus);
  report.morphism = check_cleft_morphism(lifted, qb.cbar, qb.chi, qb.section.proj);
  std::vector<bool> hit(qb.section.quotient->order(), false);
  for (int p : qb.section.proj) hit[p] = true;
  report.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return report;
}

std::optional<std::vector<int>> check_twist_law(const QuotientBuild& base, const QuotientBuild& twisted,
                                                const CharacterFamily& f) {
  const CleftObject& c0 = base.cbar;
  const CleftObject& c1 = twisted.cbar;
  if (c0.modulus != c1.modulus || base.section.section != twisted.section.section)
    throw Error(ErrorCode::InvalidInput, "twist comparison needs the same modulus and section");
  const FiniteGroup& F = *base.section.parent;
  const FiniteGroup& Q = *base.section.quotient;
  const int ng = c0.g_order(), m = c0.modulus;
  if (c0.gamma != c1.gamma) {
    for (int q = 0; q < Q.order(); ++q)
      for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
          if (c0.gamma_at(q, g, h) != c1.gamma_at(q, g, h)) return std::vector<int>{0, q, g, h};
  }
  const auto& r = base.section.section;
  for (int qx = 0; qx < Q.order(); ++qx)
    for (int qy = 0; qy < Q.order(); ++qy) {
      const int a = F.mul(F.mul(r[qx], r[qy]), F.inv(r[Q.mul(qx, qy)]));
      const int i = base.section.kernel.position(a);
      if (i < 0) throw InternalError("r(x) r(y) r(xy)^-1 not in A", {qx, qy});
      for (int g = 0; g < ng; ++g)
        if (mod(static_cast<std::int64_t>(c0.theta_at(g, qx, qy)) + f[i][g] - c1.theta_at(g, qx, qy), m) != 0)
          return std::vector<int>{1, g, qx, qy};
    }
  return std::nullopt;
}

}  // namespace qdouble
