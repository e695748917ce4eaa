#include "qdouble/group_likes.hpp"

#include <numeric>

#include "qdouble/modular.hpp"

namespace qdouble {

const std::vector<int>& GroupLikeData::t(int x) const {
  if (x < 0 || x >= static_cast<int>(section.size()) || !section[x])
    throw Error(ErrorCode::InvalidInput, "no section value: element is not gamma-trivial", {x});
  return *section[x];
}

std::vector<int> GroupLikeData::u_exponents(const Character& chi, int x) const {
  const auto& tx = t(x);
  const auto c = chi.exponents(modulus());
  std::vector<int> out(tx.size());
  for (std::size_t g = 0; g < tx.size(); ++g) out[g] = static_cast<int>(mod(c[g] + tx[g], modulus()));
  return out;
}

int working_modulus(const CleftObject& c) {
  const int n = static_cast<int>(value_order(c.gamma.begin(), c.gamma.end(), c.modulus));
  return std::lcm(c.modulus, n * c.g_order());
}

namespace {

std::optional<std::vector<int>> solve_section(const CleftObject& c, int x, std::span<const LinearConstraint> extra) {
  const Cochain target = c.gamma_cochain(x);
  auto result = solve_coboundary(target, extra);
  if (std::holds_alternative<NoSolution>(result)) return std::nullopt;
  const auto& sol = std::get<CoboundarySolution>(result);
  if (sol.modulus != c.modulus) throw InternalError("coboundary solve left the working modulus", {x});
  return sol.particular(c.action.target).values();
}

}  // namespace

Subgroup gamma_trivial_subgroup(const CleftObject& input) {
  const CleftObject c = input.lifted(working_modulus(input));
  std::vector<int> members;
  for (int x = 0; x < c.f_order(); ++x)
    if (solve_section(c, x, {})) members.push_back(x);
  try {
    return Subgroup::from_members(c.f_group(), members);
  } catch (const Error&) {
    throw InternalError("gamma-trivial elements do not form a subgroup", members);
  }
}

std::vector<LinearConstraint> centrality_constraints(const CleftObject& c, int a) {
  std::vector<LinearConstraint> out;
  const int m = c.modulus;
  for (int g = 0; g < c.g_order(); ++g)
    for (int y = 0; y < c.f_order(); ++y) {
      LinearConstraint k;
      k.terms = {{g, 1}, {c.action.act(g, y), -1}};
      k.rhs = static_cast<int>(mod(c.theta_at(g, y, a) - c.theta_at(g, a, y), m));
      out.push_back(std::move(k));
    }
  return out;
}

GroupLikeData group_likes(const CleftObject& input) {
  CleftObject c = input.lifted(working_modulus(input));
  const FiniteGroup& G = c.g_group();
  const FiniteGroup& F = c.f_group();

  std::vector<Character> g_hat = characters(G);
  std::vector<Character> g_inv = invariant_characters(c.action);
  std::vector<std::optional<std::vector<int>>> section(F.order());

  std::vector<int> gamma_members;
  for (int x = 0; x < F.order(); ++x) {
    section[x] = solve_section(c, x, {});
    if (section[x]) gamma_members.push_back(x);
  }
  Subgroup f_gamma;
  try {
    f_gamma = Subgroup::from_members(F, gamma_members);
  } catch (const Error&) {
    throw InternalError("gamma-trivial elements do not form a subgroup", gamma_members);
  }

  std::vector<int> zc_members;
  for (int a : F.center().members()) {
    if (!f_gamma.contains(a) || !c.action.kernel.contains(a)) continue;
    const auto constraints = centrality_constraints(c, a);
    if (auto t = solve_section(c, a, constraints)) {
      section[a] = std::move(t);
      zc_members.push_back(a);
    }
  }
  Subgroup z_c;
  try {
    z_c = Subgroup::from_members(F, zc_members);
  } catch (const Error&) {
    throw InternalError("c-central elements do not form a subgroup", zc_members);
  }

  GroupLikeData data{std::move(c), std::move(g_hat), std::move(g_inv), std::move(f_gamma), std::move(z_c),
                     std::move(section), {}, {}};
  for (int x : data.f_gamma.members())
    for (std::size_t i = 0; i < data.g_hat.size(); ++i) {
      const bool invariant = character_index(data.g_hat_invariant, data.g_hat[i]) >= 0;
      GroupLike u{x, static_cast<int>(i), data.u_exponents(data.g_hat[i], x), data.z_c.contains(x) && invariant};
      if (u.central) data.central.push_back(u);
      data.all.push_back(std::move(u));
    }
  if (data.all.size() != data.g_hat.size() * data.f_gamma.size())
    throw InternalError("|Gamma(H)| != |G^| |F^gamma|");
  if (data.central.size() != data.g_hat_invariant.size() * data.z_c.size())
    throw InternalError("|Gamma_0(H)| != |G^F| |Z_c(F)|");
  return data;
}

std::pair<std::vector<GroupLike>, Subgroup> central_group_likes(const CleftObject& c) {
  auto data = group_likes(c);
  return {std::move(data.central), std::move(data.z_c)};
}

Tensor group_like_element(const QuasiHopfAlgebra& h, std::span<const int> exponents, int x) {
  Tensor u = h.zero(1);
  for (int g = 0; g < h.g_order(); ++g) u.add_root(static_cast<std::uint64_t>(h.basis(g, x)), exponents[g]);
  return u;
}

bool is_group_like(const QuasiHopfAlgebra& h, const Tensor& u) {
  if (u.terms().empty()) return false;
  return h.comultiply(u, 0) == h.tensor(u, u);
}

bool is_central(const QuasiHopfAlgebra& h, const Tensor& u) {
  for (int b = 0; b < h.dim(); ++b) {
    const Tensor e = h.basis_element(b);
    if (!(h.multiply(u, e) == h.multiply(e, u))) return false;
  }
  return true;
}

const std::vector<int>& BetaCocycle::at(int x, int y) const {
  const int i = domain.position(x), j = domain.position(y);
  if (i < 0 || j < 0) throw Error(ErrorCode::InvalidInput, "beta evaluated outside its domain", {x, y});
  return values[static_cast<std::size_t>(i) * domain.size() + j];
}

BetaCocycle beta_cocycle(const GroupLikeData& data, const Subgroup& domain) {
  if (!domain.is_subset_of(data.f_gamma)) throw Error(ErrorCode::InvalidInput, "beta domain must lie in F^gamma");
  const CleftObject& c = data.cleft;
  const FiniteGroup& F = c.f_group();
  BetaCocycle beta{domain, c.modulus, {}};
  for (int x : domain.members())
    for (int y : domain.members()) {
      const auto &tx = data.t(x), &ty = data.t(y), &txy = data.t(F.mul(x, y));
      std::vector<int> v(c.g_order());
      for (int g = 0; g < c.g_order(); ++g)
        v[g] = static_cast<int>(mod(static_cast<std::int64_t>(tx[g]) + ty[c.action.act(g, x)] - txy[g] + c.theta_at(g, x, y),
                                    c.modulus));
      beta.values.push_back(std::move(v));
    }
  return beta;
}

FactorSetReport verify_factor_set(const GroupLikeData& data) {
  FactorSetReport report;
  const CleftObject& c = data.cleft;
  const FiniteGroup& G = c.g_group();
  const FiniteGroup& F = c.f_group();
  const int m = c.modulus;
  const BetaCocycle beta = beta_cocycle(data, data.f_gamma);

  for (int x : data.f_gamma.members())
    for (int y : data.f_gamma.members()) {
      ++report.checked;
      const auto chi = character_from_exponents(G, beta.at(x, y), m);
      if (!chi) {
        report.beta_are_characters = false;
        report.witness = {x, y};
        return report;
      }
      if (data.z_c.contains(x) && data.z_c.contains(y) && character_index(data.g_hat_invariant, *chi) < 0) {
        report.beta_invariant_on_zc = false;
        report.witness = {x, y};
        return report;
      }
    }

  const QuasiHopfAlgebra h(c);
  std::vector<int> expected(G.order());
  for (const auto& u1 : data.all)
    for (const auto& u2 : data.all) {
      ++report.checked;
      const int x = u1.x, y = u2.x, xy = F.mul(x, y);
      const auto c1 = data.g_hat[u1.chi].exponents(m);
      const auto c2 = data.g_hat[u2.chi].exponents(m);
      const auto& b = beta.at(x, y);
      const auto& txy = data.t(xy);
      for (int g = 0; g < G.order(); ++g)
        expected[g] = static_cast<int>(mod(static_cast<std::int64_t>(c1[g]) + c2[c.action.act(g, x)] + b[g] + txy[g], m));
      const Tensor lhs = h.multiply(group_like_element(h, u1.t, x), group_like_element(h, u2.t, y));
      if (!(lhs == group_like_element(h, expected, xy))) {
        report.products_match = false;
        report.witness = {u1.chi, x, u2.chi, y};
        return report;
      }
    }
  return report;
}

}  // namespace qdouble
