#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qdouble/cleft.hpp"
#include "qdouble/quasi_hopf.hpp"

namespace qdouble {

// u = sum_g zeta^{t(g)} e_g x, with t in exponent form at the working modulus.
struct GroupLike {
  int x = 0;
  int chi = 0;  // index into the character list the element was built from
  std::vector<int> t;
  bool central = false;
};

// Group-like data for a cleft object: F^gamma, Z_c(F), a fixed section
// {t_x}, the group-likes Gamma(H) and central group-likes Gamma_0(H).
//
// Everything is computed at a working modulus M' = lcm(M, n |G|), n the
// order of the values of gamma, so that every complex solution of
// delta t = gamma_x already has values in mu_{M'}; `cleft` is the input lifted
// to M'.
struct GroupLikeData {
  CleftObject cleft;
  std::vector<Character> g_hat;            // all linear characters of G
  std::vector<Character> g_hat_invariant;  // F-invariant ones
  Subgroup f_gamma;
  Subgroup z_c;
  // section[x] = t_x for x in F^gamma. For x in Z_c(F) it is the particular
  // solution of the joint system that makes u(1, x) central.
  std::vector<std::optional<std::vector<int>>> section;
  std::vector<GroupLike> all;      // u(chi, x), chi in g_hat, x in F^gamma
  std::vector<GroupLike> central;  // u(chi, a), chi in g_hat_invariant, a in Z_c

  int modulus() const { return cleft.modulus; }
  const std::vector<int>& t(int x) const;
  // Exponents of chi(g) t_x(g).
  std::vector<int> u_exponents(const Character& chi, int x) const;
};

int working_modulus(const CleftObject& c);

// F^gamma = {x : gamma_x is a coboundary}; checked to be a subgroup.
Subgroup gamma_trivial_subgroup(const CleftObject& c);

// Linear constraints (beyond delta t_a = gamma_a) for sum_g t_a(g) e_g a to be
// central: t_a(g) - t_a(g<y) == theta_g(y, a) - theta_g(a, y) for all g, y.
// Requires a central in F and acting trivially on G.
std::vector<LinearConstraint> centrality_constraints(const CleftObject& c, int a);

GroupLikeData group_likes(const CleftObject& c);
// (Gamma_0(H), Z_c(F)) from the same analysis.
std::pair<std::vector<GroupLike>, Subgroup> central_group_likes(const CleftObject& c);

// The element sum_g zeta^{exponents[g]} e_g x of H (exponents at H's modulus).
Tensor group_like_element(const QuasiHopfAlgebra& h, std::span<const int> exponents, int x);
bool is_group_like(const QuasiHopfAlgebra& h, const Tensor& u);
bool is_central(const QuasiHopfAlgebra& h, const Tensor& u);

// beta(x, y)(g) = t_x(g) t_y(g<x) t_{xy}(g)^-1 theta_g(x, y) on a domain subgroup.
struct BetaCocycle {
  Subgroup domain;
  int modulus = 1;
  // values[i * |domain| + j] for the domain members i, j, as exponents on G.
  std::vector<std::vector<int>> values;

  const std::vector<int>& at(int x, int y) const;
};

BetaCocycle beta_cocycle(const GroupLikeData& data, const Subgroup& domain);

struct FactorSetReport {
  std::size_t checked = 0;
  bool beta_are_characters = true;
  bool beta_invariant_on_zc = true;
  bool products_match = true;
  std::vector<int> witness;  // (x, y) or (chi1, x, chi2, y)
  bool ok() const { return beta_are_characters && beta_invariant_on_zc && products_match; }
};

// beta(x,y) in G^ on F^gamma, beta(a,b) in G^F on Z_c(F), and
// u(chi1,x) u(chi2,y) == u(chi1 (chi2 o <x) beta(x,y), xy) by multiplication in H.
FactorSetReport verify_factor_set(const GroupLikeData& data);

}  // namespace qdouble
