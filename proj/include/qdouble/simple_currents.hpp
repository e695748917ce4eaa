#pragma once

#include <optional>
#include <vector>

#include "qdouble/central_quotient.hpp"
#include "qdouble/group_likes.hpp"
#include "qdouble/quasi_hopf.hpp"
#include "qdouble/twisted_double.hpp"

namespace qdouble {

// The one-dimensional module V(z, t) of D^omega(G) with character
//   xi(e_g x) = delta_{g,z} (t_z chi)(x),
// z in Z_{c_omega}(G), chi in G^, t_z the fixed section of the group-like
// analysis. All exponents are at the working modulus.
struct SimpleCurrent {
  int z = 0;
  int chi = 0;                 // index into GroupLikeData::g_hat
  std::vector<int> chi_exp;    // chi(x) as exponents
  std::vector<int> lambda;     // (t_z chi)(x)
};

struct SimpleCurrents {
  GroupLikeData data;         // of c_omega
  QuasiHopfAlgebra algebra;   // D^omega(G) at the working modulus
  Tensor r_matrix;            // sum e_g ⊗ e_h g at the working modulus
  std::vector<SimpleCurrent> currents;  // z-major over Z_c members, then chi

  int modulus() const { return data.modulus(); }
  int size() const { return static_cast<int>(currents.size()); }
  int index(int chi, int z) const;
  int unit() const { return index(0, 0); }
  const std::vector<int>& t(int z) const { return data.t(z); }
  // xi_u(basis element), nothing when it vanishes.
  std::optional<int> evaluate(int u, int basis) const;
};

// SC(G, omega). Each character is checked to be a unital algebra map
// H -> scalars on all basis pairs; InternalError otherwise.
SimpleCurrents simple_currents(const DoubleContext& ctx);

// u(chi1, z1) ⊗ u(chi2, z2) = u(beta(z1, z2) chi1 chi2, z1 z2), cross-checked
// against the character (xi1 ⊗ xi2) o Delta.
int sc_tensor(const SimpleCurrents& sc, int u1, int u2);

// Eilenberg-MacLane data on SC:
//   phi(u1, u2, u3) = omega(z1, z2, z3), d(u1 | u2) = chi2(z1) t_{z2}(z1),
// each also read off from the action of phi^-1 and of R on the tensor products
// of one-dimensional modules and asserted equal.
struct EMData {
  int modulus = 1;
  int n = 0;
  std::vector<int> phi;  // phi[(i * n + j) * n + k]
  std::vector<int> d;    // d[i * n + j]

  int phi_at(int i, int j, int k) const { return phi[(static_cast<std::size_t>(i) * n + j) * n + k]; }
  int d_at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
};
EMData em_data(const SimpleCurrents& sc);

// (u1 | u2) = chi1(z2) chi2(z1) t_{z2}(z1) t_{z1}(z2), asserted equal to
// d(u1 | u2) d(u2 | u1).
int bicharacter(const SimpleCurrents& sc, int u1, int u2);

struct PairingTable {
  Subgroup domain;
  int modulus = 1;
  std::vector<std::vector<int>> values;  // by position in domain.members()
};

// (a|b)_nu = t_b(a) t_a(b) / (nu(b)(a) nu(a)(b)); checked against
// bicharacter(p(a), p(b)) with p(a) = u(nu(a)^-1, a), and for symmetry.
PairingTable admissible_pairing(const SimpleCurrents& sc, const Subgroup& a, const CharacterFamily& nu);

// a -> (a | .) injective.
bool is_nondegenerate(const PairingTable& pt);

struct ModularityReport {
  PairingTable pairing;
  bool modular = false;
  int quotient_dim = 0;
  // R21 R acting on (regular module of the quotient) ⊗ p(a), both orders.
  bool double_braiding_trivial = true;
  std::size_t braiding_checked = 0;
  std::vector<int> witness;  // (a) where the double braiding is nontrivial
};

ModularityReport modularity_verdict(const SimpleCurrents& sc, const AdmissibilityCertificate& cert);

struct IndependenceReport {
  bool hypothesis = false;   // |A| == 2 or A inside [G, G]
  bool identical = true;     // all pairing tables agree
  int choices = 0;           // number of nu compared
  std::vector<PairingTable> tables;
  // Only a failure when the hypothesis holds.
  bool ok() const { return !hypothesis || identical; }
};

IndependenceReport independence_check(const SimpleCurrents& sc, const Subgroup& a);

struct CovarianceReport {
  std::size_t checked = 0;
  bool ok = true;
  std::vector<int> witness;  // (f index, a, b)
};

// (a|b)_{nu f} == (a|b)_nu / (f(a)(b) f(b)(a)) for every hom f: A -> G^.
CovarianceReport twist_covariance(const SimpleCurrents& sc, const Subgroup& a, const CharacterFamily& nu);

}  // namespace qdouble
