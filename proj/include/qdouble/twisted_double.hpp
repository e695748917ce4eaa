#pragma once

#include <vector>

#include "qdouble/cleft.hpp"
#include "qdouble/group_likes.hpp"
#include "qdouble/quasi_hopf.hpp"

namespace qdouble {

// c_omega = (G, gamma, theta) for G acting on itself by conjugation, x^g = g^-1 x g:
//   gamma_g(x,y) = omega(x,y,g) omega(g,x^g,y^g) / omega(x,g,y^g)
//   theta_g(x,y) = omega(g,x,y) omega(x,y,g^{xy}) / omega(x,g^x,y)
// Throws Error(InvalidInput) if omega is not a normalized 3-cocycle.
CleftObject canonical_cleft(GroupPtr g, const Cochain& omega);

struct DoubleContext {
  GroupPtr group;
  CleftObject c_omega;
  QuasiHopfAlgebra algebra;
  Tensor r_matrix;  // sum_{g,h} e_g ⊗ e_h g
  VerificationReport verification;
};

// D^omega(G). The verifier runs unless `verify` is false.
DoubleContext build_double(GroupPtr g, const Cochain& omega, bool verify = true);

struct CenterReport {
  Subgroup center;          // Z(G)
  Subgroup gamma_trivial;   // G^gamma
  Subgroup c_center;        // Z_{c_omega}(G) from the central group-likes
  Subgroup intersection;    // Z(G) ∩ G^gamma
  int h2 = 0;               // |H^2(G, C^x)|
};

// Z_{c_omega}(G) computed from the central group-likes and as Z(G) ∩ G^gamma;
// throws InternalError if they differ, or if h2 == 1 and it is not Z(G).
CenterReport c_omega_center(const DoubleContext& ctx);
Subgroup c_omega_center_subgroup(const DoubleContext& ctx);

// |H^2(G, C^x)| = |H^2(G, Z/|G|)| / |G^ab| with |H^2(G, Z/M)| from normalized
// cochain complexes solved mod M.
int h2_order(const FiniteGroup& g);

struct CenterIdentityReport {
  std::size_t checked = 0;
  bool ok = true;
  std::vector<int> witness;  // (z, x, y) or (z, g, y)
};

// gamma_z == theta_z and theta_g(z,y)/theta_g(y,z) == theta_z(y,g^y)/theta_z(g,y)
// for all z in Z(G).
CenterIdentityReport check_center_identities(const CleftObject& c_omega);

}  // namespace qdouble
