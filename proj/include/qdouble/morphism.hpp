#pragma once

#include <span>
#include <string>
#include <vector>

#include "qdouble/cleft.hpp"

namespace qdouble {

struct MorphismReport {
  std::size_t checked = 0;
  bool ok = true;
  std::string failed;        // name of the first failing identity
  std::vector<int> witness;  // its arguments

  MorphismReport& fail(std::string what, std::vector<int> w) {
    ok = false;
    failed = std::move(what);
    witness = std::move(w);
    return *this;
  }
};

// Candidate morphism (f1, f2): k^G_omega #_c kF -> k^G'_omega' #_c' kF' with
//   f1(e_g x) = chi_x(g) sum_{g' : iota(g') = g} e'_g' f2(x),
// chi[x * |G| + g] an exponent at c's modulus, iota: G' -> G an injective
// homomorphism and f2: F -> F' a homomorphism. Checks that f2 preserves the
// actions, f1 is a unital algebra map, a counital coalgebra map carrying the
// associator to the associator, and the diagram with the inclusions of k^G
// and projections to kF commutes. When iota is the identity the scalar
// identities
//   gamma_x(g,h) chi_x(g) chi_x(h) = gamma'_{f2(x)}(g,h) chi_x(gh)
//   theta'_g(f2 x, f2 y) chi_x(g) chi_y(g<x) = theta_g(x,y) chi_{xy}(g)
// are checked as well.
MorphismReport check_cleft_morphism(const CleftObject& c, const CleftObject& target, std::span<const int> chi,
                                    std::span<const int> iota, std::span<const int> f2);

// Same G on both sides (iota = id).
MorphismReport check_cleft_morphism(const CleftObject& c, const CleftObject& target, std::span<const int> chi,
                                    std::span<const int> f2);

// The cleft object k^{1} #_0 kF (a copy of kF) and the canonical projection
// p: e_g x -> delta_{g,1} x expressed as a candidate morphism into it.
CleftObject group_algebra_cleft(GroupPtr f);
MorphismReport check_canonical_projection(const CleftObject& c);

}  // namespace qdouble
