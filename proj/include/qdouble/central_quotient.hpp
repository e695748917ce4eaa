#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "qdouble/cleft.hpp"
#include "qdouble/group_likes.hpp"
#include "qdouble/morphism.hpp"
#include "qdouble/quasi_hopf.hpp"

namespace qdouble {

// Data witnessing that a central subgroup A is admissible, all exponents at
// the working modulus of the group-like analysis. Index i runs over
// A.members().
struct AdmissibilityCertificate {
  Subgroup a;
  int modulus = 1;
  std::vector<std::vector<int>> t;    // t[i][g] = t_{a_i}(g), the fixed central section
  std::vector<std::vector<int>> tau;  // tau[g][i] = tau_g(a_i)
  std::vector<std::vector<int>> nu;   // nu[i][g] = nu(a_i)(g)
  std::vector<std::vector<int>> s;    // s[i][g] = t_{a_i}(g) tau_g(a_i)
};

enum class AdmissibilityFailure { NotCCentral, ExtensionNonSplit };
std::string_view to_string(AdmissibilityFailure f);

struct NotAdmissible {
  AdmissibilityFailure reason;
  int witness = -1;  // offending element for NotCCentral
};

using AdmissibilityResult = std::variant<AdmissibilityCertificate, NotAdmissible>;

// Exponent table of a homomorphism A -> G^F: values[i][g] = f(a_i)(g).
using CharacterFamily = std::vector<std::vector<int>>;

// All nu in C^1(A, G^F) with delta nu == beta|_A, sorted lexicographically by
// (nu(a_0), nu(a_1), ...). Throws like is_admissible's preconditions.
std::vector<CharacterFamily> enumerate_nu(const GroupLikeData& data, const Subgroup& a);
// All homomorphisms A -> G^F (the torsor's structure group), sorted.
std::vector<CharacterFamily> character_homs(const GroupLikeData& data, const Subgroup& a);

// Throws Error(NotCentral) if A is not in Z(F), Error(ActsNontrivially) if
// some a in A moves an element of G. `nu_index` selects a solution from
// enumerate_nu (default: the lexicographically smallest).
AdmissibilityResult is_admissible(const GroupLikeData& data, const Subgroup& a, int nu_index = 0);
AdmissibilityResult is_admissible(const CleftObject& c, const Subgroup& a, int nu_index = 0);

struct CertificateReport {
  std::size_t checked = 0;
  bool ok = true;
  std::string failed;
  std::vector<int> witness;
};

// delta t_a == gamma_a, delta tau_g == theta_g|_A, s_a an F-invariant linear
// character, and the round trip nu(a) := s_a satisfying delta nu == beta|_A.
CertificateReport check_certificate(const GroupLikeData& data, const AdmissibilityCertificate& cert);

struct QuotientBuild {
  QuotientData section;  // F -> F/A with section r
  CleftObject cbar;
  std::vector<int> chi;  // chi[x * |G| + g] = chi_x(g)
  CharacterFamily nu;    // the nu used (after twisting)

  int chi_at(int x, int g) const { return chi[static_cast<std::size_t>(x) * cbar.g_order() + g]; }
  int dim() const { return cbar.g_order() * cbar.f_order(); }
};

// chi_x(g) = nu(a)(g) / (t_a(g) theta_g(a, r(x))), a = x r(x)^-1, then gamma-bar
// and theta-bar on F/A; every coset representative is checked to give the same
// value (InternalError otherwise). `twist` multiplies nu by a homomorphism
// A -> G^F. `section` defaults to quotient_with_section. The result is passed
// through validate_cleft.
QuotientBuild build_quotient(const GroupLikeData& data, const AdmissibilityCertificate& cert,
                             const CharacterFamily* twist = nullptr, const QuotientData* section = nullptr);

struct QuotientReport {
  MorphismReport morphism;
  bool surjective = true;
  bool ok() const { return morphism.ok && surjective; }
};

// pi: e_g x -> chi_x(g) e_g x-bar as a cleft morphism c -> c-bar, plus surjectivity.
QuotientReport verify_quotient(const QuotientBuild& qb, const CleftObject& c);

// With nu' = nu f: gamma-bar' == gamma-bar and
//   theta-bar'_g(x,y) == theta-bar_g(x,y) f(r(x) r(y) r(xy)^-1)(g).
// Returns the first (g, xbar, ybar) violating it, or nothing.
std::optional<std::vector<int>> check_twist_law(const QuotientBuild& base, const QuotientBuild& twisted,
                                                const CharacterFamily& f);

}  // namespace qdouble
