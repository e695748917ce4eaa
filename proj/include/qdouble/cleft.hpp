#pragma once

#include <optional>
#include <vector>

#include "qdouble/cochain.hpp"
#include "qdouble/error.hpp"
#include "qdouble/group.hpp"

namespace qdouble {

// Cleft object c = (F, gamma, theta) over k^G_omega, all values in exponent
// form mod `modulus`:
//   gamma_x(g, h) = zeta^gamma[(x * |G| + g) * |G| + h]
//   theta_g(x, y) = zeta^theta[(g * |F| + x) * |F| + y]
// omega is carried along at the same modulus.
struct CleftObject {
  GroupAction action;
  int modulus = 1;
  std::vector<int> gamma;
  std::vector<int> theta;
  Cochain omega;

  const FiniteGroup& g_group() const { return *action.target; }
  const FiniteGroup& f_group() const { return *action.acting; }
  int g_order() const { return action.target->order(); }
  int f_order() const { return action.acting->order(); }

  int gamma_at(int x, int g, int h) const {
    const std::size_t n = static_cast<std::size_t>(g_order());
    return gamma[(x * n + g) * n + h];
  }
  int theta_at(int g, int x, int y) const {
    const std::size_t n = static_cast<std::size_t>(f_order());
    return theta[(g * n + x) * n + y];
  }
  int& gamma_ref(int x, int g, int h) {
    const std::size_t n = static_cast<std::size_t>(g_order());
    return gamma[(x * n + g) * n + h];
  }
  int& theta_ref(int g, int x, int y) {
    const std::size_t n = static_cast<std::size_t>(f_order());
    return theta[(g * n + x) * n + y];
  }

  // gamma_x as a 2-cochain on G, theta_g as a 2-cochain on F.
  Cochain gamma_cochain(int x) const;
  Cochain theta_cochain(int g) const;

  // Same data with every exponent rewritten over a multiple of the modulus.
  CleftObject lifted(int m) const;
};

// Zero gamma and theta; omega as given (modulus taken from omega).
CleftObject trivial_cleft(GroupAction action, Cochain omega);

// Assembles a cleft object after checking table sizes and the modulus; does
// not check the defining conditions.
CleftObject make_cleft(GroupAction action, int modulus, std::vector<int> gamma, std::vector<int> theta, Cochain omega);

struct CleftViolation {
  ErrorCode code;
  // NotNormalized: (0, x, g, h) for gamma or (1, g, x, y) for theta;
  // Condition2: (g, x, y, z); Condition3: (x, g, h, k); Condition4: (x, y, g, h).
  std::vector<int> witness;
};

// First violated condition, checked exhaustively in the order
// normalization, Condition2, Condition3, Condition4 (see the error codes).
std::optional<CleftViolation> find_cleft_violation(const CleftObject& c);

// Throws Error(NotNormalized | Condition2Violation | Condition3Violation |
// Condition4Violation) with the witness tuple.
CleftObject validate_cleft(CleftObject c);
CleftObject validate_cleft(GroupAction action, int modulus, std::vector<int> gamma, std::vector<int> theta,
                           Cochain omega);

}  // namespace qdouble
