#include "qdouble/cleft.hpp"

#include <string>

#include "qdouble/modular.hpp"

namespace qdouble {

Cochain CleftObject::gamma_cochain(int x) const {
  const int n = g_order();
  std::vector<int> v(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) v[static_cast<std::size_t>(g) * n + h] = gamma_at(x, g, h);
  return Cochain(action.target, 2, modulus, std::move(v));
}

Cochain CleftObject::theta_cochain(int g) const {
  const int n = f_order();
  std::vector<int> v(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) v[static_cast<std::size_t>(x) * n + y] = theta_at(g, x, y);
  return Cochain(action.acting, 2, modulus, std::move(v));
}

CleftObject CleftObject::lifted(int m) const {
  if (m % modulus != 0)
    throw Error(ErrorCode::ModulusMismatch,
                "cannot lift cleft object from modulus " + std::to_string(modulus) + " to " + std::to_string(m));
  const int s = m / modulus;
  CleftObject out = *this;
  out.modulus = m;
  for (auto& v : out.gamma) v *= s;
  for (auto& v : out.theta) v *= s;
  out.omega = omega.lifted(m);
  return out;
}

CleftObject trivial_cleft(GroupAction action, Cochain omega) {
  const std::size_t ng = action.target->order(), nf = action.acting->order();
  const int m = omega.modulus();
  return make_cleft(std::move(action), m, std::vector<int>(nf * ng * ng, 0), std::vector<int>(ng * nf * nf, 0),
                    std::move(omega));
}

CleftObject make_cleft(GroupAction action, int modulus, std::vector<int> gamma, std::vector<int> theta, Cochain omega) {
  if (modulus < 1) throw Error(ErrorCode::InvalidInput, "modulus must be positive");
  const std::size_t ng = action.target->order(), nf = action.acting->order();
  if (gamma.size() != nf * ng * ng) throw Error(ErrorCode::InvalidInput, "gamma table has the wrong size");
  if (theta.size() != ng * nf * nf) throw Error(ErrorCode::InvalidInput, "theta table has the wrong size");
  if (!omega.group()->same_table(*action.target) || omega.degree() != 3)
    throw Error(ErrorCode::InvalidInput, "omega must be a 3-cochain on the acted-on group");
  if (omega.modulus() != modulus) {
    if (modulus % omega.modulus() != 0)
      throw Error(ErrorCode::ModulusMismatch, "omega modulus " + std::to_string(omega.modulus()) +
                                                  " does not divide " + std::to_string(modulus));
    omega = omega.lifted(modulus);
  }
  for (auto& v : gamma) v = static_cast<int>(mod(v, modulus));
  for (auto& v : theta) v = static_cast<int>(mod(v, modulus));
  return CleftObject{std::move(action), modulus, std::move(gamma), std::move(theta), std::move(omega)};
}

std::optional<CleftViolation> find_cleft_violation(const CleftObject& c) {
  const FiniteGroup& G = c.g_group();
  const FiniteGroup& F = c.f_group();
  const int ng = G.order(), nf = F.order();
  const int m = c.modulus;

  for (int x = 0; x < nf; ++x)
    for (int g = 0; g < ng; ++g)
      for (int h = 0; h < ng; ++h)
        if ((g == 0 || h == 0) && c.gamma_at(x, g, h) != 0)
          return CleftViolation{ErrorCode::NotNormalized, {0, x, g, h}};
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < nf; ++x)
      for (int y = 0; y < nf; ++y)
        if ((x == 0 || y == 0) && c.theta_at(g, x, y) != 0)
          return CleftViolation{ErrorCode::NotNormalized, {1, g, x, y}};

  // Condition2: theta_{g<x}(y,z) theta_g(x,yz) = theta_g(xy,z) theta_g(x,y)
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < nf; ++x)
      for (int y = 0; y < nf; ++y)
        for (int z = 0; z < nf; ++z) {
          const std::int64_t lhs = c.theta_at(c.action.act(g, x), y, z) + c.theta_at(g, x, F.mul(y, z));
          const std::int64_t rhs = c.theta_at(g, F.mul(x, y), z) + c.theta_at(g, x, y);
          if (mod(lhs - rhs, m) != 0) return CleftViolation{ErrorCode::Condition2Violation, {g, x, y, z}};
        }

  // Condition3: gamma_x(gh,k) gamma_x(g,h) omega(g<x,h<x,k<x) = gamma_x(h,k) gamma_x(g,hk) omega(g,h,k)
  for (int x = 0; x < nf; ++x)
    for (int g = 0; g < ng; ++g)
      for (int h = 0; h < ng; ++h)
        for (int k = 0; k < ng; ++k) {
          const std::int64_t lhs = c.gamma_at(x, G.mul(g, h), k) + c.gamma_at(x, g, h) +
                                   c.omega.at(c.action.act(g, x), c.action.act(h, x), c.action.act(k, x));
          const std::int64_t rhs = c.gamma_at(x, h, k) + c.gamma_at(x, g, G.mul(h, k)) + c.omega.at(g, h, k);
          if (mod(lhs - rhs, m) != 0) return CleftViolation{ErrorCode::Condition3Violation, {x, g, h, k}};
        }

  // Condition4: gamma_{xy}(g,h) / (gamma_x(g,h) gamma_y(g<x,h<x)) = theta_g(x,y) theta_h(x,y) / theta_{gh}(x,y)
  for (int x = 0; x < nf; ++x)
    for (int y = 0; y < nf; ++y)
      for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) {
          const std::int64_t lhs =
              c.gamma_at(F.mul(x, y), g, h) - c.gamma_at(x, g, h) - c.gamma_at(y, c.action.act(g, x), c.action.act(h, x));
          const std::int64_t rhs = c.theta_at(g, x, y) + c.theta_at(h, x, y) - c.theta_at(G.mul(g, h), x, y);
          if (mod(lhs - rhs, m) != 0) return CleftViolation{ErrorCode::Condition4Violation, {x, y, g, h}};
        }
  return std::nullopt;
}

CleftObject validate_cleft(CleftObject c) {
  if (auto v = find_cleft_violation(c)) {
    std::string what = "cleft object fails ";
    switch (v->code) {
      case ErrorCode::NotNormalized: what += "normalization"; break;
      case ErrorCode::Condition2Violation: what += "the theta cocycle condition"; break;
      case ErrorCode::Condition3Violation: what += "the gamma/omega compatibility"; break;
      default: what += "the mixed gamma/theta condition"; break;
    }
    throw Error(v->code, what, v->witness);
  }
  return c;
}

CleftObject validate_cleft(GroupAction action, int modulus, std::vector<int> gamma, std::vector<int> theta,
                           Cochain omega) {
  return validate_cleft(make_cleft(std::move(action), modulus, std::move(gamma), std::move(theta), std::move(omega)));
}

}  // namespace qdouble
