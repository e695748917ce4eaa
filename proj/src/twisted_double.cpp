#include "qdouble/twisted_double.hpp"

#include <map>

#include "qdouble/modular.hpp"

namespace qdouble {

CleftObject canonical_cleft(GroupPtr group, const Cochain& omega) {
  if (!omega.group()->same_table(*group) || omega.degree() != 3)
    throw Error(ErrorCode::InvalidInput, "omega must be a 3-cochain on G");
  if (const auto report = is_normalized_cocycle(omega); !report.ok())
    throw Error(ErrorCode::InvalidInput,
                report.normalized ? "omega is not a 3-cocycle" : "omega is not normalized", report.witness);
  const FiniteGroup& G = *group;
  const int n = G.order();
  CleftObject c = trivial_cleft(conjugation_action(group), omega);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xg = G.conj(x, g), yg = G.conj(y, g);
        c.gamma_ref(g, x, y) = static_cast<int>(
            mod(static_cast<std::int64_t>(omega.at(x, y, g)) + omega.at(g, xg, yg) - omega.at(x, g, yg), c.modulus));
        const int gxy = G.conj(g, G.mul(x, y)), gx = G.conj(g, x);
        c.theta_ref(g, x, y) = static_cast<int>(
            mod(static_cast<std::int64_t>(omega.at(g, x, y)) + omega.at(x, y, gxy) - omega.at(x, gx, y), c.modulus));
      }
  return validate_cleft(std::move(c));
}

DoubleContext build_double(GroupPtr group, const Cochain& omega, bool verify) {
  CleftObject c = canonical_cleft(group, omega);
  QuasiHopfAlgebra h(c);
  Tensor r = h.zero(2);
  for (int g = 0; g < group->order(); ++g)
    for (int k = 0; k < group->order(); ++k) {
      const int b[2] = {h.basis(g, 0), h.basis(k, g)};
      r.add_root(r.key(b), 0);
    }
  VerificationReport report;
  if (verify) report = verify_quasi_hopf(h);
  return DoubleContext{std::move(group), std::move(c), std::move(h), std::move(r), std::move(report)};
}

namespace {

std::vector<int> intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  for (int x : a.members())
    if (b.contains(x)) out.push_back(x);
  return out;
}

// Prime factorization of a positive integer.
std::map<std::int64_t, int> factorize(std::int64_t n) {
  std::map<std::int64_t, int> out;
  for (std::int64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace

CenterReport c_omega_center(const DoubleContext& ctx) {
  const FiniteGroup& G = *ctx.group;
  CenterReport report;
  report.center = G.center();
  const GroupLikeData data = group_likes(ctx.c_omega);
  report.gamma_trivial = data.f_gamma;
  report.c_center = data.z_c;
  report.intersection = Subgroup::from_members(G, intersect(G.center(), data.f_gamma));
  report.h2 = h2_order(G);
  if (!(report.c_center == report.intersection))
    throw InternalError("Z_c(G) differs from Z(G) ∩ G^gamma", report.c_center.members());
  if (report.h2 == 1 && !(report.c_center == report.center))
    throw InternalError("trivial Schur multiplier but Z_c(G) != Z(G)", report.c_center.members());
  return report;
}

Subgroup c_omega_center_subgroup(const DoubleContext& ctx) { return c_omega_center(ctx).c_center; }

int h2_order(const FiniteGroup& g) {
  const int n = g.order();
  if (n == 1) return 1;
  const int m = n;
  const int k = n - 1;  // non-identity elements, indices 1..n-1

  // delta^1: normalized C^1 -> C^2 on pairs of non-identity elements.
  IntMatrix d1(k * k, k);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      const int row = (a - 1) * k + (b - 1);
      d1(row, a - 1) += 1;
      d1(row, b - 1) += 1;
      if (const int ab = g.mul(a, b); ab != 0) d1(row, ab - 1) -= 1;
    }
  // delta^2: normalized C^2 -> C^3.
  IntMatrix d2(k * k * k, k * k);
  auto col = [&](int a, int b) { return (a == 0 || b == 0) ? -1 : (a - 1) * k + (b - 1); };
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c) {
        const int row = ((a - 1) * k + (b - 1)) * k + (c - 1);
        auto add = [&](int x, int y, int s) {
          if (const int j = col(x, y); j >= 0) d2(row, j) += s;
        };
        add(b, c, 1);
        add(g.mul(a, b), c, -1);
        add(a, g.mul(b, c), 1);
        add(a, b, -1);
      }

  // |H^2(G, Z/m)| = m^{k^2} / (|im d2| |im d1|); track prime valuations.
  std::map<std::int64_t, int> val;
  for (auto [p, e] : factorize(m)) val[p] += e * k * k;
  for (const IntMatrix* d : {&d1, &d2})
    for (auto f : image_factors(smith_diagonalize(*d, m)))
      for (auto [p, e] : factorize(f)) val[p] -= e;
  const int abelianization = n / static_cast<int>(g.commutator_subgroup().size());
  for (auto [p, e] : factorize(abelianization)) val[p] -= e;
  std::int64_t out = 1;
  for (auto [p, e] : val) {
    if (e < 0) throw InternalError("negative valuation in Schur multiplier computation");
    for (int i = 0; i < e; ++i) out *= p;
  }
  return static_cast<int>(out);
}

CenterIdentityReport check_center_identities(const CleftObject& c) {
  const FiniteGroup& G = c.g_group();
  const int m = c.modulus;
  CenterIdentityReport report;
  for (int z : G.center().members()) {
    for (int x = 0; x < G.order(); ++x)
      for (int y = 0; y < G.order(); ++y) {
        ++report.checked;
        if (c.gamma_at(z, x, y) != c.theta_at(z, x, y)) {
          report.ok = false;
          report.witness = {z, x, y};
          return report;
        }
      }
    for (int g = 0; g < G.order(); ++g)
      for (int y = 0; y < G.order(); ++y) {
        ++report.checked;
        const std::int64_t lhs = c.theta_at(g, z, y) - c.theta_at(g, y, z);
        const std::int64_t rhs = c.theta_at(z, y, G.conj(g, y)) - c.theta_at(z, g, y);
        if (mod(lhs - rhs, m) != 0) {
          report.ok = false;
          report.witness = {z, g, y};
          return report;
        }
      }
  }
  return report;
}

}  // namespace qdouble
