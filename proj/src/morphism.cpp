#include "qdouble/morphism.hpp"

#include <numeric>
#include <optional>

#include "qdouble/modular.hpp"
#include "qdouble/quasi_hopf.hpp"

namespace qdouble {

namespace {

struct LinearMap {
  const QuasiHopfAlgebra& target;
  std::vector<std::optional<Monomial>> image;  // per source basis element

  Tensor apply(const Tensor& t) const {
    Tensor out = target.zero(t.rank());
    std::vector<int> nb(t.rank());
    for (const auto& [k, c] : t.terms()) {
      const auto bs = t.decode(k);
      std::int64_t e = 0;
      bool zero = false;
      for (int i = 0; i < t.rank() && !zero; ++i) {
        const auto& m = image[bs[i]];
        if (!m) {
          zero = true;
        } else {
          nb[i] = m->basis;
          e += m->exponent;
        }
      }
      if (!zero) out.add(out.key(nb), c.times_root(static_cast<int>(mod(e, target.modulus()))));
    }
    return out;
  }
};

}  // namespace

MorphismReport check_cleft_morphism(const CleftObject& src, const CleftObject& dst, std::span<const int> chi,
                                    std::span<const int> iota, std::span<const int> f2) {
  MorphismReport report;
  const FiniteGroup& G = src.g_group();
  const FiniteGroup& F = src.f_group();
  const FiniteGroup& G2 = dst.g_group();
  const FiniteGroup& F2 = dst.f_group();
  const int ng = G.order(), nf = F.order(), ng2 = G2.order();

  if (chi.size() != static_cast<std::size_t>(nf) * ng) throw Error(ErrorCode::InvalidInput, "chi table has the wrong size");
  if (iota.size() != static_cast<std::size_t>(ng2) || f2.size() != static_cast<std::size_t>(nf))
    throw Error(ErrorCode::InvalidInput, "group maps have the wrong size");

  ++report.checked;
  if (!is_homomorphism(G2, G, iota)) return report.fail("iota is a homomorphism", {});
  std::vector<int> preimage(ng, -1);
  for (int g2 = 0; g2 < ng2; ++g2) {
    if (preimage[iota[g2]] >= 0) return report.fail("iota is injective", {g2});
    preimage[iota[g2]] = g2;
  }
  ++report.checked;
  if (!is_homomorphism(F, F2, f2)) return report.fail("f2 is a homomorphism", {});
  for (int g2 = 0; g2 < ng2; ++g2)
    for (int x = 0; x < nf; ++x) {
      ++report.checked;
      if (iota[dst.action.act(g2, f2[x])] != src.action.act(iota[g2], x))
        return report.fail("f2 preserves the actions", {g2, x});
    }

  const int m = std::lcm(src.modulus, dst.modulus);
  const QuasiHopfAlgebra h(src.lifted(m));
  const QuasiHopfAlgebra h2(dst.lifted(m));
  const int scale = m / src.modulus;
  auto chi_at = [&](int x, int g) { return static_cast<int>(mod(static_cast<std::int64_t>(chi[x * ng + g]) * scale, m)); };

  LinearMap f1{h2, std::vector<std::optional<Monomial>>(h.dim())};
  for (int x = 0; x < nf; ++x)
    for (int g = 0; g < ng; ++g)
      if (preimage[g] >= 0) f1.image[h.basis(g, x)] = Monomial{h2.basis(preimage[g], f2[x]), chi_at(x, g)};

  // Diagram: f1 restricted to k^G is restriction along iota, and p' f1 = f2 p.
  for (int x = 0; x < nf; ++x)
    for (int g = 0; g < ng; ++g) {
      ++report.checked;
      if (preimage[g] >= 0 && (x == 0 || g == 0) && chi_at(x, g) != 0)
        return report.fail("commuting diagram (chi_1 == 1 and chi_x(1) == 1)", {x, g});
    }

  ++report.checked;
  if (!(f1.apply(h.unit()) == h2.unit())) return report.fail("f1(1) == 1", {});

  for (int b1 = 0; b1 < h.dim(); ++b1)
    for (int b2 = 0; b2 < h.dim(); ++b2) {
      ++report.checked;
      Tensor lhs = h2.zero(1);
      if (const auto p = h.multiply_basis(b1, b2)) lhs = f1.apply(h.basis_element(p->basis, p->exponent));
      const Tensor rhs = h2.multiply(f1.apply(h.basis_element(b1)), f1.apply(h.basis_element(b2)));
      if (!(lhs == rhs)) return report.fail("f1(ab) == f1(a) f1(b)", {b1, b2});
    }

  for (int b = 0; b < h.dim(); ++b) {
    ++report.checked;
    const Tensor e = h.basis_element(b);
    if (!(h2.comultiply(f1.apply(e), 0) == f1.apply(h.comultiply(e, 0))))
      return report.fail("Delta' f1 == (f1 ⊗ f1) Delta", {b});
    ++report.checked;
    Tensor want = h2.zero(0);
    if (h.counit_basis(b)) want.add_root(0, 0);
    if (!(h2.counit(f1.apply(e), 0) == want)) return report.fail("eps' f1 == eps", {b});
  }

  ++report.checked;
  if (!(f1.apply(h.associator()) == h2.associator())) return report.fail("(f1 ⊗ f1 ⊗ f1)(phi) == phi'", {});

  if (G.same_table(G2) && std::equal(iota.begin(), iota.end(), preimage.begin())) {
    const int mm = m;
    for (int x = 0; x < nf; ++x)
      for (int g = 0; g < ng; ++g)
        for (int k = 0; k < ng; ++k) {
          ++report.checked;
          const std::int64_t lhs =
              static_cast<std::int64_t>(h.cleft().gamma_at(x, g, k)) + chi_at(x, g) + chi_at(x, k);
          const std::int64_t rhs = static_cast<std::int64_t>(h2.cleft().gamma_at(f2[x], g, k)) + chi_at(x, G.mul(g, k));
          if (mod(lhs - rhs, mm) != 0) return report.fail("gamma_x(g,h) chi_x(g) chi_x(h) == gamma'(g,h) chi_x(gh)", {x, g, k});
        }
    for (int x = 0; x < nf; ++x)
      for (int y = 0; y < nf; ++y)
        for (int g = 0; g < ng; ++g) {
          ++report.checked;
          const std::int64_t lhs = static_cast<std::int64_t>(h2.cleft().theta_at(g, f2[x], f2[y])) + chi_at(x, g) +
                                   chi_at(y, src.action.act(g, x));
          const std::int64_t rhs = static_cast<std::int64_t>(h.cleft().theta_at(g, x, y)) + chi_at(F.mul(x, y), g);
          if (mod(lhs - rhs, mm) != 0)
            return report.fail("theta'_g(x,y) chi_x(g) chi_y(g<x) == theta_g(x,y) chi_xy(g)", {x, y, g});
        }
  }
  return report;
}

MorphismReport check_cleft_morphism(const CleftObject& c, const CleftObject& target, std::span<const int> chi,
                                    std::span<const int> f2) {
  std::vector<int> id(c.g_order());
  std::iota(id.begin(), id.end(), 0);
  return check_cleft_morphism(c, target, chi, id, f2);
}

CleftObject group_algebra_cleft(GroupPtr f) {
  auto trivial = cyclic_group(1);
  return trivial_cleft(trivial_action(std::move(f), trivial), Cochain(trivial, 3, 1));
}

MorphismReport check_canonical_projection(const CleftObject& c) {
  const CleftObject target = group_algebra_cleft(c.action.acting);
  std::vector<int> chi(static_cast<std::size_t>(c.f_order()) * c.g_order(), 0);
  std::vector<int> iota{0};
  std::vector<int> f2(c.f_order());
  std::iota(f2.begin(), f2.end(), 0);
  return check_cleft_morphism(c, target, chi, iota, f2);
}

}  // namespace qdouble
