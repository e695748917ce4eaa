#include "qdouble/quasi_hopf.hpp"

#include <algorithm>
#include <random>

#include "qdouble/modular.hpp"

namespace qdouble {

Tensor::Tensor(int rank, int dim, int modulus) : rank_(rank), dim_(dim), modulus_(modulus) {
  if (rank < 0 || dim < 1) throw Error(ErrorCode::InvalidInput, "bad tensor shape");
}

std::uint64_t Tensor::key(std::span<const int> basis) const {
  std::uint64_t k = 0;
  for (int b : basis) k = k * static_cast<std::uint64_t>(dim_) + static_cast<std::uint64_t>(b);
  return k;
}

std::vector<int> Tensor::decode(std::uint64_t key) const {
  std::vector<int> out(rank_);
  for (int i = rank_ - 1; i >= 0; --i) {
    out[i] = static_cast<int>(key % dim_);
    key /= dim_;
  }
  return out;
}

void Tensor::add(std::uint64_t key, const Cyclotomic& c) {
  if (c.terms().empty()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.terms().empty()) terms_.erase(it);
  }
}

void Tensor::add_root(std::uint64_t key, int exponent, std::int64_t multiplicity) {
  auto [it, inserted] = terms_.try_emplace(key, modulus_);
  it->second.add_root(exponent, multiplicity);
  if (it->second.terms().empty()) terms_.erase(it);
}

Tensor Tensor::scaled(int exponent) const {
  Tensor out(rank_, dim_, modulus_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.times_root(exponent));
  return out;
}

Tensor Tensor::operator-(const Tensor& other) const {
  Tensor out = *this;
  for (const auto& [k, c] : other.terms_) {
    Cyclotomic neg(modulus_);
    neg -= c;
    out.add(k, neg);
  }
  return out;
}

void Tensor::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::optional<std::vector<int>> Tensor::difference(const Tensor& other) const {
  if (rank_ != other.rank_ || dim_ != other.dim_ || modulus_ != other.modulus_)
    throw Error(ErrorCode::InvalidInput, "comparing tensors of different shape");
  std::vector<std::uint64_t> keys;
  keys.reserve(terms_.size() + other.terms_.size());
  for (const auto& kv : terms_) keys.push_back(kv.first);
  for (const auto& kv : other.terms_) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  const Cyclotomic zero(modulus_);
  for (auto k : keys) {
    auto a = terms_.find(k);
    auto b = other.terms_.find(k);
    const Cyclotomic& x = a == terms_.end() ? zero : a->second;
    const Cyclotomic& y = b == other.terms_.end() ? zero : b->second;
    if (!(x - y).is_zero()) return decode(k);
  }
  return std::nullopt;
}

QuasiHopfAlgebra::QuasiHopfAlgebra(CleftObject c)
    : c_(std::move(c)), ng_(c_.g_order()), nf_(c_.f_order()), dim_(ng_ * nf_) {}

std::optional<Monomial> QuasiHopfAlgebra::multiply_basis(int b1, int b2) const {
  const int g = basis_g(b1), x = basis_x(b1);
  const int h = basis_g(b2), y = basis_x(b2);
  if (c_.action.act(g, x) != h) return std::nullopt;
  return Monomial{basis(g, c_.f_group().mul(x, y)), c_.theta_at(g, x, y)};
}

std::vector<CoproductTerm> QuasiHopfAlgebra::comultiply_basis(int b) const {
  const FiniteGroup& G = c_.g_group();
  const int g = basis_g(b), x = basis_x(b);
  std::vector<CoproductTerm> out;
  out.reserve(ng_);
  for (int a = 0; a < ng_; ++a) {
    const int rest = G.mul(G.inv(a), g);
    out.push_back({basis(a, x), basis(rest, x), c_.gamma_at(x, a, rest)});
  }
  return out;
}

Monomial QuasiHopfAlgebra::antipode_basis(int b) const {
  const FiniteGroup& G = c_.g_group();
  const FiniteGroup& F = c_.f_group();
  const int g = basis_g(b), x = basis_x(b);
  const int gi = G.inv(g), xi = F.inv(x);
  const int e = -c_.theta_at(gi, x, xi) - c_.gamma_at(x, g, gi);
  return Monomial{basis(c_.action.act(gi, x), xi), static_cast<int>(mod(e, modulus()))};
}

Tensor QuasiHopfAlgebra::basis_element(int b, int exponent) const {
  Tensor t = zero(1);
  t.add_root(static_cast<std::uint64_t>(b), exponent);
  return t;
}

Tensor QuasiHopfAlgebra::unit() const {
  Tensor t = zero(1);
  for (int g = 0; g < ng_; ++g) t.add_root(static_cast<std::uint64_t>(basis(g, 0)), 0);
  return t;
}

std::vector<int> QuasiHopfAlgebra::beta_exponents() const {
  const FiniteGroup& G = c_.g_group();
  std::vector<int> out(ng_);
  for (int g = 0; g < ng_; ++g) out[g] = c_.omega.at(g, G.inv(g), g);
  return out;
}

Tensor QuasiHopfAlgebra::beta_element() const {
  Tensor t = zero(1);
  const auto e = beta_exponents();
  for (int g = 0; g < ng_; ++g) t.add_root(static_cast<std::uint64_t>(basis(g, 0)), e[g]);
  return t;
}

Tensor QuasiHopfAlgebra::associator() const {
  Tensor t = zero(3);
  for (int a = 0; a < ng_; ++a)
    for (int b = 0; b < ng_; ++b)
      for (int c = 0; c < ng_; ++c) {
        const int k[3] = {a, b, c};
        t.add_root(t.key(k), -c_.omega.at(a, b, c));
      }
  return t;
}

Tensor QuasiHopfAlgebra::associator_inverse() const {
  Tensor t = zero(3);
  for (int a = 0; a < ng_; ++a)
    for (int b = 0; b < ng_; ++b)
      for (int c = 0; c < ng_; ++c) {
        const int k[3] = {a, b, c};
        t.add_root(t.key(k), c_.omega.at(a, b, c));
      }
  return t;
}

Tensor QuasiHopfAlgebra::multiply(const Tensor& a, const Tensor& b) const {
  if (a.rank() != b.rank()) throw Error(ErrorCode::InvalidInput, "multiplying tensors of different rank");
  const int r = a.rank();
  Tensor out = zero(r);

  // A product of basis tuples is nonzero only if the G-labels of the right
  // factor equal g_i < x_i of the left one, so index the right factor by them.
  struct Entry {
    std::vector<int> basis;
    const Cyclotomic* coeff;
  };
  std::unordered_map<std::uint64_t, std::vector<Entry>> by_g;
  for (const auto& [k, c] : b.terms()) {
    auto bs = b.decode(k);
    std::uint64_t gk = 0;
    for (int v : bs) gk = gk * ng_ + basis_g(v);
    by_g[gk].push_back({std::move(bs), &c});
  }

  const FiniteGroup& F = c_.f_group();
  std::vector<int> prod(r);
  for (const auto& [k, c] : a.terms()) {
    const auto as = a.decode(k);
    std::uint64_t gk = 0;
    for (int v : as) gk = gk * ng_ + c_.action.act(basis_g(v), basis_x(v));
    auto it = by_g.find(gk);
    if (it == by_g.end()) continue;
    for (const auto& e : it->second) {
      std::int64_t exp = 0;
      for (int i = 0; i < r; ++i) {
        const int g = basis_g(as[i]), x = basis_x(as[i]), y = basis_x(e.basis[i]);
        prod[i] = basis(g, F.mul(x, y));
        exp += c_.theta_at(g, x, y);
      }
      out.add(out.key(prod), (c * *e.coeff).times_root(static_cast<int>(mod(exp, modulus()))));
    }
  }
  return out;
}

Tensor QuasiHopfAlgebra::comultiply(const Tensor& t, int slot) const {
  if (slot < 0 || slot >= t.rank()) throw Error(ErrorCode::InvalidInput, "comultiply slot out of range");
  Tensor out = zero(t.rank() + 1);
  std::vector<int> nb(t.rank() + 1);
  for (const auto& [k, c] : t.terms()) {
    const auto bs = t.decode(k);
    for (int i = 0, j = 0; i < t.rank(); ++i, ++j) {
      nb[j] = bs[i];
      if (i == slot) ++j;
    }
    for (const auto& term : comultiply_basis(bs[slot])) {
      nb[slot] = term.left;
      nb[slot + 1] = term.right;
      out.add(out.key(nb), c.times_root(term.exponent));
    }
  }
  return out;
}

Tensor QuasiHopfAlgebra::counit(const Tensor& t, int slot) const {
  if (slot < 0 || slot >= t.rank()) throw Error(ErrorCode::InvalidInput, "counit slot out of range");
  Tensor out = zero(t.rank() - 1);
  std::vector<int> nb;
  for (const auto& [k, c] : t.terms()) {
    const auto bs = t.decode(k);
    if (!counit_basis(bs[slot])) continue;
    nb.clear();
    for (int i = 0; i < t.rank(); ++i)
      if (i != slot) nb.push_back(bs[i]);
    out.add(out.key(nb), c);
  }
  return out;
}

Tensor QuasiHopfAlgebra::antipode(const Tensor& t) const {
  if (t.rank() != 1) throw Error(ErrorCode::InvalidInput, "antipode applies to rank-1 tensors");
  Tensor out = zero(1);
  for (const auto& [k, c] : t.terms()) {
    const auto m = antipode_basis(static_cast<int>(k));
    out.add(static_cast<std::uint64_t>(m.basis), c.times_root(m.exponent));
  }
  return out;
}

Tensor QuasiHopfAlgebra::tensor(const Tensor& a, const Tensor& b) const {
  Tensor out = zero(a.rank() + b.rank());
  std::uint64_t shift = 1;
  for (int i = 0; i < b.rank(); ++i) shift *= static_cast<std::uint64_t>(dim_);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add(ka * shift + kb, ca * cb);
  return out;
}

QuasiHopfAlgebra build_algebra(const CleftObject& c) { return QuasiHopfAlgebra(c); }

bool VerificationReport::passed() const {
  return std::all_of(families.begin(), families.end(), [](const IdentityFamily& f) { return f.passed(); });
}

const IdentityFamily* VerificationReport::family(std::string_view name) const {
  for (const auto& f : families)
    if (f.name == name) return &f;
  return nullptr;
}

std::size_t VerificationReport::checked() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.checked;
  return n;
}

namespace {

bool same(const std::optional<Monomial>& a, const std::optional<Monomial>& b, int m) {
  if (a.has_value() != b.has_value()) return false;
  return !a || (a->basis == b->basis && mod(a->exponent - b->exponent, m) == 0);
}

std::optional<Monomial> times(const QuasiHopfAlgebra& h, const std::optional<Monomial>& a, const std::optional<Monomial>& b) {
  if (!a || !b) return std::nullopt;
  auto p = h.multiply_basis(a->basis, b->basis);
  if (p) p->exponent = static_cast<int>(mod(static_cast<std::int64_t>(p->exponent) + a->exponent + b->exponent, h.modulus()));
  return p;
}

IdentityFamily family_named(const char* name) {
  IdentityFamily f;
  f.name = name;
  return f;
}

// Records one check; returns false once the family has failed.
bool record(IdentityFamily& fam, bool ok, std::vector<int> witness, const char* detail) {
  ++fam.checked;
  if (ok) return true;
  ++fam.failures;
  fam.witness = std::move(witness);
  fam.detail = detail;
  return false;
}

// Sum over the terms of a rank-2 tensor of f(left) * g(right) as rank-1 products.
template <typename Fn>
Tensor contract2(const QuasiHopfAlgebra& h, const Tensor& t, Fn fn) {
  Tensor out = h.zero(1);
  for (const auto& [k, c] : t.terms()) {
    const auto bs = t.decode(k);
    Tensor piece = fn(bs[0], bs[1]);
    for (const auto& [pk, pc] : piece.terms()) out.add(pk, pc * c);
  }
  return out;
}

template <typename Fn>
Tensor contract3(const QuasiHopfAlgebra& h, const Tensor& t, Fn fn) {
  Tensor out = h.zero(1);
  for (const auto& [k, c] : t.terms()) {
    const auto bs = t.decode(k);
    Tensor piece = fn(bs[0], bs[1], bs[2]);
    for (const auto& [pk, pc] : piece.terms()) out.add(pk, pc * c);
  }
  return out;
}

}  // namespace

VerificationReport verify_quasi_hopf(const QuasiHopfAlgebra& h, const VerifyOptions& options) {
  VerificationReport report;
  const int d = h.dim();
  const int m = h.modulus();
  const bool full = d <= options.exhaustive_dim;
  report.exhaustive = full;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick(0, d - 1);

  std::vector<std::pair<int, int>> pairs;
  if (full || static_cast<std::size_t>(d) * d <= options.samples) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) pairs.emplace_back(a, b);
  } else {
    report.exhaustive = false;
    for (std::size_t i = 0; i < options.samples; ++i) pairs.emplace_back(pick(rng), pick(rng));
  }

  const Tensor one = h.unit();
  const Tensor one2 = h.tensor(one, one);
  const Tensor one3 = h.tensor(one2, one);
  const Tensor phi = h.associator();
  const Tensor phi_inv = h.associator_inverse();
  const Tensor beta = h.beta_element();
  const Tensor alpha = h.alpha();

  {
    IdentityFamily fam = family_named("associativity");
    auto triple = [&](int a, int b, int c) {
      const auto l = times(h, h.multiply_basis(a, b), std::optional<Monomial>(Monomial{c, 0}));
      const auto r = times(h, std::optional<Monomial>(Monomial{a, 0}), h.multiply_basis(b, c));
      return record(fam, same(l, r, m), {a, b, c}, "(ab)c == a(bc)");
    };
    bool ok = true;
    if (full) {
      for (int a = 0; a < d && ok; ++a)
        for (int b = 0; b < d && ok; ++b)
          for (int c = 0; c < d && ok; ++c) ok = triple(a, b, c);
    } else {
      for (std::size_t i = 0; i < options.samples && ok; ++i) ok = triple(pick(rng), pick(rng), pick(rng));
    }
    for (int b = 0; b < d && ok; ++b) {
      const Tensor e = h.basis_element(b);
      ok = record(fam, h.multiply(one, e) == e && h.multiply(e, one) == e, {b}, "1 b == b == b 1");
    }
    report.families.push_back(std::move(fam));
  }

  {
    IdentityFamily fam = family_named("comultiplicativity");
    bool ok = record(fam, h.comultiply(one, 0) == one2, {}, "Delta(1) == 1 ⊗ 1");
    for (auto [a, b] : pairs) {
      if (!ok) break;
      const auto p = h.multiply_basis(a, b);
      Tensor lhs = h.zero(2);
      if (p) lhs = h.comultiply(h.basis_element(p->basis, p->exponent), 0);
      const Tensor rhs = h.multiply(h.comultiply(h.basis_element(a), 0), h.comultiply(h.basis_element(b), 0));
      ok = record(fam, lhs == rhs, {a, b}, "Delta(ab) == Delta(a) Delta(b)");
    }
    report.families.push_back(std::move(fam));
  }

  {
    IdentityFamily fam = family_named("counit");
    bool ok = true;
    for (int b = 0; b < d && ok; ++b) {
      const Tensor e = h.basis_element(b);
      const Tensor delta = h.comultiply(e, 0);
      ok = record(fam, h.counit(delta, 0) == e && h.counit(delta, 1) == e, {b}, "(eps ⊗ id) Delta == id == (id ⊗ eps) Delta");
    }
    for (auto [a, b] : pairs) {
      if (!ok) break;
      const auto p = h.multiply_basis(a, b);
      const bool lhs_one = p && h.counit_basis(p->basis);
      const bool rhs_one = h.counit_basis(a) && h.counit_basis(b);
      const bool eq = lhs_one == rhs_one && (!lhs_one || mod(p->exponent, m) == 0);
      ok = record(fam, eq, {a, b}, "eps(ab) == eps(a) eps(b)");
    }
    if (ok) record(fam, h.counit(phi, 1) == one2, {}, "(id ⊗ eps ⊗ id)(phi) == 1");
    report.families.push_back(std::move(fam));
  }

  {
    IdentityFamily fam = family_named("quasi-coassociativity");
    bool ok = true;
    for (int b = 0; b < d && ok; ++b) {
      const Tensor delta = h.comultiply(h.basis_element(b), 0);
      const Tensor left = h.comultiply(delta, 1);   // (id ⊗ Delta) Delta
      const Tensor right = h.comultiply(delta, 0);  // (Delta ⊗ id) Delta
      ok = record(fam, h.multiply(left, phi) == h.multiply(phi, right), {b},
                  "(id ⊗ Delta)Delta(b) phi == phi (Delta ⊗ id)Delta(b)");
    }
    report.families.push_back(std::move(fam));
  }

  {
    IdentityFamily fam = family_named("pentagon");
    bool ok = record(fam, h.multiply(phi, phi_inv) == one3, {}, "phi phi^-1 == 1");
    if (ok) {
      const Tensor lhs = h.multiply(h.multiply(h.tensor(one, phi), h.comultiply(phi, 1)), h.tensor(phi, one));
      const Tensor rhs = h.multiply(h.comultiply(phi, 2), h.comultiply(phi, 0));
      const auto diff = lhs.difference(rhs);
      fam.checked += static_cast<std::size_t>(d) * d * d * d;
      if (diff) {
        ++fam.failures;
        fam.witness = *diff;
        fam.detail = "(1 ⊗ phi)(id ⊗ Delta ⊗ id)(phi)(phi ⊗ 1) == (id ⊗ id ⊗ Delta)(phi)(Delta ⊗ id ⊗ id)(phi)";
      }
    }
    report.families.push_back(std::move(fam));
  }

  {
    IdentityFamily fam = family_named("antipode");
    auto s_of = [&](int b) {
      const auto mo = h.antipode_basis(b);
      return h.basis_element(mo.basis, mo.exponent);
    };
    bool ok = true;
    for (int b = 0; b < d && ok; ++b) {
      const Tensor delta = h.comultiply(h.basis_element(b), 0);
      const int eps = h.counit_basis(b) ? 1 : 0;
      const Tensor s_alpha = contract2(h, delta, [&](int x, int y) {
        return h.multiply(h.multiply(s_of(x), alpha), h.basis_element(y));
      });
      Tensor want_alpha = h.zero(1);
      if (eps) want_alpha = alpha;
      ok = record(fam, s_alpha == want_alpha, {b}, "S(b1) alpha b2 == eps(b) alpha");
      if (!ok) break;
      const Tensor beta_s = contract2(h, delta, [&](int x, int y) {
        return h.multiply(h.multiply(h.basis_element(x), beta), s_of(y));
      });
      Tensor want_beta = h.zero(1);
      if (eps) want_beta = beta;
      ok = record(fam, beta_s == want_beta, {b}, "b1 beta S(b2) == eps(b) beta");
    }
    for (auto [a, b] : pairs) {
      if (!ok) break;
      const auto p = h.multiply_basis(a, b);
      std::optional<Monomial> lhs;
      if (p) {
        lhs = h.antipode_basis(p->basis);
        lhs->exponent = static_cast<int>(mod(static_cast<std::int64_t>(lhs->exponent) + p->exponent, m));
      }
      const auto rhs = times(h, std::optional<Monomial>(h.antipode_basis(b)), std::optional<Monomial>(h.antipode_basis(a)));
      ok = record(fam, same(lhs, rhs, m), {a, b}, "S(ab) == S(b) S(a)");
    }
    if (ok) {
      const Tensor x1 = contract3(h, phi, [&](int x, int y, int z) {
        return h.multiply(h.multiply(h.multiply(h.multiply(h.basis_element(x), beta), s_of(y)), alpha), h.basis_element(z));
      });
      ok = record(fam, x1 == one, {}, "X beta S(Y) alpha Z == 1");
    }
    if (ok) {
      const Tensor x2 = contract3(h, phi_inv, [&](int x, int y, int z) {
        return h.multiply(h.multiply(h.multiply(h.multiply(s_of(x), alpha), h.basis_element(y)), beta), s_of(z));
      });
      record(fam, x2 == one, {}, "S(x) alpha y beta S(z) == 1");
    }
    report.families.push_back(std::move(fam));
  }
  return report;
}

}  // namespace qdouble
