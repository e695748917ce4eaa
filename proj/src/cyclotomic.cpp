#include "qdouble/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qdouble/error.hpp"
#include "qdouble/modular.hpp"

namespace qdouble {

namespace {

// Exact division of integer polynomials (lowest degree first) by a monic divisor.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {};
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::recursive_mutex lock;
  static std::map<int, std::vector<std::int64_t>> cache;
  std::lock_guard<std::recursive_mutex> guard(lock);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n < 1) throw Error(ErrorCode::InvalidInput, "cyclotomic index must be positive");

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int modulus) : modulus_(modulus) {
  if (modulus_ < 1) throw Error(ErrorCode::InvalidInput, "cyclotomic modulus must be positive");
}

Cyclotomic Cyclotomic::root(int modulus, int exponent, std::int64_t multiplicity) {
  Cyclotomic c(modulus);
  c.add_root(exponent, multiplicity);
  return c;
}

void Cyclotomic::add_root(int exponent, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  const int e = static_cast<int>(mod(exponent, modulus_));
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const auto& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {e, multiplicity});
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.modulus_ != modulus_) throw Error(ErrorCode::ModulusMismatch, "adding cyclotomics of different modulus");
  for (auto [e, c] : other.terms_) add_root(e, c);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  if (other.modulus_ != modulus_) throw Error(ErrorCode::ModulusMismatch, "subtracting cyclotomics of different modulus");
  for (auto [e, c] : other.terms_) add_root(e, -c);
  return *this;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
  Cyclotomic out = *this;
  out += other;
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const {
  Cyclotomic out = *this;
  out -= other;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
  if (other.modulus_ != modulus_) throw Error(ErrorCode::ModulusMismatch, "multiplying cyclotomics of different modulus");
  Cyclotomic out(modulus_);
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : other.terms_) out.add_root(e1 + e2, c1 * c2);
  return out;
}

Cyclotomic Cyclotomic::times_root(int exponent) const {
  Cyclotomic out(modulus_);
  out.terms_.reserve(terms_.size());
  for (auto [e, c] : terms_) out.terms_.emplace_back(static_cast<int>(mod(e + exponent, modulus_)), c);
  std::sort(out.terms_.begin(), out.terms_.end());
  return out;
}

std::vector<std::int64_t> Cyclotomic::canonical() const {
  const auto& phi = cyclotomic_polynomial(modulus_);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> r(std::max<std::size_t>(static_cast<std::size_t>(modulus_), deg), 0);
  for (auto [e, c] : terms_) r[e] += c;
  for (std::size_t i = r.size(); i-- > deg;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg);
  return r;
}

bool Cyclotomic::is_zero() const {
  if (terms_.empty()) return true;
  const auto r = canonical();
  return std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; });
}

std::optional<int> Cyclotomic::as_root() const {
  if (terms_.size() == 1 && terms_[0].second == 1) return terms_[0].first;
  for (int e = 0; e < modulus_; ++e)
    if ((*this - root(modulus_, e)).is_zero()) return e;
  return std::nullopt;
}

}  // namespace qdouble
