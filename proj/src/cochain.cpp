#include "qdouble/cochain.hpp"

#include <numeric>

#include "qdouble/error.hpp"
#include "qdouble/modular.hpp"

namespace qdouble {

namespace {

std::size_t power(int n, int k) {
  std::size_t p = 1;
  for (int i = 0; i < k; ++i) p *= static_cast<std::size_t>(n);
  return p;
}

}  // namespace

Cochain::Cochain(GroupPtr group, int degree, int modulus)
    : Cochain(group, degree, modulus, std::vector<int>(power(group->order(), degree), 0)) {}

Cochain::Cochain(GroupPtr group, int degree, int modulus, std::vector<int> values)
    : group_(std::move(group)), degree_(degree), modulus_(modulus), n_(group_->order()), values_(std::move(values)) {
  if (degree_ < 0) throw Error(ErrorCode::InvalidInput, "negative cochain degree");
  if (modulus_ < 1) throw Error(ErrorCode::InvalidInput, "modulus must be positive");
  if (values_.size() != power(n_, degree_)) throw Error(ErrorCode::InvalidInput, "cochain has the wrong number of values");
  for (auto& v : values_) v = static_cast<int>(mod(v, modulus_));
}

std::size_t Cochain::index(std::span<const int> args) const {
  if (static_cast<int>(args.size()) != degree_) throw Error(ErrorCode::InvalidInput, "wrong number of cochain arguments");
  std::size_t idx = 0;
  for (int a : args) {
    if (a < 0 || a >= n_) throw Error(ErrorCode::InvalidInput, "cochain argument out of range", {a});
    idx = idx * n_ + a;
  }
  return idx;
}

std::vector<int> Cochain::arguments(std::size_t idx) const {
  std::vector<int> args(degree_);
  for (int i = degree_ - 1; i >= 0; --i) {
    args[i] = static_cast<int>(idx % n_);
    idx /= n_;
  }
  return args;
}

void Cochain::set(std::span<const int> args, int exponent) { values_[index(args)] = static_cast<int>(mod(exponent, modulus_)); }

Cochain Cochain::lifted(int modulus) const {
  if (modulus % modulus_ != 0)
    throw Error(ErrorCode::ModulusMismatch, "cannot lift modulus " + std::to_string(modulus_) + " to " + std::to_string(modulus));
  const int scale = modulus / modulus_;
  std::vector<int> v(values_);
  for (auto& x : v) x *= scale;
  return Cochain(group_, degree_, modulus, std::move(v));
}

bool Cochain::is_normalized() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 0) continue;
    for (int a : arguments(i))
      if (a == 0) return false;
  }
  return true;
}

int Cochain::value_order() const { return static_cast<int>(qdouble::value_order(values_.begin(), values_.end(), modulus_)); }

bool Cochain::operator==(const Cochain& other) const {
  return group_->same_table(*other.group_) && degree_ == other.degree_ && modulus_ == other.modulus_ &&
         values_ == other.values_;
}

Cochain coboundary(const Cochain& c) {
  const FiniteGroup& g = *c.group();
  const int k = c.degree();
  Cochain out(c.group(), k + 1, c.modulus());
  std::vector<int> args(k + 1), face(k);
  const std::size_t total = power(g.order(), k + 1);
  for (std::size_t idx = 0; idx < total; ++idx) {
    args = out.arguments(idx);
    std::int64_t s = 0;
    // c(g2..g_{k+1})
    for (int j = 0; j < k; ++j) face[j] = args[j + 1];
    s += c.at(face);
    for (int i = 0; i < k; ++i) {
      for (int j = 0, src = 0; j < k; ++j, ++src) {
        if (j == i) {
          face[j] = g.mul(args[src], args[src + 1]);
          ++src;
        } else {
          face[j] = args[src];
        }
      }
      s += (i % 2 == 0 ? -1 : 1) * static_cast<std::int64_t>(c.at(face));
    }
    for (int j = 0; j < k; ++j) face[j] = args[j];
    s += ((k + 1) % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.at(face));
    out.set(args, static_cast<int>(mod(s, c.modulus())));
  }
  return out;
}

CocycleReport is_normalized_cocycle(const Cochain& c) {
  CocycleReport report;
  for (std::size_t i = 0; i < c.values().size(); ++i) {
    if (c.values()[i] == 0) continue;
    const auto args = c.arguments(i);
    for (int a : args)
      if (a == 0) {
        report.normalized = false;
        report.witness = args;
        return report;
      }
  }
  const Cochain d = coboundary(c);
  for (std::size_t i = 0; i < d.values().size(); ++i)
    if (d.values()[i] != 0) {
      report.closed = false;
      report.witness = d.arguments(i);
      return report;
    }
  return report;
}

Cochain CoboundarySolution::cochain(const GroupPtr& group, std::span<const int> unknowns) const {
  std::vector<int> v(group->order(), 0);
  for (int g = 1; g < group->order(); ++g) v[g] = unknowns[g - 1];
  return Cochain(group, 1, modulus, std::move(v));
}

Cochain CoboundarySolution::particular(const GroupPtr& group) const { return cochain(group, system.particular); }

std::vector<Cochain> CoboundarySolution::all(const GroupPtr& group) const {
  std::vector<Cochain> out;
  for (const auto& x : system.enumerate()) out.push_back(cochain(group, x));
  return out;
}

int solve_modulus(const Cochain& target) {
  return std::lcm(target.modulus(), target.value_order() * target.group()->order());
}

std::variant<CoboundarySolution, NoSolution> solve_coboundary(const Cochain& target,
                                                              std::span<const LinearConstraint> extra) {
  if (target.degree() != 2) throw Error(ErrorCode::InvalidInput, "coboundary solve expects a 2-cochain target");
  const FiniteGroup& g = *target.group();
  const int n = g.order();
  const int m = solve_modulus(target);
  const int scale = m / target.modulus();
  const Cochain lifted = target.lifted(m);

  const int unknowns = n - 1;
  const int rows = n * n + static_cast<int>(extra.size());
  IntMatrix a(rows, unknowns);
  std::vector<std::int64_t> b(rows, 0);
  auto add = [&](int row, int element, std::int64_t coeff) {
    if (element != 0) a(row, element - 1) += coeff;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int row = x * n + y;
      add(row, x, 1);
      add(row, y, 1);
      add(row, g.mul(x, y), -1);
      b[row] = lifted.at(x, y);
    }
  for (std::size_t i = 0; i < extra.size(); ++i) {
    const int row = n * n + static_cast<int>(i);
    for (auto [element, coeff] : extra[i].terms) {
      if (element < 0 || element >= n) throw Error(ErrorCode::InvalidInput, "constraint element out of range", {element});
      add(row, element, coeff);
    }
    b[row] = static_cast<std::int64_t>(extra[i].rhs) * scale;
  }

  auto result = smith_solve(a, b, m);
  if (auto* none = std::get_if<NoSolution>(&result)) return *none;
  return CoboundarySolution{m, std::get<LinearSystemSolution>(std::move(result))};
}

Cochain cyclic_cocycle(int n, int q) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "cyclic cocycle needs N >= 1");
  auto group = cyclic_group(n);
  const int m = n * n;
  Cochain omega(group, 3, m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::int64_t carry = b + c - (b + c) % n;
        const int args[3] = {a, b, c};
        omega.set(args, static_cast<int>(mod(static_cast<std::int64_t>(q) * a * carry, m)));
      }
  return omega;
}

Cochain pullback(const Cochain& c, GroupPtr domain, std::span<const int> hom) {
  if (!is_homomorphism(*domain, *c.group(), hom)) throw Error(ErrorCode::InvalidInput, "pullback map is not a homomorphism");
  Cochain out(domain, c.degree(), c.modulus());
  std::vector<int> image(c.degree());
  for (std::size_t i = 0; i < out.values().size(); ++i) {
    const auto args = out.arguments(i);
    for (int j = 0; j < c.degree(); ++j) image[j] = hom[args[j]];
    out.set(args, c.at(image));
  }
  if (is_normalized_cocycle(c).ok() && !is_normalized_cocycle(out).ok())
    throw InternalError("pullback of a normalized cocycle is not a normalized cocycle");
  return out;
}

Cochain inflate(const Cochain& c, const QuotientData& quotient) {
  if (!quotient.quotient->same_table(*c.group()))
    throw Error(ErrorCode::InvalidInput, "cochain is not defined on the quotient group");
  return pullback(c, quotient.parent, quotient.proj);
}

}  // namespace qdouble
