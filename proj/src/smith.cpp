#include "qdouble/smith.hpp"

#include <algorithm>
#include <numeric>

#include "qdouble/error.hpp"
#include "qdouble/modular.hpp"

namespace qdouble {

namespace {

IntMatrix identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

// rows (s, t) of `m` <- [[p, q], [r, w]] * rows (s, t), reduced mod `modulus`.
void combine_rows(IntMatrix& m, int s, int t, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t w,
                  std::int64_t modulus) {
  for (int j = 0; j < m.cols; ++j) {
    const std::int64_t a = m(s, j), b = m(t, j);
    m(s, j) = mod(p * a + q * b, modulus);
    m(t, j) = mod(r * a + w * b, modulus);
  }
}

void combine_cols(IntMatrix& m, int s, int t, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t w,
                  std::int64_t modulus) {
  for (int i = 0; i < m.rows; ++i) {
    const std::int64_t a = m(i, s), b = m(i, t);
    m(i, s) = mod(p * a + q * b, modulus);
    m(i, t) = mod(r * a + w * b, modulus);
  }
}

// Unimodular 2x2 transform sending (a, b) to (gcd, 0).
struct Eliminator {
  std::int64_t p, q, r, w;
};

Eliminator eliminator(std::int64_t a, std::int64_t b) {
  if (a != 0 && b % a == 0) return {1, 0, -(b / a), 1};
  auto [g, p, q] = ext_gcd(a, b);
  return {p, q, -(b / g), a / g};
}

}  // namespace

DiagonalForm smith_diagonalize(const IntMatrix& input, std::int64_t modulus) {
  if (modulus < 1) throw Error(ErrorCode::InvalidInput, "modulus must be positive");
  IntMatrix a = input;
  for (auto& x : a.data) x = mod(x, modulus);
  const int m = a.rows, n = a.cols;
  IntMatrix u = identity(m);
  IntMatrix v = identity(n);
  const int r = std::min(m, n);

  for (int t = 0; t < r; ++t) {
    // Pivot: nonzero entry with the smallest gcd against M, then smallest value.
    int pi = -1, pj = -1;
    std::int64_t best_g = 0, best_v = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const std::int64_t x = a(i, j);
        if (x == 0) continue;
        const std::int64_t g = std::gcd(x, modulus);
        if (pi < 0 || g < best_g || (g == best_g && x < best_v)) {
          pi = i, pj = j, best_g = g, best_v = x;
        }
      }
    if (pi < 0) break;
    if (pi != t) {
      combine_rows(a, t, pi, 0, 1, 1, 0, modulus);
      combine_rows(u, t, pi, 0, 1, 1, 0, modulus);
    }
    if (pj != t) {
      combine_cols(a, t, pj, 0, 1, 1, 0, modulus);
      combine_cols(v, t, pj, 0, 1, 1, 0, modulus);
    }

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        const auto e = eliminator(a(t, t), a(i, t));
        combine_rows(a, t, i, e.p, e.q, e.r, e.w, modulus);
        combine_rows(u, t, i, e.p, e.q, e.r, e.w, modulus);
      }
      for (int j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        const auto e = eliminator(a(t, t), a(t, j));
        combine_cols(a, t, j, e.p, e.q, e.r, e.w, modulus);
        combine_cols(v, t, j, e.p, e.q, e.r, e.w, modulus);
      }
      for (int i = t + 1; i < m && !dirty; ++i) dirty = a(i, t) != 0;
    }
  }

  DiagonalForm form;
  form.modulus = modulus;
  form.diagonal.resize(r);
  for (int t = 0; t < r; ++t) form.diagonal[t] = a(t, t);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && a(i, j) != 0) throw InternalError("diagonalization left an off-diagonal entry");
  form.u = std::move(u);
  form.v = std::move(v);
  return form;
}

std::vector<std::int64_t> image_factors(const DiagonalForm& form) {
  std::vector<std::int64_t> out;
  for (auto d : form.diagonal) out.push_back(form.modulus / std::gcd(d, form.modulus));
  return out;
}

std::size_t LinearSystemSolution::count() const {
  std::size_t c = 1;
  for (int o : orders) c *= static_cast<std::size_t>(o);
  return c;
}

std::vector<std::vector<int>> LinearSystemSolution::enumerate() const {
  std::vector<std::vector<int>> out;
  std::vector<int> k(orders.size(), 0);
  while (true) {
    std::vector<int> x = particular;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = static_cast<int>(mod(x[j] + static_cast<std::int64_t>(k[i]) * homogeneous[i][j], modulus));
    out.push_back(std::move(x));
    std::size_t i = 0;
    while (i < k.size() && ++k[i] == orders[i]) k[i++] = 0;
    if (i == k.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolveResult smith_solve(const IntMatrix& a, const std::vector<std::int64_t>& b, std::int64_t modulus) {
  if (static_cast<int>(b.size()) != a.rows) throw Error(ErrorCode::InvalidInput, "right-hand side has wrong length");
  const DiagonalForm form = smith_diagonalize(a, modulus);
  const int m = a.rows, n = a.cols, r = std::min(m, n);

  std::vector<std::int64_t> c(m, 0);
  for (int i = 0; i < m; ++i) {
    std::int64_t s = 0;
    for (int k = 0; k < m; ++k) s = mod(s + form.u(i, k) * mod(b[k], modulus), modulus);
    c[i] = s;
  }

  LinearSystemSolution sol;
  sol.modulus = modulus;
  std::vector<std::int64_t> y(n, 0);
  auto column_times = [&](int j, std::int64_t s) {
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = static_cast<int>(mod(form.v(i, j) * s, modulus));
    return g;
  };

  for (int i = 0; i < r; ++i) {
    const std::int64_t d = form.diagonal[i];
    const std::int64_t g = std::gcd(d, modulus);
    if (c[i] % g != 0) return NoSolution{i};
    const std::int64_t reduced = modulus / g;
    y[i] = mod((c[i] / g) * inverse_mod(d / g, reduced), reduced);
    if (g > 1) {
      sol.homogeneous.push_back(column_times(i, reduced));
      sol.orders.push_back(static_cast<int>(g));
    }
  }
  for (int i = r; i < m; ++i)
    if (c[i] != 0) return NoSolution{i};
  for (int j = r; j < n; ++j)
    if (modulus > 1) {
      sol.homogeneous.push_back(column_times(j, 1));
      sol.orders.push_back(static_cast<int>(modulus));
    }

  sol.particular.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int k = 0; k < n; ++k) s = mod(s + form.v(i, k) * y[k], modulus);
    sol.particular[i] = static_cast<int>(s);
  }
  return sol;
}

}  // namespace qdouble
