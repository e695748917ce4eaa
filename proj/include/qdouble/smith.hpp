#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace qdouble {

// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

// U * A * V == D (mod M) with U, V invertible over Z/M and D diagonal.
// Obtained by unimodular integer row/column operations with every entry kept
// reduced mod M, so it is the Smith form over the ring Z/M rather than over Z
// (the divisibility chain of the diagonal is not enforced; nothing here needs it).
struct DiagonalForm {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> diagonal;  // length min(rows, cols)
  IntMatrix u;                         // rows x rows
  IntMatrix v;                         // cols x cols
};

DiagonalForm smith_diagonalize(const IntMatrix& a, std::int64_t modulus);

// log-free size bookkeeping: |image of A| and |kernel of A| over (Z/M)^cols
// are products of these per-diagonal factors.
std::vector<std::int64_t> image_factors(const DiagonalForm& form);

// All x with A x == b (mod M): particular + span of the generators, where
// generator i has additive order orders[i]. Every solution is hit exactly
// once by particular + sum k_i * generator_i with 0 <= k_i < orders[i].
struct LinearSystemSolution {
  std::int64_t modulus = 1;
  std::vector<int> particular;
  std::vector<std::vector<int>> homogeneous;
  std::vector<int> orders;

  std::size_t count() const;
  // Every solution, sorted lexicographically. Intended for small solution sets.
  std::vector<std::vector<int>> enumerate() const;
};

struct NoSolution {
  // Row of U*A*V == D whose equation d_i y_i == (U b)_i is inconsistent.
  int obstruction_index = -1;
};

using SolveResult = std::variant<LinearSystemSolution, NoSolution>;

// Exact solution of A x == b (mod M) for composite M. The particular solution
// sets all free parameters of the diagonal system to zero.
SolveResult smith_solve(const IntMatrix& a, const std::vector<std::int64_t>& b, std::int64_t modulus);

}  // namespace qdouble
