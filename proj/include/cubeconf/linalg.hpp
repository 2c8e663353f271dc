#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace cubeconf {

/// Column-major sparse integer matrix; each column sorted by row.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;

  std::size_t cols() const { return columns.size(); }
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
bool is_zero(const SparseMatrix& m);

/// Exact rank over the rationals by fraction-free column reduction with
/// arbitrary-precision integers.
std::size_t rank_rational(const SparseMatrix& m);

/// Rank over the two-element field (entries taken mod 2).
std::size_t rank_f2(const SparseMatrix& m);

}  // namespace cubeconf
