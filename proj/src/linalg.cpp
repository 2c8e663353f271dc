#include "cubeconf/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubeconf {

using boost::multiprecision::cpp_int;

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out;
  out.rows = a.rows;
  out.columns.resize(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::map<std::size_t, std::int64_t> acc;
    for (const auto& [mid, bv] : b.columns[j]) {
      for (const auto& [row, av] : a.columns.at(mid)) acc[row] += av * bv;
    }
    for (const auto& [row, value] : acc) {
      if (value != 0) out.columns[j].emplace_back(row, value);
    }
  }
  return out;
}

bool is_zero(const SparseMatrix& m) {
  return std::all_of(m.columns.begin(), m.columns.end(), [](const auto& col) {
    return std::all_of(col.begin(), col.end(), [](const auto& e) { return e.second == 0; });
  });
}

namespace {

struct Overflow {};

// Checked arithmetic: machine integers bail out on overflow, big integers
// never do.
std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Overflow{};
  return r;
}
std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw Overflow{};
  return r;
}
cpp_int mul(const cpp_int& x, const cpp_int& y) { return x * y; }
cpp_int sub(const cpp_int& x, const cpp_int& y) { return x - y; }

std::int64_t gcd_of(std::int64_t x, std::int64_t y) {
  if (x == INT64_MIN || y == INT64_MIN) throw Overflow{};
  return std::gcd(x, y);
}
cpp_int gcd_of(const cpp_int& x, const cpp_int& y) { return gcd(x, y); }

template <class Int>
using Column = std::vector<std::pair<std::size_t, Int>>;

template <class Int>
void normalize(Column<Int>& col) {
  Int g = 0;
  for (const auto& entry : col) g = gcd_of(g, entry.second);
  if (g < 0) g = -g;
  if (g > 1) {
    for (auto& entry : col) entry.second /= g;
  }
}

// col <- b*col - a*other, with a, b chosen to cancel the shared pivot row.
// When the pivot of `other` divides that of `col` the multiplier on col is 1.
template <class Int>
Column<Int> eliminate(const Column<Int>& col, const Column<Int>& other) {
  Int a = col.back().second;
  Int b = other.back().second;
  if (a % b == 0) {
    a /= b;
    b = 1;
  }
  Column<Int> out;
  out.reserve(col.size() + other.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < col.size() || j < other.size()) {
    if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
      out.emplace_back(col[i].first, mul(b, col[i].second));
      ++i;
    } else if (i == col.size() || other[j].first < col[i].first) {
      out.emplace_back(other[j].first, sub(Int(0), mul(a, other[j].second)));
      ++j;
    } else {
      Int value = sub(mul(b, col[i].second), mul(a, other[j].second));
      if (value != 0) out.emplace_back(col[i].first, std::move(value));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Int>
std::size_t fraction_free_rank(const SparseMatrix& m) {
  std::unordered_map<std::size_t, Column<Int>> by_pivot;
  for (const auto& source : m.columns) {
    Column<Int> col;
    col.reserve(source.size());
    for (const auto& [row, value] : source) {
      if (value != 0) col.emplace_back(row, Int(value));
    }
    normalize(col);
    while (!col.empty()) {
      auto it = by_pivot.find(col.back().first);
      if (it == by_pivot.end()) {
        const std::size_t pivot = col.back().first;
        by_pivot.emplace(pivot, std::move(col));
        break;
      }
      col = eliminate(col, it->second);
      normalize(col);
    }
  }
  return by_pivot.size();
}

}  // namespace

std::size_t rank_rational(const SparseMatrix& m) {
  try {
    return fraction_free_rank<std::int64_t>(m);
  } catch (const Overflow&) {
    return fraction_free_rank<cpp_int>(m);
  }
}

std::size_t rank_f2(const SparseMatrix& m) {
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_pivot;
  std::vector<std::size_t> scratch;
  for (const auto& source : m.columns) {
    std::vector<std::size_t> col;
    for (const auto& [row, value] : source) {
      if (value % 2 != 0) col.push_back(row);
    }
    while (!col.empty()) {
      auto it = by_pivot.find(col.back());
      if (it == by_pivot.end()) {
        const std::size_t pivot = col.back();
        by_pivot.emplace(pivot, std::move(col));
        break;
      }
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), it->second.begin(),
                                    it->second.end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
  }
  return by_pivot.size();
}

}  // namespace cubeconf
