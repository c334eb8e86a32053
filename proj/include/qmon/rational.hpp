#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmon {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Gauss-Jordan elimination in place; returns the pivot column of each
/// nonzero row.
inline std::vector<std::size_t> reduce_row_echelon(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational lead = m[row][col];
    for (auto& e : m[row]) e /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// A nonzero integer vector x with m·x = 0, scaled so its entries are
/// coprime; nothing if the kernel is trivial. The first free column is set
/// to a positive value and all other free columns to zero.
inline std::optional<std::vector<Integer>> integer_kernel_vector(RationalMatrix m, std::size_t cols) {
  const auto pivots = reduce_row_echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (free_col < cols && is_pivot[free_col]) ++free_col;
  if (free_col == cols) return std::nullopt;

  std::vector<Rational> x(cols, Rational(0));
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free_col];

  Integer scale = 1;
  for (const auto& e : x) scale = boost::multiprecision::lcm(scale, Integer(boost::multiprecision::denominator(e)));
  std::vector<Integer> out(cols);
  Integer g = 0;
  for (std::size_t i = 0; i < cols; ++i) {
    const Rational scaled = x[i] * Rational(scale);
    out[i] = boost::multiprecision::numerator(scaled);
    g = boost::multiprecision::gcd(g, out[i]);
  }
  for (auto& e : out) e /= g;
  return out;
}

}  // namespace qmon
