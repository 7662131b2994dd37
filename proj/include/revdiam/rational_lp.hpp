#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace revdiam {

using Rational = boost::multiprecision::cpp_rational;

/// Dense rational matrix, row-major.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> cells;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), cells(r * c) {}
  Rational& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
};

/// A point x >= 0 with A x = b, or nullopt. Phase-one simplex with Bland's rule
/// in exact arithmetic.
std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& a,
                                                               const std::vector<Rational>& b);

/// Is `target` a convex combination of `generators`, all in Z^n?
bool in_convex_hull(const std::vector<std::vector<std::int64_t>>& generators,
                    const std::vector<std::int64_t>& target);

/// Rank over Q.
std::size_t rank(RationalMatrix m);

}  // namespace revdiam
