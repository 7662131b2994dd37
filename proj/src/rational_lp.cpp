#include "revdiam/rational_lp.hpp"

#include "revdiam/error.hpp"

namespace revdiam {

std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& a,
                                                               const std::vector<Rational>& b) {
  if (b.size() != a.rows) throw InvalidArgument("right-hand side size mismatch");
  const std::size_t rows = a.rows, cols = a.cols;
  const std::size_t width = cols + rows + 1;  // originals, artificials, rhs
  RationalMatrix t(rows + 1, width);
  std::vector<std::size_t> basis(rows);

  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t c = 0; c < cols; ++c) t.at(r, c) = flip ? Rational(-a.at(r, c)) : a.at(r, c);
    t.at(r, cols + r) = 1;
    t.at(r, width - 1) = flip ? Rational(-b[r]) : b[r];
    basis[r] = cols + r;
  }
  // Objective row: reduced costs of "minimise the sum of artificials".
  for (std::size_t c = 0; c < width; ++c) {
    if (c >= cols && c < cols + rows) continue;
    Rational s = 0;
    for (std::size_t r = 0; r < rows; ++r) s -= t.at(r, c);
    t.at(rows, c) = s;
  }

  while (true) {
    std::size_t enter = width;
    for (std::size_t c = 0; c + 1 < width; ++c)
      if (t.at(rows, c) < 0) {
        enter = c;
        break;
      }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t.at(r, enter) <= 0) continue;
      const Rational ratio = t.at(r, width - 1) / t.at(r, enter);
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen in phase one

    const Rational pivot = t.at(leave, enter);
    for (std::size_t c = 0; c < width; ++c) t.at(leave, c) /= pivot;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave || t.at(r, enter) == 0) continue;
      const Rational factor = t.at(r, enter);
      for (std::size_t c = 0; c < width; ++c) t.at(r, c) -= factor * t.at(leave, c);
    }
    basis[leave] = enter;
  }

  if (t.at(rows, width - 1) != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < cols) x[basis[r]] = t.at(r, width - 1);
  return x;
}

bool in_convex_hull(const std::vector<std::vector<std::int64_t>>& generators, const std::vector<std::int64_t>& target) {
  if (generators.empty()) return false;
  const std::size_t n = target.size();
  RationalMatrix a(n + 1, generators.size());
  std::vector<Rational> b(n + 1);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != n) throw InvalidArgument("generator dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) a.at(i, g) = generators[g][i];
    a.at(n, g) = 1;
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = target[i];
  b[n] = 1;
  return find_nonnegative_solution(a, b).has_value();
}

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(r, k), m.at(pivot, k));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      const Rational f = m.at(i, c) / m.at(r, c);
      for (std::size_t k = c; k < m.cols; ++k) m.at(i, k) -= f * m.at(r, k);
    }
    ++r;
  }
  return r;
}

}  // namespace revdiam
