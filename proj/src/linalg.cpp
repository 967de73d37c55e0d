#include "substfreq/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace substfreq {

void LinearSystem::add_row(std::vector<Rational> row, Rational r, std::string tag) {
  if (row.size() != cols) throw std::invalid_argument("LinearSystem: row width mismatch");
  rows.push_back(std::move(row));
  rhs.push_back(std::move(r));
  tags.push_back(std::move(tag));
}

SolveOutcome solve_unique(const LinearSystem& sys) {
  auto a = sys.rows;
  auto b = sys.rhs;
  auto tags = sys.tags;
  const std::size_t n_rows = a.size();
  const std::size_t n_cols = sys.cols;
  SolveOutcome out;

  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_of_col(n_cols, static_cast<std::size_t>(-1));
  for (std::size_t col = 0; col < n_cols && pivot_row < n_rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < n_rows && a[sel][col] == 0) ++sel;
    if (sel == n_rows) continue;
    std::swap(a[sel], a[pivot_row]);
    std::swap(b[sel], b[pivot_row]);
    std::swap(tags[sel], tags[pivot_row]);
    const Rational inv = Rational(1) / a[pivot_row][col];
    for (std::size_t j = col; j < n_cols; ++j) a[pivot_row][j] *= inv;
    b[pivot_row] *= inv;
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (r == pivot_row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = col; j < n_cols; ++j) a[r][j] -= factor * a[pivot_row][j];
      b[r] -= factor * b[pivot_row];
    }
    pivot_of_col[col] = pivot_row;
    ++pivot_row;
  }

  for (std::size_t r = pivot_row; r < n_rows; ++r) {
    if (b[r] != 0) {
      out.error = "inconsistent system, offending row: " + tags[r];
      return out;
    }
  }
  if (pivot_row < n_cols) {
    out.error = "rank-deficient system: rank " + std::to_string(pivot_row) + " of " +
                std::to_string(n_cols) + " unknowns";
    return out;
  }

  out.solution.resize(n_cols);
  for (std::size_t col = 0; col < n_cols; ++col) out.solution[col] = b[pivot_of_col[col]];
  out.ok = true;
  return out;
}

}  // namespace substfreq
