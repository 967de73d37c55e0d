#include "substfreq/profile.hpp"

#include <set>
#include <stdexcept>

#include "substfreq/linalg.hpp"

namespace substfreq {

Matrix incidence_matrix(const Morphism& phi) {
  const int m = phi.alphabet_size();
  Matrix M(m, std::vector<long long>(m, 0));
  for (int j = 0; j < m; ++j)
    for (Letter a : phi.image(static_cast<Letter>(j)).letters()) ++M[a][j];
  return M;
}

bool is_primitive_matrix(const Matrix& M) {
  const std::size_t d = M.size();
  if (d == 0) throw std::invalid_argument("is_primitive_matrix: empty matrix");
  for (const auto& row : M)
    if (row.size() != d) throw std::invalid_argument("is_primitive_matrix: non-square matrix");

  using BoolMatrix = std::vector<std::vector<bool>>;
  BoolMatrix base(d, std::vector<bool>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (M[i][j] < 0) throw std::invalid_argument("is_primitive_matrix: negative entry");
      base[i][j] = M[i][j] > 0;
    }

  auto all_positive = [d](const BoolMatrix& A) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!A[i][j]) return false;
    return true;
  };
  auto multiply = [d](const BoolMatrix& A, const BoolMatrix& B) {
    BoolMatrix C(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (A[i][k])
          for (std::size_t j = 0; j < d; ++j)
            if (B[k][j]) C[i][j] = true;
    return C;
  };

  // Wielandt: a primitive d x d matrix has a positive power at exponent
  // <= d^2 - 2d + 2.
  const std::size_t bound = d * d - 2 * d + 2;
  BoolMatrix power = base;
  for (std::size_t e = 1; e <= bound; ++e) {
    if (all_positive(power)) return true;
    power = multiply(power, base);
  }
  return false;
}

MorphismProfile profile(const Morphism& phi) {
  const int m = phi.alphabet_size();
  MorphismProfile pr;
  pr.incidence = incidence_matrix(phi);

  bool uniform = true;
  const std::size_t b0 = phi.image(0).size();
  for (int k = 1; k < m; ++k)
    if (phi.image(static_cast<Letter>(k)).size() != b0) uniform = false;
  if (uniform) {
    pr.uniform_length = static_cast<int>(b0);
    pr.dominant_eigenvalue = Rational(static_cast<long long>(b0));
  }

  std::set<Letter> firsts, lasts;
  for (int k = 0; k < m; ++k) {
    firsts.insert(phi.image(static_cast<Letter>(k)).front());
    lasts.insert(phi.image(static_cast<Letter>(k)).back());
  }
  pr.is_marked = static_cast<int>(firsts.size()) == m && static_cast<int>(lasts.size()) == m;

  pr.is_primitive = is_primitive_matrix(pr.incidence);

  if (uniform && pr.is_primitive) {
    // (M - b I) x = 0 with sum(x) = 1, solved exactly.
    LinearSystem sys;
    sys.cols = static_cast<std::size_t>(m);
    const long long b = static_cast<long long>(b0);
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> row(m);
      for (int j = 0; j < m; ++j) row[j] = Rational(pr.incidence[i][j]) - (i == j ? b : 0);
      sys.add_row(std::move(row), Rational(0), "eigen-row-" + std::to_string(i));
    }
    sys.add_row(std::vector<Rational>(m, Rational(1)), Rational(1), "normalization");
    SolveOutcome sol = solve_unique(sys);
    if (!sol.ok) throw std::runtime_error("profile: eigenvector solve failed: " + sol.error);
    pr.letter_frequencies = std::move(sol.solution);
  }
  return pr;
}

}  // namespace substfreq
