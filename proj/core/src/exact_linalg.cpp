#include "l2inv/exact_linalg.hpp"

#include "l2inv/cyclotomic.hpp"
#include "l2inv/errors.hpp"

namespace l2inv {

int matrix_rank(ZMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  int rank = 0;
  Int prev_pivot = 1;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
    // Smallest nonzero magnitude as pivot keeps Bareiss growth down.
    std::size_t best = rows;
    for (std::size_t i = rank; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      if (best == rows || abs(m[i][col]) < abs(m[best][col])) best = i;
    }
    if (best == rows) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[best]);
    const std::size_t r = static_cast<std::size_t>(rank);
    const Int pivot = m[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][col] == 0) {
        // Still rescale so the exact division below stays valid row-wide.
        for (std::size_t j = col + 1; j < cols; ++j)
          m[i][j] = (pivot * m[i][j]) / prev_pivot;
        continue;
      }
      const Int factor = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (pivot * m[i][j] - factor * m[r][j]) / prev_pivot;
      m[i][col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

int matrix_rank(QMatrix m) {
  ZMatrix z(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Int den = 1;
    for (const Rational& q : m[i]) den = lcm(den, denominator(q));
    z[i].reserve(m[i].size());
    for (const Rational& q : m[i]) z[i].push_back(numerator(q) * (den / denominator(q)));
  }
  return matrix_rank(std::move(z));
}

long matrix_nullity(QMatrix m) {
  const long cols = m.empty() ? 0 : static_cast<long>(m[0].size());
  return cols - matrix_rank(std::move(m));
}

QMatrix regular_representation(const RingMatrix& a) {
  const Group& g = *a.group();
  if (!g.is_finite()) throw DomainError("regular representation needs a finite group");
  const long m = static_cast<long>(g.order());
  const std::size_t rows = static_cast<std::size_t>(a.rows()) * m;
  const std::size_t cols = static_cast<std::size_t>(a.cols()) * m;
  QMatrix out(rows, std::vector<Rational>(cols, Rational(0)));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (const auto& [elem, c] : a.at(i, j).terms()) {
        // Convolution by  c*elem  sends basis vector e_h to c*e_{elem*h}.
        const long e = elem.index();
        for (long h = 0; h < m; ++h)
          out[static_cast<std::size_t>(i) * m + g.mul(e, h)]
             [static_cast<std::size_t>(j) * m + h] += c;
      }
  return out;
}

long long expanded_nullity(const RingMatrix& a) {
  const Group& g = *a.group();
  if (!g.is_finite()) throw DomainError("expanded nullity needs a finite group");
  if (g.is_cyclic_product()) return cyclic_product_expanded_nullity(a);
  const long long total_cols = g.order() * a.cols();
  return total_cols - matrix_rank(regular_representation(a));
}

}  // namespace l2inv
