#include "l2inv/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "l2inv/errors.hpp"

namespace l2inv {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

void MultiPoly::add_term(std::vector<int> exponents, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(exponents.size()) != nvars_)
    throw InputError("exponent vector length does not match variable count");
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  MultiPoly out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  MultiPoly out(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) {
      std::vector<int> e(e1);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      out.add_term(std::move(e), c1 * c2);
    }
  return out;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
  MultiPoly rem = *this, quot(nvars_);
  const auto& [de, dc] = *divisor.terms_.rbegin();  // lex-leading divisor term
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    std::vector<int> qe(re);
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] -= de[i];
      if (qe[i] < 0) throw std::logic_error("polynomial division is not exact");
    }
    MultiPoly t(nvars_);
    t.add_term(qe, rc / dc);
    quot = quot + t;
    rem = rem - t * divisor;
  }
  return quot;
}

namespace {

/// Laurent support of one ring element as exponent/coefficient pairs.
MultiPoly to_poly_shifted(const RingElem& a, const std::vector<int>& shift, int nvars) {
  MultiPoly p(nvars);
  for (const auto& [g, c] : a.terms()) {
    std::vector<int> e = g.exponents();
    for (int v = 0; v < nvars; ++v) e[static_cast<std::size_t>(v)] -= shift[static_cast<std::size_t>(v)];
    p.add_term(std::move(e), c);
  }
  return p;
}

bool better_pivot(const MultiPoly& a, const MultiPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a.term_count() < b.term_count();
}

}  // namespace

int generic_rank(const RingMatrix& a) {
  const Group& g = *a.group();
  if (g.kind() != GroupKind::FreeAbelian)
    throw DomainError("generic rank needs a matrix over a free abelian group");
  const int n = g.generator_count();
  const int rows = a.rows(), cols = a.cols();

  // Per-row monomial normalization: divide row i by t^(min exponents of the
  // row), a unit of the Laurent ring, so all exponents become >= 0.
  std::vector<std::vector<MultiPoly>> m;
  m.reserve(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    std::vector<int> shift(static_cast<std::size_t>(n), 0);
    bool any = false;
    for (int j = 0; j < cols; ++j)
      for (const auto& [elem, c] : a.at(i, j).terms()) {
        const auto& e = elem.exponents();
        if (!any) {
          shift.assign(e.begin(), e.end());
          any = true;
        } else {
          for (int v = 0; v < n; ++v)
            shift[static_cast<std::size_t>(v)] = std::min(shift[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v)]);
        }
      }
    std::vector<MultiPoly> row;
    row.reserve(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) row.push_back(to_poly_shifted(a.at(i, j), shift, n));
    m.push_back(std::move(row));
  }

  // Fraction-free elimination (Bareiss) with full pivoting by degree.
  int rank = 0;
  MultiPoly prev_pivot = MultiPoly::constant(n, 1);
  int rpos = 0, cpos = 0;
  while (rpos < rows && cpos < cols) {
    int pi = -1, pj = -1;
    for (int i = rpos; i < rows; ++i)
      for (int j = cpos; j < cols; ++j)
        if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero() &&
            (pi < 0 || better_pivot(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                    m[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[static_cast<std::size_t>(rpos)], m[static_cast<std::size_t>(pi)]);
    for (int i = 0; i < rows; ++i)
      std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(cpos)],
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);
    const MultiPoly pivot = m[static_cast<std::size_t>(rpos)][static_cast<std::size_t>(cpos)];
    for (int i = rpos + 1; i < rows; ++i) {
      const MultiPoly factor = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(cpos)];
      for (int j = cpos + 1; j < cols; ++j) {
        MultiPoly num = pivot * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                        factor * m[static_cast<std::size_t>(rpos)][static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num.divide_exact(prev_pivot);
      }
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(cpos)] = MultiPoly(n);
    }
    prev_pivot = pivot;
    ++rank;
    ++rpos;
    ++cpos;
  }
  return rank;
}

}  // namespace l2inv
