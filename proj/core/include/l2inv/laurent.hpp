#pragma once

#include <map>
#include <vector>

#include "l2inv/group_ring.hpp"
#include "l2inv/rational.hpp"

namespace l2inv {

/// Sparse multivariate polynomial over Q with non-negative exponents,
/// ordered lexicographically by exponent vector.  Just enough arithmetic for
/// fraction-free elimination: add, multiply, and the exact division that
/// Bareiss pivoting guarantees.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  /// -1 for the zero polynomial.
  int total_degree() const;
  std::size_t term_count() const { return terms_.size(); }

  void add_term(std::vector<int> exponents, const Rational& c);

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  bool operator==(const MultiPoly& other) const { return terms_ == other.terms_; }

  /// Exact quotient; throws std::logic_error if the division leaves a
  /// remainder (which would mean a broken elimination invariant, not bad
  /// user input).
  MultiPoly divide_exact(const MultiPoly& divisor) const;

 private:
  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

/// Rank of a matrix over the fraction field Q(t_1..t_n), for a matrix over
/// the group ring of FreeAbelian(n).  Laurent entries are normalized row by
/// row (a row times a monomial has the same rank), then eliminated
/// fraction-free with pivots chosen by lowest total degree, then fewest
/// terms.
int generic_rank(const RingMatrix& a);

}  // namespace l2inv
