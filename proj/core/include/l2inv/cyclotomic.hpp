#pragma once

#include <vector>

#include "l2inv/group_ring.hpp"
#include "l2inv/rational.hpp"

namespace l2inv {

/// Coefficients of the m-th cyclotomic polynomial, constant term first,
/// degree phi(m).  Computed by exact division of x^m - 1 by the cyclotomic
/// polynomials of the proper divisors.
std::vector<Int> cyclotomic_polynomial(long m);

/// Arithmetic in Z[x]/Phi_m(x).  Elements are dense coefficient vectors of
/// length phi(m).  Since Phi_m is irreducible over Q this is (an integral
/// form of) the cyclotomic field, so a product of nonzero elements is
/// nonzero; that is all rank computations below need.
class CycloRing {
 public:
  explicit CycloRing(long m);

  long modulus() const { return m_; }
  int degree() const { return degree_; }

  using Elem = std::vector<Int>;

  Elem zero() const { return Elem(static_cast<std::size_t>(degree_), Int(0)); }
  /// e += c * x^k for 0 <= k < m (x^k is reduced mod Phi_m via a table).
  void add_power(Elem& e, long k, const Int& c) const;
  Elem mul(const Elem& a, const Elem& b) const;
  static bool is_zero(const Elem& e);

 private:
  long m_;
  int degree_;
  // reduced_[t] = coefficients of x^(degree_ + t) mod Phi_m.
  std::vector<std::vector<Int>> reduced_;
};

/// Sum over all complex characters chi of the group of dim ker A(chi), for A
/// over a finite cyclic-product group.  This equals the nullity of the dense
/// regular-representation expansion but is computed per Galois orbit of
/// characters with exact arithmetic in Z[x]/Phi_m, so it stays feasible for
/// orders far beyond any materializable table.
long long cyclic_product_expanded_nullity(const RingMatrix& a);

}  // namespace l2inv
