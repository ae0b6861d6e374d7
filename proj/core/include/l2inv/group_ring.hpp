#pragma once

#include <map>
#include <vector>

#include "l2inv/group.hpp"
#include "l2inv/rational.hpp"

namespace l2inv {

/// Sparse formal sum  sum_g c_g * g  with exact rational coefficients.
/// Terms with coefficient zero are never stored, so equality is map equality.
class RingElem {
 public:
  explicit RingElem(Group::Ptr group);
  static RingElem unit(Group::Ptr group, const GroupElement& g, const Rational& c = 1);
  static RingElem one(Group::Ptr group);

  const Group::Ptr& group() const { return group_; }
  const std::map<GroupElement, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  void add_term(const GroupElement& g, const Rational& c);
  Rational coeff(const GroupElement& g) const;
  Rational identity_coefficient() const;

  RingElem operator+(const RingElem& other) const;
  RingElem operator-(const RingElem& other) const;
  RingElem operator-() const;
  RingElem operator*(const Rational& scalar) const;
  /// Convolution product.  Defined for finite and free abelian groups;
  /// throws DomainError on word groups, where products of unknown-relation
  /// quotients are not computable.
  RingElem operator*(const RingElem& other) const;
  bool operator==(const RingElem& other) const;
  bool operator!=(const RingElem& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  Group::Ptr group_;
  std::map<GroupElement, Rational> terms_;
};

/// Star involution: sum c_g g  ->  sum c_g g^{-1} (coefficients are rational,
/// so conjugation is the identity on them).
RingElem star(const RingElem& a);

/// (sign * g) * a and a * (sign * g).  Multiplying by a single signed group
/// element permutes the support, so this stays exact on word groups too and
/// is what diagonal basis changes are made of.
RingElem scale_left(const GroupElement& g, int sign, const RingElem& a);
RingElem scale_right(const RingElem& a, const GroupElement& g, int sign);

/// Convolution in the free group carrying a word-group descriptor:
/// concatenation with free reduction.  Sound only when the descriptor's
/// group really is free (or free abelian); quotient relations are ignored.
RingElem free_carrier_mul(const RingElem& a, const RingElem& b);

/// Dense matrix over one group ring.
class RingMatrix {
 public:
  RingMatrix(Group::Ptr group, int rows, int cols);
  static RingMatrix identity(Group::Ptr group, int n);
  static RingMatrix scalar(Group::Ptr group, int n, const RingElem& diag);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Group::Ptr& group() const { return group_; }
  RingElem& at(int i, int j);
  const RingElem& at(int i, int j) const;

  RingMatrix operator+(const RingMatrix& other) const;
  RingMatrix operator-(const RingMatrix& other) const;
  RingMatrix operator*(const RingMatrix& other) const;
  bool operator==(const RingMatrix& other) const;
  bool operator!=(const RingMatrix& other) const { return !(*this == other); }
  bool is_zero() const;

 private:
  Group::Ptr group_;
  int rows_, cols_;
  std::vector<RingElem> entries_;  // row-major
};

/// Conjugate transpose: (A*)_{ij} = star(A_{ji}).
RingMatrix adjoint(const RingMatrix& a);

/// Sum over the diagonal of the identity-element coefficients.  This is the
/// normalized trace with tr(1x1 identity) = 1.
Rational trace_gamma(const RingMatrix& a);
Rational trace_gamma(const RingElem& a);

RingMatrix direct_sum(const RingMatrix& a, const RingMatrix& b);

/// Surjection data onto a finite group: one image per source generator.
/// For free abelian sources the images must commute; word-group sources
/// accept any images (whether relators die in the target is the caller's
/// responsibility and is what pushed-complex validation detects).
class QuotientHom {
 public:
  QuotientHom(Group::Ptr source, Group::Ptr target, std::vector<long> generator_images);

  const Group::Ptr& source() const { return source_; }
  const Group::Ptr& target() const { return target_; }
  const std::vector<long>& generator_images() const { return images_; }

  long map_index(const GroupElement& e) const;
  GroupElement map(const GroupElement& e) const { return GroupElement::finite(map_index(e)); }

 private:
  Group::Ptr source_;
  Group::Ptr target_;
  std::vector<long> images_;
};

RingElem push_to_quotient(const RingElem& a, const QuotientHom& q);
RingMatrix push_to_quotient(const RingMatrix& a, const QuotientHom& q);

}  // namespace l2inv
