#include "l2inv/group_ring.hpp"

#include <cstdlib>
#include <sstream>

#include "l2inv/errors.hpp"

namespace l2inv {

namespace {

void require_same_group(const Group::Ptr& a, const Group::Ptr& b, const char* op) {
  if (a.get() != b.get() && *a != *b)
    throw InputError(std::string(op) + ": operands live over different groups");
}

void require_multipliable(const Group& g) {
  if (g.kind() == GroupKind::FinitelyGenerated)
    throw DomainError("convolution over a word group is not computable (unknown relations)");
}

}  // namespace

RingElem::RingElem(Group::Ptr group) : group_(std::move(group)) {
  if (!group_) throw InputError("ring element needs a group");
}

RingElem RingElem::unit(Group::Ptr group, const GroupElement& g, const Rational& c) {
  RingElem e(std::move(group));
  check_element(*e.group_, g);
  e.add_term(g, c);
  return e;
}

RingElem RingElem::one(Group::Ptr group) {
  GroupElement id = identity_element(*group);
  return unit(std::move(group), id, 1);
}

void RingElem::add_term(const GroupElement& g, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational RingElem::coeff(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational RingElem::identity_coefficient() const { return coeff(identity_element(*group_)); }

RingElem RingElem::operator+(const RingElem& other) const {
  require_same_group(group_, other.group_, "add");
  RingElem out = *this;
  for (const auto& [g, c] : other.terms_) out.add_term(g, c);
  return out;
}

RingElem RingElem::operator-(const RingElem& other) const {
  require_same_group(group_, other.group_, "subtract");
  RingElem out = *this;
  for (const auto& [g, c] : other.terms_) out.add_term(g, -c);
  return out;
}

RingElem RingElem::operator-() const {
  RingElem out(group_);
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
  return out;
}

RingElem RingElem::operator*(const Rational& scalar) const {
  RingElem out(group_);
  if (scalar == 0) return out;
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, c * scalar);
  return out;
}

RingElem RingElem::operator*(const RingElem& other) const {
  require_same_group(group_, other.group_, "multiply");
  require_multipliable(*group_);
  RingElem out(group_);
  for (const auto& [g, c] : terms_)
    for (const auto& [h, d] : other.terms_) out.add_term(element_mul(*group_, g, h), c * d);
  return out;
}

bool RingElem::operator==(const RingElem& other) const {
  require_same_group(group_, other.group_, "compare");
  return terms_ == other.terms_;
}

std::string RingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << rational_to_string(c) << ")*" << element_to_string(*group_, g);
  }
  return out.str();
}

RingElem star(const RingElem& a) {
  RingElem out(a.group());
  for (const auto& [g, c] : a.terms()) out.add_term(element_inverse(*a.group(), g), c);
  return out;
}

RingElem scale_left(const GroupElement& g, int sign, const RingElem& a) {
  if (sign != 1 && sign != -1) throw InputError("unit sign must be +1 or -1");
  RingElem out(a.group());
  for (const auto& [h, c] : a.terms())
    out.add_term(element_mul(*a.group(), g, h), sign == 1 ? c : -c);
  return out;
}

RingElem scale_right(const RingElem& a, const GroupElement& g, int sign) {
  if (sign != 1 && sign != -1) throw InputError("unit sign must be +1 or -1");
  RingElem out(a.group());
  for (const auto& [h, c] : a.terms())
    out.add_term(element_mul(*a.group(), h, g), sign == 1 ? c : -c);
  return out;
}

RingElem free_carrier_mul(const RingElem& a, const RingElem& b) {
  require_same_group(a.group(), b.group(), "free carrier multiply");
  RingElem out(a.group());
  for (const auto& [g, c] : a.terms())
    for (const auto& [h, d] : b.terms()) out.add_term(element_mul(*a.group(), g, h), c * d);
  return out;
}

RingMatrix::RingMatrix(Group::Ptr group, int rows, int cols)
    : group_(std::move(group)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be non-negative");
  entries_.assign(static_cast<std::size_t>(rows) * cols, RingElem(group_));
}

RingMatrix RingMatrix::identity(Group::Ptr group, int n) {
  return scalar(group, n, RingElem::one(group));
}

RingMatrix RingMatrix::scalar(Group::Ptr group, int n, const RingElem& diag) {
  RingMatrix out(std::move(group), n, n);
  for (int i = 0; i < n; ++i) out.at(i, i) = diag;
  return out;
}

RingElem& RingMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw InputError("matrix index out of range");
  return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

const RingElem& RingMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw InputError("matrix index out of range");
  return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

RingMatrix RingMatrix::operator+(const RingMatrix& other) const {
  require_same_group(group_, other.group_, "matrix add");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InputError("matrix add: shapes differ");
  RingMatrix out(group_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = entries_[k] + other.entries_[k];
  return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& other) const {
  require_same_group(group_, other.group_, "matrix subtract");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InputError("matrix subtract: shapes differ");
  RingMatrix out(group_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = entries_[k] - other.entries_[k];
  return out;
}

RingMatrix RingMatrix::operator*(const RingMatrix& other) const {
  require_same_group(group_, other.group_, "matrix multiply");
  if (cols_ != other.rows_)
    throw InputError("matrix multiply: inner dimensions differ (" + std::to_string(cols_) +
                     " vs " + std::to_string(other.rows_) + ")");
  RingMatrix out(group_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const RingElem& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const RingElem& bkj = other.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) = out.at(i, j) + aik * bkj;
      }
    }
  return out;
}

bool RingMatrix::operator==(const RingMatrix& other) const {
  require_same_group(group_, other.group_, "matrix compare");
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

bool RingMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

RingMatrix adjoint(const RingMatrix& a) {
  RingMatrix out(a.group(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = star(a.at(i, j));
  return out;
}

Rational trace_gamma(const RingMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("trace needs a square matrix");
  Rational t = 0;
  for (int i = 0; i < a.rows(); ++i) t += a.at(i, i).identity_coefficient();
  return t;
}

Rational trace_gamma(const RingElem& a) { return a.identity_coefficient(); }

RingMatrix direct_sum(const RingMatrix& a, const RingMatrix& b) {
  require_same_group(a.group(), b.group(), "direct sum");
  RingMatrix out(a.group(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

QuotientHom::QuotientHom(Group::Ptr source, Group::Ptr target, std::vector<long> generator_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
  if (!source_ || !target_) throw InputError("quotient hom needs source and target groups");
  if (source_->is_finite())
    throw InputError("quotient hom source must be free abelian or finitely generated");
  if (!target_->is_finite()) throw InputError("quotient hom target must be finite");
  if (static_cast<int>(images_.size()) != source_->generator_count())
    throw InputError("quotient hom needs one image per source generator");
  for (long v : images_)
    if (v < 0 || v >= target_->order())
      throw InputError("generator image " + std::to_string(v) + " out of range");
  if (source_->kind() == GroupKind::FreeAbelian && !target_->is_abelian()) {
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t j = i + 1; j < images_.size(); ++j)
        if (target_->mul(images_[i], images_[j]) != target_->mul(images_[j], images_[i]))
          throw InputError("free abelian source needs commuting generator images");
  }
}

namespace {

long power_index(const Group& g, long base, long e) {
  if (e < 0) {
    base = g.inv(base);
    e = -e;
  }
  long acc = g.identity_index();
  while (e > 0) {
    if (e & 1) acc = g.mul(acc, base);
    base = g.mul(base, base);
    e >>= 1;
  }
  return acc;
}

}  // namespace

long QuotientHom::map_index(const GroupElement& e) const {
  check_element(*source_, e);
  const Group& t = *target_;
  if (source_->kind() == GroupKind::FreeAbelian) {
    long acc = t.identity_index();
    for (std::size_t i = 0; i < images_.size(); ++i)
      acc = t.mul(acc, power_index(t, images_[i], e.exponents()[i]));
    return acc;
  }
  long acc = t.identity_index();
  for (int x : e.word().letters) {
    long img = images_[static_cast<std::size_t>(std::abs(x) - 1)];
    acc = t.mul(acc, x > 0 ? img : t.inv(img));
  }
  return acc;
}

RingElem push_to_quotient(const RingElem& a, const QuotientHom& q) {
  if (*a.group() != *q.source())
    throw InputError("push_to_quotient: element group does not match hom source");
  RingElem out(q.target());
  for (const auto& [g, c] : a.terms()) out.add_term(q.map(g), c);
  return out;
}

RingMatrix push_to_quotient(const RingMatrix& a, const QuotientHom& q) {
  if (*a.group() != *q.source())
    throw InputError("push_to_quotient: matrix group does not match hom source");
  RingMatrix out(q.target(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = push_to_quotient(a.at(i, j), q);
  return out;
}

}  // namespace l2inv
