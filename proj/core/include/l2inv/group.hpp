#pragma once

#include <compare>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace l2inv {

enum class GroupKind { Finite, FreeAbelian, FinitelyGenerated };

/// Freely reduced word in abstract generators.  Letter +(i+1) is generator i,
/// letter -(i+1) its inverse; the empty word is the identity.
struct Word {
  std::vector<int> letters;

  auto operator<=>(const Word&) const = default;
  bool empty() const { return letters.empty(); }
};

Word word_reduce(std::vector<int> letters);
Word word_concat(const Word& u, const Word& v);
Word word_inverse(const Word& u);

/// Renders "a b- a" style text (empty string for the identity) and parses it
/// back.  Generators beyond 'z' are written g27, g28, ...
std::string word_to_string(const Word& w);
std::string generator_name(int index);
Word word_from_string(const std::string& text, int num_generators);

/// Immutable group descriptor shared by ring elements and matrices.
///
/// Finite groups come in two storage forms with identical semantics: an
/// explicit multiplication table, or a product of cyclic groups Z/m_1 x ...
/// x Z/m_r whose elements are mixed-radix indices.  The product form exists
/// so that large abelian quotients (order beyond any sane table) stay usable.
/// FreeAbelian(n) elements are exponent vectors; FinitelyGenerated(n) is an
/// opaque n-generator group whose elements are words and which supports no
/// internal equality test (only homomorphisms into finite groups).
class Group {
 public:
  using Ptr = std::shared_ptr<const Group>;

  /// Explicit table, elements 0..m-1, `mul` row-major of size m*m.  Group
  /// laws (identity, inverses, associativity) are verified for m <= check_bound.
  static Ptr finite_table(std::vector<long> mul, long check_bound = 512);
  static Ptr cyclic(long k);
  static Ptr cyclic_product(std::vector<long> moduli);
  static Ptr free_abelian(int rank);
  static Ptr finitely_generated(int num_generators, std::string label = "F");

  GroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == GroupKind::Finite; }
  bool has_table() const { return is_finite() && !mul_.empty(); }
  bool is_cyclic_product() const { return is_finite() && mul_.empty(); }
  /// True when multiplication is commutative (always for cyclic products and
  /// free abelian groups, checked once for tables, false for word groups).
  bool is_abelian() const { return abelian_; }

  long long order() const;
  long mul(long a, long b) const;
  long inv(long a) const;
  long identity_index() const;
  const std::vector<long>& moduli() const { return moduli_; }

  /// FreeAbelian rank or FinitelyGenerated generator count.
  int generator_count() const { return generators_; }
  const std::string& label() const { return label_; }

  bool operator==(const Group& other) const;
  bool operator!=(const Group& other) const { return !(*this == other); }

 private:
  Group() = default;

  GroupKind kind_ = GroupKind::Finite;
  // Finite, table form.
  std::vector<long> mul_;
  std::vector<long> inv_;
  long order_ = 0;
  long identity_ = 0;
  // Finite, cyclic product form.
  std::vector<long> moduli_;
  // Infinite forms.
  int generators_ = 0;
  std::string label_;
  bool abelian_ = false;
};

/// Element of a specific group: finite index, exponent vector, or word.
/// Ordered so elements can key sorted containers deterministically.
class GroupElement {
 public:
  GroupElement() : v_(0L) {}
  static GroupElement finite(long index) { return GroupElement(Repr(index)); }
  static GroupElement exponents(std::vector<int> e) { return GroupElement(Repr(std::move(e))); }
  static GroupElement word(Word w) { return GroupElement(Repr(std::move(w))); }

  bool is_index() const { return v_.index() == 0; }
  bool is_exponents() const { return v_.index() == 1; }
  bool is_word() const { return v_.index() == 2; }
  long index() const { return std::get<0>(v_); }
  const std::vector<int>& exponents() const { return std::get<1>(v_); }
  const Word& word() const { return std::get<2>(v_); }

  auto operator<=>(const GroupElement&) const = default;

 private:
  using Repr = std::variant<long, std::vector<int>, Word>;
  explicit GroupElement(Repr v) : v_(std::move(v)) {}
  Repr v_;
};

/// Identity of the given group in the matching element representation.
GroupElement identity_element(const Group& g);
/// Group product / inverse.  Word groups are supported here: concatenation
/// with free reduction is exact on the free carrier (the representation all
/// word elements live in before any quotient is applied).
GroupElement element_mul(const Group& g, const GroupElement& a, const GroupElement& b);
GroupElement element_inverse(const Group& g, const GroupElement& a);
bool element_is_identity(const Group& g, const GroupElement& a);
/// Generator i as an element of g (FreeAbelian or FinitelyGenerated).
GroupElement generator_element(const Group& g, int i);
/// Sanity check that the element representation matches the group kind and
/// any index/rank bounds.  Throws InputError when it does not.
void check_element(const Group& g, const GroupElement& a);

std::string element_to_string(const Group& g, const GroupElement& a);

}  // namespace l2inv
