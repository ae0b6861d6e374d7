#include "l2inv/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "l2inv/errors.hpp"

namespace l2inv {

Word word_reduce(std::vector<int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw InputError("word letter 0 is not a generator");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word{std::move(out)};
}

Word word_concat(const Word& u, const Word& v) {
  std::vector<int> out = u.letters;
  for (int x : v.letters) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word{std::move(out)};
}

Word word_inverse(const Word& u) {
  std::vector<int> out(u.letters.rbegin(), u.letters.rend());
  for (int& x : out) x = -x;
  return Word{std::move(out)};
}

std::string generator_name(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "g" + std::to_string(index + 1);
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (int x : w.letters) {
    if (!out.empty()) out += ' ';
    out += generator_name(std::abs(x) - 1);
    if (x < 0) out += '-';
  }
  return out;
}

Word word_from_string(const std::string& text, int num_generators) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    bool inverse = false;
    if (tok.size() > 1 && tok.back() == '-') {
      inverse = true;
      tok.pop_back();
    }
    int idx = -1;
    if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'z') {
      idx = tok[0] - 'a';
    } else if (tok.size() > 1 && tok[0] == 'g') {
      try {
        idx = std::stoi(tok.substr(1)) - 1;
      } catch (...) {
        idx = -1;
      }
    }
    if (idx < 0 || idx >= num_generators)
      throw InputError("unknown generator token '" + tok + "' in word '" + text + "'");
    letters.push_back(inverse ? -(idx + 1) : idx + 1);
  }
  return word_reduce(std::move(letters));
}

namespace {

long isqrt_exact(std::size_t n) {
  long r = static_cast<long>(std::lround(std::sqrt(static_cast<double>(n))));
  for (long c = std::max(0L, r - 2); c <= r + 2; ++c)
    if (static_cast<std::size_t>(c) * static_cast<std::size_t>(c) == n) return c;
  return -1;
}

}  // namespace

Group::Ptr Group::finite_table(std::vector<long> mul, long check_bound) {
  long m = isqrt_exact(mul.size());
  if (m <= 0) throw InputError("multiplication table size is not a perfect square");
  for (long v : mul)
    if (v < 0 || v >= m) throw InputError("multiplication table entry out of range");

  auto at = [&](long a, long b) { return mul[static_cast<std::size_t>(a) * m + b]; };

  long identity = -1;
  for (long e = 0; e < m; ++e) {
    bool ok = true;
    for (long x = 0; x < m && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw InputError("multiplication table has no identity element");

  std::vector<long> inv(static_cast<std::size_t>(m), -1);
  for (long a = 0; a < m; ++a) {
    for (long b = 0; b < m; ++b) {
      if (at(a, b) == identity && at(b, a) == identity) {
        inv[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inv[static_cast<std::size_t>(a)] < 0)
      throw InputError("element " + std::to_string(a) + " has no two-sided inverse");
  }

  if (m <= check_bound) {
    for (long a = 0; a < m; ++a)
      for (long b = 0; b < m; ++b)
        for (long c = 0; c < m; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw InputError("multiplication table is not associative at (" + std::to_string(a) +
                             "," + std::to_string(b) + "," + std::to_string(c) + ")");
  }

  bool abelian = true;
  for (long a = 0; a < m && abelian; ++a)
    for (long b = a + 1; b < m && abelian; ++b) abelian = at(a, b) == at(b, a);

  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::Finite;
  g->mul_ = std::move(mul);
  g->inv_ = std::move(inv);
  g->order_ = m;
  g->identity_ = identity;
  g->abelian_ = abelian;
  return g;
}

Group::Ptr Group::cyclic(long k) { return cyclic_product({k}); }

Group::Ptr Group::cyclic_product(std::vector<long> moduli) {
  if (moduli.empty()) throw InputError("cyclic product needs at least one modulus");
  long long order = 1;
  for (long m : moduli) {
    if (m < 1) throw InputError("cyclic product modulus must be >= 1");
    if (order > std::numeric_limits<long long>::max() / m)
      throw InputError("cyclic product order overflows");
    order *= m;
  }
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::Finite;
  g->moduli_ = std::move(moduli);
  g->order_ = static_cast<long>(order);
  g->identity_ = 0;
  g->abelian_ = true;
  return g;
}

Group::Ptr Group::free_abelian(int rank) {
  if (rank < 0) throw InputError("free abelian rank must be >= 0");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::FreeAbelian;
  g->generators_ = rank;
  g->abelian_ = true;
  return g;
}

Group::Ptr Group::finitely_generated(int num_generators, std::string label) {
  if (num_generators < 1) throw InputError("word group needs at least one generator");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::FinitelyGenerated;
  g->generators_ = num_generators;
  g->label_ = std::move(label);
  g->abelian_ = false;
  return g;
}

long long Group::order() const {
  if (!is_finite()) throw DomainError("order() is defined only for finite groups");
  return order_;
}

long Group::mul(long a, long b) const {
  if (has_table()) return mul_[static_cast<std::size_t>(a) * order_ + b];
  // Mixed-radix digitwise addition, least significant modulus first.
  long out = 0, stride = 1;
  for (long m : moduli_) {
    long da = (a / stride) % m, db = (b / stride) % m;
    out += ((da + db) % m) * stride;
    stride *= m;
  }
  return out;
}

long Group::inv(long a) const {
  if (has_table()) return inv_[static_cast<std::size_t>(a)];
  long out = 0, stride = 1;
  for (long m : moduli_) {
    long da = (a / stride) % m;
    out += ((m - da) % m) * stride;
    stride *= m;
  }
  return out;
}

long Group::identity_index() const {
  if (!is_finite()) throw DomainError("identity_index() is defined only for finite groups");
  return identity_;
}

bool Group::operator==(const Group& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case GroupKind::Finite:
      return mul_ == other.mul_ && moduli_ == other.moduli_ && order_ == other.order_;
    case GroupKind::FreeAbelian:
      return generators_ == other.generators_;
    case GroupKind::FinitelyGenerated:
      return generators_ == other.generators_ && label_ == other.label_;
  }
  return false;
}

GroupElement identity_element(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Finite:
      return GroupElement::finite(g.identity_index());
    case GroupKind::FreeAbelian:
      return GroupElement::exponents(std::vector<int>(g.generator_count(), 0));
    case GroupKind::FinitelyGenerated:
      return GroupElement::word(Word{});
  }
  throw InputError("unreachable group kind");
}

GroupElement element_mul(const Group& g, const GroupElement& a, const GroupElement& b) {
  switch (g.kind()) {
    case GroupKind::Finite:
      return GroupElement::finite(g.mul(a.index(), b.index()));
    case GroupKind::FreeAbelian: {
      std::vector<int> e = a.exponents();
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
      return GroupElement::exponents(std::move(e));
    }
    case GroupKind::FinitelyGenerated:
      return GroupElement::word(word_concat(a.word(), b.word()));
  }
  throw InputError("unreachable group kind");
}

GroupElement element_inverse(const Group& g, const GroupElement& a) {
  switch (g.kind()) {
    case GroupKind::Finite:
      return GroupElement::finite(g.inv(a.index()));
    case GroupKind::FreeAbelian: {
      std::vector<int> e = a.exponents();
      for (int& x : e) x = -x;
      return GroupElement::exponents(std::move(e));
    }
    case GroupKind::FinitelyGenerated:
      return GroupElement::word(word_inverse(a.word()));
  }
  throw InputError("unreachable group kind");
}

bool element_is_identity(const Group& g, const GroupElement& a) {
  return a == identity_element(g);
}

GroupElement generator_element(const Group& g, int i) {
  if (i < 0 || i >= g.generator_count())
    throw InputError("generator index " + std::to_string(i) + " out of range");
  if (g.kind() == GroupKind::FreeAbelian) {
    std::vector<int> e(g.generator_count(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return GroupElement::exponents(std::move(e));
  }
  if (g.kind() == GroupKind::FinitelyGenerated)
    return GroupElement::word(Word{{i + 1}});
  throw DomainError("finite groups have no designated generators");
}

void check_element(const Group& g, const GroupElement& a) {
  switch (g.kind()) {
    case GroupKind::Finite:
      if (!a.is_index()) throw InputError("finite group element must be an index");
      if (a.index() < 0 || a.index() >= g.order())
        throw InputError("element index " + std::to_string(a.index()) + " out of range for order " +
                         std::to_string(g.order()));
      return;
    case GroupKind::FreeAbelian:
      if (!a.is_exponents()) throw InputError("free abelian element must be an exponent vector");
      if (static_cast<int>(a.exponents().size()) != g.generator_count())
        throw InputError("exponent vector length does not match group rank");
      return;
    case GroupKind::FinitelyGenerated:
      if (!a.is_word()) throw InputError("word group element must be a word");
      for (int x : a.word().letters)
        if (x == 0 || std::abs(x) > g.generator_count())
          throw InputError("word letter out of range for " + std::to_string(g.generator_count()) +
                           " generators");
      return;
  }
}

std::string element_to_string(const Group& g, const GroupElement& a) {
  switch (g.kind()) {
    case GroupKind::Finite:
      return std::to_string(a.index());
    case GroupKind::FreeAbelian: {
      std::string out = "[";
      for (std::size_t i = 0; i < a.exponents().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a.exponents()[i]);
      }
      return out + "]";
    }
    case GroupKind::FinitelyGenerated:
      return word_to_string(a.word());
  }
  return "";
}

}  // namespace l2inv
