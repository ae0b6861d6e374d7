#include "l2inv/chain_complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "l2inv/errors.hpp"

namespace l2inv {

const RingMatrix& ChainComplex::boundary(int p) const {
  if (p < 1 || p > top_degree()) throw InputError("no boundary in degree " + std::to_string(p));
  return boundaries[static_cast<std::size_t>(p - 1)];
}

ValidationReport validate(const ChainComplex& c) {
  ValidationReport rep;
  if (!c.group) {
    rep.ok = false;
    rep.message = "complex has no group";
    return rep;
  }
  if (c.ranks.empty()) {
    rep.ok = false;
    rep.message = "complex needs at least one degree";
    return rep;
  }
  for (int r : c.ranks)
    if (r < 0) {
      rep.ok = false;
      rep.message = "negative rank";
      return rep;
    }
  if (c.boundaries.size() + 1 != c.ranks.size()) {
    rep.ok = false;
    rep.message = "expected " + std::to_string(c.ranks.size() - 1) + " boundaries, got " +
                  std::to_string(c.boundaries.size());
    return rep;
  }
  for (std::size_t p = 0; p < c.boundaries.size(); ++p) {
    const RingMatrix& d = c.boundaries[p];
    if (*d.group() != *c.group) {
      rep.ok = false;
      rep.message = "boundary " + std::to_string(p + 1) + " lives over a different group";
      return rep;
    }
    if (d.rows() != c.ranks[p] || d.cols() != c.ranks[p + 1]) {
      rep.ok = false;
      rep.degree = static_cast<int>(p + 1);
      rep.message = "boundary " + std::to_string(p + 1) + " has shape " +
                    std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + ", expected " +
                    std::to_string(c.ranks[p]) + "x" + std::to_string(c.ranks[p + 1]);
      return rep;
    }
  }
  if (c.group->kind() == GroupKind::FinitelyGenerated) {
    // No computable ring product without solving the word problem of an
    // unknown quotient; shapes are all that can be certified here.
    rep.composition_checked = false;
    rep.message = "d o d = 0 not checkable over a word group";
    return rep;
  }
  for (std::size_t p = 1; p < c.boundaries.size(); ++p) {
    RingMatrix prod = c.boundaries[p - 1] * c.boundaries[p];
    for (int i = 0; i < prod.rows(); ++i)
      for (int j = 0; j < prod.cols(); ++j)
        if (!prod.at(i, j).is_zero()) {
          rep.ok = false;
          rep.degree = static_cast<int>(p + 1);
          rep.row = i;
          rep.col = j;
          rep.message = "d_" + std::to_string(p) + " d_" + std::to_string(p + 1) +
                        " is nonzero at (" + std::to_string(i) + "," + std::to_string(j) +
                        "): " + prod.at(i, j).to_string();
          return rep;
        }
  }
  return rep;
}

RingMatrix laplacian(const ChainComplex& c, int p) {
  if (p < 0 || p > c.top_degree())
    throw InputError("no degree " + std::to_string(p) + " in this complex");
  if (c.group->kind() == GroupKind::FinitelyGenerated)
    throw DomainError("Laplacian over a word group is not computable; push to a quotient first");
  const int n = c.ranks[static_cast<std::size_t>(p)];
  RingMatrix delta(c.group, n, n);
  if (p >= 1) {
    const RingMatrix& d = c.boundary(p);
    delta = delta + adjoint(d) * d;
  }
  if (p + 1 <= c.top_degree()) {
    const RingMatrix& d = c.boundary(p + 1);
    delta = delta + d * adjoint(d);
  }
  return delta;
}

RingElem fox_derivative(const Group::Ptr& word_group, const Word& r, int i) {
  if (word_group->kind() != GroupKind::FinitelyGenerated)
    throw InputError("Fox derivatives live over word groups");
  RingElem out(word_group);
  Word prefix;
  for (int x : r.letters) {
    if (x == i + 1) {
      out.add_term(GroupElement::word(prefix), 1);
    } else if (x == -(i + 1)) {
      out.add_term(GroupElement::word(word_concat(prefix, Word{{x}})), -1);
    }
    prefix = word_concat(prefix, Word{{x}});
  }
  return out;
}

bool presentation_is_free_abelian(const Presentation& p) {
  const int n = p.num_generators;
  if (n == 1 && p.relators.empty()) return true;
  if (static_cast<std::size_t>(n * (n - 1) / 2) != p.relators.size() || p.relators.empty())
    return false;
  std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
  for (const Word& r : p.relators) {
    if (r.letters.size() != 4) return false;
    const int a = r.letters[0], b = r.letters[1];
    if (a <= 0 || b <= 0 || a == b) return false;
    if (r.letters[2] != -a || r.letters[3] != -b) return false;
    const int lo = std::min(a, b) - 1, hi = std::max(a, b) - 1;
    if (seen[static_cast<std::size_t>(lo * n + hi)]) return false;
    seen[static_cast<std::size_t>(lo * n + hi)] = 1;
  }
  return true;
}

namespace {

GroupElement abelianized(const Word& w, int n) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int x : w.letters) e[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  return GroupElement::exponents(std::move(e));
}

RingElem abelianized(const RingElem& a, const Group::Ptr& target) {
  RingElem out(target);
  for (const auto& [g, c] : a.terms())
    out.add_term(abelianized(g.word(), target->generator_count()), c);
  return out;
}

}  // namespace

ChainComplex presentation_complex(const Presentation& p) {
  if (p.num_generators < 1) throw InputError("presentation needs at least one generator");
  const int n = p.num_generators;
  const int m = static_cast<int>(p.relators.size());
  Group::Ptr free = Group::finitely_generated(n);
  for (const Word& r : p.relators) check_element(*free, GroupElement::word(r));

  RingMatrix d1(free, 1, n);
  for (int i = 0; i < n; ++i) {
    d1.at(0, i).add_term(GroupElement::word(Word{{i + 1}}), 1);
    d1.at(0, i).add_term(GroupElement::word(Word{}), -1);
  }
  RingMatrix d2(free, n, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) d2.at(i, j) = fox_derivative(free, p.relators[j], i);

  ChainComplex c;
  if (presentation_is_free_abelian(p)) {
    Group::Ptr ab = Group::free_abelian(n);
    RingMatrix a1(ab, 1, n), a2(ab, n, m);
    for (int i = 0; i < n; ++i) a1.at(0, i) = abelianized(d1.at(0, i), ab);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < n; ++i) a2.at(i, j) = abelianized(d2.at(i, j), ab);
    c.group = ab;
    c.ranks = {1, n};
    c.boundaries = {std::move(a1)};
    if (m > 0) {
      c.ranks.push_back(m);
      c.boundaries.push_back(std::move(a2));
    }
    return c;
  }

  c.group = free;
  c.ranks = {1, n};
  c.boundaries = {std::move(d1)};
  if (m > 0) {
    c.ranks.push_back(m);
    c.boundaries.push_back(std::move(d2));
  }
  return c;
}

ChainComplex torus_complex(int n) {
  if (n < 0) throw InputError("torus dimension must be >= 0");
  Group::Ptr g = Group::free_abelian(n);
  ChainComplex c;
  c.group = g;

  // Cells of degree p are p-subsets of {0..n-1}, listed lexicographically.
  std::vector<std::vector<std::vector<int>>> cells(static_cast<std::size_t>(n) + 1);
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) s.push_back(v);
    cells[s.size()].push_back(std::move(s));
  }
  for (auto& level : cells) std::sort(level.begin(), level.end());

  for (int p = 0; p <= n; ++p) c.ranks.push_back(static_cast<int>(cells[static_cast<std::size_t>(p)].size()));

  auto cell_index = [&](int p, const std::vector<int>& s) {
    const auto& level = cells[static_cast<std::size_t>(p)];
    return static_cast<int>(std::lower_bound(level.begin(), level.end(), s) - level.begin());
  };

  for (int p = 1; p <= n; ++p) {
    RingMatrix d(g, c.ranks[static_cast<std::size_t>(p - 1)], c.ranks[static_cast<std::size_t>(p)]);
    const auto& level = cells[static_cast<std::size_t>(p)];
    for (int j = 0; j < static_cast<int>(level.size()); ++j) {
      const auto& s = level[static_cast<std::size_t>(j)];
      for (int l = 0; l < p; ++l) {
        std::vector<int> t = s;
        const int v = t[static_cast<std::size_t>(l)];
        t.erase(t.begin() + l);
        const int sign = l % 2 == 0 ? 1 : -1;
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(v)] = 1;
        RingElem& entry = d.at(cell_index(p - 1, t), j);
        entry.add_term(GroupElement::exponents(std::move(e)), sign);
        entry.add_term(identity_element(*g), -sign);
      }
    }
    c.boundaries.push_back(std::move(d));
  }
  return c;
}

ChainComplex wedge_complex(int k) {
  if (k < 1) throw InputError("wedge needs at least one circle");
  ChainComplex c;
  if (k == 1) {
    c.group = Group::free_abelian(1);
    RingMatrix d(c.group, 1, 1);
    d.at(0, 0).add_term(GroupElement::exponents({1}), 1);
    d.at(0, 0).add_term(identity_element(*c.group), -1);
    c.ranks = {1, 1};
    c.boundaries = {std::move(d)};
    return c;
  }
  c.group = Group::finitely_generated(k);
  RingMatrix d(c.group, 1, k);
  for (int i = 0; i < k; ++i) {
    d.at(0, i).add_term(GroupElement::word(Word{{i + 1}}), 1);
    d.at(0, i).add_term(GroupElement::word(Word{}), -1);
  }
  c.ranks = {1, k};
  c.boundaries = {std::move(d)};
  return c;
}

ChainComplex point_complex() {
  ChainComplex c;
  c.group = Group::cyclic(1);
  c.ranks = {1};
  return c;
}

ChainComplex push_complex(const ChainComplex& c, const QuotientHom& q) {
  if (*c.group != *q.source()) throw InputError("complex group does not match hom source");
  ChainComplex out;
  out.group = q.target();
  out.ranks = c.ranks;
  out.boundaries.reserve(c.boundaries.size());
  for (const RingMatrix& d : c.boundaries) out.boundaries.push_back(push_to_quotient(d, q));
  return out;
}

ChainComplex rescale_basis(const ChainComplex& c, const std::vector<std::vector<BasisUnit>>& units) {
  if (units.size() != c.ranks.size())
    throw InputError("rescale needs one unit list per degree");
  for (std::size_t p = 0; p < units.size(); ++p)
    if (static_cast<int>(units[p].size()) != c.ranks[p])
      throw InputError("rescale needs one unit per cell in degree " + std::to_string(p));
  ChainComplex out;
  out.group = c.group;
  out.ranks = c.ranks;
  out.boundaries.reserve(c.boundaries.size());
  for (std::size_t p = 1; p < c.ranks.size(); ++p) {
    const RingMatrix& d = c.boundaries[p - 1];
    RingMatrix nd(c.group, d.rows(), d.cols());
    for (int i = 0; i < d.rows(); ++i) {
      const BasisUnit& u = units[p - 1][static_cast<std::size_t>(i)];
      const GroupElement ui = element_inverse(*c.group, u.element);
      for (int j = 0; j < d.cols(); ++j) {
        const BasisUnit& v = units[p][static_cast<std::size_t>(j)];
        nd.at(i, j) = scale_right(scale_left(ui, u.sign, d.at(i, j)), v.element, v.sign);
      }
    }
    out.boundaries.push_back(std::move(nd));
  }
  return out;
}

ChainComplex complex_direct_sum(const ChainComplex& a, const ChainComplex& b) {
  if (*a.group != *b.group) throw InputError("direct sum needs a common group");
  ChainComplex out;
  out.group = a.group;
  const std::size_t top = std::max(a.ranks.size(), b.ranks.size());
  auto rank_of = [](const ChainComplex& c, std::size_t p) {
    return p < c.ranks.size() ? c.ranks[p] : 0;
  };
  for (std::size_t p = 0; p < top; ++p) out.ranks.push_back(rank_of(a, p) + rank_of(b, p));
  for (std::size_t p = 1; p < top; ++p) {
    RingMatrix d(out.group, out.ranks[p - 1], out.ranks[p]);
    if (p < a.ranks.size()) {
      const RingMatrix& da = a.boundaries[p - 1];
      for (int i = 0; i < da.rows(); ++i)
        for (int j = 0; j < da.cols(); ++j) d.at(i, j) = da.at(i, j);
    }
    if (p < b.ranks.size()) {
      const RingMatrix& db = b.boundaries[p - 1];
      for (int i = 0; i < db.rows(); ++i)
        for (int j = 0; j < db.cols(); ++j)
          d.at(rank_of(a, p - 1) + i, rank_of(a, p) + j) = db.at(i, j);
    }
    out.boundaries.push_back(std::move(d));
  }
  return out;
}

RationalComplex finite_cover_complex(const ChainComplex& c) {
  if (!c.group->is_finite()) throw DomainError("finite cover needs a finite group");
  const long m = static_cast<long>(c.group->order());
  RationalComplex out;
  for (int r : c.ranks) out.ranks.push_back(static_cast<int>(r * m));
  for (const RingMatrix& d : c.boundaries) out.boundaries.push_back(regular_representation(d));
  return out;
}

std::vector<long> cover_betti(const RationalComplex& c) {
  const std::size_t degrees = c.ranks.size();
  std::vector<int> ranks(degrees + 1, 0);  // ranks[p] = rank of d_p, d_0 = d_{top+1} = 0
  for (std::size_t p = 1; p <= c.boundaries.size(); ++p)
    ranks[p] = matrix_rank(c.boundaries[p - 1]);
  std::vector<long> betti(degrees);
  for (std::size_t p = 0; p < degrees; ++p)
    betti[p] = c.ranks[p] - ranks[p] - (p + 1 < ranks.size() ? ranks[p + 1] : 0);
  return betti;
}

long component_count(const RationalComplex& c) {
  if (c.ranks.empty()) return 0;
  const long v = c.ranks[0];
  std::vector<long> parent(static_cast<std::size_t>(v));
  std::iota(parent.begin(), parent.end(), 0L);
  std::function<long(long)> find = [&](long x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  if (!c.boundaries.empty()) {
    const QMatrix& d1 = c.boundaries[0];
    const std::size_t cols = d1.empty() ? 0 : d1[0].size();
    for (std::size_t j = 0; j < cols; ++j) {
      long first = -1;
      for (long i = 0; i < v; ++i) {
        if (d1[static_cast<std::size_t>(i)][j] == 0) continue;
        if (first < 0)
          first = i;
        else
          parent[static_cast<std::size_t>(find(i))] = find(first);
      }
    }
  }
  long components = 0;
  for (long i = 0; i < v; ++i)
    if (find(i) == i) ++components;
  return components;
}

}  // namespace l2inv
