#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l2inv/exact_linalg.hpp"
#include "l2inv/group_ring.hpp"

namespace l2inv {

/// Finite free chain complex over one group ring.  ranks[p] is the number of
/// free generators in degree p; boundaries[p-1] is d_p : C_p -> C_{p-1} with
/// shape ranks[p-1] x ranks[p].
struct ChainComplex {
  Group::Ptr group;
  std::vector<int> ranks;
  std::vector<RingMatrix> boundaries;

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
  const RingMatrix& boundary(int p) const;  // d_p, 1 <= p <= top
};

struct ValidationReport {
  bool ok = true;
  /// False when the group admits no computable product (word groups), in
  /// which case only shapes were checked.
  bool composition_checked = true;
  std::string message;
  int degree = -1, row = -1, col = -1;
};

/// Shape coherence plus d o d = 0 wherever products are computable.
ValidationReport validate(const ChainComplex& c);

/// Combinatorial Laplacian in the chain convention:
///   Delta_p = d_p^* d_p + d_{p+1} d_{p+1}^*,
/// with differentials missing at either end treated as zero.
RingMatrix laplacian(const ChainComplex& c, int p);

struct Presentation {
  int num_generators = 0;
  std::vector<Word> relators;
};

/// Left Fox derivative d(r)/d(g_i), an element of the free-carrier group
/// ring: d(uv)/dg = du/dg + u dv/dg, d(g_i)/dg_j = delta_ij,
/// d(g_i^-1)/dg_j = -delta_ij g_i^-1.
RingElem fox_derivative(const Group::Ptr& word_group, const Word& r, int i);

/// Two-complex of a presentation: ranks (1, n, #relators), d_1 column i is
/// (g_i - 1), d_2(i,j) the Fox derivative of relator j by generator i.
/// Presentations recognized as free abelian (one generator and no relators,
/// or exactly the pairwise commutators of the generators) are abelianized so
/// the exact backends apply; anything else stays over the word group and is
/// usable after push_to_quotient.
ChainComplex presentation_complex(const Presentation& p);

/// Detects the free abelian case described above.
bool presentation_is_free_abelian(const Presentation& p);

/// Koszul-style tensor complex of the n-torus: ranks C(n, p), cells indexed
/// by p-subsets of the circle factors, boundary with alternating signs.
ChainComplex torus_complex(int n);

/// Wedge of k circles: ranks (1, k).  k = 1 is the circle, built over
/// FreeAbelian(1); k >= 2 lives over the free group on k generators.
ChainComplex wedge_complex(int k);

/// Single 0-cell over the trivial group.
ChainComplex point_complex();

/// Same shapes with every boundary entry pushed along q.
ChainComplex push_complex(const ChainComplex& c, const QuotientHom& q);

/// Diagonal change of basis: cell i of degree p is replaced by
/// (sign * g) . cell.  units[p] lists one (element, sign) per cell of degree
/// p.  Dimension data of any backend must be invariant under this.
struct BasisUnit {
  GroupElement element;
  int sign = 1;
};
ChainComplex rescale_basis(const ChainComplex& c, const std::vector<std::vector<BasisUnit>>& units);

ChainComplex complex_direct_sum(const ChainComplex& a, const ChainComplex& b);

/// Ordinary rational chain complex of the finite cover: each boundary is
/// replaced by its regular-representation expansion, so degree p has
/// |G| * ranks[p] cells.
struct RationalComplex {
  std::vector<int> ranks;
  std::vector<QMatrix> boundaries;
};
RationalComplex finite_cover_complex(const ChainComplex& c);

/// Ordinary Betti numbers b_p = dim ker d_p - rank d_{p+1} over Q.
std::vector<long> cover_betti(const RationalComplex& c);

/// Connected components of the 1-skeleton of a rational complex (0-cells
/// joined whenever a 1-cell's boundary column touches both), via union-find.
/// Independent of any rank computation; used to cross-check b_0.
long component_count(const RationalComplex& c);

}  // namespace l2inv
