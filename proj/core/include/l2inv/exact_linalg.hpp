#pragma once

#include <vector>

#include "l2inv/group_ring.hpp"
#include "l2inv/rational.hpp"

namespace l2inv {

using QMatrix = std::vector<std::vector<Rational>>;
using ZMatrix = std::vector<std::vector<Int>>;

/// Exact rank over Q by fraction-free (Bareiss) elimination.  The integer
/// overload pivots on the smallest nonzero magnitude to limit entry growth;
/// the rational overload clears row denominators first.  Both consume their
/// argument.
int matrix_rank(ZMatrix m);
int matrix_rank(QMatrix m);

/// cols - rank.
long matrix_nullity(QMatrix m);

/// Left regular representation of a matrix over a finite group with element
/// count |G|: each entry becomes the |G| x |G| block of the convolution
/// operator, so the result is (|G| rows) x (|G| cols) over Q.  Works for both
/// finite storage forms but materializes the full dense matrix, so it is only
/// for orders where |G| * max(rows, cols) stays at desk scale.
QMatrix regular_representation(const RingMatrix& a);

/// Nullity of regular_representation(a) without going through the dense
/// expansion when the group is a cyclic product (character-by-character,
/// see cyclotomic.hpp); falls back to the dense route for table groups.
long long expanded_nullity(const RingMatrix& a);

}  // namespace l2inv
