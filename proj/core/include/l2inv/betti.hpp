#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l2inv/chain_complex.hpp"
#include "l2inv/dimension.hpp"

namespace l2inv {

enum class Backend { Finite, AbelianGeneric, AbelianSampled, Tower };

Backend backend_from_string(const std::string& name);
std::string backend_to_string(Backend b);

struct BettiOptions {
  Backend backend = Backend::Finite;
  std::optional<QuotientTower> tower;  // required by Backend::Tower
  SampleOptions sample;
  int tail_window = 3;
  int jobs = 1;
};

struct BettiFlags {
  bool b0_expected_zero = false;
  std::optional<int> duality_dim;
};

struct BettiReport {
  std::vector<DimensionResult> betti;  // degrees 0..top
  /// Set when every degree carries an exact value.
  std::optional<Rational> euler_from_betti;
  long long euler_from_ranks = 0;
  BettiFlags flags;
};

/// b_p = dim ker(laplacian(c, p)) through the selected backend.
BettiReport l2_betti(const ChainComplex& c, const BettiOptions& opt);

struct CheckReport {
  bool applicable = true;
  bool ok = true;
  std::string message;
};

/// Alternating sum of Betti numbers against the alternating sum of ranks.
CheckReport euler_check(const ChainComplex& c, const BettiReport& report);

/// b_0 = 0 over infinite groups; over finite groups b_0 must equal the
/// component count of the cover divided by the group order (an independent
/// union-find computation, no rank involved).
CheckReport b0_check(const ChainComplex& c, const BettiReport& report);

/// b_p = b_{n-p} for a caller-asserted closed oriented n-manifold model.
/// Degrees beyond the report are treated as zero; sampled entries compare by
/// interval overlap.
CheckReport poincare_check(const BettiReport& report, int n);

/// The additive subgroup (1/L) Z of the rationals generated by the inverse
/// orders of the group's finite subgroups.
struct FinSet {
  Int lattice_denominator{1};

  /// Finite group: L = |G|.  Free abelian: L = 1 (torsion free).  Word
  /// groups need a caller-supplied lattice.
  static FinSet for_group(const Group& g, std::optional<Int> user_lattice = std::nullopt);
  bool contains(const Rational& q) const;
};

/// Membership of an exact dimension value in (1/L) Z.
CheckReport atiyah_check(const DimensionResult& d, const FinSet& fin);

struct ZeroDivisorReport {
  bool a_zero = false;
  bool b_zero = false;
  bool product_zero = false;
  DimensionResult dim_ker_a;
  /// Torsion-free (free abelian) groups only: dim in {0,1}, dim = 1 iff
  /// a = 0, and no nonzero pair may multiply to zero.
  std::optional<bool> dichotomy_ok;
};

ZeroDivisorReport zero_divisor_probe(const RingElem& a, const RingElem& b);

}  // namespace l2inv
