#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>
#include "l2inv/group_ring.hpp"
#include "l2inv/rational.hpp"

namespace l2inv {

/// Kernel dimension of a group-ring matrix, normalized so the full module
/// of one column has dimension 1 per column.  Exact backends set `exact`;
/// the sampled backend sets `interval` (always containing its midpoint).
/// `certificate` records how the number was produced (method, group order,
/// sample count, tolerances, tower levels).
struct DimensionResult {
  std::optional<Rational> exact;
  std::optional<std::pair<Rational, Rational>> interval;
  std::string backend;
  nlohmann::json certificate;

  /// Midpoint for intervals, the value itself for exact results.
  Rational midpoint() const;
  Rational width() const;
};

/// dim ker over a finite group: expand by the regular representation (or the
/// character route for cyclic products) and divide the exact nullity by |G|.
DimensionResult dim_ker_finite(const RingMatrix& a);

/// dim ker over FreeAbelian(n) as column count minus the generic rank over
/// the rational function field.  Always a non-negative integer.
DimensionResult dim_ker_abelian(const RingMatrix& a);

struct SampleOptions {
  long samples = 4096;
  double svd_tol = 1e-9;
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Monte Carlo estimate over FreeAbelian(n): evaluate at uniform points of
/// the n-torus, count singular values below svd_tol * sigma_max, average.
/// The interval is mean +- a rational upper bound of the standard error,
/// clamped to [0, cols].  Identical options give identical results for any
/// job count.
DimensionResult dim_ker_sampled(const RingMatrix& a, const SampleOptions& opt = {});

/// Tower of finite quotients of one source group.  The boolean flags are
/// caller assertions (nested kernels with trivial intersection; membership
/// in a class where convergence is a theorem), echoed into reports, never
/// verified.
struct QuotientTower {
  std::vector<QuotientHom> homs;
  bool nested_assertion = false;
  bool class_assertion = false;
};

struct ApproxLevel {
  long long quotient_order = 0;
  Rational value;
};

struct ApproxReport {
  std::vector<ApproxLevel> levels;
  int tail_window = 3;
  Rational tail_diameter;     // max - min over the trailing window
  bool nested_assertion = false;
  bool class_assertion = false;
};

/// Exact dimension at every tower level (push, then the finite backend).
/// The report never certifies a limit: no convergence rate is available, so
/// only the level values and the tail diameter are stated.
ApproxReport dim_ker_approx(const RingMatrix& a, const QuotientTower& tower,
                            int tail_window = 3, int jobs = 1);

/// ApproxReport folded into a DimensionResult: the exact value at the last
/// level, backend "tower", full sequence in the certificate.
DimensionResult approx_result(const ApproxReport& report);

struct CollisionWitness {
  std::string first;   // rendered source elements with a common image
  std::string second;
  long image = -1;
};

struct TraceMomentReport {
  Rational source_trace;     // trace of A^m in the free carrier
  Rational pushed_trace;     // trace of push(A)^m
  bool equal = false;
  /// Whether the hom is injective on all products of at most m support
  /// words; nullopt when the product enumeration hit its cap.
  std::optional<bool> injective;
  std::optional<CollisionWitness> collision;
};

/// Spectral-moment comparison tr((A)^m) vs tr(push(A)^m).  The source trace
/// is computed in the free carrier (free reduction only), which is sound for
/// free and free abelian groups and documented as unsupported for
/// relator-bearing presentations.
TraceMomentReport trace_moment_check(const RingMatrix& a, const QuotientHom& q, int m,
                                     std::size_t enumeration_cap = 200000);

struct ScalingReport {
  long long group_order = 0;
  long long subgroup_order = 0;
  long long index = 0;
  Rational dim_group;     // nullity / |G|
  Rational dim_subgroup;  // same nullity / |H|
  bool ok = false;        // dim_subgroup == index * dim_group
};

/// Restriction-of-scalars consistency: H given as element indices must be a
/// subgroup (checked); the same expanded kernel measured per-H must scale by
/// the index.
ScalingReport dim_scaling_check(const RingMatrix& a, const std::vector<long>& subgroup);

}  // namespace l2inv
