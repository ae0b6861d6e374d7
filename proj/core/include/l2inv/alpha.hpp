#pragma once

#include <string>
#include <utility>

#include "l2inv/rational.hpp"

namespace l2inv {

/// Euler totient by trial-division factorization.
long long euler_phi(long long n);

struct RationalInterval {
  Rational lo, hi;
};

/// Certified enclosure of
///   alpha(r, s) = (r-1)^2 (s-1)^2 * sum_{n >= 2} phi(n) / ((r^n - 1)(s^n - 1)).
/// The lower end is the exact partial sum through n = N, the upper end adds
/// the tail bound obtained from phi(n) <= n and r^n - 1 >= r^n / 2, which
/// sums in closed form.  N is the least index bringing the scaled tail bound
/// at or below target_width.
std::pair<long long, RationalInterval> alpha_enclosure(long long r, long long s,
                                                       const Rational& target_width);

/// Same enclosure at a fixed term count N >= 1 (N = 1 is the empty sum).
RationalInterval alpha_enclosure_terms(long long r, long long s, long long N);

/// The unique smallest-denominator rational in [lo, hi] (leftmost integer on
/// ties), by Stern-Brocot / continued-fraction descent.
Rational min_denominator_in_interval(const RationalInterval& interval);

struct AlphaReport {
  long long r = 2, s = 2;
  long long terms_used = 0;
  RationalInterval enclosure;
  /// Decimal digits on which both endpoints agree (truncated rendering).
  std::string decimal;
  /// Smallest-denominator rational in the enclosure and its denominator.
  Rational min_denominator_rational;
  Int min_denominator{1};
  Int bound_checked{1};
  /// True certifies: no rational with denominator <= bound_checked lies in
  /// the enclosure, hence alpha(r, s), if rational, has a larger denominator.
  bool exceeds_bound = false;
  std::string certificate;
};

/// Runs the enclosure to width min(1/bound^2, 10^-(digits+2)) and tests
/// whether any rational with denominator <= bound can lie in it.
AlphaReport rationality_report(long long r, long long s, const Int& bound, int digits);

}  // namespace l2inv
