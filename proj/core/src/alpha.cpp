#include "l2inv/alpha.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "l2inv/errors.hpp"

namespace l2inv {

long long euler_phi(long long n) {
  if (n < 1) throw InputError("euler_phi needs n >= 1");
  long long result = n;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

Int floor_div(const Int& n, const Int& d) {
  Int quot = n / d;
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

/// Continued-fraction descent on raw integer fractions a/b < c/d (b, d > 0).
/// Working unreduced keeps every step at plain integer arithmetic; only the
/// reconstruction at the end normalizes.
Rational simplest_in(const Rational& lo, const Rational& hi) {
  Int a = numerator(lo), b = denominator(lo);
  Int c = numerator(hi), d = denominator(hi);
  std::vector<Int> terms;
  Int last;
  for (;;) {
    const Int fl = floor_div(a, b);
    const Int cl = (a % b == 0) ? fl : Int(fl + 1);
    if (cl * d <= c) {
      last = cl;
      break;
    }
    terms.push_back(fl);
    Int na = d, nb = c - fl * d, nc = b, nd = a - fl * b;
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
  }
  Int num = last, den = 1;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Int next_num = *it * num + den;
    den = num;
    num = std::move(next_num);
  }
  return Rational(num, den);
}

/// Scaled tail bound: prefactor * sum_{n > N} 4 n q^n with q = 1/(rs),
/// where sum_{n >= M} n q^n = q^M (M - (M-1) q) / (1-q)^2.
Rational tail_bound(const Rational& prefactor, const Rational& q, long long N) {
  Rational qpow = 1;
  for (long long i = 0; i <= N; ++i) qpow *= q;
  const Rational one_minus = 1 - q;
  return prefactor * 4 * qpow * (Rational(N + 1) - Rational(N) * q) / (one_minus * one_minus);
}

Rational term_at(long long r, long long s, long long n) {
  Int rn = pow(Int(r), static_cast<unsigned>(n)), sn = pow(Int(s), static_cast<unsigned>(n));
  return Rational(Int(euler_phi(n)), (rn - 1) * (sn - 1));
}

}  // namespace

std::pair<long long, RationalInterval> alpha_enclosure(long long r, long long s,
                                                       const Rational& target_width) {
  if (r < 2 || s < 2) throw InputError("alpha series needs r >= 2 and s >= 2");
  if (target_width <= 0) throw InputError("target width must be positive");

  const Rational prefactor = Rational((r - 1) * (s - 1)) * Rational((r - 1) * (s - 1));
  const Rational q = Rational(1, Int(r) * s);

  Rational partial(0);
  for (long long N = 1;; ++N) {
    if (N >= 2) partial += term_at(r, s, N);
    const Rational tail = tail_bound(prefactor, q, N);
    if (tail <= target_width) {
      RationalInterval interval{prefactor * partial, prefactor * partial + tail};
      return {N, interval};
    }
  }
}

RationalInterval alpha_enclosure_terms(long long r, long long s, long long N) {
  if (r < 2 || s < 2) throw InputError("alpha series needs r >= 2 and s >= 2");
  if (N < 1) throw InputError("term count must be >= 1");
  const Rational prefactor = Rational((r - 1) * (s - 1)) * Rational((r - 1) * (s - 1));
  const Rational q = Rational(1, Int(r) * s);
  Rational partial(0);
  for (long long n = 2; n <= N; ++n) partial += term_at(r, s, n);
  return {prefactor * partial, prefactor * partial + tail_bound(prefactor, q, N)};
}

Rational min_denominator_in_interval(const RationalInterval& interval) {
  if (interval.lo > interval.hi) throw InputError("empty interval");
  if (interval.lo == interval.hi) return interval.lo;
  return simplest_in(interval.lo, interval.hi);
}

AlphaReport rationality_report(long long r, long long s, const Int& bound, int digits) {
  if (bound < 1) throw InputError("denominator bound must be >= 1");
  if (digits < 1) throw InputError("precision digits must be >= 1");

  Rational width = Rational(1, bound * bound);
  Rational digit_width(1);
  for (int i = 0; i < digits + 2; ++i) digit_width /= 10;
  if (digit_width < width) width = digit_width;

  AlphaReport rep;
  rep.r = r;
  rep.s = s;
  rep.bound_checked = bound;
  auto [n_used, interval] = alpha_enclosure(r, s, width);
  rep.terms_used = n_used;
  rep.enclosure = interval;
  rep.decimal = decimal_agreeing_digits(interval.lo, interval.hi, digits);

  // Positivity and the majorant ceiling are structural; a failure here is a
  // bug, not bad input.
  const Rational prefactor = Rational((r - 1) * (s - 1)) * Rational((r - 1) * (s - 1));
  const Rational q = Rational(1, Int(r) * s);
  const Rational majorant_total =
      prefactor * 4 * q * q * (2 - q) / ((1 - q) * (1 - q));
  if (!(interval.lo > 0) || !(interval.hi < majorant_total))
    throw std::logic_error("alpha enclosure escaped its majorant");

  rep.min_denominator_rational = min_denominator_in_interval(interval);
  rep.min_denominator = denominator(rep.min_denominator_rational);
  rep.exceeds_bound = rep.min_denominator > bound;
  if (rep.exceeds_bound)
    rep.certificate =
        "certified: the enclosure (exact partial sum through n=" + std::to_string(n_used) +
        " plus a geometric tail majorant) contains no rational with denominator <= " +
        bound.str() + "; the Stern-Brocot minimal denominator inside it is " +
        rep.min_denominator.str();
  else
    rep.certificate = "not certified: " + rational_to_string(rep.min_denominator_rational) +
                      " lies in the enclosure and has denominator <= " + bound.str();
  return rep;
}

}  // namespace l2inv
