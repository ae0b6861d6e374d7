#include "doctest.h"

#include <l2inv/alpha.hpp>
#include <l2inv/errors.hpp>

#include <numeric>
#include <string>

using namespace l2inv;

namespace {

// Totient by brute force: count residues coprime to n.
long long phi_oracle(long long n) {
  long long count = 0;
  for (long long m = 1; m <= n; ++m)
    if (std::gcd(m, n) == 1) ++count;
  return count;
}

// One series term, written down directly.
Rational term_oracle(long long r, long long s, long long n) {
  Int rn = 1, sn = 1;
  for (long long i = 0; i < n; ++i) {
    rn *= r;
    sn *= s;
  }
  return Rational(Int(euler_phi(n)), Int((rn - 1) * (sn - 1)));
}

// Smallest denominator by exhaustive search up to a cap.
Rational min_denominator_oracle(const RationalInterval& iv, long long cap) {
  for (long long q = 1; q <= cap; ++q) {
    // Smallest p with p/q >= lo.
    const Rational scaled = iv.lo * Rational(Int(q));
    Int p = numerator(scaled) / denominator(scaled);
    if (Rational(p) < scaled) p += 1;
    const Rational cand(p, Int(q));
    if (cand <= iv.hi) return cand;
  }
  return Rational(0);
}

}  // namespace

TEST_CASE("the totient matches plain coprime counting") {
  for (long long n = 1; n <= 60; ++n) CHECK(euler_phi(n) == phi_oracle(n));
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
  CHECK_THROWS_AS(euler_phi(0), InputError);
}

TEST_CASE("the first series term at r equals s equals two is one ninth") {
  CHECK(term_oracle(2, 2, 2) == Rational(1, 9));
  // The enclosure after the n = 2 term must sit at or above it.
  const RationalInterval iv = alpha_enclosure_terms(2, 2, 2);
  CHECK(iv.lo == Rational(1, 9));
  CHECK(iv.hi > iv.lo);
}

TEST_CASE("partial sums of the enclosure equal direct term accumulation") {
  for (const auto [r, s] : {std::pair<long long, long long>{2, 2}, {3, 2}, {5, 3}}) {
    Rational sum = 0;
    const Rational prefactor = Rational(Int((r - 1) * (r - 1) * (s - 1) * (s - 1)));
    for (long long n = 2; n <= 25; ++n) {
      sum += prefactor * term_oracle(r, s, n);
      CHECK(alpha_enclosure_terms(r, s, n).lo == sum);
    }
  }
}

TEST_CASE("enclosures nest and their widths shrink as terms are added") {
  RationalInterval prev = alpha_enclosure_terms(2, 2, 2);
  for (long long n = 3; n <= 40; ++n) {
    const RationalInterval next = alpha_enclosure_terms(2, 2, n);
    CHECK(next.lo >= prev.lo);
    CHECK(next.hi <= prev.hi);
    CHECK(next.hi - next.lo < prev.hi - prev.lo);
    prev = next;
  }
}

TEST_CASE("the requested width is reached with single digit terms at one tenth") {
  const auto [n, iv] = alpha_enclosure(2, 2, Rational(1, 10));
  CHECK(n < 10);
  CHECK(iv.hi - iv.lo <= Rational(1, 10));
  // The 200-term enclosure pins the value; it must nest inside.
  const RationalInterval fine = alpha_enclosure_terms(2, 2, 200);
  CHECK(iv.lo <= fine.lo);
  CHECK(fine.hi <= iv.hi);
}

TEST_CASE("enclosure arguments are validated") {
  CHECK_THROWS_AS(alpha_enclosure(1, 2, Rational(1, 10)), InputError);
  CHECK_THROWS_AS(alpha_enclosure(2, 2, Rational(0)), InputError);
  CHECK_THROWS_AS(rationality_report(2, 2, Int(0), 10), InputError);
  CHECK_THROWS_AS(rationality_report(2, 2, Int(10), 0), InputError);
}

TEST_CASE("interval endpoints reverse order is rejected and a point interval returns itself") {
  RationalInterval bad{Rational(1), Rational(0)};
  CHECK_THROWS_AS(min_denominator_in_interval(bad), InputError);
  RationalInterval point{Rational(5, 8), Rational(5, 8)};
  CHECK(min_denominator_in_interval(point) == Rational(5, 8));
}

TEST_CASE("the smallest denominator in a textbook interval is one third") {
  RationalInterval iv{Rational(30, 100), Rational(34, 100)};
  CHECK(min_denominator_in_interval(iv) == Rational(1, 3));
}

TEST_CASE("an interval containing integers returns the leftmost one") {
  RationalInterval iv{Rational(1), Rational(2)};
  CHECK(min_denominator_in_interval(iv) == 1);
  RationalInterval neg{Rational(-7, 2), Rational(9, 4)};
  CHECK(min_denominator_in_interval(neg) == -3);
}

TEST_CASE("continued fraction descent agrees with exhaustive denominator search") {
  // Deterministic sweep over awkward narrow intervals.
  for (long long a = 1; a <= 40; ++a) {
    for (long long b = a + 1; b <= a + 3; ++b) {
      RationalInterval iv{Rational(a, 97), Rational(b, 101)};
      if (iv.lo > iv.hi) continue;
      const Rational fast = min_denominator_in_interval(iv);
      const Rational slow = min_denominator_oracle(iv, 10000);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("a modest bound is certified quickly with frozen outputs") {
  const AlphaReport rep = rationality_report(2, 2, Int(100), 30);
  CHECK(rep.terms_used == 57);
  CHECK(rep.exceeds_bound);
  CHECK(rep.min_denominator == Int("34479412382905923"));
  CHECK(rep.min_denominator_rational == Rational(Int("5721710738295851"), Int("34479412382905923")));
  CHECK(rep.decimal == "0.165945714931398883957122837745");
}

TEST_CASE("the decimal digits match an independent high precision evaluation") {
  // Oracle value computed by plain floating summation at 300 decimal digits
  // outside this code base.
  const std::string oracle = "0.16594571493139888395712283774525816072316814462024";
  const AlphaReport rep = rationality_report(2, 2, Int(10), 50);
  REQUIRE(rep.decimal.size() >= oracle.size());
  CHECK(rep.decimal.substr(0, oracle.size()) == oracle);
}

TEST_CASE("different parameters move the value as the series dictates") {
  // Larger r or s shrinks every term, so the value drops.
  const AlphaReport a22 = rationality_report(2, 2, Int(10), 20);
  const AlphaReport a32 = rationality_report(3, 2, Int(10), 20);
  const AlphaReport a33 = rationality_report(3, 3, Int(10), 20);
  // Prefactors differ, so compare the raw series through the enclosure of
  // the normalized sums instead: alpha(3,2) uses prefactor 4, alpha(3,3) 16.
  CHECK(a22.enclosure.lo > 0);
  CHECK(a32.enclosure.lo > 0);
  CHECK(a33.enclosure.lo > 0);
  CHECK(a22.enclosure.hi < 1);
  CHECK(a32.enclosure.hi < 1);
  CHECK(a33.enclosure.hi < 1);
  CHECK(a22.exceeds_bound);
  CHECK(a32.exceeds_bound);
}

TEST_CASE("the tail majorant really dominates the discarded terms") {
  // Compare the tail bound implied by consecutive enclosures with the next
  // actual term: hi(N) - lo(N) must exceed the sum of any finite batch of
  // later terms.
  for (long long n = 2; n <= 30; ++n) {
    const RationalInterval iv = alpha_enclosure_terms(2, 2, n);
    Rational later = 0;
    for (long long m = n + 1; m <= n + 20; ++m) later += term_oracle(2, 2, m);
    CHECK(iv.hi - iv.lo > later);
  }
}
