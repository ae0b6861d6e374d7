#include "doctest.h"

#include <l2inv/errors.hpp>
#include <l2inv/dimension.hpp>
#include <l2inv/registry.hpp>

#include <random>

using namespace l2inv;

namespace {

RingMatrix scalar_one_by_one(const Group::Ptr& g, const RingElem& e) {
  RingMatrix a(g, 1, 1);
  a.at(0, 0) = e;
  return a;
}

RingElem t_minus_one(const Group::Ptr& g) {
  return RingElem::unit(g, GroupElement::exponents({1})) - RingElem::one(g);
}

}  // namespace

TEST_CASE("one minus g over Z/2 has von Neumann dimension one half") {
  const auto g = Group::cyclic(2);
  const auto a = scalar_one_by_one(g, RingElem::one(g) - RingElem::unit(g, GroupElement::finite(1)));
  const DimensionResult r = dim_ker_finite(a);
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == Rational(1, 2));
  CHECK(r.backend == "finite");
}

TEST_CASE("the norm element of Z/3 has dimension two thirds") {
  const auto g = Group::cyclic(3);
  RingElem s = RingElem::one(g);
  s.add_term(GroupElement::finite(1), Rational(1));
  s.add_term(GroupElement::finite(2), Rational(1));
  const DimensionResult r = dim_ker_finite(scalar_one_by_one(g, s));
  CHECK(*r.exact == Rational(2, 3));
}

TEST_CASE("zero and identity matrices pin down the normalization") {
  const auto g = Group::cyclic(5);
  CHECK(*dim_ker_finite(RingMatrix(g, 3, 3)).exact == 3);
  CHECK(*dim_ker_finite(RingMatrix::identity(g, 3)).exact == 0);
  const auto z = Group::free_abelian(2);
  CHECK(*dim_ker_abelian(RingMatrix(z, 2, 2)).exact == 2);
  CHECK(*dim_ker_abelian(RingMatrix::identity(z, 2)).exact == 0);
}

TEST_CASE("t minus one acts injectively on the group ring of the integers") {
  const auto z = Group::free_abelian(1);
  const DimensionResult r = dim_ker_abelian(scalar_one_by_one(z, t_minus_one(z)));
  CHECK(*r.exact == 0);
  CHECK(r.backend == "abelian-generic");
}

TEST_CASE("a Laurent matrix with identical columns has one dimensional kernel") {
  const auto z = Group::free_abelian(2);
  const RingElem t = RingElem::unit(z, GroupElement::exponents({1, 0}));
  const RingElem u = RingElem::unit(z, GroupElement::exponents({0, 1}));
  const RingElem one = RingElem::one(z);
  RingMatrix a(z, 2, 2);
  a.at(0, 0) = t - one;
  a.at(0, 1) = t - one;
  a.at(1, 0) = u - one;
  a.at(1, 1) = u - one;
  CHECK(*dim_ker_abelian(a).exact == 1);
}

TEST_CASE("backends refuse groups outside their domain") {
  const auto z = Group::free_abelian(1);
  const auto g = Group::cyclic(3);
  CHECK_THROWS_AS(dim_ker_finite(scalar_one_by_one(z, t_minus_one(z))), DomainError);
  CHECK_THROWS_AS(dim_ker_abelian(scalar_one_by_one(g, RingElem::one(g))), DomainError);
}

TEST_CASE("sampling t minus one gives a tight interval around zero") {
  const auto z = Group::free_abelian(1);
  SampleOptions opt;
  opt.samples = 4096;
  const DimensionResult r = dim_ker_sampled(scalar_one_by_one(z, t_minus_one(z)), opt);
  REQUIRE(r.interval.has_value());
  CHECK(r.interval->first <= 0);
  CHECK(r.interval->second >= 0);
  CHECK(r.width() < Rational(1, 1000));
}

TEST_CASE("the circle Laplacian samples to an interval containing zero") {
  const auto z = Group::free_abelian(1);
  RingElem e = RingElem::unit(z, identity_element(*z), Rational(2));
  e = e - RingElem::unit(z, GroupElement::exponents({1}));
  e = e - RingElem::unit(z, GroupElement::exponents({-1}));
  SampleOptions opt;
  opt.samples = 2048;
  const DimensionResult r = dim_ker_sampled(scalar_one_by_one(z, e), opt);
  REQUIRE(r.interval.has_value());
  CHECK(r.interval->first <= 0);
  CHECK(r.interval->second >= 0);
}

TEST_CASE("sampling is deterministic in the seed and invariant under the thread count") {
  const auto z = Group::free_abelian(2);
  const RingElem t = RingElem::unit(z, GroupElement::exponents({1, 0}));
  const RingElem u = RingElem::unit(z, GroupElement::exponents({0, 1}));
  RingMatrix a(z, 2, 2);
  a.at(0, 0) = t - RingElem::one(z);
  a.at(0, 1) = u + t;
  a.at(1, 0) = u - RingElem::one(z);
  a.at(1, 1) = t - u;
  SampleOptions one_thread;
  one_thread.samples = 512;
  one_thread.seed = 42;
  one_thread.jobs = 1;
  SampleOptions four_threads = one_thread;
  four_threads.jobs = 4;
  const DimensionResult r1 = dim_ker_sampled(a, one_thread);
  const DimensionResult r2 = dim_ker_sampled(a, four_threads);
  CHECK(r1.interval == r2.interval);
  SampleOptions other_seed = one_thread;
  other_seed.seed = 43;
  const DimensionResult r3 = dim_ker_sampled(a, other_seed);
  CHECK(r3.interval.has_value());
}

TEST_CASE("sample options are validated before any work happens") {
  const auto z = Group::free_abelian(1);
  const auto a = scalar_one_by_one(z, t_minus_one(z));
  SampleOptions zero_samples;
  zero_samples.samples = 0;
  CHECK_THROWS_AS(dim_ker_sampled(a, zero_samples), InputError);
  SampleOptions bad_tol;
  bad_tol.svd_tol = 0.0;
  CHECK_THROWS_AS(dim_ker_sampled(a, bad_tol), InputError);
}

TEST_CASE("the cyclic tower on t minus one walks down the reciprocal sequence") {
  const auto z = Group::free_abelian(1);
  const auto a = scalar_one_by_one(z, t_minus_one(z));
  const QuotientTower tower = resolve_tower(z, "cyclic:2:256");
  const ApproxReport rep = dim_ker_approx(a, tower);
  REQUIRE(rep.levels.size() == 8);
  long k = 2;
  for (const auto& lv : rep.levels) {
    CHECK(lv.quotient_order == k);
    CHECK(lv.value == Rational(1, k));
    k *= 2;
  }
  CHECK(rep.tail_diameter == Rational(3, 256));
  const DimensionResult last = approx_result(rep);
  CHECK(*last.exact == Rational(1, 256));
  CHECK(last.backend == "tower");
}

TEST_CASE("the circle Laplacian tower also decays like one over k") {
  const auto z = Group::free_abelian(1);
  RingElem e = RingElem::unit(z, identity_element(*z), Rational(2));
  e = e - RingElem::unit(z, GroupElement::exponents({1}));
  e = e - RingElem::unit(z, GroupElement::exponents({-1}));
  const QuotientTower tower = resolve_tower(z, "cyclic:2:64");
  const ApproxReport rep = dim_ker_approx(scalar_one_by_one(z, e), tower);
  long k = 2;
  for (const auto& lv : rep.levels) {
    CHECK(lv.value == Rational(1, k));
    k *= 2;
  }
}

TEST_CASE("trace moments agree along a quotient with no short collisions") {
  const auto z = Group::free_abelian(1);
  const auto a = scalar_one_by_one(z, t_minus_one(z));
  const QuotientHom q = resolve_quotient(z, "cyclic:5");
  const TraceMomentReport rep = trace_moment_check(a, q, 2);
  CHECK(rep.source_trace == 1);
  CHECK(rep.pushed_trace == 1);
  CHECK(rep.equal);
  REQUIRE(rep.injective.has_value());
  CHECK(*rep.injective);
}

TEST_CASE("a short quotient produces a collision and the traces drift apart") {
  const auto z = Group::free_abelian(1);
  const auto a = scalar_one_by_one(z, t_minus_one(z));
  const QuotientHom q = resolve_quotient(z, "cyclic:2");
  const TraceMomentReport rep = trace_moment_check(a, q, 2);
  CHECK(rep.source_trace == 1);
  CHECK(rep.pushed_trace == 2);
  CHECK_FALSE(rep.equal);
  REQUIRE(rep.injective.has_value());
  CHECK_FALSE(*rep.injective);
  CHECK(rep.collision.has_value());
}

TEST_CASE("moment zero always reduces to the matrix size") {
  const auto z = Group::free_abelian(1);
  RingMatrix a(z, 2, 2);
  a.at(0, 0) = t_minus_one(z);
  a.at(1, 1) = t_minus_one(z) * t_minus_one(z);
  const QuotientHom q = resolve_quotient(z, "cyclic:3");
  const TraceMomentReport rep = trace_moment_check(a, q, 0);
  CHECK(rep.source_trace == 2);
  CHECK(rep.pushed_trace == 2);
  CHECK(rep.equal);
}

TEST_CASE("restricting one minus g squared from Z/4 to its two element subgroup doubles the dimension") {
  const auto g = Group::cyclic(4);
  RingElem e = RingElem::one(g) - RingElem::unit(g, GroupElement::finite(2));
  const ScalingReport rep = dim_scaling_check(scalar_one_by_one(g, e), {0, 2});
  CHECK(rep.group_order == 4);
  CHECK(rep.subgroup_order == 2);
  CHECK(rep.index == 2);
  CHECK(rep.dim_group == Rational(1, 2));
  CHECK(rep.dim_subgroup == 1);
  CHECK(rep.ok);
}

TEST_CASE("index scaling holds for random matrices over Z/6 and its order three subgroup") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long long> idx(0, 5), coeff(-3, 3), nterms(0, 3);
  const auto g = Group::cyclic(6);
  for (int trial = 0; trial < 20; ++trial) {
    RingMatrix a(g, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        RingElem e(g);
        const long long n = nterms(rng);
        for (long long t = 0; t < n; ++t) {
          const Rational c(coeff(rng));
          if (c != 0) e.add_term(GroupElement::finite(idx(rng)), c);
        }
        a.at(i, j) = e;
      }
    const ScalingReport rep = dim_scaling_check(a, {0, 2, 4});
    CHECK(rep.index == 2);
    CHECK(rep.ok);
  }
}

TEST_CASE("subsets that are not subgroups are rejected") {
  const auto g = Group::cyclic(4);
  const auto a = scalar_one_by_one(g, RingElem::one(g));
  CHECK_THROWS_AS(dim_scaling_check(a, {0, 1}), InputError);
  CHECK_THROWS_AS(dim_scaling_check(a, {1, 3}), InputError);
}
