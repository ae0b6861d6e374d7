#include "doctest.h"

#include <l2inv/errors.hpp>
#include <l2inv/json_io.hpp>
#include <l2inv/registry.hpp>

#include <random>

using namespace l2inv;
using nlohmann::json;

TEST_CASE("rationals travel as exact strings in both directions") {
  CHECK(rational_from_json(json("3")) == 3);
  CHECK(rational_from_json(json("-1/2")) == Rational(-1, 2));
  CHECK(rational_from_json(json(7)) == 7);
  CHECK_THROWS_AS(rational_from_json(json("1/0")), InputError);
  CHECK_THROWS_AS(rational_from_json(json("x")), InputError);
  CHECK_THROWS_AS(rational_from_json(json(0.5)), InputError);
}

TEST_CASE("groups of every kind survive a round trip") {
  const std::vector<Group::Ptr> groups = {
      Group::cyclic(4), Group::cyclic_product({2, 3, 2}), Group::free_abelian(3),
      Group::finitely_generated(2, "F")};
  for (const auto& g : groups) {
    const Group::Ptr back = group_from_json(group_to_json(*g));
    CHECK(*back == *g);
  }
  // An explicit table keeps its table form.
  const std::vector<long> klein = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  const auto table_group = Group::finite_table(klein);
  CHECK(*group_from_json(group_to_json(*table_group)) == *table_group);
}

TEST_CASE("group descriptors with missing or bad fields are refused") {
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"kind":"mystery"})")), InputError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"kind":"free_abelian"})")), InputError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"kind":"free_abelian","rank":-1})")), InputError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"kind":"finite","moduli":[0]})")), InputError);
}

TEST_CASE("elements serialize by group kind and reject out of range data") {
  const auto g = Group::cyclic(5);
  const auto e = GroupElement::finite(3);
  CHECK(element_from_json(*g, element_to_json(*g, e)) == e);
  CHECK_THROWS_AS(element_from_json(*g, json(7)), InputError);
  const auto z = Group::free_abelian(2);
  const auto v = GroupElement::exponents({-1, 4});
  CHECK(element_from_json(*z, element_to_json(*z, v)) == v);
  CHECK_THROWS_AS(element_from_json(*z, json::parse("[1]")), InputError);
  const auto f = Group::finitely_generated(2);
  const auto w = GroupElement::word(word_from_string("a b- a", 2));
  CHECK(element_from_json(*f, element_to_json(*f, w)) == w);
  CHECK_THROWS_AS(element_from_json(*f, json("c")), InputError);
}

TEST_CASE("ring elements and matrices round trip exactly") {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<long long> num(-6, 6), den(1, 4), idx(0, 5);
  const auto g = Group::cyclic(6);
  for (int trial = 0; trial < 10; ++trial) {
    RingMatrix m(g, 2, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) {
        RingElem e(g);
        for (int t = 0; t < 3; ++t) {
          const Rational c(Int(num(rng)), Int(den(rng)));
          if (c != 0) e.add_term(GroupElement::finite(idx(rng)), c);
        }
        m.at(i, j) = e;
      }
    const RingMatrix back = matrix_from_json(matrix_to_json(m));
    CHECK(back == m);
    CHECK(*back.group() == *g);
  }
}

TEST_CASE("matrix shape disagreements are reported as input errors") {
  const auto g = Group::cyclic(2);
  json j = matrix_to_json(RingMatrix(g, 2, 2));
  j["entries"][0].erase(1);
  CHECK_THROWS_AS(matrix_from_json(j), InputError);
  j = matrix_to_json(RingMatrix(g, 2, 2));
  j["rows"] = 3;
  CHECK_THROWS_AS(matrix_from_json(j), InputError);
}

TEST_CASE("complexes round trip and invalid boundary data is caught on load") {
  const ChainComplex c = torus_complex(2);
  const ChainComplex back = complex_from_json(complex_to_json(c));
  CHECK(back.ranks == c.ranks);
  CHECK(back.boundaries.size() == c.boundaries.size());
  for (std::size_t i = 0; i < c.boundaries.size(); ++i)
    CHECK(back.boundaries[i] == c.boundaries[i]);

  // A complex that fails d o d = 0 loads only with checking disabled.
  json j = complex_to_json(c);
  j["boundaries"][1] = j["boundaries"][0];
  j["ranks"] = json::parse("[1,2,2]");
  CHECK_THROWS_AS(complex_from_json(j), InputError);
}

TEST_CASE("quotient homomorphisms and towers round trip") {
  const auto z = Group::free_abelian(1);
  const QuotientHom q = resolve_quotient(z, "cyclic:6");
  const QuotientHom back = hom_from_json(hom_to_json(q));
  CHECK(*back.source() == *q.source());
  CHECK(*back.target() == *q.target());
  CHECK(back.generator_images() == q.generator_images());

  const QuotientTower t = resolve_tower(z, "cyclic:2:32");
  const QuotientTower tback = tower_from_json(tower_to_json(t));
  REQUIRE(tback.homs.size() == t.homs.size());
  CHECK(tback.nested_assertion == t.nested_assertion);
  CHECK(tback.class_assertion == t.class_assertion);
  for (std::size_t i = 0; i < t.homs.size(); ++i)
    CHECK(*tback.homs[i].target() == *t.homs[i].target());
}

TEST_CASE("homomorphisms must map generators into the target") {
  json j = json::parse(R"({
    "source": {"kind": "free_abelian", "rank": 1},
    "target": {"kind": "finite", "moduli": [4]},
    "generator_images": [9]
  })");
  CHECK_THROWS_AS(hom_from_json(j), InputError);
}

TEST_CASE("dimension results print the exact value or the interval") {
  const auto g = Group::cyclic(2);
  RingMatrix a(g, 1, 1);
  a.at(0, 0) = RingElem::one(g) - RingElem::unit(g, GroupElement::finite(1));
  const json exact = dimension_to_json(dim_ker_finite(a));
  CHECK(exact["value"] == "1/2");
  CHECK(exact["backend"] == "finite");

  const auto z = Group::free_abelian(1);
  RingMatrix b(z, 1, 1);
  b.at(0, 0) = RingElem::unit(z, GroupElement::exponents({1})) - RingElem::one(z);
  SampleOptions opt;
  opt.samples = 64;
  const json sampled = dimension_to_json(dim_ker_sampled(b, opt));
  CHECK(sampled["value"].contains("lo"));
  CHECK(sampled["value"].contains("hi"));
}

TEST_CASE("serialized reports are stable under key ordering") {
  const ChainComplex c = torus_complex(1);
  BettiOptions opt;
  opt.backend = Backend::AbelianGeneric;
  const json a = betti_report_to_json(l2_betti(c, opt));
  const json b = betti_report_to_json(l2_betti(c, opt));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("loading a missing file is an input error") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/definitely_not_here.json"), InputError);
}
