#include "l2inv/json_io.hpp"

#include <fstream>

#include "l2inv/errors.hpp"

namespace l2inv {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

long long int_field(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

}  // namespace

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad("rational must be a string like \"-3/4\" or an integer");
  auto q = parse_rational(j.get<std::string>());
  if (!q) bad("cannot parse rational '" + j.get<std::string>() + "'");
  return *q;
}

nlohmann::json group_to_json(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Finite:
      if (g.has_table()) {
        const long m = g.order();
        nlohmann::json table = nlohmann::json::array();
        for (long a = 0; a < m; ++a) {
          nlohmann::json row = nlohmann::json::array();
          for (long b = 0; b < m; ++b) row.push_back(g.mul(a, b));
          table.push_back(std::move(row));
        }
        return {{"kind", "finite"}, {"table", std::move(table)}};
      }
      return {{"kind", "finite"}, {"moduli", g.moduli()}};
    case GroupKind::FreeAbelian:
      return {{"kind", "free_abelian"}, {"rank", g.generator_count()}};
    case GroupKind::FinitelyGenerated:
      return {{"kind", "finitely_generated"},
              {"generators", g.generator_count()},
              {"label", g.label()}};
  }
  throw std::logic_error("unreachable group kind");
}

Group::Ptr group_from_json(const nlohmann::json& j) {
  const nlohmann::json& kind = field(j, "kind");
  if (!kind.is_string()) bad("group kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "finite") {
    if (j.contains("moduli")) {
      const nlohmann::json& mj = j.at("moduli");
      if (!mj.is_array() || mj.empty()) bad("moduli must be a nonempty array");
      std::vector<long> moduli;
      for (const auto& m : mj) {
        if (!m.is_number_integer() || m.get<long long>() < 1) bad("moduli must be integers >= 1");
        moduli.push_back(m.get<long>());
      }
      return Group::cyclic_product(std::move(moduli));
    }
    const nlohmann::json& tj = field(j, "table");
    if (!tj.is_array() || tj.empty()) bad("table must be a nonempty array of rows");
    const std::size_t m = tj.size();
    std::vector<long> mul;
    mul.reserve(m * m);
    for (const auto& row : tj) {
      if (!row.is_array() || row.size() != m) bad("table must be square");
      for (const auto& e : row) {
        if (!e.is_number_integer()) bad("table entries must be integers");
        mul.push_back(e.get<long>());
      }
    }
    return Group::finite_table(std::move(mul));
  }
  if (k == "free_abelian") {
    const long long rank = int_field(j, "rank");
    if (rank < 0 || rank > 64) bad("free abelian rank out of range");
    return Group::free_abelian(static_cast<int>(rank));
  }
  if (k == "finitely_generated") {
    const long long n = int_field(j, "generators");
    if (n < 1 || n > 64) bad("generator count out of range");
    std::string label = "F";
    if (j.contains("label")) {
      if (!j.at("label").is_string()) bad("label must be a string");
      label = j.at("label").get<std::string>();
    }
    return Group::finitely_generated(static_cast<int>(n), std::move(label));
  }
  bad("unknown group kind '" + k + "'");
}

nlohmann::json element_to_json(const Group& g, const GroupElement& e) {
  check_element(g, e);
  switch (g.kind()) {
    case GroupKind::Finite: return e.index();
    case GroupKind::FreeAbelian: return e.exponents();
    case GroupKind::FinitelyGenerated: return element_to_string(g, e);
  }
  throw std::logic_error("unreachable group kind");
}

GroupElement element_from_json(const Group& g, const nlohmann::json& j) {
  GroupElement e;
  switch (g.kind()) {
    case GroupKind::Finite:
      if (!j.is_number_integer()) bad("finite group element must be an index");
      e = GroupElement::finite(j.get<long>());
      break;
    case GroupKind::FreeAbelian: {
      if (!j.is_array()) bad("free abelian element must be an exponent array");
      std::vector<int> exp;
      for (const auto& x : j) {
        if (!x.is_number_integer()) bad("exponents must be integers");
        exp.push_back(x.get<int>());
      }
      e = GroupElement::exponents(std::move(exp));
      break;
    }
    case GroupKind::FinitelyGenerated:
      if (!j.is_string()) bad("word group element must be a word string");
      e = GroupElement::word(word_from_string(j.get<std::string>(), g.generator_count()));
      break;
  }
  check_element(g, e);
  return e;
}

nlohmann::json ring_elem_to_json(const RingElem& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [g, c] : x.terms())
    terms.push_back({{"g", element_to_json(*x.group(), g)}, {"c", rational_to_string(c)}});
  return {{"terms", std::move(terms)}};
}

RingElem ring_elem_from_json(const Group::Ptr& g, const nlohmann::json& j) {
  const nlohmann::json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  RingElem out(g);
  for (const auto& t : terms)
    out.add_term(element_from_json(*g, field(t, "g")), rational_from_json(field(t, "c")));
  return out;
}

nlohmann::json matrix_to_json_bare(const RingMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(ring_elem_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RingMatrix matrix_from_json_bare(const Group::Ptr& g, const nlohmann::json& j) {
  const long long rows = int_field(j, "rows"), cols = int_field(j, "cols");
  if (rows < 0 || cols < 0 || rows > 10000 || cols > 10000) bad("matrix shape out of range");
  const nlohmann::json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows))
    bad("entry grid must have 'rows' rows");
  RingMatrix m(g, static_cast<int>(rows), static_cast<int>(cols));
  for (long long i = 0; i < rows; ++i) {
    const auto& row = entries.at(static_cast<std::size_t>(i));
    if (!row.is_array() || row.size() != static_cast<std::size_t>(cols))
      bad("entry grid must have 'cols' columns in every row");
    for (long long jj = 0; jj < cols; ++jj)
      m.at(static_cast<int>(i), static_cast<int>(jj)) =
          ring_elem_from_json(g, row.at(static_cast<std::size_t>(jj)));
  }
  return m;
}

nlohmann::json matrix_to_json(const RingMatrix& m) {
  nlohmann::json j = matrix_to_json_bare(m);
  j["group"] = group_to_json(*m.group());
  return j;
}

RingMatrix matrix_from_json(const nlohmann::json& j) {
  Group::Ptr g = group_from_json(field(j, "group"));
  return matrix_from_json_bare(g, j);
}

nlohmann::json complex_to_json(const ChainComplex& c) {
  nlohmann::json boundaries = nlohmann::json::array();
  for (const RingMatrix& d : c.boundaries) boundaries.push_back(matrix_to_json_bare(d));
  return {{"group", group_to_json(*c.group)},
          {"ranks", c.ranks},
          {"boundaries", std::move(boundaries)}};
}

ChainComplex complex_from_json(const nlohmann::json& j, bool check) {
  ChainComplex c;
  c.group = group_from_json(field(j, "group"));
  const nlohmann::json& ranks = field(j, "ranks");
  if (!ranks.is_array() || ranks.empty()) bad("ranks must be a nonempty array");
  for (const auto& r : ranks) {
    if (!r.is_number_integer() || r.get<long long>() < 0 || r.get<long long>() > 10000)
      bad("ranks must be integers in [0, 10000]");
    c.ranks.push_back(r.get<int>());
  }
  const nlohmann::json& bs = field(j, "boundaries");
  if (!bs.is_array() || bs.size() + 1 != c.ranks.size())
    bad("boundaries must hold one matrix per degree above zero");
  for (const auto& b : bs) c.boundaries.push_back(matrix_from_json_bare(c.group, b));
  if (check) {
    const ValidationReport v = validate(c);
    if (!v.ok) bad("complex fails validation: " + v.message);
  }
  return c;
}

nlohmann::json hom_to_json(const QuotientHom& q) {
  return {{"source", group_to_json(*q.source())},
          {"target", group_to_json(*q.target())},
          {"generator_images", q.generator_images()}};
}

QuotientHom hom_from_json(const nlohmann::json& j) {
  Group::Ptr source = group_from_json(field(j, "source"));
  Group::Ptr target = group_from_json(field(j, "target"));
  const nlohmann::json& imgs = field(j, "generator_images");
  if (!imgs.is_array()) bad("generator_images must be an array");
  std::vector<long> images;
  for (const auto& x : imgs) {
    if (!x.is_number_integer()) bad("generator images must be target indices");
    images.push_back(x.get<long>());
  }
  return QuotientHom(std::move(source), std::move(target), std::move(images));
}

nlohmann::json tower_to_json(const QuotientTower& t) {
  nlohmann::json homs = nlohmann::json::array();
  for (const QuotientHom& q : t.homs) homs.push_back(hom_to_json(q));
  return {{"levels", std::move(homs)},
          {"nested", t.nested_assertion},
          {"separating", t.class_assertion}};
}

QuotientTower tower_from_json(const nlohmann::json& j) {
  QuotientTower t;
  const nlohmann::json& levels = field(j, "levels");
  if (!levels.is_array() || levels.empty()) bad("tower needs a nonempty 'levels' array");
  for (const auto& l : levels) t.homs.push_back(hom_from_json(l));
  if (j.contains("nested")) {
    if (!j.at("nested").is_boolean()) bad("'nested' must be a boolean");
    t.nested_assertion = j.at("nested").get<bool>();
  }
  if (j.contains("separating")) {
    if (!j.at("separating").is_boolean()) bad("'separating' must be a boolean");
    t.class_assertion = j.at("separating").get<bool>();
  }
  return t;
}

nlohmann::json dimension_to_json(const DimensionResult& d) {
  nlohmann::json j{{"backend", d.backend}, {"certificate", d.certificate}};
  if (d.exact) j["value"] = rational_to_string(*d.exact);
  if (d.interval)
    j["value"] = {{"lo", rational_to_string(d.interval->first)},
                  {"hi", rational_to_string(d.interval->second)}};
  return j;
}

nlohmann::json validation_to_json(const ValidationReport& v) {
  nlohmann::json j{{"ok", v.ok}, {"composition_checked", v.composition_checked}};
  if (!v.message.empty()) j["message"] = v.message;
  if (v.degree >= 0) j["location"] = {{"degree", v.degree}, {"row", v.row}, {"col", v.col}};
  return j;
}

nlohmann::json check_to_json(const CheckReport& c) {
  nlohmann::json j{{"applicable", c.applicable}, {"ok", c.ok}};
  if (!c.message.empty()) j["message"] = c.message;
  return j;
}

nlohmann::json betti_report_to_json(const BettiReport& r) {
  nlohmann::json betti = nlohmann::json::array();
  for (const DimensionResult& d : r.betti) betti.push_back(dimension_to_json(d));
  nlohmann::json j{{"betti", std::move(betti)},
                   {"euler_from_ranks", r.euler_from_ranks},
                   {"flags",
                    {{"b0_expected_zero", r.flags.b0_expected_zero}}}};
  if (r.euler_from_betti) j["euler_from_betti"] = rational_to_string(*r.euler_from_betti);
  if (r.flags.duality_dim) j["flags"]["duality_dim"] = *r.flags.duality_dim;
  return j;
}

nlohmann::json approx_report_to_json(const ApproxReport& r) {
  nlohmann::json levels = nlohmann::json::array();
  for (const ApproxLevel& l : r.levels)
    levels.push_back({{"order", l.quotient_order}, {"value", rational_to_string(l.value)}});
  return {{"levels", std::move(levels)},
          {"tail_window", r.tail_window},
          {"tail_diameter", rational_to_string(r.tail_diameter)},
          {"nested_assertion", r.nested_assertion},
          {"class_assertion", r.class_assertion}};
}

nlohmann::json alpha_report_to_json(const AlphaReport& r) {
  return {{"r", r.r},
          {"s", r.s},
          {"terms_used", r.terms_used},
          {"enclosure",
           {{"lo", rational_to_string(r.enclosure.lo)},
            {"hi", rational_to_string(r.enclosure.hi)}}},
          {"decimal", r.decimal},
          {"min_denominator_rational", rational_to_string(r.min_denominator_rational)},
          {"min_denominator", r.min_denominator.str()},
          {"bound_checked", r.bound_checked.str()},
          {"exceeds_bound", r.exceeds_bound},
          {"certificate", r.certificate}};
}

nlohmann::json trace_report_to_json(const TraceMomentReport& r) {
  nlohmann::json j{{"source_trace", rational_to_string(r.source_trace)},
                   {"pushed_trace", rational_to_string(r.pushed_trace)},
                   {"equal", r.equal}};
  if (r.injective) j["injective_on_products"] = *r.injective;
  if (r.collision)
    j["collision"] = {{"first", r.collision->first},
                      {"second", r.collision->second},
                      {"image", r.collision->image}};
  return j;
}

nlohmann::json zero_divisor_to_json(const ZeroDivisorReport& r) {
  nlohmann::json j{{"a_zero", r.a_zero},
                   {"b_zero", r.b_zero},
                   {"product_zero", r.product_zero},
                   {"dim_ker_a", dimension_to_json(r.dim_ker_a)}};
  if (r.dichotomy_ok) j["dichotomy_ok"] = *r.dichotomy_ok;
  return j;
}

nlohmann::json scaling_to_json(const ScalingReport& r) {
  return {{"group_order", r.group_order},
          {"subgroup_order", r.subgroup_order},
          {"index", r.index},
          {"dim_group", rational_to_string(r.dim_group)},
          {"dim_subgroup", rational_to_string(r.dim_subgroup)},
          {"ok", r.ok}};
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace l2inv
