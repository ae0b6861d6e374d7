#include "l2inv/registry.hpp"

#include <charconv>

#include "l2inv/errors.hpp"

namespace l2inv {

namespace {

std::optional<long> parse_long(const std::string& s) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

long arg_after(const std::string& spec, std::size_t colon, const char* what, long lo, long hi) {
  const auto v = parse_long(spec.substr(colon + 1));
  if (!v || *v < lo || *v > hi)
    throw InputError(std::string(what) + " must be an integer in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  return *v;
}

}  // namespace

Presentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators"))
    throw InputError("presentation needs a 'generators' count");
  if (!j.at("generators").is_number_integer()) throw InputError("'generators' must be an integer");
  const long long n = j.at("generators").get<long long>();
  if (n < 1 || n > 26) throw InputError("generator count must lie in [1, 26]");
  Presentation p;
  p.num_generators = static_cast<int>(n);
  if (j.contains("relators")) {
    if (!j.at("relators").is_array()) throw InputError("'relators' must be an array of words");
    for (const auto& r : j.at("relators")) {
      if (!r.is_string()) throw InputError("relators must be word strings like \"a b a- b-\"");
      p.relators.push_back(word_from_string(r.get<std::string>(), p.num_generators));
    }
  }
  return p;
}

ChainComplex resolve_complex(const std::string& spec) {
  if (spec == "point") return point_complex();
  const std::size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (head == "torus" && colon != std::string::npos)
    return torus_complex(static_cast<int>(arg_after(spec, colon, "torus rank", 1, 10)));
  if (head == "wedge" && colon != std::string::npos)
    return wedge_complex(static_cast<int>(arg_after(spec, colon, "wedge circle count", 1, 26)));
  if (head == "presentation" && colon != std::string::npos)
    return presentation_complex(presentation_from_json(load_json_file(spec.substr(colon + 1))));
  return complex_from_json(load_json_file(spec));
}

QuotientHom resolve_quotient(const Group::Ptr& source, const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon != std::string::npos && spec.substr(0, colon) == "cyclic") {
    const long k = arg_after(spec, colon, "cyclic order", 1, 1L << 20);
    switch (source->kind()) {
      case GroupKind::FreeAbelian: {
        const int n = source->generator_count();
        if (n == 0) throw InputError("rank-zero group has no cyclic quotients");
        Group::Ptr target =
            n == 1 ? Group::cyclic(k) : Group::cyclic_product(std::vector<long>(n, k));
        std::vector<long> images(static_cast<std::size_t>(n));
        long stride = 1;
        for (int i = 0; i < n; ++i) {
          images[static_cast<std::size_t>(i)] = (k == 1) ? 0 : stride;
          stride *= k;
        }
        return QuotientHom(source, std::move(target), std::move(images));
      }
      case GroupKind::FinitelyGenerated: {
        const std::vector<long> images(static_cast<std::size_t>(source->generator_count()),
                                       1 % k);
        return QuotientHom(source, Group::cyclic(k), images);
      }
      case GroupKind::Finite:
        throw InputError("finite groups take no quotient argument here");
    }
  }
  QuotientHom q = hom_from_json(load_json_file(spec));
  if (*q.source() != *source)
    throw InputError("hom file source group does not match the input's group");
  return q;
}

QuotientTower resolve_tower(const Group::Ptr& source, const std::string& spec) {
  const std::size_t c1 = spec.find(':');
  if (c1 != std::string::npos && spec.substr(0, c1) == "cyclic") {
    const std::size_t c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos)
      throw InputError("tower registry form is cyclic:first:last, e.g. cyclic:2:256");
    const auto a = parse_long(spec.substr(c1 + 1, c2 - c1 - 1));
    const auto b = parse_long(spec.substr(c2 + 1));
    if (!a || !b || *a < 1 || *b < *a || *b > (1L << 20))
      throw InputError("tower orders must satisfy 1 <= first <= last <= 2^20");
    QuotientTower t;
    for (long k = *a; k <= *b; k *= 2)
      t.homs.push_back(resolve_quotient(source, "cyclic:" + std::to_string(k)));
    const bool abelian_source = source->kind() == GroupKind::FreeAbelian;
    t.nested_assertion = abelian_source;
    t.class_assertion = abelian_source;
    return t;
  }
  QuotientTower t = tower_from_json(load_json_file(spec));
  for (const QuotientHom& q : t.homs)
    if (*q.source() != *source)
      throw InputError("tower file level source does not match the input's group");
  return t;
}

}  // namespace l2inv
