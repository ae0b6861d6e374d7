#pragma once

#include <string>

#include "l2inv/chain_complex.hpp"
#include "l2inv/dimension.hpp"
#include "l2inv/json_io.hpp"

namespace l2inv {

/// Named complexes: "torus:n", "wedge:k", "point",
/// "presentation:<file.json>", or the path of a complex JSON file.
ChainComplex resolve_complex(const std::string& spec);

/// {"generators": n, "relators": ["a b a- b-", ...]}
Presentation presentation_from_json(const nlohmann::json& j);

/// "cyclic:k" (free abelian source: one Z/k per coordinate; word source:
/// every generator to 1 in Z/k) or the path of a hom JSON file whose source
/// must equal `source`.
QuotientHom resolve_quotient(const Group::Ptr& source, const std::string& spec);

/// "cyclic:a:b": doubling orders a, 2a, 4a, ... up to b.  Nested-kernel and
/// separating assertions are set only for free abelian sources, where the
/// doubling family genuinely has them.  Otherwise the path of a tower JSON
/// file whose level sources must equal `source`.
QuotientTower resolve_tower(const Group::Ptr& source, const std::string& spec);

}  // namespace l2inv
