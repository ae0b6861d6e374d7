#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "l2inv/alpha.hpp"
#include "l2inv/betti.hpp"
#include "l2inv/chain_complex.hpp"
#include "l2inv/dimension.hpp"
#include "l2inv/group_ring.hpp"

namespace l2inv {

/// All numbers that must stay exact travel as strings ("3", "-1/2"); group
/// elements appear as an index (finite), an exponent array (free abelian) or
/// a word string (finitely generated).  Every *_from_json rejects malformed
/// input with InputError.

nlohmann::json group_to_json(const Group& g);
Group::Ptr group_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const Group& g, const GroupElement& e);
GroupElement element_from_json(const Group& g, const nlohmann::json& j);

nlohmann::json ring_elem_to_json(const RingElem& x);
RingElem ring_elem_from_json(const Group::Ptr& g, const nlohmann::json& j);

/// With embedded group descriptor.
nlohmann::json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const nlohmann::json& j);
/// Entry grid only; the group comes from context.
nlohmann::json matrix_to_json_bare(const RingMatrix& m);
RingMatrix matrix_from_json_bare(const Group::Ptr& g, const nlohmann::json& j);

nlohmann::json complex_to_json(const ChainComplex& c);
/// With check = false the boundary shapes are read as stated and left for
/// validate() to judge.
ChainComplex complex_from_json(const nlohmann::json& j, bool check = true);

nlohmann::json hom_to_json(const QuotientHom& q);
QuotientHom hom_from_json(const nlohmann::json& j);
nlohmann::json tower_to_json(const QuotientTower& t);
QuotientTower tower_from_json(const nlohmann::json& j);

nlohmann::json dimension_to_json(const DimensionResult& d);
nlohmann::json validation_to_json(const ValidationReport& v);
nlohmann::json check_to_json(const CheckReport& c);
nlohmann::json betti_report_to_json(const BettiReport& r);
nlohmann::json approx_report_to_json(const ApproxReport& r);
nlohmann::json alpha_report_to_json(const AlphaReport& r);
nlohmann::json trace_report_to_json(const TraceMomentReport& r);
nlohmann::json zero_divisor_to_json(const ZeroDivisorReport& r);
nlohmann::json scaling_to_json(const ScalingReport& r);

nlohmann::json load_json_file(const std::string& path);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace l2inv
