#pragma once

#include <nlohmann/json.hpp>

#include "cfinite/factor.hpp"
#include "cfinite/gf.hpp"
#include "cfinite/guess.hpp"
#include "cfinite/roots.hpp"
#include "cfinite/sequence.hpp"

namespace cfinite {

// Rationals are JSON strings "p" or "p/q"; polynomial coefficient lists are
// in ascending powers.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const RationalVec& v);
nlohmann::json to_json(const CFiniteSeq& seq);
nlohmann::json to_json(const RationalGF& gf);
nlohmann::json to_json(const ProofCertificate& cert);
nlohmann::json to_json(const ProductVerdict& verdict);
nlohmann::json to_json(const FactorPair& pair);
nlohmann::json to_json(const PolyRelation& rel);

// Throw ParseError on malformed input.
Rational rational_from_json(const nlohmann::json& j);
RationalVec rationals_from_json(const nlohmann::json& j);
CFiniteSeq seq_from_json(const nlohmann::json& j);
RationalGF gf_from_json(const nlohmann::json& j);

}  // namespace cfinite
