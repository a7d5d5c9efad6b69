#include "cfinite/json_io.hpp"

#include "cfinite/errors.hpp"

namespace cfinite {

using nlohmann::json;

json to_json(const Rational& r) { return to_string(r); }

json to_json(const RationalVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json to_json(const CFiniteSeq& seq) { return {{"init", to_json(seq.init())}, {"rec", to_json(seq.rec())}}; }

json to_json(const RationalGF& gf) {
  return {{"numerator", to_json(gf.numerator().coeffs())}, {"denominator", to_json(gf.denominator().coeffs())}};
}

json to_json(const ProofCertificate& cert) {
  json j = {{"statement", cert.statement},
            {"verified", cert.verified},
            {"order_bound", cert.order_bound},
            {"terms_checked", cert.terms_checked}};
  j["first_difference"] = cert.first_difference ? json(*cert.first_difference) : json(nullptr);
  return j;
}

json to_json(const ProductVerdict& v) {
  return {{"yes", v.yes},
          {"trivial", v.trivial},
          {"profile_match", v.profile_match},
          {"grid_match", v.grid_match},
          {"orders", v.orders},
          {"expected", v.expected.multiplicities},
          {"observed", v.observed.multiplicities},
          {"digits", v.digits},
          {"tolerance", v.tolerance},
          {"clustering", v.clustering}};
}

json to_json(const FactorPair& p) {
  return {{"left", to_json(p.left)},
          {"right", to_json(p.right)},
          {"normalization", p.normalization},
          {"certificate", to_json(p.certificate)}};
}

json to_json(const PolyRelation& rel) {
  return {{"order", rel.order},
          {"degree", rel.degree},
          {"exponents", rel.exponents},
          {"coefficients", to_json(rel.coefficients)},
          {"relation", rel.to_string()}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational as a string or integer, got " + j.dump());
}

RationalVec rationals_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  RationalVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

CFiniteSeq seq_from_json(const json& j) {
  if (!j.is_object() || !j.contains("init") || !j.contains("rec"))
    throw ParseError("expected {\"init\": [...], \"rec\": [...]}");
  return CFiniteSeq(rationals_from_json(j.at("init")), rationals_from_json(j.at("rec")));
}

RationalGF gf_from_json(const json& j) {
  if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator"))
    throw ParseError("expected {\"numerator\": [...], \"denominator\": [...]}");
  return RationalGF(Polynomial(rationals_from_json(j.at("numerator"))),
                    Polynomial(rationals_from_json(j.at("denominator"))));
}

}  // namespace cfinite
