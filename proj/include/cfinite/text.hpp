#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cfinite/gf.hpp"
#include "cfinite/sequence.hpp"

namespace cfinite {

// Canonical wire form: [[d1,...,dL],[c1,...,cL]], no whitespace.
std::string format_seq(const CFiniteSeq& seq);

// Same content with ", " separators, as printed by the command-line tool.
std::string format_seq_display(const CFiniteSeq& seq);

// Accepts either form, with arbitrary whitespace.
CFiniteSeq parse_seq(std::string_view text);

// "(<numerator>)/(<denominator>)", sparse ascending powers.
std::string format_gf(const RationalGF& gf, const std::string& var = "z");

using Bindings = std::map<std::string, Rational, std::less<>>;

// Parses any rational expression in the series variable (z or t) built from
// integers, + - * / ^ and parentheses. Identifiers found in `params` are
// substituted by their rational values first.
RationalGF parse_gf(std::string_view text, const Bindings& params = {});

// "a, b, c" or "a,b,c" or whitespace separated.
RationalVec parse_terms(std::string_view text);
std::string format_terms(const RationalVec& terms);

std::string format_profile(const std::vector<std::size_t>& profile);

}  // namespace cfinite
