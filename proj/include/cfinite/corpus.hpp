#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cfinite/sequence.hpp"

namespace cfinite {

struct NamedSequence {
  std::string name;
  std::vector<std::string> params;
  std::string description;
  std::function<CFiniteSeq(const RationalVec&)> build;
};

// Registered sequences, in name order.
const std::vector<NamedSequence>& corpus();

// Throws PreconditionError for an unknown name or a wrong number of parameters.
CFiniteSeq lookup(const std::string& name, const RationalVec& params = {});

bool has_sequence(const std::string& name);

}  // namespace cfinite
