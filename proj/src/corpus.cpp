#include "cfinite/corpus.hpp"

#include <algorithm>

#include "cfinite/errors.hpp"

namespace cfinite {

namespace {

std::vector<NamedSequence> build_registry() {
  auto fixed = [](RationalVec init, RationalVec rec) {
    return [init, rec](const RationalVec&) { return CFiniteSeq(init, rec); };
  };
  std::vector<NamedSequence> r{
      {"chebyshev_t", {"x"}, "Chebyshev polynomials of the first kind T_n(x)",
       [](const RationalVec& p) { return CFiniteSeq({1, p[0]}, {2 * p[0], -1}); }},
      {"chebyshev_u", {"x"}, "Chebyshev polynomials of the second kind U_n(x), sum U_n t^n = 1/(1-2xt+t^2)",
       [](const RationalVec& p) { return CFiniteSeq({1, 2 * p[0]}, {2 * p[0], -1}); }},
      {"fibonacci", {}, "Fibonacci numbers F_n", fixed({0, 1}, {1, 1})},
      {"geometric", {"r"}, "r^n", [](const RationalVec& p) { return CFiniteSeq({1}, {p[0]}); }},
      {"lucas", {}, "Lucas numbers L_n", fixed({2, 1}, {1, 1})},
      {"natural", {}, "n", fixed({0, 1}, {2, -1})},
      {"pell", {}, "Pell numbers P_n", fixed({0, 1}, {2, 1})},
  };
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return r;
}

}  // namespace

const std::vector<NamedSequence>& corpus() {
  static const std::vector<NamedSequence> registry = build_registry();
  return registry;
}

bool has_sequence(const std::string& name) {
  const auto& r = corpus();
  return std::any_of(r.begin(), r.end(), [&](const NamedSequence& s) { return s.name == name; });
}

CFiniteSeq lookup(const std::string& name, const RationalVec& params) {
  for (const auto& s : corpus()) {
    if (s.name != name) continue;
    if (params.size() != s.params.size())
      throw PreconditionError("sequence '" + name + "' takes " + std::to_string(s.params.size()) +
                              " parameter(s), got " + std::to_string(params.size()));
    return s.build(params);
  }
  throw PreconditionError("unknown sequence '" + name + "'");
}

}  // namespace cfinite
