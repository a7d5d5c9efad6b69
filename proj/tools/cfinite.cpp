// Command-line front end. Exit codes: 0 success / verified, 1 not found or
// not verified, 2 usage or precondition error, 3 internal invariant violation.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cfinite/corpus.hpp"
#include "cfinite/dimers.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/factor.hpp"
#include "cfinite/guess.hpp"
#include "cfinite/json_io.hpp"
#include "cfinite/roots.hpp"
#include "cfinite/text.hpp"

using namespace cfinite;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBug = 3;

struct Globals {
  bool json = false;
  bool verbose = false;
  unsigned digits = kDefaultDigits;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Expands "@path" into the file's non-comment lines; other arguments pass
// through unchanged.
std::vector<std::string> expand(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    if (a.empty() || a[0] != '@') {
      out.push_back(a);
      continue;
    }
    std::ifstream in(a.substr(1));
    if (!in) throw PreconditionError("cannot read " + a.substr(1));
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (!line.empty()) out.push_back(line);
    }
  }
  return out;
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

Rational constant_value(const std::string& text, const Bindings& bindings) {
  const RationalGF v = parse_gf(text, bindings);
  if (v.numerator().degree() > 0 || v.denominator().degree() > 0)
    throw ParseError("expected a constant, got '" + text + "'");
  return v.numerator().is_zero() ? Rational(0) : v.numerator()[0];
}

// name or name(arg, ...) from the corpus; arguments are rational
// expressions in the bound parameters.
CFiniteSeq named_sequence(const std::string& text, const Bindings& bindings) {
  const auto open = text.find('(');
  const std::string name = trim(text.substr(0, open));
  RationalVec params;
  if (open != std::string::npos) {
    if (text.back() != ')') throw ParseError("unbalanced parentheses in '" + text + "'");
    const std::string inner = text.substr(open + 1, text.size() - open - 2);
    if (!trim(inner).empty())
      for (const auto& arg : split_top_level(inner, ',')) params.push_back(constant_value(arg, bindings));
  }
  return lookup(name, params);
}

// Sequence literal, JSON object, corpus name, or sums and termwise products
// of those ('*' binds tighter than '+').
CFiniteSeq sequence_expr(const std::string& raw, const Bindings& bindings = {}) {
  const std::string text = trim(ascii_minus(raw));
  if (text.empty()) throw ParseError("empty sequence");
  if (text[0] == '{') {
    try {
      return seq_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad JSON sequence: ") + e.what());
    }
  }
  const auto sum = split_top_level(text, '+');
  if (sum.size() > 1) {
    CFiniteSeq acc = sequence_expr(sum[0], bindings);
    for (std::size_t i = 1; i < sum.size(); ++i) acc = add(acc, sequence_expr(sum[i], bindings));
    return acc;
  }
  const auto prod = split_top_level(text, '*');
  if (prod.size() > 1) {
    CFiniteSeq acc = sequence_expr(prod[0], bindings);
    for (std::size_t i = 1; i < prod.size(); ++i) acc = mul(acc, sequence_expr(prod[i], bindings));
    return acc;
  }
  if (text[0] == '[') return parse_seq(text);
  return named_sequence(text, bindings);
}

bool looks_like_sequence(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) return false;
  if (text[0] == '[') return true;
  if (text[0] == '{') return text.find("\"init\"") != std::string::npos;
  const std::string head = trim(text.substr(0, text.find_first_of("(*+")));
  return has_sequence(head);
}

RationalGF gf_expr(const std::string& raw, const Bindings& bindings = {}) {
  const std::string text = trim(raw);
  if (!text.empty() && text[0] == '{') {
    try {
      return gf_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad JSON generating function: ") + e.what());
    }
  }
  return parse_gf(text, bindings);
}

std::vector<std::size_t> parse_counts(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& part : split_top_level(text, ',')) {
    if (part.empty()) continue;
    const Rational v = parse_rational(part);
    if (!is_integer(v) || v < 0) throw ParseError("expected a nonnegative integer, got '" + part + "'");
    out.push_back(v.get_num().get_ui());
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string certificate_summary(const ProofCertificate& c) {
  std::ostringstream s;
  s << (c.verified ? "verified" : "not verified") << "; order bound " << c.order_bound << "; " << c.terms_checked
    << " terms checked";
  if (c.first_difference) s << "; first difference at " << *c.first_difference;
  return s.str();
}

void print_seq(const Globals& g, const CFiniteSeq& s) {
  if (g.json)
    std::cout << to_json(s).dump() << '\n';
  else
    std::cout << format_seq_display(s) << '\n';
}

void print_certificate(const Globals& g, const ProofCertificate& c) {
  if (g.json) {
    std::cout << to_json(c).dump() << '\n';
    return;
  }
  std::cout << "certificate: " << certificate_summary(c) << '\n';
  std::cout << c.statement << '\n';
}

CFiniteSeq one_sequence(const std::vector<std::string>& args) {
  const auto items = expand(args);
  if (items.size() != 1) throw ParseError("expected exactly one sequence, got " + std::to_string(items.size()));
  return sequence_expr(items[0]);
}

std::pair<CFiniteSeq, CFiniteSeq> two_sequences(const std::vector<std::string>& args) {
  const auto items = expand(args);
  if (items.size() != 2) throw ParseError("expected exactly two sequences, got " + std::to_string(items.size()));
  return {sequence_expr(items[0]), sequence_expr(items[1])};
}

RationalVec terms_argument(const std::vector<std::string>& args) {
  return parse_terms(join(expand(args), ","));
}

void verbose_closure(const Globals& g, const std::string& op, const CFiniteSeq& a, const CFiniteSeq* b,
                     std::size_t bound, const CFiniteSeq& result) {
  if (!g.verbose || g.json) return;
  std::cerr << op << ": operand orders " << a.order();
  if (b) std::cerr << ", " << b->order();
  std::cerr << "; a priori order bound " << bound << "; sampled " << std::max<std::size_t>(2 * bound + 4, 4)
            << " terms; guessed minimal order " << result.order() << '\n';
}

// Positionals are taken raw from the leftovers: CLI11 would split a
// bracketed literal such as [[0,1],[1,1]] into a vector.
void positional_help(CLI::App* sub, const std::string& name, const std::string& desc) {
  sub->allow_extras();
  sub->footer("Positionals:\n  " + name + "  " + desc + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for C-finite sequences", "cfinite"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_extras();
  Globals g;
  if (const char* env = std::getenv("CFINITE_DIGITS")) {
    try {
      g.digits = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "error: CFINITE_DIGITS must be a positive integer\n";
      return kUsage;
    }
  }
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("-v,--verbose", g.verbose, "Spell out bounds and the terms compared");
  app.add_option("--digits", g.digits, "Decimal digits for root computations (env CFINITE_DIGITS)")
      ->check(CLI::Range(10u, 100000u));

  std::vector<std::string> args;
  std::size_t count = 10, step = 1, offset = 0, order = 2, degree = 4, bound = 3, terms = 20;
  unsigned width = 0;
  double budget = 60;
  std::string mode = "roots", orders_text, hweight = "1", vweight = "1", lhs, rhs, params_text, degrees_text,
              var = "z";
  std::vector<std::string> points_lists;
  bool report_product = false, show_roots = false, show_kasteleyn = false;
  std::optional<std::size_t> at;

  auto* guess = app.add_subcommand("guess", "Guess the minimal recurrence of a list of terms");
  positional_help(guess, "terms", "Terms, comma or space separated (or @file)");

  auto* terms_cmd = app.add_subcommand("terms", "First terms of a sequence or of a power series");
  positional_help(terms_cmd, "seq", "Sequence, or rational function in z or t");
  terms_cmd->add_option("-n,--count", count, "Number of terms")->capture_default_str();
  terms_cmd->add_option("--at", at, "Print only the term a(N), by companion-matrix powering");

  auto* add_cmd = app.add_subcommand("add", "Termwise sum");
  positional_help(add_cmd, "seqs", "Two sequences");
  auto* mul_cmd = app.add_subcommand("mul", "Termwise (Hadamard) product");
  positional_help(mul_cmd, "seqs", "Two sequences");
  auto* bt_cmd = app.add_subcommand("bt", "Binomial transform sum_k C(n,k) a(k)");
  positional_help(bt_cmd, "seq", "Sequence");
  auto* psum_cmd = app.add_subcommand("psum", "Partial sums sum_{k<=n} a(k)");
  positional_help(psum_cmd, "seq", "Sequence");
  auto* subseq_cmd = app.add_subcommand("subseq", "n -> a(step*n + offset)");
  positional_help(subseq_cmd, "seq", "Sequence");
  subseq_cmd->add_option("--step", step, "Step")->capture_default_str();
  subseq_cmd->add_option("--offset", offset, "Offset")->capture_default_str();

  auto* gf_cmd = app.add_subcommand("gf", "Sequence -> generating function, or generating function -> sequence");
  positional_help(gf_cmd, "input", "Sequence or rational function in z or t");
  gf_cmd->add_option("--var", var, "Variable name in printed generating functions")->capture_default_str();

  auto* prove_cmd = app.add_subcommand("prove", "Prove two sequences equal by a finite check");
  positional_help(prove_cmd, "seqs", "Two sequences");

  auto* nlr_cmd = app.add_subcommand("nlr", "Guess a polynomial relation among consecutive terms");
  positional_help(nlr_cmd, "input", "Terms or a sequence");
  nlr_cmd->add_option("--order", order, "Relation order")->capture_default_str();
  nlr_cmd->add_option("--degree", degree, "Total degree")->capture_default_str();

  auto* ind_cmd = app.add_subcommand("indicator", "Generic ratio profile of a product with the given factor orders");
  positional_help(ind_cmd, "orders", "Factor orders");

  auto* isprod_cmd = app.add_subcommand("isprod", "Empirical product test via the ratio profile");
  positional_help(isprod_cmd, "seq", "Sequence");
  isprod_cmd->add_option("--orders", orders_text, "Factor orders, e.g. 2,2")->required();
  isprod_cmd->add_flag("--roots", show_roots, "Also print the characteristic roots (30 digits)");

  auto* factor_cmd = app.add_subcommand("factor", "Factor a sequence as a termwise product of two");
  positional_help(factor_cmd, "seq", "Sequence");
  factor_cmd->add_option("--mode", mode, "roots or integer")
      ->check(CLI::IsMember({"roots", "integer"}))
      ->capture_default_str();
  factor_cmd->add_option("--orders", orders_text, "L1,L2")->required();
  factor_cmd->add_option("--bound", bound, "Coefficient bound (integer mode)")->capture_default_str();
  factor_cmd->add_option("--budget", budget, "Time budget in seconds (integer mode)")->capture_default_str();

  auto* dimer_cmd = app.add_subcommand("dimer", "Domino tilings of width-M strips");
  dimer_cmd->add_option("--width", width, "Strip width M")->required()->check(CLI::Range(1u, kMaxDimerWidth));
  dimer_cmd->add_option("--terms", count, "Number of terms")->capture_default_str();
  dimer_cmd->add_option("--hweight", hweight, "Horizontal domino weight")->capture_default_str();
  dimer_cmd->add_option("--vweight", vweight, "Vertical domino weight")->capture_default_str();
  dimer_cmd->add_flag("--report-product", report_product, "Run the product test on the strip sequence");
  dimer_cmd->add_flag("--kasteleyn", show_kasteleyn, "Also print the closed-form product counts (unit weights)");

  auto* seq_cmd = app.add_subcommand("seq", "Named sequence from the corpus");
  positional_help(seq_cmd, "name", "Name followed by parameters");
  seq_cmd->footer([] {
    std::string s = "Positionals:\n  name [params...]\n\nKnown sequences:\n";
    for (const auto& n : corpus())
      s += "  " + n.name + (n.params.empty() ? "" : "(" + join(n.params, ", ") + ")") + "  " + n.description + "\n";
    return s;
  }());

  auto* vid_cmd = app.add_subcommand("verify-identity", "Check a parametric generating-function identity on a grid");
  vid_cmd->add_option("--lhs", lhs, "Sequence expression, e.g. chebyshev_u(a)*chebyshev_u(b)")->required();
  vid_cmd->add_option("--rhs", rhs, "Rational function of t or z in the parameters")->required();
  vid_cmd->add_option("--params", params_text, "Parameter names, e.g. a,b")->required();
  vid_cmd->add_option("--degrees", degrees_text, "Degree bound per parameter, e.g. 2,2")->required();
  vid_cmd->add_option("--points", points_lists, "Grid values of one parameter, repeated per parameter in order; "
                     "a single list may also hold all parameters separated by ';'")
      ->allow_extra_args(false);
  vid_cmd->add_option("--terms", terms, "Series coefficients compared")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  args = app.remaining();
  for (auto* sub : app.get_subcommands()) {
    auto more = sub->remaining();
    args.insert(args.end(), more.begin(), more.end());
  }
  try {
    if (args.empty() && !dimer_cmd->parsed() && !vid_cmd->parsed())
      throw ParseError("missing positional arguments; see --help");
    for (const auto& a : args)
      if (a.rfind("--", 0) == 0) throw ParseError("unknown option " + a);
    if (guess->parsed()) {
      auto s = guess_rec(terms_argument(args));
      if (!s) {
        std::cerr << "no recurrence fits these terms\n";
        return kNegative;
      }
      print_seq(g, *s);
    } else if (terms_cmd->parsed()) {
      const std::string input = join(expand(args), " ");
      if (!looks_like_sequence(input)) {
        // a rational generating function: expand the power series
        const RationalVec t = taylor(gf_expr(input), at ? *at + 1 : count);
        if (at)
          std::cout << (g.json ? to_json(t.back()).dump() : to_string(t.back())) << '\n';
        else
          std::cout << (g.json ? to_json(t).dump() : format_terms(t)) << '\n';
        return kOk;
      }
      if (at) {
        const Rational v = eval_at(one_sequence(args), *at);
        std::cout << (g.json ? to_json(v).dump() : to_string(v)) << '\n';
        return kOk;
      }
      const RationalVec t = eval_terms(one_sequence(args), count);
      std::cout << (g.json ? to_json(t).dump() : format_terms(t)) << '\n';
    } else if (add_cmd->parsed() || mul_cmd->parsed()) {
      const bool is_mul = mul_cmd->parsed();
      auto [a, b] = two_sequences(args);
      const CFiniteSeq r = is_mul ? mul(a, b) : add(a, b);
      verbose_closure(g, is_mul ? "mul" : "add", a, &b, is_mul ? a.order() * b.order() : a.order() + b.order(), r);
      print_seq(g, r);
    } else if (bt_cmd->parsed()) {
      const CFiniteSeq a = one_sequence(args), r = binomial_transform(a);
      verbose_closure(g, "bt", a, nullptr, a.order(), r);
      print_seq(g, r);
    } else if (psum_cmd->parsed()) {
      const CFiniteSeq a = one_sequence(args), r = partial_sums(a);
      verbose_closure(g, "psum", a, nullptr, a.order() + 1, r);
      print_seq(g, r);
    } else if (subseq_cmd->parsed()) {
      if (step < 1) throw PreconditionError("--step must be >= 1");
      const CFiniteSeq a = one_sequence(args), r = subsequence(a, step, offset);
      verbose_closure(g, "subseq", a, nullptr, a.order(), r);
      print_seq(g, r);
    } else if (gf_cmd->parsed()) {
      const auto items = expand(args);
      const std::string input = join(items, " ");
      if (looks_like_sequence(input)) {
        const RationalGF f = c_to_r(sequence_expr(input));
        std::cout << (g.json ? to_json(f).dump() : format_gf(f, var)) << '\n';
      } else {
        print_seq(g, r_to_c(gf_expr(input)));
      }
    } else if (prove_cmd->parsed()) {
      auto [a, b] = two_sequences(args);
      const ProofCertificate c = prove_equal(a, b);
      if (g.verbose && !g.json) {
        std::cout << "A = " << format_seq_display(a) << " has order " << a.order() << '\n';
        std::cout << "B = " << format_seq_display(b) << " has order " << b.order() << '\n';
        std::cout << "A - B satisfies a recurrence of order <= " << c.order_bound
                  << ", so it is zero once it vanishes on that many consecutive terms.\n";
        const std::size_t shown = c.first_difference ? *c.first_difference + 1 : c.terms_checked;
        const RationalVec x = eval_terms(a, shown), y = eval_terms(b, shown);
        for (std::size_t n = 0; n < shown; ++n)
          std::cout << "  n = " << n << ": " << to_string(x[n]) << (x[n] == y[n] ? " = " : " != ") << to_string(y[n])
                    << '\n';
        std::cout << "Conclusion: " << (c.verified ? "A = B for all n. QED." : "A != B.") << '\n';
      }
      print_certificate(g, c);
      return c.verified ? kOk : kNegative;
    } else if (nlr_cmd->parsed()) {
      const auto items = expand(args);
      RationalVec t;
      const std::size_t needed = nlr_min_terms(order, degree) + 20;
      if (items.size() == 1 && looks_like_sequence(items[0]))
        t = eval_terms(sequence_expr(items[0]), needed);
      else
        t = parse_terms(join(items, ","));
      auto rel = guess_nlr(t, order, degree);
      if (!rel) {
        std::cerr << "no relation of order " << order << " and degree " << degree << " fits these terms\n";
        return kNegative;
      }
      std::cout << (g.json ? to_json(*rel).dump() : rel->to_string()) << '\n';
    } else if (ind_cmd->parsed()) {
      const auto orders = parse_counts(join(expand(args), ","));
      for (auto o : orders)
        if (o < 1) throw PreconditionError("orders must be >= 1");
      const RepetitionProfile p = prod_indicator(orders);
      std::cout << (g.json ? json(p.multiplicities).dump() : format_profile(p.multiplicities)) << '\n';
    } else if (isprod_cmd->parsed()) {
      const CFiniteSeq s = one_sequence(args);
      if (show_roots && !g.json) {
        const BinetForm bf = char_roots(minimize(s), g.digits);
        const BigFloat tiny = BigFloat::pow10(-static_cast<long>(g.digits / 2), bf.roots.front().precision());
        for (const auto& r : bf.roots) {
          // imaginary parts at rounding level are printed as real roots
          const bool real = abs(r.im) <= tiny * r.abs();
          std::cout << "root: " << (real ? r.re.to_string(30) : r.to_string(30)) << '\n';
        }
      }
      const ProductVerdict v = is_prod_g(s, parse_counts(orders_text), g.digits);
      std::cout << (g.json ? to_json(v).dump() : v.to_string()) << '\n';
      return v.yes ? kOk : kNegative;
    } else if (factor_cmd->parsed()) {
      const auto orders = parse_counts(orders_text);
      if (orders.size() != 2) throw PreconditionError("--orders takes exactly two values L1,L2");
      const CFiniteSeq s = one_sequence(args);
      std::optional<FactorPair> pair;
      IntegerSearchStats stats;
      if (mode == "roots") {
        pair = factorize_roots(s, orders[0], orders[1], g.digits);
      } else {
        IntegerSearch search;
        search.bound = bound;
        search.budget = std::chrono::duration<double>(budget);
        pair = factorize_integer(s, orders[0], orders[1], search, &stats);
      }
      if (!pair) {
        std::cerr << "no factorization found\n";
        if (g.json) std::cout << "null\n";
        return kNegative;
      }
      if (g.json) {
        json j = to_json(*pair);
        if (mode == "integer")
          j["search"] = {{"candidates", stats.candidates}, {"enumeration_size", stats.enumeration_size}};
        std::cout << j.dump() << '\n';
      } else {
        std::cout << format_seq_display(pair->left) << '\n' << format_seq_display(pair->right) << '\n';
        std::cout << "normalization: " << pair->normalization << '\n';
        std::cout << "certificate: " << certificate_summary(pair->certificate) << '\n';
        if (mode == "integer")
          std::cout << "candidates screened: " << stats.candidates << " of " << stats.enumeration_size << '\n';
      }
    } else if (dimer_cmd->parsed()) {
      const DimerWeights w{parse_rational(hweight), parse_rational(vweight)};
      const RationalVec t = dimer_terms(width, count, w);
      RationalVec closed;
      if (show_kasteleyn)
        for (std::size_t n = 1; n <= count; ++n)
          closed.push_back((width * n) % 2 ? Rational(0) : Rational(kasteleyn_count(width, static_cast<unsigned>(n))));
      if (g.json) {
        json j = {{"width", width}, {"terms", to_json(t)}};
        if (show_kasteleyn) j["kasteleyn"] = to_json(closed);
        if (report_product) {
          const DimerReport r = dimer_product_report(width, g.digits, w);
          j["sequence"] = to_json(r.sequence);
          j["applicable"] = r.applicable;
          if (r.verdict) j["verdict"] = to_json(*r.verdict);
          if (!r.applicable) j["reason"] = r.reason;
        }
        std::cout << j.dump() << '\n';
      } else {
        std::cout << format_terms(t) << '\n';
        if (show_kasteleyn) std::cout << "kasteleyn: " << format_terms(closed) << '\n';
        if (report_product) std::cout << dimer_product_report(width, g.digits, w).to_string();
      }
    } else if (seq_cmd->parsed()) {
      const auto items = expand(args);
      RationalVec params;
      for (std::size_t i = 1; i < items.size(); ++i) params.push_back(parse_rational(items[i]));
      print_seq(g, lookup(items[0], params));
    } else if (vid_cmd->parsed()) {
      std::vector<std::string> names;
      for (const auto& p : split_top_level(params_text, ','))
        if (!p.empty()) names.push_back(p);
      const auto degrees = parse_counts(degrees_text);
      if (degrees.size() != names.size()) throw PreconditionError("--degrees needs one value per parameter");
      IdentityCheck check;
      check.param_degrees = degrees;
      check.series_terms = terms;
      if (!points_lists.empty()) {
        for (const auto& list : points_lists)
          for (const auto& group : split_top_level(list, ';')) check.points.push_back(parse_terms(group));
      }
      auto bind = [names](const ParamPoint& p) {
        Bindings b;
        for (std::size_t i = 0; i < names.size(); ++i) b[names[i]] = p[i];
        return b;
      };
      // Fail on syntax before spawning grid workers.
      const ParamPoint probe(names.size(), make_rational(1, 7));
      sequence_expr(lhs, bind(probe));
      gf_expr(rhs, bind(probe));
      check.lhs = [&](const ParamPoint& p) { return sequence_expr(lhs, bind(p)); };
      check.rhs = [&](const ParamPoint& p) { return gf_expr(rhs, bind(p)); };
      const ProofCertificate c = verify_parametric_identity(check);
      print_certificate(g, c);
      return c.verified ? kOk : kNegative;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PrecisionInsufficient& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kNegative;
  } catch (const BudgetExhausted& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kNegative;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kBug;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kBug;
  }
  return kOk;
}
