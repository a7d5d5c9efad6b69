#include "cfinite/text.hpp"

#include <cctype>
#include <sstream>

#include "cfinite/errors.hpp"

namespace cfinite {

namespace {

std::string join(const RationalVec& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

std::string without_space(std::string_view text) {
  std::string out;
  for (char c : ascii_minus(text))
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

RationalVec parse_list(const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '[') throw ParseError("expected '[' at offset " + std::to_string(pos));
  ++pos;
  RationalVec out;
  std::size_t start = pos;
  while (pos < s.size() && s[pos] != ']') ++pos;
  if (pos == s.size()) throw ParseError("unterminated list");
  std::string body = s.substr(start, pos - start);
  ++pos;
  if (body.empty()) return out;
  std::size_t from = 0;
  while (true) {
    auto comma = body.find(',', from);
    out.push_back(parse_rational(body.substr(from, comma - from)));
    if (comma == std::string::npos) break;
    from = comma + 1;
  }
  return out;
}

// A rational function as an unreduced pair; reduction happens once, in the
// RationalGF constructor.
struct Fraction {
  Polynomial num;
  Polynomial den;
};

class ExprParser {
 public:
  ExprParser(std::string text, const Bindings& params) : s_(std::move(text)), params_(params) {}

  Fraction parse() {
    Fraction f = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression: " + what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Fraction add(const Fraction& a, const Fraction& b, bool subtract) {
    Polynomial lhs = a.num * b.den;
    Polynomial rhs = b.num * a.den;
    return {subtract ? lhs - rhs : lhs + rhs, a.den * b.den};
  }

  Fraction expr() {
    Fraction acc = term();
    while (pos_ < s_.size()) {
      if (eat('+')) {
        acc = add(acc, term(), false);
      } else if (eat('-')) {
        acc = add(acc, term(), true);
      } else {
        break;
      }
    }
    return acc;
  }

  Fraction term() {
    Fraction acc = unary();
    while (pos_ < s_.size()) {
      if (eat('*')) {
        Fraction r = unary();
        acc = {acc.num * r.num, acc.den * r.den};
      } else if (eat('/')) {
        Fraction r = unary();
        if (r.num.is_zero()) fail("division by zero");
        acc = {acc.num * r.den, acc.den * r.num};
      } else {
        break;
      }
    }
    return acc;
  }

  Fraction unary() {
    if (eat('-')) {
      Fraction f = unary();
      return {-f.num, f.den};
    }
    if (eat('+')) return unary();
    return power();
  }

  Fraction power() {
    Fraction base = primary();
    if (!eat('^')) return base;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
    return {base.num.pow(e), base.den.pow(e)};
  }

  Fraction primary() {
    if (eat('(')) {
      Fraction f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Rational(Integer(s_.substr(start, pos_ - start), 10)));
    }
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (auto it = params_.find(name); it != params_.end()) return constant(it->second);
      if (name == "z" || name == "t") return {Polynomial{0, 1}, Polynomial::constant(1)};
      fail("unknown symbol '" + name + "'");
    }
    fail("expected a number, symbol or '('");
  }

  static Fraction constant(const Rational& c) { return {Polynomial::constant(c), Polynomial::constant(1)}; }

  std::string s_;
  const Bindings& params_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_seq(const CFiniteSeq& seq) {
  return "[[" + join(seq.init(), ",") + "],[" + join(seq.rec(), ",") + "]]";
}

std::string format_seq_display(const CFiniteSeq& seq) {
  return "[[" + join(seq.init(), ", ") + "], [" + join(seq.rec(), ", ") + "]]";
}

CFiniteSeq parse_seq(std::string_view text) {
  std::string s = without_space(text);
  std::size_t pos = 0;
  if (s.empty() || s[pos++] != '[') throw ParseError("sequence literal must start with '[['");
  RationalVec init = parse_list(s, pos);
  if (pos >= s.size() || s[pos++] != ',') throw ParseError("expected ',' between the two lists");
  RationalVec rec = parse_list(s, pos);
  if (pos >= s.size() || s[pos++] != ']' || pos != s.size())
    throw ParseError("sequence literal must end with ']]'");
  return CFiniteSeq(std::move(init), std::move(rec));
}

std::string format_gf(const RationalGF& gf, const std::string& var) {
  return "(" + gf.numerator().to_string(var) + ")/(" + gf.denominator().to_string(var) + ")";
}

RationalGF parse_gf(std::string_view text, const Bindings& params) {
  std::string s = without_space(text);
  if (s.empty()) throw ParseError("empty generating function");
  Fraction f = ExprParser(std::move(s), params).parse();
  return RationalGF(std::move(f.num), std::move(f.den));
}

RationalVec parse_terms(std::string_view text) {
  std::string s = ascii_minus(text);
  for (char& c : s)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(s);
  RationalVec out;
  std::string tok;
  while (in >> tok) out.push_back(parse_rational(tok));
  return out;
}

std::string format_terms(const RationalVec& terms) { return join(terms, ", "); }

std::string format_profile(const std::vector<std::size_t>& profile) {
  std::string out = "[";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(profile[i]);
  }
  return out + "]";
}

}  // namespace cfinite
