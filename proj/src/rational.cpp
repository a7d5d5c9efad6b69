#include "cfinite/rational.hpp"

#include <algorithm>
#include <cctype>

#include "cfinite/errors.hpp"

namespace cfinite {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string ascii_minus(std::string_view text) {
  static constexpr std::string_view kMinus = "\xE2\x88\x92";
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kMinus.size()) == kMinus) {
      out.push_back('-');
      i += kMinus.size();
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + i, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string ascii = ascii_minus(text);
  std::string_view s = trim(ascii);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(trim(s.substr(0, slash)));
  Integer den = parse_integer(trim(s.substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool all_integers(const RationalVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_integer(r); });
}

Integer common_denominator(const RationalVec& v) {
  Integer l = 1;
  for (const auto& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  return l;
}

Integer numerator_gcd(const RationalVec& v) {
  Integer g = 0;
  for (const auto& r : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_num_mpz_t());
  return g;
}

int compare(const RationalVec& a, const RationalVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace cfinite
