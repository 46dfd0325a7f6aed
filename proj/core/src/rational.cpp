#include "balanced/rational.hpp"

#include <cctype>

#include "balanced/errors.hpp"

namespace balanced {

namespace {

bool is_integer_token(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational: zero denominator");
  // The two-argument constructor rejects unnormalized signs; division
  // normalizes both sign and gcd.
  return Rational(num) / Rational(den);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text, true)) {
      throw InputError("rational: expected \"p\" or \"p/q\", got \"" +
                       std::string(text) + "\"");
    }
    return Rational(Integer(std::string(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(num, true) || !is_integer_token(den, false)) {
    throw InputError("rational: expected \"p\" or \"p/q\", got \"" +
                     std::string(text) + "\"");
  }
  return make_rational(Integer(std::string(num)), Integer(std::string(den)));
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const Integer& value) { return value.str(); }

}  // namespace balanced
