#include "covol/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace covol {

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s)) throw std::invalid_argument("malformed rational: " + s);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    throw std::invalid_argument("malformed rational: " + s);
  }
  Int d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(Int(num), d);
}

std::string rational_to_string(const Rat& q) {
  if (is_integer(q)) return int_numerator(q).str();
  return int_numerator(q).str() + "/" + int_denominator(q).str();
}

}  // namespace covol
