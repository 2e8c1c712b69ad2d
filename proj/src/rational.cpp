#include "gmtlab/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace gmtlab {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in rational '" + text + "'");
    }
    // Division canonicalizes: reduced form, positive denominator.
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

} // namespace gmtlab
