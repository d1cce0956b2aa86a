#include "bgg/rational.hpp"

#include <stdexcept>

namespace bgg {

std::string rational_to_string(const Rational& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Int(std::string(s)));
    }
    const Int num{std::string(s.substr(0, slash))};
    const Int den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("malformed rational literal '") +
                                std::string(s) + "': " + e.what());
  }
}

}  // namespace bgg
