#include "rht/rational.hpp"

#include <stdexcept>

namespace rht {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  const auto slash = text.find('/');
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (text[k] < '0' || text[k] > '9') return false;
    return true;
  };
  const std::size_t num_end = slash == std::string::npos ? text.size() : slash;
  if (!digits_ok(i, num_end) ||
      (slash != std::string::npos && !digits_ok(slash + 1, text.size())))
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  mpz_class num(text.substr(i, num_end - i));
  mpz_class den(1);
  if (slash != std::string::npos) den = mpz_class(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  if (text[0] == '-') num = -num;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace rht
