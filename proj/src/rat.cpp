#include "vertexkz/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace vertexkz {

Rat::Rat(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat::Rat(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start == part.size()) throw std::invalid_argument("malformed rational literal: " + s);
    for (std::size_t k = start; k < part.size(); ++k) {
      if (part[k] < '0' || part[k] > '9') {
        throw std::invalid_argument("malformed rational literal: " + s);
      }
    }
    // mpz_class rejects a leading '+'
    return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return Rat(parse_int(s, true));
  const mpz_class num = parse_int(s.substr(0, slash), true);
  const mpz_class den = parse_int(s.substr(slash + 1), false);
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
  return Rat(num, den);
}

std::string Rat::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat Rat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rat(mpq_class(1) / value_);
}

Rat Rat::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(num, den);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace vertexkz
