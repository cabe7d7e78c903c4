#include "orbindex/rational.hpp"

namespace orbindex {

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero();
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  try {
    mpq_class v(s);
    v.canonicalize();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

long Rational::to_long() const {
  if (!fits_long()) throw NonIntegral("to_long on " + str());
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

}  // namespace orbindex
