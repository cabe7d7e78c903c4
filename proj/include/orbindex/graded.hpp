#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbindex/cyclotomic.hpp"

namespace orbindex {

// Exponent vector over a stratum's degree-2 generator symbols.
using Monomial = std::vector<unsigned>;

inline unsigned monomial_degree(const Monomial& m) {
  unsigned s = 0;
  for (unsigned e : m) s += e;
  return 2 * s;
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names);
Monomial monomial_parse(const std::string& s, const std::vector<std::string>& names);

// Truncated graded-commutative polynomial in n degree-2 generators with
// Cyclotomic coefficients. All monomials of total degree > dim are dropped;
// since every generator has even degree the algebra is commutative.
class GradedClass {
 public:
  GradedClass(unsigned nsym, unsigned dim) : nsym_(nsym), dim_(dim) {}

  static GradedClass constant(unsigned nsym, unsigned dim, const Cyclotomic& c);
  static GradedClass symbol(unsigned nsym, unsigned dim, unsigned index);
  // Linear combination sum_i coeff[i] * x_i.
  static GradedClass linear(unsigned nsym, unsigned dim, const std::vector<Rational>& coeff);

  unsigned nsymbols() const { return nsym_; }
  unsigned dim() const { return dim_; }
  const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Cyclotomic constant_term() const;
  Cyclotomic coefficient(const Monomial& m) const;
  // Sum of terms of exact total degree d.
  GradedClass degree_part(unsigned d) const;
  // Re-truncate to a smaller dimension.
  GradedClass truncated(unsigned dim) const;

  GradedClass operator-() const;
  friend GradedClass operator+(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator-(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  GradedClass& operator+=(const GradedClass& o) { return *this = *this + o; }
  GradedClass& operator*=(const GradedClass& o) { return *this = *this * o; }
  GradedClass scaled(const Cyclotomic& c) const;

  friend bool operator==(const GradedClass& a, const GradedClass& b);
  friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

  // Debug dump: one "coeff * mono" per line.
  std::string str(const std::vector<std::string>& names) const;

  void add_term(const Monomial& m, const Cyclotomic& c);

 private:
  unsigned nsym_;
  unsigned dim_;
  std::map<Monomial, Cyclotomic> terms_;  // no zero coefficients kept
};

}  // namespace orbindex
