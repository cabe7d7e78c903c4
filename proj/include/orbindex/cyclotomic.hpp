#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbindex/rational.hpp"

namespace orbindex {

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

// Global cap on cyclotomic orders, read once from ORBINDEX_MAX_ORDER
// (default 360). Guards against runaway lcm promotion on bad input.
unsigned cyclotomic_order_limit();

// Exact element of Q(zeta_N). Canonical form: the coefficient vector of the
// residue modulo the N-th cyclotomic polynomial, i.e. coordinates in the
// power basis 1, z, ..., z^{phi(N)-1}. Equality-to-zero is a plain
// coefficient check. Values are immutable; all operations are pure.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}  // NOLINT
  Cyclotomic(long n) : Cyclotomic(Rational(n)) {}           // NOLINT

  // zeta_N^k (k may be negative).
  static Cyclotomic root(unsigned n, long k);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws NotRational

  // Embed into Q(zeta_m); requires order() | m.
  Cyclotomic promoted(unsigned m) const;
  // Rewrite over the smallest cyclotomic order containing the value.
  Cyclotomic minimized() const;

  Cyclotomic conj() const;
  // Galois substitution zeta -> zeta^j, gcd(j, order) = 1.
  Cyclotomic galois(unsigned j) const;
  Cyclotomic pow(long e) const;
  Cyclotomic inverse() const;  // throws DivisionByZero

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // "3/5", "-1", or "1 + 1*z^1 (z = zeta_3)"; minimal order, nonzero terms
  // only, exponents increasing. Used verbatim in reports.
  std::string str() const;
  static Cyclotomic parse(const std::string& s);

 private:
  Cyclotomic(unsigned order, std::vector<Rational> reduced)
      : order_(order), coeffs_(std::move(reduced)) {}
  static Cyclotomic from_poly(unsigned order, const std::vector<Rational>& poly);

  unsigned order_;
  std::vector<Rational> coeffs_;  // size phi(order_)
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

// Root of unity e^{2 pi i k/n} tracked by exponent; cheap exact powers and
// square roots. Always stored reduced: gcd(k, n) = 1 or k = 0, n = 1.
class RootOfUnity {
 public:
  RootOfUnity() : num_(0), den_(1) {}
  RootOfUnity(long k, unsigned n);  // e^{2 pi i k/n}

  unsigned order() const { return den_; }
  unsigned exponent() const { return num_; }
  bool is_one() const { return den_ == 1; }

  RootOfUnity pow(long e) const;
  RootOfUnity inverse() const { return pow(-1); }
  RootOfUnity conj() const { return pow(-1); }
  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);

  // The two square roots, as (principal, other).
  std::pair<RootOfUnity, RootOfUnity> sqrts() const;

  Cyclotomic to_cyclotomic() const;
  std::string str() const;  // "k/n" exponent form
  static RootOfUnity parse(const std::string& s);

  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }
  friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
    return a.den_ != b.den_ ? a.den_ < b.den_ : a.num_ < b.num_;
  }

 private:
  unsigned num_;
  unsigned den_;
};

}  // namespace orbindex
