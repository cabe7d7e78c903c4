#include "orbindex/cyclotomic.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace orbindex {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned cyclotomic_order_limit() {
  static const unsigned limit = [] {
    const char* env = std::getenv("ORBINDEX_MAX_ORDER");
    if (env == nullptr) return 360u;
    long v = std::atol(env);
    return v > 0 ? static_cast<unsigned>(v) : 360u;
  }();
  return limit;
}

namespace {

void check_order(unsigned n) {
  if (n == 0) throw UnsupportedParams("cyclotomic order 0");
  if (n > cyclotomic_order_limit()) {
    throw OrderLimitExceeded("order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cyclotomic_order_limit()));
  }
}

// Integer polynomial utilities for computing cyclotomic polynomials.
using ZPoly = std::vector<mpz_class>;  // coeffs, lowest degree first

ZPoly zpoly_div_exact(const ZPoly& a, const ZPoly& b) {
  ZPoly rem = a;
  ZPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
  while (rem.size() >= b.size() && !(rem.size() == 1 && rem[0] == 0)) {
    size_t shift = rem.size() - b.size();
    mpz_class factor = rem.back() / b.back();
    quot[shift] = factor;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
    while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
    if (rem.size() < b.size()) break;
  }
  return quot;
}

// Phi_n(x), memoized per thread (tiny polynomials; avoids a hot lock).
// Computed by dividing x^n - 1 by the proper divisors' polynomials.
const ZPoly& cyclotomic_poly(unsigned n) {
  thread_local std::map<unsigned, ZPoly> cache;
  std::function<const ZPoly&(unsigned)> get = [&](unsigned m) -> const ZPoly& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    ZPoly xm1(m + 1, mpz_class(0));
    xm1[0] = -1;
    xm1[m] = 1;
    ZPoly acc = xm1;
    for (unsigned d : divisors(m)) {
      if (d == m) continue;
      acc = zpoly_div_exact(acc, get(d));
    }
    return cache.emplace(m, std::move(acc)).first->second;
  };
  return get(n);
}

// Remainder of a rational polynomial modulo Phi_n (monic), truncated to
// phi(n) coefficients.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, unsigned n) {
  const ZPoly& phi = cyclotomic_poly(n);
  const size_t deg = phi.size() - 1;  // = euler_phi(n)
  while (poly.size() > deg) {
    Rational lead = poly.back();
    size_t shift = poly.size() - 1 - deg;
    if (!lead.is_zero()) {
      for (size_t i = 0; i < phi.size(); ++i) {
        poly[shift + i] -= lead * Rational(mpq_class(phi[i]));
      }
    }
    poly.pop_back();
  }
  poly.resize(deg, Rational(0));
  return poly;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void poly_trim(std::vector<Rational>& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

// Extended Euclid over Q[x]: returns u with u*a == 1 modulo the monic
// irreducible m. Used for inversion in Q(zeta_n).
std::vector<Rational> poly_modular_inverse(std::vector<Rational> a,
                                           std::vector<Rational> m) {
  poly_trim(a);
  poly_trim(m);
  std::vector<Rational> r0 = m, r1 = a;
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
  while (!(r1.size() == 1 && r1[0].is_zero())) {
    // divide r0 by r1
    std::vector<Rational> q(std::max<size_t>(1, r0.size() >= r1.size()
                                                    ? r0.size() - r1.size() + 1
                                                    : 1),
                            Rational(0));
    std::vector<Rational> rem = r0;
    while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0].is_zero())) {
      size_t shift = rem.size() - r1.size();
      Rational factor = rem.back() / r1.back();
      q[shift] += factor;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= factor * r1[i];
      poly_trim(rem);
      if (rem.size() < r1.size()) break;
    }
    // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - q*s1)
    std::vector<Rational> qs = poly_mul(q, s1);
    std::vector<Rational> s2(std::max(s0.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a nonzero constant, since m is irreducible and a != 0 mod m)
  if (r0.size() != 1 || r0[0].is_zero()) throw DivisionByZero();
  for (auto& c : s0) c /= r0[0];
  return s0;
}

}  // namespace

Cyclotomic Cyclotomic::from_poly(unsigned order, const std::vector<Rational>& poly) {
  return Cyclotomic(order, reduce_mod_phi(poly, order));
}

Cyclotomic Cyclotomic::root(unsigned n, long k) {
  check_order(n);
  long kk = k % static_cast<long>(n);
  if (kk < 0) kk += n;
  std::vector<Rational> poly(static_cast<size_t>(kk) + 1, Rational(0));
  poly[static_cast<size_t>(kk)] = Rational(1);
  return from_poly(n, poly);
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw NotRational(str());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(unsigned m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw UnsupportedParams("promotion target not a multiple");
  check_order(m);
  unsigned step = m / order_;
  std::vector<Rational> poly(static_cast<size_t>(coeffs_.size() - 1) * step + 1,
                             Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  return from_poly(m, poly);
}

Cyclotomic Cyclotomic::galois(unsigned j) const {
  j %= order_;
  if (order_ > 1 && std::gcd(j, order_) != 1) {
    throw UnsupportedParams("galois exponent not coprime to order");
  }
  std::vector<Rational> out(std::max<size_t>(order_, 1), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    out[(i * j) % order_] += coeffs_[i];
  }
  return from_poly(order_, out);
}

Cyclotomic Cyclotomic::conj() const {
  if (order_ <= 2) return *this;
  return galois(order_ - 1);
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned m = std::lcm(a.order_, b.order_);
  check_order(m);
  Cyclotomic pa = a.promoted(m), pb = b.promoted(m);
  for (size_t i = 0; i < pa.coeffs_.size(); ++i) pa.coeffs_[i] += pb.coeffs_[i];
  return pa;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned m = std::lcm(a.order_, b.order_);
  check_order(m);
  Cyclotomic pa = a.promoted(m), pb = b.promoted(m);
  return Cyclotomic::from_poly(m, poly_mul(pa.coeffs_, pb.coeffs_));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]).promoted(order_);
  const ZPoly& phi = cyclotomic_poly(order_);
  std::vector<Rational> m(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) m[i] = Rational(mpq_class(phi[i]));
  std::vector<Rational> inv = poly_modular_inverse(coeffs_, m);
  return from_poly(order_, inv);
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  return a * b.inverse();
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e == 0) return Cyclotomic(Rational(1)).promoted(order_);
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Cyclotomic acc = Cyclotomic(Rational(1)).promoted(order_);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned m = std::lcm(a.order_, b.order_);
  Cyclotomic pa = a.promoted(m), pb = b.promoted(m);
  return pa.coeffs_ == pb.coeffs_;
}

Cyclotomic Cyclotomic::minimized() const {
  if (is_rational()) return Cyclotomic(coeffs_[0]);
  for (unsigned m : divisors(order_)) {
    if (m == order_) break;
    if (euler_phi(order_) % euler_phi(m) != 0) continue;
    // Invariance under Gal(Q(zeta_N)/Q(zeta_m)) = { j : j = 1 mod m }.
    bool invariant = true;
    for (unsigned j = 1; j < order_ && invariant; ++j) {
      if (std::gcd(j, order_) != 1 || j % m != 1) continue;
      if (galois(j) != *this) invariant = false;
    }
    if (!invariant) continue;
    // Solve for coordinates over the smaller power basis by exact
    // Gaussian elimination on the embedding images.
    unsigned pm = euler_phi(m);
    unsigned pn = euler_phi(order_);
    std::vector<std::vector<Rational>> aug(pn, std::vector<Rational>(pm + 1, Rational(0)));
    for (unsigned col = 0; col < pm; ++col) {
      Cyclotomic img = root(m, col).promoted(order_);
      for (unsigned row = 0; row < pn; ++row) aug[row][col] = img.coeffs()[row];
    }
    for (unsigned row = 0; row < pn; ++row) aug[row][pm] = coeffs_[row];
    // forward elimination with partial (first nonzero) pivoting
    unsigned rank = 0;
    std::vector<int> pivot_col(pn, -1);
    for (unsigned col = 0; col < pm && rank < pn; ++col) {
      unsigned sel = rank;
      while (sel < pn && aug[sel][col].is_zero()) ++sel;
      if (sel == pn) continue;
      std::swap(aug[rank], aug[sel]);
      Rational p = aug[rank][col];
      for (unsigned c = col; c <= pm; ++c) aug[rank][c] /= p;
      for (unsigned r = 0; r < pn; ++r) {
        if (r == rank || aug[r][col].is_zero()) continue;
        Rational f = aug[r][col];
        for (unsigned c = col; c <= pm; ++c) aug[r][c] -= f * aug[rank][c];
      }
      pivot_col[rank] = static_cast<int>(col);
      ++rank;
    }
    std::vector<Rational> sol(pm, Rational(0));
    bool consistent = true;
    for (unsigned r = 0; r < pn; ++r) {
      bool allzero = true;
      for (unsigned c = 0; c < pm; ++c) {
        if (!aug[r][c].is_zero()) { allzero = false; break; }
      }
      if (allzero && !aug[r][pm].is_zero()) { consistent = false; break; }
    }
    if (!consistent) continue;  // should not happen; fall through defensively
    for (unsigned r = 0; r < rank; ++r) sol[static_cast<unsigned>(pivot_col[r])] = aug[r][pm];
    return Cyclotomic(m, std::move(sol));
  }
  return *this;
}

std::string Cyclotomic::str() const {
  Cyclotomic m = minimized();
  if (m.order_ == 1) return m.coeffs_[0].str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.coeffs_.size(); ++i) {
    if (m.coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << m.coeffs_[i].str();
    } else {
      os << m.coeffs_[i].str() << "*z^" << i;
    }
  }
  if (first) os << "0";
  os << " (z = zeta_" << m.order_ << ")";
  return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& s) {
  std::string body = s;
  unsigned order = 1;
  auto paren = s.find("(z = zeta_");
  if (paren != std::string::npos) {
    auto close = s.find(')', paren);
    if (close == std::string::npos) throw ParseError("unterminated order suffix: " + s);
    order = static_cast<unsigned>(
        std::stoul(s.substr(paren + 10, close - paren - 10)));
    check_order(order);
    body = s.substr(0, paren);
  }
  // strip whitespace, then split on '+' separators between terms
  Cyclotomic acc = Cyclotomic(Rational(0)).promoted(order);
  std::string term;
  std::vector<std::string> terms;
  std::string compact;
  for (char ch : body) {
    if (ch != ' ') compact.push_back(ch);
  }
  if (compact.empty()) throw ParseError("empty cyclotomic literal");
  size_t pos = 0;
  while (pos < compact.size()) {
    size_t next = compact.find('+', pos + 1);  // leading '-' allowed inside term
    if (next == std::string::npos) next = compact.size();
    terms.push_back(compact.substr(pos, next - pos));
    pos = next + 1;
  }
  for (const std::string& t : terms) {
    auto star = t.find("*z^");
    if (star == std::string::npos) {
      auto zcar = t.find("z^");
      if (zcar == 0) {  // bare "z^k"
        long k = std::stol(t.substr(2));
        acc += root(order, k);
        continue;
      }
      acc += Cyclotomic(Rational::parse(t)).promoted(order);
    } else {
      Rational c = Rational::parse(t.substr(0, star));
      long k = std::stol(t.substr(star + 3));
      acc += Cyclotomic(c) * root(order, k);
    }
  }
  return acc;
}

RootOfUnity::RootOfUnity(long k, unsigned n) {
  if (n == 0) throw UnsupportedParams("root of unity with order 0");
  long kk = k % static_cast<long>(n);
  if (kk < 0) kk += n;
  unsigned g = std::gcd(static_cast<unsigned>(kk), n);
  if (kk == 0) {
    num_ = 0;
    den_ = 1;
  } else {
    num_ = static_cast<unsigned>(kk) / g;
    den_ = n / g;
  }
}

RootOfUnity RootOfUnity::pow(long e) const {
  long k = (static_cast<long>(num_) % den_) * (e % static_cast<long>(den_));
  return RootOfUnity(k, den_);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  unsigned n = std::lcm(a.order(), b.order());
  long k = static_cast<long>(a.exponent()) * (n / a.order()) +
           static_cast<long>(b.exponent()) * (n / b.order());
  return RootOfUnity(k, n);
}

std::pair<RootOfUnity, RootOfUnity> RootOfUnity::sqrts() const {
  RootOfUnity principal(static_cast<long>(num_), 2 * den_);
  RootOfUnity other(static_cast<long>(num_) + static_cast<long>(den_), 2 * den_);
  return {principal, other};
}

Cyclotomic RootOfUnity::to_cyclotomic() const {
  return Cyclotomic::root(den_, static_cast<long>(num_));
}

std::string RootOfUnity::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RootOfUnity RootOfUnity::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw ParseError("bad root of unity '" + s + "'");
  long k = std::stol(s.substr(0, slash));
  unsigned n = static_cast<unsigned>(std::stoul(s.substr(slash + 1)));
  return RootOfUnity(k, n);
}

}  // namespace orbindex
