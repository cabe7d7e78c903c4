#include "orbindex/series.hpp"

#include <map>

#include "orbindex/errors.hpp"

namespace orbindex {

namespace {

Rational factorial(unsigned n) {
  Rational f(1);
  for (unsigned i = 2; i <= n; ++i) f *= Rational(static_cast<long>(i));
  return f;
}

Rational pow2(unsigned n) {
  Rational p(1);
  for (unsigned i = 0; i < n; ++i) p *= Rational(2);
  return p;
}

}  // namespace

Series series_mul(const Series& a, const Series& b) {
  unsigned len = std::min(a.length(), b.length());
  Series out = Series::zero(len);
  for (unsigned i = 0; i < len; ++i) {
    for (unsigned j = 0; i + j < len && j < b.length(); ++j) {
      if (i < a.length()) out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return out;
}

Series series_reciprocal(const Series& a) {
  if (a.length() == 0 || a.c[0].is_zero()) {
    throw SingularSeries("series reciprocal with vanishing constant term");
  }
  Series out = Series::zero(a.length());
  Cyclotomic inv0 = a.c[0].inverse();
  out.c[0] = inv0;
  for (unsigned n = 1; n < a.length(); ++n) {
    Cyclotomic acc(0);
    for (unsigned k = 1; k <= n; ++k) acc += a.c[k] * out.c[n - k];
    out.c[n] = -(inv0 * acc);
  }
  return out;
}

Series series_exp(const Rational& scale, unsigned len) {
  Series out = Series::zero(len);
  Rational term(1);
  for (unsigned i = 0; i < len; ++i) {
    out.c[i] = Cyclotomic(term);
    term = term * scale / Rational(static_cast<long>(i + 1));
  }
  return out;
}

Series ahat_root_series(unsigned len) {
  thread_local std::map<unsigned, Series> memo;
  auto it = memo.find(len);
  if (it != memo.end()) return it->second;
  // sinh(x/2)/(x/2) = sum x^{2k} / (4^k (2k+1)!), then invert.
  Series s = Series::zero(len);
  for (unsigned k = 0; 2 * k < len; ++k) {
    s.c[2 * k] = Cyclotomic(Rational(1) / (pow2(2 * k) * factorial(2 * k + 1)));
  }
  return memo.emplace(len, series_reciprocal(s)).first->second;
}

Series todd_root_series(unsigned len) {
  thread_local std::map<unsigned, Series> memo;
  auto it = memo.find(len);
  if (it != memo.end()) return it->second;
  // (1 - e^{-x})/x = sum (-1)^i x^i / (i+1)!, then invert.
  Series s = Series::zero(len);
  for (unsigned i = 0; i < len; ++i) {
    Rational c = Rational(1) / factorial(i + 1);
    if (i % 2 == 1) c = -c;
    s.c[i] = Cyclotomic(c);
  }
  return memo.emplace(len, series_reciprocal(s)).first->second;
}

Series dolbeault_normal_series(const RootOfUnity& lambda, unsigned len) {
  if (lambda.is_one()) throw SingularSeries("dolbeault normal factor at eigenvalue 1");
  Cyclotomic linv = lambda.inverse().to_cyclotomic();
  Series s = Series::zero(len);
  for (unsigned i = 0; i < len; ++i) {
    Rational c = Rational(1) / factorial(i);
    if (i % 2 == 1) c = -c;
    // 1 - l^{-1} e^{-x}
    Cyclotomic term = -(linv * Cyclotomic(c));
    if (i == 0) term += Cyclotomic(1);
    s.c[i] = term;
  }
  return series_reciprocal(s);
}

Series spin_normal_series(const RootOfUnity& lift, unsigned len) {
  if (lift.pow(2).is_one()) {
    throw SingularSeries("spin normal factor with lift squaring to 1");
  }
  Cyclotomic s = lift.to_cyclotomic();
  Cyclotomic sinv = lift.inverse().to_cyclotomic();
  Series d = Series::zero(len);
  for (unsigned i = 0; i < len; ++i) {
    // s e^{x/2} - s^{-1} e^{-x/2}: coefficient (s - (-1)^i s^{-1}) / (2^i i!)
    Cyclotomic num = (i % 2 == 0) ? s - sinv : s + sinv;
    d.c[i] = num * Cyclotomic(Rational(1) / (pow2(i) * factorial(i)));
  }
  return series_reciprocal(d);
}

GradedClass series_apply(const Series& f, const GradedClass& root) {
  if (!root.constant_term().is_zero()) {
    throw SingularSeries("series substitution needs a nilpotent argument");
  }
  GradedClass acc = GradedClass::constant(root.nsymbols(), root.dim(), Cyclotomic(0));
  GradedClass power = GradedClass::constant(root.nsymbols(), root.dim(), Cyclotomic(1));
  for (unsigned i = 0; i < f.length(); ++i) {
    if (i > 0) {
      power = power * root;
      if (power.is_zero()) break;
    }
    acc += power.scaled(f.c[i]);
  }
  return acc;
}

GradedClass series_eval(RootSeriesKind kind, const GradedClass& root) {
  unsigned len = root.dim() / 2 + 1;
  switch (kind) {
    case RootSeriesKind::Ahat:
      return series_apply(ahat_root_series(len), root);
    case RootSeriesKind::Todd:
      return series_apply(todd_root_series(len), root);
  }
  throw UnsupportedParams("unknown series kind");
}

}  // namespace orbindex
