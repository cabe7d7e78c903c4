#pragma once

#include <vector>

#include "orbindex/cyclotomic.hpp"
#include "orbindex/graded.hpp"

namespace orbindex {

// Truncated univariate power series with Cyclotomic coefficients,
// c[i] = coefficient of x^i.
struct Series {
  std::vector<Cyclotomic> c;

  unsigned length() const { return static_cast<unsigned>(c.size()); }
  static Series zero(unsigned len) { return Series{std::vector<Cyclotomic>(len)}; }
};

Series series_mul(const Series& a, const Series& b);
// 1/a; requires a.c[0] != 0.
Series series_reciprocal(const Series& a);
// e^{scale * x}.
Series series_exp(const Rational& scale, unsigned len);

// Characteristic root series, all exact:
//   ahat:            (x/2) / sinh(x/2)
//   todd:            x / (1 - e^{-x})
//   dolbeault(l):    1 / (1 - l^{-1} e^{-x}),  l != 1
//   spin(s):         1 / (s e^{x/2} - s^{-1} e^{-x/2}),  s^2 != 1
Series ahat_root_series(unsigned len);
Series todd_root_series(unsigned len);
Series dolbeault_normal_series(const RootOfUnity& lambda, unsigned len);
Series spin_normal_series(const RootOfUnity& lift, unsigned len);

enum class RootSeriesKind { Ahat, Todd };

// Substitute a nilpotent degree-2 class for x and truncate.
// Pre: root has zero constant term.
GradedClass series_apply(const Series& f, const GradedClass& root);

// Convenience: evaluate one of the named series on a root class.
GradedClass series_eval(RootSeriesKind kind, const GradedClass& root);

}  // namespace orbindex
