#include "orbindex/charform.hpp"

#include "orbindex/errors.hpp"

namespace orbindex {

namespace {

GradedClass root_class(const FixedComponent& y, const std::vector<Rational>& coeffs) {
  return GradedClass::linear(static_cast<unsigned>(y.symbols.size()), y.dim, coeffs);
}

GradedClass symbol_or_zero(const FixedComponent& y, int symbol) {
  unsigned nsym = static_cast<unsigned>(y.symbols.size());
  if (symbol < 0) return GradedClass::constant(nsym, y.dim, Cyclotomic(0));
  return GradedClass::symbol(nsym, y.dim, static_cast<unsigned>(symbol));
}

}  // namespace

GradedClass equiv_chern(const EquivariantBundle& bundle, unsigned class_index,
                        unsigned component_index, unsigned gen_exponent,
                        const FixedComponent& y) {
  unsigned nsym = static_cast<unsigned>(y.symbols.size());
  GradedClass acc = GradedClass::constant(nsym, y.dim, Cyclotomic(0));
  unsigned len = y.dim / 2 + 1;
  for (const BundleRoot& root : bundle.roots.at(class_index).at(component_index)) {
    GradedClass x = root_class(y, root.coeffs);
    GradedClass e = series_apply(series_exp(Rational(1), len), x);
    acc += e.scaled(root.mu.pow(gen_exponent).to_cyclotomic());
  }
  return acc;
}

GradedClass local_density(Operator op, const ManifoldModel& model, unsigned class_index,
                          unsigned component_index, unsigned gen_exponent,
                          const EquivariantBundle* twist) {
  const FixedComponent& y = model.strata.at(class_index).at(component_index);
  unsigned nsym = static_cast<unsigned>(y.symbols.size());
  unsigned len = y.dim / 2 + 1;

  if (op == Operator::DeRham) {
    if (twist != nullptr) throw UnsupportedTwist("deRham density admits no twist");
    GradedClass euler = GradedClass::constant(nsym, y.dim, Cyclotomic(1));
    for (unsigned ts : y.tangent_symbols) {
      euler = euler * GradedClass::symbol(nsym, y.dim, ts);
    }
    return euler;
  }

  GradedClass acc = GradedClass::constant(nsym, y.dim, Cyclotomic(1));
  for (unsigned ts : y.tangent_symbols) {
    GradedClass x = GradedClass::symbol(nsym, y.dim, ts);
    acc = acc * series_apply(op == Operator::Dolbeault ? todd_root_series(len)
                                                       : ahat_root_series(len),
                             x);
  }
  if (twist != nullptr) {
    acc = acc * equiv_chern(*twist, class_index, component_index, gen_exponent, y);
  }
  for (const NormalEntry& ne : y.normal) {
    GradedClass x = symbol_or_zero(y, ne.symbol);
    if (op == Operator::Dolbeault) {
      acc = acc * series_apply(dolbeault_normal_series(ne.eigenvalue.pow(gen_exponent), len), x);
    } else {
      if (!ne.lift) throw UnsupportedParams("spin density needs a lift on " + y.label);
      acc = acc * series_apply(spin_normal_series(ne.lift->pow(gen_exponent), len), x);
    }
  }
  return acc;
}

Cyclotomic integrate(const FixedComponent& y, const GradedClass& c) {
  if (y.dim == 0) return c.constant_term();
  Cyclotomic acc(0);
  for (const auto& [mono, coeff] : c.terms()) {
    if (monomial_degree(mono) != y.dim) continue;
    Rational vol = y.integral_of(mono);
    if (!vol.is_zero()) acc += coeff * Cyclotomic(vol);
  }
  return acc;
}

}  // namespace orbindex
