#include "orbindex/oracle.hpp"

#include "orbindex/errors.hpp"

namespace orbindex {

namespace {

// Super-character values of one line-bundle summand, indexed by element of
// the comparison cyclic group.
std::vector<Cyclotomic> atom_character(const ManifoldModel& model, Operator op,
                                       const TwistAtom& atom) {
  const FiniteGroup& h = model.group.comparison_group();
  unsigned n = h.order();
  std::vector<Cyclotomic> chi(n, Cyclotomic(0));
  long k = atom.degree;
  long w = static_cast<long>(atom.weight);

  if (model.family == "football") {
    for (unsigned j = 0; j < n; ++j) {
      Cyclotomic value(0);
      if (op == Operator::DeRham) {
        value = Cyclotomic(2);  // H^0 and H^2 carry the trivial action
      } else if (op == Operator::Spin) {
        value = Cyclotomic(0);  // no harmonic spinors on the round sphere
      } else {
        if (k >= 0) {
          // holomorphic sections: monomial weights 0..k
          for (long i = 0; i <= k; ++i) value += Cyclotomic::root(n, i * j);
        } else if (k <= -2) {
          // dual weights of H^1 by duality; k = -1 has no cohomology
          for (long i = 1; i <= -k - 1; ++i) value -= Cyclotomic::root(n, -i * j);
        }
        value *= Cyclotomic::root(n, w * j);
      }
      chi[j] = value;
    }
    return chi;
  }

  if (model.family == "torusrot" || model.family == "wallpaper") {
    for (unsigned j = 0; j < n; ++j) {
      if (op == Operator::DeRham) {
        // 1 - (zeta^j + zeta^-j) + 1 from H^0, H^1, H^2 of the torus
        chi[j] = Cyclotomic(2) - Cyclotomic::root(n, j) - Cyclotomic::root(n, -(long)j);
      } else {
        // constants minus the antiholomorphic line: 1 - zeta^j, flat twist
        chi[j] = (Cyclotomic(1) - Cyclotomic::root(n, j)) * Cyclotomic::root(n, w * j);
      }
    }
    return chi;
  }

  if (model.family == "symprod_s2") {
    // product cohomology of O(k) box O(k); the swap contributes the super
    // dimension by the trace-of-transposition identity
    long sdim = k + 1;
    if (op == Operator::DeRham) {
      chi[0] = Cyclotomic(4);
      chi[1] = Cyclotomic(2);
    } else if (op == Operator::Spin) {
      chi[0] = Cyclotomic(0);
      chi[1] = Cyclotomic(0);
    } else {
      chi[0] = Cyclotomic(Rational(sdim * sdim));
      long sign = (w % 2 == 0) ? 1 : -1;
      chi[1] = Cyclotomic(Rational(sign * sdim));
    }
    return chi;
  }

  throw UnsupportedModel("no closed-form kernel description for " + model.id);
}

std::vector<Cyclotomic> character_by_element(const ManifoldModel& model, Operator op,
                                             const TwistSpec& twist) {
  if (op != Operator::Dolbeault && !twist.is_trivial()) {
    throw UnsupportedTwist(operator_name(op) + " kernel supports no twist");
  }
  std::vector<TwistAtom> atoms = twist.atoms;
  if (atoms.empty()) atoms.push_back(TwistAtom{0, 0});
  unsigned n = model.group.comparison_group().order();
  std::vector<Cyclotomic> chi(n, Cyclotomic(0));
  for (const TwistAtom& atom : atoms) {
    std::vector<Cyclotomic> part = atom_character(model, op, atom);
    for (unsigned j = 0; j < n; ++j) chi[j] += part[j];
  }
  return chi;
}

}  // namespace

ClassFunction kernel_character(const ManifoldModel& model, Operator op,
                               const TwistSpec& twist) {
  const FiniteGroup& h = model.group.comparison_group();
  std::vector<Cyclotomic> chi = character_by_element(model, op, twist);
  ClassFunction f;
  f.group = &h;
  f.by_class.assign(h.conjugacy_classes().size(), Cyclotomic(0));
  for (unsigned g = 0; g < h.order(); ++g) f.by_class[h.class_of(g)] = chi[g];
  return f;
}

Cyclotomic closed_form_L(const ManifoldModel& model, Operator op,
                         const TwistSpec& twist, unsigned element) {
  return character_by_element(model, op, twist).at(element);
}

Rational lefschetz_average(const ManifoldModel& model, Operator op,
                           const TwistSpec& twist, const Representation& rho) {
  const FiniteGroup& h = model.group.comparison_group();
  std::vector<Cyclotomic> chi = character_by_element(model, op, twist);
  Cyclotomic acc(0);
  for (unsigned g = 0; g < h.order(); ++g) acc += chi[g] * rho.trace(g);
  acc *= Cyclotomic(Rational(1, static_cast<long>(h.order())));
  return acc.to_rational();
}

}  // namespace orbindex
