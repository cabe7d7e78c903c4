#include "orbindex/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "orbindex/errors.hpp"

namespace orbindex {

std::string operator_name(Operator op) {
  switch (op) {
    case Operator::DeRham: return "deRham";
    case Operator::Dolbeault: return "dolbeault";
    case Operator::Spin: return "spin";
  }
  return "?";
}

Operator operator_parse(const std::string& name) {
  if (name == "deRham" || name == "derham") return Operator::DeRham;
  if (name == "dolbeault") return Operator::Dolbeault;
  if (name == "spin") return Operator::Spin;
  throw UnsupportedParams("unknown operator '" + name + "'");
}

Rational FixedComponent::integral_of(const Monomial& m) const {
  auto it = integrals.find(m);
  return it == integrals.end() ? Rational(0) : it->second;
}

std::vector<Monomial> FixedComponent::monomial_basis() const {
  std::vector<Monomial> out;
  unsigned nsym = static_cast<unsigned>(symbols.size());
  Monomial cur(nsym, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned budget) {
    if (i == nsym) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
      cur[i] = e;
      rec(i + 1, budget - e);
      cur[i] = 0;
    }
  };
  rec(0, dim / 2);
  std::sort(out.begin(), out.end());
  return out;
}

TwistSpec TwistSpec::parse(const std::string& text) {
  TwistSpec spec;
  if (text.empty() || text == "none" || text == "O:0") return spec;
  std::string body = text;
  if (body.rfind("sum:", 0) == 0) body = body.substr(4);
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t next = body.find(',', pos);
    if (next == std::string::npos) next = body.size();
    std::string atom_text = body.substr(pos, next - pos);
    if (atom_text.empty()) throw ParseError("empty twist atom in '" + text + "'");
    TwistAtom atom;
    size_t apos = 0;
    while (apos <= atom_text.size()) {
      size_t anext = atom_text.find('*', apos);
      if (anext == std::string::npos) anext = atom_text.size();
      std::string factor = atom_text.substr(apos, anext - apos);
      if (factor.rfind("O:", 0) == 0) {
        atom.degree += static_cast<int>(std::stol(factor.substr(2)));
      } else if (factor.rfind("wt:", 0) == 0) {
        atom.weight += static_cast<unsigned>(std::stoul(factor.substr(3)));
      } else {
        throw ParseError("bad twist factor '" + factor + "' (use O:k or wt:w)");
      }
      apos = anext + 1;
    }
    spec.atoms.push_back(atom);
    pos = next + 1;
  }
  if (spec.atoms.size() == 1 && spec.atoms[0].degree == 0 && spec.atoms[0].weight == 0) {
    spec.atoms.clear();
  }
  return spec;
}

std::string TwistSpec::str() const {
  if (atoms.empty()) return "O:0";
  std::ostringstream os;
  if (atoms.size() > 1) os << "sum:";
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) os << ",";
    if (atoms[i].weight == 0) {
      os << "O:" << atoms[i].degree;
    } else if (atoms[i].degree == 0) {
      os << "wt:" << atoms[i].weight;
    } else {
      os << "O:" << atoms[i].degree << "*wt:" << atoms[i].weight;
    }
  }
  return os.str();
}

bool TwistSpec::is_trivial() const {
  if (atoms.empty()) return true;
  return atoms.size() == 1 && atoms[0].degree == 0 && atoms[0].weight == 0;
}

namespace {

Monomial mono_of(unsigned nsym, std::initializer_list<unsigned> exps) {
  Monomial m(nsym, 0);
  unsigned i = 0;
  for (unsigned e : exps) m[i++] = e;
  return m;
}

RootOfUnity spin_lift_base(unsigned n, SpinLiftVariant v) {
  // lift of the generating rotation: +-zeta_{2n}
  return v == SpinLiftVariant::Plus ? RootOfUnity(1, 2 * n)
                                    : RootOfUnity(1 + static_cast<long>(n), 2 * n);
}

ManifoldModel build_football(unsigned n, SpinLiftVariant lift) {
  if (n < 1 || n > 12) throw UnsupportedParams("football(n) needs 1 <= n <= 12");
  ManifoldModel m;
  m.family = "football";
  m.param = n;
  m.id = "football(" + std::to_string(n) + ")";
  m.group = GroupModel::from_finite(FiniteGroup::cyclic(n));
  m.dimension = 2;
  m.operators = {Operator::DeRham, Operator::Dolbeault, Operator::Spin};
  m.degree_twists = true;
  m.lift = lift;
  RootOfUnity lift_gen = spin_lift_base(n, lift);  // for the order-n generator
  for (const auto& c : m.group.cyclic_classes()) {
    std::vector<FixedComponent> comps;
    if (c.order == 1) {
      FixedComponent y;
      y.label = "S2";
      y.dim = 2;
      y.weight = n;
      y.symbols = {"t"};
      y.tangent_symbols = {0};
      y.integrals[mono_of(1, {1})] = Rational(2);
      comps.push_back(std::move(y));
    } else {
      unsigned d = c.order;
      // canonical generator of Z_d inside Z_n is rotation by 2 pi / d
      RootOfUnity lam(1, d);
      RootOfUnity s = lift_gen.pow(n / d);
      for (int pole = 0; pole < 2; ++pole) {
        FixedComponent y;
        y.label = pole == 0 ? "poleA" : "poleB";
        y.dim = 0;
        y.weight = n;
        NormalEntry ne;
        ne.symbol = -1;
        ne.eigenvalue = pole == 0 ? lam : lam.inverse();
        ne.lift = pole == 0 ? s : s.inverse();
        y.normal.push_back(ne);
        y.integrals[Monomial{}] = Rational(1);
        comps.push_back(std::move(y));
      }
    }
    m.strata.push_back(std::move(comps));
  }
  return m;
}

const char* torus_wallpaper_name(unsigned n) {
  switch (n) {
    case 1: return "p1";
    case 2: return "p2";
    case 3: return "p3";
    case 4: return "p4";
    case 6: return "p6";
  }
  throw UnsupportedParams("torus rotation order must be one of 1,2,3,4,6");
}

// Shared between torusrot (fixed tori quotients) and wallpaper strata:
// enumerate fixed points of the order-d rotation subgroup on the torus,
// grouped into point-group orbits with setwise stabilizer orders.
struct TorusPointOrbit {
  Vec2q rep;
  unsigned orbit_size;
  unsigned stabilizer_order;
};

std::vector<TorusPointOrbit> torus_fixed_orbits(const WallpaperGroup& w, unsigned d) {
  unsigned n = w.point_order();
  std::vector<Vec2q> pts = w.centers_of(n / d);  // fixed points of rotation by 2 pi / d
  std::map<Vec2q, std::vector<Vec2q>> orbits;
  for (const Vec2q& p : pts) orbits[w.orbit_representative(p)].push_back(p);
  std::vector<TorusPointOrbit> out;
  for (const auto& [rep, members] : orbits) {
    TorusPointOrbit o;
    o.rep = rep;
    o.orbit_size = static_cast<unsigned>(members.size());
    o.stabilizer_order = w.stabilizer_order_at(rep);
    out.push_back(o);
  }
  return out;
}

ManifoldModel build_torusrot(unsigned n) {
  if (n != 2 && n != 3 && n != 4 && n != 6 && n != 1) {
    throw UnsupportedParams("torusrot(n) needs n in {2,3,4,6}");
  }
  ManifoldModel m;
  m.family = "torusrot";
  m.param = n;
  m.id = "torusrot(" + std::to_string(n) + ")";
  m.group = GroupModel::from_finite(FiniteGroup::cyclic(n));
  m.dimension = 2;
  m.operators = {Operator::DeRham, Operator::Dolbeault};
  m.degree_twists = false;
  WallpaperGroup w = WallpaperGroup::by_name(torus_wallpaper_name(n));
  for (const auto& c : m.group.cyclic_classes()) {
    std::vector<FixedComponent> comps;
    if (c.order == 1) {
      FixedComponent y;
      y.label = "T2";
      y.dim = 2;
      y.weight = n;
      y.symbols = {"t"};
      y.tangent_symbols = {0};
      y.integrals[mono_of(1, {1})] = Rational(0);
      comps.push_back(std::move(y));
    } else {
      unsigned d = c.order;
      for (const auto& orbit : torus_fixed_orbits(w, d)) {
        FixedComponent y;
        y.label = "pt" + orbit.rep.str();
        y.dim = 0;
        y.weight = orbit.stabilizer_order;
        NormalEntry ne;
        ne.symbol = -1;
        ne.eigenvalue = RootOfUnity(1, d);
        y.normal.push_back(ne);
        y.integrals[Monomial{}] = Rational(1);
        y.point = orbit.rep;
        comps.push_back(std::move(y));
      }
    }
    m.strata.push_back(std::move(comps));
  }
  return m;
}

ManifoldModel build_symprod(SpinLiftVariant lift) {
  ManifoldModel m;
  m.family = "symprod_s2";
  m.id = "symprod_s2";
  m.group = GroupModel::from_finite(FiniteGroup::cyclic(2));
  m.dimension = 4;
  m.operators = {Operator::DeRham, Operator::Dolbeault, Operator::Spin};
  m.degree_twists = true;
  m.lift = lift;
  for (const auto& c : m.group.cyclic_classes()) {
    std::vector<FixedComponent> comps;
    if (c.order == 1) {
      FixedComponent y;
      y.label = "S2xS2";
      y.dim = 4;
      y.weight = 2;
      y.symbols = {"t1", "t2"};
      y.tangent_symbols = {0, 1};
      y.integrals[mono_of(2, {1, 1})] = Rational(4);
      y.integrals[mono_of(2, {2, 0})] = Rational(0);
      y.integrals[mono_of(2, {0, 2})] = Rational(0);
      comps.push_back(std::move(y));
    } else {
      // the swap fixes the diagonal sphere; its normal bundle is the
      // antidiagonal copy of the tangent bundle with eigenvalue -1
      FixedComponent y;
      y.label = "diag";
      y.dim = 2;
      y.weight = 2;
      y.symbols = {"u"};
      y.tangent_symbols = {0};
      NormalEntry ne;
      ne.symbol = 0;
      ne.eigenvalue = RootOfUnity(1, 2);
      ne.lift = lift == SpinLiftVariant::Plus ? RootOfUnity(1, 4) : RootOfUnity(3, 4);
      y.normal.push_back(ne);
      y.integrals[mono_of(1, {1})] = Rational(2);
      comps.push_back(std::move(y));
    }
    m.strata.push_back(std::move(comps));
  }
  return m;
}

ManifoldModel build_wallpaper(const std::string& name, const std::string& lattice) {
  WallpaperGroup w = lattice.empty()
                         ? WallpaperGroup::by_name(name)
                         : WallpaperGroup::with_basis(name, LatticeBasis::parse(lattice));
  ManifoldModel m;
  m.family = "wallpaper";
  m.wallpaper_name = name;
  m.id = "wallpaper(" + name + ")";
  unsigned n = w.point_order();
  m.group = GroupModel::from_wallpaper(std::move(w));
  m.dimension = 2;
  m.operators = {Operator::DeRham, Operator::Dolbeault};
  m.degree_twists = false;
  const WallpaperGroup& W = m.group.wallpaper();
  const auto& classes = m.group.cyclic_classes();
  for (size_t i = 0; i < classes.size(); ++i) {
    std::vector<FixedComponent> comps;
    if (classes[i].order == 1) {
      // quotient presentation of [R^2/G]: one fundamental torus weighted by
      // the point group
      FixedComponent y;
      y.label = "T2(fund)";
      y.dim = 2;
      y.weight = n;
      y.symbols = {"t"};
      y.tangent_symbols = {0};
      y.integrals[mono_of(1, {1})] = Rational(0);
      comps.push_back(std::move(y));
    } else {
      // the plane fixed set of a rotation subgroup is its center
      const std::string& label = classes[i].label;
      auto at = label.find('@');
      for (const auto& cc : W.cyclic_classes()) {
        if (cc.label == label) {
          FixedComponent y;
          y.label = "pt" + label.substr(at);
          y.dim = 0;
          y.weight = cc.stabilizer_order;
          NormalEntry ne;
          ne.symbol = -1;
          ne.eigenvalue = RootOfUnity(1, cc.order);
          y.normal.push_back(ne);
          y.integrals[Monomial{}] = Rational(1);
          y.point = cc.center;
          comps.push_back(std::move(y));
          break;
        }
      }
      if (comps.empty()) throw ValidationFailure("missing center data for " + label);
    }
    m.strata.push_back(std::move(comps));
  }
  return m;
}

}  // namespace

std::string wallpaper_name_for_order(unsigned n) { return torus_wallpaper_name(n); }

std::vector<CatalogEntry> catalog() {
  return {
      {"football", "n = 1..12", "deRham dolbeault spin", "O:k, wt:w, sums"},
      {"torusrot", "n in {2,3,4,6}", "deRham dolbeault", "wt:w, sums"},
      {"symprod_s2", "", "deRham dolbeault spin", "O:k, wt:w, sums"},
      {"wallpaper", "p1 p2 p3 p4 p6", "deRham dolbeault", "wt:w, sums"},
  };
}

ManifoldModel instantiate(const ModelSpec& spec) {
  if (spec.family == "football") return build_football(spec.n, spec.lift);
  if (spec.family == "torusrot") return build_torusrot(spec.n);
  if (spec.family == "symprod_s2") return build_symprod(spec.lift);
  if (spec.family == "wallpaper") return build_wallpaper(spec.wallpaper, spec.lattice);
  throw UnsupportedParams("unknown model family '" + spec.family + "'");
}

EquivariantBundle ManifoldModel::bundle(const TwistSpec& twist) const {
  for (const TwistAtom& a : twist.atoms) {
    if (a.degree != 0 && !degree_twists) {
      throw UnsupportedTwist("degree twists are not defined on " + id);
    }
  }
  std::vector<TwistAtom> atoms = twist.atoms;
  if (atoms.empty()) atoms.push_back(TwistAtom{0, 0});
  EquivariantBundle bundle;
  bundle.descriptor = twist.str();
  bundle.rank = static_cast<unsigned>(atoms.size());
  const auto& classes = group.cyclic_classes();
  bundle.roots.resize(classes.size());
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    unsigned d = classes[ci].order;
    bundle.roots[ci].resize(strata[ci].size());
    for (size_t yi = 0; yi < strata[ci].size(); ++yi) {
      const FixedComponent& y = strata[ci][yi];
      for (const TwistAtom& a : atoms) {
        BundleRoot root;
        root.coeffs.assign(y.symbols.size(), Rational(0));
        long k = a.degree;
        long w = static_cast<long>(a.weight);
        if (family == "football") {
          if (y.dim == 2) {
            root.coeffs[0] = Rational(k, 2);
            root.mu = RootOfUnity(0, 1);
          } else {
            bool pole_a = y.label == "poleA";
            root.mu = RootOfUnity(pole_a ? k + w : w, d);
          }
        } else if (family == "symprod_s2") {
          if (y.dim == 4) {
            root.coeffs[0] = Rational(k, 2);
            root.coeffs[1] = Rational(k, 2);
            root.mu = RootOfUnity(0, 1);
          } else {
            root.coeffs[0] = Rational(k);
            root.mu = RootOfUnity(w, d);  // swap acts trivially on L (x) L
          }
        } else {
          // flat character twists on torus / wallpaper / custom models
          root.mu = d == 1 ? RootOfUnity(0, 1) : RootOfUnity(w, d);
        }
        bundle.roots[ci][yi].push_back(std::move(root));
      }
    }
  }
  return bundle;
}

std::vector<std::string> validate_model(const ManifoldModel& m) {
  std::vector<std::string> bad;
  const auto& classes = m.group.cyclic_classes();
  if (m.strata.size() != classes.size()) {
    bad.push_back("strata/class count mismatch");
    return bad;
  }
  if (m.dimension % 2 != 0) bad.push_back("odd model dimension");
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    const auto& c = classes[ci];
    for (const auto& y : m.strata[ci]) {
      std::string where = m.id + "/" + c.label + "/" + y.label;
      if (y.dim % 2 != 0 || y.dim > m.dimension) {
        bad.push_back(where + ": bad component dimension");
      }
      if (y.weight == 0) bad.push_back(where + ": zero weight");
      if (y.weight % c.order != 0) {
        bad.push_back(where + ": weight not divisible by |C|");
      }
      for (unsigned ts : y.tangent_symbols) {
        if (ts >= y.symbols.size()) bad.push_back(where + ": tangent symbol out of range");
      }
      if (m.supports(Operator::Dolbeault) && 2 * y.tangent_symbols.size() != y.dim) {
        bad.push_back(where + ": tangent root count != dim/2");
      }
      for (const auto& ne : y.normal) {
        if (ne.symbol >= static_cast<int>(y.symbols.size())) {
          bad.push_back(where + ": normal symbol out of range");
        }
        for (unsigned k : c.gen_exponents) {
          if (c.order > 1 && ne.eigenvalue.pow(k).is_one()) {
            bad.push_back(where + ": normal eigenvalue 1 at generator exponent " +
                          std::to_string(k));
            break;
          }
        }
        if (c.order > 1 && ne.eigenvalue.order() > 1 && c.order % ne.eigenvalue.order() != 0) {
          bad.push_back(where + ": eigenvalue order does not divide |C|");
        }
        if (ne.lift) {
          if (ne.lift->pow(2) != ne.eigenvalue) {
            bad.push_back(where + ": spin lift does not square to the eigenvalue");
          }
        }
      }
      for (const auto& [mono, val] : y.integrals) {
        if (mono.size() != y.symbols.size()) {
          bad.push_back(where + ": integral monomial arity mismatch");
        } else if (monomial_degree(mono) != y.dim) {
          bad.push_back(where + ": integral on non-top monomial");
        }
        (void)val;
      }
      if (y.dim > 0 && y.integrals.empty()) {
        bad.push_back(where + ": missing fundamental class data");
      }
    }
    // spin lift consistency: lift(g)^{ord(g)} is the same sign everywhere
    if (m.supports(Operator::Spin) && c.order > 1) {
      std::optional<RootOfUnity> sign;
      for (const auto& y : m.strata[ci]) {
        for (const auto& ne : y.normal) {
          std::string where = m.id + "/" + c.label + "/" + y.label;
          if (!ne.lift) {
            bad.push_back(where + ": spin supported but lift missing");
            continue;
          }
          RootOfUnity s = ne.lift->pow(c.order);
          if (s.order() > 2) {
            bad.push_back(where + ": lift^ord not in {1,-1}");
          } else if (!sign) {
            sign = s;
          } else if (*sign != s) {
            bad.push_back(where + ": lift^ord sign differs between roots");
          }
        }
      }
    }
  }
  // subgroup coherence on point data: fixed points of a bigger cyclic class
  // must appear among the fixed points of each smaller one
  if (m.family == "torusrot" && m.param >= 2) {
    WallpaperGroup w = WallpaperGroup::by_name(torus_wallpaper_name(m.param));
    for (size_t i = 0; i < classes.size(); ++i) {
      for (size_t j = 0; j < classes.size(); ++j) {
        unsigned di = classes[i].order, dj = classes[j].order;
        if (dj < 2 || di <= dj || di % dj != 0) continue;
        std::set<Vec2q> small_pts;
        for (const Vec2q& p : w.centers_of(w.point_order() / dj)) small_pts.insert(p);
        for (const auto& y : m.strata[i]) {
          if (y.point && small_pts.find(*y.point) == small_pts.end()) {
            bad.push_back(m.id + ": M^" + classes[i].label + " point " + y.point->str() +
                          " missing from M^" + classes[j].label);
          }
        }
      }
    }
  }
  if (m.family == "wallpaper") {
    // each center class of order d must contain classes for all divisors
    for (size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].order <= 1) continue;
      const auto& y = m.strata[i][0];
      for (unsigned dj : divisors(classes[i].order)) {
        if (dj < 2) continue;
        bool found = false;
        for (size_t j = 0; j < classes.size() && !found; ++j) {
          if (classes[j].order != dj) continue;
          for (const auto& y2 : m.strata[j]) {
            if (y2.point && y.point && *y2.point == *y.point) found = true;
          }
        }
        if (!found) {
          bad.push_back(m.id + ": center " + y.label + " lacks the order-" +
                        std::to_string(dj) + " class");
        }
      }
    }
  }
  return bad;
}

void require_valid(const ManifoldModel& m) {
  auto bad = validate_model(m);
  if (!bad.empty()) throw ValidationFailure(bad.front());
}

}  // namespace orbindex
