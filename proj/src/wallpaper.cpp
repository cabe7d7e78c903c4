#include "orbindex/wallpaper.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbindex/cyclotomic.hpp"
#include "orbindex/errors.hpp"

namespace orbindex {

namespace {

Rational frac_mod1(const Rational& r) {
  // representative in [0, 1)
  mpz_class num = r.num(), den = r.den();
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rem, den));
}

Vec2q mod1(const Vec2q& v) { return {frac_mod1(v.x), frac_mod1(v.y)}; }

Vec2q apply(const Mat2i& m, const Vec2q& v) {
  return {Rational(m.a) * v.x + Rational(m.b) * v.y,
          Rational(m.c) * v.x + Rational(m.d) * v.y};
}

bool is_lattice(const Vec2q& v) { return v.x.is_integer() && v.y.is_integer(); }

}  // namespace

WallpaperGroup::WallpaperGroup(std::string name, unsigned n, Mat2i gen)
    : name_(std::move(name)), n_(n), gen_(gen) {
  // the point group must preserve the lattice and have the stated order
  Mat2i acc = Mat2i::identity();
  for (unsigned i = 0; i < n_; ++i) {
    acc = acc * gen_;
    if (i + 1 < n_ && acc == Mat2i::identity()) {
      throw ValidationFailure("point generator order too small");
    }
  }
  if (!(acc == Mat2i::identity())) throw ValidationFailure("point generator order mismatch");
  if (gen_.det() != 1) throw ValidationFailure("point generator must be orientation-preserving");
}

const std::vector<std::string>& WallpaperGroup::names() {
  static const std::vector<std::string> v = {"p1", "p2", "p3", "p4", "p6"};
  return v;
}

LatticeBasis LatticeBasis::parse(const std::string& text) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(';', pos);
    if (next == std::string::npos) next = text.size();
    parts.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  if (parts.size() != 4) {
    throw ParseError("lattice basis needs four entries 're1;im1;re2;im2'");
  }
  return LatticeBasis{Cyclotomic::parse(parts[0]), Cyclotomic::parse(parts[1]),
                      Cyclotomic::parse(parts[2]), Cyclotomic::parse(parts[3])};
}

std::string LatticeBasis::str() const {
  return re1.str() + ";" + im1.str() + ";" + re2.str() + ";" + im2.str();
}

WallpaperGroup WallpaperGroup::by_name(const std::string& name) {
  return with_basis(name, default_basis(name));
}

LatticeBasis WallpaperGroup::default_basis(const std::string& name) {
  if (name == "p3" || name == "p6") {
    // hexagonal: 1 and e^{2 pi i/3}; sqrt(3) = zeta_12 + zeta_12^{-1}
    Cyclotomic half_sqrt3 =
        (Cyclotomic::root(12, 1) + Cyclotomic::root(12, 11)) * Cyclotomic(Rational(1, 2));
    return LatticeBasis{Cyclotomic(1), Cyclotomic(0), Cyclotomic(Rational(-1, 2)),
                        half_sqrt3};
  }
  return LatticeBasis{Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)};
}

WallpaperGroup WallpaperGroup::with_basis(const std::string& name,
                                          const LatticeBasis& basis) {
  WallpaperGroup g = [&]() {
    // Rotation matrices in lattice coordinates: square lattice for p1/p2/p4,
    // hexagonal lattice for p3/p6.
    if (name == "p1") return WallpaperGroup("p1", 1, Mat2i::identity());
    if (name == "p2") return WallpaperGroup("p2", 2, Mat2i{-1, 0, 0, -1});
    if (name == "p3") return WallpaperGroup("p3", 3, Mat2i{0, -1, 1, -1});
    if (name == "p4") return WallpaperGroup("p4", 4, Mat2i{0, -1, 1, 0});
    if (name == "p6") return WallpaperGroup("p6", 6, Mat2i{1, -1, 1, 0});
    throw UnsupportedParams("unknown wallpaper group '" + name +
                            "' (orientation-preserving: p1 p2 p3 p4 p6)");
  }();
  // the plane rotation by 2 pi / n must map the lattice into itself:
  // B^{-1} R B has to be an integer matrix
  for (const Cyclotomic* c : {&basis.re1, &basis.im1, &basis.re2, &basis.im2}) {
    if (c->conj() != *c) {
      throw ValidationFailure("lattice coordinates must be real");
    }
  }
  unsigned n = g.n_;
  Cyclotomic cosv = (Cyclotomic::root(n, 1) + Cyclotomic::root(n, n > 1 ? n - 1 : 0)) *
                    Cyclotomic(Rational(1, 2));
  // sin = (zeta - zeta^{-1}) / (2i)
  Cyclotomic i = Cyclotomic::root(4, 1);
  Cyclotomic sinv = (Cyclotomic::root(n, 1) - Cyclotomic::root(n, n > 1 ? n - 1 : 0)) /
                    (Cyclotomic(2) * i);
  // columns of B are the basis vectors
  Cyclotomic b11 = basis.re1, b12 = basis.re2, b21 = basis.im1, b22 = basis.im2;
  Cyclotomic det = b11 * b22 - b12 * b21;
  if (det.is_zero()) throw ValidationFailure("degenerate lattice basis");
  // R B, then B^{-1} (R B)
  Cyclotomic r11 = cosv * b11 - sinv * b21, r12 = cosv * b12 - sinv * b22;
  Cyclotomic r21 = sinv * b11 + cosv * b21, r22 = sinv * b12 + cosv * b22;
  Cyclotomic m11 = (b22 * r11 - b12 * r21) / det;
  Cyclotomic m12 = (b22 * r12 - b12 * r22) / det;
  Cyclotomic m21 = (b11 * r21 - b21 * r11) / det;
  Cyclotomic m22 = (b11 * r22 - b21 * r12) / det;
  for (const Cyclotomic* m : {&m11, &m12, &m21, &m22}) {
    if (!m->is_rational() || !m->to_rational().is_integer()) {
      throw ValidationFailure("the " + name +
                              " point rotation does not preserve this lattice");
    }
  }
  g.basis_ = basis;
  return g;
}

Mat2i WallpaperGroup::point_matrix(unsigned a) const {
  Mat2i acc = Mat2i::identity();
  for (unsigned i = 0; i < a % n_; ++i) acc = acc * gen_;
  return acc;
}

std::vector<Vec2q> WallpaperGroup::centers_of(unsigned a) const {
  a %= n_;
  if (a == 0) return {};
  Mat2i A = point_matrix(a);
  Mat2i IA{1 - A.a, -A.b, -A.c, 1 - A.d};
  long D = IA.det();
  if (D < 0) D = -D;
  if (D == 0) throw ValidationFailure("rotation with singular 1-A");
  // solutions of (1-A)x in Z^2 lie in (1/D) Z^2 / Z^2
  std::set<Vec2q> centers;
  for (long p = 0; p < D; ++p) {
    for (long q = 0; q < D; ++q) {
      Vec2q x{Rational(p, D), Rational(q, D)};
      Vec2q y = apply(IA, x);
      if (is_lattice(y)) centers.insert(mod1(x));
    }
  }
  return {centers.begin(), centers.end()};
}

Vec2q WallpaperGroup::orbit_representative(const Vec2q& v) const {
  Vec2q best = mod1(v);
  Vec2q cur = best;
  for (unsigned b = 1; b < n_; ++b) {
    cur = mod1(apply(gen_, cur));
    if (cur < best) best = cur;
  }
  return best;
}

unsigned WallpaperGroup::stabilizer_order_at(const Vec2q& v) const {
  unsigned count = 0;
  for (unsigned b = 0; b < n_; ++b) {
    Mat2i IB = point_matrix(b);
    Mat2i IA{1 - IB.a, -IB.b, -IB.c, 1 - IB.d};
    if (is_lattice(apply(IA, v))) ++count;
  }
  return count;
}

void WallpaperGroup::compute() const {
  if (done_) return;
  // element classes: (rotation exponent a, orbit of centers)
  for (unsigned a = 1; a < n_; ++a) {
    std::map<Vec2q, std::set<Vec2q>> orbits;  // representative -> members
    for (const Vec2q& c : centers_of(a)) orbits[orbit_representative(c)].insert(mod1(c));
    for (const auto& [rep, members] : orbits) {
      RotationClass rc;
      rc.point_exponent = a;
      rc.center = rep;
      rc.center_orbit_size = static_cast<unsigned>(members.size());
      rc.stabilizer_order = stabilizer_order_at(rep);
      rc.label = "r" + std::to_string(360 * a / n_) + "@" + rep.str();
      rotation_classes_.push_back(std::move(rc));
    }
  }
  std::sort(rotation_classes_.begin(), rotation_classes_.end(),
            [](const RotationClass& x, const RotationClass& y) {
              if (x.point_exponent != y.point_exponent) return x.point_exponent < y.point_exponent;
              return x.center < y.center;
            });
  // cyclic subgroup classes: (center orbit, divisor d >= 2 of the local order)
  std::map<Vec2q, unsigned> center_orbits;  // representative -> max order
  for (unsigned a = 1; a < n_; ++a) {
    for (const Vec2q& c : centers_of(a)) {
      Vec2q rep = orbit_representative(c);
      unsigned m = stabilizer_order_at(rep);
      center_orbits[rep] = std::max(center_orbits[rep], m);
    }
  }
  for (const auto& [rep, m] : center_orbits) {
    for (unsigned d : divisors(m)) {
      if (d < 2) continue;
      CyclicClass cc;
      cc.order = d;
      cc.center = rep;
      cc.stabilizer_order = m;
      cc.label = "Z" + std::to_string(d) + "@" + rep.str();
      cyclic_classes_.push_back(std::move(cc));
    }
  }
  std::sort(cyclic_classes_.begin(), cyclic_classes_.end(),
            [](const CyclicClass& x, const CyclicClass& y) {
              if (x.order != y.order) return x.order < y.order;
              return x.center < y.center;
            });
  done_ = true;
}

const std::vector<WallpaperGroup::RotationClass>& WallpaperGroup::rotation_classes() const {
  compute();
  return rotation_classes_;
}

const std::vector<WallpaperGroup::CyclicClass>& WallpaperGroup::cyclic_classes() const {
  compute();
  return cyclic_classes_;
}

std::vector<unsigned> WallpaperGroup::signature() const {
  compute();
  std::map<Vec2q, unsigned> center_orbits;
  for (unsigned a = 1; a < n_; ++a) {
    for (const Vec2q& c : centers_of(a)) {
      Vec2q rep = orbit_representative(c);
      center_orbits[rep] = std::max(center_orbits[rep], stabilizer_order_at(rep));
    }
  }
  std::vector<unsigned> sig;
  for (const auto& [rep, m] : center_orbits) {
    if (m >= 2) sig.push_back(m);
  }
  std::sort(sig.rbegin(), sig.rend());
  return sig;
}

}  // namespace orbindex
