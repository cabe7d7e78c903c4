#pragma once

#include <array>
#include <string>
#include <vector>

#include "orbindex/cyclotomic.hpp"
#include "orbindex/rational.hpp"

namespace orbindex {

// 2x2 integer matrix acting on lattice coordinates.
struct Mat2i {
  long a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

  static Mat2i identity() { return {}; }
  friend Mat2i operator*(const Mat2i& m, const Mat2i& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  long det() const { return a * d - b * c; }
  bool operator==(const Mat2i& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

struct Vec2q {
  Rational x, y;
  bool operator==(const Vec2q& o) const { return x == o.x && y == o.y; }
  bool operator<(const Vec2q& o) const { return x != o.x ? x < o.x : y < o.y; }
  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

// Plane lattice basis with exact coordinates; entries may be cyclotomic
// (the hexagonal lattices need sqrt(3)/2) but must be real.
struct LatticeBasis {
  Cyclotomic re1, im1, re2, im2;

  // "re1;im1;re2;im2" with cyclotomic literals between the semicolons.
  static LatticeBasis parse(const std::string& text);
  std::string str() const;
};

// One of the five orientation-preserving plane crystallographic groups,
// presented as lattice Z^2 extended by a cyclic point group acting through
// an integer matrix of order n. Elements are (A^a, t) with t in Z^2 acting
// by x -> A^a x + t; only finite-order data is ever enumerated.
class WallpaperGroup {
 public:
  static WallpaperGroup by_name(const std::string& name);  // p1 p2 p3 p4 p6
  // Same group presented on a caller-chosen lattice; rejects bases the
  // point rotation does not preserve.
  static WallpaperGroup with_basis(const std::string& name, const LatticeBasis& basis);
  static LatticeBasis default_basis(const std::string& name);
  static const std::vector<std::string>& names();

  const LatticeBasis& basis() const { return basis_; }

  const std::string& name() const { return name_; }
  unsigned point_order() const { return n_; }
  Mat2i point_matrix(unsigned a) const;  // A^a

  // Conjugacy class of finite-order elements != identity: a rotation by
  // 2 pi a / n about a lattice orbit of centers.
  struct RotationClass {
    unsigned point_exponent = 0;     // a, 1 <= a < n
    Vec2q center;                    // representative, coordinates in [0,1)
    unsigned center_orbit_size = 1;  // centers in one translation cell
    unsigned stabilizer_order = 1;   // |Z_G(g)| = order of Stab(center)
    std::string label;
  };
  const std::vector<RotationClass>& rotation_classes() const;

  // Conjugacy class of a nontrivial finite cyclic subgroup: rotations of
  // order d about one orbit of centers.
  struct CyclicClass {
    unsigned order = 1;              // d
    Vec2q center;
    unsigned stabilizer_order = 1;   // m = |Z_G(C)|, d | m
    std::string label;
  };
  const std::vector<CyclicClass>& cyclic_classes() const;

  // Orbit representatives of maximal rotation centers with their orders,
  // sorted descending: p4 -> {4, 4, 2}.
  std::vector<unsigned> signature() const;

  // Distinct rotation centers fixed by A^a, up to lattice translation.
  std::vector<Vec2q> centers_of(unsigned a) const;
  // Point-group orbit representative of a center (mod translations).
  Vec2q orbit_representative(const Vec2q& v) const;
  unsigned stabilizer_order_at(const Vec2q& v) const;

 private:
  WallpaperGroup(std::string name, unsigned n, Mat2i gen);
  void compute() const;

  std::string name_;
  unsigned n_;
  Mat2i gen_;
  LatticeBasis basis_;
  mutable bool done_ = false;
  mutable std::vector<RotationClass> rotation_classes_;
  mutable std::vector<CyclicClass> cyclic_classes_;
};

}  // namespace orbindex
