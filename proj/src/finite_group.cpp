#include "orbindex/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "orbindex/errors.hpp"

namespace orbindex {

namespace {

std::string perm_cycle_name(const std::vector<unsigned>& img) {
  std::vector<bool> seen(img.size(), false);
  std::ostringstream os;
  bool any = false;
  for (unsigned start = 0; start < img.size(); ++start) {
    if (seen[start] || img[start] == start) continue;
    any = true;
    os << "(";
    unsigned x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << " ";
      first = false;
      os << x;
      x = img[x];
    }
    os << ")";
  }
  if (!any) return "e";
  return os.str();
}

}  // namespace

unsigned FiniteGroup::power(unsigned a, long k) const {
  unsigned ord = element_order(a);
  long kk = k % static_cast<long>(ord);
  if (kk < 0) kk += ord;
  unsigned acc = 0;  // identity
  for (long i = 0; i < kk; ++i) acc = mul(acc, a);
  return acc;
}

unsigned FiniteGroup::element_order(unsigned a) const {
  unsigned ord = 1;
  unsigned x = a;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

void FiniteGroup::finish_construction(const std::vector<unsigned>& generating_set) {
  n_ = static_cast<unsigned>(table_.size());
  if (n_ == 0) throw ValidationFailure("empty group");
  if (n_ > 10000) throw UnsupportedParams("group order above the 10^4 cap");
  // closure + latin square sanity
  for (unsigned a = 0; a < n_; ++a) {
    if (table_[a].size() != n_) throw ValidationFailure("ragged multiplication table");
    for (unsigned b = 0; b < n_; ++b) {
      if (table_[a][b] >= n_) throw ValidationFailure("table entry out of range");
    }
  }
  // identity
  for (unsigned a = 0; a < n_; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) {
      throw ValidationFailure("element 0 is not an identity");
    }
  }
  // inverses
  inverse_.assign(n_, 0);
  for (unsigned a = 0; a < n_; ++a) {
    bool found = false;
    for (unsigned b = 0; b < n_; ++b) {
      if (table_[a][b] == 0) {
        if (table_[b][a] != 0) throw ValidationFailure("one-sided inverse");
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw ValidationFailure("missing inverse");
  }
  // associativity: Light's test against a generating set
  std::vector<unsigned> gens = generating_set;
  if (gens.empty()) {
    // grow one greedily
    std::set<unsigned> closure{0};
    while (closure.size() < n_) {
      unsigned pick = 0;
      for (unsigned a = 0; a < n_; ++a) {
        if (closure.find(a) == closure.end()) { pick = a; break; }
      }
      gens.push_back(pick);
      std::vector<unsigned> frontier(closure.begin(), closure.end());
      frontier.push_back(pick);
      std::set<unsigned> grown;
      std::vector<unsigned> work = {0};
      grown.insert(0);
      while (!work.empty()) {
        unsigned x = work.back();
        work.pop_back();
        for (unsigned g : gens) {
          unsigned y = table_[x][g];
          if (grown.insert(y).second) work.push_back(y);
        }
      }
      closure = std::move(grown);
    }
  }
  for (unsigned g : gens) {
    for (unsigned a = 0; a < n_; ++a) {
      for (unsigned b = 0; b < n_; ++b) {
        if (table_[table_[a][g]][b] != table_[a][table_[g][b]]) {
          throw ValidationFailure("associativity fails");
        }
      }
    }
  }
  if (names_.size() != n_) {
    names_.resize(n_);
    for (unsigned a = 0; a < n_; ++a) {
      if (names_[a].empty()) names_[a] = a == 0 ? "e" : "x" + std::to_string(a);
    }
  }
}

FiniteGroup FiniteGroup::cyclic(unsigned n) {
  if (n == 0) throw UnsupportedParams("cyclic group of order 0");
  FiniteGroup g;
  g.table_.assign(n, std::vector<unsigned>(n));
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) g.table_[a][b] = (a + b) % n;
  }
  g.names_.resize(n);
  g.names_[0] = "e";
  for (unsigned a = 1; a < n; ++a) g.names_[a] = "g^" + std::to_string(a);
  g.finish_construction(n > 1 ? std::vector<unsigned>{1} : std::vector<unsigned>{});
  return g;
}

FiniteGroup FiniteGroup::from_permutation_gens(
    const std::vector<std::vector<unsigned>>& gens) {
  if (gens.empty()) throw UnsupportedParams("no permutation generators");
  size_t npoints = gens[0].size();
  for (const auto& g : gens) {
    if (g.size() != npoints) throw ValidationFailure("mixed permutation degrees");
    std::vector<bool> hit(npoints, false);
    for (unsigned v : g) {
      if (v >= npoints || hit[v]) throw ValidationFailure("not a permutation");
      hit[v] = true;
    }
  }
  std::vector<unsigned> identity(npoints);
  std::iota(identity.begin(), identity.end(), 0);
  std::map<std::vector<unsigned>, unsigned> index;
  std::vector<std::vector<unsigned>> elements;
  elements.push_back(identity);
  index[identity] = 0;
  std::vector<unsigned> work = {0};
  while (!work.empty()) {
    unsigned cur = work.back();
    work.pop_back();
    for (const auto& g : gens) {
      std::vector<unsigned> prod(npoints);
      for (size_t i = 0; i < npoints; ++i) prod[i] = g[elements[cur][i]];
      auto [it, fresh] = index.emplace(prod, static_cast<unsigned>(elements.size()));
      if (fresh) {
        elements.push_back(prod);
        work.push_back(it->second);
        if (elements.size() > 10000) throw UnsupportedParams("group order above the 10^4 cap");
      }
    }
  }
  unsigned n = static_cast<unsigned>(elements.size());
  FiniteGroup out;
  out.table_.assign(n, std::vector<unsigned>(n));
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      std::vector<unsigned> prod(npoints);
      for (size_t i = 0; i < npoints; ++i) prod[i] = elements[a][elements[b][i]];
      out.table_[a][b] = index.at(prod);
    }
  }
  out.names_.resize(n);
  for (unsigned a = 0; a < n; ++a) out.names_[a] = perm_cycle_name(elements[a]);
  std::vector<unsigned> genids;
  for (const auto& g : gens) genids.push_back(index.at(g));
  out.finish_construction(genids);
  return out;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<unsigned>> table,
                                    std::vector<std::string> names) {
  FiniteGroup g;
  g.table_ = std::move(table);
  g.names_ = std::move(names);
  g.finish_construction({});
  return g;
}

FiniteGroup FiniteGroup::parse_permutations(const std::string& text) {
  std::vector<std::vector<unsigned>> gens;
  std::istringstream in(text);
  std::string line;
  size_t npoints = 0;
  std::vector<std::vector<std::vector<unsigned>>> cycle_lines;
  std::vector<std::vector<unsigned>> image_lines;
  while (std::getline(in, line)) {
    // strip comments and whitespace-only lines
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    if (line.find('(') != std::string::npos) {
      std::vector<std::vector<unsigned>> cycles;
      size_t pos = 0;
      while ((pos = line.find('(', pos)) != std::string::npos) {
        size_t close = line.find(')', pos);
        if (close == std::string::npos) throw ParseError("unbalanced cycle");
        std::istringstream cyc(line.substr(pos + 1, close - pos - 1));
        std::vector<unsigned> cycle;
        unsigned v;
        while (cyc >> v) cycle.push_back(v);
        if (cycle.size() < 2) throw ParseError("cycle with fewer than 2 points");
        for (unsigned x : cycle) npoints = std::max<size_t>(npoints, x + 1);
        cycles.push_back(cycle);
        pos = close + 1;
      }
      cycle_lines.push_back(cycles);
      image_lines.emplace_back();  // placeholder to keep order
    } else {
      std::istringstream img(line);
      std::vector<unsigned> images;
      unsigned v;
      while (img >> v) images.push_back(v);
      if (images.empty()) continue;
      npoints = std::max(npoints, images.size());
      image_lines.push_back(images);
      cycle_lines.emplace_back();
    }
  }
  for (size_t i = 0; i < cycle_lines.size(); ++i) {
    std::vector<unsigned> img(npoints);
    std::iota(img.begin(), img.end(), 0);
    if (!cycle_lines[i].empty()) {
      for (const auto& cycle : cycle_lines[i]) {
        for (size_t j = 0; j < cycle.size(); ++j) {
          img[cycle[j]] = cycle[(j + 1) % cycle.size()];
        }
      }
    } else {
      const auto& images = image_lines[i];
      for (size_t j = 0; j < images.size(); ++j) {
        if (images[j] >= npoints) throw ParseError("image out of range");
        img[j] = images[j];
      }
    }
    gens.push_back(img);
  }
  if (gens.empty()) throw ParseError("no generators in permutation text");
  return from_permutation_gens(gens);
}

void FiniteGroup::compute_classes() const {
  if (classes_done_) return;
  class_index_.assign(n_, n_);
  for (unsigned a = 0; a < n_; ++a) {
    if (class_index_[a] != n_) continue;
    std::set<unsigned> orbit;
    for (unsigned h = 0; h < n_; ++h) orbit.insert(conjugate(h, a));
    unsigned idx = static_cast<unsigned>(classes_.size());
    classes_.emplace_back(orbit.begin(), orbit.end());
    for (unsigned x : orbit) class_index_[x] = idx;
  }
  classes_done_ = true;
}

const std::vector<std::vector<unsigned>>& FiniteGroup::conjugacy_classes() const {
  compute_classes();
  return classes_;
}

unsigned FiniteGroup::class_of(unsigned a) const {
  compute_classes();
  return class_index_[a];
}

std::vector<unsigned> FiniteGroup::centralizer(unsigned a) const {
  std::vector<unsigned> out;
  for (unsigned h = 0; h < n_; ++h) {
    if (mul(h, a) == mul(a, h)) out.push_back(h);
  }
  return out;
}

void FiniteGroup::compute_cyclic_classes() const {
  if (cyclic_done_) return;
  // distinct cyclic subgroups as sorted element sets
  std::map<std::vector<unsigned>, unsigned> subgroup_index;  // set -> smallest generator
  for (unsigned g = 0; g < n_; ++g) {
    std::vector<unsigned> sub;
    unsigned x = 0;
    do {
      sub.push_back(x);
      x = mul(x, g);
    } while (x != 0);
    std::sort(sub.begin(), sub.end());
    auto it = subgroup_index.find(sub);
    if (it == subgroup_index.end()) subgroup_index.emplace(sub, g);
  }
  // group subgroups into conjugacy orbits
  std::vector<std::vector<unsigned>> subgroups;
  for (const auto& [sub, gen] : subgroup_index) subgroups.push_back(sub);
  std::vector<bool> used(subgroups.size(), false);
  std::vector<std::vector<size_t>> orbits;
  std::map<std::vector<unsigned>, size_t> position;
  for (size_t i = 0; i < subgroups.size(); ++i) position[subgroups[i]] = i;
  for (size_t i = 0; i < subgroups.size(); ++i) {
    if (used[i]) continue;
    std::set<size_t> orbit;
    for (unsigned h = 0; h < n_; ++h) {
      std::vector<unsigned> conj;
      conj.reserve(subgroups[i].size());
      for (unsigned x : subgroups[i]) conj.push_back(conjugate(h, x));
      std::sort(conj.begin(), conj.end());
      orbit.insert(position.at(conj));
    }
    std::vector<size_t> orb(orbit.begin(), orbit.end());
    for (size_t j : orb) used[j] = true;
    orbits.push_back(orb);
  }
  // canonical representative: lexicographically smallest subgroup in orbit
  std::vector<CyclicSubgroupClass> result;
  for (const auto& orb : orbits) {
    size_t rep = *std::min_element(orb.begin(), orb.end(), [&](size_t a, size_t b) {
      return subgroups[a] < subgroups[b];
    });
    CyclicSubgroupClass c;
    c.subgroup = subgroups[rep];
    c.order = static_cast<unsigned>(c.subgroup.size());
    c.generator = subgroup_index.at(c.subgroup);
    // smallest generating element for determinism
    for (unsigned x : c.subgroup) {
      if (element_order(x) == c.order) {
        c.generator = x;
        break;
      }
    }
    if (c.order == 1) {
      c.gen_exponents = {0};
    } else {
      for (unsigned k = 1; k < c.order; ++k) {
        if (std::gcd(k, c.order) == 1) c.gen_exponents.push_back(k);
      }
    }
    c.centralizer = centralizer(c.generator);
    // normalizer and the Weyl exponents
    std::set<unsigned> sub_set(c.subgroup.begin(), c.subgroup.end());
    std::set<unsigned> weyl_exps;
    for (unsigned h = 0; h < n_; ++h) {
      std::vector<unsigned> conj;
      for (unsigned x : c.subgroup) conj.push_back(conjugate(h, x));
      std::sort(conj.begin(), conj.end());
      if (conj == c.subgroup) {
        c.normalizer.push_back(h);
        unsigned image = conjugate(h, c.generator);
        // image = generator^k for some unit k
        unsigned x = 0, k = 0;
        do {
          x = mul(x, c.generator);
          ++k;
        } while (x != image);
        weyl_exps.insert(k % c.order == 0 ? (c.order == 1 ? 0 : c.order) : k % c.order);
      }
    }
    c.weyl_exponents.assign(weyl_exps.begin(), weyl_exps.end());
    // orbits of the exponent action k -> a*k mod order
    std::set<unsigned> remaining(c.gen_exponents.begin(), c.gen_exponents.end());
    while (!remaining.empty()) {
      unsigned k0 = *remaining.begin();
      std::set<unsigned> orbit;
      for (unsigned a : c.weyl_exponents) {
        unsigned k = c.order == 1 ? 0 : (a * k0) % c.order;
        orbit.insert(k);
      }
      if (orbit.empty()) orbit.insert(k0);
      std::vector<unsigned> orbv(orbit.begin(), orbit.end());
      for (unsigned k : orbv) remaining.erase(k);
      c.weyl_orbits.push_back(orbv);
    }
    result.push_back(std::move(c));
  }
  std::sort(result.begin(), result.end(),
            [](const CyclicSubgroupClass& a, const CyclicSubgroupClass& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.subgroup < b.subgroup;
            });
  std::map<unsigned, unsigned> per_order_count;
  for (auto& c : result) per_order_count[c.order]++;
  std::map<unsigned, unsigned> seen;
  for (auto& c : result) {
    unsigned k = seen[c.order]++;
    c.label = "Z" + std::to_string(c.order);
    if (per_order_count[c.order] > 1) c.label += "#" + std::to_string(k + 1);
  }
  cyclic_classes_ = std::move(result);

  // element class -> (cyclic class, canonical exponent)
  compute_classes();
  element_to_cyclic_.assign(n_, {0, 0});
  for (unsigned g = 0; g < n_; ++g) {
    std::vector<unsigned> sub;
    unsigned x = 0;
    do {
      sub.push_back(x);
      x = mul(x, g);
    } while (x != 0);
    std::sort(sub.begin(), sub.end());
    // find the cyclic class whose orbit contains <g>, and a conjugator
    for (size_t ci = 0; ci < cyclic_classes_.size(); ++ci) {
      const auto& c = cyclic_classes_[ci];
      if (c.order != sub.size()) continue;
      bool matched = false;
      for (unsigned h = 0; h < n_ && !matched; ++h) {
        std::vector<unsigned> conj;
        for (unsigned y : sub) conj.push_back(conjugate(h, y));
        std::sort(conj.begin(), conj.end());
        if (conj != c.subgroup) continue;
        // h g h^{-1} = generator^k
        unsigned image = conjugate(h, g);
        unsigned y = 0, k = 0;
        do {
          y = mul(y, c.generator);
          ++k;
        } while (y != image && k <= c.order);
        k = c.order == 1 ? 0 : k % c.order;
        // canonicalize over the Weyl orbit
        unsigned best = k;
        for (unsigned a : c.weyl_exponents) {
          unsigned kk = c.order == 1 ? 0 : (a * k) % c.order;
          best = std::min(best, kk);
        }
        element_to_cyclic_[g] = {static_cast<unsigned>(ci), best};
        matched = true;
      }
      if (matched) break;
    }
  }
  cyclic_done_ = true;
}

const std::vector<FiniteGroup::CyclicSubgroupClass>& FiniteGroup::cyclic_subgroup_classes() const {
  compute_cyclic_classes();
  return cyclic_classes_;
}

std::pair<unsigned, unsigned> FiniteGroup::cyclic_class_of_element(unsigned g) const {
  compute_cyclic_classes();
  return element_to_cyclic_[g];
}

Cyclotomic epsilon_trivial(const ClassFunction& f) {
  const FiniteGroup& g = *f.group;
  Cyclotomic acc(0);
  const auto& classes = g.conjugacy_classes();
  for (size_t i = 0; i < classes.size(); ++i) {
    acc += f.by_class.at(i) * Cyclotomic(Rational(static_cast<long>(classes[i].size())));
  }
  return acc * Cyclotomic(Rational(1, static_cast<long>(g.order())));
}

ClassFunction extend_by_zero(const FiniteGroup& cyclic_group,
                             const std::vector<std::pair<unsigned, Cyclotomic>>& on_generators) {
  unsigned n = cyclic_group.order();
  ClassFunction f;
  f.group = &cyclic_group;
  f.by_class.assign(cyclic_group.conjugacy_classes().size(), Cyclotomic(0));
  for (const auto& [exp, value] : on_generators) {
    unsigned e = exp % n;
    if (n > 1 && std::gcd(e, n) != 1) {
      throw BasisMismatch("exponent " + std::to_string(exp) + " is not a generator");
    }
    f.by_class.at(cyclic_group.class_of(cyclic_group.power(1 % n == 0 ? 0 : 1, e))) = value;
  }
  return f;
}

Representation Representation::from_generator_matrices(
    const FiniteGroup& g, const std::vector<unsigned>& gen_elements,
    const std::vector<Matrix>& mats) {
  if (gen_elements.size() != mats.size() || mats.empty()) {
    throw InvalidRepresentation("generator/matrix count mismatch");
  }
  unsigned dim = static_cast<unsigned>(mats[0].size());
  for (const auto& m : mats) {
    if (m.size() != dim) throw InvalidRepresentation("inconsistent matrix sizes");
    for (const auto& row : m) {
      if (row.size() != dim) throw InvalidRepresentation("non-square matrix");
    }
  }
  auto matmul = [dim](const Matrix& a, const Matrix& b) {
    Matrix out(dim, std::vector<Cyclotomic>(dim, Cyclotomic(0)));
    for (unsigned i = 0; i < dim; ++i) {
      for (unsigned k = 0; k < dim; ++k) {
        if (a[i][k].is_zero()) continue;
        for (unsigned j = 0; j < dim; ++j) out[i][j] += a[i][k] * b[k][j];
      }
    }
    return out;
  };
  Matrix identity(dim, std::vector<Cyclotomic>(dim, Cyclotomic(0)));
  for (unsigned i = 0; i < dim; ++i) identity[i][i] = Cyclotomic(1);

  // BFS closure from the identity; a revisit with a different matrix means
  // the assignment violates the relations.
  std::vector<Matrix> per_element(g.order());
  std::vector<bool> have(g.order(), false);
  per_element[0] = identity;
  have[0] = true;
  std::vector<unsigned> work = {0};
  while (!work.empty()) {
    unsigned cur = work.back();
    work.pop_back();
    for (size_t gi = 0; gi < gen_elements.size(); ++gi) {
      unsigned nxt = g.mul(cur, gen_elements[gi]);
      Matrix prod = matmul(per_element[cur], mats[gi]);
      if (!have[nxt]) {
        per_element[nxt] = std::move(prod);
        have[nxt] = true;
        work.push_back(nxt);
      } else if (per_element[nxt] != prod) {
        throw InvalidRepresentation("matrices violate the group relations");
      }
    }
  }
  for (bool h : have) {
    if (!h) throw InvalidRepresentation("matrices do not generate the full group");
  }
  Representation rep;
  rep.group_ = &g;
  rep.dim_ = dim;
  rep.name_ = "matrix-rep(dim " + std::to_string(dim) + ")";
  rep.traces_.resize(g.order(), Cyclotomic(0));
  for (unsigned a = 0; a < g.order(); ++a) {
    Cyclotomic tr(0);
    for (unsigned i = 0; i < dim; ++i) tr += per_element[a][i][i];
    rep.traces_[a] = tr;
  }
  return rep;
}

Representation Representation::character_of_cyclic(const FiniteGroup& cyclic_group,
                                                   unsigned weight) {
  unsigned n = cyclic_group.order();
  unsigned gen = n;
  for (unsigned a = 0; a < n; ++a) {
    if (cyclic_group.element_order(a) == n) {
      gen = a;
      break;
    }
  }
  if (gen == n) throw UnsupportedParams("character_of_cyclic on a non-cyclic group");
  Representation rep;
  rep.group_ = &cyclic_group;
  rep.dim_ = 1;
  rep.name_ = weight % n == 0 ? "trivial" : "w:" + std::to_string(weight % n);
  rep.traces_.resize(n);
  unsigned x = 0;
  for (unsigned k = 0; k < n; ++k) {
    rep.traces_[x] = Cyclotomic::root(n, static_cast<long>(k) * (weight % n));
    x = cyclic_group.mul(x, gen);
  }
  return rep;
}

Representation Representation::trivial(const FiniteGroup& g) {
  Representation rep;
  rep.group_ = &g;
  rep.dim_ = 1;
  rep.name_ = "trivial";
  rep.traces_.assign(g.order(), Cyclotomic(1));
  return rep;
}

Representation Representation::regular(const FiniteGroup& g) {
  Representation rep;
  rep.group_ = &g;
  rep.dim_ = g.order();
  rep.name_ = "regular";
  rep.traces_.assign(g.order(), Cyclotomic(0));
  rep.traces_[0] = Cyclotomic(Rational(static_cast<long>(g.order())));
  return rep;
}

Cyclotomic Representation::trace(unsigned element) const {
  return traces_.at(element);
}

ClassFunction Representation::character() const {
  ClassFunction f;
  f.group = group_;
  const auto& classes = group_->conjugacy_classes();
  f.by_class.resize(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) f.by_class[i] = traces_[classes[i][0]];
  return f;
}

}  // namespace orbindex
