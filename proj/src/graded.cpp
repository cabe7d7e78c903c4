#include "orbindex/graded.hpp"

#include <sstream>

#include "orbindex/errors.hpp"

namespace orbindex {

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << names.at(i);
    if (m[i] > 1) os << "^" << m[i];
  }
  if (first) os << "1";
  return os.str();
}

Monomial monomial_parse(const std::string& s, const std::vector<std::string>& names) {
  Monomial m(names.size(), 0);
  if (s == "1") return m;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('*', pos);
    if (next == std::string::npos) next = s.size();
    std::string factor = s.substr(pos, next - pos);
    unsigned exp = 1;
    auto caret = factor.find('^');
    std::string name = factor;
    if (caret != std::string::npos) {
      name = factor.substr(0, caret);
      exp = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
    }
    bool found = false;
    for (size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) {
        m[i] += exp;
        found = true;
        break;
      }
    }
    if (!found) throw ParseError("unknown symbol '" + name + "' in monomial '" + s + "'");
    pos = next + 1;
  }
  return m;
}

void GradedClass::add_term(const Monomial& m, const Cyclotomic& c) {
  if (m.size() != nsym_) throw BasisMismatch("monomial arity");
  if (monomial_degree(m) > dim_) return;
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedClass GradedClass::constant(unsigned nsym, unsigned dim, const Cyclotomic& c) {
  GradedClass g(nsym, dim);
  g.add_term(Monomial(nsym, 0), c);
  return g;
}

GradedClass GradedClass::symbol(unsigned nsym, unsigned dim, unsigned index) {
  GradedClass g(nsym, dim);
  Monomial m(nsym, 0);
  m.at(index) = 1;
  g.add_term(m, Cyclotomic(1));
  return g;
}

GradedClass GradedClass::linear(unsigned nsym, unsigned dim,
                                const std::vector<Rational>& coeff) {
  GradedClass g(nsym, dim);
  for (size_t i = 0; i < coeff.size() && i < nsym; ++i) {
    Monomial m(nsym, 0);
    m[i] = 1;
    g.add_term(m, Cyclotomic(coeff[i]));
  }
  return g;
}

Cyclotomic GradedClass::constant_term() const {
  return coefficient(Monomial(nsym_, 0));
}

Cyclotomic GradedClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

GradedClass GradedClass::degree_part(unsigned d) const {
  GradedClass g(nsym_, dim_);
  for (const auto& [m, c] : terms_) {
    if (monomial_degree(m) == d) g.add_term(m, c);
  }
  return g;
}

GradedClass GradedClass::truncated(unsigned dim) const {
  GradedClass g(nsym_, dim);
  for (const auto& [m, c] : terms_) g.add_term(m, c);
  return g;
}

GradedClass GradedClass::operator-() const {
  GradedClass g(nsym_, dim_);
  for (const auto& [m, c] : terms_) g.add_term(m, -c);
  return g;
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
  if (a.nsym_ != b.nsym_ || a.dim_ != b.dim_) throw BasisMismatch("graded add");
  GradedClass g = a;
  for (const auto& [m, c] : b.terms_) g.add_term(m, c);
  return g;
}

GradedClass operator-(const GradedClass& a, const GradedClass& b) { return a + (-b); }

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  if (a.nsym_ != b.nsym_ || a.dim_ != b.dim_) throw BasisMismatch("graded mul");
  GradedClass g(a.nsym_, a.dim_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (monomial_degree(ma) + monomial_degree(mb) > a.dim_) continue;
      Monomial m(a.nsym_);
      for (unsigned i = 0; i < a.nsym_; ++i) m[i] = ma[i] + mb[i];
      g.add_term(m, ca * cb);
    }
  }
  return g;
}

GradedClass GradedClass::scaled(const Cyclotomic& c) const {
  GradedClass g(nsym_, dim_);
  for (const auto& [m, coeff] : terms_) g.add_term(m, coeff * c);
  return g;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
  if (a.nsym_ != b.nsym_ || a.dim_ != b.dim_) return false;
  return (a - b).is_zero();
}

std::string GradedClass::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << "\n";
    first = false;
    os << c.str() << " * " << monomial_str(m, names);
  }
  return os.str();
}

}  // namespace orbindex
