#include "orbindex/model_io.hpp"

#include <numeric>
#include <sstream>

#include "orbindex/errors.hpp"

namespace orbindex {

std::string dump_model(const ManifoldModel& model) {
  if (!model.group.comparison_is_cyclic()) {
    throw UnsupportedModel("model dump needs a cyclic comparison group");
  }
  std::ostringstream os;
  os << "orbindex-model 1\n";
  os << "id " << model.id << "\n";
  os << "group cyclic " << model.group.comparison_group().order() << "\n";
  os << "dim " << model.dimension << "\n";
  os << "operators";
  for (Operator op : {Operator::DeRham, Operator::Dolbeault, Operator::Spin}) {
    if (model.supports(op)) os << " " << operator_name(op);
  }
  os << "\n";
  const auto& classes = model.group.cyclic_classes();
  for (size_t i = 0; i < classes.size(); ++i) {
    const UCyclicClass& c = classes[i];
    os << "class " << c.label << " order " << c.order << " embed " << c.comparison_generator
       << "\n";
    for (const auto& orbit : c.weyl_orbits) {
      os << "worbit";
      for (unsigned k : orbit) os << " " << k;
      os << "\n";
    }
    for (const FixedComponent& y : model.strata[i]) {
      os << "component " << y.label << " dim " << y.dim << " weight " << y.weight << "\n";
      if (!y.symbols.empty()) {
        os << "symbols";
        for (const auto& s : y.symbols) os << " " << s;
        os << "\n";
      }
      if (!y.tangent_symbols.empty()) {
        os << "tangent";
        for (unsigned t : y.tangent_symbols) os << " " << y.symbols[t];
        os << "\n";
      }
      for (const NormalEntry& ne : y.normal) {
        os << "normal " << (ne.symbol < 0 ? "-" : y.symbols[ne.symbol]) << " "
           << ne.eigenvalue.str();
        if (ne.lift) os << " lift " << ne.lift->str();
        os << "\n";
      }
      if (y.point) os << "point " << y.point->x.str() << " " << y.point->y.str() << "\n";
      for (const auto& [m, v] : y.integrals) {
        os << "integral " << monomial_str(m, y.symbols) << "=" << v.str() << "\n";
      }
    }
  }
  return os.str();
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

}  // namespace

ManifoldModel parse_model(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  unsigned lineno = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("model file line " + std::to_string(lineno) + ": " + what);
  };

  std::string id = "custom";
  unsigned ambient = 0;
  unsigned dim = 0;
  std::set<Operator> ops;
  std::vector<UCyclicClass> classes;
  std::vector<std::vector<FixedComponent>> strata;
  bool saw_header = false;
  bool class_has_worbit = false;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<std::string> tok = tokens_of(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (!saw_header) {
      if (key != "orbindex-model" || tok.size() != 2 || tok[1] != "1") {
        fail("expected header 'orbindex-model 1'");
      }
      saw_header = true;
      continue;
    }
    if (key == "id") {
      if (tok.size() < 2) fail("id needs a value");
      id = tok[1];
    } else if (key == "group") {
      if (tok.size() != 3 || tok[1] != "cyclic") fail("expected 'group cyclic <n>'");
      ambient = static_cast<unsigned>(std::stoul(tok[2]));
      if (ambient == 0) fail("ambient order must be positive");
    } else if (key == "dim") {
      if (tok.size() != 2) fail("dim needs a value");
      dim = static_cast<unsigned>(std::stoul(tok[1]));
    } else if (key == "operators") {
      for (size_t i = 1; i < tok.size(); ++i) ops.insert(operator_parse(tok[i]));
    } else if (key == "class") {
      if (tok.size() != 6 || tok[2] != "order" || tok[4] != "embed") {
        fail("expected 'class <label> order <d> embed <j>'");
      }
      if (ambient == 0) fail("class before 'group cyclic'");
      UCyclicClass c;
      c.label = tok[1];
      c.order = static_cast<unsigned>(std::stoul(tok[3]));
      c.comparison_generator = static_cast<unsigned>(std::stoul(tok[5]));
      if (c.order == 0) fail("class order must be positive");
      if (c.comparison_generator >= ambient) fail("embed exponent out of range");
      unsigned embed_order =
          c.comparison_generator == 0
              ? 1
              : ambient / std::gcd(c.comparison_generator, ambient);
      if (embed_order != c.order) fail("embed exponent order != class order");
      if (c.order == 1) {
        c.gen_exponents = {0};
      } else {
        for (unsigned k = 1; k < c.order; ++k) {
          if (std::gcd(k, c.order) == 1) c.gen_exponents.push_back(k);
        }
      }
      classes.push_back(std::move(c));
      strata.emplace_back();
      class_has_worbit = false;
    } else if (key == "worbit") {
      if (classes.empty()) fail("worbit before any class");
      if (!class_has_worbit) {
        classes.back().weyl_orbits.clear();
        class_has_worbit = true;
      }
      std::vector<unsigned> orbit;
      for (size_t i = 1; i < tok.size(); ++i) {
        orbit.push_back(static_cast<unsigned>(std::stoul(tok[i])));
      }
      if (orbit.empty()) fail("empty worbit");
      classes.back().weyl_orbits.push_back(std::move(orbit));
    } else if (key == "component") {
      if (classes.empty()) fail("component before any class");
      if (tok.size() != 6 || tok[2] != "dim" || tok[4] != "weight") {
        fail("expected 'component <label> dim <d> weight <w>'");
      }
      FixedComponent y;
      y.label = tok[1];
      y.dim = static_cast<unsigned>(std::stoul(tok[3]));
      y.weight = static_cast<unsigned>(std::stoul(tok[5]));
      strata.back().push_back(std::move(y));
    } else if (key == "symbols") {
      if (strata.empty() || strata.back().empty()) fail("symbols before any component");
      for (size_t i = 1; i < tok.size(); ++i) strata.back().back().symbols.push_back(tok[i]);
    } else if (key == "tangent") {
      if (strata.empty() || strata.back().empty()) fail("tangent before any component");
      FixedComponent& y = strata.back().back();
      for (size_t i = 1; i < tok.size(); ++i) {
        bool found = false;
        for (size_t s = 0; s < y.symbols.size(); ++s) {
          if (y.symbols[s] == tok[i]) {
            y.tangent_symbols.push_back(static_cast<unsigned>(s));
            found = true;
          }
        }
        if (!found) fail("tangent symbol '" + tok[i] + "' not declared");
      }
    } else if (key == "normal") {
      if (strata.empty() || strata.back().empty()) fail("normal before any component");
      if (tok.size() != 3 && !(tok.size() == 5 && tok[3] == "lift")) {
        fail("expected 'normal <sym|-> <k/n> [lift <k/n>]'");
      }
      FixedComponent& y = strata.back().back();
      NormalEntry ne;
      if (tok[1] == "-") {
        ne.symbol = -1;
      } else {
        ne.symbol = -2;
        for (size_t s = 0; s < y.symbols.size(); ++s) {
          if (y.symbols[s] == tok[1]) ne.symbol = static_cast<int>(s);
        }
        if (ne.symbol == -2) fail("normal symbol '" + tok[1] + "' not declared");
      }
      ne.eigenvalue = RootOfUnity::parse(tok[2]);
      if (tok.size() == 5) ne.lift = RootOfUnity::parse(tok[4]);
      y.normal.push_back(std::move(ne));
    } else if (key == "point") {
      if (strata.empty() || strata.back().empty()) fail("point before any component");
      if (tok.size() != 3) fail("expected 'point <x> <y>'");
      strata.back().back().point = Vec2q{Rational::parse(tok[1]), Rational::parse(tok[2])};
    } else if (key == "integral") {
      if (strata.empty() || strata.back().empty()) fail("integral before any component");
      std::string rest;
      for (size_t i = 1; i < tok.size(); ++i) rest += (i > 1 ? " " : "") + tok[i];
      auto eq = rest.find('=');
      if (eq == std::string::npos) fail("expected 'integral <monomial>=<rational>'");
      FixedComponent& y = strata.back().back();
      Monomial m = monomial_parse(rest.substr(0, eq), y.symbols);
      y.integrals[m] = Rational::parse(rest.substr(eq + 1));
    } else {
      fail("unknown keyword '" + key + "'");
    }
  }
  if (!saw_header) throw ParseError("missing 'orbindex-model 1' header");
  if (ambient == 0) throw ParseError("model file declares no group");
  if (classes.empty()) throw ParseError("model file declares no classes");
  for (auto& c : classes) {
    if (c.weyl_orbits.empty()) {
      for (unsigned k : c.gen_exponents) c.weyl_orbits.push_back({k});
    }
  }

  ManifoldModel m;
  m.id = id;
  m.family = "custom";
  m.group = GroupModel::custom(ambient, std::move(classes));
  m.dimension = dim;
  m.operators = ops.empty() ? std::set<Operator>{Operator::Dolbeault} : ops;
  m.degree_twists = false;
  m.strata = std::move(strata);
  return m;
}

}  // namespace orbindex
