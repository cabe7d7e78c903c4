#include "orbindex/report.hpp"

#include <json.hpp>

#include <sstream>

namespace orbindex {

using ordered_json = nlohmann::ordered_json;

std::string report_to_json(const IndexReport& report, bool pretty) {
  ordered_json j;
  j["model"] = report.model_id;
  j["operator"] = report.op;
  j["twist"] = report.twist;
  j["rho"] = report.rho;
  j["grouping"] = report.grouping;
  ordered_json contribs = ordered_json::array();
  for (const auto& c : report.contributions) {
    ordered_json jc;
    jc["class"] = c.label;
    jc["value"] = c.value.str();
    contribs.push_back(std::move(jc));
  }
  j["contributions"] = std::move(contribs);
  j["total"] = report.total_value.str();
  if (report.total_integer) {
    j["total_integer"] = *report.total_integer;
  } else {
    j["total_integer"] = nullptr;
  }
  if (report.oracle) {
    j["oracle"] = *report.oracle;
  }
  ordered_json verdicts;
  verdicts["rational"] = report.is_rational;
  verdicts["integral"] = report.is_integral;
  if (report.grouping_consistent) verdicts["grouping_consistent"] = *report.grouping_consistent;
  if (report.matches_oracle) verdicts["matches_oracle"] = *report.matches_oracle;
  j["verdicts"] = std::move(verdicts);
  j["status"] = report.status;
  return pretty ? j.dump(2) + "\n" : j.dump();
}

IndexReport report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("report json: ") + e.what());
  }
  IndexReport r;
  r.model_id = j.at("model").get<std::string>();
  r.op = j.at("operator").get<std::string>();
  r.twist = j.at("twist").get<std::string>();
  r.rho = j.at("rho").get<std::string>();
  r.grouping = j.at("grouping").get<std::string>();
  for (const auto& jc : j.at("contributions")) {
    Contribution c;
    c.label = jc.at("class").get<std::string>();
    c.value = Cyclotomic::parse(jc.at("value").get<std::string>());
    r.contributions.push_back(std::move(c));
  }
  r.total_value = Cyclotomic::parse(j.at("total").get<std::string>());
  r.is_rational = r.total_value.is_rational();
  if (r.is_rational) {
    r.total_rational = r.total_value.to_rational();
    r.is_integral = r.total_rational.is_integer();
  }
  if (j.contains("total_integer") && !j.at("total_integer").is_null()) {
    r.total_integer = j.at("total_integer").get<long>();
  }
  if (j.contains("oracle")) r.oracle = j.at("oracle").get<long>();
  const auto& verdicts = j.at("verdicts");
  if (verdicts.contains("grouping_consistent")) {
    r.grouping_consistent = verdicts.at("grouping_consistent").get<bool>();
  }
  if (verdicts.contains("matches_oracle")) {
    r.matches_oracle = verdicts.at("matches_oracle").get<bool>();
  }
  r.status = j.at("status").get<std::string>();
  return r;
}

std::string report_human(const IndexReport& report) {
  std::ostringstream os;
  os << report.model_id << "  " << report.op << "  twist " << report.twist << "  rho "
     << report.rho << "  [" << report.grouping << "]\n";
  size_t width = 8;
  for (const auto& c : report.contributions) width = std::max(width, c.label.size());
  for (const auto& c : report.contributions) {
    os << "  " << c.label << std::string(width + 2 - c.label.size(), ' ')
       << c.value.str() << "\n";
  }
  os << "  total = " << report.total_value.str();
  if (report.oracle) os << "   oracle = " << *report.oracle;
  os << "   status = " << report.status << "\n";
  return os.str();
}

std::string decompose_to_json(const ManifoldModel& model, const DecomposeResult& result,
                              const std::string& op, bool pretty) {
  ordered_json j;
  j["model"] = model.id;
  j["operator"] = op;
  ordered_json classes = ordered_json::array();
  for (const auto& u : result.classes) {
    ordered_json ju;
    ju["class"] = u.label;
    ordered_json gens = ordered_json::array();
    for (const auto& [k, comps] : u.per_generator) {
      ordered_json jg;
      jg["exponent"] = k;
      ordered_json jcomps = ordered_json::array();
      for (size_t yi = 0; yi < comps.size(); ++yi) {
        const FixedComponent& y = model.strata[u.class_index][yi];
        ordered_json jy;
        jy["component"] = y.label;
        ordered_json values;
        for (const auto& [m, v] : comps[yi]) {
          values[monomial_str(m, y.symbols)] = v.str();
        }
        jy["functional"] = std::move(values);
        jcomps.push_back(std::move(jy));
      }
      jg["components"] = std::move(jcomps);
      gens.push_back(std::move(jg));
    }
    ju["generators"] = std::move(gens);
    classes.push_back(std::move(ju));
  }
  j["classes"] = std::move(classes);
  ordered_json fam = ordered_json::array();
  for (const auto& f : result.family) fam.push_back(f);
  j["family"] = std::move(fam);
  ordered_json verdicts;
  verdicts["reconstruction"] = result.reconstruction_ok;
  verdicts["spanning"] = result.spanning_ok;
  verdicts["weyl_equivariant"] = result.weyl_equivariant;
  j["verdicts"] = std::move(verdicts);
  ordered_json fails = ordered_json::array();
  for (const auto& f : result.failures) fails.push_back(f);
  j["failures"] = std::move(fails);
  j["status"] = result.failures.empty() ? "ok" : "alarm:ReconstructionFailure";
  return pretty ? j.dump(2) + "\n" : j.dump();
}

std::string decompose_human(const ManifoldModel& model, const DecomposeResult& result,
                            const std::string& op) {
  std::ostringstream os;
  os << model.id << "  " << op << "  decomposition\n";
  for (const auto& u : result.classes) {
    os << "  class " << u.label << "\n";
    for (const auto& [k, comps] : u.per_generator) {
      os << "    generator exponent " << k << ":\n";
      for (size_t yi = 0; yi < comps.size(); ++yi) {
        const FixedComponent& y = model.strata[u.class_index][yi];
        os << "      " << y.label << ":";
        for (const auto& [m, v] : comps[yi]) {
          os << "  [" << monomial_str(m, y.symbols) << "] " << v.str();
        }
        os << "\n";
      }
    }
  }
  os << "  reconstruction " << (result.reconstruction_ok ? "ok" : "FAILED") << ", spanning "
     << (result.spanning_ok ? "ok" : "FAILED") << ", weyl "
     << (result.weyl_equivariant ? "ok" : "FAILED") << "\n";
  for (const auto& f : result.failures) os << "  ! " << f << "\n";
  return os.str();
}

}  // namespace orbindex
