#include "orbindex/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "orbindex/model_io.hpp"
#include "orbindex/oracle.hpp"
#include "orbindex/report.hpp"
#include "orbindex/verify.hpp"

namespace orbindex {

namespace {

struct ModelFlags {
  std::string family;
  unsigned n = 0;
  std::string wallpaper;
  std::string model_file;
  std::string spin_lift = "plus";
  std::string lattice;
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
  cmd->add_option("--model", flags.family,
                  "model family: football | torusrot | symprod_s2 | wallpaper");
  cmd->add_option("--n", flags.n, "parameter n for football/torusrot");
  cmd->add_option("--wallpaper", flags.wallpaper, "wallpaper name: p1 p2 p3 p4 p6");
  cmd->add_option("--lattice", flags.lattice,
                  "wallpaper lattice basis 're1;im1;re2;im2' (exact values)");
  cmd->add_option("--model-file", flags.model_file, "custom strata model file");
  cmd->add_option("--spin-lift", flags.spin_lift, "spin lift variant: plus | minus")
      ->check(CLI::IsMember({"plus", "minus"}));
}

ManifoldModel resolve_model(const ModelFlags& flags) {
  if (!flags.model_file.empty()) {
    std::ifstream in(flags.model_file);
    if (!in) throw UnsupportedParams("cannot open model file '" + flags.model_file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    ManifoldModel m = parse_model(buf.str());
    require_valid(m);
    return m;
  }
  if (flags.family.empty()) throw UnsupportedParams("no model selected (--model or --model-file)");
  ModelSpec spec;
  spec.family = flags.family;
  spec.n = flags.n;
  spec.wallpaper = flags.wallpaper;
  spec.lattice = flags.lattice;
  spec.lift = flags.spin_lift == "minus" ? SpinLiftVariant::Minus : SpinLiftVariant::Plus;
  if (spec.family == "wallpaper" && spec.wallpaper.empty()) {
    throw UnsupportedParams("wallpaper model needs --wallpaper <name>");
  }
  if ((spec.family == "football" || spec.family == "torusrot") && spec.n == 0) {
    throw UnsupportedParams(spec.family + " needs --n <order>");
  }
  return instantiate(spec);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"orbindex: exact equivariant index computations on model orbifolds"};
  app.require_subcommand(1);
  app.fallthrough();  // --format / --parallel may follow the subcommand

  std::string format = "human";
  app.add_option("--format", format, "output format: human | json")
      ->check(CLI::IsMember({"human", "json"}));
  bool parallel = false;
  app.add_flag("--parallel", parallel, "evaluate independent work items with OpenMP");

  auto* models_cmd = app.add_subcommand("models", "list the model catalog");
  ModelFlags m_model;
  bool m_dump = false;
  add_model_flags(models_cmd, m_model);
  models_cmd->add_flag("--dump", m_dump, "print the selected model's strata file");

  auto* group_cmd = app.add_subcommand("group", "inspect group class data");
  std::string g_wallpaper, g_permutations, g_lattice;
  unsigned g_cyclic = 0;
  bool g_classes = false, g_cyclic_classes = false;
  group_cmd->add_option("--wallpaper", g_wallpaper, "wallpaper group name");
  group_cmd->add_option("--lattice", g_lattice, "lattice basis 're1;im1;re2;im2'");
  group_cmd->add_option("--cyclic", g_cyclic, "finite cyclic group order");
  group_cmd->add_option("--permutations", g_permutations,
                        "file of generator permutations, one per line");
  group_cmd->add_flag("--classes", g_classes, "list finite-order element classes");
  group_cmd->add_flag("--cyclic-classes", g_cyclic_classes, "list cyclic subgroup classes");

  auto* compute_cmd = app.add_subcommand("compute", "compute an equivariant index");
  ModelFlags c_model;
  add_model_flags(compute_cmd, c_model);
  std::string c_operator = "dolbeault", c_twist = "O:0", c_rho = "trivial",
              c_grouping = "elements";
  compute_cmd->add_option("--operator", c_operator, "deRham | dolbeault | spin");
  compute_cmd->add_option("--twist", c_twist, "twist: O:k, wt:w, O:k*wt:w, sum:...");
  compute_cmd->add_option("--rho", c_rho, "representation: trivial | regular | w:k");
  compute_cmd->add_option("--grouping", c_grouping, "elements | cyclic")
      ->check(CLI::IsMember({"elements", "cyclic"}));

  auto* decompose_cmd = app.add_subcommand("decompose", "emit the per-class functionals");
  ModelFlags d_model;
  add_model_flags(decompose_cmd, d_model);
  std::string d_operator = "dolbeault";
  decompose_cmd->add_option("--operator", d_operator, "deRham | dolbeault | spin");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  std::string v_suite = "catalog";
  verify_cmd->add_option("--suite", v_suite, "suite name (catalog)")
      ->check(CLI::IsMember({"catalog"}));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 64;
  }

  EngineOptions opts;
  opts.parallel = parallel;
  bool json = format == "json";

  try {
    if (models_cmd->parsed()) {
      if (m_dump) {
        ManifoldModel model = resolve_model(m_model);
        out << dump_model(model);
        return 0;
      }
      if (json) {
        std::ostringstream os;
        os << "[\n";
        auto entries = catalog();
        for (size_t i = 0; i < entries.size(); ++i) {
          os << "  {\"family\": \"" << entries[i].family << "\", \"params\": \""
             << entries[i].params << "\", \"operators\": \"" << entries[i].operators
             << "\", \"twists\": \"" << entries[i].twists << "\"}"
             << (i + 1 < entries.size() ? "," : "") << "\n";
        }
        os << "]\n";
        out << os.str();
      } else {
        for (const auto& e : catalog()) {
          out << e.family << (e.params.empty() ? "" : " (" + e.params + ")")
              << "  operators: " << e.operators << "  twists: " << e.twists << "\n";
        }
      }
      return 0;
    }

    if (group_cmd->parsed()) {
      GroupModel gm = [&]() {
        if (!g_wallpaper.empty()) {
          WallpaperGroup w = g_lattice.empty()
                                 ? WallpaperGroup::by_name(g_wallpaper)
                                 : WallpaperGroup::with_basis(g_wallpaper,
                                                              LatticeBasis::parse(g_lattice));
          return GroupModel::from_wallpaper(std::move(w));
        }
        if (g_cyclic > 0) return GroupModel::from_finite(FiniteGroup::cyclic(g_cyclic));
        if (!g_permutations.empty()) {
          std::ifstream in(g_permutations);
          if (!in) throw UnsupportedParams("cannot open '" + g_permutations + "'");
          std::ostringstream buf;
          buf << in.rdbuf();
          return GroupModel::from_finite(FiniteGroup::parse_permutations(buf.str()));
        }
        throw UnsupportedParams("group needs --wallpaper, --cyclic or --permutations");
      }();
      if (!g_classes && !g_cyclic_classes) g_classes = g_cyclic_classes = true;
      if (g_classes) {
        out << "finite-order element classes (" << gm.element_classes().size() << "):\n";
        for (const auto& e : gm.element_classes()) {
          const auto& c = gm.cyclic_classes()[e.cyclic_index];
          out << "  " << e.label << "  ->  " << c.label << " exponent " << e.exponent << "\n";
        }
      }
      if (g_cyclic_classes) {
        out << "cyclic subgroup classes (" << gm.cyclic_classes().size() << "):\n";
        for (const auto& c : gm.cyclic_classes()) {
          out << "  " << c.label << "  order " << c.order << "  weyl orbits "
              << c.weyl_orbits.size() << "\n";
        }
      }
      return 0;
    }

    if (compute_cmd->parsed()) {
      ManifoldModel model = resolve_model(c_model);
      Operator op = operator_parse(c_operator);
      TwistSpec twist = TwistSpec::parse(c_twist);
      Representation rho = model.group.rho_by_name(c_rho);
      IndexReport report = compute_checked(model, op, twist, rho,
                                           c_grouping == "cyclic" ? "byCyclic" : "byElements",
                                           opts);
      if (model.family != "custom") {
        Rational oracle = lefschetz_average(model, op, twist, rho);
        if (oracle.fits_long()) {
          report.oracle = oracle.to_long();
          report.matches_oracle =
              report.is_rational && report.total_rational == oracle;
        } else {
          report.matches_oracle = false;
        }
        if (!*report.matches_oracle && report.status == "ok") {
          report.status = "alarm:OracleMismatch";
        }
      }
      out << (json ? report_to_json(report) : report_human(report));
      return report.status == "ok" ? 0 : 2;
    }

    if (decompose_cmd->parsed()) {
      ManifoldModel model = resolve_model(d_model);
      Operator op = operator_parse(d_operator);
      DecomposeResult result = decompose(model, op, opts);
      out << (json ? decompose_to_json(model, result, operator_name(op))
                   : decompose_human(model, result, operator_name(op)));
      return result.failures.empty() ? 0 : 2;
    }

    if (verify_cmd->parsed()) {
      std::vector<CheckResult> results = run_acceptance_suite(opts);
      if (json) {
        std::ostringstream os;
        os << "[\n";
        for (size_t i = 0; i < results.size(); ++i) {
          os << "  {\"criterion\": \"" << results[i].name << "\", \"pass\": "
             << (results[i].pass ? "true" : "false") << ", \"failures\": "
             << results[i].failures.size() << "}" << (i + 1 < results.size() ? "," : "")
             << "\n";
        }
        os << "]\n";
        out << os.str();
      } else {
        for (const auto& r : results) {
          out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
              << (r.summary.empty() ? "" : " — " + r.summary) << "\n";
          for (const auto& f : r.failures) out << "       " << f << "\n";
        }
      }
      return all_passed(results) ? 0 : 2;
    }
  } catch (const NotRational& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const NonIntegral& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const GroupingMismatch& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const TwistMismatch& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const OracleMismatch& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ReconstructionFailure& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 3;
  }
  return 64;
}

}  // namespace orbindex
