// Timing comparison of the serial and OpenMP evaluation paths on the full
// catalog sweep. Exact arithmetic makes the two paths bit-identical; the
// checksum line asserts that.

#include <chrono>
#include <iostream>

#include "orbindex/parallel.hpp"
#include "orbindex/report.hpp"
#include "orbindex/verify.hpp"

using namespace orbindex;

namespace {

struct SweepCase {
  ManifoldModel* model;
  Operator op;
  TwistSpec twist;
  Representation rho;
};

std::string run_sweep(std::vector<SweepCase>& cases, bool parallel, double& seconds) {
  std::vector<std::string> outputs(cases.size());
  auto start = std::chrono::steady_clock::now();
  parallel_for(cases.size(), parallel, [&](size_t i) {
    IndexReport r = compute_checked(*cases[i].model, cases[i].op, cases[i].twist,
                                    cases[i].rho, "byElements", {});
    outputs[i] = report_to_json(r, false);
  });
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string all;
  for (const auto& o : outputs) all += o + "\n";
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::vector<ManifoldModel> models;
  for (unsigned n = 1; n <= 12; ++n) models.push_back(instantiate({"football", n, "", {}}));
  for (unsigned n : {2u, 3u, 4u, 6u}) models.push_back(instantiate({"torusrot", n, "", {}}));
  models.push_back(instantiate({"symprod_s2", 0, "", {}}));
  for (const std::string& w : WallpaperGroup::names()) {
    models.push_back(instantiate({"wallpaper", 0, w, {}}));
  }
  std::vector<SweepCase> cases;
  for (ManifoldModel& m : models) {
    for (Operator op : {Operator::DeRham, Operator::Dolbeault, Operator::Spin}) {
      if (!m.supports(op)) continue;
      std::vector<TwistSpec> twists = {TwistSpec::trivial()};
      if (op == Operator::Dolbeault && m.degree_twists) {
        for (int k = -3; k <= 3; ++k) {
          TwistSpec t;
          t.atoms.push_back(TwistAtom{k, 0});
          twists.push_back(t);
        }
      }
      for (const TwistSpec& t : twists) {
        for (const Representation& rho : m.group.irreducibles()) {
          cases.push_back(SweepCase{&m, op, t, rho});
        }
      }
    }
  }
  std::cout << "catalog sweep: " << cases.size() << " index computations, "
            << hardware_threads() << " threads available\n";

  double serial_best = 1e30, parallel_best = 1e30;
  std::string serial_out, parallel_out;
  for (int r = 0; r < repeats; ++r) {
    double s = 0;
    serial_out = run_sweep(cases, false, s);
    serial_best = std::min(serial_best, s);
    double p = 0;
    parallel_out = run_sweep(cases, true, p);
    parallel_best = std::min(parallel_best, p);
  }
  std::cout << "serial reference: " << serial_best << " s\n";
  std::cout << "openmp parallel:  " << parallel_best << " s\n";
  std::cout << "speedup:          " << serial_best / parallel_best << "x\n";
  bool identical = serial_out == parallel_out;
  std::cout << "outputs identical: " << (identical ? "yes" : "NO") << "\n";
  return identical ? 0 : 1;
}
