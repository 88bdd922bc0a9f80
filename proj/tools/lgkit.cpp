// lgkit: cohomology, geometry and toric reports for hybrid LG models.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lgkit/reports.hpp"

namespace {

void print_summary(std::ostream& os, const lgkit::Report& rep) {
  for (const auto& c : rep.checks) {
    std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : c.status == "info" ? "INFO" : "SKIP";
    os << tag << "  " << c.name << "  n=" << c.samples << "  dev=" << c.max_dev << "  tol=" << c.tol;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  os << (rep.pass() ? "verdict: pass" : "verdict: fail") << "\n";
}

void write_csv(const std::string& path, const lgkit::Report& rep) {
  std::ofstream f(path);
  if (!f) throw lgkit::InputError("cannot write " + path);
  f << "name,status,samples,max_dev,tol\n";
  char buf[64];
  for (const auto& c : rep.checks) {
    f << c.name << "," << c.status << "," << c.samples << ",";
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", c.max_dev, c.tol);
    f << buf;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Ginzburg model toolkit"};
  app.require_subcommand(1);
  lgkit::RunConfig cfg;
  std::string csv;

  auto add_common = [&](CLI::App* sub, bool needs_model) {
    auto* m = sub->add_option("--model", cfg.model_path, "model JSON file");
    if (needs_model) m->required();
    sub->add_option("--weight-cutoff", cfg.weight_cutoff, "weight cutoff (default 4 * max degree)");
    sub->add_option("--samples", cfg.samples, "number of geometry samples");
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--rho", cfg.rho, "polydisc radius for p");
    sub->add_option("--homothety", cfg.homotheties, "homothety parameters")->delimiter(',');
    sub->add_option("--max-block", cfg.max_block, "skip strand blocks with more columns than this");
    sub->add_option("--out", cfg.out, "report path (stdout when absent)");
    sub->add_option("--csv", csv, "flat export of the checks");
    sub->add_flag("!--serial", cfg.parallel, "run kernels on one thread");
  };
  auto* coh = app.add_subcommand("cohomology", "Jacobian ring, Koszul and de Rham tables");
  auto* geo = app.add_subcommand("geometry", "quotient metric, curvature and ellipticity checks");
  auto* tor = app.add_subcommand("toric", "fans of the blow-up and their class groups");
  auto* self = app.add_subcommand("selftest", "built-in worked examples");
  add_common(coh, true);
  add_common(geo, true);
  add_common(tor, true);
  add_common(self, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    lgkit::Report rep;
    if (self->parsed()) {
      cfg.subcommand = "selftest";
      rep = lgkit::selftest_report(cfg);
    } else {
      lgkit::ModelSpec spec = lgkit::load_model(cfg.model_path);
      if (coh->parsed()) {
        cfg.subcommand = "cohomology";
        rep = lgkit::cohomology_report(spec, cfg);
      } else if (geo->parsed()) {
        cfg.subcommand = "geometry";
        rep = lgkit::geometry_report(spec, cfg);
      } else {
        cfg.subcommand = "toric";
        rep = lgkit::toric_report(spec, cfg);
      }
    }
    std::string text = lgkit::dump_report(rep.doc);
    if (cfg.out.empty()) {
      std::cout << text;
      print_summary(std::cerr, rep);
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw lgkit::InputError("cannot write " + cfg.out);
      f << text;
      print_summary(std::cout, rep);
    }
    if (!csv.empty()) write_csv(csv, rep);
    return rep.pass() ? 0 : 1;
  } catch (const lgkit::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
