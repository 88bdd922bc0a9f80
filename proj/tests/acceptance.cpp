// Acceptance criteria 1-10; one PASS/FAIL line per criterion item.
//   lgkit_acceptance --criterion N   (or --all)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lgkit/cohomology.hpp"
#include "lgkit/reports.hpp"
#include "lgkit/toric.hpp"

using namespace lgkit;

namespace {

int failures = 0;

void line(int crit, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s  %s\n", ok ? "PASS" : "FAIL", crit, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void num(int crit, const std::string& name, double dev, double tol) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "dev=%.3e tol=%.1e", dev, tol);
  line(crit, name, dev <= tol, buf);
}

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string show_map(const std::map<std::vector<int>, long>& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) os << ", ";
    first = false;
    if (k.size() == 1)
      os << k[0];
    else
      os << "(" << k[0] << "," << k[1] << ")";
    os << ":" << v;
  }
  os << "}";
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void timing(int crit, const std::string& name, double t, double limit) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs < %.0fs", t, limit);
  line(crit, name, t < limit, buf);
}

std::map<int, long> nonzero(const std::map<int, long>& m) {
  std::map<int, long> out;
  for (const auto& [k, v] : m)
    if (v) out[k] = v;
  return out;
}

// ------------------------------------------------------------------ criteria

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  ModelSpec c = fermat_cubic();
  JacobianReport J = jacobian_ring_charge0(c, 4 * c.max_degree());
  line(1, "dimR=2", J.total == 2, "got " + show(J.total));
  bool weights = J.dims.size() >= 3 && J.dims[0] == 1 && J.dims[1] == 1 && J.dims[2] == 0;
  line(1, "per-weight [1,1,0]", weights, "got [" + show(J.dims[0]) + "," + show(J.dims[1]) + "," + show(J.dims[2]) + "]");
  bool brute = true;
  for (int k = 0; k < static_cast<int>(J.dims.size()); ++k) brute = brute && jacobian_dimension_at(c, k) == J.dims[k];
  line(1, "per-weight elimination without propagation", brute, "");
  auto hpv = pv_table(c, J.total).as_map();
  line(1, "HPV={-1:1,0:2,1:1}", hpv == std::map<std::vector<int>, long>{{{-1}, 1}, {{0}, 2}, {{1}, 1}}, show_map(hpv));
  auto hv = cohomology_of_V(c, J.total).as_map();
  line(1, "HV={0:1,1:2,2:1}", hv == std::map<std::vector<int>, long>{{{0}, 1}, {{1}, 2}, {{2}, 1}}, show_map(hv));
  HodgeDiamond hd = hodge_oracle(3, 1, {3});
  line(1, "hodge_oracle b1=2", hd.betti(1) == 2 && hd.betti(1) == J.total, "b1=" + show(hd.betti(1)));
  timing(1, "runtime", seconds_since(t0), 5);
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  ModelSpec q = quadric_pair();
  int cutoff = 4 * q.max_degree();
  JacobianReport J = jacobian_ring_charge0(q, cutoff);
  line(2, "dimR=2", J.total == 2, "got " + show(J.total));
  SpectralPages P = spectral_pages(q, J.total);
  line(2, "E2 has C at (3,0)", P.E2.at({3, 0}) == 1L, "");
  line(2, "E2 has R(W)_0 at (5,0)", P.E2.at({5, 0}) == J.total, "");
  std::map<int, long> row;
  for (const auto& e : P.E2.entries)
    if (e.index[1] == 0 && e.dim > 0) row[e.index[0]] = e.dim;
  ComplexResult D = dRham0_cohomology(q, cutoff);
  auto got = nonzero(D.by_degree);
  std::string detail = "dRham0 {";
  for (auto [p, d] : got) detail += show(p) + ":" + show(d) + " ";
  detail += "}";
  line(2, "dRham0 equals the E2 q=0 row", got == row && D.stabilized, detail);
  long einf = P.Einf.total(), hv = cohomology_of_V(q, J.total).total();
  line(2, "sum Einf = sum HV = 4", einf == 4 && hv == 4, "Einf " + show(einf) + ", HV " + show(hv));
  timing(2, "runtime", seconds_since(t0), 30);
}

void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  ModelSpec f = fermat_quintic();
  JacobianReport J = jacobian_ring_charge0(f, 4 * f.max_degree());
  line(3, "dimR=204", J.total == 204, "got " + show(J.total));
  HodgeDiamond hd = hodge_oracle(5, 1, {5});
  line(3, "hodge_oracle b3=204", hd.betti(3) == 204 && hd.betti(3) == J.total, "b3=" + show(hd.betti(3)));
  auto hpv = pv_table(f, J.total).as_map();
  line(3, "HPV={-3:1,-1:1,0:204,1:1,3:1}",
       hpv == std::map<std::vector<int>, long>{{{-3}, 1}, {{-1}, 1}, {{0}, 204}, {{1}, 1}, {{3}, 1}}, show_map(hpv));
  timing(3, "runtime", seconds_since(t0), 600);
}

void criterion4() {
  for (const ModelSpec& s : {fermat_cubic(), quadric_pair()}) {
    std::string tag = s.r == 1 ? "cubic" : "quadric_pair";
    ExecPolicy pol;
    pol.verify_square = true;
    ComplexResult K = koszul_cohomology(s, 4 * s.max_degree(), pol);
    long bad = 0;
    bool skipped = false;
    for (const auto& st : K.strands) {
      skipped = skipped || st.skipped;
      for (std::size_t i = 0; i < st.coh.size(); ++i) {
        int p = st.degrees[i];
        if (p != 2 * s.r && p != s.n + s.r - 1 && p != s.n + s.r) bad += st.coh[i];
      }
    }
    line(4, tag + " support in {2r, n+r-1, n+r}", bad == 0 && !skipped && K.stabilized,
         "offending dimension " + show(bad) + ", strands " + show(K.strands.size()));
    line(4, tag + " dW_1^dp_1^..^dW_r^dp_r nonzero class",
         koszul_class(s, koszul_distinguished_class(s)).nonzero_class(), "");
  }
}

void criterion5() {
  ModelSpec q = quadric_pair();
  line(5, "dW^theta^r = 0", dW_theta_power(q, q.r).is_zero(), "");
  for (int k = 1; k < q.r; ++k) {
    BigradedForm f = dW_theta_power(q, k);
    ClassCheck c = dRham0_class(q, f);
    line(5, "dW^theta^" + show(k) + " nonzero dRham0 class", !f.is_zero() && c.nonzero_class(),
         "closed " + show(c.closed) + " kernel " + show(c.in_kernel) + " exact " + show(c.exact));
  }
}

Report geometry(const ModelSpec& s) {
  RunConfig cfg;
  cfg.subcommand = "geometry";
  cfg.samples = 100;
  cfg.seed = 42;
  cfg.homotheties = {0.5, 2.0, 4.0};
  return geometry_report(s, cfg);
}

void from_report(int crit, const std::string& tag, const Report& r, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    const Check* c = nullptr;
    for (const auto& ch : r.checks)
      if (ch.name == n) c = &ch;
    if (!c) {
      line(crit, tag + " " + n, false, "missing");
      continue;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=%ld dev=%.3e tol=%.1e%s%s", c->samples, c->max_dev, c->tol,
                  c->note.empty() ? "" : "  ", c->note.c_str());
    line(crit, tag + " " + n, c->status == "pass", buf);
  }
}

void criterion6() {
  for (const ModelSpec& s : {fermat_cubic(), quadric_pair()}) {
    std::string tag = s.r == 1 ? "cubic" : "quadric_pair";
    Report r = geometry(s);
    from_report(6, tag, r,
                {"volume_theta_equals_2", "volume_omega_equals_2", "projection_orthogonality", "metric_hermitian",
                 "homothety_metric_scaling_t=0.5", "homothety_metric_scaling_t=2", "homothety_metric_scaling_t=4"});
  }
}

void criterion7() {
  for (const ModelSpec& s : {fermat_cubic(), quadric_pair()}) {
    std::string tag = s.r == 1 ? "cubic" : "quadric_pair";
    Report r = geometry(s);
    from_report(7, tag, r,
                {"curvature_vs_finite_difference", "curvature_cross_path", "holomorphic_curvature_nonnegative",
                 "curvature_scaling_t2", "A_tensor_bound"});
  }
}

void criterion8() {
  Report r = geometry(fermat_cubic());
  from_report(8, "cubic", r, {"ellipticity_decay_k2", "gradient_symbolic_vs_fd"});
}

void criterion9() {
  struct Case {
    std::vector<int> w, d;
    std::string tag;
  };
  for (const auto& c : std::vector<Case>{{{1, 1}, {1, 1}, "w=(1,1) d=(1,1)"},
                                         {{1, 1}, {2}, "w=(1,1) d=(2)"},
                                         {{1, 1, 1, 1}, {2, 2}, "w=(1,1,1,1) d=(2,2)"},
                                         {{1, 2}, {3}, "w=(1,2) d=(3)"}}) {
    auto t0 = std::chrono::steady_clock::now();
    toric::BlowupFans F = toric::build_fans(c.w, c.d);
    bool cy = toric::fan_equal(toric::star_subdivision(F.cy, F.u0, "z"), F.tilde);
    bool lg = toric::fan_equal(toric::star_subdivision(F.lg, F.u0, "z"), F.tilde);
    line(9, c.tag + " star(CY, rho0) = tilde = star(LG, rho0)", cy && lg, "CY " + show(cy) + " LG " + show(lg));
    toric::ClassGroup cg = toric::class_group(F.tilde);
    toric::DegreeCheck dc = toric::degree_check(F);
    line(9, c.tag + " Cl(tilde) free rank 2, z-degree (-1,-1)",
         cg.free_rank == 2 && cg.torsion.empty() && dc.ok(),
         "rank " + show(cg.free_rank) + " torsion " + show(cg.torsion.size()) + " z " + show(dc.z_degree));
    toric::Irrelevant ir = toric::irrelevant_data(F.tilde);
    std::vector<std::string> got = ir.generator_text, want;
    for (std::size_t j = 1; j <= c.w.size(); ++j)
      for (std::size_t k = 1; k <= c.d.size(); ++k) want.push_back("x" + show(j) + "*p" + show(k));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    line(9, c.tag + " irrelevant generators {x_j p_k}", got == want, show(got.size()) + " generators");
    timing(9, c.tag + " runtime", seconds_since(t0), 1);
  }
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion10(const std::string& cli) {
  std::string a = "lgkit_acceptance_selftest_a.json", b = "lgkit_acceptance_selftest_b.json";
  int ra = std::system((cli + " selftest --out " + a + " > /dev/null").c_str());
  int rb = std::system((cli + " selftest --out " + b + " > /dev/null").c_str());
  std::string ta = slurp(a), tb = slurp(b);
  line(10, "selftest exit 0 twice", ra == 0 && rb == 0, "status " + show(ra) + ", " + show(rb));
  line(10, "selftest reports byte-identical", !ta.empty() && ta == tb, show(ta.size()) + " bytes");
  std::remove(a.c_str());
  std::remove(b.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  std::string cli = LGKIT_CLI_PATH;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc)
      which.push_back(std::atoi(argv[++i]));
    else if (a == "--all")
      for (int c = 1; c <= 10; ++c) which.push_back(c);
    else if (a == "--cli" && i + 1 < argc)
      cli = argv[++i];
    else {
      std::fprintf(stderr, "usage: %s --criterion N | --all [--cli path]\n", argv[0]);
      return 2;
    }
  }
  if (which.empty()) {
    std::fprintf(stderr, "usage: %s --criterion N | --all [--cli path]\n", argv[0]);
    return 2;
  }
  for (int c : which) {
    switch (c) {
      case 1: criterion1(); break;
      case 2: criterion2(); break;
      case 3: criterion3(); break;
      case 4: criterion4(); break;
      case 5: criterion5(); break;
      case 6: criterion6(); break;
      case 7: criterion7(); break;
      case 8: criterion8(); break;
      case 9: criterion9(); break;
      case 10: criterion10(cli); break;
      default: std::fprintf(stderr, "no criterion %d\n", c); return 2;
    }
  }
  return failures ? 1 : 0;
}
