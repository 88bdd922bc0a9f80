#include "lgkit/reports.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lgkit/geometry.hpp"
#include "lgkit/toric.hpp"

namespace lgkit {

RunConfig resolve_config(RunConfig cfg, const ModelSpec& spec) {
  if (cfg.weight_cutoff == 0) cfg.weight_cutoff = 4 * spec.max_degree();
  if (cfg.weight_cutoff < 1) throw InputError("weight cutoff must be >= 1");
  if (cfg.samples < 0) throw InputError("sample count must be >= 0");
  if (!(cfg.rho > 0)) throw InputError("polydisc radius must be positive");
  for (double t : cfg.homotheties)
    if (!(t > 0)) throw InputError("homothety parameters must be positive");
  return cfg;
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["subcommand"] = cfg.subcommand;
  j["model"] = cfg.model_path;
  j["weight_cutoff"] = cfg.weight_cutoff;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["homotheties"] = cfg.homotheties;
  j["rho"] = cfg.rho;
  j["parallel"] = cfg.parallel;
  j["max_block"] = cfg.max_block;
  return j;
}

Json check_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["samples"] = c.samples;
  j["max_dev"] = c.max_dev;
  j["tol"] = c.tol;
  j["status"] = c.status;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Check make_check(std::string name, long samples, double max_dev, double tol, std::string note) {
  Check c;
  c.name = std::move(name);
  c.samples = samples;
  c.max_dev = max_dev;
  c.tol = tol;
  c.pass = max_dev <= tol;  // NaN fails
  c.status = c.pass ? "pass" : "fail";
  c.note = std::move(note);
  return c;
}

Check make_flag(std::string name, bool ok, std::string note) {
  return make_check(std::move(name), 1, ok ? 0.0 : 1.0, 0.0, std::move(note));
}

namespace {

// max(0, x) that keeps NaN
double positive_part(double x) { return std::isnan(x) || x > 0 ? x : 0.0; }

Check skipped(std::string name, std::string note) {
  Check c;
  c.name = std::move(name);
  c.status = "skipped";
  c.pass = true;
  c.note = std::move(note);
  return c;
}

Check info(std::string name, long samples, double value, std::string note) {
  Check c;
  c.name = std::move(name);
  c.samples = samples;
  c.max_dev = value;
  c.status = "info";
  c.pass = true;
  c.note = std::move(note);
  return c;
}

Json index_json(const std::vector<int>& idx) { return idx.size() == 1 ? Json(idx[0]) : Json(idx); }

}  // namespace

Json table_json(const CohomologyTable& t) {
  Json j;
  j["label"] = t.label;
  Json e = Json::array();
  for (const auto& en : t.entries) {
    Json row;
    row["index"] = index_json(en.index);
    if (en.dim < 0)
      row["dim"] = "infinite";
    else
      row["dim"] = en.dim;
    row["symbol"] = en.symbol;
    e.push_back(row);
  }
  j["entries"] = e;
  j["total_finite"] = t.total();
  return j;
}

Json jacobian_json(const JacobianReport& r) {
  Json j;
  j["cutoff"] = r.cutoff;
  j["dims"] = r.dims;
  j["total"] = r.total;
  j["stabilized"] = r.stabilized;
  j["first_zero"] = r.first_zero;
  j["exact_through"] = r.exact_through;
  return j;
}

Json complex_json(const ComplexResult& c) {
  Json j;
  j["label"] = c.label;
  j["cutoff"] = c.cutoff;
  j["window"] = c.window;
  j["stabilized"] = c.stabilized;
  j["square_checked"] = c.square_checked;
  Json agg = Json::array();
  for (const auto& [p, d] : c.by_degree) agg.push_back(Json::array({p, d}));
  j["by_degree"] = agg;
  Json st = Json::array();
  for (const auto& s : c.strands) {
    Json sj;
    sj["strand"] = s.strand;
    sj["skipped"] = s.skipped;
    sj["degrees"] = s.degrees;
    sj["dims"] = s.dims;
    sj["ranks"] = s.ranks;
    sj["coh"] = s.coh;
    st.push_back(sj);
  }
  j["strands"] = st;
  return j;
}

bool Report::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "fail"; });
}

void Report::finalize() {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(check_json(c));
  doc["checks"] = arr;
  doc["verdict"] = pass() ? "pass" : "fail";
}

std::string dump_report(const Json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------- cohomology

namespace {

Json model_json(const ModelSpec& spec) {
  Json j = Json::parse(serialize_model(spec));
  j["flags"] = {{"calabi_yau", spec.calabi_yau}, {"smooth_chart", spec.smooth_chart}, {"elliptic", spec.elliptic}};
  return j;
}

Json hodge_json(const HodgeDiamond& hd) {
  Json j;
  j["dim"] = hd.dim;
  j["h"] = hd.h;
  Json chi = Json::array();
  for (const auto& c : hd.chi_y) chi.push_back(format_rational(c));
  j["chi_y"] = chi;
  Json b = Json::array();
  for (int k = 0; k <= 2 * hd.dim; ++k) b.push_back(hd.betti(k));
  j["betti"] = b;
  return j;
}

long complex_violations(const ComplexResult& c, const std::vector<int>& allowed) {
  long bad = 0;
  for (const auto& s : c.strands)
    for (std::size_t i = 0; i < s.coh.size(); ++i)
      if (std::find(allowed.begin(), allowed.end(), s.degrees[i]) == allowed.end()) bad += s.coh[i];
  return bad;
}

bool any_skipped(const ComplexResult& c) {
  return std::any_of(c.strands.begin(), c.strands.end(), [](const StrandResult& s) { return s.skipped; });
}

// q = 0 row of a (p, q) table as p -> dim.
std::map<int, long> q0_row(const CohomologyTable& t) {
  std::map<int, long> row;
  for (const auto& e : t.entries)
    if (e.index.size() == 2 && e.index[1] == 0 && e.dim > 0) row[e.index[0]] = e.dim;
  return row;
}

std::map<int, long> nonzero(const std::map<int, long>& m) {
  std::map<int, long> out;
  for (const auto& [k, v] : m)
    if (v) out[k] = v;
  return out;
}

std::string map_text(const std::map<int, long>& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(k) + ":" + std::to_string(v);
  }
  return s + "}";
}

}  // namespace

Report cohomology_report(const ModelSpec& spec, const RunConfig& cfg_in) {
  RunConfig cfg = resolve_config(cfg_in, spec);
  if (!spec.smooth_chart) throw InputError("cohomology needs all weights w_j = 1");
  if (!spec.calabi_yau) throw InputError("cohomology needs the Calabi-Yau condition sum d = sum w");
  Report rep;
  rep.doc["report"] = "cohomology";
  rep.doc["config"] = config_json(cfg);
  rep.doc["model"] = model_json(spec);

  ExecPolicy pol;
  pol.parallel = cfg.parallel;
  pol.max_block = cfg.max_block;
  pol.verify_square = true;

  Smoothness sm = smoothness_probe(spec, cfg.weight_cutoff);
  rep.doc["smoothness"] = to_string(sm);
  JacobianReport J = jacobian_ring_charge0(spec, cfg.weight_cutoff, pol);
  rep.doc["jacobian"] = jacobian_json(J);
  rep.checks.push_back(make_flag("smoothness_probe", sm == Smoothness::likely_smooth,
                                 std::string("R(W)_0 per-weight dimensions: ") + to_string(sm)));
  rep.checks.push_back(make_flag("jacobian_stabilized", J.stabilized));
  if (sm != Smoothness::likely_smooth) {
    rep.checks.push_back(skipped("tables", "V(W) does not look smooth; the tables assume a smooth complete intersection"));
    rep.finalize();
    return rep;
  }
  long dimR = J.total;

  HodgeDiamond hd = hodge_oracle(spec.n, spec.r, spec.degrees);
  rep.doc["hodge_oracle"] = hodge_json(hd);
  int m = hd.dim;
  long primitive_middle = hd.betti(m) - (m % 2 == 0 ? 1 : 0);
  rep.checks.push_back(make_check("dimR_vs_hodge_oracle", 1, std::abs(double(dimR - primitive_middle)), 0,
                                  "dim R(W)_0 = " + std::to_string(dimR) + ", primitive middle Betti " +
                                      std::to_string(primitive_middle)));

  CohomologyTable HV = cohomology_of_V(spec, dimR);
  CohomologyTable HPV = pv_table(spec, dimR);
  SpectralPages pages = spectral_pages(spec, dimR);
  Json tables;
  tables["HV"] = table_json(HV);
  tables["HPV"] = table_json(HPV);
  tables["E1"] = table_json(pages.E1);
  tables["E2"] = table_json(pages.E2);
  tables["Einf"] = table_json(pages.Einf);
  Json iso = Json::array();
  for (const auto& [a, b] : pages.isomorphisms) iso.push_back({{"from", a}, {"to", b}});
  tables["E2_isomorphisms"] = iso;

  // Betti numbers of V from the oracle against the HV table.
  double hv_dev = 0;
  for (int k = 0; k <= 2 * m; ++k) hv_dev += std::abs(double(HV.at({k}).value_or(0) - hd.betti(k)));
  rep.checks.push_back(make_check("HV_vs_hodge_oracle", 2 * m + 1, hv_dev, 0));
  double tot_dev = std::abs(double(pages.Einf.total() - HV.total())) + std::abs(double(HPV.total() - HV.total()));
  rep.checks.push_back(make_check("total_dimension_identity", 1, tot_dev, 0,
                                  "sum Einf = " + std::to_string(pages.Einf.total()) + ", sum HPV = " +
                                      std::to_string(HPV.total()) + ", sum HV = " + std::to_string(HV.total())));

  ComplexResult K = koszul_cohomology(spec, cfg.weight_cutoff, pol);
  ComplexResult D = dRham0_cohomology(spec, cfg.weight_cutoff, pol);
  tables["Koszul"] = table_json(K.table());
  tables["dRham0"] = table_json(D.table());
  rep.doc["tables"] = tables;
  rep.doc["koszul"] = complex_json(K);
  rep.doc["dRham0"] = complex_json(D);

  int n = spec.n, r = spec.r;
  rep.checks.push_back(make_flag("koszul_blocks_computed", !any_skipped(K), "blocks above max_block are skipped"));
  rep.checks.push_back(make_flag("koszul_stabilized", K.stabilized));
  rep.checks.push_back(make_flag("koszul_square_zero", K.square_checked));
  rep.checks.push_back(make_check("koszul_support", static_cast<long>(K.strands.size()),
                                  double(complex_violations(K, {2 * r, n + r - 1, n + r})), 0,
                                  "cohomology outside p in {2r, n+r-1, n+r}"));
  long top = K.by_degree.count(n + r) ? K.by_degree.at(n + r) : 0;
  rep.checks.push_back(make_check("koszul_top_equals_dimR", 1, std::abs(double(top - dimR)), 0));
  rep.checks.push_back(make_flag("koszul_distinguished_class_nonzero",
                                 koszul_class(spec, koszul_distinguished_class(spec)).nonzero_class(),
                                 "dW_1^dp_1^...^dW_r^dp_r at p = 2r"));

  rep.checks.push_back(make_flag("dRham0_blocks_computed", !any_skipped(D)));
  rep.checks.push_back(make_flag("dRham0_stabilized", D.stabilized));
  // dRham0_cohomology throws if the contraction complex is not exact on some block
  rep.checks.push_back(make_flag("dRham0_euler_complex_exact", true, "iota(Omega^{p+1}) spans ker iota on every block"));
  auto row = q0_row(pages.E2), got = nonzero(D.by_degree);
  rep.checks.push_back(make_flag("dRham0_matches_E2_q0_row", row == got, "E2 " + map_text(row) + ", dRham0 " + map_text(got)));

  rep.checks.push_back(make_flag("dW_theta_r_vanishes", dW_theta_power(spec, r).is_zero()));
  for (int k = 1; k < r; ++k) {
    BigradedForm f = dW_theta_power(spec, k);
    bool ok = !f.is_zero() && dRham0_class(spec, f).nonzero_class();
    rep.checks.push_back(make_flag("dW_theta_" + std::to_string(k) + "_nonzero_class", ok,
                                   "class at p = " + std::to_string(2 * k + 1)));
  }
  rep.finalize();
  return rep;
}

// ------------------------------------------------------------------ geometry

namespace {

using geo::CVec;
using geo::cplx;

struct SampleOut {
  double slice_res = 0, orth = 0, idem = 0, jcompat = 0, herm = 0, u1 = 0;
  bool posdef = true;
  double theta = 0, omega = 0, chart_dev = 0;
  bool chart_pair = false;
  double ident = 0, group = 0;
  std::vector<double> scaling;  // per configured t
  bool k_ok = true;
  double cross = 0, hol_min = 0, hol_gap = 0;
  double a_excess = 0, a_ratio_bound = 0, shape_a = 0;
  bool fd_done = false, fd_refused = false;
  double fd_rel = 0;
  double k_scale = 0, k_bound = 0;
  bool a_decay = true;
};

CVec axpy(const CVec& a, double s, const CVec& b) {
  CVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + s * b[i];
  return c;
}

double dist(const CVec& a, const CVec& b) { return geo::norm(axpy(a, -1.0, b)); }

CVec rotate(const CVec& v, double th) {
  CVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = std::polar(1.0, th) * v[i];
  return w;
}

constexpr int kFdSamples = 24;
const std::vector<double> kGroupT{0.5, 2.0, 3.0};
const std::vector<double> kDecayT{1.0, 2.0, 4.0, 8.0};

SampleOut evaluate_sample(const geo::Slice& S, const RunConfig& cfg, std::uint64_t i) {
  using namespace geo;
  Sample s = draw_sample(S, cfg.seed, i, cfg.rho);
  const CVec& z = s.z;
  SampleOut o;
  o.slice_res = std::abs(F_value(S, z) - 1);
  CVec g = grad_F(S, z), jg = J(g);
  double ng = norm(g);

  for (const CVec* w : {&s.u, &s.v}) {
    CVec h = horizontal(S, z, *w);
    o.orth = std::max({o.orth, std::abs(re_inner(h, g)) / ng, std::abs(re_inner(h, jg)) / ng});
    o.idem = std::max(o.idem, dist(horizontal(S, z, h), h));
    o.jcompat = std::max(o.jcompat, dist(horizontal(S, z, J(*w)), J(h)));
    if (norm(h) > 0 && !(metric(S, z, *w, *w) > 0)) o.posdef = false;
  }
  double guv = metric(S, z, s.u, s.v);
  o.herm = std::abs(metric(S, z, J(s.u), J(s.v)) - guv);
  double th = 0.7 + 0.1 * static_cast<double>(i % 7);
  o.u1 = std::abs(metric(S, rotate(z, th), rotate(s.u, th), rotate(s.v, th)) - guv);

  int j = default_chart(S, z);
  o.theta = theta_norm(S, z, j);
  o.omega = omega_norm(S, z, j);
  // second chart: next largest |x_k|
  int j2 = -1;
  for (int k = 0; k < S.n; ++k)
    if (k != j && (j2 < 0 || std::abs(z[k]) > std::abs(z[j2]))) j2 = k;
  if (j2 >= 0 && std::abs(z[j2]) > 1e-3) {
    o.chart_pair = true;
    o.chart_dev = std::abs(theta_norm(S, z, j2) - o.theta);
  }

  o.ident = dist(homothety(S, 1.0, z, {}).z, z);
  for (double t : kGroupT)
    for (double u : kGroupT) {
      CVec a = homothety(S, t, homothety(S, u, z, {}).z, {}).z;
      o.group = std::max(o.group, dist(a, homothety(S, t * u, z, {}).z));
    }
  double nu = norm(horizontal(S, z, s.u)), nv = norm(horizontal(S, z, s.v));
  for (double t : cfg.homotheties) {
    Transported tr = homothety(S, t, z, {s.u, s.v});
    double dev = 0;
    const CVec* orig[2] = {&s.u, &s.v};
    double scale = t * t * nu * nv;
    for (int a = 0; a < 2; ++a)
      for (int b = a; b < 2; ++b) {
        double before = metric(S, z, *orig[a], *orig[b]);
        double after = metric(S, tr.z, tr.vecs[a], tr.vecs[b]);
        dev = std::max(dev, std::abs(after - t * t * before) / scale);
      }
    o.scaling.push_back(dev);
  }

  KTest kt = compact_K_test(S, z);
  if (!kt.inK) {
    CVec back = gauge_homothety(S, 1.0 / kt.t_exit, gauge_unit_x(S, z));
    double m = 0;
    for (int k = 0; k < S.r; ++k) m += std::norm(back[S.n + k]);
    o.k_ok = kt.t_exit > 1 && m <= 1 + 1e-12;
  }

  Curvature c = sectional_curvature(S, z, s.u, s.v);
  o.cross = std::abs(c.K - c.K_path2) / std::max(1.0, std::abs(c.K));
  Holomorphic hu = holomorphic_curvature(S, z, s.u), hv = holomorphic_curvature(S, z, s.v);
  o.hol_min = std::min(hu.K_uJu, hv.K_uJu);
  o.hol_gap = std::max(std::abs(hu.K_uJu - hu.H_stated), std::abs(hv.K_uJu - hv.H_stated));

  CVec uh = horizontal(S, z, s.u), vh = horizontal(S, z, s.v);
  double bound = S.dmax * nu * nv / ng;
  double an = norm(a_tensor(S, z, uh, vh));
  o.a_excess = an - bound;
  o.a_ratio_bound = an / bound;
  o.shape_a = std::abs(std::abs(shape_pairing(S, z, uh, vh)) - norm(a_tensor(S, z, uh, J(vh))));

  if (i < static_cast<std::uint64_t>(kFdSamples)) {
    try {
      FDCurvature f = curvature_fd(S, z, j, s.u, s.v);
      o.fd_done = true;
      o.fd_rel = std::abs(f.K - c.K) / std::max(std::abs(c.K), 1e-300);
    } catch (const std::domain_error&) {
      o.fd_refused = true;
    }
  }

  auto rows = asymptotic_curvature_probe(S, z, s.u, s.v, kDecayT);
  double k1 = std::abs(rows[0].K);
  for (const auto& row : rows) {
    o.k_scale = std::max(o.k_scale, std::abs(row.K_t2 - k1) / k1);
    o.k_bound = std::max(o.k_bound, std::abs(row.K) - k1 / (row.t * row.t) * (1 + 1e-3));
  }
  o.a_decay = rows.back().a_ratio < rows.front().a_ratio;
  return o;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

Report geometry_report(const ModelSpec& spec, const RunConfig& cfg_in) {
  RunConfig cfg = resolve_config(cfg_in, spec);
  if (!spec.smooth_chart) throw InputError("geometry needs all weights w_j = 1 (smooth-chart flag)");
  geo::Slice S = geo::make_slice(spec);
  Report rep;
  rep.doc["report"] = "geometry";
  rep.doc["config"] = config_json(cfg);
  rep.doc["model"] = model_json(spec);

  const long N = cfg.samples;
  std::vector<SampleOut> out(N);
#pragma omp parallel for schedule(dynamic, 1) if (cfg.parallel)
  for (long i = 0; i < N; ++i) out[i] = evaluate_sample(S, cfg, static_cast<std::uint64_t>(i));

  // Serial merge in sample order.
  auto maxof = [&](auto field) {
    double m = 0;
    for (const auto& o : out) {
      double v = field(o);
      m = std::isnan(v) || std::isnan(m) ? std::nan("") : std::max(m, v);
    }
    return m;
  };
  auto minof = [&](auto field) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& o : out) m = std::min(m, field(o));
    return m;
  };
  auto all = [&](auto pred) { return std::all_of(out.begin(), out.end(), pred); };

  auto& C = rep.checks;
  C.push_back(make_check("slice_residual", N, maxof([](auto& o) { return o.slice_res; }), 1e-12));
  C.push_back(make_check("projection_orthogonality", N, maxof([](auto& o) { return o.orth; }), 1e-12));
  C.push_back(make_check("projection_idempotence", N, maxof([](auto& o) { return o.idem; }), 1e-12));
  C.push_back(make_check("projection_J_compatibility", N, maxof([](auto& o) { return o.jcompat; }), 1e-12));
  C.push_back(make_check("metric_hermitian", N, maxof([](auto& o) { return o.herm; }), 1e-12));
  C.push_back(make_flag("metric_positive_on_horizontal", all([](auto& o) { return o.posdef; })));
  C.push_back(make_check("metric_U1_invariance", N, maxof([](auto& o) { return o.u1; }), 1e-12));

  if (spec.calabi_yau) {
    C.push_back(make_check("volume_theta_equals_2", N, maxof([](auto& o) { return std::abs(o.theta - 2); }), 1e-9,
                           "observed |Theta| in [" + fmt(minof([](auto& o) { return o.theta; })) + ", " +
                               fmt(maxof([](auto& o) { return o.theta; })) + "]"));
    C.push_back(make_check("volume_omega_equals_2", N, maxof([](auto& o) { return std::abs(o.omega - 2); }), 1e-9,
                           "observed |Omega| in [" + fmt(minof([](auto& o) { return o.omega; })) + ", " +
                               fmt(maxof([](auto& o) { return o.omega; })) + "]"));
    long pairs = std::count_if(out.begin(), out.end(), [](auto& o) { return o.chart_pair; });
    C.push_back(make_check("volume_chart_independence", pairs, maxof([](auto& o) { return o.chart_dev; }), 1e-10));
  } else {
    C.push_back(skipped("volume_theta_equals_2", "Calabi-Yau flag is false"));
  }

  C.push_back(make_check("homothety_identity", N, maxof([](auto& o) { return o.ident; }), 1e-12));
  C.push_back(make_check("homothety_group_law", N, maxof([](auto& o) { return o.group; }), 1e-10,
                         "t, s in {0.5, 2, 3}"));
  for (std::size_t k = 0; k < cfg.homotheties.size(); ++k) {
    double t = cfg.homotheties[k];
    C.push_back(make_check("homothety_metric_scaling_t=" + fmt(t), N, maxof([&](auto& o) { return o.scaling[k]; }),
                           1e-8, "relative to t^2 |u^h||v^h|"));
  }
  C.push_back(make_flag("compact_K_exit", all([](auto& o) { return o.k_ok; })));

  C.push_back(make_check("curvature_cross_path", N, maxof([](auto& o) { return o.cross; }), 1e-10));
  double hol_min = 0;
  for (const auto& o : out) hol_min = std::min(hol_min, o.hol_min);
  C.push_back(make_check("holomorphic_curvature_nonnegative", N, -hol_min, 1e-12, "max of -K(u, Ju)"));
  C.push_back(make_check("A_tensor_bound", N, positive_part(maxof([](auto& o) { return o.a_excess; })), 1e-12,
                         "worst |A| / bound = " + fmt(maxof([](auto& o) { return o.a_ratio_bound; }))));
  C.push_back(make_check("shape_A_consistency", N, maxof([](auto& o) { return o.shape_a; }), 1e-12));

  long fd_n = std::count_if(out.begin(), out.end(), [](auto& o) { return o.fd_done; });
  long fd_ref = std::count_if(out.begin(), out.end(), [](auto& o) { return o.fd_refused; });
  Check fd = make_check("curvature_vs_finite_difference", fd_n, maxof([](auto& o) { return o.fd_done ? o.fd_rel : 0.0; }),
                        1e-3, std::to_string(fd_ref) + " ill-conditioned samples refused");
  if (fd_n < 20 && N >= kFdSamples) {
    fd.pass = false;
    fd.status = "fail";
    fd.note += "; fewer than 20 well-conditioned samples";
  }
  C.push_back(fd);
  C.push_back(make_check("curvature_scaling_t2", N, maxof([](auto& o) { return o.k_scale; }), 1e-3,
                         "| |K(Phi_t)| t^2 - |K| | / |K|, t in {1, 2, 4, 8}"));
  C.push_back(make_check("curvature_decay_bound", N, positive_part(maxof([](auto& o) { return o.k_bound; })), 0,
                         "|K(Phi_t)| <= |K| t^-2 (1 + 1e-3)"));
  C.push_back(make_flag("A_ratio_decay", all([](auto& o) { return o.a_decay; }), "A-ratio at t = 8 below t = 1"));
  C.push_back(info("holomorphic_normalization_gap", N, maxof([](auto& o) { return o.hol_gap; }),
                   "max |K(u, Ju) - |v[u,Ju]|^2 / (2|u|^2)|; both normalizations recorded, not resolved"));

  // Ellipticity along Phi_t through the first sample point.
  if (N > 0) {
    geo::Sample s0 = geo::draw_sample(S, cfg.seed, 0, cfg.rho);
    std::vector<double> ts;
    for (int t = 1; t <= 32; ++t) ts.push_back(t);
    geo::EllipticityReport er = geo::ellipticity_probe(spec, s0.z, ts, 2);
    Json ej;
    ej["k"] = er.k;
    ej["fitted_c"] = er.fitted_c;
    Json rows = Json::array();
    for (const auto& r : er.rows)
      rows.push_back({{"t", r.t}, {"grad", r.grad}, {"dk", r.dk}, {"ratio", r.ratio}, {"x_bound", r.x_bound}});
    ej["rows"] = rows;
    rep.doc["ellipticity"] = ej;
    if (er.trivial)
      C.push_back(make_flag("ellipticity_decay_k2", true, "k above total degree"));
    else if (!spec.elliptic)
      C.push_back(skipped("ellipticity_decay_k2", "ellipticity flag is false"));
    else
      C.push_back(make_flag("ellipticity_decay_k2", er.decreasing, "ratio |D^2 W| / (|grad W| + 1)^2, t = 1..32"));
    C.push_back(make_check("gradient_symbolic_vs_fd", static_cast<long>(er.rows.size()), er.grad_fd_dev, 1e-8));
    C.push_back(info("coordinate_bound_constant", static_cast<long>(er.rows.size()), er.fitted_c,
                     "max_j |x_j| / (|grad W| + 1)^(1/d_min)"));
  }
  rep.finalize();
  return rep;
}

// --------------------------------------------------------------------- toric

namespace {

std::string int_text(const Integer& z) { return z.get_str(); }

Json ivec_json(const toric::IVec& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(z.fits_slong_p() ? Json(z.get_si()) : Json(int_text(z)));
  return a;
}

Json fan_json(const toric::Fan& f) {
  Json j;
  j["dim"] = f.dim;
  Json g = Json::array();
  for (std::size_t i = 0; i < f.gens.size(); ++i)
    g.push_back({{"name", f.names[i]}, {"vector", ivec_json(f.gens[i])}, {"ray", ivec_json(f.ray(static_cast<int>(i)))}});
  j["generators"] = g;
  Json cones = Json::array();
  for (const auto& c : f.cones) {
    Json cj = Json::array();
    for (int i : c) cj.push_back(f.names[i]);
    cones.push_back(cj);
  }
  j["maximal_cones"] = cones;
  toric::ClassGroup cg = toric::class_group(f);
  Json cgj;
  cgj["free_rank"] = cg.free_rank;
  Json tor = Json::array();
  for (const auto& t : cg.torsion) tor.push_back(int_text(t));
  cgj["torsion"] = tor;
  Json deg = Json::array();
  for (const auto& d : cg.degrees) deg.push_back(ivec_json(d));
  cgj["degrees"] = deg;
  cgj["rank_deficit"] = cg.rank_deficit;
  j["class_group"] = cgj;
  toric::Irrelevant ir = toric::irrelevant_data(f);
  j["irrelevant_generators"] = ir.generator_text;
  j["exceptional_set"] = ir.component_text;
  toric::FanValidity fv = toric::check_fan(f);
  j["valid"] = fv.ok();
  return j;
}

// Expected irrelevant generators of the blow-up fan: x_j p_k.
std::vector<std::string> expected_irrelevant(int n, int r) {
  std::vector<std::string> out;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= r; ++k) out.push_back("x" + std::to_string(j) + "*p" + std::to_string(k));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void append_toric_checks(Report& rep, const std::vector<int>& w, const std::vector<int>& d, const std::string& prefix,
                         Json& section) {
  using namespace toric;
  int n = static_cast<int>(w.size()), r = static_cast<int>(d.size());
  BlowupFans F = build_fans(w, d);
  section["tilde"] = fan_json(F.tilde);
  section["cy"] = fan_json(F.cy);
  section["lg"] = fan_json(F.lg);
  section["u0"] = ivec_json(F.u0);
  auto& C = rep.checks;
  C.push_back(make_flag(prefix + "fans_valid", check_fan(F.tilde).ok() && check_fan(F.cy).ok() && check_fan(F.lg).ok()));
  C.push_back(make_flag(prefix + "tilde_cone_count", static_cast<int>(F.tilde.cones.size()) == n * r,
                        std::to_string(F.tilde.cones.size()) + " maximal cones"));
  C.push_back(make_flag(prefix + "star_CY_equals_tilde", fan_equal(star_subdivision(F.cy, F.u0, "z"), F.tilde)));
  C.push_back(make_flag(prefix + "star_LG_equals_tilde", fan_equal(star_subdivision(F.lg, F.u0, "z"), F.tilde)));
  ClassGroup cg = class_group(F.tilde);
  C.push_back(make_flag(prefix + "class_group_free_rank_2", cg.free_rank == 2 && cg.torsion.empty() && cg.rank_deficit == 0));
  DegreeCheck dc = degree_check(F);
  C.push_back(make_flag(prefix + "degrees_x_w_p_d_z_minus1_minus1", dc.ok()));
  Irrelevant ir = irrelevant_data(F.tilde);
  std::vector<std::string> got = ir.generator_text;
  std::sort(got.begin(), got.end());
  C.push_back(make_flag(prefix + "irrelevant_generators_xp", got == expected_irrelevant(n, r)));
  Irrelevant il = irrelevant_data(F.lg);
  bool no_x = true;
  for (const auto& gens : il.generators)
    for (int g : gens)
      if (g < n) no_x = false;
  C.push_back(make_flag(prefix + "LG_irrelevant_without_x", no_x));
  int gd = 0;
  for (int x : d) gd = std::gcd(gd, x);
  if (gd == 1) {
    BlowupFans E = build_fans_explicit(w, d);
    bool ok = lattice_isomorphic(E.tilde, F.tilde) && fan_equal(star_subdivision(E.cy, E.u0, "z"), E.tilde) &&
              fan_equal(star_subdivision(E.lg, E.u0, "z"), E.tilde);
    C.push_back(make_flag(prefix + "explicit_coordinates_agree", ok, "N_x x N_p x Z with Bezout coefficients"));
  }
  C.push_back(make_flag(prefix + "weighted_projective_class_rank_1", class_group(weighted_projective_fan(w)).free_rank == 1));
}

Report toric_report(const ModelSpec& spec, const RunConfig& cfg_in) {
  RunConfig cfg = resolve_config(cfg_in, spec);
  if (!spec.calabi_yau) throw InputError("toric needs the Calabi-Yau condition sum d = sum w");
  Report rep;
  rep.doc["report"] = "toric";
  rep.doc["config"] = config_json(cfg);
  rep.doc["model"] = model_json(spec);
  Json sec;
  append_toric_checks(rep, spec.weights, spec.degrees, "", sec);
  rep.doc["fans"] = sec;
  rep.finalize();
  return rep;
}

}  // namespace lgkit
