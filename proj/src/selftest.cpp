#include <map>

#include "lgkit/reports.hpp"

namespace lgkit {

namespace {

std::map<std::vector<int>, long> finite(const CohomologyTable& t) {
  std::map<std::vector<int>, long> m;
  for (const auto& e : t.entries)
    if (e.dim >= 0) m[e.index] = e.dim;
  return m;
}

void worked_model(Report& rep, Json& section, const std::string& tag, const ModelSpec& spec, long dimR_expected,
                  const std::vector<long>& weights_expected, const std::map<std::vector<int>, long>& hpv_expected,
                  const std::map<std::vector<int>, long>& hv_expected, const std::map<int, long>& dr_expected,
                  const RunConfig& cfg) {
  ExecPolicy pol;
  pol.parallel = cfg.parallel;
  pol.max_block = cfg.max_block;
  int cutoff = 4 * spec.max_degree();
  JacobianReport J = jacobian_ring_charge0(spec, cutoff, pol);
  section["jacobian"] = jacobian_json(J);
  rep.checks.push_back(make_check(tag + "dimR", 1, std::abs(double(J.total - dimR_expected)), 0));
  std::vector<long> head(J.dims.begin(), J.dims.begin() + std::min(J.dims.size(), weights_expected.size()));
  rep.checks.push_back(make_flag(tag + "dimR_per_weight", head == weights_expected));
  CohomologyTable hpv = pv_table(spec, J.total), hv = cohomology_of_V(spec, J.total);
  section["HPV"] = table_json(hpv);
  section["HV"] = table_json(hv);
  rep.checks.push_back(make_flag(tag + "HPV", finite(hpv) == hpv_expected));
  rep.checks.push_back(make_flag(tag + "HV", finite(hv) == hv_expected));
  ComplexResult K = koszul_cohomology(spec, cutoff, pol);
  section["koszul"] = table_json(K.table());
  long bad = 0;
  for (const auto& [p, d] : K.by_degree)
    if (p != 2 * spec.r && p != spec.n + spec.r - 1 && p != spec.n + spec.r) bad += d;
  rep.checks.push_back(make_check(tag + "koszul_support", 1, double(bad), 0));
  rep.checks.push_back(make_flag(tag + "koszul_distinguished_class",
                                 koszul_class(spec, koszul_distinguished_class(spec)).nonzero_class()));
  ComplexResult D = dRham0_cohomology(spec, cutoff, pol);
  section["dRham0"] = table_json(D.table());
  std::map<int, long> got;
  for (const auto& [p, d] : D.by_degree)
    if (d) got[p] = d;
  rep.checks.push_back(make_flag(tag + "dRham0_row", got == dr_expected));
  rep.checks.push_back(make_flag(tag + "dW_theta_r_zero", dW_theta_power(spec, spec.r).is_zero()));
}

}  // namespace

Report selftest_report(const RunConfig& cfg) {
  Report rep;
  rep.doc["report"] = "selftest";
  rep.doc["config"] = config_json(cfg);

  Json cubic, pair, fans, hodge;
  worked_model(rep, cubic, "cubic_", fermat_cubic(), 2, {1, 1, 0}, {{{-1}, 1}, {{0}, 2}, {{1}, 1}},
               {{{0}, 1}, {{1}, 2}, {{2}, 1}}, {{3, 2}}, cfg);
  worked_model(rep, pair, "quadric_pair_", quadric_pair(), 2, {}, {{{-1}, 1}, {{0}, 2}, {{1}, 1}},
               {{{0}, 1}, {{1}, 2}, {{2}, 1}}, {{3, 1}, {5, 2}}, cfg);
  {
    ModelSpec qp = quadric_pair();
    BigradedForm f = dW_theta_power(qp, 1);
    rep.checks.push_back(make_flag("quadric_pair_dW_theta_1_class", !f.is_zero() && dRham0_class(qp, f).nonzero_class()));
  }
  rep.doc["fermat_cubic"] = cubic;
  rep.doc["quadric_pair"] = pair;

  append_toric_checks(rep, {1, 1}, {1, 1}, "fans_w11_d11_", fans);
  rep.doc["fans_w11_d11"] = fans;

  HodgeDiamond c = hodge_oracle(3, 1, {3}), q = hodge_oracle(5, 1, {5}), e = hodge_oracle(4, 2, {2, 2});
  hodge["cubic_h10"] = c.h[1][0];
  hodge["quintic_h21"] = q.h[2][1];
  hodge["quintic_h11"] = q.h[1][1];
  hodge["quintic_b3"] = q.betti(3);
  hodge["quadric_pair_b1"] = e.betti(1);
  rep.doc["hodge_oracle"] = hodge;
  rep.checks.push_back(make_flag("hodge_cubic", c.h[1][0] == 1 && c.h[0][1] == 1));
  rep.checks.push_back(make_flag("hodge_quintic", q.h[2][1] == 101 && q.h[1][1] == 1 && q.betti(3) == 204));
  rep.checks.push_back(make_flag("hodge_quadric_pair", e.betti(1) == 2));
  rep.finalize();
  return rep;
}

}  // namespace lgkit
