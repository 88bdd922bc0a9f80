#include <algorithm>
#include <unordered_map>

#include "lgkit/cohomology.hpp"

namespace lgkit {

std::vector<BigradedPoly> jacobian_generators(const ModelSpec& spec) {
  BigradedPoly W = superpotential(spec);
  std::vector<BigradedPoly> gens;
  for (int z = 0; z < spec.n + spec.r; ++z) gens.push_back(partial(W, z));
  return gens;
}

namespace {

// Generator scaled to integer coefficients, with its bigrade.
struct IntGen {
  std::vector<std::pair<Monomial, Integer>> terms;
  int charge = 0, weight = 0;
};

std::vector<IntGen> integer_generators(const ModelSpec& spec) {
  std::vector<IntGen> out;
  for (const auto& g : jacobian_generators(spec)) {
    if (g.is_zero()) continue;
    IntGen ig;
    Integer l = 1;
    for (const auto& [m, c] : g.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [m, c] : g.terms) ig.terms.emplace_back(m, Integer(c.get_num() * (l / c.get_den())));
    std::tie(ig.charge, ig.weight) = bigrade(g.terms.begin()->first, spec);
    out.push_back(std::move(ig));
  }
  return out;
}

}  // namespace

long jacobian_dimension_at(const ModelSpec& spec, int weight) {
  std::vector<Monomial> target = enumerate_monomials(spec, 0, weight);
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(term_key(target[i]), static_cast<int>(i));
  std::vector<SparseVec> rows;
  for (const IntGen& g : integer_generators(spec)) {
    for (const Monomial& mult : enumerate_monomials(spec, -g.charge, weight - g.weight)) {
      SparseVec row;
      for (const auto& [m, c] : g.terms) row.emplace_back(index.at(term_key(monomial_mul(m, mult))), c);
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
  }
  int ncols = static_cast<int>(target.size());
  return ncols - sparse_rank(std::move(rows), ncols);
}

JacobianReport jacobian_ring_charge0(const ModelSpec& spec, int cutoff, const ExecPolicy&) {
  if (cutoff < 1) throw InputError("weight cutoff must be at least 1");
  if (!spec.smooth_chart) throw InputError("R(W)_0 computation requires all weights w_j = 1");
  if (!spec.calabi_yau) throw InputError("R(W)_0 computation requires the Calabi-Yau condition");
  JacobianReport rep;
  rep.cutoff = cutoff;
  int window = stabilization_window(spec);
  for (int k = 0; k <= cutoff; ++k) {
    if (rep.first_zero >= 0) {
      // With unit weights every charge-0 monomial of weight k+1 is a product of
      // a weight-1 and a weight-k one, so a zero weight stays zero.
      if (k > rep.first_zero + window - 1) break;
      rep.dims.push_back(0);
      continue;
    }
    long d = jacobian_dimension_at(spec, k);
    rep.dims.push_back(d);
    rep.exact_through = k;
    if (d == 0) rep.first_zero = k;
  }
  rep.stabilized = rep.first_zero >= 0 && rep.first_zero + window - 1 <= cutoff;
  for (long d : rep.dims) rep.total += d;
  return rep;
}

Smoothness smoothness_probe(const ModelSpec& spec, int cutoff) {
  if (!spec.calabi_yau || !spec.smooth_chart)
    throw InputError("smoothness probe requires the Calabi-Yau condition and unit weights");
  int window = stabilization_window(spec);
  if (cutoff < window) return Smoothness::inconclusive;
  JacobianReport rep = jacobian_ring_charge0(spec, cutoff);
  if (rep.first_zero < 0) return Smoothness::not_smooth;
  return rep.stabilized ? Smoothness::likely_smooth : Smoothness::inconclusive;
}

}  // namespace lgkit
