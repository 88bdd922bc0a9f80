#include "doctest.h"
#include "lgkit/algebra.hpp"
#include "lgkit/cohomology.hpp"
#include "oracles.hpp"

using namespace lgkit;

namespace {

// dim R(W)_{0,(k)} by a dense naive elimination: the ideal in bidegree (0, k)
// is spanned by generator * monomial of complementary bidegree.
long oracle_jacobian_dim(const ModelSpec& s, int k) {
  std::vector<Monomial> target = enumerate_monomials(s, 0, k);
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < target.size(); ++i) idx[term_key(target[i])] = static_cast<int>(i);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : jacobian_generators(s)) {
    Bidegree bg = bigrade(g.terms.begin()->first, s);
    if (k - bg.second < 0) continue;
    for (const auto& m : enumerate_monomials(s, -bg.first, k - bg.second)) {
      std::vector<Rational> row(target.size(), 0);
      for (const auto& [mm, c] : g.terms) row[idx.at(term_key(monomial_mul(mm, m)))] += c;
      rows.push_back(row);
    }
  }
  return static_cast<long>(target.size()) - oracle::naive_rank(rows);
}

std::map<std::vector<int>, long> entries(const CohomologyTable& t) { return t.as_map(); }

}  // namespace

TEST_CASE("Jacobian ring of the Fermat cubic") {
  ModelSpec c = fermat_cubic();
  JacobianReport J = jacobian_ring_charge0(c, 12);
  CHECK(J.total == 2);
  REQUIRE(J.dims.size() >= 3);
  CHECK(J.dims[0] == 1);
  CHECK(J.dims[1] == 1);
  CHECK(J.dims[2] == 0);
  CHECK(J.stabilized);
  for (int k = 0; k <= 4; ++k) {
    CHECK(jacobian_dimension_at(c, k) == oracle_jacobian_dim(c, k));
    CHECK(J.dims[k] == oracle_jacobian_dim(c, k));
  }
  CHECK_THROWS_AS(jacobian_ring_charge0(c, 0), InputError);
}

TEST_CASE("Jacobian ring of the quadric pair") {
  ModelSpec q = quadric_pair();
  JacobianReport J = jacobian_ring_charge0(q, 8);
  CHECK(J.total == 2);
  for (int k = 0; k <= 3; ++k) CHECK(J.dims[k] == oracle_jacobian_dim(q, k));
}

TEST_CASE("Jacobian serial and parallel agree") {
  ExecPolicy s;
  s.parallel = false;
  ModelSpec q = quadric_pair();
  CHECK(jacobian_ring_charge0(q, 8, s).dims == jacobian_ring_charge0(q, 8).dims);
}

TEST_CASE("Hodge oracle") {
  HodgeDiamond c = hodge_oracle(3, 1, {3});
  CHECK(c.h[1][0] == 1);
  CHECK(c.h[0][1] == 1);
  HodgeDiamond q = hodge_oracle(5, 1, {5});
  CHECK(q.h[2][1] == 101);
  CHECK(q.h[1][1] == 1);
  CHECK(q.betti(3) == 204);
  CHECK(hodge_oracle(4, 2, {2, 2}).betti(1) == 2);
  // K3 quartic and a plane
  HodgeDiamond k3 = hodge_oracle(4, 1, {4});
  CHECK(k3.h[1][1] == 20);
  CHECK(k3.h[2][0] == 1);
  HodgeDiamond plane = hodge_oracle(4, 1, {1});
  CHECK(plane.betti(2) == 1);
  CHECK(plane.betti(1) == 0);
  // Hodge symmetry
  HodgeDiamond s = hodge_oracle(6, 2, {2, 3});
  for (int p = 0; p <= s.dim; ++p)
    for (int qq = 0; qq <= s.dim; ++qq) CHECK(s.h[p][qq] == s.h[qq][p]);
  CHECK_THROWS_AS(hodge_oracle(2, 2, {1, 1}), InputError);
}

TEST_CASE("tables from the formulas") {
  ModelSpec five = fermat_quintic();
  CHECK(entries(cohomology_of_V(five, 204)) ==
        std::map<std::vector<int>, long>{{{0}, 1}, {{2}, 1}, {{3}, 204}, {{4}, 1}, {{6}, 1}});
  CHECK(entries(pv_table(five, 204)) ==
        std::map<std::vector<int>, long>{{{-3}, 1}, {{-1}, 1}, {{0}, 204}, {{1}, 1}, {{3}, 1}});
  ModelSpec q = quadric_pair();
  CHECK(entries(cohomology_of_V(q, 2)) == std::map<std::vector<int>, long>{{{0}, 1}, {{1}, 2}, {{2}, 1}});
  CHECK(entries(pv_table(q, 2)) == std::map<std::vector<int>, long>{{{-1}, 1}, {{0}, 2}, {{1}, 1}});
  CHECK(entries(pv_table(fermat_cubic(), 2)) == std::map<std::vector<int>, long>{{{-1}, 1}, {{0}, 2}, {{1}, 1}});
  SpectralPages P = spectral_pages(q, 2);
  CHECK(entries(P.E2) == std::map<std::vector<int>, long>{{{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1}, {{3, 0}, 1}, {{5, 0}, 2}});
  CHECK(entries(P.Einf) == std::map<std::vector<int>, long>{{{2, 2}, 1}, {{3, 3}, 1}, {{5, 0}, 2}});
  REQUIRE(P.isomorphisms.size() == 1);
  CHECK(P.isomorphisms[0].first == std::vector<int>{1, 1});
  CHECK(P.isomorphisms[0].second == std::vector<int>{3, 0});
  SpectralPages Q = spectral_pages(five, 204);
  CHECK(entries(Q.E2) == entries(Q.Einf));
  CHECK(entries(Q.E2) == std::map<std::vector<int>, long>{{{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1}, {{4, 4}, 1}, {{5, 0}, 204}});
  CHECK_THROWS_AS(pv_table(q, -1), InputError);
}

TEST_CASE("total dimension identity across many shapes") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}, {5, 1}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
    ModelSpec s;
    s.n = n;
    s.r = r;
    s.degrees.assign(r, 1);
    s.weights.assign(n, 1);
    for (long dimR : {0L, 2L, 7L}) {
      long e = spectral_pages(s, dimR).Einf.total();
      CHECK(e == cohomology_of_V(s, dimR).total());
      CHECK(pv_table(s, dimR).total() == e);
    }
  }
}

TEST_CASE("Koszul cohomology of the Fermat cubic") {
  ModelSpec c = fermat_cubic();
  ExecPolicy pol;
  pol.verify_square = true;
  ComplexResult K = koszul_cohomology(c, 12, pol);
  CHECK(K.stabilized);
  CHECK(K.square_checked);
  CHECK(K.by_degree[1] == 0);
  CHECK(K.by_degree[4] == 2);
  for (const auto& [p, d] : K.by_degree)
    if (p != 2 && p != 3 && p != 4) CHECK(d == 0);
  for (const auto& s : K.strands)
    for (std::size_t i = 0; i < s.degrees.size(); ++i) {
      long prev = i == 0 ? 0 : s.ranks[i - 1];
      CHECK(s.coh[i] == s.dims[i] - s.ranks[i] - prev);
      CHECK(s.coh[i] >= 0);
    }
  CHECK(koszul_class(c, koszul_distinguished_class(c)).nonzero_class());
}

TEST_CASE("strand complexes: serial and parallel agree") {
  ModelSpec q = quadric_pair();
  ExecPolicy ser, par;
  ser.parallel = false;
  ComplexResult a = koszul_cohomology(q, 8, ser), b = koszul_cohomology(q, 8, par);
  REQUIRE(a.strands.size() == b.strands.size());
  for (std::size_t i = 0; i < a.strands.size(); ++i) {
    CHECK(a.strands[i].dims == b.strands[i].dims);
    CHECK(a.strands[i].ranks == b.strands[i].ranks);
  }
  CHECK(a.by_degree == b.by_degree);
}

TEST_CASE("block rank cross-check against the dense route") {
  ModelSpec c = fermat_cubic();
  BigradedForm dW = exterior_d(superpotential(c));
  for (auto [p, k] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 1}, {2, 2}}) {
    BidegreeBasis src = enumerate_bidegree(c, 0, k, p), dst = enumerate_bidegree(c, 0, k + 1, p + 1);
    std::vector<std::vector<Integer>> M;
    for (const auto& t : src.elems) {
      SparseQVec q = coordinates(wedge(dW, BigradedForm::basis(t)), dst);
      std::vector<Integer> row(dst.elems.size(), 0);
      for (const auto& [col, v] : q) {
        REQUIRE(v.get_den() == 1);
        row[col] = v.get_num();
      }
      M.push_back(row);
    }
    CHECK(koszul_block_rank(c, p, k) == dense_rank_bareiss(M));
  }
}

TEST_CASE("H0(Omega^p) via the Euler kernel") {
  ModelSpec c = fermat_cubic();
  CHECK(h0_omega(c, 0, 1).basis.size() == enumerate_bidegree(c, 0, 1, 0).elems.size());
  CHECK(h0_omega(c, 4, 1).basis.empty());
  CHECK(h0_omega(c, 4, 2).basis.empty());
  long ker = static_cast<long>(h0_omega(c, 1, 1).basis.size());
  CHECK(ker + contraction_rank(c, 1, 1) == 28);
  for (const auto& f : h0_omega(c, 2, 1).basis) CHECK(euler_contract(f, c).is_zero());
}

TEST_CASE("dRham0 cohomology reproduces the q = 0 row") {
  ModelSpec c = fermat_cubic();
  ComplexResult D = dRham0_cohomology(c, 12);
  CHECK(D.stabilized);
  for (int p = 0; p <= 2; ++p) CHECK(D.by_degree[p] == 0);
  CHECK(D.by_degree[3] == 2);
  ModelSpec q = quadric_pair();
  ComplexResult Dq = dRham0_cohomology(q, 8);
  std::map<int, long> nz;
  for (const auto& [p, d] : Dq.by_degree)
    if (d) nz[p] = d;
  CHECK(nz == std::map<int, long>{{3, 1}, {5, 2}});
}

TEST_CASE("theta classes") {
  ModelSpec q = quadric_pair();
  CHECK(dW_theta_power(q, 2).is_zero());
  BigradedForm f = dW_theta_power(q, 1);
  ClassCheck cc = dRham0_class(q, f);
  CHECK(cc.homogeneous);
  CHECK(cc.closed);
  CHECK(cc.in_kernel);
  CHECK_FALSE(cc.exact);
  CHECK(cc.degree == 3);
  CHECK(dW_theta_power(fermat_cubic(), 1).is_zero());
}
