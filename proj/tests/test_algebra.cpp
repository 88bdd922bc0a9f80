#include <random>

#include "doctest.h"
#include "lgkit/algebra.hpp"
#include "lgkit/cohomology.hpp"
#include "oracles.hpp"

using namespace lgkit;

namespace {

BigradedForm random_form(const ModelSpec& spec, std::mt19937& rng, int degree, int terms) {
  int nv = spec.n + spec.r;
  std::uniform_int_distribution<int> ex(0, 2), coef(-3, 3), var(0, nv - 1);
  BigradedForm f;
  for (int t = 0; t < terms; ++t) {
    FormTerm ft;
    ft.m.x.resize(spec.n);
    ft.m.p.resize(spec.r);
    for (auto& e : ft.m.x) e = ex(rng);
    for (auto& e : ft.m.p) e = ex(rng) / 2;
    std::uint32_t mask = 0;
    while (__builtin_popcount(mask) < degree) mask |= 1u << var(rng);
    ft.I = mask & ((1u << spec.n) - 1);
    ft.J = mask >> spec.n;
    int c = coef(rng);
    Rational q(c, 1 + t % 2);
    q.canonicalize();
    f.add(ft, q);
  }
  return f;
}

Rational sign_of(int deg) { return deg % 2 ? Rational(-1) : Rational(1); }

// Count of (monomial, I, J) with the given bigrade and form degree, by exhaustive search.
long brute_count(const ModelSpec& spec, int charge, int weight, int degree, int xmax) {
  long count = 0;
  int n = spec.n, r = spec.r;
  std::vector<int> xe(n, 0), pe(r, 0);
  std::function<void(int)> px = [&](int j) {
    if (j == n) {
      std::function<void(int)> pp = [&](int k) {
        if (k == r) {
          for (std::uint32_t I = 0; I < (1u << n); ++I)
            for (std::uint32_t J = 0; J < (1u << r); ++J) {
              if (__builtin_popcount(I) + __builtin_popcount(J) != degree) continue;
              int ch = 0, wt = 0;
              for (int a = 0; a < n; ++a) ch += spec.weights[a] * (xe[a] + ((I >> a) & 1));
              for (int b = 0; b < r; ++b) {
                ch -= spec.degrees[b] * (pe[b] + ((J >> b) & 1));
                wt += pe[b] + ((J >> b) & 1);
              }
              if (ch == charge && wt == weight) ++count;
            }
          return;
        }
        for (int e = 0; e <= weight; ++e) {
          pe[k] = e;
          pp(k + 1);
        }
      };
      pp(0);
      return;
    }
    for (int e = 0; e <= xmax; ++e) {
      xe[j] = e;
      px(j + 1);
    }
  };
  px(0);
  return count;
}

}  // namespace

TEST_CASE("bigrade examples") {
  ModelSpec c = fermat_cubic();
  CHECK(bigrade(Monomial{{2, 0, 0}, {1}}, c) == Bidegree{-1, 1});
  CHECK(bigrade(unit_monomial(c), c) == Bidegree{0, 0});
  ModelSpec q = quadric_pair();
  CHECK(bigrade(Monomial{{0, 0, 0, 0}, {1, 1}}, q) == Bidegree{-4, 2});
  CHECK_THROWS(bigrade(Monomial{{1, 0}, {1}}, c));
}

TEST_CASE("bigrade is additive on products") {
  ModelSpec q = quadric_pair();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ex(0, 3);
  for (int it = 0; it < 200; ++it) {
    Monomial a{{ex(rng), ex(rng), ex(rng), ex(rng)}, {ex(rng), ex(rng)}};
    Monomial b{{ex(rng), ex(rng), ex(rng), ex(rng)}, {ex(rng), ex(rng)}};
    auto ga = bigrade(a, q), gb = bigrade(b, q), gab = bigrade(monomial_mul(a, b), q);
    CHECK(gab.first == ga.first + gb.first);
    CHECK(gab.second == ga.second + gb.second);
  }
}

TEST_CASE("enumerate_bidegree counts match brute force") {
  ModelSpec c = fermat_cubic();
  CHECK(enumerate_bidegree(c, 0, 1, 0).elems.size() == 10);
  CHECK(enumerate_bidegree(c, 0, 0, 0).elems.size() == 1);
  CHECK(enumerate_bidegree(c, 0, 1, 1).elems.size() == 28);
  CHECK(brute_count(c, 0, 1, 1, 8) == 28);
  for (int k = 0; k <= 2; ++k)
    for (int p = 0; p <= 4; ++p)
      CHECK(static_cast<long>(enumerate_bidegree(c, 0, k, p).elems.size()) == brute_count(c, 0, k, p, 3 * k + 4));
  ModelSpec q = quadric_pair();
  for (int k = 0; k <= 2; ++k)
    for (int p : {0, 1, 3, 6})
      CHECK(static_cast<long>(enumerate_bidegree(q, 0, k, p).elems.size()) == brute_count(q, 0, k, p, 2 * 2 * k + 6));
  // stars and bars: (c=0, k=1, p=0) on the cubic is C(5,2)
  CHECK(oracle::compositions(3, 3) == 10);
}

TEST_CASE("enumeration is sorted, duplicate free and homogeneous") {
  ModelSpec q = quadric_pair();
  BidegreeBasis b = enumerate_bidegree(q, 0, 2, 3);
  for (std::size_t i = 1; i < b.elems.size(); ++i) CHECK(b.elems[i - 1] < b.elems[i]);
  for (const auto& t : b.elems) {
    CHECK(bigrade(t, q) == Bidegree{0, 2});
    CHECK(form_degree(t) == 3);
  }
}

TEST_CASE("wedge basics") {
  ModelSpec c = fermat_cubic();
  BigradedForm dW = exterior_d(superpotential(c));
  CHECK(wedge(dW, dW).is_zero());
  CHECK((wedge(dx(c, 0), dx(c, 1)) + wedge(dx(c, 1), dx(c, 0))).is_zero());
  ModelSpec q = quadric_pair();
  BigradedForm dWq = exterior_d(superpotential(q));
  BigradedForm th = theta_form(q);
  CHECK(wedge(dWq, wedge(th, th)).is_zero());
  CHECK_FALSE(wedge(dWq, th).is_zero());
}

TEST_CASE("wedge is associative and graded commutative") {
  ModelSpec q = quadric_pair();
  std::mt19937 rng(11);
  for (int it = 0; it < 60; ++it) {
    int da = it % 4, db = (it / 4) % 4, dc = (it / 16) % 3;
    BigradedForm a = random_form(q, rng, da, 3), b = random_form(q, rng, db, 3), c = random_form(q, rng, dc, 2);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(a, b) == wedge(b, a).scaled(sign_of(da * db)));
  }
}

TEST_CASE("Euler contraction") {
  ModelSpec c = fermat_cubic();
  CHECK(euler_contract(dx(c, 0), c) == BigradedForm::from_poly(x_var(c, 0)));
  CHECK(euler_contract(dp(c, 0), c) == BigradedForm::from_poly(p_var(c, 0).scaled(-3)));
  CHECK(euler_contract(euler_contract(wedge(dx(c, 0), dp(c, 0)), c), c).is_zero());
  // iota(df) = charge(f) f
  CHECK(euler_contract(exterior_d(superpotential(c)), c).is_zero());
  CHECK(euler_contract(exterior_d(model_poly(c, 0)), c) == BigradedForm::from_poly(model_poly(c, 0).scaled(3)));
}

TEST_CASE("Euler contraction is an odd derivation and squares to zero") {
  ModelSpec q = quadric_pair();
  std::mt19937 rng(5);
  for (int it = 0; it < 60; ++it) {
    int da = 1 + it % 3, db = it % 4;
    BigradedForm a = random_form(q, rng, da, 3), b = random_form(q, rng, db, 3);
    BigradedForm lhs = euler_contract(wedge(a, b), q);
    BigradedForm rhs = wedge(euler_contract(a, q), b) + wedge(a, euler_contract(b, q)).scaled(sign_of(da));
    CHECK(lhs == rhs);
    CHECK(euler_contract(euler_contract(a, q), q).is_zero());
  }
}

TEST_CASE("dW^ preserves charge and raises weight by one") {
  for (const ModelSpec& s : {fermat_cubic(), quadric_pair()}) {
    BigradedForm dW = exterior_d(superpotential(s));
    for (int k = 0; k <= 1; ++k)
      for (int p = 0; p <= s.n + s.r - 1; ++p)
        for (const auto& t : enumerate_bidegree(s, 0, k, p).elems) {
          BigradedForm img = wedge(dW, BigradedForm::basis(t));
          for (const auto& [u, cf] : img.terms) {
            CHECK(bigrade(u, s) == Bidegree{0, k + 1});
            CHECK(form_degree(u) == p + 1);
          }
        }
  }
}

TEST_CASE("Jacobian generators") {
  ModelSpec c = fermat_cubic();
  auto g = jacobian_generators(c);
  REQUIRE(g.size() == 4);
  for (int j = 0; j < 3; ++j) {
    Monomial m{{0, 0, 0}, {1}};
    m.x[j] = 2;
    CHECK(g[j] == BigradedPoly::monomial(m, 3));
  }
  CHECK(g[3] == model_poly(c, 0));
  ModelSpec q = quadric_pair();
  auto gq = jacobian_generators(q);
  REQUIRE(gq.size() == 6);
  for (int j = 0; j < 4; ++j) {
    Monomial m1{{0, 0, 0, 0}, {1, 0}}, m2{{0, 0, 0, 0}, {0, 1}};
    m1.x[j] = 1;
    m2.x[j] = 1;
    CHECK(gq[j] == BigradedPoly::monomial(m1, 2) + BigradedPoly::monomial(m2, 2 * (j + 1)));
  }
  for (int k = 0; k < 2; ++k) {
    for (const auto& [m, cf] : gq[4 + k].terms) CHECK(bigrade(m, q) == Bidegree{2, 0});
  }
}

TEST_CASE("linear_kernel examples") {
  ModelSpec c = fermat_cubic();
  BigradedForm x1 = BigradedForm::from_poly(x_var(c, 0));
  BidegreeBasis b = enumerate_bidegree(c, 1, 0, 0);
  KernelResult k = linear_kernel({x1, x1}, b);
  CHECK(k.rank == 1);
  CHECK(k.kernel.size() == 1);
  CHECK(linear_kernel({}, b).rank == 0);
  BigradedForm dW = exterior_d(superpotential(c));
  CHECK(linear_kernel({dW}, enumerate_bidegree(c, 0, 1, 1)).rank == 1);
}
