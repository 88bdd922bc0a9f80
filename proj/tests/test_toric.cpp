#include <random>

#include "doctest.h"
#include "lgkit/toric.hpp"

using namespace lgkit;
using namespace lgkit::toric;

namespace {

IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Fan make_fan(int dim, std::vector<IVec> gens, std::vector<std::vector<int>> cones) {
  Fan f;
  f.dim = dim;
  f.gens = std::move(gens);
  for (std::size_t i = 0; i < f.gens.size(); ++i) f.names.push_back("u" + std::to_string(i + 1));
  f.cones = std::move(cones);
  return f;
}

struct Case {
  std::vector<int> w, d;
};
const std::vector<Case> kCases{{{1, 1}, {1, 1}}, {{1, 1}, {2}}, {{1, 1, 1, 1}, {2, 2}}, {{1, 2}, {3}}};

}  // namespace

TEST_CASE("bezout") {
  auto b = bezout({2, 3});
  CHECK(b == std::vector<Integer>{-1, 1});
  CHECK_THROWS_AS(bezout({4, 6}), InputError);
  for (std::vector<int> w : {std::vector<int>{1, 1, 1}, {6, 10, 15}, {3, 5}, {7, 4, 9}}) {
    auto c = bezout(w);
    Integer s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += c[i] * w[i];
    CHECK(s == 1);
  }
}

TEST_CASE("Smith normal form properties") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> e(-6, 6), dim(1, 5);
  for (int it = 0; it < 200; ++it) {
    int r = dim(rng), c = dim(rng);
    IMat A(r, IVec(c));
    for (auto& row : A)
      for (auto& x : row) x = e(rng);
    SNF s = smith_normal_form(A);
    CHECK(mat_mul(mat_mul(s.U, A), s.V) == s.D);
    CHECK(mat_mul(s.U, unimodular_inverse(s.U)) == identity(r));
    CHECK(mat_mul(s.V, unimodular_inverse(s.V)) == identity(c));
    auto dg = s.diagonal();
    for (std::size_t i = 0; i < dg.size(); ++i) {
      CHECK(dg[i] >= 0);
      if (i + 1 < dg.size() && dg[i] != 0) CHECK(dg[i + 1] % dg[i] == 0);
      if (dg[i] == 0)
        for (std::size_t k = i; k < dg.size(); ++k) CHECK(dg[k] == 0);
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(s.D[i][j] == 0);
  }
  // 1 x 2 oracle: (1 2) has invariant factor 1
  SNF t = smith_normal_form({iv({1, 2})});
  CHECK(t.diagonal() == std::vector<Integer>{1});
}

TEST_CASE("weighted projective fans") {
  Fan p1 = weighted_projective_fan({1, 1});
  CHECK(p1.dim == 1);
  REQUIRE(p1.gens.size() == 2);
  CHECK(p1.gens[0][0] + p1.gens[1][0] == 0);
  CHECK(abs(p1.gens[0][0]) == 1);
  CHECK(p1.cones.size() == 2);
  Fan p2 = weighted_projective_fan({1, 1, 1});
  CHECK(p2.dim == 2);
  IVec sum = iv({0, 0});
  for (const auto& g : p2.gens)
    for (int k = 0; k < 2; ++k) sum[k] += g[k];
  CHECK(sum == iv({0, 0}));
  CHECK(check_fan(p2).ok());
  CHECK(fan_equal(p2, p2));
  CHECK(class_group(p2).free_rank == 1);
  CHECK(class_group(p2).torsion.empty());
  Fan w12 = weighted_projective_fan({1, 2});
  // image of e_1 is twice the negative of the image of e_2
  CHECK(w12.gens[0][0] == -2 * w12.gens[1][0]);
  for (std::vector<int> w : {std::vector<int>{1, 2}, {1, 1, 2}, {2, 3}, {1, 2, 3}, {1, 1, 1, 1}})
    CHECK(class_group(weighted_projective_fan(w)).free_rank == 1);
  CHECK_THROWS_AS(weighted_projective_fan({2, 4}), InputError);
  Irrelevant ir = irrelevant_data(p2);
  std::vector<std::string> gens = ir.generator_text;
  std::sort(gens.begin(), gens.end());
  CHECK(gens.size() == 3);
  CHECK(ir.components.size() == 1);
  CHECK(ir.components[0].size() == 3);
}

TEST_CASE("star subdivision of the plane cone") {
  Fan f = make_fan(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
  Fan g = star_subdivision(f, iv({1, 1}), "e");
  Fan expect = make_fan(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})}, {{0, 2}, {1, 2}});
  CHECK(fan_equal(g, expect));
  CHECK(check_fan(g).ok());
  CHECK_THROWS_AS(star_subdivision(f, iv({-1, 1}), "e"), InputError);
  CHECK_THROWS_AS(star_subdivision(f, iv({1, 0}), "e"), InputError);
  // subdividing along a boundary ray keeps untouched cones
  Fan h = make_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
  Fan k = star_subdivision(h, iv({1, 2}), "e");
  CHECK(k.cones.size() == 4);
  CHECK(check_fan(k).ok());
}

TEST_CASE("star subdivision preserves the support") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> e(-9, 9);
  for (const auto& c : kCases) {
    BlowupFans F = build_fans(c.w, c.d);
    for (const Fan* base : {&F.cy, &F.lg}) {
      Fan sub = star_subdivision(*base, F.u0, "z");
      for (int it = 0; it < 200; ++it) {
        IVec v(base->dim);
        for (auto& x : v) x = e(rng);
        CHECK(in_support(*base, v) == in_support(sub, v));
      }
    }
  }
}

TEST_CASE("blow-up fans") {
  for (const auto& c : kCases) {
    CAPTURE(c.w.size());
    BlowupFans F = build_fans(c.w, c.d);
    int n = static_cast<int>(c.w.size()), r = static_cast<int>(c.d.size());
    CHECK(F.tilde.gens.size() == static_cast<std::size_t>(n + r + 1));
    CHECK(F.tilde.cones.size() == static_cast<std::size_t>(n * r));
    CHECK(check_fan(F.tilde).ok());
    CHECK(check_fan(F.cy).ok());
    CHECK(check_fan(F.lg).ok());
    CHECK(fan_equal(star_subdivision(F.cy, F.u0, "z"), F.tilde));
    CHECK(fan_equal(star_subdivision(F.lg, F.u0, "z"), F.tilde));
    ClassGroup cg = class_group(F.tilde);
    CHECK(cg.free_rank == 2);
    CHECK(cg.torsion.empty());
    CHECK(degree_check(F).ok());
    CHECK(class_group(F.cy).free_rank == 1);
    CHECK(class_group(F.lg).free_rank == 1);
    Irrelevant ir = irrelevant_data(F.tilde);
    CHECK(ir.generator_text.size() == static_cast<std::size_t>(n * r));
    for (const auto& g : ir.generators) {
      REQUIRE(g.size() == 2);
      CHECK(g[0] < n);
      CHECK(g[1] >= n);
      CHECK(g[1] < n + r);
    }
    // exceptional set: {x = 0} and {p = 0}
    CHECK(ir.components.size() == 2);
    Irrelevant il = irrelevant_data(F.lg);
    for (const auto& g : il.generators)
      for (int i : g) CHECK(i >= n);
  }
}

TEST_CASE("explicit coordinates agree with the quotient lattice") {
  BlowupFans E = build_fans_explicit({1, 1}, {1, 1});
  BlowupFans F = build_fans({1, 1}, {1, 1});
  CHECK(lattice_isomorphic(E.tilde, F.tilde));
  CHECK(fan_equal(star_subdivision(E.cy, E.u0, "z"), E.tilde));
  CHECK(E.u0 == iv({0, 0, 1}));
  CHECK_THROWS_AS(build_fans_explicit({1, 1}, {2}), InputError);
}

TEST_CASE("class group of the CY fan for the quadric pair") {
  BlowupFans F = build_fans({1, 1, 1, 1}, {2, 2});
  ClassGroup cg = class_group(F.cy);
  CHECK(cg.free_rank == 1);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(build_fans({1, 1}, {1}), InputError);     // not Calabi-Yau
  CHECK_THROWS_AS(build_fans({2, 2}, {4}), InputError);     // gcd(w) = 2
}
