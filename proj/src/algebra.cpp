#include "lgkit/algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace lgkit {

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

void check_shape(const Monomial& m, const ModelSpec& spec) {
  if (static_cast<int>(m.x.size()) != spec.n || static_cast<int>(m.p.size()) != spec.r)
    throw InputError("monomial exponent lists do not match (n, r)");
}

// Number of pairs (a in A, b in B) with a > b, for masks over a common index.
int inversions(std::uint64_t A, std::uint64_t B) {
  int inv = 0;
  while (B) {
    int b = std::countr_zero(B);
    B &= B - 1;
    inv += std::popcount(A >> (b + 1));
  }
  return inv;
}

std::uint64_t unified(const FormTerm& t) {
  return static_cast<std::uint64_t>(t.I) | (static_cast<std::uint64_t>(t.J) << t.m.x.size());
}

void split(std::uint64_t mask, std::size_t n, FormTerm& t) {
  t.I = static_cast<std::uint32_t>(mask & ((std::uint64_t{1} << n) - 1));
  t.J = static_cast<std::uint32_t>(mask >> n);
}

}  // namespace

bool operator<(const Monomial& a, const Monomial& b) {
  int da = sum(a.x) + sum(a.p), db = sum(b.x) + sum(b.p);
  if (da != db) return da < db;
  if (a.x != b.x) return a.x > b.x;
  return a.p > b.p;
}

bool operator<(const FormTerm& a, const FormTerm& b) {
  if (!(a.m == b.m)) return a.m < b.m;
  if (a.I != b.I) return a.I < b.I;
  return a.J < b.J;
}

int form_degree(const FormTerm& t) { return std::popcount(t.I) + std::popcount(t.J); }

Bidegree bigrade(const Monomial& m, const ModelSpec& spec) {
  check_shape(m, spec);
  int c = 0, w = 0;
  for (int j = 0; j < spec.n; ++j) c += spec.weights[j] * m.x[j];
  for (int k = 0; k < spec.r; ++k) {
    c -= spec.degrees[k] * m.p[k];
    w += m.p[k];
  }
  return {c, w};
}

Bidegree bigrade(const FormTerm& t, const ModelSpec& spec) {
  auto [c, w] = bigrade(t.m, spec);
  for (int j = 0; j < spec.n; ++j)
    if (t.I >> j & 1) c += spec.weights[j];
  for (int k = 0; k < spec.r; ++k)
    if (t.J >> k & 1) {
      c -= spec.degrees[k];
      w += 1;
    }
  return {c, w};
}

Monomial unit_monomial(const ModelSpec& spec) {
  return Monomial{std::vector<int>(spec.n, 0), std::vector<int>(spec.r, 0)};
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t j = 0; j < m.x.size(); ++j) m.x[j] += b.x[j];
  for (std::size_t k = 0; k < m.p.size(); ++k) m.p[k] += b.p[k];
  return m;
}

// ---- BigradedPoly ----

BigradedPoly BigradedPoly::constant(const ModelSpec& spec, const Rational& c) {
  BigradedPoly f;
  f.add(unit_monomial(spec), c);
  return f;
}

BigradedPoly BigradedPoly::monomial(const Monomial& m, const Rational& c) {
  BigradedPoly f;
  f.add(m, c);
  return f;
}

void BigradedPoly::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

BigradedPoly BigradedPoly::operator+(const BigradedPoly& o) const {
  BigradedPoly r = *this;
  for (const auto& [m, c] : o.terms) r.add(m, c);
  return r;
}

BigradedPoly BigradedPoly::operator-(const BigradedPoly& o) const { return *this + o.scaled(-1); }

BigradedPoly BigradedPoly::operator*(const BigradedPoly& o) const {
  BigradedPoly r;
  for (const auto& [a, ca] : terms)
    for (const auto& [b, cb] : o.terms) r.add(monomial_mul(a, b), ca * cb);
  return r;
}

BigradedPoly BigradedPoly::scaled(const Rational& c) const {
  BigradedPoly r;
  if (c == 0) return r;
  for (const auto& [m, v] : terms) r.terms.emplace(m, v * c);
  return r;
}

std::string BigradedPoly::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms) {
    if (!out.empty()) out += " + ";
    std::string mon;
    std::string xs = monomial_text(m.x, 'x'), ps = monomial_text(m.p, 'p');
    if (xs != "1") mon = xs;
    if (ps != "1") mon += (mon.empty() ? "" : "*") + ps;
    if (mon.empty()) mon = "1";
    out += "(" + format_rational(c) + ")*" + mon;
  }
  return out;
}

// ---- BigradedForm ----

BigradedForm BigradedForm::from_poly(const BigradedPoly& f) {
  BigradedForm r;
  for (const auto& [m, c] : f.terms) r.terms.emplace(FormTerm{m, 0, 0}, c);
  return r;
}

BigradedForm BigradedForm::basis(const FormTerm& t, const Rational& c) {
  BigradedForm r;
  r.add(t, c);
  return r;
}

void BigradedForm::add(const FormTerm& t, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(t);
  if (it == terms.end()) {
    terms.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

BigradedForm BigradedForm::operator+(const BigradedForm& o) const {
  BigradedForm r = *this;
  for (const auto& [t, c] : o.terms) r.add(t, c);
  return r;
}

BigradedForm BigradedForm::operator-(const BigradedForm& o) const { return *this + o.scaled(-1); }

BigradedForm BigradedForm::scaled(const Rational& c) const {
  BigradedForm r;
  if (c == 0) return r;
  for (const auto& [t, v] : terms) r.terms.emplace(t, v * c);
  return r;
}

BigradedForm BigradedForm::times(const BigradedPoly& f) const {
  BigradedForm r;
  for (const auto& [t, c] : terms)
    for (const auto& [m, cf] : f.terms) r.add(FormTerm{monomial_mul(t.m, m), t.I, t.J}, c * cf);
  return r;
}

std::string term_text(const FormTerm& t) {
  std::string out;
  std::string xs = monomial_text(t.m.x, 'x'), ps = monomial_text(t.m.p, 'p');
  if (xs != "1") out = xs;
  if (ps != "1") out += (out.empty() ? "" : "*") + ps;
  if (out.empty()) out = "1";
  for (std::size_t j = 0; j < t.m.x.size(); ++j)
    if (t.I >> j & 1) out += " dx" + std::to_string(j + 1);
  for (std::size_t k = 0; k < t.m.p.size(); ++k)
    if (t.J >> k & 1) out += " dp" + std::to_string(k + 1);
  return out;
}

std::string BigradedForm::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + format_rational(c) + ")*" + term_text(t);
  }
  return out;
}

// ---- ring elements ----

BigradedPoly x_var(const ModelSpec& spec, int j) {
  Monomial m = unit_monomial(spec);
  m.x[j] = 1;
  return BigradedPoly::monomial(m);
}

BigradedPoly p_var(const ModelSpec& spec, int k) {
  Monomial m = unit_monomial(spec);
  m.p[k] = 1;
  return BigradedPoly::monomial(m);
}

BigradedPoly model_poly(const ModelSpec& spec, int i) {
  BigradedPoly f;
  for (const Term& t : spec.polys[i]) f.add(Monomial{t.exps, std::vector<int>(spec.r, 0)}, t.coeff);
  return f;
}

BigradedPoly superpotential(const ModelSpec& spec) {
  BigradedPoly W;
  for (int i = 0; i < spec.r; ++i) W = W + p_var(spec, i) * model_poly(spec, i);
  return W;
}

BigradedPoly partial(const BigradedPoly& f, int z) {
  BigradedPoly r;
  for (const auto& [m, c] : f.terms) {
    int nx = static_cast<int>(m.x.size());
    int e = z < nx ? m.x[z] : m.p[z - nx];
    if (e == 0) continue;
    Monomial d = m;
    if (z < nx)
      d.x[z] -= 1;
    else
      d.p[z - nx] -= 1;
    r.add(d, c * e);
  }
  return r;
}

BigradedForm dx(const ModelSpec& spec, int j) {
  return BigradedForm::basis(FormTerm{unit_monomial(spec), 1u << j, 0});
}

BigradedForm dp(const ModelSpec& spec, int k) {
  return BigradedForm::basis(FormTerm{unit_monomial(spec), 0, 1u << k});
}

BigradedForm exterior_d(const BigradedPoly& f) {
  BigradedForm r;
  if (f.terms.empty()) return r;
  const Monomial& any = f.terms.begin()->first;
  int nx = static_cast<int>(any.x.size()), np = static_cast<int>(any.p.size());
  for (int z = 0; z < nx + np; ++z) {
    BigradedPoly g = partial(f, z);
    std::uint32_t I = z < nx ? (1u << z) : 0u;
    std::uint32_t J = z < nx ? 0u : (1u << (z - nx));
    for (const auto& [m, c] : g.terms) r.add(FormTerm{m, I, J}, c);
  }
  return r;
}

int wedge_terms(const FormTerm& a, const FormTerm& b, FormTerm& out) {
  std::uint64_t A = unified(a), B = unified(b);
  if (A & B) return 0;
  out.m = monomial_mul(a.m, b.m);
  split(A | B, a.m.x.size(), out);
  return inversions(A, B) % 2 ? -1 : 1;
}

BigradedForm wedge(const BigradedForm& a, const BigradedForm& b) {
  BigradedForm r;
  FormTerm t;
  for (const auto& [ta, ca] : a.terms)
    for (const auto& [tb, cb] : b.terms) {
      int s = wedge_terms(ta, tb, t);
      if (s) r.add(t, s > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  return r;
}

BigradedForm euler_contract(const BigradedForm& f, const ModelSpec& spec) {
  BigradedForm r;
  for (const auto& [t, c] : f.terms) {
    std::uint64_t mask = unified(t);
    int pos = 0;
    for (int z = 0; z < spec.n + spec.r; ++z) {
      if (!(mask >> z & 1)) continue;
      FormTerm u;
      u.m = t.m;
      split(mask & ~(std::uint64_t{1} << z), spec.n, u);
      Rational coef = c;
      if (z < spec.n) {
        u.m.x[z] += 1;
        coef *= spec.weights[z];
      } else {
        u.m.p[z - spec.n] += 1;
        coef *= -spec.degrees[z - spec.n];
      }
      if (pos % 2) coef = -coef;
      r.add(u, coef);
      ++pos;
    }
  }
  return r;
}

BigradedForm theta_form(const ModelSpec& spec) {
  BigradedForm th;
  for (int j = 0; j < spec.r; ++j)
    th = th + wedge(exterior_d(model_poly(spec, j)), dp(spec, j)).scaled(Rational(1, spec.degrees[j]));
  return th;
}

// ---- enumeration ----

namespace {

// All exponent vectors e with sum_j w_j e_j == total, in descending lex order.
void weighted_compositions(const std::vector<int>& w, int total, std::vector<std::vector<int>>& out) {
  std::vector<int> e(w.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int rem) -> void {
    if (j + 1 == w.size()) {
      if (rem % w[j] == 0) {
        e[j] = rem / w[j];
        out.push_back(e);
      }
      return;
    }
    for (int a = rem / w[j]; a >= 0; --a) {
      e[j] = a;
      self(self, j + 1, rem - a * w[j]);
    }
    e[j] = 0;
  };
  if (w.empty()) {
    if (total == 0) out.push_back({});
    return;
  }
  if (total < 0) return;
  rec(rec, 0, total);
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const ModelSpec& spec, int charge, int weight) {
  std::vector<Monomial> out;
  if (weight < 0) return out;
  std::vector<std::vector<int>> ps;
  weighted_compositions(std::vector<int>(spec.r, 1), weight, ps);
  for (const auto& p : ps) {
    int xdeg = charge;
    for (int k = 0; k < spec.r; ++k) xdeg += spec.degrees[k] * p[k];
    if (xdeg < 0) continue;
    std::vector<std::vector<int>> xs;
    weighted_compositions(spec.weights, xdeg, xs);
    for (auto& x : xs) out.push_back(Monomial{std::move(x), p});
  }
  std::sort(out.begin(), out.end());
  return out;
}

BidegreeBasis enumerate_bidegree(const ModelSpec& spec, int charge, int weight, int degree) {
  BidegreeBasis basis{charge, weight, degree, {}};
  if (degree < 0 || degree > spec.n + spec.r || weight < 0) return basis;
  for (std::uint32_t I = 0; I < (1u << spec.n); ++I) {
    int di = std::popcount(I);
    if (di > degree || degree - di > spec.r) continue;
    int ci = 0;
    for (int j = 0; j < spec.n; ++j)
      if (I >> j & 1) ci += spec.weights[j];
    for (std::uint32_t J = 0; J < (1u << spec.r); ++J) {
      if (std::popcount(J) != degree - di) continue;
      int cj = 0;
      for (int k = 0; k < spec.r; ++k)
        if (J >> k & 1) cj -= spec.degrees[k];
      for (auto& m : enumerate_monomials(spec, charge - ci - cj, weight - std::popcount(J)))
        basis.elems.push_back(FormTerm{std::move(m), I, J});
    }
  }
  std::sort(basis.elems.begin(), basis.elems.end());
  return basis;
}

std::string term_key(const Monomial& m) {
  std::string k;
  k.reserve(m.x.size() + m.p.size());
  for (int e : m.x) k.push_back(static_cast<char>(e));
  for (int e : m.p) k.push_back(static_cast<char>(e));
  return k;
}

std::string term_key(const FormTerm& t) {
  std::string k = term_key(t.m);
  for (int s = 0; s < 4; ++s) k.push_back(static_cast<char>(t.I >> (8 * s)));
  for (int s = 0; s < 4; ++s) k.push_back(static_cast<char>(t.J >> (8 * s)));
  return k;
}

}  // namespace lgkit
