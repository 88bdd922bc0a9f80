#include "lgkit/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lgkit::toric {

std::vector<Integer> bezout(const std::vector<int>& values) {
  if (values.empty()) throw InputError("bezout needs at least one value");
  // Invariant: g = sum coeff_i * values_i over the prefix.
  std::vector<Integer> coeff(values.size(), 0);
  Integer g = values[0];
  coeff[0] = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    Integer s, t, gg;
    Integer b = values[i];
    mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) coeff[j] *= s;
    coeff[i] = t;
    g = gg;
  }
  if (g < 0) {
    g = -g;
    for (auto& c : coeff) c = -c;
  }
  if (g != 1) throw InputError("values are not coprime (gcd " + g.get_str() + ")");
  return coeff;
}

IMat identity(int n) {
  IMat I(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IMat mat_mul(const IMat& A, const IMat& B) {
  if (A.empty()) return {};
  std::size_t inner = B.size(), cols = B.empty() ? 0 : B[0].size();
  IMat C(A.size(), IVec(cols, 0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (A[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

Integer content(const IVec& v) {
  Integer g = 0;
  for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  return g;
}

IVec primitive(const IVec& v) {
  Integer g = content(v);
  if (g == 0) return v;
  IVec w = v;
  for (auto& e : w) e /= g;
  return w;
}

std::vector<Integer> SNF::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i) d.push_back(D[i][i]);
  return d;
}

namespace {

void row_axpy(IMat& M, std::size_t dst, std::size_t src, const Integer& q) {  // row dst -= q row src
  for (std::size_t j = 0; j < M[dst].size(); ++j) M[dst][j] -= q * M[src][j];
}
void col_axpy(IMat& M, std::size_t dst, std::size_t src, const Integer& q) {  // col dst -= q col src
  for (auto& row : M) row[dst] -= q * row[src];
}
void col_swap(IMat& M, std::size_t a, std::size_t b) {
  for (auto& row : M) std::swap(row[a], row[b]);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SNF smith_normal_form(const IMat& A) {
  SNF s;
  std::size_t m = A.size(), n = m ? A[0].size() : 0;
  s.D = A;
  s.U = identity(static_cast<int>(m));
  s.V = identity(static_cast<int>(n));
  IMat& D = s.D;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block as pivot
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D[i][j] != 0 && (pi == m || abs(D[i][j]) < abs(D[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    std::swap(D[t], D[pi]);
    std::swap(s.U[t], s.U[pi]);
    col_swap(D, t, pj);
    col_swap(s.V, t, pj);
    bool done = false;
    while (!done) {
      done = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        Integer q = floor_div(D[i][t], D[t][t]);
        row_axpy(D, i, t, q);
        row_axpy(s.U, i, t, q);
        if (D[i][t] != 0) {
          std::swap(D[t], D[i]);
          std::swap(s.U[t], s.U[i]);
          done = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        Integer q = floor_div(D[t][j], D[t][t]);
        col_axpy(D, j, t, q);
        col_axpy(s.V, j, t, q);
        if (D[t][j] != 0) {
          col_swap(D, t, j);
          col_swap(s.V, t, j);
          done = false;
        }
      }
      if (!done) continue;
      // divisibility of the trailing block
      for (std::size_t i = t + 1; i < m && done; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          Integer r;
          mpz_tdiv_r(r.get_mpz_t(), D[i][j].get_mpz_t(), D[t][t].get_mpz_t());
          if (r != 0) {
            row_axpy(D, t, i, Integer(-1));
            row_axpy(s.U, t, i, Integer(-1));
            done = false;
            break;
          }
        }
    }
    if (D[t][t] < 0) {
      for (auto& e : D[t]) e = -e;
      for (auto& e : s.U[t]) e = -e;
    }
  }
  return s;
}

namespace {

using QMat = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& M, int ncols) {
  std::vector<int> piv;
  std::size_t row = 0;
  for (int c = 0; c < ncols && row < M.size(); ++c) {
    std::size_t p = row;
    while (p < M.size() && M[p][c] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[row]);
    Rational inv = 1 / M[row][c];
    for (auto& e : M[row]) e *= inv;
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == row || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (std::size_t j = 0; j < M[i].size(); ++j) M[i][j] -= f * M[row][j];
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

int rank_of(const std::vector<IVec>& vecs, int dim) {
  QMat M;
  for (const auto& v : vecs) {
    std::vector<Rational> r(dim);
    for (int i = 0; i < dim; ++i) r[i] = v[i];
    M.push_back(r);
  }
  return static_cast<int>(rref(M, dim).size());
}

// Solve sum_i c_i cols_i = v; empty when inconsistent. cols must be independent.
std::vector<Rational> solve_columns(const std::vector<IVec>& cols, const IVec& v, int dim) {
  int k = static_cast<int>(cols.size());
  QMat M(dim, std::vector<Rational>(k + 1));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < k; ++j) M[i][j] = cols[j][i];
    M[i][k] = v[i];
  }
  std::vector<int> piv = rref(M, k + 1);
  if (!piv.empty() && piv.back() == k) return {};
  if (static_cast<int>(piv.size()) < k) throw std::logic_error("cone generators are dependent");
  std::vector<Rational> c(k);
  for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = M[r][k];
  return c;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

}  // namespace

IMat unimodular_inverse(const IMat& A) {
  int n = static_cast<int>(A.size());
  QMat M(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = A[i][j];
    M[i][n + i] = 1;
  }
  std::vector<int> piv = rref(M, n);
  if (static_cast<int>(piv.size()) != n) throw std::logic_error("matrix is singular");
  IMat inv(n, IVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (M[i][n + j].get_den() != 1) throw std::logic_error("matrix is not unimodular");
      inv[i][j] = M[i][n + j].get_num();
    }
  return inv;
}

std::vector<int> Fan::used() const {
  std::set<int> u;
  for (const auto& c : cones) u.insert(c.begin(), c.end());
  return {u.begin(), u.end()};
}

namespace {

using RaySet = std::set<IVec>;

std::set<RaySet> cone_ray_sets(const Fan& f) {
  std::set<RaySet> out;
  for (const auto& c : f.cones) {
    RaySet s;
    for (int g : c) s.insert(f.ray(g));
    out.insert(s);
  }
  return out;
}

}  // namespace

bool fan_equal(const Fan& a, const Fan& b) {
  if (a.dim != b.dim) return false;
  RaySet ra, rb;
  for (int g : a.used()) ra.insert(a.ray(g));
  for (int g : b.used()) rb.insert(b.ray(g));
  return ra == rb && cone_ray_sets(a) == cone_ray_sets(b);
}

std::vector<Rational> cone_coordinates(const Fan& f, const std::vector<int>& cone, const IVec& v) {
  std::vector<IVec> cols;
  for (int g : cone) cols.push_back(f.gens[g]);
  return solve_columns(cols, v, f.dim);
}

bool in_support(const Fan& f, const IVec& v) {
  for (const auto& c : f.cones) {
    auto co = cone_coordinates(f, c, v);
    if (co.empty()) continue;
    if (std::all_of(co.begin(), co.end(), [](const Rational& q) { return q >= 0; })) return true;
  }
  return false;
}

FanValidity check_fan(const Fan& f) {
  FanValidity fv;
  for (const auto& c : f.cones) {
    std::vector<IVec> g;
    for (int i : c) g.push_back(f.gens[i]);
    if (rank_of(g, f.dim) != static_cast<int>(c.size())) {
      fv.simplicial = false;
      fv.detail += "non-simplicial cone; ";
    }
  }
  {
    std::map<IVec, int> seen;
    for (int g : f.used())
      if (!seen.emplace(f.ray(g), g).second) {
        fv.distinct_rays = false;
        fv.detail += "two generators span ray " + f.names[g] + "; ";
      }
  }
  if (!fv.simplicial) return fv;
  // Two simplicial cones meet in a common face iff every nonnegative relation
  // sum a_i u_i = sum b_j v_j is supported on shared rays.  Extreme relations
  // are circuits, so it suffices to inspect the sign-consistent circuits.
  for (std::size_t A = 0; A < f.cones.size(); ++A)
    for (std::size_t B = A + 1; B < f.cones.size(); ++B) {
      std::vector<IVec> vecs;
      std::vector<bool> shared;
      std::set<IVec> ra, rb;
      for (int g : f.cones[A]) ra.insert(f.ray(g));
      for (int g : f.cones[B]) rb.insert(f.ray(g));
      for (int g : f.cones[A]) {
        vecs.push_back(f.ray(g));
        shared.push_back(rb.count(f.ray(g)) > 0);
      }
      std::size_t na = vecs.size();
      for (int g : f.cones[B]) {
        IVec w = f.ray(g);
        for (auto& e : w) e = -e;
        vecs.push_back(w);
        shared.push_back(ra.count(f.ray(g)) > 0);
      }
      int total = static_cast<int>(vecs.size());
      if (total > 24) throw std::logic_error("cone pair too large for circuit enumeration");
      for (std::uint32_t mask = 1; mask < (1u << total) && fv.proper_intersections; ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < total; ++i)
          if (mask >> i & 1) idx.push_back(i);
        if (static_cast<int>(idx.size()) > f.dim + 1) continue;
        // kernel of the column matrix restricted to idx
        int k = static_cast<int>(idx.size());
        QMat M(f.dim, std::vector<Rational>(k));
        for (int r = 0; r < f.dim; ++r)
          for (int c = 0; c < k; ++c) M[r][c] = vecs[idx[c]][r];
        std::vector<int> piv = rref(M, k);
        if (static_cast<int>(piv.size()) != k - 1) continue;
        int fc = 0;
        std::vector<bool> is_piv(k, false);
        for (int p : piv) is_piv[p] = true;
        while (is_piv[fc]) ++fc;
        std::vector<Rational> ker(k);
        ker[fc] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) ker[piv[r]] = -M[r][fc];
        bool full = std::all_of(ker.begin(), ker.end(), [](const Rational& q) { return q != 0; });
        if (!full) continue;  // not a circuit on exactly idx
        bool pos = std::all_of(ker.begin(), ker.end(), [](const Rational& q) { return q > 0; });
        bool neg = std::all_of(ker.begin(), ker.end(), [](const Rational& q) { return q < 0; });
        if (!pos && !neg) continue;
        for (int c = 0; c < k; ++c)
          if (!shared[idx[c]]) {
            fv.proper_intersections = false;
            fv.detail += "cones " + std::to_string(A) + " and " + std::to_string(B) + " overlap; ";
            break;
          }
      }
      (void)na;
    }
  return fv;
}

Fan star_subdivision(const Fan& f, const IVec& v, const std::string& name) {
  if (static_cast<int>(v.size()) != f.dim) throw InputError("new ray has the wrong dimension");
  for (const auto& g : f.gens)
    if (g == v) throw InputError("new ray equals an existing generator");
  std::vector<int> tau;
  bool found = false;
  for (const auto& c : f.cones) {
    auto co = cone_coordinates(f, c, v);
    if (co.empty()) continue;
    if (!std::all_of(co.begin(), co.end(), [](const Rational& q) { return q >= 0; })) continue;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (co[i] > 0) tau.push_back(c[i]);
    found = true;
    break;
  }
  if (!found || tau.empty()) throw InputError("new ray lies outside the support of the fan");
  Fan out = f;
  out.gens.push_back(v);
  out.names.push_back(name);
  int g_new = static_cast<int>(out.gens.size()) - 1;
  std::set<std::vector<int>> cones;
  for (const auto& c : f.cones) {
    bool contains = std::all_of(tau.begin(), tau.end(),
                                [&](int t) { return std::find(c.begin(), c.end(), t) != c.end(); });
    if (!contains) {
      cones.insert(c);
      continue;
    }
    for (int t : tau) {
      std::vector<int> nc;
      for (int g : c)
        if (g != t) nc.push_back(g);
      nc.push_back(g_new);
      std::sort(nc.begin(), nc.end());
      cones.insert(nc);
    }
  }
  out.cones.assign(cones.begin(), cones.end());
  return out;
}

ClassGroup class_group(const Fan& f) {
  int g = static_cast<int>(f.gens.size());
  IMat P(g, IVec(f.dim));
  for (int i = 0; i < g; ++i) P[i] = f.gens[i];
  SNF s = smith_normal_form(P);
  ClassGroup cg;
  int rank = 0;
  for (const auto& d : s.diagonal())
    if (d != 0) {
      ++rank;
      if (d != 1) cg.torsion.push_back(d);
    }
  cg.rank_deficit = f.dim - rank;
  cg.free_rank = g - rank;
  // class of generator i: column i of U, free coordinates rank..g-1
  for (int i = 0; i < g; ++i) {
    IVec c;
    for (int r = rank; r < g; ++r) c.push_back(s.U[r][i]);
    cg.degrees.push_back(c);
  }
  return cg;
}

Irrelevant irrelevant_data(const Fan& f) {
  Irrelevant ir;
  int g = static_cast<int>(f.gens.size());
  for (const auto& c : f.cones) {
    std::vector<int> comp;
    for (int i = 0; i < g; ++i)
      if (std::find(c.begin(), c.end(), i) == c.end()) comp.push_back(i);
    ir.generators.push_back(comp);
    std::vector<std::string> names;
    for (int i : comp) names.push_back(f.names[i]);
    ir.generator_text.push_back(comp.empty() ? "1" : join(names, "*"));
  }
  if (g > 20) throw std::logic_error("too many generators for the exceptional set enumeration");
  // minimal hitting sets of the generator supports
  std::vector<std::uint32_t> masks;
  for (const auto& comp : ir.generators) {
    std::uint32_t m = 0;
    for (int i : comp) m |= 1u << i;
    masks.push_back(m);
  }
  std::vector<std::uint32_t> hits;
  for (std::uint32_t s = 1; s < (1u << g); ++s) {
    if (!std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & s) != 0; })) continue;
    bool minimal = true;
    for (std::uint32_t h : hits)
      if ((h & s) == h) {
        minimal = false;
        break;
      }
    if (minimal) hits.push_back(s);
  }
  // a subset of s is numerically <= s, so hits holds exactly the minimal sets
  std::vector<std::uint32_t> minimal = hits;
  std::sort(minimal.begin(), minimal.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::uint32_t s : minimal) {
    std::vector<int> comp;
    std::vector<std::string> names;
    for (int i = 0; i < g; ++i)
      if (s >> i & 1) {
        comp.push_back(i);
        names.push_back(f.names[i]);
      }
    ir.components.push_back(comp);
    ir.component_text.push_back("{" + join(names, "=") + "=0}");
  }
  return ir;
}

namespace {

// Images of the coordinate vectors in Z^m / rowspace(Q); needs the row space saturated.
std::vector<IVec> quotient_images(const IMat& Q, int m) {
  SNF s = smith_normal_form(Q);
  auto diag = s.diagonal();
  int k = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    if (d != 1) throw InputError("charge lattice is not saturated (elementary divisor " + d.get_str() + ")");
    ++k;
  }
  // y = c * V^{-1}  =>  c = y V; the first k coordinates span the relations.
  std::vector<IVec> out;
  for (int i = 0; i < m; ++i) {
    IVec v;
    for (int j = k; j < m; ++j) v.push_back(s.V[i][j]);
    out.push_back(v);
  }
  return out;
}

void check_coprime(const std::vector<int>& v, const char* what) {
  if (v.empty()) throw InputError(std::string(what) + " are empty");
  for (int a : v)
    if (a < 1) throw InputError(std::string(what) + " must be positive");
  int g = 0;
  for (int a : v) g = std::gcd(g, a);
  if (g != 1) throw InputError(std::string(what) + " are not coprime");
}

void set_blowup_cones(BlowupFans& b, int n, int r, const std::vector<IVec>& gens) {
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));
  for (int k = 0; k < r; ++k) names.push_back("p" + std::to_string(k + 1));
  int dim = static_cast<int>(gens[0].size());
  b.z_index = n + r;
  b.u0 = gens[n + r];

  b.tilde.dim = dim;
  b.tilde.gens = gens;
  b.tilde.names = names;
  b.tilde.names.push_back("z");
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < r; ++k) {
      std::vector<int> c;
      for (int jj = 0; jj < n; ++jj)
        if (jj != j) c.push_back(jj);
      for (int kk = 0; kk < r; ++kk)
        if (kk != k) c.push_back(n + kk);
      c.push_back(n + r);
      b.tilde.cones.push_back(c);
    }

  std::vector<IVec> base(gens.begin(), gens.begin() + n + r);
  b.cy.dim = b.lg.dim = dim;
  b.cy.gens = b.lg.gens = base;
  b.cy.names = b.lg.names = names;
  for (int j = 0; j < n; ++j) {
    std::vector<int> c;
    for (int jj = 0; jj < n; ++jj)
      if (jj != j) c.push_back(jj);
    for (int k = 0; k < r; ++k) c.push_back(n + k);
    b.cy.cones.push_back(c);
  }
  for (int k = 0; k < r; ++k) {
    std::vector<int> c;
    for (int j = 0; j < n; ++j) c.push_back(j);
    for (int kk = 0; kk < r; ++kk)
      if (kk != k) c.push_back(n + kk);
    b.lg.cones.push_back(c);
  }
}

void check_blowup_input(const std::vector<int>& w, const std::vector<int>& d) {
  check_coprime(w, "weights");
  for (int a : d)
    if (a < 1) throw InputError("degrees must be positive");
  if (d.empty()) throw InputError("degrees are empty");
  if (std::accumulate(w.begin(), w.end(), 0) != std::accumulate(d.begin(), d.end(), 0))
    throw InputError("Calabi-Yau condition sum d = sum w fails");
  if (w.size() + d.size() < 3) throw InputError("need n + r >= 3");
}

}  // namespace

Fan weighted_projective_fan(const std::vector<int>& weights) {
  check_coprime(weights, "weights");
  int n = static_cast<int>(weights.size());
  if (n < 2) throw InputError("weighted projective space needs n >= 2");
  IMat Q(1, IVec(n));
  for (int j = 0; j < n; ++j) Q[0][j] = weights[j];
  Fan f;
  f.dim = n - 1;
  f.gens = quotient_images(Q, n);
  for (int j = 0; j < n; ++j) f.names.push_back("x" + std::to_string(j + 1));
  for (int j = 0; j < n; ++j) {
    std::vector<int> c;
    for (int jj = 0; jj < n; ++jj)
      if (jj != j) c.push_back(jj);
    f.cones.push_back(c);
  }
  return f;
}

BlowupFans build_fans(const std::vector<int>& weights, const std::vector<int>& degrees) {
  check_blowup_input(weights, degrees);
  int n = static_cast<int>(weights.size()), r = static_cast<int>(degrees.size());
  int m = n + r + 1;
  IMat Q(2, IVec(m, 0));
  for (int j = 0; j < n; ++j) Q[0][j] = weights[j];
  for (int k = 0; k < r; ++k) Q[1][n + k] = degrees[k];
  Q[0][m - 1] = -1;
  Q[1][m - 1] = -1;
  BlowupFans b;
  b.weights = weights;
  b.degrees = degrees;
  set_blowup_cones(b, n, r, quotient_images(Q, m));
  return b;
}

BlowupFans build_fans_explicit(const std::vector<int>& weights, const std::vector<int>& degrees) {
  check_blowup_input(weights, degrees);
  check_coprime(degrees, "degrees");
  int n = static_cast<int>(weights.size()), r = static_cast<int>(degrees.size());
  auto lattice = [](const std::vector<int>& v) {
    int len = static_cast<int>(v.size());
    IMat Q(1, IVec(len));
    for (int i = 0; i < len; ++i) Q[0][i] = v[i];
    return quotient_images(Q, len);
  };
  std::vector<IVec> ux = lattice(weights), up = lattice(degrees);
  std::vector<Integer> a = bezout(weights), bcoef = bezout(degrees);
  std::size_t dx = n - 1, dp = r - 1;
  std::vector<IVec> gens;
  for (int j = 0; j < n; ++j) {
    IVec g(ux[j].begin(), ux[j].end());
    g.resize(dx + dp, 0);
    g.push_back(a[j]);
    gens.push_back(g);
  }
  for (int k = 0; k < r; ++k) {
    IVec g(dx, 0);
    g.insert(g.end(), up[k].begin(), up[k].end());
    g.push_back(bcoef[k]);
    gens.push_back(g);
  }
  IVec u0(dx + dp, 0);
  u0.push_back(1);
  gens.push_back(u0);
  BlowupFans b;
  b.weights = weights;
  b.degrees = degrees;
  set_blowup_cones(b, n, r, gens);
  return b;
}

DegreeCheck degree_check(const BlowupFans& f) {
  DegreeCheck dc;
  ClassGroup cg = class_group(f.tilde);
  if (cg.free_rank != 2 || !cg.torsion.empty()) return dc;
  int n = static_cast<int>(f.weights.size()), r = static_cast<int>(f.degrees.size());
  auto divide = [](const IVec& v, int d, IVec& out) {
    out.clear();
    for (const auto& e : v) {
      if (e % d != 0) return false;
      out.push_back(e / d);
    }
    return true;
  };
  IVec e1, e2;
  if (!divide(cg.degrees[0], f.weights[0], e1) || !divide(cg.degrees[n], f.degrees[0], e2)) return dc;
  Integer det = e1[0] * e2[1] - e1[1] * e2[0];
  dc.basis_found = det == 1 || det == -1;
  if (!dc.basis_found) return dc;
  // coordinates in (e1, e2)
  auto coords = [&](const IVec& v) {
    Integer a = (v[0] * e2[1] - v[1] * e2[0]) / det;
    Integer b = (e1[0] * v[1] - e1[1] * v[0]) / det;
    return IVec{a, b};
  };
  for (const auto& d : cg.degrees) dc.degrees.push_back(coords(d));
  dc.x_degrees = true;
  for (int j = 0; j < n; ++j)
    if (dc.degrees[j] != IVec{Integer(f.weights[j]), Integer(0)}) dc.x_degrees = false;
  dc.p_degrees = true;
  for (int k = 0; k < r; ++k)
    if (dc.degrees[n + k] != IVec{Integer(0), Integer(f.degrees[k])}) dc.p_degrees = false;
  dc.z_degree = dc.degrees[f.z_index] == IVec{Integer(-1), Integer(-1)};
  return dc;
}

bool lattice_isomorphic(const Fan& a, const Fan& b) {
  if (a.dim != b.dim || a.gens.size() != b.gens.size()) return false;
  int d = a.dim;
  std::vector<int> basis;
  std::vector<IVec> chosen;
  for (std::size_t i = 0; i < a.gens.size() && static_cast<int>(basis.size()) < d; ++i) {
    chosen.push_back(a.gens[i]);
    if (rank_of(chosen, d) == static_cast<int>(chosen.size()))
      basis.push_back(static_cast<int>(i));
    else
      chosen.pop_back();
  }
  if (static_cast<int>(basis.size()) != d) return false;
  // T A = B on the basis: solve column by column
  QMat T(d, std::vector<Rational>(d));
  for (int row = 0; row < d; ++row) {
    // row of T: t with t . a_i = b_i[row]
    QMat M(d, std::vector<Rational>(d + 1));
    for (int i = 0; i < d; ++i) {
      for (int c = 0; c < d; ++c) M[i][c] = a.gens[basis[i]][c];
      M[i][d] = b.gens[basis[i]][row];
    }
    auto piv = rref(M, d + 1);
    for (int c = 0; c < d; ++c) T[row][c] = M[c][d];
    (void)piv;
  }
  IMat Ti(d, IVec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (T[i][j].get_den() != 1) return false;
      Ti[i][j] = T[i][j].get_num();
    }
  try {
    unimodular_inverse(Ti);
  } catch (const std::logic_error&) {
    return false;
  }
  for (std::size_t g = 0; g < a.gens.size(); ++g) {
    for (int i = 0; i < d; ++i) {
      Integer s = 0;
      for (int j = 0; j < d; ++j) s += Ti[i][j] * a.gens[g][j];
      if (s != b.gens[g][i]) return false;
    }
  }
  return a.cones == b.cones;
}

}  // namespace lgkit::toric
