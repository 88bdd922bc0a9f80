#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lgkit/geometry.hpp"

namespace lgkit::geo {

Slice make_slice(const ModelSpec& spec) {
  if (!spec.smooth_chart) throw InputError("geometry requires all weights w_j = 1");
  Slice S;
  S.n = spec.n;
  S.r = spec.r;
  S.degrees = spec.degrees;
  S.dmax = spec.max_degree();
  S.dmin = spec.min_degree();
  return S;
}

double F_value(const Slice& S, const CVec& z) {
  double f = 0;
  for (int j = 0; j < S.n; ++j) f += std::norm(z[j]);
  for (int k = 0; k < S.r; ++k) f -= S.degrees[k] * std::norm(z[S.n + k]);
  return f;
}

double slice_scale(const CVec& x, const CVec& p, const std::vector<int>& degrees) {
  double X2 = 0;
  for (const auto& c : x) X2 += std::norm(c);
  if (X2 == 0) throw std::domain_error("slice_scale needs x != 0");
  auto f = [&](double l) {
    double s = 1;
    for (std::size_t k = 0; k < p.size(); ++k) s += degrees[k] * std::pow(l, 2 * degrees[k]) * std::norm(p[k]);
    return l * l * s - X2;
  };
  double lo = 0, hi = std::max(1.0, std::sqrt(X2));
  while (f(hi) < 0) hi *= 2;
  for (int it = 0; it < 200 && hi - lo > 0; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

CVec charge_act(const Slice& S, double lambda, const CVec& z) {
  CVec w(z.size());
  for (int j = 0; j < S.n; ++j) w[j] = z[j] / lambda;
  for (int k = 0; k < S.r; ++k) w[S.n + k] = z[S.n + k] * std::pow(lambda, S.degrees[k]);
  return w;
}

CVec to_slice(const Slice& S, const CVec& z) {
  CVec x(z.begin(), z.begin() + S.n), p(z.begin() + S.n, z.end());
  return charge_act(S, slice_scale(x, p, S.degrees), z);
}

double re_inner(const CVec& a, const CVec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (std::conj(a[i]) * b[i]).real();
  return s;
}

double norm(const CVec& a) { return std::sqrt(re_inner(a, a)); }

CVec J(const CVec& v) {
  CVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = cplx(0, 1) * v[i];
  return w;
}

CVec grad_F(const Slice& S, const CVec& z) {
  CVec g(z.size());
  for (int j = 0; j < S.n; ++j) g[j] = 2.0 * z[j];
  for (int k = 0; k < S.r; ++k) g[S.n + k] = -2.0 * S.degrees[k] * z[S.n + k];
  return g;
}

Split projections(const Slice& S, const CVec& z, const CVec& v) {
  CVec g = grad_F(S, z), jg = J(g);
  double gg = re_inner(g, g);
  double a = re_inner(g, v) / gg, b = re_inner(jg, v) / gg;
  Split s;
  s.N.resize(v.size());
  s.V.resize(v.size());
  s.H.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    s.N[i] = a * g[i];
    s.V[i] = b * jg[i];
    s.H[i] = v[i] - s.N[i] - s.V[i];
  }
  return s;
}

CVec horizontal(const Slice& S, const CVec& z, const CVec& v) { return projections(S, z, v).H; }

double metric(const Slice& S, const CVec& z, const CVec& u, const CVec& v) {
  return re_inner(horizontal(S, z, u), horizontal(S, z, v));
}

Transported homothety(const Slice& S, double t, const CVec& z, const std::vector<CVec>& vecs) {
  if (!(t > 0)) throw std::domain_error("homothety needs t > 0");
  CVec w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) w[i] = t * z[i];
  CVec x(w.begin(), w.begin() + S.n), p(w.begin() + S.n, w.end());
  double lambda = slice_scale(x, p, S.degrees);
  Transported out;
  out.z = charge_act(S, lambda, w);
  for (const auto& v : vecs) {
    CVec tv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) tv[i] = t * v[i];
    out.vecs.push_back(charge_act(S, lambda, tv));
  }
  return out;
}

CVec gauge_unit_x(const Slice& S, const CVec& z) {
  double nx = 0;
  for (int j = 0; j < S.n; ++j) nx += std::norm(z[j]);
  nx = std::sqrt(nx);
  if (nx == 0) throw std::domain_error("point has x = 0");
  return charge_act(S, nx, z);
}

CVec gauge_homothety(const Slice& S, double s, const CVec& z) {
  CVec w = z;
  for (int k = 0; k < S.r; ++k) w[S.n + k] *= std::pow(s, S.degrees[k] + 1);
  return w;
}

KTest compact_K_test(const Slice& S, const CVec& z) {
  CVec g = gauge_unit_x(S, z);
  auto mass = [&](double t) {
    double m = 0;
    for (int k = 0; k < S.r; ++k) m += std::pow(t, -2.0 * (S.degrees[k] + 1)) * std::norm(g[S.n + k]);
    return m;
  };
  KTest res;
  // The defining inequality is closed; allow the rounding of the gauge step.
  const double slack = 8 * std::numeric_limits<double>::epsilon();
  if (mass(1.0) <= 1 + slack) {
    res.inK = true;
    return res;
  }
  double lo = 1, hi = 2;
  while (mass(hi) > 1) hi *= 2;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (mass(mid) > 1 ? lo : hi) = mid;
  }
  res.t_exit = hi;
  return res;
}

int default_chart(const Slice& S, const CVec& z) {
  int best = 0;
  for (int j = 1; j < S.n; ++j)
    if (std::abs(z[j]) > std::abs(z[best])) best = j;
  return best;
}

std::vector<cplx> chart_coords(const Slice& S, const CVec& z, int j) {
  std::vector<cplx> q;
  for (int k = 0; k < S.n; ++k)
    if (k != j) q.push_back(z[k] / z[j]);
  for (int l = 0; l < S.r; ++l) q.push_back(std::pow(z[j], S.degrees[l]) * z[S.n + l]);
  return q;
}

CVec from_chart(const Slice& S, const std::vector<cplx>& q, int j) {
  CVec s(S.dim());
  int a = 0;
  for (int k = 0; k < S.n; ++k) s[k] = k == j ? cplx(1) : q[a++];
  for (int l = 0; l < S.r; ++l) s[S.n + l] = q[a++];
  return to_slice(S, s);
}

namespace {

// Chart tangent d/dq_a pushed to z: x components scale by mu = x_j, p_l by mu^{-d_l}.
CVec chart_tangent(const Slice& S, const CVec& z, int j, int a, cplx unit) {
  cplx mu = z[j];
  CVec e(S.dim(), 0.0);
  int idx = a < S.n - 1 ? (a < j ? a : a + 1) : S.n + (a - (S.n - 1));
  if (idx < S.n)
    e[idx] = mu * unit;
  else
    e[idx] = std::pow(mu, -S.degrees[idx - S.n]) * unit;
  return e;
}

Eigen::MatrixXcd holomorphic_gram(const Slice& S, const CVec& z, int j) {
  if (std::abs(z[j]) < 1e-8) throw std::domain_error("chart coordinate x_j vanishes");
  int m = S.dim() - 1;
  // (1,0) lifts: complex projection off span_C(grad F).
  CVec g = grad_F(S, z);
  cplx gg = 0;
  for (const auto& c : g) gg += std::conj(c) * c;
  std::vector<CVec> v(m);
  for (int a = 0; a < m; ++a) {
    CVec e = chart_tangent(S, z, j, a, 1.0);
    cplx c = 0;
    for (int i = 0; i < S.dim(); ++i) c += std::conj(g[i]) * e[i];
    for (int i = 0; i < S.dim(); ++i) e[i] -= c / gg * g[i];
    v[a] = e;
  }
  Eigen::MatrixXcd H(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      cplx s = 0;
      for (int i = 0; i < S.dim(); ++i) s += std::conj(v[a][i]) * v[b][i];
      H(a, b) = s;
    }
  return H;
}

}  // namespace

std::vector<CVec> chart_frame(const Slice& S, const CVec& z, int j) {
  if (std::abs(z[j]) < 1e-8) throw std::domain_error("chart coordinate x_j vanishes");
  std::vector<CVec> out;
  for (int a = 0; a < S.dim() - 1; ++a) {
    out.push_back(horizontal(S, z, chart_tangent(S, z, j, a, 1.0)));
    out.push_back(horizontal(S, z, chart_tangent(S, z, j, a, cplx(0, 1))));
  }
  return out;
}

double theta_norm(const Slice& S, const CVec& z, int j) {
  return std::sqrt(std::abs(holomorphic_gram(S, z, j).determinant().real()));
}

double omega_norm(const Slice& S, const CVec& z, int j) {
  Eigen::MatrixXcd H = holomorphic_gram(S, z, j);
  return std::sqrt(std::abs(H.inverse().determinant().real()));
}

}  // namespace lgkit::geo
