#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "lgkit/geometry.hpp"

namespace lgkit::geo {

CVec shat(const Slice& S, const CVec& v) {
  CVec w(v.size());
  for (int j = 0; j < S.n; ++j) w[j] = 2.0 * v[j];
  for (int k = 0; k < S.r; ++k) w[S.n + k] = -2.0 * S.degrees[k] * v[S.n + k];
  return w;
}

double shape_pairing(const Slice& S, const CVec& z, const CVec& u, const CVec& v) {
  CVec uh = horizontal(S, z, u), vh = horizontal(S, z, v);
  return re_inner(shat(S, uh), vh) / norm(grad_F(S, z));
}

CVec a_tensor(const Slice& S, const CVec& z, const CVec& u, const CVec& v) {
  CVec uh = horizontal(S, z, u), vh = horizontal(S, z, v);
  CVec g = grad_F(S, z), jg = J(g);
  double gg = re_inner(g, g);
  CVec w = J(shat(S, uh));
  double c = re_inner(g, w) / gg;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * g[i];
  double s = -re_inner(vh, w) / gg;
  for (auto& e : jg) e *= s;
  return jg;
}

CVec vertical_bracket(const Slice& S, const CVec& z, const CVec& u, const CVec& v) {
  CVec a = a_tensor(S, z, u, v);
  for (auto& e : a) e *= 2.0;
  return a;
}

Curvature sectional_curvature(const Slice& S, const CVec& z, const CVec& u, const CVec& v) {
  CVec uh = horizontal(S, z, u), vh = horizontal(S, z, v);
  Curvature c;
  double uu = re_inner(uh, uh), vv = re_inner(vh, vh), uv = re_inner(uh, vh);
  c.area2 = uu * vv - uv * uv;
  if (!(c.area2 > 1e-24 * uu * vv) || uu == 0 || vv == 0) throw std::domain_error("degenerate plane");
  double su = shape_pairing(S, z, uh, uh), sv = shape_pairing(S, z, vh, vh), suv = shape_pairing(S, z, uh, vh);
  c.K_S = (su * sv - suv * suv) / c.area2;
  CVec b = vertical_bracket(S, z, uh, vh);
  double b2 = re_inner(b, b);
  c.correction = 3 * b2 / (4 * c.area2);
  c.K_path2 = c.K_S + c.correction;
  CVec bu = vertical_bracket(S, z, uh, J(uh));
  CVec bv = vertical_bracket(S, z, vh, J(vh));
  CVec bx = vertical_bracket(S, z, uh, J(vh));
  c.K = (3 * b2 + re_inner(bu, bv) - re_inner(bx, bx)) / (4 * c.area2);
  return c;
}

Holomorphic holomorphic_curvature(const Slice& S, const CVec& z, const CVec& u) {
  CVec uh = horizontal(S, z, u);
  Holomorphic h;
  h.K_uJu = sectional_curvature(S, z, uh, J(uh)).K;
  CVec b = vertical_bracket(S, z, uh, J(uh));
  h.H_stated = re_inner(b, b) / (2 * re_inner(uh, uh));
  return h;
}

namespace {

using Mat = Eigen::MatrixXd;

Mat chart_metric(const Slice& S, const Eigen::VectorXd& q, int j) {
  int m = S.dim() - 1;
  std::vector<cplx> qc(m);
  for (int a = 0; a < m; ++a) qc[a] = cplx(q[2 * a], q[2 * a + 1]);
  CVec z = from_chart(S, qc, j);
  std::vector<CVec> fr = chart_frame(S, z, j);
  Mat g(2 * m, 2 * m);
  for (int a = 0; a < 2 * m; ++a)
    for (int b = a; b < 2 * m; ++b) g(a, b) = g(b, a) = re_inner(fr[a], fr[b]);
  return g;
}

}  // namespace

double fd_sectional(const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& gfun, const Eigen::VectorXd& q0,
                    const Eigen::VectorXd& X, const Eigen::VectorXd& Y, double h) {
  const int m = static_cast<int>(q0.size());
  Mat g0 = gfun(q0);
  std::vector<Mat> dg(m);
  std::vector<std::vector<Mat>> ddg(m, std::vector<Mat>(m));
  std::vector<Mat> plus(m), minus(m);
  for (int c = 0; c < m; ++c) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m);
    e[c] = h;
    plus[c] = gfun(q0 + e);
    minus[c] = gfun(q0 - e);
    dg[c] = (plus[c] - minus[c]) / (2 * h);
    ddg[c][c] = (plus[c] - 2 * g0 + minus[c]) / (h * h);
  }
  for (int c = 0; c < m; ++c)
    for (int e = c + 1; e < m; ++e) {
      Eigen::VectorXd ec = Eigen::VectorXd::Zero(m), ee = Eigen::VectorXd::Zero(m);
      ec[c] = h;
      ee[e] = h;
      Mat v = (gfun(q0 + ec + ee) - gfun(q0 + ec - ee) - gfun(q0 - ec + ee) + gfun(q0 - ec - ee)) / (4 * h * h);
      ddg[c][e] = v;
      ddg[e][c] = v;
    }
  Mat gi = g0.inverse();
  // Gamma^i_{kl} = g^{im} (d_l g_mk + d_k g_ml - d_m g_kl) / 2
  std::vector<Mat> Gam(m, Mat::Zero(m, m));
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      Eigen::VectorXd low(m);
      for (int mm = 0; mm < m; ++mm) low[mm] = 0.5 * (dg[l](mm, k) + dg[k](mm, l) - dg[mm](k, l));
      Eigen::VectorXd up = gi * low;
      for (int i = 0; i < m; ++i) Gam[i](k, l) = up[i];
    }
  // R_abcd = (g_ad,bc + g_bc,ad - g_ac,bd - g_bd,ac)/2 + g_ef (G^e_bc G^f_ad - G^e_bd G^f_ac),
  // contracted as R(X, Y, X, Y).
  double num = 0;
  for (int a = 0; a < m; ++a) {
    if (X[a] == 0) continue;
    for (int b = 0; b < m; ++b) {
      if (Y[b] == 0) continue;
      for (int c = 0; c < m; ++c) {
        if (X[c] == 0) continue;
        for (int d = 0; d < m; ++d) {
          if (Y[d] == 0) continue;
          double R = 0.5 * (ddg[b][c](a, d) + ddg[a][d](b, c) - ddg[b][d](a, c) - ddg[a][c](b, d));
          for (int e = 0; e < m; ++e)
            for (int f = 0; f < m; ++f)
              R += g0(e, f) * (Gam[e](b, c) * Gam[f](a, d) - Gam[e](b, d) * Gam[f](a, c));
          num += R * X[a] * Y[b] * X[c] * Y[d];
        }
      }
    }
  }
  double den = X.dot(g0 * X) * Y.dot(g0 * Y) - std::pow(X.dot(g0 * Y), 2);
  return num / den;
}

FDCurvature curvature_fd(const Slice& S, const CVec& z, int j, const CVec& u, const CVec& v, double step) {
  if (S.dim() - 1 < 2) throw std::domain_error("curvature needs a chart of real dimension >= 4");
  if (std::abs(z[j]) < 1e-8) throw std::domain_error("chart coordinate x_j vanishes");
  std::vector<cplx> qc = chart_coords(S, z, j);
  int m = static_cast<int>(qc.size());
  Eigen::VectorXd q0(2 * m);
  for (int a = 0; a < m; ++a) {
    q0[2 * a] = qc[a].real();
    q0[2 * a + 1] = qc[a].imag();
  }
  std::vector<CVec> fr = chart_frame(S, z, j);
  Mat g(2 * m, 2 * m);
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * m; ++b) g(a, b) = re_inner(fr[a], fr[b]);
  Eigen::SelfAdjointEigenSolver<Mat> es(g);
  FDCurvature out;
  out.condition = es.eigenvalues().maxCoeff() / es.eigenvalues().minCoeff();
  if (!(out.condition <= 1e8)) throw std::domain_error("ill-conditioned chart metric");
  Eigen::VectorXd bu(2 * m), bv(2 * m);
  for (int a = 0; a < 2 * m; ++a) {
    bu[a] = re_inner(fr[a], u);
    bv[a] = re_inner(fr[a], v);
  }
  Eigen::LDLT<Mat> ldlt(g);
  Eigen::VectorXd X = ldlt.solve(bu), Y = ldlt.solve(bv);
  auto gfun = [&](const Eigen::VectorXd& q) { return chart_metric(S, q, j); };
  double k1 = fd_sectional(gfun, q0, X, Y, step);
  double k2 = fd_sectional(gfun, q0, X, Y, step / 2);
  out.K_coarse = k1;
  out.K = (4 * k2 - k1) / 3;
  return out;
}

std::vector<DecayRow> asymptotic_curvature_probe(const Slice& S, const CVec& z, const CVec& u, const CVec& v,
                                                 const std::vector<double>& t_list) {
  std::vector<DecayRow> rows;
  double prev = 0;
  for (double t : t_list) {
    if (t < 1 || t < prev) throw std::domain_error("t_list must be increasing with t >= 1");
    prev = t;
    Transported tr = homothety(S, t, z, {u, v});
    DecayRow row;
    row.t = t;
    row.K = sectional_curvature(S, tr.z, tr.vecs[0], tr.vecs[1]).K;
    row.K_t2 = std::abs(row.K) * t * t;
    CVec uh = horizontal(S, tr.z, tr.vecs[0]), vh = horizontal(S, tr.z, tr.vecs[1]);
    row.a_ratio = norm(a_tensor(S, tr.z, uh, vh)) / (norm(uh) * norm(vh));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lgkit::geo
