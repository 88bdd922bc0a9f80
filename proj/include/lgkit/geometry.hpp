#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <map>
#include <cstdint>
#include <string>
#include <vector>

#include "lgkit/model.hpp"

namespace lgkit::geo {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;  // ambient vector, x components first, then p

// Real data of the slice S = {F = 1}, F = sum |x_j|^2 - sum d_k |p_k|^2.
struct Slice {
  int n = 0, r = 0;
  std::vector<int> degrees;
  int dmax = 0, dmin = 0;
  int dim() const { return n + r; }
};

// Requires unit weights.
Slice make_slice(const ModelSpec& spec);

double F_value(const Slice& S, const CVec& z);

// Unique lambda > 0 with |x|^2 = lambda^2 (1 + sum d_k lambda^{2 d_k} |p_k|^2).
double slice_scale(const CVec& x, const CVec& p, const std::vector<int>& degrees);

// Charge action by 1/lambda: (x / lambda, lambda^{d_k} p_k).
CVec charge_act(const Slice& S, double lambda, const CVec& z);
CVec to_slice(const Slice& S, const CVec& z);

double re_inner(const CVec& a, const CVec& b);
double norm(const CVec& a);
CVec J(const CVec& v);

CVec grad_F(const Slice& S, const CVec& z);

struct Split {
  CVec N, V, H;
};

Split projections(const Slice& S, const CVec& z, const CVec& v);
CVec horizontal(const Slice& S, const CVec& z, const CVec& v);

// Quotient metric on descent classes: <p_H u, p_H v>.
double metric(const Slice& S, const CVec& z, const CVec& u, const CVec& v);

// Phi_t realised as (t x, t p) followed by the charge normalisation; vectors
// are pushed by the differential, D_lambda (t v).
struct Transported {
  CVec z;
  std::vector<CVec> vecs;
};
Transported homothety(const Slice& S, double t, const CVec& z, const std::vector<CVec>& vecs);

struct KTest {
  bool inK = false;
  double t_exit = 1.0;  // t > 1 with Phi_{1/t}(point) in K when !inK
};
// The point is first moved to the |x| = 1 gauge by the positive charge action.
KTest compact_K_test(const Slice& S, const CVec& z);
CVec gauge_unit_x(const Slice& S, const CVec& z);
// Phi_s in the |x| = 1 gauge: p_k -> s^{d_k + 1} p_k.
CVec gauge_homothety(const Slice& S, double s, const CVec& z);

// Chart U_j: X_k = x_k / x_j, P_l = x_j^{d_l} p_l.
int default_chart(const Slice& S, const CVec& z);
std::vector<cplx> chart_coords(const Slice& S, const CVec& z, int j);
CVec from_chart(const Slice& S, const std::vector<cplx>& q, int j);  // lands on S
// Horizontal lifts of d/dRe q_a, d/dIm q_a at the slice point over q.
std::vector<CVec> chart_frame(const Slice& S, const CVec& z, int j);

// Norms of Theta = dX ^ dP dual polyvector and of Omega = dX ^ dP on U_j,
// with the convention |d/dx| = 1 for the Hermitian extension of the metric.
double theta_norm(const Slice& S, const CVec& z, int j);
double omega_norm(const Slice& S, const CVec& z, int j);

// Hess F as a real operator: 2 on x components, -2 d_k on p_k.
CVec shat(const Slice& S, const CVec& v);

// <S u^h, v^h> for the unit normal grad F / |grad F|.
double shape_pairing(const Slice& S, const CVec& z, const CVec& u, const CVec& v);
// A_{u^h} v^h = -<v^h, p_T J Shat u^h> / |grad F|^2 J grad F
CVec a_tensor(const Slice& S, const CVec& z, const CVec& u, const CVec& v);
// v[u^h, v^h] = 2 A_{u^h} v^h
CVec vertical_bracket(const Slice& S, const CVec& z, const CVec& u, const CVec& v);

struct Curvature {
  double K = 0;           // O'Neill closed formula
  double K_S = 0;         // Gauss equation on S
  double correction = 0;  // 3 |v[u,v]|^2 / (4 |u ^ v|^2)
  double K_path2 = 0;     // K_S + correction
  double area2 = 0;       // |u^h ^ v^h|^2
};
Curvature sectional_curvature(const Slice& S, const CVec& z, const CVec& u, const CVec& v);

struct Holomorphic {
  double K_uJu = 0;     // K(u, Ju) from the general formula = |v[u,Ju]|^2 / |u|^4
  double H_stated = 0;  // |v[u,Ju]|^2 / (2 |u|^2)
};
Holomorphic holomorphic_curvature(const Slice& S, const CVec& z, const CVec& u);

// Generic finite-difference sectional curvature of a metric given as a
// function of real coordinates; X, Y are coordinate components of the plane.
double fd_sectional(const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& gfun, const Eigen::VectorXd& q0,
                    const Eigen::VectorXd& X, const Eigen::VectorXd& Y, double h);

struct FDCurvature {
  double K = 0;
  double K_coarse = 0;  // before Richardson extrapolation
  double condition = 0;
};
// Sectional curvature from finite differences of the chart metric, Christoffel
// symbols and the Riemann tensor.  Throws std::domain_error on an
// ill-conditioned metric (condition number > 1e8) or when |x_j| is tiny.
FDCurvature curvature_fd(const Slice& S, const CVec& z, int j, const CVec& u, const CVec& v, double step = 1e-3);

struct DecayRow {
  double t = 1;
  double K = 0;
  double K_t2 = 0;
  double a_ratio = 0;
};
std::vector<DecayRow> asymptotic_curvature_probe(const Slice& S, const CVec& z, const CVec& u, const CVec& v,
                                                 const std::vector<double>& t_list);

// --------------------------------------------------------------- ellipticity

// W = sum p_i W_i in floating point with exact symbolic derivatives.
class PolyEval {
 public:
  explicit PolyEval(const ModelSpec& spec);
  cplx value(const CVec& z) const;
  CVec gradient(const CVec& z) const;
  // sqrt of the sum over ordered k-tuples of |d^k W|^2
  double derivative_norm(const CVec& z, int k) const;
  int total_degree() const { return degree_; }

 private:
  struct Mono {
    double c;
    std::vector<int> e;
  };
  using Poly = std::vector<Mono>;
  static Poly diff(const Poly& f, int v);
  static cplx eval(const Poly& f, const CVec& z);
  int nv_ = 0;
  int degree_ = 0;
  Poly W_;
  // all nonzero derivatives keyed by sorted variable index; read-only after construction
  std::map<std::vector<int>, Poly> derivs_;
};

CVec fd_gradient(const PolyEval& W, const CVec& z, double h = 1e-5);

struct EllipticityRow {
  double t = 1;
  double grad = 0;   // |grad W|
  double dk = 0;     // |D^k W|
  double ratio = 0;  // |D^k W| / (|grad W| + 1)^k
  double x_bound = 0;  // max_j |x_j| / (|grad W| + 1)^{1/d_min}
};

struct EllipticityReport {
  int k = 0;
  bool trivial = false;  // k above the total degree
  std::vector<EllipticityRow> rows;
  double fitted_c = 0;
  bool decreasing = false;
  double grad_fd_dev = 0;  // max relative deviation symbolic vs finite difference
};

EllipticityReport ellipticity_probe(const ModelSpec& spec, const CVec& z, const std::vector<double>& t_list, int k);

// ------------------------------------------------------------------ samples

struct Sample {
  CVec z;
  CVec u, v;  // unit ambient vectors
};
// Pure function of (seed, index).
Sample draw_sample(const Slice& S, std::uint64_t seed, std::uint64_t index, double rho);

}  // namespace lgkit::geo
