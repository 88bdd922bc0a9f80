#include <cmath>
#include <random>
#include <stdexcept>

#include "lgkit/algebra.hpp"
#include "lgkit/geometry.hpp"

namespace lgkit::geo {

PolyEval::PolyEval(const ModelSpec& spec) : nv_(spec.n + spec.r) {
  for (const auto& [m, c] : superpotential(spec).terms) {
    Mono mono{c.get_d(), {}};
    mono.e.insert(mono.e.end(), m.x.begin(), m.x.end());
    mono.e.insert(mono.e.end(), m.p.begin(), m.p.end());
    int deg = 0;
    for (int a : mono.e) deg += a;
    degree_ = std::max(degree_, deg);
    W_.push_back(std::move(mono));
  }
  // Breadth-first over sorted multi-indices; zero polynomials are not stored.
  std::vector<std::vector<int>> frontier{{}};
  derivs_[{}] = W_;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& idx : frontier) {
      int start = idx.empty() ? 0 : idx.back();
      for (int v = start; v < nv_; ++v) {
        Poly d = diff(derivs_.at(idx), v);
        if (d.empty()) continue;
        std::vector<int> key = idx;
        key.push_back(v);
        derivs_[key] = std::move(d);
        next.push_back(std::move(key));
      }
    }
    frontier.swap(next);
  }
}

PolyEval::Poly PolyEval::diff(const Poly& f, int v) {
  Poly out;
  for (const auto& m : f) {
    if (m.e[v] == 0) continue;
    Mono d = m;
    d.c *= m.e[v];
    d.e[v] -= 1;
    out.push_back(std::move(d));
  }
  return out;
}

cplx PolyEval::eval(const Poly& f, const CVec& z) {
  cplx s = 0;
  for (const auto& m : f) {
    cplx t = m.c;
    for (std::size_t i = 0; i < m.e.size(); ++i)
      for (int a = 0; a < m.e[i]; ++a) t *= z[i];
    s += t;
  }
  return s;
}

cplx PolyEval::value(const CVec& z) const { return eval(W_, z); }

CVec PolyEval::gradient(const CVec& z) const {
  CVec g(nv_, 0.0);
  for (int v = 0; v < nv_; ++v) {
    auto it = derivs_.find({v});
    if (it != derivs_.end()) g[v] = eval(it->second, z);
  }
  return g;
}

double PolyEval::derivative_norm(const CVec& z, int k) const {
  if (k < 1) throw std::domain_error("derivative order must be >= 1");
  if (k > degree_) return 0.0;
  // Sum over ordered tuples = sum over sorted tuples times the multinomial count.
  double s = 0;
  for (const auto& [idx, poly] : derivs_) {
    if (static_cast<int>(idx.size()) != k) continue;
    double count = std::tgamma(k + 1.0);
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j < idx.size() && idx[j] == idx[i]) ++j;
      count /= std::tgamma(static_cast<double>(j - i) + 1.0);
      i = j;
    }
    s += count * std::norm(eval(poly, z));
  }
  return std::sqrt(s);
}

CVec fd_gradient(const PolyEval& W, const CVec& z, double h) {
  // Holomorphic: the derivative along the real axis of each coordinate.
  CVec g(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    double hi = h * std::max(1.0, std::abs(z[i]));
    auto central = [&](double s) {
      CVec a = z, b = z;
      a[i] += s;
      b[i] -= s;
      return (W.value(a) - W.value(b)) / (2 * s);
    };
    g[i] = (4.0 * central(hi / 2) - central(hi)) / 3.0;
  }
  return g;
}

EllipticityReport ellipticity_probe(const ModelSpec& spec, const CVec& z, const std::vector<double>& t_list, int k) {
  if (k < 1) throw InputError("ellipticity probe needs k >= 1");
  Slice S = make_slice(spec);
  PolyEval W(spec);
  EllipticityReport rep;
  rep.k = k;
  rep.trivial = k > W.total_degree();
  for (double t : t_list) {
    CVec zt = homothety(S, t, z, {}).z;
    EllipticityRow row;
    row.t = t;
    CVec g = W.gradient(zt);
    row.grad = norm(g);
    row.dk = W.derivative_norm(zt, k);
    row.ratio = row.dk / std::pow(row.grad + 1, k);
    double xm = 0;
    for (int j = 0; j < S.n; ++j) xm = std::max(xm, std::abs(zt[j]));
    row.x_bound = xm / std::pow(row.grad + 1, 1.0 / S.dmin);
    rep.fitted_c = std::max(rep.fitted_c, row.x_bound);
    CVec gf = fd_gradient(W, zt);
    CVec diff(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) diff[i] = g[i] - gf[i];
    if (row.grad > 0) rep.grad_fd_dev = std::max(rep.grad_fd_dev, norm(diff) / row.grad);
    rep.rows.push_back(row);
  }
  rep.decreasing = true;
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (!(rep.rows[i].ratio < rep.rows[i - 1].ratio)) rep.decreasing = false;
  return rep;
}

Sample draw_sample(const Slice& S, std::uint64_t seed, std::uint64_t index, double rho) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> N01(0.0, 1.0);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  auto gaussian = [&](int len) {
    CVec v(len);
    for (auto& c : v) {
      double re = N01(rng);
      double im = N01(rng);
      c = cplx(re, im);
    }
    double nv = norm(v);
    for (auto& c : v) c /= nv;
    return v;
  };
  CVec x = gaussian(S.n);
  CVec z(S.dim());
  for (int j = 0; j < S.n; ++j) z[j] = x[j];
  for (int k = 0; k < S.r; ++k) {
    double a, b;
    do {
      a = U(rng);
      b = U(rng);
    } while (a * a + b * b > 1.0);
    z[S.n + k] = cplx(rho * a, rho * b);
  }
  Sample s;
  s.z = to_slice(S, z);
  s.u = gaussian(S.dim());
  s.v = gaussian(S.dim());
  return s;
}

}  // namespace lgkit::geo
