#include "lgkit/cohomology.hpp"

namespace lgkit {

namespace {

using Series = std::vector<Rational>;  // truncated power series in H

Series mul(const Series& a, const Series& b) {
  Series c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Series inverse(const Series& a) {
  Series b(a.size());
  b[0] = 1 / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += a[i] * b[k - i];
    b[k] = -s / a[0];
  }
  return b;
}

// e^{-c H}
Series exp_neg(int c, std::size_t len) {
  Series e(len);
  Rational term = 1;
  for (std::size_t k = 0; k < len; ++k) {
    e[k] = term;
    term *= -c;
    term /= static_cast<long>(k + 1);
  }
  return e;
}

// chi_y(V) at a fixed rational y: coefficient of H^N in
//   (H (1 + y e^{-H}) / (1 - e^{-H}))^{N+1} * prod_i (1 - e^{-d_i H}) / (1 + y e^{-d_i H}),
// divided by 1 + y for the trivial summand of the Euler sequence.
Rational chi_at(int N, const std::vector<int>& degrees, const Rational& y) {
  std::size_t len = N + 1;
  // (1 - e^{-H}) / H has constant term 1; we need its inverse.
  Series e1 = exp_neg(1, len + 1);
  Series q(len);
  for (std::size_t k = 0; k < len; ++k) q[k] = -e1[k + 1];
  Series B = inverse(q);
  Series one_plus(len);
  for (std::size_t k = 0; k < len; ++k) one_plus[k] = y * e1[k];
  one_plus[0] += 1;
  Series Q = mul(B, one_plus);
  Series acc(len);
  acc[0] = 1;
  for (int i = 0; i <= N; ++i) acc = mul(acc, Q);
  for (int d : degrees) {
    Series e = exp_neg(d, len);
    Series num(len), den(len);
    for (std::size_t k = 0; k < len; ++k) {
      num[k] = -e[k];
      den[k] = y * e[k];
    }
    num[0] += 1;
    den[0] += 1;
    acc = mul(mul(acc, num), inverse(den));
  }
  return acc[N] / (1 + y);
}

}  // namespace

long HodgeDiamond::betti(int k) const {
  long b = 0;
  for (int p = 0; p <= k; ++p) {
    int q = k - p;
    if (p <= dim && q <= dim && q >= 0) b += h[p][q];
  }
  return b;
}

HodgeDiamond hodge_oracle(int n, int r, const std::vector<int>& degrees) {
  if (static_cast<int>(degrees.size()) != r) throw InputError("expected r degrees");
  for (int d : degrees)
    if (d < 1) throw InputError("degrees must be positive");
  int m = n - r - 1;
  if (m < 0) throw InputError("complete intersection has non-positive dimension");
  int N = n - 1;
  // chi_y has degree m in y: sample at y = 0..m and interpolate.
  std::vector<Rational> values(m + 1);
  for (int y = 0; y <= m; ++y) values[y] = chi_at(N, degrees, Rational(y));
  // Newton divided differences, then expand to monomial coefficients.
  std::vector<Rational> dd = values;
  for (int j = 1; j <= m; ++j)
    for (int i = m; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / j;
  std::vector<Rational> coeff(m + 1);
  for (int i = m; i >= 0; --i) {
    // coeff <- coeff * (y - i) + dd[i]
    std::vector<Rational> next(m + 1);
    for (int k = 0; k <= m; ++k) {
      if (coeff[k] == 0) continue;
      if (k + 1 <= m) next[k + 1] += coeff[k];
      next[k] -= coeff[k] * i;
    }
    next[0] += dd[i];
    coeff = next;
  }
  HodgeDiamond hd;
  hd.dim = m;
  hd.chi_y = coeff;
  hd.h.assign(m + 1, std::vector<long>(m + 1, 0));
  for (int p = 0; p <= m; ++p) {
    if (coeff[p].get_den() != 1) throw std::logic_error("chi_y coefficient is not an integer");
    long chi = coeff[p].get_num().get_si();
    long diag = (2 * p != m) ? (p % 2 ? -1 : 1) : 0;
    long mid = chi - diag;
    hd.h[p][m - p] = ((m - p) % 2) ? -mid : mid;
    if (2 * p != m) hd.h[p][p] = 1;
  }
  return hd;
}

}  // namespace lgkit
