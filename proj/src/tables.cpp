#include <algorithm>

#include "lgkit/cohomology.hpp"

namespace lgkit {

long CohomologyTable::total() const {
  long t = 0;
  for (const auto& e : entries)
    if (e.dim > 0) t += e.dim;
  return t;
}

std::optional<long> CohomologyTable::at(const std::vector<int>& index) const {
  for (const auto& e : entries)
    if (e.index == index) return e.dim;
  return std::nullopt;
}

std::map<std::vector<int>, long> CohomologyTable::as_map() const {
  std::map<std::vector<int>, long> m;
  for (const auto& e : entries) m[e.index] = e.dim;
  return m;
}

namespace {

void put(CohomologyTable& t, std::vector<int> index, long dim, const std::string& symbol) {
  for (auto& e : t.entries) {
    if (e.index == index) {
      if (e.dim < 0 || dim < 0)
        e.dim = -1;
      else
        e.dim += dim;
      e.symbol += "+" + symbol;
      return;
    }
  }
  t.entries.push_back({std::move(index), dim, symbol});
}

void finish(CohomologyTable& t) {
  std::sort(t.entries.begin(), t.entries.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
}

void check_dimR(long dimR) {
  if (dimR < 0) throw InputError("dim R(W)_0 must be non-negative");
}

}  // namespace

CohomologyTable cohomology_of_V(const ModelSpec& spec, long dimR) {
  check_dimR(dimR);
  CohomologyTable t;
  t.label = "HV";
  int m = spec.n - spec.r - 1;
  if (m < 0) throw InputError("V(W) is empty for n - r - 1 < 0");
  for (int p = 0; p <= 2 * m; p += 2)
    if (p != m) put(t, {p}, 1, "C");
  if (m % 2 == 0)
    put(t, {m}, dimR + 1, "R(W)_0+C");
  else
    put(t, {m}, dimR, "R(W)_0");
  finish(t);
  return t;
}

CohomologyTable pv_table(const ModelSpec& spec, long dimR) {
  check_dimR(dimR);
  CohomologyTable t;
  t.label = "HPV";
  int m = spec.n - spec.r - 1;
  if (m < 0) throw InputError("V(W) is empty for n - r - 1 < 0");
  for (int k = 0; k <= m; ++k) {
    int p = -spec.n + spec.r + 1 + 2 * k;
    if (p != 0) put(t, {p}, 1, "C");
  }
  if (m % 2 == 0)
    put(t, {0}, dimR + 1, "R(W)_0+C");
  else
    put(t, {0}, dimR, "R(W)_0");
  finish(t);
  return t;
}

SpectralPages spectral_pages(const ModelSpec& spec, long dimR) {
  check_dimR(dimR);
  SpectralPages sp;
  int n = spec.n, r = spec.r;
  sp.E1.label = "E1";
  for (int p = 1; p <= n - 1; ++p) put(sp.E1, {p, p}, 1, "C");
  for (int p = 0; p <= n + r - 1; ++p) put(sp.E1, {p, 0}, -1, "H0(Omega^" + std::to_string(p) + ")");
  finish(sp.E1);

  sp.E2.label = "E2";
  for (int p = 1; p <= n - 1; ++p) put(sp.E2, {p, p}, 1, "C");
  for (int k = 2; k <= r; ++k) put(sp.E2, {2 * k - 1, 0}, 1, "C");
  put(sp.E2, {n + r - 1, 0}, dimR, "R(W)_0");
  finish(sp.E2);

  sp.Einf.label = "Einf";
  for (int p = r; p <= n - 1; ++p) put(sp.Einf, {p, p}, 1, "C");
  put(sp.Einf, {n + r - 1, 0}, dimR, "R(W)_0");
  finish(sp.Einf);

  for (int p = 1; p <= r - 1; ++p) sp.isomorphisms.push_back({{p, p}, {2 * p + 1, 0}});
  return sp;
}

}  // namespace lgkit
