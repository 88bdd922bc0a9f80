#include "lgkit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace lgkit {

SparseVec integerize(const SparseQVec& row) {
  Integer l = 1;
  for (const auto& [c, q] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  SparseVec out;
  out.reserve(row.size());
  for (const auto& [c, q] : row) out.emplace_back(c, Integer(q.get_num() * (l / q.get_den())));
  return out;
}

namespace {

void normalize(SparseVec& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& e : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (g != 1)
    for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  if (v.front().second < 0)
    for (auto& e : v) e.second = -e.second;
}

// r <- a*r - b*pv, where a = lead(pv), b = coefficient of r at pv's lead.
void eliminate(SparseVec& r, const Integer& rcoef, const SparseVec& pv, SparseVec& scratch) {
  Integer a = pv.front().second, b = rcoef;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
  scratch.clear();
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < r.size() || j < pv.size()) {
    if (j == pv.size() || (i < r.size() && r[i].first < pv[j].first)) {
      scratch.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || pv[j].first < r[i].first) {
      scratch.emplace_back(pv[j].first, -b * pv[j].second);
      ++j;
    } else {
      t = a * r[i].second - b * pv[j].second;
      if (t != 0) scratch.emplace_back(r[i].first, t);
      ++i;
      ++j;
    }
  }
  r.swap(scratch);
}

// Echelon insertion engine shared by rank and membership queries.
class Echelon {
 public:
  explicit Echelon(int ncols) : pivot_(ncols, -1) {}

  // Reduces v against the stored pivots; stores it if a new pivot appears.
  bool insert(SparseVec v) {
    reduce(v);
    if (v.empty()) return false;
    normalize(v);
    pivot_[v.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  bool reduces_to_zero(SparseVec v) {
    reduce(v);
    return v.empty();
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  // Leading-column reduction: pivot rows only hold columns >= their lead, so
  // each step strictly increases the lead of v.
  void reduce(SparseVec& v) {
    while (!v.empty()) {
      int pr = pivot_[v.front().first];
      if (pr < 0) return;
      eliminate(v, v.front().second, rows_[pr], scratch_);
      normalize(v);
    }
  }

  std::vector<int> pivot_;
  std::vector<SparseVec> rows_;
  SparseVec scratch_;
};

// Column relabelling: sparse columns first, ties by original index.
std::vector<int> column_order(const std::vector<SparseVec>& rows, int ncols) {
  std::vector<int> count(ncols, 0);
  for (const auto& r : rows)
    for (const auto& e : r) ++count[e.first];
  std::vector<int> cols(ncols);
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(cols.begin(), cols.end(), [&](int a, int b) { return count[a] < count[b]; });
  std::vector<int> relabel(ncols);
  for (int i = 0; i < ncols; ++i) relabel[cols[i]] = i;
  return relabel;
}

void apply_order(SparseVec& r, const std::vector<int>& relabel) {
  for (auto& e : r) e.first = relabel[e.first];
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

namespace {

// Builds the echelon form of rows under the sparse-first column relabelling.
Echelon build_echelon(std::vector<SparseVec>& rows, int ncols, const std::vector<int>& relabel) {
  for (auto& r : rows) apply_order(r, relabel);
  std::vector<std::size_t> idx(rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (rows[a].size() != rows[b].size()) return rows[a].size() < rows[b].size();
    if (rows[a].empty()) return false;
    return rows[a].front().first < rows[b].front().first;
  });
  Echelon ech(ncols);
  for (std::size_t i : idx) {
    if (rows[i].empty()) continue;
    ech.insert(std::move(rows[i]));
    if (ech.rank() == ncols) break;
  }
  return ech;
}

}  // namespace

int sparse_rank(std::vector<SparseVec> rows, int ncols) {
  std::vector<int> relabel = column_order(rows, ncols);
  return build_echelon(rows, ncols, relabel).rank();
}

bool outside_row_space(const std::vector<SparseVec>& rows, const SparseVec& v, int ncols) {
  std::vector<SparseVec> work = rows;
  std::vector<int> relabel = column_order(work, ncols);
  Echelon ech = build_echelon(work, ncols, relabel);
  SparseVec w = v;
  apply_order(w, relabel);
  return !ech.reduces_to_zero(std::move(w));
}

int dense_rank_bareiss(std::vector<std::vector<Integer>> m) {
  if (m.empty()) return 0;
  std::size_t R = m.size(), C = m[0].size();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t piv = rank;
    while (piv < R && m[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        m[i][j] = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

KernelResult right_kernel(const std::vector<SparseQVec>& rows, int ncols) {
  // Dense-per-row RREF over Q in natural column order.
  std::vector<std::vector<Rational>> red;
  std::vector<int> pivcol;
  for (const auto& r : rows) {
    std::vector<Rational> v(ncols);
    for (const auto& [c, q] : r) v[c] += q;
    for (std::size_t i = 0; i < red.size(); ++i) {
      const Rational f = v[pivcol[i]];
      if (f == 0) continue;
      for (int c = 0; c < ncols; ++c)
        if (red[i][c] != 0) v[c] -= f * red[i][c];
    }
    int lead = -1;
    for (int c = 0; c < ncols; ++c)
      if (v[c] != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    Rational inv = 1 / v[lead];
    for (auto& e : v) e *= inv;
    for (std::size_t i = 0; i < red.size(); ++i) {
      const Rational f = red[i][lead];
      if (f == 0) continue;
      for (int c = 0; c < ncols; ++c)
        if (v[c] != 0) red[i][c] -= f * v[c];
    }
    red.push_back(std::move(v));
    pivcol.push_back(lead);
  }
  KernelResult out;
  out.rank = static_cast<int>(red.size());
  std::vector<int> is_pivot(ncols, -1);
  for (std::size_t i = 0; i < pivcol.size(); ++i) is_pivot[pivcol[i]] = static_cast<int>(i);
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f] >= 0) continue;
    SparseQVec k;
    for (int c = 0; c < ncols; ++c) {
      if (c == f) {
        k.emplace_back(c, Rational(1));
      } else if (is_pivot[c] >= 0 && red[is_pivot[c]][f] != 0) {
        k.emplace_back(c, -red[is_pivot[c]][f]);
      }
    }
    out.kernel.push_back(std::move(k));
  }
  return out;
}

SparseQVec coordinates(const BigradedForm& f, const BidegreeBasis& basis) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < basis.elems.size(); ++i) index.emplace(term_key(basis.elems[i]), static_cast<int>(i));
  SparseQVec v;
  for (const auto& [t, c] : f.terms) {
    auto it = index.find(term_key(t));
    if (it == index.end()) throw std::invalid_argument("form term " + term_text(t) + " is outside the basis");
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

KernelResult linear_kernel(const std::vector<BigradedForm>& rows, const BidegreeBasis& basis) {
  int m = static_cast<int>(rows.size());
  int N = static_cast<int>(basis.elems.size());
  // Transpose: one row per basis element, one column per input row.
  std::vector<SparseQVec> T(N);
  for (int i = 0; i < m; ++i)
    for (const auto& [c, q] : coordinates(rows[i], basis)) T[c].emplace_back(i, q);
  return right_kernel(T, m);
}

}  // namespace lgkit
