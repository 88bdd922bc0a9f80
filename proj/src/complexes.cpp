#include <algorithm>
#include <unordered_map>

#include "lgkit/cohomology.hpp"

namespace lgkit {

namespace {

struct Block {
  BidegreeBasis basis;
  std::unordered_map<std::string, int> index;
  int size() const { return static_cast<int>(basis.elems.size()); }
};

Block make_block(const ModelSpec& spec, int degree, int weight) {
  Block b;
  b.basis = enumerate_bidegree(spec, 0, weight, degree);
  b.index.reserve(b.basis.elems.size());
  for (std::size_t i = 0; i < b.basis.elems.size(); ++i)
    b.index.emplace(term_key(b.basis.elems[i]), static_cast<int>(i));
  return b;
}

using IntTerms = std::vector<std::pair<FormTerm, Integer>>;

// dW with denominators cleared; rescaling does not change any rank.
IntTerms integer_dW(const ModelSpec& spec) {
  BigradedForm dW = exterior_d(superpotential(spec));
  Integer l = 1;
  for (const auto& [t, c] : dW.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntTerms out;
  for (const auto& [t, c] : dW.terms) out.emplace_back(t, Integer(c.get_num() * (l / c.get_den())));
  return out;
}

void finish_row(SparseVec& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec merged;
  for (auto& e : row) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second == 0; }),
               merged.end());
  row.swap(merged);
}

void dW_wedge_into(const IntTerms& dW, const FormTerm& b, const Integer& scale, const Block& tgt, SparseVec& row) {
  FormTerm out;
  for (const auto& [t, c] : dW) {
    int s = wedge_terms(t, b, out);
    if (!s) continue;
    Integer v = c * scale;
    if (s < 0) v = -v;
    row.emplace_back(tgt.index.at(term_key(out)), std::move(v));
  }
}

// Euler contraction of a basis term as integer terms.
IntTerms contract_term(const ModelSpec& spec, const FormTerm& t) {
  IntTerms out;
  std::uint64_t mask = static_cast<std::uint64_t>(t.I) | (static_cast<std::uint64_t>(t.J) << spec.n);
  int pos = 0;
  for (int z = 0; z < spec.n + spec.r; ++z) {
    if (!(mask >> z & 1)) continue;
    std::uint64_t rest = mask & ~(std::uint64_t{1} << z);
    FormTerm u{t.m, static_cast<std::uint32_t>(rest & ((std::uint64_t{1} << spec.n) - 1)),
               static_cast<std::uint32_t>(rest >> spec.n)};
    Integer c;
    if (z < spec.n) {
      u.m.x[z] += 1;
      c = spec.weights[z];
    } else {
      u.m.p[z - spec.n] += 1;
      c = -spec.degrees[z - spec.n];
    }
    if (pos % 2) c = -c;
    out.emplace_back(std::move(u), std::move(c));
    ++pos;
  }
  return out;
}

std::vector<SparseVec> koszul_rows(const IntTerms& dW, const Block& src, const Block& tgt) {
  std::vector<SparseVec> rows(src.basis.elems.size());
  const Integer one = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    dW_wedge_into(dW, src.basis.elems[i], one, tgt, rows[i]);
    finish_row(rows[i]);
  }
  return rows;
}

std::vector<SparseVec> contraction_rows(const ModelSpec& spec, const Block& src, const Block& tgt) {
  std::vector<SparseVec> rows(src.basis.elems.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (auto& [u, c] : contract_term(spec, src.basis.elems[i])) rows[i].emplace_back(tgt.index.at(term_key(u)), c);
    finish_row(rows[i]);
  }
  return rows;
}

// Rows dW ^ iota(b) for b in the basis of Omega^{p+1}_k: a spanning set of
// dW ^ H^0(X, Omega^p)_(k) for p >= 1.
std::vector<SparseVec> dRham_rows(const ModelSpec& spec, const IntTerms& dW, const Block& above, const Block& tgt) {
  std::vector<SparseVec> rows(above.basis.elems.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [u, c] : contract_term(spec, above.basis.elems[i])) dW_wedge_into(dW, u, c, tgt, rows[i]);
    finish_row(rows[i]);
  }
  return rows;
}

bool square_vanishes(const IntTerms& dW, const std::vector<SparseVec>& rows, const Block& mid, const Block& top) {
  for (const auto& r : rows) {
    SparseVec acc;
    for (const auto& [c, v] : r) dW_wedge_into(dW, mid.basis.elems[c], v, top, acc);
    finish_row(acc);
    if (!acc.empty()) return false;
  }
  return true;
}

void require_flags(const ModelSpec& spec) {
  if (!spec.smooth_chart) throw InputError("this computation requires all weights w_j = 1");
  if (!spec.calabi_yau) throw InputError("this computation requires the Calabi-Yau condition");
}

// Per-degree data of one strand; filled independently per task.
struct Slot {
  long dim = 0;
  long rank_out = 0;
  long aux = 0;      // dRham0: rank of the contraction on this block
  long aux_up = 0;   // dRham0: rank of the contraction from degree p+1
  bool square_ok = true;
  bool too_big = false;
};

enum class Kind { koszul, dRham0 };

StrandResult run_strand(const ModelSpec& spec, const IntTerms& dW, Kind kind, int s,
                        const ExecPolicy& policy, bool& square_ok, bool& exact_ok) {
  int top = spec.n + spec.r;
  int pmin = std::max(0, -s);
  std::vector<int> degs;
  for (int p = pmin; p <= top; ++p) degs.push_back(p);
  std::vector<Slot> slots(degs.size());

#pragma omp parallel for schedule(dynamic, 1) if (policy.parallel)
  for (std::size_t i = 0; i < degs.size(); ++i) {
    int p = degs[i], k = s + p;
    Slot& sl = slots[i];
    Block src = make_block(spec, p, k);
    sl.dim = src.size();
    if (sl.dim > policy.max_block) {
      sl.too_big = true;
      continue;
    }
    Block tgt = make_block(spec, p + 1, k + 1);
    if (tgt.size() > policy.max_block) {
      sl.too_big = true;
      continue;
    }
    if (kind == Kind::koszul) {
      auto rows = koszul_rows(dW, src, tgt);
      if (policy.verify_square && p + 2 <= top) {
        Block top2 = make_block(spec, p + 2, k + 2);
        sl.square_ok = square_vanishes(dW, rows, tgt, top2);
      }
      sl.rank_out = sparse_rank(std::move(rows), tgt.size());
    } else {
      if (p >= 1) {
        Block below = make_block(spec, p - 1, k);
        sl.aux = sparse_rank(contraction_rows(spec, src, below), below.size());
      }
      Block above = make_block(spec, p + 1, k);
      if (above.size() > policy.max_block) {
        sl.too_big = true;
        continue;
      }
      sl.aux_up = p + 1 <= top ? sparse_rank(contraction_rows(spec, above, src), src.size()) : 0;
      if (p == 0)
        sl.rank_out = sparse_rank(koszul_rows(dW, src, tgt), tgt.size());
      else
        sl.rank_out = sparse_rank(dRham_rows(spec, dW, above, tgt), tgt.size());
    }
  }

  StrandResult res;
  res.strand = s;
  res.degrees = degs;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (slots[i].too_big) res.skipped = true;
    if (!slots[i].square_ok) square_ok = false;
  }
  if (res.skipped) return res;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    const Slot& sl = slots[i];
    long dim = sl.dim;
    if (kind == Kind::dRham0) {
      dim = degs[i] == 0 ? sl.dim : sl.dim - sl.aux;
      // Exactness of the Euler complex makes iota(Omega^{p+1}) span the kernel.
      if (degs[i] >= 1 && sl.aux_up != dim) exact_ok = false;
    }
    long in = i > 0 ? slots[i - 1].rank_out : 0;
    res.dims.push_back(dim);
    res.ranks.push_back(sl.rank_out);
    res.coh.push_back(dim - sl.rank_out - in);
  }
  return res;
}

ComplexResult run_complex(const ModelSpec& spec, int cutoff, const ExecPolicy& policy, Kind kind) {
  require_flags(spec);
  if (cutoff < 1) throw InputError("weight cutoff must be at least 1");
  ComplexResult out;
  out.label = kind == Kind::koszul ? "Koszul" : "dRham0";
  out.cutoff = cutoff;
  out.window = stabilization_window(spec);
  out.square_checked = kind == Kind::koszul && policy.verify_square;
  IntTerms dW = integer_dW(spec);
  int top = spec.n + spec.r;
  int zeros = 0;
  bool square_ok = true, exact_ok = true;
  for (int s = -spec.n; s + top <= cutoff; ++s) {
    StrandResult st = run_strand(spec, dW, kind, s, policy, square_ok, exact_ok);
    out.strands.push_back(st);
    if (st.skipped) break;
    for (std::size_t i = 0; i < st.degrees.size(); ++i)
      if (st.coh[i] != 0) out.by_degree[st.degrees[i]] += st.coh[i];
    zeros = st.total() == 0 ? zeros + 1 : 0;
    if (zeros >= out.window) {
      out.stabilized = true;
      break;
    }
  }
  if (!square_ok) throw std::logic_error("dW ^ dW != 0 on a strand basis");
  if (!exact_ok) throw std::logic_error("Euler contraction complex failed to be exact");
  return out;
}

Bidegree form_bidegree(const ModelSpec& spec, const BigradedForm& f, bool& homogeneous, int& degree) {
  homogeneous = !f.is_zero();
  Bidegree bd{0, 0};
  degree = 0;
  bool first = true;
  for (const auto& [t, c] : f.terms) {
    Bidegree b = bigrade(t, spec);
    int d = form_degree(t);
    if (first) {
      bd = b;
      degree = d;
      first = false;
    } else if (b != bd || d != degree) {
      homogeneous = false;
    }
  }
  return bd;
}

SparseVec integer_coordinates(const BigradedForm& f, const Block& blk) {
  SparseQVec q;
  for (const auto& [t, c] : f.terms) q.emplace_back(blk.index.at(term_key(t)), c);
  std::sort(q.begin(), q.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return integerize(q);
}

}  // namespace

long StrandResult::total() const {
  long t = 0;
  for (long c : coh) t += c;
  return t;
}

CohomologyTable ComplexResult::table() const {
  CohomologyTable t;
  t.label = label;
  for (const auto& [p, d] : by_degree) t.entries.push_back({{p}, d, ""});
  return t;
}

ComplexResult koszul_cohomology(const ModelSpec& spec, int cutoff, const ExecPolicy& policy) {
  return run_complex(spec, cutoff, policy, Kind::koszul);
}

ComplexResult dRham0_cohomology(const ModelSpec& spec, int cutoff, const ExecPolicy& policy) {
  return run_complex(spec, cutoff, policy, Kind::dRham0);
}

long koszul_block_rank(const ModelSpec& spec, int degree, int weight) {
  Block src = make_block(spec, degree, weight), tgt = make_block(spec, degree + 1, weight + 1);
  return sparse_rank(koszul_rows(integer_dW(spec), src, tgt), tgt.size());
}

long contraction_rank(const ModelSpec& spec, int degree, int weight) {
  if (degree < 1) return 0;
  Block src = make_block(spec, degree, weight), tgt = make_block(spec, degree - 1, weight);
  return sparse_rank(contraction_rows(spec, src, tgt), tgt.size());
}

H0Basis h0_omega(const ModelSpec& spec, int degree, int weight) {
  if (!spec.smooth_chart) throw InputError("H^0(X, Omega^p) requires all weights w_j = 1");
  H0Basis out;
  Block src = make_block(spec, degree, weight);
  out.ambient = src.basis;
  if (degree == 0) {
    for (const auto& t : src.basis.elems) out.basis.push_back(BigradedForm::basis(t));
    return out;
  }
  Block tgt = make_block(spec, degree - 1, weight);
  std::vector<SparseQVec> T(tgt.size());
  for (int i = 0; i < src.size(); ++i)
    for (auto& [u, c] : contract_term(spec, src.basis.elems[i]))
      T[tgt.index.at(term_key(u))].emplace_back(i, Rational(c));
  for (auto& row : T) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  KernelResult k = right_kernel(T, src.size());
  for (const auto& v : k.kernel) {
    BigradedForm f;
    for (const auto& [i, q] : v) f.add(src.basis.elems[i], q);
    out.basis.push_back(std::move(f));
  }
  return out;
}

BigradedForm koszul_distinguished_class(const ModelSpec& spec) {
  BigradedForm f = BigradedForm::from_poly(BigradedPoly::constant(spec, 1));
  for (int j = 0; j < spec.r; ++j) f = wedge(wedge(f, exterior_d(model_poly(spec, j))), dp(spec, j));
  return f;
}

BigradedForm dW_theta_power(const ModelSpec& spec, int k) {
  BigradedForm f = exterior_d(superpotential(spec));
  BigradedForm th = theta_form(spec);
  for (int i = 0; i < k; ++i) f = wedge(f, th);
  return f;
}

ClassCheck koszul_class(const ModelSpec& spec, const BigradedForm& form) {
  ClassCheck cc;
  Bidegree bd = form_bidegree(spec, form, cc.homogeneous, cc.degree);
  cc.charge = bd.first;
  cc.weight = bd.second;
  if (!cc.homogeneous) return cc;
  BigradedForm dW = exterior_d(superpotential(spec));
  cc.closed = wedge(dW, form).is_zero();
  if (cc.degree == 0 || cc.weight == 0) {
    cc.exact = false;
    return cc;
  }
  Block src = make_block(spec, cc.degree - 1, cc.weight - 1);
  Block tgt = make_block(spec, cc.degree, cc.weight);
  if (cc.charge != 0) throw InputError("class checks are implemented for charge 0");
  cc.exact = !outside_row_space(koszul_rows(integer_dW(spec), src, tgt), integer_coordinates(form, tgt), tgt.size());
  return cc;
}

ClassCheck dRham0_class(const ModelSpec& spec, const BigradedForm& form) {
  ClassCheck cc;
  Bidegree bd = form_bidegree(spec, form, cc.homogeneous, cc.degree);
  cc.charge = bd.first;
  cc.weight = bd.second;
  if (!cc.homogeneous) return cc;
  if (cc.charge != 0) throw InputError("class checks are implemented for charge 0");
  BigradedForm dW = exterior_d(superpotential(spec));
  cc.closed = wedge(dW, form).is_zero();
  cc.in_kernel = euler_contract(form, spec).is_zero();
  if (cc.degree == 0 || cc.weight == 0) return cc;
  IntTerms idW = integer_dW(spec);
  Block tgt = make_block(spec, cc.degree, cc.weight);
  std::vector<SparseVec> rows;
  if (cc.degree - 1 == 0) {
    rows = koszul_rows(idW, make_block(spec, 0, cc.weight - 1), tgt);
  } else {
    rows = dRham_rows(spec, idW, make_block(spec, cc.degree, cc.weight - 1), tgt);
  }
  cc.exact = !outside_row_space(rows, integer_coordinates(form, tgt), tgt.size());
  return cc;
}

}  // namespace lgkit
