#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgkit/algebra.hpp"
#include "lgkit/linalg.hpp"

namespace lgkit {

// How strand/weight blocks are evaluated.  The serial path is the reference;
// the parallel path must give identical results.
struct ExecPolicy {
  bool parallel = true;
  long max_block = 40000;       // blocks larger than this are skipped, not computed
  bool verify_square = false;   // check dW^(dW^b) = 0 on every basis element
};

// ---------------------------------------------------------------- Jacobian

struct JacobianReport {
  int cutoff = 0;
  std::vector<long> dims;  // per weight 0..dims.size()-1
  long total = 0;
  bool stabilized = false;
  int first_zero = -1;     // first weight with dimension 0, or -1
  int exact_through = -1;  // weights above this were filled by zero propagation
};

std::vector<BigradedPoly> jacobian_generators(const ModelSpec& spec);

// dim R(W)_0 at a single weight by elimination (no propagation).
long jacobian_dimension_at(const ModelSpec& spec, int weight);

JacobianReport jacobian_ring_charge0(const ModelSpec& spec, int cutoff,
                                     const ExecPolicy& policy = {});

// ------------------------------------------------------------------ Hodge

struct HodgeDiamond {
  int dim = 0;                        // complex dimension m = n - r - 1
  std::vector<std::vector<long>> h;   // h[p][q]
  std::vector<Rational> chi_y;        // coefficients of chi_y
  long betti(int k) const;
};

HodgeDiamond hodge_oracle(int n, int r, const std::vector<int>& degrees);

// ----------------------------------------------------------------- tables

struct TableEntry {
  std::vector<int> index;
  long dim = 0;          // -1 marks an infinite-dimensional entry
  std::string symbol;    // "C", "R(W)_0", "R(W)_0+C", "H0(Omega^p)"
  bool operator==(const TableEntry&) const = default;
};

struct CohomologyTable {
  std::string label;
  std::vector<TableEntry> entries;  // sorted by index
  long total() const;               // sum of finite entries
  std::optional<long> at(const std::vector<int>& index) const;
  std::map<std::vector<int>, long> as_map() const;
};

CohomologyTable cohomology_of_V(const ModelSpec& spec, long dimR);
CohomologyTable pv_table(const ModelSpec& spec, long dimR);

struct SpectralPages {
  CohomologyTable E1, E2, Einf;
  // d_{p+1}^{p,p} : E^{p,p} -> E^{2p+1,0}, isomorphisms for p = 1..r-1
  std::vector<std::pair<std::vector<int>, std::vector<int>>> isomorphisms;
};

SpectralPages spectral_pages(const ModelSpec& spec, long dimR);

// ------------------------------------------------------ strand complexes

struct StrandResult {
  int strand = 0;             // s = weight - form degree
  std::vector<int> degrees;   // form degrees p present in the strand
  std::vector<long> dims;     // space dimension per p
  std::vector<long> ranks;    // rank of the outgoing dW^ per p
  std::vector<long> coh;      // cohomology per p
  bool skipped = false;
  long total() const;
};

struct ComplexResult {
  std::string label;          // "Koszul" or "dRham0"
  int cutoff = 0;
  int window = 0;
  bool stabilized = false;
  bool square_checked = false;
  std::vector<StrandResult> strands;
  std::map<int, long> by_degree;  // aggregated dimension per form degree
  CohomologyTable table() const;
};

// H^p((Omega^*)_0, dW) strand by strand up to the weight cutoff.
ComplexResult koszul_cohomology(const ModelSpec& spec, int cutoff, const ExecPolicy& policy = {});

// H^p(H^0(X, Omega^*), dW) with H^0(X, Omega^p) = ker of the Euler contraction.
ComplexResult dRham0_cohomology(const ModelSpec& spec, int cutoff, const ExecPolicy& policy = {});

struct H0Basis {
  BidegreeBasis ambient;
  std::vector<BigradedForm> basis;  // kernel of the contraction, RREF order
};

H0Basis h0_omega(const ModelSpec& spec, int degree, int weight);

// Ranks of the blocks used by both complexes (exposed for tests/benchmarks).
long koszul_block_rank(const ModelSpec& spec, int degree, int weight);
long contraction_rank(const ModelSpec& spec, int degree, int weight);

// dW_1^dp_1^...^dW_r^dp_r
BigradedForm koszul_distinguished_class(const ModelSpec& spec);
// dW ^ theta^k
BigradedForm dW_theta_power(const ModelSpec& spec, int k);

struct ClassCheck {
  bool homogeneous = false;
  int charge = 0, weight = 0, degree = 0;
  bool closed = false;        // dW ^ form == 0
  bool in_kernel = true;      // euler_contract(form) == 0 (dRham0 only)
  bool exact = false;         // form in the image of dW^
  bool nonzero_class() const { return homogeneous && closed && in_kernel && !exact; }
};

ClassCheck koszul_class(const ModelSpec& spec, const BigradedForm& form);
ClassCheck dRham0_class(const ModelSpec& spec, const BigradedForm& form);

}  // namespace lgkit
