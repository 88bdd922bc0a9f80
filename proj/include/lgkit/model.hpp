#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lgkit {

using Rational = mpq_class;
using Integer = mpz_class;

// Raised for malformed or inconsistent input; the CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Term {
  Rational coeff;
  std::vector<int> exps;  // length n, exponents of x_1..x_n
  bool operator==(const Term&) const = default;
};

struct ModelSpec {
  int n = 0;
  int r = 0;
  std::vector<int> degrees;  // d_1..d_r
  std::vector<int> weights;  // w_1..w_n
  std::vector<std::vector<Term>> polys;  // W_1..W_r, canonical term order

  bool calabi_yau = false;    // sum d == sum w
  bool smooth_chart = false;  // all w == 1
  bool elliptic = false;      // d_max <= 2 d_min - 1

  int max_degree() const;
  int min_degree() const;
  bool operator==(const ModelSpec&) const = default;
};

// Validates, canonicalizes term order, merges duplicate monomials and fills
// in the flags.  Throws InputError.
ModelSpec make_model(int n, int r, std::vector<int> degrees, std::vector<int> weights,
                     std::vector<std::vector<Term>> polys);

ModelSpec parse_model(const std::string& document);
ModelSpec load_model(const std::string& path);
std::string serialize_model(const ModelSpec& spec);

// "num/den" or "num"; anything else (floats, exponents, junk) is rejected.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

std::string monomial_text(const std::vector<int>& exps, char var);

// Worked examples used throughout tests, selftest and the CLI defaults.
ModelSpec fermat_cubic();
ModelSpec quadric_pair();
ModelSpec fermat_quintic();

enum class Smoothness { likely_smooth, not_smooth, inconclusive };
const char* to_string(Smoothness s);

// Stabilization window of the per-weight Jacobian dimensions.
int stabilization_window(const ModelSpec& spec);

// Probes whether V(W) looks smooth by asking that dim R(W)_0 reaches zero and
// stays there for a full window below the cutoff.
Smoothness smoothness_probe(const ModelSpec& spec, int cutoff);

}  // namespace lgkit
