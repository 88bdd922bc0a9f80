#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgkit/model.hpp"

namespace lgkit {

struct Monomial {
  std::vector<int> x;  // exponents of x_1..x_n
  std::vector<int> p;  // exponents of p_1..p_r
  bool operator==(const Monomial&) const = default;
};

// Graded-lexicographic: lower total degree first, then larger leading
// exponents of x, then of p.
bool operator<(const Monomial& a, const Monomial& b);

// m * dx_I ^ dp_J with I, J bitmasks; factors are ordered dx (ascending)
// before dp (ascending).
struct FormTerm {
  Monomial m;
  std::uint32_t I = 0;
  std::uint32_t J = 0;
  bool operator==(const FormTerm&) const = default;
};
bool operator<(const FormTerm& a, const FormTerm& b);

int form_degree(const FormTerm& t);

using Bidegree = std::pair<int, int>;  // (charge, weight)

Bidegree bigrade(const Monomial& m, const ModelSpec& spec);
Bidegree bigrade(const FormTerm& t, const ModelSpec& spec);

class BigradedPoly {
 public:
  std::map<Monomial, Rational> terms;

  BigradedPoly() = default;
  static BigradedPoly constant(const ModelSpec& spec, const Rational& c);
  static BigradedPoly monomial(const Monomial& m, const Rational& c = 1);

  bool is_zero() const { return terms.empty(); }
  void add(const Monomial& m, const Rational& c);
  BigradedPoly operator+(const BigradedPoly& o) const;
  BigradedPoly operator-(const BigradedPoly& o) const;
  BigradedPoly operator*(const BigradedPoly& o) const;
  BigradedPoly scaled(const Rational& c) const;
  bool operator==(const BigradedPoly&) const = default;
  std::string str() const;
};

class BigradedForm {
 public:
  std::map<FormTerm, Rational> terms;

  BigradedForm() = default;
  static BigradedForm from_poly(const BigradedPoly& f);
  static BigradedForm basis(const FormTerm& t, const Rational& c = 1);

  bool is_zero() const { return terms.empty(); }
  void add(const FormTerm& t, const Rational& c);
  BigradedForm operator+(const BigradedForm& o) const;
  BigradedForm operator-(const BigradedForm& o) const;
  BigradedForm scaled(const Rational& c) const;
  BigradedForm times(const BigradedPoly& f) const;
  bool operator==(const BigradedForm&) const = default;
  std::string str() const;
};

Monomial unit_monomial(const ModelSpec& spec);
Monomial monomial_mul(const Monomial& a, const Monomial& b);

BigradedPoly x_var(const ModelSpec& spec, int j);
BigradedPoly p_var(const ModelSpec& spec, int k);
BigradedPoly model_poly(const ModelSpec& spec, int i);  // W_i lifted to C[x,p]
BigradedPoly superpotential(const ModelSpec& spec);     // W = sum_i p_i W_i

// Partial derivative in variable z: z < n is x_{z+1}, otherwise p_{z-n+1}.
BigradedPoly partial(const BigradedPoly& f, int z);

BigradedForm dx(const ModelSpec& spec, int j);
BigradedForm dp(const ModelSpec& spec, int k);
BigradedForm exterior_d(const BigradedPoly& f);

BigradedForm wedge(const BigradedForm& a, const BigradedForm& b);

// Contraction with the Euler field: dx_k -> x_k, dp_l -> -d_l p_l, extended
// as an odd derivation.
BigradedForm euler_contract(const BigradedForm& f, const ModelSpec& spec);

// theta = sum_j (1/d_j) dW_j ^ dp_j
BigradedForm theta_form(const ModelSpec& spec);

// Wedge of two basis elements; returns sign in {-1,0,1} and the product term.
int wedge_terms(const FormTerm& a, const FormTerm& b, FormTerm& out);

std::vector<Monomial> enumerate_monomials(const ModelSpec& spec, int charge, int weight);

struct BidegreeBasis {
  int charge = 0;
  int weight = 0;
  int degree = 0;
  std::vector<FormTerm> elems;
};

BidegreeBasis enumerate_bidegree(const ModelSpec& spec, int charge, int weight, int degree);

// Compact byte key used for index lookups of basis elements.
std::string term_key(const FormTerm& t);
std::string term_key(const Monomial& m);

std::string term_text(const FormTerm& t);

}  // namespace lgkit
