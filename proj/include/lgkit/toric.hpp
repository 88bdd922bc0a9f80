#pragma once

#include <string>
#include <vector>

#include "lgkit/model.hpp"

namespace lgkit::toric {

using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>;  // row-major

// Extended gcd coefficients, iterated left to right.  Throws InputError
// when the gcd is not 1.
std::vector<Integer> bezout(const std::vector<int>& values);

struct SNF {
  IMat D;  // diagonal, same shape as the input
  IMat U;  // unimodular, rows x rows
  IMat V;  // unimodular, cols x cols; D = U A V
  std::vector<Integer> diagonal() const;
};
SNF smith_normal_form(const IMat& A);

IMat mat_mul(const IMat& A, const IMat& B);
IMat identity(int n);
// Inverse of a unimodular matrix.
IMat unimodular_inverse(const IMat& A);
IVec primitive(const IVec& v);
Integer content(const IVec& v);

// Generators may be non-primitive (weighted) or unused by any cone; rays are
// the primitive vectors of the generators that appear in cones.
struct Fan {
  int dim = 0;
  std::vector<IVec> gens;
  std::vector<std::string> names;
  std::vector<std::vector<int>> cones;  // maximal cones, sorted generator indices

  std::vector<int> used() const;
  IVec ray(int g) const { return primitive(gens[g]); }
};

// Geometric equality: same set of rays and same maximal cones as sets of rays.
bool fan_equal(const Fan& a, const Fan& b);

struct FanValidity {
  bool simplicial = true;
  bool distinct_rays = true;
  bool proper_intersections = true;
  std::string detail;
  bool ok() const { return simplicial && distinct_rays && proper_intersections; }
};
FanValidity check_fan(const Fan& f);

// Coefficients of v in the generators of cone c, or empty when the
// generators do not span v.
std::vector<Rational> cone_coordinates(const Fan& f, const std::vector<int>& cone, const IVec& v);
bool in_support(const Fan& f, const IVec& v);

Fan star_subdivision(const Fan& f, const IVec& v, const std::string& name);

struct ClassGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;
  std::vector<IVec> degrees;  // class of each generator in the cokernel basis (free part)
  int rank_deficit = 0;
};
// Cokernel of M -> Z^{gens}, m -> (<m, u_g>)_g.
ClassGroup class_group(const Fan& f);

struct Irrelevant {
  std::vector<std::vector<int>> generators;   // per maximal cone, generator indices not in it
  std::vector<std::vector<int>> components;   // minimal coordinate subspaces {z_i = 0, i in S}
  std::vector<std::string> generator_text;
  std::vector<std::string> component_text;
};
Irrelevant irrelevant_data(const Fan& f);

Fan weighted_projective_fan(const std::vector<int>& weights);

struct BlowupFans {
  Fan tilde, cy, lg;
  std::vector<int> weights, degrees;
  int z_index = 0;  // generator index of u0 in tilde
  IVec u0;
};

// Lattice N = Z^{n+r+1} / span{(w, 0, -1), (0, d, -1)}, generators the images
// of the coordinate vectors of (x, p, z).
BlowupFans build_fans(const std::vector<int>& weights, const std::vector<int>& degrees);
// Explicit coordinates N_x x N_p x Z with u'_x = (u_x, 0, a_j), u'_p = (0, u_p, b_k).
// Needs gcd(d) = 1.
BlowupFans build_fans_explicit(const std::vector<int>& weights, const std::vector<int>& degrees);

struct DegreeCheck {
  bool basis_found = false;
  bool x_degrees = false;   // [x_j] = w_j e1
  bool p_degrees = false;   // [p_k] = d_k e2
  bool z_degree = false;    // [z] = -e1 - e2
  std::vector<IVec> degrees;  // in the basis (e1, e2)
  bool ok() const { return basis_found && x_degrees && p_degrees && z_degree; }
};
DegreeCheck degree_check(const BlowupFans& f);

// True when an integral unimodular map carries every generator of a onto the
// matching generator of b.
bool lattice_isomorphic(const Fan& a, const Fan& b);

}  // namespace lgkit::toric
