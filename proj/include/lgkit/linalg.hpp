#pragma once

#include <utility>
#include <vector>

#include "lgkit/algebra.hpp"

namespace lgkit {

// Sparse row: (column, value) pairs sorted by column, no zeros.
using SparseVec = std::vector<std::pair<int, Integer>>;
using SparseQVec = std::vector<std::pair<int, Rational>>;

// Clears denominators (row-wise scaling does not change the row space).
SparseVec integerize(const SparseQVec& row);

// Exact rank over Q by fraction-free sparse elimination.  Rows are processed
// shortest first; pivot columns are ordered by increasing column count.
int sparse_rank(std::vector<SparseVec> rows, int ncols);

// True when v lies outside the row space of rows.
bool outside_row_space(const std::vector<SparseVec>& rows, const SparseVec& v, int ncols);

// Dense fraction-free (Bareiss) rank; the independent reference route.
int dense_rank_bareiss(std::vector<std::vector<Integer>> m);

struct KernelResult {
  int rank = 0;
  std::vector<SparseQVec> kernel;  // basis, one vector per free column
};

// Right kernel {c : A c = 0} of a matrix given by rows, via reduced row echelon
// form; deterministic for a fixed input.
KernelResult right_kernel(const std::vector<SparseQVec>& rows, int ncols);

// Rank of the row family and a basis of the relations sum_i c_i row_i = 0.
KernelResult linear_kernel(const std::vector<BigradedForm>& rows, const BidegreeBasis& basis);

// Expresses a form in a basis; throws std::invalid_argument when a term is
// outside the basis.
SparseQVec coordinates(const BigradedForm& f, const BidegreeBasis& basis);

}  // namespace lgkit
