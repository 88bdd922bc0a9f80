#pragma once

// Independent reference routines used only by the tests.

#include <random>
#include <vector>

#include "lgkit/model.hpp"

namespace oracle {

using lgkit::Rational;

// Plain Gauss-Jordan over Q with first-nonzero pivoting.
inline int naive_rank(std::vector<std::vector<Rational>> a) {
  int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[rank][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Number of exponent vectors of length len with entries >= 0 summing to total.
inline long compositions(int len, int total) {
  if (total < 0) return 0;
  if (len == 0) return total == 0 ? 1 : 0;
  long c = 0;
  for (int a = 0; a <= total; ++a) c += compositions(len - 1, total - a);
  return c;
}

}  // namespace oracle
