//
// sepgraph - Smith normal form by row/column reduction with exact integers.
//

#include "sepgraph/snf.hpp"

#include <cstddef>

namespace sepgraph {

std::vector<Int> smith_invariant_factors(IntMat a) {
  std::vector<Int> factors;
  size_t           rows = a.size();
  size_t           cols = rows == 0 ? 0 : a[0].size();

  size_t t = 0;  // current pivot position (t, t)
  while (t < rows && t < cols) {
    // Re-select a minimal-magnitude pivot before every reduction pass.
    // Reducing against anything but the current global minimum lets the
    // quotients, and with them the entries, grow out of control.
    size_t pi = t, pj = t;
    bool   found = false;
    for (size_t i = t; i < rows; ++i) {
      for (size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0
            && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) {
      break;  // submatrix is zero
    }
    std::swap(a[t], a[pi]);
    for (size_t i = t; i < rows; ++i) {
      std::swap(a[i][t], a[i][pj]);
    }

    // One euclidean pass over column t and row t.  Any leftover residue is
    // strictly smaller than the pivot, so looping back to the pivot
    // selection makes progress.
    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) {
        continue;
      }
      Int q = a[i][t] / a[t][t];
      for (size_t j = t; j < cols; ++j) {
        a[i][j] -= q * a[t][j];
      }
      clean = clean && a[i][t] == 0;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) {
        continue;
      }
      Int q = a[t][j] / a[t][t];
      for (size_t i = t; i < rows; ++i) {
        a[i][j] -= q * a[i][t];
      }
      clean = clean && a[t][j] == 0;
    }
    if (!clean) {
      continue;
    }

    // Enforce divisibility: if the pivot does not divide some entry of the
    // remaining submatrix, mix that row in and redo this pivot.
    bool redo = false;
    for (size_t i = t + 1; i < rows && !redo; ++i) {
      for (size_t j = t + 1; j < cols && !redo; ++j) {
        if (a[i][j] % a[t][t] != 0) {
          for (size_t jj = t; jj < cols; ++jj) {
            a[t][jj] += a[i][jj];
          }
          redo = true;
        }
      }
    }
    if (redo) {
      continue;
    }
    factors.push_back(abs(a[t][t]));
    ++t;
  }
  return factors;
}

}  // namespace sepgraph
