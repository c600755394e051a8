#pragma once

#include "wmsmooth/numbers.hpp"

#include <vector>

namespace wmsmooth {

// One constraint a.x >= b, or a.x > b when strict.
struct AffineRow {
  IVec a;
  Int b;
  bool strict = false;
};

inline AffineRow row_ge(IVec a, Int b) { return {std::move(a), std::move(b), false}; }
inline AffineRow row_gt(IVec a, Int b) { return {std::move(a), std::move(b), true}; }

// Rational feasibility of the conjunction of the rows, by Fourier-Motzkin
// elimination.  Exact; strict rows stay strict through elimination.
bool fm_feasible(int dim, std::vector<AffineRow> rows);

}  // namespace wmsmooth
