#pragma once

#include <vector>

#include "cy3/fields.hpp"

namespace cy3 {

/// Gaussian elimination over a table Field (covers the extension fields the
/// byte-matrix kernels do not).  Rows are vectors of field elements; pivots
/// are the first nonzero entry in scan order, as in the mod-p routines.

/// In-place RREF; returns the rank.  Rows below the rank come out zero.
int field_rref(const Field& F, std::vector<std::vector<int>>& rows);

/// RREF with zero rows dropped: canonical row-space representative.
std::vector<std::vector<int>> field_canonical(const Field& F,
                                              std::vector<std::vector<int>> rows);

int field_rank(const Field& F, std::vector<std::vector<int>> rows);

}  // namespace cy3
