#pragma once

#include <vector>

#include "fsys/cyclotomic.hpp"

namespace fsys {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Row Hermite normal form: zero rows dropped, pivots positive, entries above
/// each pivot reduced into [0, pivot). Spans the same lattice as the input rows.
IntMatrix hermite_normal_form(IntMatrix rows, size_t width);

/// Integer basis of {k in Z^cols : M k = 0} for an integer matrix M given by its
/// rows, in Hermite normal form (hence deterministic).
IntMatrix integer_kernel(const IntMatrix& M, size_t cols);

}  // namespace fsys
