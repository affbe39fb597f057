#pragma once

// Reference computations kept apart from the library code paths they check.

#include <utility>
#include <vector>

#include "fsys/catalog.hpp"
#include "fsys/gauge.hpp"

namespace oracle {

using fsys::IntMatrix;

/// Kernel of M (rows of length `cols`) by rational RREF, scaled to integer
/// vectors and then saturated prime by prime.
IntMatrix saturated_nullspace(const IntMatrix& M, size_t cols);

/// Each row of `a` is an integer combination of rows of `b` and vice versa.
bool same_lattice(const IntMatrix& a, const IntMatrix& b, size_t cols);

/// Exponent matrix (|T| rows) of the nonzero words.
IntMatrix exponent_matrix(const fsys::HyperringWords& w);

/// Fibonacci-family R pairs (p, q) with R_xx^1 = zeta_20^p, R_xx^x = zeta_20^q
/// passing both hexagon families, over all 400 candidates.
std::vector<std::pair<int, int>> fibonacci_hexagon_search(const fsys::ModularSystem& base);

/// Polynomial long division over Z (little-endian, monic divisor). Returns the
/// quotient; `remainder_zero` reports exactness.
std::vector<long> poly_divide(std::vector<long> num, const std::vector<long>& den,
                                   bool* remainder_zero);

}  // namespace oracle
