#include "fsys/lattice.hpp"

#include <utility>

namespace fsys {

namespace {

// Unimodular row reduction on columns [0, width): echelon form
// with positive pivots. Returns the number of pivot rows.
size_t echelon(IntMatrix& rows, size_t width, std::vector<size_t>* pivots) {
  size_t pr = 0;
  for (size_t col = 0; col < width && pr < rows.size(); ++col) {
    while (true) {
      size_t best = rows.size();
      for (size_t r = pr; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pr], rows[best]);
      bool clean = true;
      for (size_t r = pr + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pr][col].get_mpz_t());
        for (size_t k = col; k < rows[r].size(); ++k) rows[r][k] -= q * rows[pr][k];
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[pr][col] == 0) continue;
    if (rows[pr][col] < 0)
      for (auto& x : rows[pr]) x = -x;
    if (pivots) pivots->push_back(col);
    ++pr;
  }
  return pr;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows, size_t width) {
  std::vector<size_t> pivots;
  const size_t rank = echelon(rows, width, &pivots);
  rows.resize(rank);
  for (size_t p = 0; p < rank; ++p) {
    const size_t col = pivots[p];
    for (size_t r = 0; r < p; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[p][col].get_mpz_t());
      if (q == 0) continue;
      for (size_t k = 0; k < width; ++k) rows[r][k] -= q * rows[p][k];
    }
  }
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& M, size_t cols) {
  const size_t m = M.size();
  // Augmented [M^T | I]; rows whose left block vanishes after reduction carry
  // the kernel in their right block.
  IntMatrix aug(cols, IntVector(m + cols, 0));
  for (size_t j = 0; j < cols; ++j) {
    for (size_t i = 0; i < m; ++i) aug[j][i] = M[i][j];
    aug[j][m + j] = 1;
  }
  const size_t rank = echelon(aug, m, nullptr);
  IntMatrix kernel;
  for (size_t r = rank; r < aug.size(); ++r) kernel.emplace_back(aug[r].begin() + static_cast<long>(m), aug[r].end());
  return hermite_normal_form(std::move(kernel), cols);
}

}  // namespace fsys
