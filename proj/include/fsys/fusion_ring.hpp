#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fsys/report.hpp"

namespace fsys {

/// Position of a label in the ordered label sequence.
using Label = int;

using Triple = std::array<Label, 3>;
using Quad = std::array<Label, 4>;

/// Labels, unit, duality involution and fusion multiplicities N_{ab}^c.
///
/// N is total over L x L x L. The F-block layout tables are derived from N at
/// construction: the rows of F_{abc}^u enumerate triples (i, e, j) with
/// 1 <= i <= N_{ab}^e and 1 <= j <= N_{ec}^u, the columns enumerate
/// (i', e', j') with 1 <= i' <= N_{ae'}^u and 1 <= j' <= N_{bc}^{e'}, both
/// ordered by (position of e, i, j).
class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::vector<std::string> labels, Label unit, std::vector<Label> dual,
             std::vector<int> multiplicities);

  size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name(Label a) const { return labels_[static_cast<size_t>(a)]; }
  std::optional<Label> find(const std::string& name) const;
  Label unit() const { return unit_; }
  Label dual(Label a) const { return dual_[static_cast<size_t>(a)]; }
  const std::vector<Label>& duals() const { return dual_; }

  int N(Label a, Label b, Label c) const { return mult_[index3(a, b, c)]; }
  const std::vector<int>& multiplicities() const { return mult_; }

  /// N_{abc}^u = sum_e N_{ab}^e N_{ec}^u.
  int N4(Label a, Label b, Label c, Label u) const { return block_dim_[index4(a, b, c, u)]; }
  /// Same count through the other bracketing, sum_e N_{ae}^u N_{bc}^e.
  int N4_right(Label a, Label b, Label c, Label u) const;

  /// Row offset of channel e inside F_{abc}^u, or -1 if e contributes nothing.
  int row_offset(Label a, Label b, Label c, Label u, Label e) const {
    return row_offset_[index4(a, b, c, u) * rank() + static_cast<size_t>(e)];
  }
  int col_offset(Label a, Label b, Label c, Label u, Label e) const {
    return col_offset_[index4(a, b, c, u) * rank() + static_cast<size_t>(e)];
  }
  /// Index of row (i, e, j) of F_{abc}^u; i and j are 1-based as in the formulas.
  size_t row(Label a, Label b, Label c, Label u, int i, Label e, int j) const {
    return static_cast<size_t>(row_offset(a, b, c, u, e) + (i - 1) * N(e, c, u) + (j - 1));
  }
  size_t col(Label a, Label b, Label c, Label u, int i, Label e, int j) const {
    return static_cast<size_t>(col_offset(a, b, c, u, e) + (i - 1) * N(b, c, e) + (j - 1));
  }

  bool is_multiplicity_free() const;
  bool is_commutative() const;
  int max_multiplicity() const;

  std::vector<Label> all_labels() const;

  friend bool operator==(const FusionRing& x, const FusionRing& y) {
    return x.labels_ == y.labels_ && x.unit_ == y.unit_ && x.dual_ == y.dual_ && x.mult_ == y.mult_;
  }

 private:
  size_t index3(Label a, Label b, Label c) const {
    const size_t n = rank();
    return (static_cast<size_t>(a) * n + static_cast<size_t>(b)) * n + static_cast<size_t>(c);
  }
  size_t index4(Label a, Label b, Label c, Label u) const {
    return index3(a, b, c) * rank() + static_cast<size_t>(u);
  }
  void build_layout();

  std::vector<std::string> labels_;
  Label unit_ = 0;
  std::vector<Label> dual_;
  std::vector<int> mult_;
  std::vector<int> block_dim_;
  std::vector<int> row_offset_;
  std::vector<int> col_offset_;
};

/// One row or column label (i, e, j) of an F-matrix (1-based multiplicity indices).
struct BasisTriple {
  int i = 1;
  Label e = 0;
  int j = 1;
  friend bool operator==(const BasisTriple&, const BasisTriple&) = default;
};

std::vector<BasisTriple> row_basis(const FusionRing& ring, const Quad& q);
std::vector<BasisTriple> col_basis(const FusionRing& ring, const Quad& q);

/// Checks the involution, unit, duality and associativity constraints on N.
CheckResult validate_ring(const FusionRing& ring);

/// Convenience builder: labels plus the list of nonzero (a, b, c, N) entries,
/// dual map derived from N_{ab}^1.
FusionRing make_ring(const std::vector<std::string>& labels, const std::string& unit,
                     const std::vector<std::tuple<std::string, std::string, std::string, int>>& rules);

}  // namespace fsys
