#include "fsys/fusion_ring.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "fsys/errors.hpp"

namespace fsys {

FusionRing::FusionRing(std::vector<std::string> labels, Label unit, std::vector<Label> dual,
                       std::vector<int> multiplicities)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)), mult_(std::move(multiplicities)) {
  const size_t n = labels_.size();
  if (dual_.size() != n) throw SchemaError("dual map must cover every label");
  if (mult_.size() != n * n * n) throw SchemaError("multiplicity table has the wrong size");
  if (n > 0 && (unit_ < 0 || static_cast<size_t>(unit_) >= n)) throw SchemaError("unit is not a label");
  for (auto d : dual_)
    if (d < 0 || static_cast<size_t>(d) >= n) throw SchemaError("dual maps outside the label set");
  for (auto m : mult_)
    if (m < 0) throw SchemaError("negative fusion multiplicity");
  build_layout();
}

std::optional<Label> FusionRing::find(const std::string& name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Label>(it - labels_.begin());
}

void FusionRing::build_layout() {
  const size_t n = rank();
  block_dim_.assign(n * n * n * n, 0);
  row_offset_.assign(n * n * n * n * n, -1);
  col_offset_.assign(n * n * n * n * n, -1);
  for (Label a = 0; a < static_cast<Label>(n); ++a)
    for (Label b = 0; b < static_cast<Label>(n); ++b)
      for (Label c = 0; c < static_cast<Label>(n); ++c)
        for (Label u = 0; u < static_cast<Label>(n); ++u) {
          const size_t q = index4(a, b, c, u);
          int rows = 0;
          int cols = 0;
          for (Label e = 0; e < static_cast<Label>(n); ++e) {
            const int r = N(a, b, e) * N(e, c, u);
            if (r > 0) {
              row_offset_[q * n + static_cast<size_t>(e)] = rows;
              rows += r;
            }
            const int k = N(a, e, u) * N(b, c, e);
            if (k > 0) {
              col_offset_[q * n + static_cast<size_t>(e)] = cols;
              cols += k;
            }
          }
          block_dim_[q] = rows;
        }
}

int FusionRing::N4_right(Label a, Label b, Label c, Label u) const {
  int total = 0;
  for (Label e = 0; e < static_cast<Label>(rank()); ++e) total += N(a, e, u) * N(b, c, e);
  return total;
}

bool FusionRing::is_multiplicity_free() const { return max_multiplicity() <= 1; }

int FusionRing::max_multiplicity() const {
  return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
}

bool FusionRing::is_commutative() const {
  for (Label a = 0; a < static_cast<Label>(rank()); ++a)
    for (Label b = 0; b < static_cast<Label>(rank()); ++b)
      for (Label c = 0; c < static_cast<Label>(rank()); ++c)
        if (N(a, b, c) != N(b, a, c)) return false;
  return true;
}

std::vector<Label> FusionRing::all_labels() const {
  std::vector<Label> out(rank());
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Label>(i);
  return out;
}

std::vector<BasisTriple> row_basis(const FusionRing& ring, const Quad& q) {
  const auto [a, b, c, u] = q;
  std::vector<BasisTriple> out;
  for (Label e = 0; e < static_cast<Label>(ring.rank()); ++e)
    for (int i = 1; i <= ring.N(a, b, e); ++i)
      for (int j = 1; j <= ring.N(e, c, u); ++j) out.push_back({i, e, j});
  return out;
}

std::vector<BasisTriple> col_basis(const FusionRing& ring, const Quad& q) {
  const auto [a, b, c, u] = q;
  std::vector<BasisTriple> out;
  for (Label e = 0; e < static_cast<Label>(ring.rank()); ++e)
    for (int i = 1; i <= ring.N(a, e, u); ++i)
      for (int j = 1; j <= ring.N(b, c, e); ++j) out.push_back({i, e, j});
  return out;
}

CheckResult validate_ring(const FusionRing& ring) {
  CheckResult res;
  res.name = "ring";
  const auto n = static_cast<Label>(ring.rank());
  if (n == 0) {
    res.fail("label set is empty (unit missing)");
    return res;
  }
  const Label one = ring.unit();
  auto nm = [&](Label a) { return ring.name(a); };

  ++res.instances;
  if (ring.dual(one) != one) res.fail("unit is not self-dual: 1* = " + nm(ring.dual(one)));
  for (Label a = 0; a < n; ++a) {
    ++res.instances;
    if (ring.dual(ring.dual(a)) != a) res.fail("dual is not an involution at " + nm(a));
  }
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b) {
      const int delta = a == b ? 1 : 0;
      res.instances += 2;
      if (ring.N(one, a, b) != delta)
        res.fail("unit law N_{1 a}^b = delta_ab fails at (a,b)=(" + nm(a) + "," + nm(b) + ")");
      if (ring.N(a, one, b) != delta)
        res.fail("unit law N_{a 1}^b = delta_ab fails at (a,b)=(" + nm(a) + "," + nm(b) + ")");
      ++res.instances;
      if (ring.N(a, b, one) != (ring.dual(a) == b ? 1 : 0))
        res.fail("duality law N_{ab}^1 = delta_{a* b} fails at (a,b)=(" + nm(a) + "," + nm(b) + ")");
    }
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (Label u = 0; u < n; ++u) {
          ++res.instances;
          const int left = ring.N4(a, b, c, u);
          const int right = ring.N4_right(a, b, c, u);
          if (left != right) {
            std::ostringstream os;
            os << "associativity fails at (a,b,c,u)=(" << nm(a) << "," << nm(b) << "," << nm(c) << ","
               << nm(u) << "): " << left << " != " << right;
            res.fail(os.str());
          }
        }
  return res;
}

FusionRing make_ring(const std::vector<std::string>& labels, const std::string& unit,
                     const std::vector<std::tuple<std::string, std::string, std::string, int>>& rules) {
  const size_t n = labels.size();
  auto pos = [&](const std::string& s) {
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) throw SchemaError("unknown label '" + s + "'");
    return static_cast<Label>(it - labels.begin());
  };
  std::vector<int> mult(n * n * n, 0);
  for (const auto& [a, b, c, m] : rules)
    mult[(static_cast<size_t>(pos(a)) * n + static_cast<size_t>(pos(b))) * n + static_cast<size_t>(pos(c))] = m;
  const Label one = pos(unit);
  std::vector<Label> dual(n, 0);
  for (size_t a = 0; a < n; ++a) {
    dual[a] = static_cast<Label>(a);
    for (size_t b = 0; b < n; ++b)
      if (mult[(a * n + b) * n + static_cast<size_t>(one)] > 0) dual[a] = static_cast<Label>(b);
  }
  return FusionRing(labels, one, std::move(dual), std::move(mult));
}

}  // namespace fsys
