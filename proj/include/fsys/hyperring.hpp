#pragma once

#include <string>
#include <vector>

#include "fsys/lattice.hpp"
#include "fsys/modular_system.hpp"

namespace fsys {

/// T = {(a,b,u) : N_{ab}^u = 1}, lexicographic. Throws SchemaError when some
/// multiplicity exceeds 1.
std::vector<Triple> hyperring_triples(const FusionRing& ring);

/// One entry F_{abc}^u[(1 d 1);(1 e 1)] of a multiplicity-free system, read as
/// the word t_{ab}^d t_{dc}^u (t_{bc}^e t_{ae}^u)^{-1}.
struct HyperringCell {
  Label a, b, c, d, e, u;
  friend bool operator==(const HyperringCell&, const HyperringCell&) = default;
};

struct HyperringWords {
  std::vector<Triple> T;
  /// Every cell, in lexicographic order of (a,b,c,u,d,e).
  std::vector<HyperringCell> cells;
  std::vector<CycNumber> values;
  /// Exponent vector over T of each cell.
  std::vector<std::vector<int>> exponents;
  /// Indices into `cells` of the nonzero values.
  std::vector<size_t> nonzero;
};

/// Cells are kept as separate generators even when two share an exponent
/// vector; such pairs show up as kernel elements instead.
HyperringWords hyperring_words(const FusionSystem& s);

/// Integer basis of the relations among the nonzero words (vectors indexed by
/// position in `nonzero`).
IntMatrix kernel_basis(const HyperringWords& w);

/// prod_j F_{q_j}^{k_j} for every basis vector k.
std::vector<CycNumber> gauge_invariants(const HyperringWords& w, const IntMatrix& basis);

std::string cell_name(const FusionRing& ring, const HyperringCell& c);

enum class Verdict { equivalent, inequivalent, not_applicable };

std::string to_string(Verdict v);

struct EquivalenceResult {
  Verdict verdict = Verdict::not_applicable;
  std::string witness;
  size_t invariants = 0;
  /// Set for modular comparisons: the fusion verdict was "equivalent" and the
  /// R invariants agree, which does not prove equivalence of the braidings.
  bool braiding_partial = false;
  std::vector<std::string> notes;
};

/// Gauge equivalence of the F data. Lifts both systems to the lcm field. Throws
/// SchemaError when the rings differ.
EquivalenceResult decide_gauge_equiv(const FusionSystem& s1, const FusionSystem& s2);

/// Fusion verdict, then pivotal signs, R_{aa}^c and R_{ab}^c R_{ba}^c.
EquivalenceResult decide_gauge_equiv(const ModularSystem& m1, const ModularSystem& m2);

}  // namespace fsys
