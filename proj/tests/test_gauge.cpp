#include <gtest/gtest.h>

#include <random>

#include "fsys/catalog.hpp"
#include "fsys/errors.hpp"
#include "oracles.hpp"

using namespace fsys;

namespace {

FusionRing multiplicity_two_ring() {
  return make_ring({"1", "x"}, "1", {{"1", "1", "1", 1}, {"1", "x", "x", 1}, {"x", "1", "x", 1}, {"x", "x", "1", 1},
                                     {"x", "x", "x", 2}});
}

// Arbitrary invertible blocks; no coherence is needed for the action itself.
FusionSystem random_blocks(const FusionRing& r, FieldPtr f, unsigned seed) {
  std::mt19937 rng(seed);
  FusionSystem s = FusionSystem::trivial(r, f);
  for (auto& [q, m] : s.F) {
    do {
      for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) m(i, j) = CycNumber(f, Rational(static_cast<long>(rng() % 9) - 4));
    } while (!is_invertible(m));
  }
  return s;
}

}  // namespace

TEST(Gauge, IdentityFixesEverything) {
  for (const auto& name : catalog_names(true)) {
    const SystemFile f = catalog(name);
    const GaugeElement id = identity_gauge(f.system.ring(), f.system.field());
    EXPECT_TRUE(is_normalized(id, f.system.ring()));
    EXPECT_EQ(apply_gauge(f.fusion(), id), f.fusion()) << name;
    if (f.modular) {
      EXPECT_EQ(apply_gauge(f.system, id), f.system) << name;
    }
  }
}

TEST(Gauge, CharacterGaugeFixesFandR) {
  const ModularSystem m = catalog("toric-code").system;
  const auto q = m.field();
  const std::vector<CycNumber> zeta = {CycNumber(q, Rational(1)), CycNumber(q, Rational(2)),
                                       CycNumber(q, Rational(-3)), CycNumber(q, Rational(5, 7))};
  EXPECT_EQ(apply_gauge(m, character_gauge(m.ring(), zeta)), m);
  const FusionSystem fib = catalog("fibonacci").fusion();
  const GaugeElement g = character_gauge(fib.ring, {CycNumber::one(fib.field), CycNumber(fib.field, Rational(3))});
  EXPECT_EQ(apply_gauge(fib, g), fib);
}

TEST(Gauge, ScalarActionOnFibonacci) {
  // With g_{xx}^1 = alpha and g_{xx}^x = beta each cell scales by
  // g_{ab}^d g_{dc}^u / (g_{bc}^e g_{ae}^u).
  const FusionSystem s = catalog("fibonacci").fusion();
  const auto f = s.field;
  const CycNumber alpha(f, Rational(2)), beta(f, Rational(3));
  GaugeElement g = identity_gauge(s.ring, f);
  g.g.at(Triple{1, 1, 0}) = FieldMatrix::scalar(alpha, 1);
  g.g.at(Triple{1, 1, 1}) = FieldMatrix::scalar(beta, 1);
  const FusionSystem t = apply_gauge(s, g);
  const FieldMatrix& a = s.F.at(Quad{1, 1, 1, 1});
  const FieldMatrix& b = t.F.at(Quad{1, 1, 1, 1});
  EXPECT_EQ(b(0, 0), a(0, 0));
  EXPECT_EQ(b(0, 1), a(0, 1) * alpha / (beta * beta));
  EXPECT_EQ(b(1, 0), a(1, 0) * beta * beta / alpha);
  EXPECT_EQ(b(1, 1), a(1, 1));
  // F_{xxx}^1 through d = x, e = x: beta alpha / (beta alpha).
  EXPECT_EQ(t.F.at(Quad{1, 1, 1, 0}), s.F.at(Quad{1, 1, 1, 0}));
}

TEST(Gauge, RandomGaugeIsDeterministic) {
  const FusionRing r = catalog("ising").fusion().ring;
  const auto f = CycField::get(8);
  EXPECT_EQ(random_gauge(r, f, 42), random_gauge(r, f, 42));
  EXPECT_NE(random_gauge(r, f, 42), random_gauge(r, f, 43));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_gauge(r, f, seed);
    EXPECT_TRUE(is_normalized(g, r));
    for (const auto& [t, m] : g.g) EXPECT_TRUE(is_invertible(m));
  }
}

TEST(Gauge, FibonacciSeedZeroShape) {
  const FusionSystem s = catalog("fibonacci").fusion();
  const auto g = random_gauge(s.ring, s.field, 0);
  EXPECT_EQ(g.g.size(), 5u);
  for (const auto& [t, m] : g.g) {
    EXPECT_EQ(m.rows(), 1u);
    for (const auto& x : m.entries()) {
      EXPECT_TRUE(x.is_rational());
      EXPECT_LE(abs(x.constant_term()), 3);
    }
  }
}

TEST(Gauge, CompositionOnMultiplicityTwoRing) {
  const FusionRing r = multiplicity_two_ring();
  const auto f = CycField::get(1);
  const FusionSystem s = random_blocks(r, f, 5);
  ASSERT_EQ(s.F.at(Quad{1, 1, 1, 1}).rows(), 5u);
  const auto g = random_gauge(r, f, 11, false);
  const auto h = random_gauge(r, f, 12, false);
  EXPECT_EQ(g.g.at(Triple{1, 1, 1}).rows(), 2u);
  EXPECT_EQ(apply_gauge(apply_gauge(s, g), h), apply_gauge(s, compose(g, h)));
}

TEST(Gauge, CompositionWithBraiding) {
  const ModularSystem m = catalog("fibonacci-modular").system;
  const auto g = random_gauge(m.ring(), m.field(), 3, false);
  const auto h = random_gauge(m.ring(), m.field(), 4, false);
  EXPECT_EQ(apply_gauge(apply_gauge(m, g), h).R, apply_gauge(m, compose(g, h)).R);
}

TEST(Gauge, GaugedSystemsVerify) {
  for (const auto& name : catalog_names(true)) {
    const SystemFile f = catalog(name);
    for (std::uint64_t seed : {1u, 7u}) {
      const auto g = random_gauge(f.system.ring(), f.system.field(), seed);
      if (f.modular) {
        const ModularSystem m = apply_gauge(f.system, g);
        EXPECT_EQ(verify_modular(m).outcome, Outcome::pass) << name;
        EXPECT_EQ(m.sqrt_u.has_value(), f.system.sqrt_u.has_value()) << name;
      } else {
        EXPECT_EQ(verify_fusion(apply_gauge(f.fusion(), g)).outcome, Outcome::pass) << name;
      }
    }
  }
}

TEST(Gauge, NonNormalizedGaugeStillVerifiesFusion) {
  const FusionSystem s = catalog("ising").fusion();
  const auto g = random_gauge(s.ring, s.field, 9, false);
  const Report rep = verify_fusion(apply_gauge(s, g));
  EXPECT_EQ(rep.find("pentagon")->status, Status::pass);
  EXPECT_EQ(rep.find("duality")->status, Status::pass);
}

TEST(Gauge, SquareRootsDroppedWhenDualityScalarsMove) {
  const ModularSystem m = catalog("z2-semion-modular").system;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_gauge(m.ring(), m.field(), seed, false);
    const ModularSystem t = apply_gauge(m, g);
    const bool same_u = duality_scalars(t.base) == duality_scalars(m.base);
    EXPECT_EQ(t.sqrt_u.has_value(), same_u) << seed;
  }
}

TEST(Gauge, SingularGaugeThrows) {
  const FusionSystem s = catalog("fibonacci").fusion();
  GaugeElement g = identity_gauge(s.ring, s.field);
  g.g.at(Triple{1, 1, 1}) = FieldMatrix::scalar(CycNumber::zero(s.field), 1);
  EXPECT_THROW(apply_gauge(s, g), SingularMatrix);
  g.g.erase(Triple{1, 1, 1});
  EXPECT_THROW(apply_gauge(s, g), SchemaError);
}

TEST(Gauge, ToricAutomorphisms) {
  const ModularSystem m = catalog("toric-code").system;
  const auto auts = enumerate_automorphisms(m.ring());
  EXPECT_EQ(auts.size(), 6u);
  EXPECT_EQ(auts.front().perm, (std::vector<Label>{0, 1, 2, 3}));
  for (const auto& phi : auts) {
    const ModularSystem t = apply_relabeling(m, phi);
    EXPECT_EQ(verify_modular(t).outcome, Outcome::pass);
  }
  // Swapping e and m maps the bicharacter to its transpose.
  const ModularSystem swapped = apply_relabeling(m, RingAut{{0, 2, 1, 3}});
  EXPECT_EQ(swapped.R.at(Triple{1, 2, 3}), m.R.at(Triple{2, 1, 3}));
  EXPECT_THROW(apply_relabeling(m.base, RingAut{{1, 0, 2, 3}}), SchemaError);
}

TEST(Gauge, FibonacciHasOnlyIdentityAutomorphism) {
  const auto auts = enumerate_automorphisms(catalog("fibonacci").fusion().ring);
  ASSERT_EQ(auts.size(), 1u);
  EXPECT_EQ(auts[0].perm, (std::vector<Label>{0, 1}));
  EXPECT_EQ(enumerate_automorphisms(catalog("ising").fusion().ring).size(), 1u);
}

TEST(Hyperring, TripleCounts) {
  EXPECT_EQ(hyperring_triples(catalog("fibonacci").fusion().ring).size(), 5u);
  EXPECT_EQ(hyperring_triples(catalog("z2-trivial").fusion().ring).size(), 4u);
  EXPECT_EQ(hyperring_triples(catalog("ising").fusion().ring).size(), 10u);
  EXPECT_EQ(hyperring_triples(catalog("toric-code").fusion().ring).size(), 16u);
  EXPECT_THROW(hyperring_triples(multiplicity_two_ring()), SchemaError);
}

TEST(Hyperring, FibonacciWordValues) {
  const FusionSystem s = catalog("fibonacci").fusion();
  const auto w = hyperring_words(s);
  const FieldMatrix& m = s.F.at(Quad{1, 1, 1, 1});
  std::vector<CycNumber> expected = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
  size_t unit_cells = 0;
  for (size_t i = 0; i < w.cells.size(); ++i) {
    const auto& c = w.cells[i];
    if (c.a == 1 && c.b == 1 && c.c == 1 && c.u == 1) {
      EXPECT_EQ(w.values[i], expected[static_cast<size_t>(2 * c.d + c.e)]);
    } else {
      EXPECT_TRUE(w.values[i].is_one()) << cell_name(s.ring, c);
      ++unit_cells;
    }
  }
  EXPECT_EQ(w.cells.size(), unit_cells + 4);
  EXPECT_EQ(w.nonzero.size(), w.cells.size());
}

TEST(Hyperring, KernelMatchesOracleOnAllCatalogEntries) {
  for (const auto& name : catalog_names(false)) {
    const auto w = hyperring_words(catalog(name).fusion());
    const IntMatrix kb = kernel_basis(w);
    const IntMatrix ref = oracle::saturated_nullspace(oracle::exponent_matrix(w), w.nonzero.size());
    EXPECT_TRUE(oracle::same_lattice(kb, ref, w.nonzero.size())) << name;
    // Every basis vector is a relation.
    const IntMatrix M = oracle::exponent_matrix(w);
    for (const auto& k : kb)
      for (const auto& row : M) {
        Integer dot = 0;
        for (size_t j = 0; j < k.size(); ++j) dot += row[j] * k[j];
        EXPECT_EQ(dot, 0);
      }
  }
}

TEST(Hyperring, OracleDetectsNonSaturatedLattice) {
  // {2 e1} spans a sublattice of the kernel of (0 1).
  const IntMatrix M = {{0, 1}};
  const IntMatrix ref = oracle::saturated_nullspace(M, 2);
  EXPECT_TRUE(oracle::same_lattice(ref, {{1, 0}}, 2));
  EXPECT_FALSE(oracle::same_lattice({{2, 0}}, ref, 2));
  EXPECT_TRUE(oracle::same_lattice(integer_kernel(M, 2), ref, 2));
}

TEST(Hyperring, HermiteNormalForm) {
  const IntMatrix input = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  const IntMatrix h = hermite_normal_form(input, 3);
  EXPECT_TRUE(oracle::same_lattice(h, input, 3));
  // Triangular with positive pivots, so the diagonal product is |det input| = 624.
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h[0][0] * h[1][1] * h[2][2], 624);
  for (size_t i = 0; i < h.size(); ++i) {
    size_t p = 0;
    while (h[i][p] == 0) ++p;
    EXPECT_GT(h[i][p], 0);
    for (size_t r = 0; r < i; ++r) {
      EXPECT_GE(h[r][p], 0);
      EXPECT_LT(h[r][p], h[i][p]);
    }
  }
  EXPECT_EQ(h, hermite_normal_form(h, 3));
}

TEST(Hyperring, InvariantsAreGaugeInvariant) {
  for (const char* name : {"fibonacci", "ising", "z2-semion", "toric-code"}) {
    const FusionSystem s = catalog(name).fusion();
    const auto w = hyperring_words(s);
    const IntMatrix basis = kernel_basis(w);
    const auto base = gauge_invariants(w, basis);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = random_gauge(s.ring, s.field, seed, false);
      EXPECT_EQ(gauge_invariants(hyperring_words(apply_gauge(s, g)), basis), base) << name << " " << seed;
    }
  }
}

TEST(Equivalence, Properties) {
  const FusionSystem s = catalog("ising").fusion();
  const FusionSystem a = apply_gauge(s, random_gauge(s.ring, s.field, 1, false));
  const FusionSystem b = apply_gauge(a, random_gauge(s.ring, s.field, 2, false));
  EXPECT_EQ(decide_gauge_equiv(s, s).verdict, Verdict::equivalent);
  EXPECT_EQ(decide_gauge_equiv(a, s).verdict, Verdict::equivalent);
  EXPECT_EQ(decide_gauge_equiv(s, b).verdict, Verdict::equivalent);
  const FusionSystem fib = catalog("fibonacci").fusion();
  const FusionSystem yl = catalog("yang-lee").fusion();
  const auto r1 = decide_gauge_equiv(fib, yl);
  const auto r2 = decide_gauge_equiv(yl, fib);
  EXPECT_EQ(r1.verdict, Verdict::inequivalent);
  EXPECT_EQ(r2.verdict, Verdict::inequivalent);
  EXPECT_NE(r1.witness.find("invariant"), std::string::npos);
}

TEST(Equivalence, Z2CocyclesDistinguished) {
  const auto res = decide_gauge_equiv(catalog("z2-trivial").fusion(), catalog("z2-semion").fusion());
  EXPECT_EQ(res.verdict, Verdict::inequivalent);
}

TEST(Equivalence, MixedFieldsAreLifted) {
  const FusionSystem fib = catalog("fibonacci").fusion();
  EXPECT_EQ(decide_gauge_equiv(fib, lift_system(fib, 20)).verdict, Verdict::equivalent);
}

TEST(Equivalence, MultiplicityNotApplicable) {
  const FusionRing r = multiplicity_two_ring();
  const FusionSystem s = random_blocks(r, CycField::get(1), 1);
  const auto res = decide_gauge_equiv(s, s);
  EXPECT_EQ(res.verdict, Verdict::not_applicable);
  EXPECT_FALSE(res.notes.empty());
}

TEST(Equivalence, RingMismatchThrows) {
  EXPECT_THROW(decide_gauge_equiv(catalog("fibonacci").fusion(), catalog("z2-trivial").fusion()), SchemaError);
}

TEST(Equivalence, ZeroPatternMismatch) {
  const FusionSystem s = catalog("su2-level2").fusion();
  FusionSystem t = s;
  const auto f = s.field;
  FieldMatrix m(f, 2, 2);
  m(0, 0) = CycNumber::zero(f);
  m(0, 1) = CycNumber::one(f);
  m(1, 0) = CycNumber::one(f);
  m(1, 1) = CycNumber::zero(f);
  t.F.at(Quad{1, 1, 1, 1}) = m;
  const auto res = decide_gauge_equiv(s, t);
  EXPECT_EQ(res.verdict, Verdict::inequivalent);
  EXPECT_NE(res.witness.find("zero pattern"), std::string::npos);
}

TEST(Equivalence, ModularComparison) {
  const ModularSystem m = catalog("fibonacci-modular").system;
  const ModularSystem g = apply_gauge(m, random_gauge(m.ring(), m.field(), 5));
  const auto same = decide_gauge_equiv(m, g);
  EXPECT_EQ(same.verdict, Verdict::equivalent);
  EXPECT_TRUE(same.braiding_partial);
  const ModularSystem conj = twist_system(m, 19);
  const auto diff = decide_gauge_equiv(m, conj);
  EXPECT_EQ(diff.verdict, Verdict::inequivalent);
  EXPECT_NE(diff.witness.find("R_{xx}"), std::string::npos);
  ModularSystem flipped = m;
  flipped.epsilon = {1, -1};
  EXPECT_NE(decide_gauge_equiv(m, flipped).witness.find("pivotal"), std::string::npos);
}
