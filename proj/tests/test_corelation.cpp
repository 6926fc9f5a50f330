#include <gtest/gtest.h>

#include "support.hpp"

using namespace pospace;

namespace {

  // Coproduct order on X + X plus the given crossing pairs, closed.
  CoRelation with_cross_pairs(Poset const& x, std::vector<TaggedPair> const& cross) {
    auto          doubled = coproduct(x, x);
    TaggedCarrier tc{x.size()};
    auto          rel = doubled.relation();
    for (auto const& p : cross) rel.add(tc.index(p.from), tc.index(p.to));
    return CoRelation::make(x, reflexive_transitive_closure(rel));
  }

  CoRelation coproduct_order(Poset const& x) { return CoRelation::make(x, coproduct(x, x)); }

  // Direct reading of the effectiveness condition, written independently of
  // is_effective.
  bool effective_by_definition(CoRelation const& c) {
    auto n = c.base().size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (int i = 0; i < 2; ++i) {
          if (!c.holds(a, i, b, 1 - i)) continue;
          bool ok = false;
          for (std::size_t z = 0; z < n; ++z) {
            ok = ok
                 || (c.base().leq(a, z) && c.base().leq(z, b) && c.holds(z, 0, z, 1) && c.holds(z, 1, z, 0));
          }
          if (!ok) return false;
        }
      }
    }
    return true;
  }

}  // namespace

TEST(CoRelation, MakeValidatesCarrierAndExtension) {
  auto two = support::chain(2);
  EXPECT_THROW(CoRelation::make(two, two), precondition_error);
  EXPECT_THROW(CoRelation::make(two, delta(coproduct(two, two).carrier())), precondition_error);
  auto c = coproduct_order(two);
  EXPECT_EQ(c.describe({{1, 0}, {0, 1}}), "(b,0) <= (a,1)");
}

TEST(CoReflexive, Examples) {
  auto two = support::chain(2);
  EXPECT_TRUE(is_coreflexive(coproduct_order(two)).holds);

  auto full = CoRelation::make(two, nabla(coproduct(two, two).carrier()));
  auto r    = is_coreflexive(full);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(full.describe(*r.witness), "(b,0) <= (a,1)");

  for (std::size_t n = 0; n <= 3; ++n) {
    for (auto const& x : enumerate_posets(n, true)) {
      for (auto const& y : enumerate_subsets(n)) EXPECT_TRUE(is_coreflexive(corelation_of_subset(x, y)).holds);
    }
  }
}

TEST(CoSymmetric, Examples) {
  auto three = support::chain(3);
  EXPECT_TRUE(is_cosymmetric(coproduct_order(three)).holds);

  auto one = with_cross_pairs(three, {{{0, 0}, {2, 1}}});
  auto r   = is_cosymmetric(one);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(one.describe(*r.witness), "(a,0) <= (c,1)");

  EXPECT_TRUE(is_cosymmetric(chain_counterexample()).holds);
}

TEST(CoTransitive, Examples) {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (auto const& x : enumerate_posets(n, true)) {
      for (auto const& y : enumerate_subsets(n)) EXPECT_TRUE(is_cotransitive(corelation_of_subset(x, y)).holds);
    }
  }

  auto c = chain_counterexample();
  auto r = is_cotransitive(c);
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.precondition_failed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(c.describe(*r.witness), "(a,0) <= (c,1)");

  EXPECT_TRUE(is_cotransitive(coproduct_order(support::chain(3))).holds);

  auto two  = support::chain(2);
  auto full = CoRelation::make(two, nabla(coproduct(two, two).carrier()));
  EXPECT_TRUE(is_cotransitive(full).precondition_failed);
}

// The counterexample fails co-transitivity because the only candidate
// interpolant z = c is not identified with its twin.
TEST(CoTransitive, CounterexampleCandidateScan) {
  auto c = chain_counterexample();
  for (std::size_t z = 0; z < 3; ++z) {
    bool interpolates = c.holds(0, 0, z, 1) && c.holds(z, 0, 2, 1);
    EXPECT_EQ(interpolates, false) << "z = " << z;
  }
  EXPECT_TRUE(c.holds(0, 0, 2, 1));
  EXPECT_FALSE(c.holds(2, 0, 2, 1));
}

TEST(EquivalenceCoRelation, Diagnosis) {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (auto const& x : enumerate_posets(n, true)) {
      for (auto const& y : enumerate_subsets(n)) EXPECT_TRUE(is_equivalence_corelation(corelation_of_subset(x, y)).holds);
    }
  }
  auto d = is_equivalence_corelation(chain_counterexample());
  EXPECT_FALSE(d.holds);
  EXPECT_EQ(d.failed, CoAxiom::cotransitivity);

  auto two  = support::chain(2);
  auto full = is_equivalence_corelation(CoRelation::make(two, nabla(coproduct(two, two).carrier())));
  EXPECT_EQ(full.failed, CoAxiom::coreflexivity);
  EXPECT_EQ(to_string(full.failed), "co-reflexivity");
}

TEST(Effective, Examples) {
  auto c   = chain_counterexample();
  auto bad = is_effective(c);
  ASSERT_FALSE(bad.has_value());
  EXPECT_EQ(c.describe(bad.error()), "(a,0) <= (c,1)");

  auto three = support::chain(3);
  auto all   = corelation_of_subset(three, Bits::full(3));
  auto cert  = is_effective(all);
  ASSERT_TRUE(cert.has_value());
  for (auto const& e : cert->entries) {
    EXPECT_EQ(e.z, e.x);
    EXPECT_TRUE(three.leq(e.x, e.z) && three.leq(e.z, e.y));
  }
  EXPECT_EQ(cert->entries.size(), 12U);  // 6 pairs x <= y, two tag orders each
}

// Every co-relation extending the coproduct order on small posets: the
// certificate search agrees with the definition, and certificates are valid.
TEST(Effective, AgreesWithDefinitionOnAllPreordersOverXPlusX) {
  for (std::size_t n = 0; n <= 2; ++n) {
    for (auto const& x : enumerate_posets(n, true)) {
      auto doubled = coproduct(x, x);
      for_each_preorder_extending(doubled, [&](Preorder const& pre) {
        auto c    = CoRelation::from_trusted(x, doubled, pre);
        auto cert = is_effective(c);
        EXPECT_EQ(cert.has_value(), effective_by_definition(c));
        if (!cert) return;
        for (auto const& e : cert->entries) {
          EXPECT_TRUE(c.holds(e.x, e.tag, e.y, 1 - e.tag));
          EXPECT_TRUE(x.leq(e.x, e.z) && x.leq(e.z, e.y));
          EXPECT_TRUE(c.equivalent({e.z, 0}, {e.z, 1}));
        }
      });
    }
  }
}

TEST(Phi, Examples) {
  auto three = support::chain(3);
  EXPECT_TRUE(phi(coproduct_order(three)).none());
  for (auto const& y : enumerate_subsets(3)) EXPECT_EQ(phi(corelation_of_subset(three, y)), y);

  auto id = MonotoneMap::identity(three);
  auto ck = cokernel_pair(id);
  EXPECT_EQ(phi(CoRelation::make(three, ck.preorder())), Bits::full(3));
}

TEST(CorelationOfSubset, Examples) {
  auto two  = support::chain(2);
  auto none = corelation_of_subset(two, Bits(2));
  EXPECT_EQ(none, coproduct_order(two));

  auto          a  = corelation_of_subset(two, Bits::of(2, {0}));
  TaggedCarrier tc{2};
  std::size_t   cross = 0;
  for (auto [p, q] : a.preorder().relation().pairs()) cross += tc.point(p).tag != tc.point(q).tag;
  EXPECT_EQ(cross, 4U);

  auto all = corelation_of_subset(two, Bits::full(2));
  EXPECT_EQ(all.preorder(), preorder_of_map(codiagonal(two)).preorder());
}

TEST(MaximalWitness, Examples) {
  auto two = support::chain(2);
  EXPECT_EQ(maximal_witness(corelation_of_subset(two, Bits::of(2, {0})), 0, 1, 0), 0U);
  EXPECT_EQ(maximal_witness(corelation_of_subset(two, Bits::full(2)), 0, 1, 0), 1U);

  auto one = support::chain(1);
  EXPECT_EQ(maximal_witness(corelation_of_subset(one, Bits::full(1)), 0, 0, 1), 0U);

  EXPECT_THROW(maximal_witness(corelation_of_subset(two, Bits(2)), 0, 1, 0), precondition_error);
  EXPECT_THROW(maximal_witness(chain_counterexample(), 0, 2, 0), precondition_error);
}

// The returned z is maximal in Omega, and every maximal element of Omega is a
// valid witness.
TEST(MaximalWitness, MaximalElementsOfOmegaAreWitnesses) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& x : enumerate_posets(n, true)) {
      for (auto const& y : enumerate_subsets(n)) {
        auto c = corelation_of_subset(x, y);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            for (int i = 0; i < 2; ++i) {
              if (!c.holds(a, i, b, 1 - i)) continue;
              auto z = maximal_witness(c, a, b, i);
              for (std::size_t u = 0; u < n; ++u) {
                bool in_omega = c.holds(a, i, u, 1 - i) && c.holds(u, i, b, 1 - i);
                if (!in_omega) continue;
                EXPECT_FALSE(u != z && x.leq(z, u));
                bool maximal = true;
                for (std::size_t v = 0; v < n; ++v) {
                  if (v != u && c.holds(a, i, v, 1 - i) && c.holds(v, i, b, 1 - i) && x.leq(u, v)) maximal = false;
                }
                if (maximal) {
                  EXPECT_TRUE(c.equivalent({u, 0}, {u, 1}));
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST(NegativeControls, FullRelationOnDoubledTwoChain) {
  auto full = full_on_doubled_two_chain();
  auto r    = is_coreflexive(full);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(full.describe(*r.witness), "(b,0) <= (a,1)");
}
