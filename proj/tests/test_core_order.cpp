#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace pospace;
using support::label_pairs;
using support::naive_closure;
using support::PairSet;
using support::pairs_of;

TEST(Bits, SetAlgebra) {
  auto a = Bits::of(70, {0, 3, 69});
  auto b = Bits::of(70, {3, 69});
  EXPECT_EQ(a.count(), 3U);
  EXPECT_TRUE(b.subset_of(a));
  EXPECT_FALSE(a.subset_of(b));
  EXPECT_EQ((a & b), b);
  EXPECT_EQ((a | b), a);
  EXPECT_EQ(a.indices(), (std::vector<std::size_t>{0, 3, 69}));
  EXPECT_TRUE(Bits(5).none());
  EXPECT_EQ(Bits::full(67).count(), 67U);
}

TEST(BitMatrix, TransitiveCloseMatchesFixpoint) {
  std::mt19937                       rng(7);
  std::string const                  letters = "abcdef";
  std::uniform_int_distribution<int> coin(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    PairSet gens;
    for (char x : letters) {
      for (char y : letters) {
        if (coin(rng) == 0) gens.insert({std::string(1, x), std::string(1, y)});
      }
    }
    auto closed = reflexive_transitive_closure(support::relation_of(letters, gens));
    EXPECT_EQ(label_pairs(closed), naive_closure(letters, gens));
  }
}

TEST(Closure, Examples) {
  auto empty = reflexive_transitive_closure(Relation(support::carrier_of("ab")));
  EXPECT_EQ(label_pairs(empty), pairs_of({"aa", "bb"}));

  auto chain = reflexive_transitive_closure(support::relation_of("abc", pairs_of({"ab", "bc"})));
  EXPECT_EQ(label_pairs(chain), pairs_of({"aa", "bb", "cc", "ab", "bc", "ac"}));

  auto full = Relation::full(support::carrier_of("abc"));
  EXPECT_EQ(reflexive_transitive_closure(full).relation(), full);
}

TEST(CheckPoset, Examples) {
  EXPECT_TRUE(check_poset(Relation::diagonal(support::carrier_of("a"))).has_value());

  auto sym = check_poset(support::relation_of("ab", pairs_of({"aa", "bb", "ab", "ba"})));
  ASSERT_FALSE(sym.has_value());
  EXPECT_EQ(sym.error().axiom, Axiom::antisymmetry);
  EXPECT_EQ(sym.error().x, 0U);
  EXPECT_EQ(sym.error().y, 1U);

  EXPECT_TRUE(check_poset(support::relation_of("ab", pairs_of({"aa", "bb", "ab"}))).has_value());
}

TEST(CheckPoset, WitnessesNameTheFailedAxiom) {
  auto c = support::carrier_of("abc");

  auto refl = check_preorder(support::relation_of("abc", pairs_of({"aa", "bb"})));
  ASSERT_FALSE(refl.has_value());
  EXPECT_EQ(refl.error().axiom, Axiom::reflexivity);
  EXPECT_EQ(refl.error().describe(c), "reflexivity violated at (c, c)");

  auto trans = check_preorder(support::relation_of("abc", pairs_of({"aa", "bb", "cc", "ab", "bc"})));
  ASSERT_FALSE(trans.has_value());
  EXPECT_EQ(trans.error().describe(c), "transitivity violated at (a, c) via b");

  EXPECT_THROW(as_poset(nabla(support::carrier_of("ab"))), precondition_error);
}

// Every relation on three points, classified by the library and by a direct
// reading of the axioms on label pairs.
TEST(CheckPoset, AgreesWithAxiomsOnAllRelationsOnThreePoints) {
  std::string const letters = "abc";
  std::vector<support::LabelPair> all;
  for (char x : letters) {
    for (char y : letters) all.push_back({std::string(1, x), std::string(1, y)});
  }
  std::size_t preorders = 0, posets = 0;
  for (unsigned mask = 0; mask < (1U << all.size()); ++mask) {
    PairSet r;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (mask >> k & 1U) r.insert(all[k]);
    }
    bool is_pre = naive_closure(letters, r) == r;
    bool is_po  = is_pre;
    for (auto const& [a, b] : r) is_po = is_po && (a == b || !r.count({b, a}));
    auto rel = support::relation_of(letters, r);
    EXPECT_EQ(check_preorder(rel).has_value(), is_pre);
    EXPECT_EQ(check_poset(rel).has_value(), is_po);
    preorders += is_pre;
    posets += is_po;
  }
  EXPECT_EQ(preorders, 29U);
  EXPECT_EQ(posets, 19U);
}

TEST(Symmetrize, Examples) {
  auto chain = support::chain(3);
  EXPECT_EQ(symmetrize(chain), Relation::diagonal(chain.carrier()));

  auto full = nabla(support::carrier_of("ab"));
  EXPECT_EQ(symmetrize(full), full.relation());

  auto p = support::preorder("abc", {"ab", "ba", "bc"});
  EXPECT_EQ(label_pairs(Preorder::from_trusted(symmetrize(p))), pairs_of({"aa", "bb", "cc", "ab", "ba"}));
  auto r = reflect(p);
  ASSERT_EQ(r.classes.size(), 2U);
  EXPECT_EQ(r.classes[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.classes[1], (std::vector<std::size_t>{2}));
}

TEST(Opposite, Examples) {
  auto chain = support::chain(2);
  EXPECT_EQ(label_pairs(opposite(chain)), pairs_of({"aa", "bb", "ba"}));

  auto disc = delta(support::carrier_of("abc"));
  EXPECT_EQ(opposite(disc), disc);

  auto n  = support::poset("abcd", {"ac", "bc", "bd"});
  PairSet reversed;
  for (auto const& [a, b] : label_pairs(n)) reversed.insert({b, a});
  EXPECT_EQ(label_pairs(opposite(n)), reversed);
  EXPECT_EQ(opposite(opposite(n)), n);
}

TEST(Closures, DownAndUp) {
  auto chain = support::chain(2);
  EXPECT_EQ(down_closure(chain, Bits::of(2, {1})), Bits::full(2));
  EXPECT_TRUE(down_closure(chain, Bits(2)).none());

  auto d  = support::diamond();
  auto dc = down_closure(d, support::subset_of(d.carrier(), {"l", "r"}));
  EXPECT_EQ(support::labels_in(d.carrier(), dc), (std::set<std::string>{"0", "l", "r"}));

  EXPECT_EQ(up_closure(chain, Bits::of(2, {0})), Bits::full(2));
  EXPECT_TRUE(is_up_set(chain, Bits::of(2, {1})));
  EXPECT_FALSE(is_up_set(chain, Bits::of(2, {0})));
  EXPECT_TRUE(is_down_set(chain, Bits::of(2, {0})));
}

TEST(CoveringRelation, Examples) {
  EXPECT_EQ(label_pairs(Preorder::from_trusted(covering_relation(support::chain(3)))), pairs_of({"ab", "bc"}));
  EXPECT_EQ(covering_relation(support::antichain(3)).pairs().size(), 0U);
  EXPECT_EQ(covering_relation(support::diamond()).pairs().size(), 4U);
}

TEST(CoveringRelation, ClosureRecoversOrderOnAllSmallPosets) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (auto const& p : enumerate_posets(n, true)) {
      auto    cover = covering_relation(p);
      PairSet gens;
      for (auto [x, y] : cover.pairs()) gens.insert({p.carrier().label(x), p.carrier().label(y)});
      std::string letters;
      for (auto const& l : p.carrier().labels()) letters += l;
      EXPECT_EQ(naive_closure(letters, gens), label_pairs(p));
    }
  }
}

TEST(Carrier, RejectsDuplicatesAndFindsLabels) {
  EXPECT_THROW(Carrier({"a", "a"}), precondition_error);
  auto c = Carrier::letters(28);
  EXPECT_EQ(c.label(25), "z");
  EXPECT_EQ(c.label(26), "x26");
  EXPECT_EQ(c.index_of("c"), 2U);
  EXPECT_FALSE(c.find("nope").has_value());
  EXPECT_THROW(c.index_of("nope"), precondition_error);
}

TEST(ClassifyMap, Examples) {
  auto chain = support::chain(2);
  auto id    = classify_map(MonotoneMap::identity(chain));
  EXPECT_TRUE(id.is_monotone && id.is_surjective && id.is_order_embedding);

  auto point = support::chain(1);
  auto k     = classify_map(support::map_of(chain, point, {"a", "a"}));
  EXPECT_TRUE(k.is_monotone);
  EXPECT_TRUE(k.is_surjective);
  EXPECT_FALSE(k.is_order_embedding);

  auto inc = classify_map(support::map_of(support::antichain(2), chain, {"a", "b"}));
  EXPECT_TRUE(inc.is_monotone);
  EXPECT_TRUE(inc.is_injective);
  EXPECT_FALSE(inc.is_order_embedding);
  ASSERT_TRUE(inc.embedding_witness.has_value());
}

TEST(MonotoneMap, ValidationAndComposition) {
  auto chain = support::chain(2);
  auto anti  = support::antichain(2);
  auto bad   = MonotoneMap::make(chain, anti, {0, 1});
  ASSERT_FALSE(bad.has_value());
  EXPECT_EQ(bad.error().kind, MapViolation::Kind::not_monotone);
  EXPECT_FALSE(MonotoneMap::make(chain, anti, {0, 2}).has_value());
  EXPECT_FALSE(MonotoneMap::make(chain, anti, {0}).has_value());
  EXPECT_THROW(MonotoneMap::checked(chain, anti, {0, 1}), precondition_error);

  auto three = support::chain(3);
  auto f     = support::map_of(chain, three, {"a", "c"});
  auto g     = support::map_of(three, chain, {"a", "a", "b"});
  EXPECT_EQ(compose(g, f).table(), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(compose(f, f), precondition_error);
  EXPECT_TRUE(MonotoneMap::is_continuous());
  EXPECT_TRUE(Preorder::is_closed());
}
