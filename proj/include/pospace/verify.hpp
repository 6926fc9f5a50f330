#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "pospace/constructions.hpp"
#include "pospace/corelation.hpp"
#include "pospace/duality.hpp"
#include "pospace/enumeration.hpp"
#include "pospace/errors.hpp"
#include "pospace/isomorphism.hpp"
#include "pospace/oracles.hpp"
#include "pospace/parallel.hpp"
#include "pospace/pushout.hpp"

namespace pospace {

  struct Failure {
    std::optional<Poset>      poset;
    std::optional<CoRelation> corelation;
    std::string               axiom;
    std::string               witness;
  };

  struct VerificationReport {
    std::string          theorem_id;
    EnumerationBudget    budget;
    std::size_t          instances = 0;
    std::vector<Failure> failures;
    // Named integer sequences gathered along the way (e.g. counts per size).
    std::map<std::string, std::vector<std::size_t>> tallies;
    long long                                       elapsed_ms = 0;

    bool passed() const noexcept { return failures.empty(); }
  };

  namespace detail {
    struct Partial {
      std::size_t                                     instances = 0;
      std::vector<Failure>                            failures;
      std::map<std::string, std::vector<std::size_t>> tallies;

      void fail(std::optional<Poset> p, std::optional<CoRelation> c, std::string axiom, std::string witness) {
        failures.push_back({std::move(p), std::move(c), std::move(axiom), std::move(witness)});
      }
    };

    inline void merge_into(Partial& into, Partial&& from) {
      into.instances += from.instances;
      for (auto& f : from.failures) into.failures.push_back(std::move(f));
      for (auto& [k, v] : from.tallies) {
        auto& dst = into.tallies[k];
        if (dst.size() < v.size()) dst.resize(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) dst[i] += v[i];
      }
    }

    // Runs `check` on each poset (possibly in parallel) and merges in input order.
    template <class Check>
    Partial fan_out(std::vector<Poset> const& items, unsigned workers, Check check) {
      auto    parts = parallel_map(items, check, workers);
      Partial total;
      for (auto& p : parts) merge_into(total, std::move(p));
      return total;
    }

    inline void bump(Partial& p, std::string const& key, std::size_t index, std::size_t by = 1) {
      auto& v = p.tallies[key];
      if (v.size() <= index) v.resize(index + 1, 0);
      v[index] += by;
    }

    // q_i : X -> S, x |-> [(x, i)], where S = (X + X)/~ for the co-relation c.
    inline std::pair<MonotoneMap, MonotoneMap> corelation_legs(CoRelation const& c, Reflection const& r) {
      auto                     n  = c.base().size();
      auto                     tc = c.tags();
      std::vector<std::size_t> t0(n), t1(n);
      for (std::size_t x = 0; x < n; ++x) {
        t0[x] = r.projection(tc.index(x, 0));
        t1[x] = r.projection(tc.index(x, 1));
      }
      return {MonotoneMap::from_trusted(c.base(), r.quotient, std::move(t0)),
              MonotoneMap::from_trusted(c.base(), r.quotient, std::move(t1))};
    }

    inline std::string pair_text(CoRelation const& c, std::optional<TaggedPair> const& w) {
      return w ? c.describe(*w) : std::string("-");
    }

    // ---- suites ---------------------------------------------------------

    inline Partial check_effectiveness(Poset const& x) {
      Partial part;
      for (auto const& c : enumerate_corelations(x)) {
        ++part.instances;
        bump(part, "corelations_by_size", x.size());
        auto cert = is_effective(c);
        if (!cert) {
          part.fail(x, c, "effectiveness", c.describe(cert.error()));
          continue;
        }
        for (auto const& e : cert->entries) {
          try {
            auto z = maximal_witness(c, e.x, e.y, e.tag);
            if (!x.leq(e.x, z) || !x.leq(z, e.y) || !c.equivalent({z, e.tag}, {z, 1 - e.tag})) {
              part.fail(x, c, "maximal_witness", c.describe({{e.x, e.tag}, {e.y, 1 - e.tag}}));
            }
          } catch (invariant_error const& err) {
            part.fail(x, c, "maximal_witness", err.what());
          }
        }
        // Effective means: equal to the cokernel pair of its equaliser.
        auto r        = quotient_of_preorder(QuotientObject::make(c.doubled(), c.preorder()));
        auto [q0, q1] = corelation_legs(c, r);
        auto k        = equalizer(q0, q1);
        if (!(image(k) == phi(c))) part.fail(x, c, "equaliser", "equaliser of the legs is not Phi");
        try {
          if (!(cokernel_pair(k).preorder() == c.preorder())) {
            part.fail(x, c, "cokernel_pair_of_equaliser", "co-relation differs from the cokernel pair of its equaliser");
          }
        } catch (invariant_error const& err) {
          part.fail(x, c, "cokernel_pair_of_equaliser", err.what());
        }
      }
      return part;
    }

    inline Partial check_corollary_bijection(Poset const& x) {
      Partial part;
      auto    n       = x.size();
      auto    all     = enumerate_corelations(x);
      auto    subsets = enumerate_subsets(n);
      part.instances += all.size();
      bump(part, "corelations_by_size", n, all.size());
      if (all.size() != subsets.size()) {
        part.fail(x, std::nullopt, "count",
                  std::to_string(all.size()) + " co-relations but " + std::to_string(subsets.size()) + " subsets");
      }
      std::vector<CoRelation> images;
      for (auto const& y : subsets) {
        auto c = corelation_of_subset(x, y);
        if (auto d = is_equivalence_corelation(c); !d.holds) {
          part.fail(x, c, std::string(to_string(d.failed)), pair_text(c, d.witness));
        }
        if (!is_effective(c)) part.fail(x, c, "effectiveness", "subset co-relation is not effective");
        if (!(phi(c) == y)) part.fail(x, c, "phi_after_subset", subset_label(x.carrier(), y));
        bool listed = false;
        for (auto const& e : all) listed = listed || e == c;
        if (!listed) part.fail(x, c, "subset_image_enumerated", subset_label(x.carrier(), y));
        images.push_back(std::move(c));
      }
      for (auto const& c : all) {
        auto y = phi(c);
        if (!(corelation_of_subset(x, y) == c)) part.fail(x, c, "subset_after_phi", subset_label(x.carrier(), y));
        if (!corelation_of_subset(x, y).preorder().relation().subset_of(c.preorder().relation())) {
          part.fail(x, c, "phi_containment", subset_label(x.carrier(), y));
        }
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            for (int i = 0; i < 2; ++i) {
              if (c.holds(a, i, b, i) != x.leq(a, b)) {
                part.fail(x, c, "same_tag_law", c.describe({{a, i}, {b, i}}));
              }
            }
          }
        }
      }
      for (std::size_t s = 0; s < subsets.size(); ++s) {
        for (std::size_t t = 0; t < subsets.size(); ++t) {
          bool sub = subsets[s].subset_of(subsets[t]);
          bool rel = images[s].preorder().relation().subset_of(images[t].preorder().relation());
          if (sub != rel) {
            part.fail(x, std::nullopt, "order_isomorphism",
                      subset_label(x.carrier(), subsets[s]) + " vs " + subset_label(x.carrier(), subsets[t]));
          }
        }
      }
      return part;
    }

    inline Partial check_corelation_lemmas(Poset const& x) {
      Partial part;
      auto    doubled = coproduct(x, x);
      auto    codiag  = codiagonal(x);
      auto    swap    = tag_swap(x);
      for_each_preorder_extending(doubled, [&](Preorder pre) {
        ++part.instances;
        auto c   = CoRelation::from_trusted(x, doubled, pre);
        auto r   = quotient_of_preorder(QuotientObject::make(doubled, pre));
        auto rho = r.projection;

        bool coreflexive = is_coreflexive(c).holds;
        if (coreflexive != factor_through(rho, codiag).has_value()) {
          part.fail(x, c, "co-reflexivity_lemma", "pointwise and categorical forms disagree");
        }
        bool cosymmetric = is_cosymmetric(c).holds;
        if (cosymmetric != factor_through(rho, compose(rho, swap)).has_value()) {
          part.fail(x, c, "co-symmetry_lemma", "pointwise and categorical forms disagree");
        }
        if (!coreflexive) return;
        bump(part, "coreflexive_by_size", x.size());

        auto [q0, q1] = corelation_legs(c, r);
        if (!classify_map(q0).is_order_embedding || !classify_map(q1).is_order_embedding) {
          part.fail(x, c, "legs_are_embeddings", "a leg of a co-reflexive co-relation is not an embedding");
          return;
        }
        // Pushout of q0 along q1. The leg (x, i) goes through the insertion of
        // the copy of S that receives q_{i*}.
        auto                     po = pushout_embeddings(q0, q1);
        std::vector<std::size_t> t(doubled.size());
        auto                     tc = c.tags();
        for (std::size_t a = 0; a < x.size(); ++a) {
          t[tc.index(a, 0)] = po.ins1(q0(a));
          t[tc.index(a, 1)] = po.ins0(q1(a));
        }
        auto m = MonotoneMap::make(doubled, po.apex, std::move(t));
        if (!m) {
          part.fail(x, c, "co-transitivity_lemma", "comparison map into the pushout is not monotone");
          return;
        }
        bool cotransitive = is_cotransitive(c).holds;
        if (cotransitive != factor_through(rho, *m).has_value()) {
          part.fail(x, c, "co-transitivity_lemma", "pointwise and categorical forms disagree");
        }

        bool effective   = is_effective(c).has_value();
        bool categorical = cokernel_pair(equalizer(q0, q1)).preorder() == pre;
        if (effective != categorical) {
          part.fail(x, c, "effectiveness_criterion", "pointwise criterion and cokernel pair of the equaliser disagree");
        }
      });
      return part;
    }

    inline Partial check_preo_quot(Poset const& x, std::vector<Poset> const& targets) {
      Partial part;
      auto    preos = enumerate_preorders_extending(x);
      std::vector<MonotoneMap> rhos;
      for (auto const& pre : preos) {
        ++part.instances;
        auto q = QuotientObject::make(x, pre);
        auto r = quotient_of_preorder(q);
        if (!(preorder_of_map(r.projection) == q)) {
          part.fail(x, std::nullopt, "preorder_round_trip", "pre-order of the quotient map differs");
        }
        auto k = classify_map(r.projection);
        if (!k.is_monotone || !k.is_surjective) {
          part.fail(x, std::nullopt, "quotient_is_epi", "quotient map is not a monotone surjection");
        }
        rhos.push_back(r.projection);
      }
      for (std::size_t a = 0; a < preos.size(); ++a) {
        for (std::size_t b = 0; b < preos.size(); ++b) {
          bool below    = factor_through(rhos[b], rhos[a]).has_value();
          bool reversed = preos[b].relation().subset_of(preos[a].relation());
          if (below != reversed) part.fail(x, std::nullopt, "order_reversal", "Quot order and reverse inclusion disagree");
        }
      }
      for (auto const& y : targets) {
        if (y.size() > x.size()) continue;
        for_each_monotone_map(x, y, [&](MonotoneMap f) {
          if (!classify_map(f).is_surjective) return;
          ++part.instances;
          bump(part, "surjections_by_source_size", x.size());
          auto r = quotient_of_preorder(preorder_of_map(f));
          auto g = factor_through(r.projection, f);
          auto h = factor_through(f, r.projection);
          if (!g || !h) {
            part.fail(x, std::nullopt, "quotient_round_trip", "quotient and surjection do not factor through each other");
            return;
          }
          auto k = classify_map(*g);
          if (!k.is_order_embedding || !k.is_surjective || !(compose(*g, r.projection) == f)) {
            part.fail(x, std::nullopt, "quotient_round_trip", "comparison map is not an isomorphism over X");
          }
        });
      }
      return part;
    }

    struct Cospan {
      MonotoneMap f0;
      MonotoneMap f1;
    };

    inline Partial check_pushout(Poset const& x, std::vector<Poset> const& posets) {
      Partial part;
      for (auto const& y0 : posets) {
        auto e0 = enumerate_embeddings(x, y0);
        if (e0.empty()) continue;
        for (auto const& y1 : posets) {
          auto e1 = enumerate_embeddings(x, y1);
          for (auto const& f0 : e0) {
            for (auto const& f1 : e1) {
              ++part.instances;
              std::optional<PushoutResult> formula;
              try {
                formula = pushout_embeddings(f0, f1);
              } catch (invariant_error const& err) {
                part.fail(x, std::nullopt, "theta_transitivity", err.what());
                continue;
              }
              auto oracle = oracle::brute_force_pushout(f0, f1);
              if (!(formula->presentation == oracle.presentation)) {
                part.fail(x, std::nullopt, "theta_is_smallest_preorder", "formula and closure pre-orders differ");
              }
              if (!(compose(formula->ins0, f0).table() == compose(formula->ins1, f1).table())) {
                part.fail(x, std::nullopt, "pushout_commutes", "ins0 . f0 != ins1 . f1");
              }
              auto h  = copair(formula->ins0, formula->ins1);
              auto h2 = copair(oracle.ins0, oracle.ins1);
              auto g  = factor_through(h, h2);
              auto g2 = factor_through(h2, h);
              bool iso = g && g2 && classify_map(*g).is_order_embedding && classify_map(*g).is_surjective;
              if (!iso || !(canonical_form(formula->apex) == canonical_form(oracle.apex))) {
                part.fail(x, std::nullopt, "apex_agrees_with_oracle", "no isomorphism commuting with the insertions");
              }
              if (!classify_map(formula->ins0).is_order_embedding || !classify_map(formula->ins1).is_order_embedding) {
                part.fail(x, std::nullopt, "embedding_stability", "an insertion is not an order-embedding");
              }
            }
          }
        }
      }
      return part;
    }

    inline Partial check_cokernel_pair(Poset const& x) {
      Partial part;
      for (auto const& y : enumerate_subsets(x.size())) {
        ++part.instances;
        auto k       = inclusion(x, y);
        auto formula = corelation_of_subset(x, y);
        auto po      = pushout_embeddings(k, k);
        auto via     = preorder_of_map(copair(po.ins0, po.ins1));
        if (!(via.preorder() == formula.preorder())) {
          part.fail(x, formula, "formula_vs_pushout", subset_label(x.carrier(), y));
        }
        try {
          cokernel_pair(k);
        } catch (invariant_error const& err) {
          part.fail(x, formula, "cokernel_pair", err.what());
        }
        if (!(image(equalizer(po.ins0, po.ins1)) == y)) {
          part.fail(x, formula, "equaliser_recovers_subset", subset_label(x.carrier(), y));
        }
      }
      return part;
    }

    inline Partial check_counting(std::size_t max_n) {
      Partial part;
      for (std::size_t n = 0; n <= max_n; ++n) {
        ++part.instances;
        std::size_t gen_pre = 0, gen_pos = 0;
        for_each_preorder_extending(delta(Carrier::letters(n)), [&](Preorder const&) { ++gen_pre; });
        auto labeled = enumerate_posets(n, true);
        gen_pos      = labeled.size();
        auto brute   = oracle::count_by_filtering(n);
        auto uncanon = enumerate_posets(n, false).size();
        auto unpair  = oracle::count_iso_classes(labeled);

        bump(part, "labeled_preorders", n, gen_pre);
        bump(part, "labeled_preorders_oracle", n, brute.preorders);
        bump(part, "labeled_posets", n, gen_pos);
        bump(part, "labeled_posets_oracle", n, brute.posets);
        bump(part, "unlabeled_posets", n, uncanon);
        bump(part, "unlabeled_posets_oracle", n, unpair);

        auto at = "n=" + std::to_string(n);
        if (gen_pre != brute.preorders) {
          part.fail(std::nullopt, std::nullopt, "labeled_preorders",
                    at + ": " + std::to_string(gen_pre) + " vs " + std::to_string(brute.preorders));
        }
        if (gen_pos != brute.posets) {
          part.fail(std::nullopt, std::nullopt, "labeled_posets",
                    at + ": " + std::to_string(gen_pos) + " vs " + std::to_string(brute.posets));
        }
        if (uncanon != unpair) {
          part.fail(std::nullopt, std::nullopt, "unlabeled_posets",
                    at + ": " + std::to_string(uncanon) + " vs " + std::to_string(unpair));
        }
      }
      return part;
    }

    inline Partial check_birkhoff(Poset const& p) {
      Partial part;
      ++part.instances;
      bump(part, "unlabeled_posets", p.size());
      auto l = upset_lattice(p);
      if (auto w = distributivity_witness(l)) {
        part.fail(p, std::nullopt, "distributivity",
                  l.carrier().label((*w)[0]) + ", " + l.carrier().label((*w)[1]) + ", " + l.carrier().label((*w)[2]));
        return part;
      }
      auto j = join_irreducibles(l);
      auto s = spectrum(l);
      if (!j || !s) {
        part.fail(p, std::nullopt, "join_irreducibles", "rejected a distributive lattice");
        return part;
      }
      if (!(canonical_form(*j) == canonical_form(opposite(p)))) {
        part.fail(p, std::nullopt, "join_irreducibles_of_upsets", "J(Up(P)) is not isomorphic to P^op");
      }
      if (!(canonical_form(*s) == canonical_form(p)) || !find_isomorphism(*s, p)) {
        part.fail(p, std::nullopt, "round_trip_poset", "spectrum(Up(P)) is not isomorphic to P");
      }
      if (!find_isomorphism(upset_lattice(*s).order(), l.order())) {
        part.fail(p, std::nullopt, "round_trip_lattice", "Up(spectrum(L)) is not isomorphic to L");
      }
      if (!find_isomorphism(upset_lattice(*j).order(), opposite(l.order()))) {
        part.fail(p, std::nullopt, "upsets_of_join_irreducibles", "Up(J(L)) is not isomorphic to L^op");
      }
      if (!is_priestley(p).holds) part.fail(p, std::nullopt, "priestley", "a pair is not separated by an up-set");
      return part;
    }

    inline Partial check_dual_contravariance(std::vector<Poset> const& posets) {
      Partial part;
      std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, LatticeHom> cache;
      auto dual = [&](std::size_t a, std::size_t b, MonotoneMap const& f) -> LatticeHom const& {
        auto key = std::make_tuple(a, b, f.table());
        auto it  = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, dual_map(f)).first;
        return it->second;
      };
      std::vector<std::vector<std::vector<MonotoneMap>>> maps(posets.size());
      for (std::size_t a = 0; a < posets.size(); ++a) {
        for (std::size_t b = 0; b < posets.size(); ++b) {
          maps[a].push_back(enumerate_monotone_maps(posets[a], posets[b]));
        }
      }
      for (std::size_t a = 0; a < posets.size(); ++a) {
        auto id  = dual(a, a, MonotoneMap::identity(posets[a]));
        bool ok  = true;
        for (std::size_t u = 0; u < id.table.size(); ++u) ok = ok && id.table[u] == u;
        if (!ok) part.fail(posets[a], std::nullopt, "dual_identity", "dual of the identity is not the identity");
        for (std::size_t b = 0; b < posets.size(); ++b) {
          for (std::size_t c = 0; c < posets.size(); ++c) {
            for (auto const& f : maps[a][b]) {
              for (auto const& g : maps[b][c]) {
                ++part.instances;
                auto const& lhs = dual(a, c, compose(g, f));
                auto        rhs = compose(dual(a, b, f), dual(b, c, g));
                if (!(lhs.table == rhs.table)) {
                  part.fail(posets[a], std::nullopt, "dual_contravariance", "D(g.f) != D(f).D(g)");
                }
              }
            }
          }
        }
      }
      return part;
    }

    inline Partial check_separation(Poset const& p) {
      Partial part;
      auto    n = p.size();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (p.leq(x, y)) continue;
          ++part.instances;
          auto f = separate(p, x, y);
          if (!classify_map(f).is_monotone || f(x) != 1 || f(y) != 0) {
            part.fail(p, std::nullopt, "separation", p.carrier().label(x) + " !<= " + p.carrier().label(y));
          }
        }
      }
      if (!is_priestley(p).holds) part.fail(p, std::nullopt, "priestley", "a pair is not separated by an up-set");
      return part;
    }
  }  // namespace detail

  // The three-element chain a < b < c with only the crossing pairs
  // (a,0) <= (c,1) and (a,1) <= (c,0) added to the coproduct order.
  // Co-reflexive and co-symmetric but not co-transitive, and not effective.
  inline CoRelation chain_counterexample() {
    auto chain = check_poset(Relation(Carrier::letters(3),
                                      std::vector<IndexPair>{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}}))
                     .value();
    auto          doubled = coproduct(chain, chain);
    TaggedCarrier tc{3};
    auto          rel = doubled.relation();
    rel.add(tc.index(0, 0), tc.index(2, 1));
    rel.add(tc.index(0, 1), tc.index(2, 0));
    return CoRelation::make(chain, check_preorder(rel).value());
  }

  // ∇ on (a < b) + (a < b).
  inline CoRelation full_on_doubled_two_chain() {
    auto chain = check_poset(Relation(Carrier::letters(2), std::vector<IndexPair>{{0, 0}, {1, 1}, {0, 1}})).value();
    auto doubled = coproduct(chain, chain);
    return CoRelation::make(chain, nabla(doubled.carrier()));
  }

  namespace detail {
    inline Partial check_negative_controls() {
      Partial part;
      auto    c   = chain_counterexample();
      auto    tc  = c.tags();
      auto    ac1 = TaggedPair{{0, 0}, {2, 1}};
      (void) tc;

      ++part.instances;
      auto cot = is_cotransitive(c);
      if (cot.holds || cot.precondition_failed || cot.witness != ac1) {
        part.fail(c.base(), c, "control:co-transitivity", "3-chain counterexample must fail with (a,0) <= (c,1)");
      }
      ++part.instances;
      auto eff = is_effective(c);
      if (eff || eff.error() != ac1) {
        part.fail(c.base(), c, "control:effectiveness", "3-chain counterexample must fail with (a,0) <= (c,1)");
      }
      ++part.instances;
      auto d = is_equivalence_corelation(c);
      if (d.holds || d.failed != CoAxiom::cotransitivity) {
        part.fail(c.base(), c, "control:diagnosis", "3-chain counterexample must be diagnosed as co-transitivity");
      }
      ++part.instances;
      auto full = full_on_doubled_two_chain();
      auto cor  = is_coreflexive(full);
      if (cor.holds || cor.witness != TaggedPair{{1, 0}, {0, 1}}) {
        part.fail(full.base(), full, "control:co-reflexivity", "full relation must fail with (b,0) <= (a,1)");
      }
      return part;
    }
  }  // namespace detail

  struct TheoremEntry {
    std::string_view id;
    std::string_view summary;
    std::size_t      default_max_n;
    std::size_t      cap_max_n;
  };

  inline std::vector<TheoremEntry> const& theorem_manifest() {
    static std::vector<TheoremEntry> const manifest = {
        {"effectiveness", "every equivalence co-relation is effective (certificate, maximal witness, cokernel pair of equaliser)", 3, 3},
        {"corollary_bijection", "equivalence co-relations correspond to subsets via Phi and the subset pre-order", 3, 3},
        {"corelation_lemmas", "pointwise co-reflexivity/co-symmetry/co-transitivity/effectiveness agree with their categorical definitions", 3, 3},
        {"preo_quot", "pre-orders extending the order correspond to quotient maps, order-reversingly", 3, 4},
        {"pushout_theta", "pushout pre-order formula equals the brute-force pushout; insertions stay embeddings", 3, 3},
        {"cokernel_pair", "subset pre-order on X+X equals the cokernel pair of the inclusion", 3, 4},
        {"counting", "pre-order and poset counts agree between generator and brute-force filter", 4, 5},
        {"birkhoff", "up-set lattice and join-irreducibles are mutually inverse up to isomorphism", 5, 6},
        {"dual_contravariance", "dual maps compose contravariantly and preserve the lattice operations", 3, 3},
        {"separation", "every non-comparable pair is separated by a monotone map into the 2-chain", 5, 6},
        {"negative_controls", "documented counterexamples fail the documented checks", 0, 0},
    };
    return manifest;
  }

  inline TheoremEntry const* find_theorem(std::string_view id) {
    for (auto const& e : theorem_manifest()) {
      if (e.id == id) return &e;
    }
    return nullptr;
  }

  inline VerificationReport verify(std::string_view theorem_id, EnumerationBudget budget) {
    auto const* entry = find_theorem(theorem_id);
    if (entry == nullptr) throw precondition_error("unknown theorem id \"" + std::string(theorem_id) + "\"");
    if (budget.max_n > entry->cap_max_n) {
      throw budget_error(std::string(theorem_id) + ": max-n " + std::to_string(budget.max_n)
                         + " exceeds the bound of " + std::to_string(entry->cap_max_n));
    }
    auto start   = std::chrono::steady_clock::now();
    auto workers = budget.parallelism;
    auto max_n   = budget.max_n;

    auto labeled   = [&] { return enumerate_posets_up_to(max_n, true); };
    auto unlabeled = [&] { return enumerate_posets_up_to(max_n, false); };

    detail::Partial part;
    auto const      id = entry->id;
    if (id == "effectiveness") {
      part = detail::fan_out(labeled(), workers, detail::check_effectiveness);
    } else if (id == "corollary_bijection") {
      part = detail::fan_out(labeled(), workers, detail::check_corollary_bijection);
    } else if (id == "corelation_lemmas") {
      part = detail::fan_out(labeled(), workers, detail::check_corelation_lemmas);
    } else if (id == "preo_quot") {
      auto targets = labeled();
      part = detail::fan_out(targets, workers, [&](Poset const& x) { return detail::check_preo_quot(x, targets); });
    } else if (id == "pushout_theta") {
      auto posets = labeled();
      part = detail::fan_out(posets, workers, [&](Poset const& x) { return detail::check_pushout(x, posets); });
    } else if (id == "cokernel_pair") {
      part = detail::fan_out(labeled(), workers, detail::check_cokernel_pair);
    } else if (id == "counting") {
      part = detail::check_counting(max_n);
    } else if (id == "birkhoff") {
      part = detail::fan_out(unlabeled(), workers, detail::check_birkhoff);
    } else if (id == "dual_contravariance") {
      part = detail::check_dual_contravariance(unlabeled());
    } else if (id == "separation") {
      part = detail::fan_out(labeled(), workers, detail::check_separation);
    } else if (id == "negative_controls") {
      part = detail::check_negative_controls();
    }

    VerificationReport report;
    report.theorem_id = std::string(id);
    report.budget     = budget;
    report.instances  = part.instances;
    report.failures   = std::move(part.failures);
    report.tallies    = std::move(part.tallies);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

}  // namespace pospace
