#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pospace/constructions.hpp"
#include "pospace/corelation.hpp"
#include "pospace/errors.hpp"
#include "pospace/isomorphism.hpp"
#include "pospace/relation.hpp"

namespace pospace {

  struct EnumerationBudget {
    std::size_t max_n       = 3;
    bool        labeled     = true;
    bool        dedupe_iso  = false;
    unsigned    parallelism = 1;
  };

  // Largest carrier on which pre-orders may be enumerated: there are
  // 9,535,241 labeled pre-orders on 7 points and 642,779,354 on 8.
  inline constexpr std::size_t max_preorder_points = 7;

  inline void require_points_within_budget(std::size_t points, std::string const& what) {
    if (points > max_preorder_points) {
      throw budget_error(what + ": " + std::to_string(points) + " points exceeds the enumeration bound of "
                         + std::to_string(max_preorder_points));
    }
  }

  namespace detail {
    template <class Visit>
    class PreorderSearch {
     public:
      PreorderSearch(Preorder const& base, bool antisymmetric, Visit& visit)
          : carrier_(base.carrier()),
            rel_(base.matrix()),
            forbidden_(base.size()),
            antisymmetric_(antisymmetric),
            visit_(visit) {
        auto n = base.size();
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (i != j) pairs_.push_back({i, j});
          }
        }
      }

      void run() { descend(0); }

     private:
      // Every pre-order above the base is reached by exactly one path: at each
      // undecided pair, either forbid it or add it and close transitively.
      void descend(std::size_t pos) {
        while (pos < pairs_.size()
               && (rel_.test(pairs_[pos].first, pairs_[pos].second)
                   || forbidden_.test(pairs_[pos].first, pairs_[pos].second))) {
          ++pos;
        }
        if (pos == pairs_.size()) {
          visit_(Preorder::from_trusted(Relation(carrier_, rel_)));
          return;
        }
        auto [i, j] = pairs_[pos];

        forbidden_.set(i, j);
        descend(pos + 1);
        forbidden_.reset(i, j);

        auto saved = rel_;
        // R ∪ (↓i × ↑j) is the transitive closure of R ∪ {(i, j)}
        for (std::size_t a = 0; a < rel_.size(); ++a) {
          if (saved.test(a, i)) rel_.or_row_into(a, j);
        }
        if (admissible()) descend(pos + 1);
        rel_ = std::move(saved);
      }

      bool admissible() const {
        auto clash = rel_;
        clash &= forbidden_;
        if (clash.count() != 0) return false;
        if (antisymmetric_) {
          for (std::size_t a = 0; a < rel_.size(); ++a) {
            for (std::size_t b = a + 1; b < rel_.size(); ++b) {
              if (rel_.test(a, b) && rel_.test(b, a)) return false;
            }
          }
        }
        return true;
      }

      Carrier                const carrier_;
      BitMatrix                    rel_;
      BitMatrix                    forbidden_;
      bool                         antisymmetric_;
      Visit&                       visit_;
      std::vector<IndexPair>       pairs_;
    };
  }  // namespace detail

  // Calls visit(Preorder) for every pre-order containing `base`, in a fixed
  // deterministic order that starts with `base` itself. With
  // antisymmetric = true only partial orders are produced.
  template <class Visit>
  void for_each_preorder_extending(Preorder const& base, Visit&& visit, bool antisymmetric = false) {
    require_points_within_budget(base.size(), "pre-order enumeration");
    detail::PreorderSearch<std::remove_reference_t<Visit>> search(base, antisymmetric, visit);
    search.run();
  }

  inline std::vector<Preorder> enumerate_preorders_extending(Preorder const& p) {
    std::vector<Preorder> out;
    for_each_preorder_extending(p, [&](Preorder q) { out.push_back(std::move(q)); });
    return out;
  }

  template <class Visit>
  void for_each_labeled_poset(std::size_t n, Visit&& visit) {
    for_each_preorder_extending(
        delta(Carrier::letters(n)), [&](Preorder q) { visit(Poset::from_trusted(q.relation())); },
        /*antisymmetric=*/true);
  }

  // Posets on {a, b, ...} of size n. Unlabeled: the first poset generated in
  // each isomorphism class.
  inline std::vector<Poset> enumerate_posets(std::size_t n, bool labeled) {
    std::vector<Poset> out;
    if (labeled) {
      for_each_labeled_poset(n, [&](Poset p) { out.push_back(std::move(p)); });
      return out;
    }
    std::set<CanonicalForm> seen;
    for_each_labeled_poset(n, [&](Poset p) {
      if (seen.insert(canonical_form(p)).second) out.push_back(std::move(p));
    });
    return out;
  }

  inline std::vector<Poset> enumerate_posets_up_to(std::size_t max_n, bool labeled) {
    std::vector<Poset> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
      auto batch = enumerate_posets(n, labeled);
      out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
  }

  // All pre-orders on X + X extending the coproduct order that satisfy the
  // equivalence co-relation conditions.
  inline std::vector<CoRelation> enumerate_corelations(Poset const& x) {
    require_points_within_budget(2 * x.size(), "co-relation enumeration");
    auto                    doubled = coproduct(x, x);
    std::vector<CoRelation> out;
    for_each_preorder_extending(doubled, [&](Preorder q) {
      auto c = CoRelation::from_trusted(x, doubled, std::move(q));
      if (is_equivalence_corelation(c).holds) out.push_back(std::move(c));
    });
    return out;
  }

  // Every monotone map p -> q, as tables, in lexicographic order.
  template <class Visit>
  void for_each_monotone_map(Preorder const& p, Preorder const& q, Visit&& visit) {
    auto                     n = p.size();
    std::vector<std::size_t> t(n, 0);
    auto rec = [&](auto& self, std::size_t k) -> void {
      if (k == n) {
        visit(MonotoneMap::from_trusted(p, q, t));
        return;
      }
      for (std::size_t v = 0; v < q.size(); ++v) {
        bool ok = true;
        for (std::size_t a = 0; a < k && ok; ++a) {
          if (p.leq(a, k) && !q.leq(t[a], v)) ok = false;
          if (p.leq(k, a) && !q.leq(v, t[a])) ok = false;
        }
        if (!ok) continue;
        t[k] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
  }

  inline std::vector<MonotoneMap> enumerate_monotone_maps(Preorder const& p, Preorder const& q) {
    std::vector<MonotoneMap> out;
    for_each_monotone_map(p, q, [&](MonotoneMap f) { out.push_back(std::move(f)); });
    return out;
  }

  inline std::vector<MonotoneMap> enumerate_embeddings(Preorder const& p, Preorder const& q) {
    std::vector<MonotoneMap> out;
    if (p.size() > q.size()) return out;
    for_each_monotone_map(p, q, [&](MonotoneMap f) {
      if (classify_map(f).is_order_embedding) out.push_back(std::move(f));
    });
    return out;
  }

  // All subsets of {0..n-1} in increasing bitmask order.
  inline std::vector<Bits> enumerate_subsets(std::size_t n) {
    if (n > 20) throw budget_error("subset enumeration limited to 20 elements");
    std::vector<Bits> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Bits b(n);
      for (std::size_t v = 0; v < n; ++v) b.set(v, (mask >> v) & 1U);
      out.push_back(std::move(b));
    }
    return out;
  }

}  // namespace pospace
