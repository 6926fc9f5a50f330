#pragma once

// Independent brute-force routes used to cross-check the constructive code.
// Nothing here calls the pre-order generator, the pushout pre-order formula
// or the canonical form.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pospace/errors.hpp"
#include "pospace/isomorphism.hpp"
#include "pospace/pushout.hpp"
#include "pospace/relation.hpp"

namespace pospace::oracle {

  struct RelationCounts {
    std::size_t preorders = 0;
    std::size_t posets    = 0;
  };

  // Filters all 2^(n(n-1)) reflexive relations on n points through the axioms,
  // using plain nested vectors.
  inline RelationCounts count_by_filtering(std::size_t n) {
    if (n > 5) throw budget_error("brute-force relation filter limited to 5 points");
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off.emplace_back(i, j);
      }
    }
    RelationCounts counts;
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r[i][j] = (i == j);
      }
      for (std::size_t k = 0; k < off.size(); ++k) {
        if ((mask >> k) & 1U) r[off[k].first][off[k].second] = 1;
      }
      bool transitive = true;
      for (std::size_t a = 0; a < n && transitive; ++a) {
        for (std::size_t b = 0; b < n && transitive; ++b) {
          if (!r[a][b]) continue;
          for (std::size_t c = 0; c < n; ++c) {
            if (r[b][c] && !r[a][c]) {
              transitive = false;
              break;
            }
          }
        }
      }
      if (!transitive) continue;
      ++counts.preorders;
      bool antisymmetric = true;
      for (std::size_t a = 0; a < n && antisymmetric; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (r[a][b] && r[b][a]) {
            antisymmetric = false;
            break;
          }
        }
      }
      if (antisymmetric) ++counts.posets;
    }
    return counts;
  }

  // Number of isomorphism classes, by pairwise isomorphism search against the
  // representatives found so far.
  inline std::size_t count_iso_classes(std::vector<Poset> const& posets) {
    std::vector<Poset const*> reps;
    for (auto const& p : posets) {
      bool known = false;
      for (auto const* r : reps) {
        if (find_isomorphism(*r, p)) {
          known = true;
          break;
        }
      }
      if (!known) reps.push_back(&p);
    }
    return reps.size();
  }

  // Pushout of a cospan of embeddings computed as the smallest pre-order on the
  // glued set that makes both insertions monotone, followed by reflection.
  // Glue classes come from the equivalence closure of {(f0(x), f1(x))}.
  inline PushoutResult brute_force_pushout(MonotoneMap const& f0, MonotoneMap const& f1) {
    auto [y0, y1] = detail::pushout_codomains(f0, f1);
    auto n0 = y0.size(), m = y0.size() + y1.size();

    BitMatrix eq = BitMatrix::identity(m);
    for (std::size_t x = 0; x < f0.dom().size(); ++x) {
      eq.set(f0(x), n0 + f1(x));
      eq.set(n0 + f1(x), f0(x));
    }
    eq.transitive_close();

    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool>                     placed(m, false);
    for (std::size_t u = 0; u < m; ++u) {
      if (placed[u]) continue;
      std::vector<std::size_t> members;
      for (std::size_t v = 0; v < m; ++v) {
        if (eq.test(u, v)) {
          members.push_back(v);
          placed[v] = true;
        }
      }
      classes.push_back(std::move(members));
    }

    auto g = detail::glue_classes_to_carrier(y0, y1, std::move(classes));

    Relation images(g.glued);
    for (std::size_t a = 0; a < y0.size(); ++a) {
      for (std::size_t b = 0; b < y0.size(); ++b) {
        if (y0.leq(a, b)) images.add(g.lambda0[a], g.lambda0[b]);
      }
    }
    for (std::size_t a = 0; a < y1.size(); ++a) {
      for (std::size_t b = 0; b < y1.size(); ++b) {
        if (y1.leq(a, b)) images.add(g.lambda1[a], g.lambda1[b]);
      }
    }
    auto presentation = reflexive_transitive_closure(images);
    return detail::finish_pushout(y0, y1, std::move(g), std::move(presentation));
  }

}  // namespace pospace::oracle
