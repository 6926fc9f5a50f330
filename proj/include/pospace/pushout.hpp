#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pospace/constructions.hpp"
#include "pospace/errors.hpp"
#include "pospace/monotone_map.hpp"
#include "pospace/relation.hpp"

namespace pospace {

  struct PushoutResult {
    Poset       apex;
    MonotoneMap ins0;  // Y0 -> apex
    MonotoneMap ins1;  // Y1 -> apex
    // The glued set P with its pre-order, before reflection.
    Preorder presentation;
    // Partition of the disjoint union Y0 + Y1 (indices into `disjoint_union`).
    std::vector<std::vector<std::size_t>> glue_classes;
    Carrier                               disjoint_union;
  };

  namespace detail {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
      }

     private:
      std::vector<std::size_t> parent_;
    };

    // Shared input validation for pushouts of a cospan of embeddings.
    inline std::pair<Poset, Poset> pushout_codomains(MonotoneMap const& f0, MonotoneMap const& f1) {
      if (!(f0.dom() == f1.dom())) {
        throw precondition_error("pushout: the two maps have different domains");
      }
      as_poset(f0.dom());
      require_embedding(f0, "f0");
      require_embedding(f1, "f1");
      return {as_poset(f0.cod()), as_poset(f1.cod())};
    }

    struct Glued {
      Carrier                               sum;      // Y0 + Y1
      Carrier                               glued;    // P
      std::vector<std::vector<std::size_t>> classes;  // over sum indices
      std::vector<std::size_t>              lambda0;  // Y0 -> P
      std::vector<std::size_t>              lambda1;  // Y1 -> P
    };

    inline Glued glue_classes_to_carrier(Poset const& y0, Poset const& y1,
                                         std::vector<std::vector<std::size_t>> classes) {
      Glued g;
      g.sum = coproduct(y0, y1).carrier();
      std::vector<std::size_t> owner(g.sum.size());
      std::vector<std::string> labels;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        labels.push_back(class_label(g.sum, classes[c]));
        for (auto m : classes[c]) owner[m] = c;
      }
      g.glued = Carrier(std::move(labels));
      g.lambda0.assign(owner.begin(), owner.begin() + static_cast<std::ptrdiff_t>(y0.size()));
      g.lambda1.assign(owner.begin() + static_cast<std::ptrdiff_t>(y0.size()), owner.end());
      g.classes = std::move(classes);
      return g;
    }

    inline PushoutResult finish_pushout(Poset const& y0, Poset const& y1, Glued g,
                                        Preorder presentation) {
      auto r    = reflect(presentation);
      auto lam0 = MonotoneMap::from_trusted(y0, presentation, g.lambda0);
      auto lam1 = MonotoneMap::from_trusted(y1, presentation, g.lambda1);
      return PushoutResult{r.quotient,
                           compose(r.projection, lam0),
                           compose(r.projection, lam1),
                           std::move(presentation),
                           std::move(g.classes),
                           std::move(g.sum)};
    }
  }  // namespace detail

  // Pushout of f0 : X -> Y0 along f1 : X -> Y1, both order-embeddings.
  // The carrier is Y0 + Y1 glued along f0(x) ~ f1(x); the pre-order on it is
  // the union of the same-side part
  //   {(l_i(w), l_i(w')) | w <= w' in Y_i}
  // and the crossing part
  //   {(l_i(w), l_i*(w')) | w <= f_i(x), f_i*(x) <= w' for some x in X},
  // which must already be transitive. The apex is its reflection.
  inline PushoutResult pushout_embeddings(MonotoneMap const& f0, MonotoneMap const& f1) {
    auto [y0, y1] = detail::pushout_codomains(f0, f1);
    auto n0       = y0.size();

    detail::UnionFind uf(n0 + y1.size());
    for (std::size_t x = 0; x < f0.dom().size(); ++x) uf.unite(f0(x), n0 + f1(x));

    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t>              slot(n0 + y1.size(), n0 + y1.size());
    for (std::size_t u = 0; u < n0 + y1.size(); ++u) {
      auto root = uf.find(u);
      if (slot[root] == n0 + y1.size()) {
        slot[root] = classes.size();
        classes.emplace_back();
      }
      classes[slot[root]].push_back(u);
    }
    for (auto const& c : classes) {
      if (c.size() > 2) {
        throw invariant_error("pushout: a glue class has " + std::to_string(c.size())
                              + " members although both maps are injective");
      }
    }

    auto g = detail::glue_classes_to_carrier(y0, y1, std::move(classes));

    std::vector<Poset const*>                    ys{&y0, &y1};
    std::vector<MonotoneMap const*>              fs{&f0, &f1};
    std::vector<std::vector<std::size_t> const*> lams{&g.lambda0, &g.lambda1};

    BitMatrix theta(g.glued.size());
    for (int i = 0; i < 2; ++i) {
      auto const& y   = *ys[i];
      auto const& lam = *lams[i];
      for (std::size_t w = 0; w < y.size(); ++w) {
        for (std::size_t w2 = 0; w2 < y.size(); ++w2) {
          if (y.leq(w, w2)) theta.set(lam[w], lam[w2]);
        }
      }
    }
    for (int i = 0; i < 2; ++i) {
      int         j     = 1 - i;
      auto const& yi    = *ys[i];
      auto const& yj    = *ys[j];
      auto const& fi    = *fs[i];
      auto const& fj    = *fs[j];
      auto const& lam_i = *lams[i];
      auto const& lam_j = *lams[j];
      for (std::size_t x = 0; x < fi.dom().size(); ++x) {
        for (std::size_t w = 0; w < yi.size(); ++w) {
          if (!yi.leq(w, fi(x))) continue;
          for (std::size_t w2 = 0; w2 < yj.size(); ++w2) {
            if (yj.leq(fj(x), w2)) theta.set(lam_i[w], lam_j[w2]);
          }
        }
      }
    }

    Relation theta_rel(g.glued, std::move(theta));
    if (auto v = detail::transitivity_violation(theta_rel.matrix())) {
      throw invariant_error("pushout pre-order is not transitive: " + v->describe(g.glued));
    }
    auto presentation = Preorder::from_trusted(std::move(theta_rel));
    return detail::finish_pushout(y0, y1, std::move(g), std::move(presentation));
  }

  // The pre-order on X + X induced by a subset Y of X:
  //   (x, i) <= (y, j)  iff  (i = j and x <= y) or (i != j and x <= z <= y for some z in Y).
  inline Preorder subset_cokernel_preorder(Poset const& x, Bits const& y) {
    if (y.size() != x.size()) throw precondition_error("subset size does not match the poset");
    auto          n = x.size();
    TaggedCarrier tc{n};
    auto          sum = coproduct(x, x);
    BitMatrix     m(2 * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        bool same  = x.leq(a, b);
        bool cross = false;
        for (std::size_t z = 0; z < n && !cross; ++z) {
          cross = y.test(z) && x.leq(a, z) && x.leq(z, b);
        }
        for (int i = 0; i < 2; ++i) {
          if (same) m.set(tc.index(a, i), tc.index(b, i));
          if (cross) m.set(tc.index(a, i), tc.index(b, 1 - i));
        }
      }
    }
    Relation r(sum.carrier(), std::move(m));
    if (auto v = detail::transitivity_violation(r.matrix())) {
      throw invariant_error("subset pre-order on X+X is not transitive: " + v->describe(r.carrier()));
    }
    return Preorder::from_trusted(std::move(r));
  }

  // Cokernel pair of an order-embedding k : Y -> X, as a quotient object of
  // X + X. Computed twice, once through pushout_embeddings(k, k) and once by
  // the closed formula of subset_cokernel_preorder; the two must coincide.
  inline QuotientObject cokernel_pair(MonotoneMap const& k) {
    require_embedding(k, "k");
    auto x = as_poset(k.cod());

    auto po       = pushout_embeddings(k, k);
    auto via_push = preorder_of_map(copair(po.ins0, po.ins1));

    auto formula = subset_cokernel_preorder(x, image(k));
    if (!(via_push.preorder() == formula)) {
      throw invariant_error("cokernel pair: pushout and closed formula disagree");
    }
    return via_push;
  }

}  // namespace pospace
