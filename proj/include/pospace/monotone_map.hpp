#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pospace/errors.hpp"
#include "pospace/outcome.hpp"
#include "pospace/relation.hpp"

namespace pospace {

  struct MapViolation {
    enum class Kind { size_mismatch, out_of_range, not_monotone };

    Kind        kind;
    std::size_t x = 0;  // offending domain element (or pair x <= y)
    std::size_t y = 0;

    std::string describe(Preorder const& dom, Preorder const& cod) const {
      switch (kind) {
        case Kind::size_mismatch: return "map table does not cover the domain";
        case Kind::out_of_range:
          return "image of " + dom.carrier().label(x) + " is outside the codomain (size "
                 + std::to_string(cod.size()) + ")";
        case Kind::not_monotone:
          return "not monotone: " + dom.carrier().label(x) + " <= " + dom.carrier().label(y)
                 + " in the domain but their images are unordered";
      }
      return "invalid map";
    }
  };

  // A monotone function between pre-ordered sets (continuity is vacuous at
  // finite scale). Posets are pre-orders, so the same type carries maps
  // between posets.
  class MonotoneMap {
   public:
    static Outcome<MonotoneMap, MapViolation> make(Preorder dom, Preorder cod,
                                                   std::vector<std::size_t> table) {
      if (table.size() != dom.size()) {
        return MapViolation{MapViolation::Kind::size_mismatch, 0, 0};
      }
      for (std::size_t x = 0; x < table.size(); ++x) {
        if (table[x] >= cod.size()) return MapViolation{MapViolation::Kind::out_of_range, x, x};
      }
      for (std::size_t x = 0; x < dom.size(); ++x) {
        for (std::size_t y = 0; y < dom.size(); ++y) {
          if (dom.matrix().test(x, y) && !cod.matrix().test(table[x], table[y])) {
            return MapViolation{MapViolation::Kind::not_monotone, x, y};
          }
        }
      }
      return MonotoneMap(std::move(dom), std::move(cod), std::move(table));
    }

    // Throws precondition_error if the table is not a monotone map.
    static MonotoneMap checked(Preorder dom, Preorder cod, std::vector<std::size_t> table) {
      auto r = make(dom, cod, std::move(table));
      if (!r) throw precondition_error(r.error().describe(dom, cod));
      return std::move(r).value();
    }

    static MonotoneMap from_trusted(Preorder dom, Preorder cod, std::vector<std::size_t> table) {
      return MonotoneMap(std::move(dom), std::move(cod), std::move(table));
    }

    static MonotoneMap identity(Preorder const& p) {
      std::vector<std::size_t> t(p.size());
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
      return MonotoneMap(p, p, std::move(t));
    }

    Preorder const& dom() const noexcept { return dom_; }
    Preorder const& cod() const noexcept { return cod_; }

    std::size_t                   operator()(std::size_t x) const { return table_.at(x); }
    std::vector<std::size_t> const& table() const noexcept { return table_; }

    static constexpr bool is_continuous() noexcept { return true; }

    friend bool operator==(MonotoneMap const&, MonotoneMap const&) = default;

   private:
    MonotoneMap(Preorder dom, Preorder cod, std::vector<std::size_t> table)
        : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {}

    Preorder                 dom_;
    Preorder                 cod_;
    std::vector<std::size_t> table_;
  };

  struct MapKind {
    bool is_monotone        = false;
    bool is_surjective      = false;
    bool is_injective       = false;
    bool is_order_embedding = false;
    // x <= y but f(x) !<= f(y)
    std::optional<IndexPair> monotonicity_witness;
    // f(x) <= f(y) but x !<= y
    std::optional<IndexPair> embedding_witness;
    // codomain element outside the image
    std::optional<std::size_t> surjectivity_witness;
  };

  // The flags are computed independently of each other.
  inline MapKind classify_map(Preorder const& dom, Preorder const& cod,
                              std::span<std::size_t const> table) {
    MapKind k;
    auto    n = dom.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        bool below       = dom.matrix().test(x, y);
        bool image_below = cod.matrix().test(table[x], table[y]);
        if (below && !image_below && !k.monotonicity_witness) k.monotonicity_witness = {x, y};
        if (!below && image_below && !k.embedding_witness) k.embedding_witness = {x, y};
      }
    }
    Bits hit(cod.size());
    k.is_injective = true;
    for (std::size_t x = 0; x < n; ++x) {
      if (hit.test(table[x])) k.is_injective = false;
      hit.set(table[x]);
    }
    for (std::size_t y = 0; y < cod.size(); ++y) {
      if (!hit.test(y)) {
        k.surjectivity_witness = y;
        break;
      }
    }
    k.is_monotone        = !k.monotonicity_witness;
    k.is_surjective      = !k.surjectivity_witness;
    k.is_order_embedding = !k.monotonicity_witness && !k.embedding_witness;
    return k;
  }

  inline MapKind classify_map(MonotoneMap const& f) {
    return classify_map(f.dom(), f.cod(), f.table());
  }

  // g ∘ f
  inline MonotoneMap compose(MonotoneMap const& g, MonotoneMap const& f) {
    if (!(f.cod() == g.dom())) {
      throw precondition_error("cannot compose: codomain of the first map is not the domain of the second");
    }
    std::vector<std::size_t> t(f.dom().size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = g(f(x));
    return MonotoneMap::from_trusted(f.dom(), g.cod(), std::move(t));
  }

  // Throws precondition_error with a witness unless f is an order-embedding.
  inline void require_embedding(MonotoneMap const& f, std::string const& what) {
    auto k = classify_map(f);
    if (k.is_order_embedding) return;
    auto const& dc = f.dom().carrier();
    if (k.embedding_witness) {
      auto [x, y] = *k.embedding_witness;
      throw precondition_error(what + " is not an order-embedding: " + dc.label(x) + " !<= "
                               + dc.label(y) + " but " + f.cod().carrier().label(f(x))
                               + " <= " + f.cod().carrier().label(f(y)));
    }
    auto [x, y] = *k.monotonicity_witness;
    throw precondition_error(what + " is not monotone: " + dc.label(x) + " <= " + dc.label(y));
  }

}  // namespace pospace
