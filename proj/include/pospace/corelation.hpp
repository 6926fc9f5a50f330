#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pospace/constructions.hpp"
#include "pospace/errors.hpp"
#include "pospace/outcome.hpp"
#include "pospace/pushout.hpp"
#include "pospace/relation.hpp"

namespace pospace {

  struct TaggedPair {
    TaggedPoint from;
    TaggedPoint to;

    friend bool operator==(TaggedPair const&, TaggedPair const&) = default;
  };

  // A quotient object of X + X, held as its pre-order on the tagged carrier.
  // The pre-order always extends the coproduct order.
  class CoRelation {
   public:
    static CoRelation make(Poset base, Preorder preorder) {
      auto doubled = coproduct(base, base);
      if (!(preorder.carrier() == doubled.carrier())) {
        throw precondition_error("co-relation pre-order is not defined on X+X");
      }
      if (!doubled.relation().subset_of(preorder.relation())) {
        for (auto [p, q] : doubled.relation().pairs()) {
          if (!preorder.leq(p, q)) {
            throw precondition_error("co-relation does not extend the coproduct order at ("
                                     + doubled.carrier().label(p) + ", "
                                     + doubled.carrier().label(q) + ")");
          }
        }
      }
      return CoRelation(std::move(base), std::move(doubled), std::move(preorder));
    }

    // For generators whose output extends the coproduct order by construction.
    static CoRelation from_trusted(Poset base, Poset doubled, Preorder preorder) {
      return CoRelation(std::move(base), std::move(doubled), std::move(preorder));
    }

    Poset const&    base() const noexcept { return base_; }
    Poset const&    doubled() const noexcept { return doubled_; }
    Preorder const& preorder() const noexcept { return preorder_; }
    TaggedCarrier   tags() const noexcept { return {base_.size()}; }

    bool holds(TaggedPoint p, TaggedPoint q) const {
      return preorder_.matrix().test(tags().index(p), tags().index(q));
    }
    bool holds(std::size_t x, int i, std::size_t y, int j) const { return holds({x, i}, {y, j}); }
    bool equivalent(TaggedPoint p, TaggedPoint q) const { return holds(p, q) && holds(q, p); }

    std::string describe(TaggedPair const& w) const {
      auto const& c = base_.carrier();
      return tagged_label(c.label(w.from.x), w.from.tag) + " <= " + tagged_label(c.label(w.to.x), w.to.tag);
    }

    friend bool operator==(CoRelation const& a, CoRelation const& b) {
      return a.base_ == b.base_ && a.preorder_ == b.preorder_;
    }

   private:
    CoRelation(Poset base, Poset doubled, Preorder preorder)
        : base_(std::move(base)), doubled_(std::move(doubled)), preorder_(std::move(preorder)) {}

    Poset    base_;
    Poset    doubled_;
    Preorder preorder_;
  };

  struct CoCheck {
    bool                      holds = true;
    std::optional<TaggedPair> witness;
    // Set when the check was not evaluated because its precondition failed.
    bool precondition_failed = false;
  };

  // (x, i) <= (y, j) entails x <= y. Crossing pairs are scanned before
  // same-tag pairs; within each, by tag, then x, then y.
  inline CoCheck is_coreflexive(CoRelation const& c) {
    auto const& x = c.base();
    auto        n = x.size();
    for (int cross = 1; cross >= 0; --cross) {
      for (int i = 0; i < 2; ++i) {
        int j = cross ? 1 - i : i;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (c.holds(a, i, b, j) && !x.leq(a, b)) return {false, TaggedPair{{a, i}, {b, j}}};
          }
        }
      }
    }
    return {};
  }

  // (x, i) <= (y, j) entails (x, i*) <= (y, j*).
  inline CoCheck is_cosymmetric(CoRelation const& c) {
    auto tc = c.tags();
    for (std::size_t p = 0; p < tc.size(); ++p) {
      for (std::size_t q = 0; q < tc.size(); ++q) {
        if (c.preorder().matrix().test(p, q) && !c.preorder().matrix().test(tc.flip(p), tc.flip(q))) {
          return {false, TaggedPair{tc.point(p), tc.point(q)}};
        }
      }
    }
    return {};
  }

  // For a co-reflexive pre-order: every crossing pair (x, i) <= (y, i*) has
  // some z with (x, i) <= (z, i*) and (z, i) <= (y, i*).
  inline CoCheck is_cotransitive(CoRelation const& c) {
    if (!is_coreflexive(c).holds) return {false, std::nullopt, true};
    auto n = c.base().size();
    for (int i = 0; i < 2; ++i) {
      int j = 1 - i;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (!c.holds(x, i, y, j)) continue;
          bool found = false;
          for (std::size_t z = 0; z < n && !found; ++z) {
            found = c.holds(x, i, z, j) && c.holds(z, i, y, j);
          }
          if (!found) return {false, TaggedPair{{x, i}, {y, j}}};
        }
      }
    }
    return {};
  }

  enum class CoAxiom { none, coreflexivity, cosymmetry, cotransitivity };

  inline std::string_view to_string(CoAxiom a) noexcept {
    switch (a) {
      case CoAxiom::none: return "none";
      case CoAxiom::coreflexivity: return "co-reflexivity";
      case CoAxiom::cosymmetry: return "co-symmetry";
      case CoAxiom::cotransitivity: return "co-transitivity";
    }
    return "unknown";
  }

  struct CoDiagnosis {
    bool                      holds  = true;
    CoAxiom                   failed = CoAxiom::none;
    std::optional<TaggedPair> witness;
  };

  inline CoDiagnosis is_equivalence_corelation(CoRelation const& c) {
    if (auto r = is_coreflexive(c); !r.holds) return {false, CoAxiom::coreflexivity, r.witness};
    if (auto r = is_cosymmetric(c); !r.holds) return {false, CoAxiom::cosymmetry, r.witness};
    if (auto r = is_cotransitive(c); !r.holds) return {false, CoAxiom::cotransitivity, r.witness};
    return {};
  }

  struct WitnessEntry {
    std::size_t x   = 0;
    std::size_t y   = 0;
    int         tag = 0;
    std::size_t z   = 0;

    friend bool operator==(WitnessEntry const&, WitnessEntry const&) = default;
  };

  // One entry per crossing pair (x, i) <= (y, i*): a z with x <= z <= y and
  // (z, i) ~ (z, i*).
  struct EffectivenessCertificate {
    std::vector<WitnessEntry> entries;
  };

  // Evaluates the effectiveness criterion on any co-relation. The witness for
  // each crossing pair is the first suitable z in carrier order; on failure the
  // first crossing pair without one is returned.
  inline Outcome<EffectivenessCertificate, TaggedPair> is_effective(CoRelation const& c) {
    auto const&              x = c.base();
    auto                     n = x.size();
    EffectivenessCertificate cert;
    for (int i = 0; i < 2; ++i) {
      int j = 1 - i;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!c.holds(a, i, b, j)) continue;
          std::optional<std::size_t> z;
          for (std::size_t u = 0; u < n && !z; ++u) {
            if (x.leq(a, u) && x.leq(u, b) && c.equivalent({u, i}, {u, j})) z = u;
          }
          if (!z) return TaggedPair{{a, i}, {b, j}};
          cert.entries.push_back({a, b, i, *z});
        }
      }
    }
    return cert;
  }

  // {x | (x, i) ~ (x, i*)}
  inline Bits phi(CoRelation const& c) {
    Bits out(c.base().size());
    for (std::size_t x = 0; x < out.size(); ++x) out.set(x, c.equivalent({x, 0}, {x, 1}));
    return out;
  }

  inline CoRelation corelation_of_subset(Poset const& x, Bits const& y) {
    auto pre = subset_cokernel_preorder(x, y);
    return CoRelation::from_trusted(x, coproduct(x, x), std::move(pre));
  }

  // For an equivalence co-relation and a crossing pair (x, i) <= (y, i*),
  // a maximal element of
  //   Omega = {u | (x, i) <= (u, i*) and (u, i) <= (y, i*)}.
  // Ties between maximal elements go to the one earliest in carrier order.
  // The result is checked to satisfy x <= z <= y and (z, i) ~ (z, i*).
  // Omega is finite and non-empty, so a direct scan finds a maximal element.
  inline std::size_t maximal_witness(CoRelation const& c, std::size_t x, std::size_t y, int i) {
    auto const& base = c.base();
    auto        n    = base.size();
    if (x >= n || y >= n || (i != 0 && i != 1)) throw precondition_error("maximal_witness: index out of range");
    int j = 1 - i;
    if (!c.holds(x, i, y, j)) {
      throw precondition_error("maximal_witness: " + c.describe({{x, i}, {y, j}}) + " does not hold");
    }
    if (auto d = is_equivalence_corelation(c); !d.holds) {
      throw precondition_error("maximal_witness: not an equivalence co-relation ("
                               + std::string(to_string(d.failed)) + ")");
    }
    Bits omega(n);
    for (std::size_t u = 0; u < n; ++u) omega.set(u, c.holds(x, i, u, j) && c.holds(u, i, y, j));
    if (omega.none()) throw invariant_error("maximal_witness: Omega is empty despite co-transitivity");

    std::optional<std::size_t> z;
    for (std::size_t u = 0; u < n && !z; ++u) {
      if (!omega.test(u)) continue;
      bool maximal = true;
      for (std::size_t v = 0; v < n && maximal; ++v) {
        if (v != u && omega.test(v) && base.leq(u, v)) maximal = false;
      }
      if (maximal) z = u;
    }
    if (!z) throw invariant_error("maximal_witness: finite non-empty Omega has no maximal element");
    if (!base.leq(x, *z) || !base.leq(*z, y) || !c.equivalent({*z, i}, {*z, j})) {
      throw invariant_error("maximal_witness: maximal element of Omega fails the witness condition for "
                            + c.describe({{x, i}, {y, j}}));
    }
    return *z;
  }

}  // namespace pospace
