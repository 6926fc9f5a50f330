#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pospace/bits.hpp"
#include "pospace/carrier.hpp"
#include "pospace/errors.hpp"
#include "pospace/outcome.hpp"

namespace pospace {

  struct IndexPair {
    std::size_t first  = 0;
    std::size_t second = 0;

    friend bool operator==(IndexPair const&, IndexPair const&) = default;
  };

  // A binary relation on a carrier.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(Carrier carrier)
        : carrier_(std::move(carrier)), matrix_(carrier_.size()) {}

    Relation(Carrier carrier, BitMatrix matrix)
        : carrier_(std::move(carrier)), matrix_(std::move(matrix)) {
      if (matrix_.size() != carrier_.size()) {
        throw precondition_error("relation matrix size " + std::to_string(matrix_.size())
                                 + " does not match carrier size "
                                 + std::to_string(carrier_.size()));
      }
    }

    Relation(Carrier carrier, std::vector<IndexPair> const& pairs) : Relation(std::move(carrier)) {
      for (auto [x, y] : pairs) add(x, y);
    }

    static Relation diagonal(Carrier carrier) {
      auto n = carrier.size();
      return Relation(std::move(carrier), BitMatrix::identity(n));
    }

    static Relation full(Carrier carrier) {
      auto n = carrier.size();
      return Relation(std::move(carrier), BitMatrix::full(n));
    }

    Carrier const&   carrier() const noexcept { return carrier_; }
    BitMatrix const& matrix() const noexcept { return matrix_; }
    std::size_t      size() const noexcept { return carrier_.size(); }

    bool holds(std::size_t x, std::size_t y) const {
      check_index(x);
      check_index(y);
      return matrix_.test(x, y);
    }

    void add(std::size_t x, std::size_t y) {
      check_index(x);
      check_index(y);
      matrix_.set(x, y);
    }

    std::vector<IndexPair> pairs() const {
      std::vector<IndexPair> out;
      for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t y = 0; y < size(); ++y) {
          if (matrix_.test(x, y)) out.push_back({x, y});
        }
      }
      return out;
    }

    bool subset_of(Relation const& other) const noexcept {
      return matrix_.size() == other.matrix_.size() && matrix_.subset_of(other.matrix_);
    }

    friend bool operator==(Relation const&, Relation const&) = default;

   private:
    void check_index(std::size_t i) const {
      if (i >= size()) {
        throw precondition_error("index " + std::to_string(i) + " out of range for carrier of size "
                                 + std::to_string(size()));
      }
    }

    Carrier   carrier_;
    BitMatrix matrix_;
  };

  enum class Axiom { reflexivity, transitivity, antisymmetry };

  inline std::string_view to_string(Axiom a) noexcept {
    switch (a) {
      case Axiom::reflexivity: return "reflexivity";
      case Axiom::transitivity: return "transitivity";
      case Axiom::antisymmetry: return "antisymmetry";
    }
    return "unknown";
  }

  // Which order axiom failed, and on which elements.
  //   reflexivity:  (x, x) missing; y == x
  //   antisymmetry: x R y and y R x with x != y
  //   transitivity: x R via, via R y, but not x R y
  struct AxiomViolation {
    Axiom                      axiom;
    std::size_t                x = 0;
    std::size_t                y = 0;
    std::optional<std::size_t> via;

    std::string describe(Carrier const& c) const {
      std::string s(to_string(axiom));
      s += " violated at (" + c.label(x) + ", " + c.label(y) + ")";
      if (via) s += " via " + c.label(*via);
      return s;
    }

    friend bool operator==(AxiomViolation const&, AxiomViolation const&) = default;
  };

  class Preorder;
  class Poset;

  Outcome<Preorder, AxiomViolation> check_preorder(Relation const& r);
  Outcome<Poset, AxiomViolation>    check_poset(Relation const& r);

  // A reflexive, transitive relation. Closedness in X x X holds trivially on a
  // finite discrete carrier; see is_closed().
  class Preorder {
   public:
    Relation const&  relation() const noexcept { return rel_; }
    Carrier const&   carrier() const noexcept { return rel_.carrier(); }
    BitMatrix const& matrix() const noexcept { return rel_.matrix(); }
    std::size_t      size() const noexcept { return rel_.size(); }

    bool leq(std::size_t x, std::size_t y) const { return rel_.holds(x, y); }

    // Topological closedness of the relation. Always true at finite scale.
    static constexpr bool is_closed() noexcept { return true; }

    // For generators that build relations already known to satisfy the axioms.
    // No checking is done.
    static Preorder from_trusted(Relation r) { return Preorder(std::move(r)); }

    friend bool operator==(Preorder const& a, Preorder const& b) { return a.rel_ == b.rel_; }

   protected:
    explicit Preorder(Relation r) : rel_(std::move(r)) {}

   private:
    friend Outcome<Preorder, AxiomViolation> check_preorder(Relation const& r);

    Relation rel_;
  };

  // An antisymmetric pre-order.
  class Poset : public Preorder {
   public:
    Poset() : Preorder(Relation()) {}

    static Poset from_trusted(Relation r) { return Poset(std::move(r)); }

   private:
    explicit Poset(Relation r) : Preorder(std::move(r)) {}

    friend Outcome<Poset, AxiomViolation> check_poset(Relation const& r);
  };

  namespace detail {
    inline std::optional<AxiomViolation> reflexivity_violation(BitMatrix const& m) {
      for (std::size_t x = 0; x < m.size(); ++x) {
        if (!m.test(x, x)) return AxiomViolation{Axiom::reflexivity, x, x, std::nullopt};
      }
      return std::nullopt;
    }

    inline std::optional<AxiomViolation> transitivity_violation(BitMatrix const& m) {
      auto n = m.size();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t v = 0; v < n; ++v) {
          if (!m.test(x, v) || m.row_subset(v, x)) continue;
          for (std::size_t y = 0; y < n; ++y) {
            if (m.test(v, y) && !m.test(x, y)) {
              return AxiomViolation{Axiom::transitivity, x, y, v};
            }
          }
        }
      }
      return std::nullopt;
    }

    inline std::optional<AxiomViolation> antisymmetry_violation(BitMatrix const& m) {
      for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t y = x + 1; y < m.size(); ++y) {
          if (m.test(x, y) && m.test(y, x)) {
            return AxiomViolation{Axiom::antisymmetry, x, y, std::nullopt};
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  inline Outcome<Preorder, AxiomViolation> check_preorder(Relation const& r) {
    if (auto v = detail::reflexivity_violation(r.matrix())) return *v;
    if (auto v = detail::transitivity_violation(r.matrix())) return *v;
    return Preorder(r);
  }

  // Axioms are checked in the order reflexivity, transitivity, antisymmetry;
  // the first failure is reported.
  inline Outcome<Poset, AxiomViolation> check_poset(Relation const& r) {
    if (auto v = detail::reflexivity_violation(r.matrix())) return *v;
    if (auto v = detail::transitivity_violation(r.matrix())) return *v;
    if (auto v = detail::antisymmetry_violation(r.matrix())) return *v;
    return Poset(r);
  }

  // Validates that a pre-order is antisymmetric; throws precondition_error
  // naming the witness otherwise.
  inline Poset as_poset(Preorder const& p) {
    if (auto v = detail::antisymmetry_violation(p.matrix())) {
      throw precondition_error("not a partial order: " + v->describe(p.carrier()));
    }
    return Poset::from_trusted(p.relation());
  }

  inline Preorder reflexive_transitive_closure(Relation const& r) {
    auto m = r.matrix();
    for (std::size_t i = 0; i < m.size(); ++i) m.set(i, i);
    m.transitive_close();
    return Preorder::from_trusted(Relation(r.carrier(), std::move(m)));
  }

  // ~ = p ∩ p^op
  inline Relation symmetrize(Preorder const& p) {
    auto m = p.matrix();
    m &= p.matrix().transposed();
    return Relation(p.carrier(), std::move(m));
  }

  inline Preorder opposite(Preorder const& p) {
    return Preorder::from_trusted(Relation(p.carrier(), p.matrix().transposed()));
  }

  inline Poset opposite(Poset const& p) {
    return Poset::from_trusted(Relation(p.carrier(), p.matrix().transposed()));
  }

  inline Bits down_closure(Preorder const& p, Bits const& s) {
    Bits out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t d = 0; d < p.size(); ++d) {
        if (s.test(d) && p.matrix().test(x, d)) {
          out.set(x);
          break;
        }
      }
    }
    return out;
  }

  inline Bits up_closure(Preorder const& p, Bits const& s) {
    Bits out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t d = 0; d < p.size(); ++d) {
        if (s.test(d) && p.matrix().test(d, x)) {
          out.set(x);
          break;
        }
      }
    }
    return out;
  }

  inline bool is_up_set(Preorder const& p, Bits const& s) { return up_closure(p, s) == s; }
  inline bool is_down_set(Preorder const& p, Bits const& s) { return down_closure(p, s) == s; }

  // Transitive reduction (Hasse diagram): x < y with nothing strictly between.
  inline Relation covering_relation(Poset const& p) {
    auto const& m = p.matrix();
    auto        n = p.size();
    Relation    cover(p.carrier());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y || !m.test(x, y)) continue;
        bool covered = true;
        for (std::size_t z = 0; z < n && covered; ++z) {
          if (z != x && z != y && m.test(x, z) && m.test(z, y)) covered = false;
        }
        if (covered) cover.add(x, y);
      }
    }
    return cover;
  }

}  // namespace pospace
