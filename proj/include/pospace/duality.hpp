#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pospace/constructions.hpp"
#include "pospace/errors.hpp"
#include "pospace/monotone_map.hpp"
#include "pospace/outcome.hpp"
#include "pospace/relation.hpp"

namespace pospace {

  struct LatticeViolation {
    enum class Kind { empty, no_meet, no_join };

    Kind        kind;
    std::size_t x = 0;
    std::size_t y = 0;

    std::string describe(Carrier const& c) const {
      switch (kind) {
        case Kind::empty: return "a bounded lattice needs at least one element";
        case Kind::no_meet: return "no greatest lower bound of " + c.label(x) + " and " + c.label(y);
        case Kind::no_join: return "no least upper bound of " + c.label(x) + " and " + c.label(y);
      }
      return "not a lattice";
    }
  };

  // A finite bounded lattice: a poset together with its meet/join tables.
  class Lattice {
   public:
    static Outcome<Lattice, LatticeViolation> from_poset(Poset order) {
      auto n = order.size();
      if (n == 0) return LatticeViolation{LatticeViolation::Kind::empty};
      std::vector<std::size_t> meet(n * n), join(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          auto lo = extremum(order, a, b, /*upper=*/false);
          if (!lo) return LatticeViolation{LatticeViolation::Kind::no_meet, a, b};
          auto hi = extremum(order, a, b, /*upper=*/true);
          if (!hi) return LatticeViolation{LatticeViolation::Kind::no_join, a, b};
          meet[a * n + b] = *lo;
          join[a * n + b] = *hi;
        }
      }
      std::size_t bot = 0, top = 0;
      for (std::size_t a = 1; a < n; ++a) {
        bot = meet[bot * n + a];
        top = join[top * n + a];
      }
      return Lattice(std::move(order), std::move(meet), std::move(join), bot, top);
    }

    Poset const&   order() const noexcept { return order_; }
    Carrier const& carrier() const noexcept { return order_.carrier(); }
    std::size_t    size() const noexcept { return order_.size(); }
    bool           leq(std::size_t a, std::size_t b) const { return order_.leq(a, b); }
    std::size_t    meet(std::size_t a, std::size_t b) const { return meet_.at(a * size() + b); }
    std::size_t    join(std::size_t a, std::size_t b) const { return join_.at(a * size() + b); }
    std::size_t    bot() const noexcept { return bot_; }
    std::size_t    top() const noexcept { return top_; }

    friend bool operator==(Lattice const& a, Lattice const& b) { return a.order_ == b.order_; }

   private:
    Lattice(Poset order, std::vector<std::size_t> meet, std::vector<std::size_t> join, std::size_t bot,
            std::size_t top)
        : order_(std::move(order)), meet_(std::move(meet)), join_(std::move(join)), bot_(bot), top_(top) {}

    static std::optional<std::size_t> extremum(Poset const& p, std::size_t a, std::size_t b, bool upper) {
      auto                     n = p.size();
      std::vector<std::size_t> bounds;
      for (std::size_t c = 0; c < n; ++c) {
        bool bound = upper ? (p.leq(a, c) && p.leq(b, c)) : (p.leq(c, a) && p.leq(c, b));
        if (bound) bounds.push_back(c);
      }
      for (auto c : bounds) {
        bool best = std::all_of(bounds.begin(), bounds.end(),
                                [&](auto d) { return upper ? p.leq(c, d) : p.leq(d, c); });
        if (best) return c;
      }
      return std::nullopt;
    }

    Poset                    order_;
    std::vector<std::size_t> meet_;
    std::vector<std::size_t> join_;
    std::size_t              bot_ = 0;
    std::size_t              top_ = 0;
  };

  // x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)
  using DistributivityViolation = std::array<std::size_t, 3>;

  inline std::optional<DistributivityViolation> distributivity_witness(Lattice const& l) {
    auto n = l.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
            return DistributivityViolation{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline std::string subset_label(Carrier const& c, Bits const& s) {
    std::string out = "{";
    bool        first = true;
    for (auto i : s.indices()) {
      if (!first) out += ',';
      out += c.label(i);
      first = false;
    }
    return out + "}";
  }

  inline constexpr std::size_t max_upset_poset = 20;

  // All up-sets of p, ordered by size and then by their sorted member lists.
  inline std::vector<Bits> up_sets(Preorder const& p) {
    auto n = p.size();
    if (n > max_upset_poset) {
      throw budget_error("up-set enumeration limited to " + std::to_string(max_upset_poset) + " elements");
    }
    std::vector<std::uint64_t> up(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        if (p.leq(v, w)) up[v] |= std::uint64_t{1} << w;
      }
    }
    std::vector<Bits> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      bool closed = true;
      for (std::size_t v = 0; v < n && closed; ++v) {
        if ((mask >> v) & 1U) closed = (up[v] & ~mask) == 0;
      }
      if (!closed) continue;
      Bits b(n);
      for (std::size_t v = 0; v < n; ++v) b.set(v, (mask >> v) & 1U);
      out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](Bits const& a, Bits const& b) {
      if (a.count() != b.count()) return a.count() < b.count();
      return a.indices() < b.indices();
    });
    return out;
  }

  // Up-sets of p ordered by inclusion; meet is intersection, join is union.
  inline Lattice upset_lattice(Preorder const& p) {
    auto                     sets = up_sets(p);
    std::vector<std::string> labels;
    labels.reserve(sets.size());
    for (auto const& s : sets) labels.push_back(subset_label(p.carrier(), s));
    BitMatrix m(sets.size());
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t b = 0; b < sets.size(); ++b) {
        if (sets[a].subset_of(sets[b])) m.set(a, b);
      }
    }
    auto lattice = Lattice::from_poset(Poset::from_trusted(Relation(Carrier(std::move(labels)), std::move(m))));
    if (!lattice) throw invariant_error("up-sets do not form a lattice");

    std::map<Bits, std::size_t> where;
    for (std::size_t a = 0; a < sets.size(); ++a) where.emplace(sets[a], a);
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t b = 0; b < sets.size(); ++b) {
        if (lattice->meet(a, b) != where.at(sets[a] & sets[b])
            || lattice->join(a, b) != where.at(sets[a] | sets[b])) {
          throw invariant_error("up-set lattice operations are not intersection and union");
        }
      }
    }
    return std::move(lattice).value();
  }

  // Join-irreducible elements (not bottom, not the join of two strictly
  // smaller elements) with the induced order.
  inline Outcome<Poset, DistributivityViolation> join_irreducibles(Lattice const& l) {
    if (auto w = distributivity_witness(l)) return *w;
    auto n = l.size();
    Bits keep(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == l.bot()) continue;
      bool irreducible = true;
      for (std::size_t a = 0; a < n && irreducible; ++a) {
        if (a == j || !l.leq(a, j)) continue;
        for (std::size_t b = 0; b < n && irreducible; ++b) {
          if (b == j || !l.leq(b, j)) continue;
          if (l.join(a, b) == j) irreducible = false;
        }
      }
      keep.set(j, irreducible);
    }
    auto inc = inclusion(l.order(), keep);
    return Poset::from_trusted(inc.dom().relation());
  }

  // Inverse of upset_lattice up to isomorphism: the join-irreducibles in
  // reverse order, i.e. the principal prime filters ordered by inclusion.
  // join_irreducibles(upset_lattice(P)) is P^op; spectrum(upset_lattice(P)) is P.
  inline Outcome<Poset, DistributivityViolation> spectrum(Lattice const& l) {
    auto j = join_irreducibles(l);
    if (!j) return j.error();
    return opposite(*j);
  }

  // A map between bounded lattices, held as a table.
  struct LatticeHom {
    Lattice                  dom;
    Lattice                  cod;
    std::vector<std::size_t> table;

    std::size_t operator()(std::size_t a) const { return table.at(a); }

    bool preserves_operations() const {
      auto n = dom.size();
      if (table[dom.bot()] != cod.bot() || table[dom.top()] != cod.top()) return false;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (table[dom.meet(a, b)] != cod.meet(table[a], table[b])) return false;
          if (table[dom.join(a, b)] != cod.join(table[a], table[b])) return false;
        }
      }
      return true;
    }

    friend bool operator==(LatticeHom const&, LatticeHom const&) = default;
  };

  // h ∘ g
  inline LatticeHom compose(LatticeHom const& h, LatticeHom const& g) {
    if (!(g.cod == h.dom)) throw precondition_error("cannot compose lattice homomorphisms");
    std::vector<std::size_t> t(g.dom.size());
    for (std::size_t a = 0; a < t.size(); ++a) t[a] = h(g(a));
    return {g.dom, h.cod, std::move(t)};
  }

  // U |-> f^{-1}(U) : Up(Q) -> Up(P) for monotone f : P -> Q.
  inline LatticeHom dual_map(MonotoneMap const& f) {
    auto up_q = up_sets(f.cod());
    auto up_p = up_sets(f.dom());
    std::map<Bits, std::size_t> where;
    for (std::size_t a = 0; a < up_p.size(); ++a) where.emplace(up_p[a], a);

    std::vector<std::size_t> t(up_q.size());
    for (std::size_t u = 0; u < up_q.size(); ++u) {
      Bits pre(f.dom().size());
      for (std::size_t x = 0; x < pre.size(); ++x) pre.set(x, up_q[u].test(f(x)));
      auto it = where.find(pre);
      if (it == where.end()) throw invariant_error("preimage of an up-set is not an up-set");
      t[u] = it->second;
    }
    LatticeHom h{upset_lattice(f.cod()), upset_lattice(f.dom()), std::move(t)};
    if (!h.preserves_operations()) throw invariant_error("dual map is not a bounded lattice homomorphism");
    return h;
  }

  struct SeparatingEntry {
    std::size_t x = 0;
    std::size_t y = 0;
    Bits        up_set;  // contains x, omits y
  };

  struct PriestleyReport {
    bool                         holds = true;
    std::vector<SeparatingEntry> table;
  };

  // For every x !<= y, looks for an up-set containing x but not y (every
  // subset is clopen at finite scale). The candidate is the principal up-set
  // of x, and each candidate is checked rather than assumed.
  inline PriestleyReport is_priestley(Poset const& p) {
    PriestleyReport r;
    auto            n = p.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (p.leq(x, y)) continue;
        auto u  = up_closure(p, Bits::of(n, {x}));
        bool ok = is_up_set(p, u) && u.test(x) && !u.test(y);
        if (!ok) r.holds = false;
        r.table.push_back({x, y, std::move(u)});
      }
    }
    return r;
  }

  // 0 < 1
  inline Poset two_chain() {
    Relation r(Carrier({"0", "1"}), std::vector<IndexPair>{{0, 0}, {0, 1}, {1, 1}});
    return Poset::from_trusted(std::move(r));
  }

  // Characteristic map of the principal up-set of x, so f(x) = 1 and f(y) = 0.
  inline MonotoneMap separate(Poset const& p, std::size_t x, std::size_t y) {
    if (x >= p.size() || y >= p.size()) throw precondition_error("separate: index out of range");
    if (p.leq(x, y)) {
      throw precondition_error("separate: " + p.carrier().label(x) + " <= " + p.carrier().label(y)
                               + ", nothing to separate");
    }
    auto                     u = up_closure(p, Bits::of(p.size(), {x}));
    std::vector<std::size_t> t(p.size());
    for (std::size_t v = 0; v < t.size(); ++v) t[v] = u.test(v) ? 1 : 0;
    return MonotoneMap::checked(p, two_chain(), std::move(t));
  }

}  // namespace pospace
