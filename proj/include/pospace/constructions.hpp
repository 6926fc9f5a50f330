#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pospace/errors.hpp"
#include "pospace/monotone_map.hpp"
#include "pospace/outcome.hpp"
#include "pospace/relation.hpp"

namespace pospace {

  // Discrete order on a set.
  inline Poset delta(Carrier const& s) { return Poset::from_trusted(Relation::diagonal(s)); }

  // Improper pre-order X x X.
  inline Preorder nabla(Carrier const& s) { return Preorder::from_trusted(Relation::full(s)); }

  // Label of an equivalence class: member labels sorted lexicographically and
  // joined by '+'. Singleton classes keep their label.
  inline std::string class_label(Carrier const& c, std::vector<std::size_t> const& members) {
    std::vector<std::string> labels;
    labels.reserve(members.size());
    for (auto m : members) labels.push_back(c.label(m));
    std::sort(labels.begin(), labels.end());
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i > 0) out += '+';
      out += labels[i];
    }
    return out;
  }

  struct Reflection {
    Poset                                 quotient;
    MonotoneMap                           projection;
    std::vector<std::vector<std::size_t>> classes;
  };

  // Quotient of a pre-order by its symmetrisation, with the induced partial
  // order. Classes are numbered by their least member.
  inline Reflection reflect(Preorder const& p) {
    auto const&                           m = p.matrix();
    auto                                  n = p.size();
    std::vector<std::size_t>              cls(n, n);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t x = 0; x < n; ++x) {
      if (cls[x] != n) continue;
      std::vector<std::size_t> members;
      for (std::size_t y = x; y < n; ++y) {
        if (m.test(x, y) && m.test(y, x)) {
          cls[y] = classes.size();
          members.push_back(y);
        }
      }
      classes.push_back(std::move(members));
    }
    std::vector<std::string> labels;
    labels.reserve(classes.size());
    for (auto const& c : classes) labels.push_back(class_label(p.carrier(), c));

    BitMatrix q(classes.size());
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = 0; b < classes.size(); ++b) {
        if (m.test(classes[a].front(), classes[b].front())) q.set(a, b);
      }
    }
    auto quotient = Poset::from_trusted(Relation(Carrier(std::move(labels)), std::move(q)));
    auto proj     = MonotoneMap::from_trusted(p, quotient, std::move(cls));
    return {std::move(quotient), std::move(proj), std::move(classes)};
  }

  // Componentwise order; element (a, b) sits at index a * |y| + b.
  inline Poset product(Poset const& x, Poset const& y) {
    auto                     nx = x.size(), ny = y.size();
    std::vector<std::string> labels;
    labels.reserve(nx * ny);
    for (std::size_t a = 0; a < nx; ++a) {
      for (std::size_t b = 0; b < ny; ++b) {
        labels.push_back("(" + x.carrier().label(a) + "," + y.carrier().label(b) + ")");
      }
    }
    BitMatrix m(nx * ny);
    for (std::size_t a = 0; a < nx; ++a) {
      for (std::size_t b = 0; b < ny; ++b) {
        for (std::size_t c = 0; c < nx; ++c) {
          for (std::size_t d = 0; d < ny; ++d) {
            if (x.leq(a, c) && y.leq(b, d)) m.set(a * ny + b, c * ny + d);
          }
        }
      }
    }
    return Poset::from_trusted(Relation(Carrier(std::move(labels)), std::move(m)));
  }

  struct TaggedPoint {
    std::size_t x   = 0;
    int         tag = 0;

    friend bool operator==(TaggedPoint const&, TaggedPoint const&) = default;
  };

  // Index arithmetic for X + X: (x, i) lives at i * |X| + x.
  struct TaggedCarrier {
    std::size_t base = 0;

    std::size_t size() const noexcept { return 2 * base; }
    std::size_t index(std::size_t x, int tag) const noexcept {
      return static_cast<std::size_t>(tag) * base + x;
    }
    std::size_t index(TaggedPoint p) const noexcept { return index(p.x, p.tag); }
    TaggedPoint point(std::size_t idx) const noexcept {
      return {idx % base, static_cast<int>(idx / base)};
    }
    std::size_t flip(std::size_t idx) const noexcept {
      auto p = point(idx);
      return index(p.x, 1 - p.tag);
    }
  };

  inline std::string tagged_label(std::string const& label, int tag) {
    return "(" + label + "," + std::to_string(tag) + ")";
  }

  namespace detail {
    inline Relation coproduct_relation(Preorder const& x, Preorder const& y) {
      std::vector<std::string> labels;
      labels.reserve(x.size() + y.size());
      for (auto const& l : x.carrier().labels()) labels.push_back(tagged_label(l, 0));
      for (auto const& l : y.carrier().labels()) labels.push_back(tagged_label(l, 1));
      auto      nx = x.size();
      BitMatrix m(nx + y.size());
      for (std::size_t a = 0; a < nx; ++a) {
        for (std::size_t b = 0; b < nx; ++b) {
          if (x.leq(a, b)) m.set(a, b);
        }
      }
      for (std::size_t a = 0; a < y.size(); ++a) {
        for (std::size_t b = 0; b < y.size(); ++b) {
          if (y.leq(a, b)) m.set(nx + a, nx + b);
        }
      }
      return Relation(Carrier(std::move(labels)), std::move(m));
    }
  }  // namespace detail

  // Disjoint union, left summand first; labels become "(label,0)" / "(label,1)".
  inline Preorder coproduct(Preorder const& x, Preorder const& y) {
    return Preorder::from_trusted(detail::coproduct_relation(x, y));
  }

  inline Poset coproduct(Poset const& x, Poset const& y) {
    return Poset::from_trusted(detail::coproduct_relation(x, y));
  }

  // Coproduct injection of summand `side` into x + y.
  inline MonotoneMap injection(Preorder const& x, Preorder const& y, int side) {
    auto                     sum    = coproduct(x, y);
    auto const&              source = side == 0 ? x : y;
    std::size_t              offset = side == 0 ? 0 : x.size();
    std::vector<std::size_t> t(source.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = offset + i;
    return MonotoneMap::from_trusted(source, std::move(sum), std::move(t));
  }

  // The map dom(f0) + dom(f1) -> Z that is f0 on the left and f1 on the right.
  inline MonotoneMap copair(MonotoneMap const& f0, MonotoneMap const& f1) {
    if (!(f0.cod() == f1.cod())) throw precondition_error("copair: maps have different codomains");
    std::vector<std::size_t> t;
    t.reserve(f0.dom().size() + f1.dom().size());
    for (auto v : f0.table()) t.push_back(v);
    for (auto v : f1.table()) t.push_back(v);
    return MonotoneMap::from_trusted(coproduct(f0.dom(), f1.dom()), f0.cod(), std::move(t));
  }

  // (1_X, 1_X) : X + X -> X
  inline MonotoneMap codiagonal(Preorder const& x) {
    auto id = MonotoneMap::identity(x);
    return copair(id, id);
  }

  // (x, i) -> (x, i*) on X + X
  inline MonotoneMap tag_swap(Preorder const& x) {
    auto                     sum = coproduct(x, x);
    TaggedCarrier            tc{x.size()};
    std::vector<std::size_t> t(sum.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = tc.flip(i);
    return MonotoneMap::from_trusted(sum, sum, std::move(t));
  }

  // Subset with the induced order, and its inclusion map.
  inline MonotoneMap inclusion(Preorder const& p, Bits const& subset) {
    auto                     members = subset.indices();
    std::vector<std::string> labels;
    for (auto m : members) labels.push_back(p.carrier().label(m));
    BitMatrix sub(members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = 0; b < members.size(); ++b) {
        if (p.leq(members[a], members[b])) sub.set(a, b);
      }
    }
    auto dom = Preorder::from_trusted(Relation(Carrier(std::move(labels)), std::move(sub)));
    return MonotoneMap::from_trusted(std::move(dom), p, std::move(members));
  }

  inline Bits image(MonotoneMap const& f) {
    Bits b(f.cod().size());
    for (auto v : f.table()) b.set(v);
    return b;
  }

  // An element of Quot(X), represented canonically by a pre-order on X that
  // extends the order of X.
  class QuotientObject {
   public:
    static QuotientObject make(Poset source, Preorder preorder) {
      if (!(source.carrier() == preorder.carrier())) {
        throw precondition_error("quotient pre-order lives on a different carrier than its source");
      }
      for (auto [x, y] : source.relation().pairs()) {
        if (!preorder.leq(x, y)) {
          throw precondition_error("pre-order does not extend the source order at ("
                                   + source.carrier().label(x) + ", " + source.carrier().label(y)
                                   + ")");
        }
      }
      return QuotientObject(std::move(source), std::move(preorder));
    }

    Poset const&    source() const noexcept { return source_; }
    Preorder const& preorder() const noexcept { return preorder_; }

    friend bool operator==(QuotientObject const&, QuotientObject const&) = default;

   private:
    QuotientObject(Poset s, Preorder p) : source_(std::move(s)), preorder_(std::move(p)) {}

    Poset    source_;
    Preorder preorder_;
  };

  // x1 <=_f x2 iff f(x1) <= f(x2). Surjectivity is not required.
  inline QuotientObject preorder_of_map(MonotoneMap const& f) {
    auto      source = as_poset(f.dom());
    auto      n      = source.size();
    BitMatrix m(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (f.cod().leq(f(a), f(b))) m.set(a, b);
      }
    }
    auto pre = Preorder::from_trusted(Relation(source.carrier(), std::move(m)));
    return QuotientObject::make(std::move(source), std::move(pre));
  }

  // The surjection X ->> X/~ with the direct-image order. The projection's
  // domain is the source poset rather than the pre-ordered set.
  inline Reflection quotient_of_preorder(QuotientObject const& q) {
    auto r       = reflect(q.preorder());
    r.projection = MonotoneMap::from_trusted(q.source(), r.quotient, r.projection.table());
    return r;
  }

  // g with g ∘ f1 = f2, when f1(x) <= f1(y) implies f2(x) <= f2(y) for all x, y.
  // Otherwise the first violating pair (x, y) in row-major order.
  inline Outcome<MonotoneMap, IndexPair> factor_through(MonotoneMap const& f1,
                                                        MonotoneMap const& f2) {
    if (!(f1.dom() == f2.dom())) throw precondition_error("factor_through: maps have different domains");
    auto k = classify_map(f1);
    if (!k.is_surjective) {
      throw precondition_error("factor_through: first map is not surjective; "
                               + f1.cod().carrier().label(*k.surjectivity_witness)
                               + " is not in its image");
    }
    auto n = f1.dom().size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (f1.cod().leq(f1(x), f1(y)) && !f2.cod().leq(f2(x), f2(y))) return IndexPair{x, y};
      }
    }
    auto                     missing = f2.cod().size();
    std::vector<std::size_t> g(f1.cod().size(), missing);
    for (std::size_t x = 0; x < n; ++x) {
      auto& slot = g[f1(x)];
      if (slot != missing && slot != f2(x)) {
        // only possible when the codomain of f2 is not antisymmetric
        throw precondition_error("factor_through: induced map is not single-valued at "
                                 + f1.cod().carrier().label(f1(x)));
      }
      slot = f2(x);
    }
    auto made = MonotoneMap::make(f1.cod(), f2.cod(), std::move(g));
    if (!made) throw invariant_error("factor_through: induced map is not monotone");
    return std::move(made).value();
  }

  // Inclusion of {x | q0(x) = q1(x)} with the induced order.
  inline MonotoneMap equalizer(MonotoneMap const& q0, MonotoneMap const& q1) {
    if (!(q0.dom() == q1.dom()) || !(q0.cod() == q1.cod())) {
      throw precondition_error("equalizer: maps must share domain and codomain");
    }
    Bits agree(q0.dom().size());
    for (std::size_t x = 0; x < agree.size(); ++x) agree.set(x, q0(x) == q1(x));
    return inclusion(q0.dom(), agree);
  }

}  // namespace pospace
