#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pospace/relation.hpp"

namespace pospace {

  namespace detail {
    // (|down-set|, |up-set|): in-degree and out-degree of the order relation.
    inline std::vector<std::pair<std::size_t, std::size_t>> degree_invariants(Preorder const& p) {
      auto const&                                      m = p.matrix();
      std::vector<std::pair<std::size_t, std::size_t>> inv(p.size());
      for (std::size_t v = 0; v < p.size(); ++v) {
        inv[v] = {m.column_bits(v).count(), m.row_bits(v).count()};
      }
      return inv;
    }
  }  // namespace detail

  // Isomorphism-invariant encoding of a pre-order. Two pre-orders are
  // isomorphic iff their keys are equal. `order[k]` is the element placed at
  // canonical position k.
  struct CanonicalForm {
    std::vector<std::uint8_t> key;
    std::vector<std::size_t>  order;

    friend bool operator==(CanonicalForm const& a, CanonicalForm const& b) { return a.key == b.key; }
    friend auto operator<=>(CanonicalForm const& a, CanonicalForm const& b) { return a.key <=> b.key; }
  };

  // Backtracking over orderings that list elements by increasing
  // (in-degree, out-degree); the lexicographically least relation bit string
  // wins. Exponential in the size of the largest invariant class, so meant for
  // small carriers (n <= 8).
  inline CanonicalForm canonical_form(Preorder const& p) {
    auto const& m   = p.matrix();
    auto        n   = p.size();
    auto        inv = detail::degree_invariants(p);

    std::vector<std::size_t> sorted(n);
    for (std::size_t i = 0; i < n; ++i) sorted[i] = i;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](auto a, auto b) { return inv[a] < inv[b]; });

    std::vector<std::uint8_t> header;
    header.push_back(static_cast<std::uint8_t>(n));
    for (auto v : sorted) {
      header.push_back(static_cast<std::uint8_t>(inv[v].first));
      header.push_back(static_cast<std::uint8_t>(inv[v].second));
    }

    std::vector<std::uint8_t> best, cur;
    std::vector<std::size_t>  best_order, cur_order;
    std::vector<bool>         used(n, false);
    bool                      have_best = false;

    auto search = [&](auto& self, std::size_t k) -> void {
      if (k == n) {
        if (!have_best || cur < best) {
          best       = cur;
          best_order = cur_order;
          have_best  = true;
        }
        return;
      }
      auto want = inv[sorted[k]];
      for (std::size_t v = 0; v < n; ++v) {
        if (used[v] || inv[v] != want) continue;
        auto mark = cur.size();
        for (std::size_t t = 0; t < k; ++t) {
          cur.push_back(m.test(cur_order[t], v));
          cur.push_back(m.test(v, cur_order[t]));
        }
        cur.push_back(m.test(v, v));
        bool prune = false;
        if (have_best) {
          prune = std::lexicographical_compare(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(cur.size()),
                                               cur.begin(), cur.end());
        }
        if (!prune) {
          used[v] = true;
          cur_order.push_back(v);
          self(self, k + 1);
          cur_order.pop_back();
          used[v] = false;
        }
        cur.resize(mark);
      }
    };
    search(search, 0);

    CanonicalForm cf;
    cf.key = std::move(header);
    cf.key.insert(cf.key.end(), best.begin(), best.end());
    cf.order = std::move(best_order);
    return cf;
  }

  // An order isomorphism p -> q as a table, found by backtracking that only
  // pairs elements with equal degree invariants.
  inline std::optional<std::vector<std::size_t>> find_isomorphism(Preorder const& p, Preorder const& q) {
    auto n = p.size();
    if (q.size() != n) return std::nullopt;
    auto ip = detail::degree_invariants(p);
    auto iq = detail::degree_invariants(q);
    {
      auto a = ip, b = iq;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return std::nullopt;
    }
    auto const& mp = p.matrix();
    auto const& mq = q.matrix();

    std::vector<std::size_t> map(n, n);
    std::vector<bool>        used(n, false);

    auto search = [&](auto& self, std::size_t k) -> bool {
      if (k == n) return true;
      for (std::size_t v = 0; v < n; ++v) {
        if (used[v] || iq[v] != ip[k]) continue;
        bool ok = mp.test(k, k) == mq.test(v, v);
        for (std::size_t t = 0; t < k && ok; ++t) {
          ok = mp.test(t, k) == mq.test(map[t], v) && mp.test(k, t) == mq.test(v, map[t]);
        }
        if (!ok) continue;
        used[v] = true;
        map[k]  = v;
        if (self(self, k + 1)) return true;
        used[v] = false;
      }
      return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return map;
  }

  inline bool is_isomorphic(Preorder const& p, Preorder const& q) {
    return find_isomorphism(p, q).has_value();
  }

}  // namespace pospace
