#pragma once

// Small builders and naive reference computations for the unit tests. The
// reference code works on label pairs and never calls the library's closure
// or axiom checks.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pospace/pospace.hpp"

namespace support {

  using LabelPair = std::pair<std::string, std::string>;
  using PairSet   = std::set<LabelPair>;

  inline pospace::Carrier carrier_of(std::string const& letters) {
    std::vector<std::string> labels;
    for (char ch : letters) labels.emplace_back(1, ch);
    return pospace::Carrier(std::move(labels));
  }

  // Reflexive-transitive closure by fixpoint iteration over label pairs.
  inline PairSet naive_closure(std::string const& letters, PairSet pairs) {
    for (char ch : letters) pairs.insert({std::string(1, ch), std::string(1, ch)});
    bool grew = true;
    while (grew) {
      grew = false;
      PairSet add;
      for (auto const& [a, b] : pairs) {
        for (auto const& [c, d] : pairs) {
          if (b == c && !pairs.count({a, d})) add.insert({a, d});
        }
      }
      grew = !add.empty();
      pairs.insert(add.begin(), add.end());
    }
    return pairs;
  }

  // "ab" means a <= b.
  inline PairSet pairs_of(std::vector<std::string> const& gens) {
    PairSet out;
    for (auto const& g : gens) out.insert({std::string(1, g[0]), std::string(1, g[1])});
    return out;
  }

  inline pospace::Relation relation_of(std::string const& letters, PairSet const& pairs) {
    auto              c = carrier_of(letters);
    pospace::Relation r(c);
    for (auto const& [a, b] : pairs) r.add(c.index_of(a), c.index_of(b));
    return r;
  }

  inline pospace::Preorder preorder(std::string const& letters, std::vector<std::string> const& gens) {
    return pospace::check_preorder(relation_of(letters, naive_closure(letters, pairs_of(gens)))).value();
  }

  inline pospace::Poset poset(std::string const& letters, std::vector<std::string> const& gens) {
    return pospace::check_poset(relation_of(letters, naive_closure(letters, pairs_of(gens)))).value();
  }

  inline pospace::Poset chain(std::size_t n) {
    std::string              letters;
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < n; ++i) letters += static_cast<char>('a' + i);
    for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(letters.substr(i, 2));
    return poset(letters, gens);
  }

  inline pospace::Poset antichain(std::size_t n) {
    std::string letters;
    for (std::size_t i = 0; i < n; ++i) letters += static_cast<char>('a' + i);
    return poset(letters, {});
  }

  // bot < m1, m2 < top, labelled 0 < l, r < 1.
  inline pospace::Poset diamond() { return poset("0lr1", {"0l", "0r", "l1", "r1"}); }

  inline PairSet label_pairs(pospace::Preorder const& p) {
    PairSet out;
    for (auto [x, y] : p.relation().pairs()) out.insert({p.carrier().label(x), p.carrier().label(y)});
    return out;
  }

  inline std::set<std::string> labels_in(pospace::Carrier const& c, pospace::Bits const& s) {
    std::set<std::string> out;
    for (auto v : s.indices()) out.insert(c.label(v));
    return out;
  }

  inline pospace::Bits subset_of(pospace::Carrier const& c, std::vector<std::string> const& labels) {
    pospace::Bits b(c.size());
    for (auto const& l : labels) b.set(c.index_of(l));
    return b;
  }

  inline pospace::MonotoneMap map_of(pospace::Preorder const& dom, pospace::Preorder const& cod,
                                     std::vector<std::string> const& images) {
    std::vector<std::size_t> t;
    for (auto const& l : images) t.push_back(cod.carrier().index_of(l));
    return pospace::MonotoneMap::checked(dom, cod, std::move(t));
  }

}  // namespace support
