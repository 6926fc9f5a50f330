#pragma once

// JSON documents for the value types. Keys are emitted in a fixed order so
// identical values always serialise to identical bytes.
//
//   Poset / Preorder   {"elements": [..], "pairs": [[x, y], ..]}   diagonal implied
//   Lattice            poset fields + "bot", "top"
//   MonotoneMap        {"dom": <poset>, "cod": <poset>, "map": {x: f(x), ..}}
//   PushoutResult      {"apex", "ins0", "ins1", "glue_classes"}
//   CoRelation         {"base": <poset>, "pairs": [[[x, i], [y, j]], ..]}
//                      only pairs outside the coproduct order are listed
//   VerificationReport {"theorem_id", "budget", "instances", "failures",
//                       "tallies", "elapsed_ms"}

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pospace/constructions.hpp"
#include "pospace/corelation.hpp"
#include "pospace/duality.hpp"
#include "pospace/errors.hpp"
#include "pospace/monotone_map.hpp"
#include "pospace/pushout.hpp"
#include "pospace/relation.hpp"
#include "pospace/verify.hpp"

namespace pospace::json {

  using Json = nlohmann::ordered_json;

  namespace detail {
    inline Json const& field(Json const& j, char const* key, char const* what) {
      if (!j.is_object() || !j.contains(key)) {
        throw precondition_error(std::string(what) + ": missing \"" + key + "\"");
      }
      return j.at(key);
    }

    inline std::string text(Json const& j, char const* what) {
      if (!j.is_string()) throw precondition_error(std::string(what) + ": expected a string, got " + j.dump());
      return j.get<std::string>();
    }

    inline Relation relation_from(Json const& j, char const* what) {
      auto const&              elems = field(j, "elements", what);
      std::vector<std::string> labels;
      if (!elems.is_array()) throw precondition_error(std::string(what) + ": \"elements\" must be an array");
      for (auto const& e : elems) labels.push_back(text(e, what));
      Carrier  carrier(std::move(labels));
      Relation r = Relation::diagonal(carrier);
      if (j.contains("pairs")) {
        auto const& pairs = j.at("pairs");
        if (!pairs.is_array()) throw precondition_error(std::string(what) + ": \"pairs\" must be an array");
        for (auto const& p : pairs) {
          if (!p.is_array() || p.size() != 2) {
            throw precondition_error(std::string(what) + ": pair must be [x, y], got " + p.dump());
          }
          r.add(carrier.index_of(text(p[0], what)), carrier.index_of(text(p[1], what)));
        }
      }
      return r;
    }

    inline Json labels_of(Carrier const& c, Bits const& s) {
      Json out = Json::array();
      for (auto v : s.indices()) out.push_back(c.label(v));
      return out;
    }
  }  // namespace detail

  // ---- orders ---------------------------------------------------------------

  inline Json to_json(Preorder const& p) {
    Json j;
    j["elements"] = p.carrier().labels();
    Json pairs    = Json::array();
    for (auto [x, y] : p.relation().pairs()) {
      if (x != y) pairs.push_back({p.carrier().label(x), p.carrier().label(y)});
    }
    j["pairs"] = std::move(pairs);
    return j;
  }

  inline Preorder preorder_from_json(Json const& j) {
    auto r = detail::relation_from(j, "pre-order");
    auto p = check_preorder(r);
    if (!p) throw precondition_error("pre-order: " + p.error().describe(r.carrier()));
    return *p;
  }

  inline Poset poset_from_json(Json const& j) {
    auto r = detail::relation_from(j, "poset");
    auto p = check_poset(r);
    if (!p) throw precondition_error("poset: " + p.error().describe(r.carrier()));
    return *p;
  }

  inline Json to_json(Lattice const& l) {
    auto j   = to_json(l.order());
    j["bot"] = l.carrier().label(l.bot());
    j["top"] = l.carrier().label(l.top());
    return j;
  }

  inline bool looks_like_lattice(Json const& j) { return j.is_object() && j.contains("bot") && j.contains("top"); }

  inline Lattice lattice_from_json(Json const& j) {
    auto p = poset_from_json(j);
    auto l = Lattice::from_poset(p);
    if (!l) throw precondition_error("lattice: " + l.error().describe(p.carrier()));
    auto bot = detail::text(detail::field(j, "bot", "lattice"), "lattice");
    auto top = detail::text(detail::field(j, "top", "lattice"), "lattice");
    if (l->carrier().label(l->bot()) != bot) {
      throw precondition_error("lattice: declared bot \"" + bot + "\" but the least element is \""
                               + l->carrier().label(l->bot()) + "\"");
    }
    if (l->carrier().label(l->top()) != top) {
      throw precondition_error("lattice: declared top \"" + top + "\" but the greatest element is \""
                               + l->carrier().label(l->top()) + "\"");
    }
    return *l;
  }

  // ---- maps -----------------------------------------------------------------

  inline Json table_json(MonotoneMap const& f) {
    Json m = Json::object();
    for (std::size_t x = 0; x < f.dom().size(); ++x) m[f.dom().carrier().label(x)] = f.cod().carrier().label(f(x));
    return m;
  }

  inline Json to_json(MonotoneMap const& f) {
    Json j;
    j["dom"] = to_json(f.dom());
    j["cod"] = to_json(f.cod());
    j["map"] = table_json(f);
    return j;
  }

  // Domain and codomain are read as posets.
  inline MonotoneMap map_from_json(Json const& j) {
    auto        dom = poset_from_json(detail::field(j, "dom", "map"));
    auto        cod = poset_from_json(detail::field(j, "cod", "map"));
    auto const& m   = detail::field(j, "map", "map");
    if (!m.is_object()) throw precondition_error("map: \"map\" must be an object");
    std::vector<std::size_t> table(dom.size(), cod.size());
    for (auto it = m.begin(); it != m.end(); ++it) {
      auto x   = dom.carrier().index_of(it.key());
      table[x] = cod.carrier().index_of(detail::text(it.value(), "map"));
    }
    for (std::size_t x = 0; x < dom.size(); ++x) {
      if (table[x] == cod.size()) throw precondition_error("map: no image given for \"" + dom.carrier().label(x) + "\"");
    }
    auto f = MonotoneMap::make(dom, cod, std::move(table));
    if (!f) throw precondition_error("map: " + f.error().describe(dom, cod));
    return *f;
  }

  inline Json to_json(PushoutResult const& r) {
    Json j;
    j["apex"]    = to_json(r.apex);
    j["ins0"]    = table_json(r.ins0);
    j["ins1"]    = table_json(r.ins1);
    Json classes = Json::array();
    for (auto const& cls : r.glue_classes) {
      Json members = Json::array();
      for (auto v : cls) members.push_back(r.disjoint_union.label(v));
      classes.push_back(std::move(members));
    }
    j["glue_classes"] = std::move(classes);
    return j;
  }

  // ---- co-relations ---------------------------------------------------------

  inline Json to_json(CoRelation const& c) {
    Json j;
    j["base"]  = to_json(c.base());
    Json pairs = Json::array();
    auto tc    = c.tags();
    auto const& labels = c.base().carrier();
    for (auto [p, q] : c.preorder().relation().pairs()) {
      if (c.doubled().leq(p, q)) continue;
      auto a = tc.point(p), b = tc.point(q);
      pairs.push_back(Json::array({Json::array({labels.label(a.x), a.tag}), Json::array({labels.label(b.x), b.tag})}));
    }
    j["pairs"] = std::move(pairs);
    return j;
  }

  inline CoRelation corelation_from_json(Json const& j) {
    auto base    = poset_from_json(detail::field(j, "base", "co-relation"));
    auto doubled = coproduct(base, base);
    auto rel     = doubled.relation();
    TaggedCarrier tc{base.size()};
    if (j.contains("pairs")) {
      for (auto const& p : j.at("pairs")) {
        auto point = [&](Json const& t) -> std::size_t {
          if (!t.is_array() || t.size() != 2 || !t[1].is_number_integer()
              || (t[1].get<int>() != 0 && t[1].get<int>() != 1)) {
            throw precondition_error("co-relation: tagged point must be [x, 0|1], got " + t.dump());
          }
          return tc.index(base.carrier().index_of(detail::text(t[0], "co-relation")), t[1].get<int>());
        };
        if (!p.is_array() || p.size() != 2) throw precondition_error("co-relation: pair must be [[x,i],[y,j]], got " + p.dump());
        rel.add(point(p[0]), point(p[1]));
      }
    }
    auto pre = check_preorder(rel);
    if (!pre) throw precondition_error("co-relation: " + pre.error().describe(rel.carrier()));
    return CoRelation::make(base, *pre);
  }

  inline Json corelation_line(CoRelation const& c) {
    Json j;
    j["corelation"] = to_json(c);
    j["phi"]        = detail::labels_of(c.base().carrier(), phi(c));
    return j;
  }

  // ---- reports --------------------------------------------------------------

  inline Json to_json(VerificationReport const& r) {
    Json j;
    j["theorem_id"]       = r.theorem_id;
    j["budget"]["max_n"]  = r.budget.max_n;
    j["budget"]["labeled"] = r.budget.labeled;
    j["instances"]        = r.instances;
    Json failures         = Json::array();
    for (auto const& f : r.failures) {
      Json e;
      e["poset"]      = f.poset ? to_json(*f.poset) : Json(nullptr);
      e["corelation"] = f.corelation ? to_json(*f.corelation) : Json(nullptr);
      e["axiom"]      = f.axiom;
      e["witness"]    = f.witness;
      failures.push_back(std::move(e));
    }
    j["failures"] = std::move(failures);
    Json tallies  = Json::object();
    for (auto const& [k, v] : r.tallies) tallies[k] = v;
    j["tallies"]    = std::move(tallies);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
  }

  inline Json parse(std::string const& text, std::string const& what) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw precondition_error(what + ": malformed JSON: " + e.what());
    }
  }

}  // namespace pospace::json
