#pragma once

#include <sstream>
#include <string>

#include "pospace/relation.hpp"

namespace pospace {

  namespace detail {
    inline std::string dot_quote(std::string const& s) {
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
      }
      return out + "\"";
    }
  }  // namespace detail

  // Hasse diagram, drawn bottom to top.
  inline std::string to_dot(Poset const& p, std::string const& name = "P") {
    std::ostringstream os;
    os << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (auto const& l : p.carrier().labels()) os << "  " << detail::dot_quote(l) << ";\n";
    for (auto [x, y] : covering_relation(p).pairs()) {
      os << "  " << detail::dot_quote(p.carrier().label(x)) << " -> " << detail::dot_quote(p.carrier().label(y)) << ";\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace pospace
