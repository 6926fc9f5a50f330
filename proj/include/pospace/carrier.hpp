#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pospace/errors.hpp"

namespace pospace {

  // The underlying finite set of a space: an ordered list of distinct labels.
  // All algebra runs on positions; labels only matter at I/O boundaries.
  // Copies share the (immutable) label storage.
  class Carrier {
   public:
    Carrier() : labels_(std::make_shared<std::vector<std::string> const>()) {}

    explicit Carrier(std::vector<std::string> labels)
        : labels_(std::make_shared<std::vector<std::string> const>(std::move(labels))) {
      auto const& l = *labels_;
      for (std::size_t i = 0; i < l.size(); ++i) {
        for (std::size_t j = i + 1; j < l.size(); ++j) {
          if (l[i] == l[j]) {
            throw precondition_error("duplicate carrier label \"" + l[i] + "\"");
          }
        }
      }
    }

    // "a", "b", ..., "z", then "x26", "x27", ...
    static Carrier letters(std::size_t n) {
      std::vector<std::string> l;
      l.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (i < 26) {
          l.emplace_back(1, static_cast<char>('a' + i));
        } else {
          l.push_back("x" + std::to_string(i));
        }
      }
      return Carrier(std::move(l));
    }

    std::size_t size() const noexcept { return labels_->size(); }
    bool        empty() const noexcept { return labels_->empty(); }

    std::string const&              label(std::size_t i) const { return labels_->at(i); }
    std::vector<std::string> const& labels() const noexcept { return *labels_; }

    std::optional<std::size_t> find(std::string_view label) const noexcept {
      auto const& l = *labels_;
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] == label) return i;
      }
      return std::nullopt;
    }

    std::size_t index_of(std::string_view label) const {
      if (auto i = find(label)) return *i;
      throw precondition_error("unknown element \"" + std::string(label) + "\"");
    }

    friend bool operator==(Carrier const& a, Carrier const& b) noexcept {
      return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }

   private:
    std::shared_ptr<std::vector<std::string> const> labels_;
  };

}  // namespace pospace
