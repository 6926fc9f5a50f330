#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pospace {

  namespace detail {
    constexpr std::size_t words_for(std::size_t n) noexcept {
      return (n + 63) / 64;
    }
  }  // namespace detail

  // A subset of {0, ..., n-1}.
  class Bits {
   public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), words_(detail::words_for(n), 0) {}

    static Bits full(std::size_t n) {
      Bits b(n);
      for (std::size_t i = 0; i < n; ++i) b.set(i);
      return b;
    }

    static Bits of(std::size_t n, std::initializer_list<std::size_t> members) {
      Bits b(n);
      for (auto i : members) b.set(i);
      return b;
    }

    std::size_t size() const noexcept { return n_; }

    bool test(std::size_t i) const noexcept {
      return (words_[i / 64] >> (i % 64)) & 1U;
    }
    void set(std::size_t i, bool value = true) noexcept {
      if (value) {
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
      } else {
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
      }
    }
    void reset(std::size_t i) noexcept { set(i, false); }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
      return c;
    }
    bool none() const noexcept {
      return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }
    bool any() const noexcept { return !none(); }

    bool subset_of(Bits const& other) const noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        if ((words_[k] & ~other.words_[k]) != 0) return false;
      }
      return true;
    }

    Bits& operator|=(Bits const& other) noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
      return *this;
    }
    Bits& operator&=(Bits const& other) noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
      return *this;
    }
    friend Bits operator|(Bits a, Bits const& b) { return a |= b; }
    friend Bits operator&(Bits a, Bits const& b) { return a &= b; }

    std::vector<std::size_t> indices() const {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < n_; ++i) {
        if (test(i)) out.push_back(i);
      }
      return out;
    }

    std::span<std::uint64_t const> words() const noexcept { return words_; }

    friend bool operator==(Bits const&, Bits const&)  = default;
    friend auto operator<=>(Bits const&, Bits const&) = default;

   private:
    std::size_t                n_ = 0;
    std::vector<std::uint64_t> words_;
  };

  // Dense n x n boolean matrix, row-major, one bit per entry.
  class BitMatrix {
   public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n)
        : n_(n), stride_(detail::words_for(n)), data_(n * stride_, 0) {}

    static BitMatrix identity(std::size_t n) {
      BitMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, i);
      return m;
    }

    static BitMatrix full(std::size_t n) {
      BitMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.set(i, j);
      }
      return m;
    }

    std::size_t size() const noexcept { return n_; }

    bool test(std::size_t i, std::size_t j) const noexcept {
      return (data_[i * stride_ + j / 64] >> (j % 64)) & 1U;
    }
    void set(std::size_t i, std::size_t j, bool value = true) noexcept {
      auto& w = data_[i * stride_ + j / 64];
      if (value) {
        w |= std::uint64_t{1} << (j % 64);
      } else {
        w &= ~(std::uint64_t{1} << (j % 64));
      }
    }
    void reset(std::size_t i, std::size_t j) noexcept { set(i, j, false); }

    std::span<std::uint64_t const> row(std::size_t i) const noexcept {
      return {data_.data() + i * stride_, stride_};
    }

    Bits row_bits(std::size_t i) const {
      Bits b(n_);
      for (std::size_t j = 0; j < n_; ++j) {
        if (test(i, j)) b.set(j);
      }
      return b;
    }

    Bits column_bits(std::size_t j) const {
      Bits b(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        if (test(i, j)) b.set(i);
      }
      return b;
    }

    // row(dst) |= row(src); returns whether anything changed.
    bool or_row_into(std::size_t dst, std::size_t src) noexcept {
      bool changed = false;
      for (std::size_t k = 0; k < stride_; ++k) {
        auto& d   = data_[dst * stride_ + k];
        auto  old = d;
        d |= data_[src * stride_ + k];
        changed |= (d != old);
      }
      return changed;
    }

    // row(i) is a subset of row(k)
    bool row_subset(std::size_t i, std::size_t k) const noexcept {
      for (std::size_t w = 0; w < stride_; ++w) {
        if ((data_[i * stride_ + w] & ~data_[k * stride_ + w]) != 0) return false;
      }
      return true;
    }

    // Warshall's algorithm on packed rows.
    void transitive_close() noexcept {
      for (std::size_t k = 0; k < n_; ++k) {
        for (std::size_t i = 0; i < n_; ++i) {
          if (test(i, k)) or_row_into(i, k);
        }
      }
    }

    BitMatrix transposed() const {
      BitMatrix t(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          if (test(i, j)) t.set(j, i);
        }
      }
      return t;
    }

    bool subset_of(BitMatrix const& other) const noexcept {
      for (std::size_t k = 0; k < data_.size(); ++k) {
        if ((data_[k] & ~other.data_[k]) != 0) return false;
      }
      return true;
    }

    BitMatrix& operator|=(BitMatrix const& other) noexcept {
      for (std::size_t k = 0; k < data_.size(); ++k) data_[k] |= other.data_[k];
      return *this;
    }
    BitMatrix& operator&=(BitMatrix const& other) noexcept {
      for (std::size_t k = 0; k < data_.size(); ++k) data_[k] &= other.data_[k];
      return *this;
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : data_) c += static_cast<std::size_t>(std::popcount(w));
      return c;
    }

    friend bool operator==(BitMatrix const&, BitMatrix const&)  = default;
    friend auto operator<=>(BitMatrix const&, BitMatrix const&) = default;

   private:
    std::size_t                n_      = 0;
    std::size_t                stride_ = 0;
    std::vector<std::uint64_t> data_;
  };

}  // namespace pospace
