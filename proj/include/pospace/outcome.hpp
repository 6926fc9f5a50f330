#pragma once

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>

namespace pospace {

  class bad_outcome_access : public std::logic_error {
   public:
    bad_outcome_access() : std::logic_error("outcome holds an error, not a value") {}
  };

  // Either a value or a failure report. Failure reports are ordinary data
  // (e.g. a violated axiom with its witness), not exceptions.
  template <class T, class E>
  class Outcome {
    static_assert(!std::is_same_v<T, E>, "value and error types must differ");

   public:
    Outcome(T value) : state_(std::in_place_index<0>, std::move(value)) {}
    Outcome(E error) : state_(std::in_place_index<1>, std::move(error)) {}

    bool has_value() const noexcept { return state_.index() == 0; }
    explicit operator bool() const noexcept { return has_value(); }

    T const& value() const& {
      if (!has_value()) throw bad_outcome_access();
      return std::get<0>(state_);
    }
    T& value() & {
      if (!has_value()) throw bad_outcome_access();
      return std::get<0>(state_);
    }
    T&& value() && {
      if (!has_value()) throw bad_outcome_access();
      return std::get<0>(std::move(state_));
    }

    E const& error() const& {
      if (has_value()) throw std::logic_error("outcome holds a value, not an error");
      return std::get<1>(state_);
    }

    T const* operator->() const { return &value(); }
    T const& operator*() const& { return value(); }

   private:
    std::variant<T, E> state_;
  };

}  // namespace pospace
