#pragma once

#include <stdexcept>
#include <string>

namespace pospace {

  // Raised when an operation is called outside its domain (bad input data,
  // a non-embedding where an embedding is required, ...).
  class precondition_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Raised when an enumeration request exceeds the configured budget.
  class budget_error : public precondition_error {
   public:
    using precondition_error::precondition_error;
  };

  // Raised when a property that the theory guarantees turns out false on a
  // concrete instance. Seeing one of these means a theorem was falsified or
  // the implementation is wrong; it is never an input problem.
  class invariant_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace pospace
