#ifndef BSP_ERRORS_HPP
#define BSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bsp {

// malformed graphs, files and vertex sets
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// an operation was called on a graph outside its domain
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// a brute-force routine refused a graph above its size guard
class GuardExceeded : public std::runtime_error {
  public:
    GuardExceeded(const std::string& what, int size, int guard)
        : std::runtime_error(what + " (size " + std::to_string(size) + " > guard " + std::to_string(guard) + ")"),
          size_(size), guard_(guard) {}
    int size() const noexcept { return size_; }
    int guard() const noexcept { return guard_; }

  private:
    int size_;
    int guard_;
};

// a search ran out of its node budget before reaching a verdict
class BudgetExhausted : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace bsp

#endif
