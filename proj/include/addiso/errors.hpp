#pragma once

#include <stdexcept>
#include <string>

namespace addiso {

enum class Errc {
    NonPrime,
    Reducible,
    DegreeMismatch,
    DimensionMismatch,
    DivisionByZero,
    TooLarge,
    BadCodimension,
    LengthTooShort,
    BudgetExceeded,
    DependentRows,
    Parse,
    Verification,
};

/// Library-wide error type; `code()` selects the CLI exit path.
class Error : public std::runtime_error {
  public:
    Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace addiso
