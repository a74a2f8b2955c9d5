#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace laistry {

// Base of every error raised by the library. `kind()` is the stable name used
// in structured CLI output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define LAISTRY_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

LAISTRY_DEFINE_ERROR(DivisionByZero)
LAISTRY_DEFINE_ERROR(NonInvertible)
LAISTRY_DEFINE_ERROR(ModeMismatch)
LAISTRY_DEFINE_ERROR(InvalidSpec)
LAISTRY_DEFINE_ERROR(IndexOutOfRange)
LAISTRY_DEFINE_ERROR(BudgetExceeded)
LAISTRY_DEFINE_ERROR(ConfluenceFailure)
LAISTRY_DEFINE_ERROR(IdentityFailure)
LAISTRY_DEFINE_ERROR(OreFailure)
LAISTRY_DEFINE_ERROR(RelationFailure)
LAISTRY_DEFINE_ERROR(Unsupported)
LAISTRY_DEFINE_ERROR(NotOnVariety)
LAISTRY_DEFINE_ERROR(SystemFailure)

#undef LAISTRY_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("ParseError", what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace laistry
