#pragma once

#include <stdexcept>
#include <string>

namespace whit {

// Base for all library errors; the CLI maps these to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define WHIT_ERROR_TYPE(Name)                                   \
  struct Name : Error {                                         \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

WHIT_ERROR_TYPE(InvalidCartan);
WHIT_ERROR_TYPE(NonFiniteType);
WHIT_ERROR_TYPE(DimensionMismatch);
WHIT_ERROR_TYPE(GroupTooLarge);
WHIT_ERROR_TYPE(NotACosetRep);
WHIT_ERROR_TYPE(NotDominant);
WHIT_ERROR_TYPE(NonSplitUnsupported);
WHIT_ERROR_TYPE(MissingTable);
WHIT_ERROR_TYPE(UnsupportedType);
WHIT_ERROR_TYPE(NotNilpotent);
WHIT_ERROR_TYPE(InvalidSplit);
WHIT_ERROR_TYPE(BadModule);
WHIT_ERROR_TYPE(InsufficientTruncation);
WHIT_ERROR_TYPE(Unstable);
WHIT_ERROR_TYPE(LengthNotAdditive);
WHIT_ERROR_TYPE(ParseError);
WHIT_ERROR_TYPE(ValidationError);

#undef WHIT_ERROR_TYPE

}  // namespace whit
