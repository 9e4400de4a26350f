#pragma once

#include <stdexcept>
#include <string>

namespace entwine {

class Error : public std::runtime_error {
 public:
  Error(const std::string& kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), detail_(detail) {}

  // The message without the error-kind prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
};

#define ENTWINE_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what) \
        : Error(#Name, what) {}             \
  }

ENTWINE_DEFINE_ERROR(DimensionMismatch);
ENTWINE_DEFINE_ERROR(FieldMismatch);
ENTWINE_DEFINE_ERROR(ShapeMismatch);
ENTWINE_DEFINE_ERROR(InvalidPermutation);
ENTWINE_DEFINE_ERROR(ParseError);
ENTWINE_DEFINE_ERROR(ValidationError);
ENTWINE_DEFINE_ERROR(InvalidMorphism);
ENTWINE_DEFINE_ERROR(NotASection);
ENTWINE_DEFINE_ERROR(MembershipViolation);
ENTWINE_DEFINE_ERROR(UnknownName);
ENTWINE_DEFINE_ERROR(DivisionByZero);

#undef ENTWINE_DEFINE_ERROR

}  // namespace entwine
