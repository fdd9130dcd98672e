#pragma once

#include <stdexcept>
#include <string>

namespace novikov {

/// Base for every domain error raised by the library.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define NOVIKOV_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                           \
  public:                                                               \
    explicit Name(const std::string& what) : Error(#Name, what) {}      \
  };

NOVIKOV_DEFINE_ERROR(DimensionMismatch)
NOVIKOV_DEFINE_ERROR(MalformedInput)
NOVIKOV_DEFINE_ERROR(NotTwoStepNilpotent)
NOVIKOV_DEFINE_ERROR(HypothesisViolated)
NOVIKOV_DEFINE_ERROR(PreconditionFailed)
NOVIKOV_DEFINE_ERROR(CybeFailed)
NOVIKOV_DEFINE_ERROR(NotModuleHomomorphism)
NOVIKOV_DEFINE_ERROR(NotInvertible)
NOVIKOV_DEFINE_ERROR(BNotAbelian)
NOVIKOV_DEFINE_ERROR(ProductsNotTrivial)
NOVIKOV_DEFINE_ERROR(UnknownId)
NOVIKOV_DEFINE_ERROR(MissingParam)
NOVIKOV_DEFINE_ERROR(SchemaError)

#undef NOVIKOV_DEFINE_ERROR

}  // namespace novikov
