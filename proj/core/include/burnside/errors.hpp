#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

/// Base class of all computation errors.  `code()` is a stable machine
/// readable name, used by the CLI for its error documents.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define BURNSIDE_DEFINE_ERROR(NAME)                                           \
  class NAME final : public Error {                                           \
  public:                                                                     \
    explicit NAME(const std::string& what) : Error(#NAME, what) {}            \
  }

BURNSIDE_DEFINE_ERROR(InfiniteCokernel);
BURNSIDE_DEFINE_ERROR(ElementNotInGroup);
BURNSIDE_DEFINE_ERROR(GroupTooLarge);
BURNSIDE_DEFINE_ERROR(ParentMismatch);
BURNSIDE_DEFINE_ERROR(IndexOutOfRange);
BURNSIDE_DEFINE_ERROR(SequenceTooShort);
BURNSIDE_DEFINE_ERROR(PreconditionFailed);
BURNSIDE_DEFINE_ERROR(UniverseOverflow);
BURNSIDE_DEFINE_ERROR(SymbolOutsideUniverse);
BURNSIDE_DEFINE_ERROR(InvalidComponent);
BURNSIDE_DEFINE_ERROR(CharacterOutsideGroup);
BURNSIDE_DEFINE_ERROR(MissingIncidenceData);
BURNSIDE_DEFINE_ERROR(ConeNotInFan);
BURNSIDE_DEFINE_ERROR(RayNotInteriorToAnyCone);
BURNSIDE_DEFINE_ERROR(NonDivisorialInput);
BURNSIDE_DEFINE_ERROR(InfiniteStabilizer);
BURNSIDE_DEFINE_ERROR(GradingMismatch);
BURNSIDE_DEFINE_ERROR(SchemaError);
BURNSIDE_DEFINE_ERROR(CertificateMismatch);

#undef BURNSIDE_DEFINE_ERROR

} // namespace burnside
