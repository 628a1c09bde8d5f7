#pragma once

#include <stdexcept>
#include <string>

namespace rcg {

// Base class for everything this library throws. what() starts with the
// error kind so CLI messages stay greppable.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define RCG_DEFINE_ERROR(Name)                      \
  struct Name : Error {                             \
    explicit Name(const std::string& w)             \
        : Error(std::string(#Name) + ": " + w) {}   \
  }

RCG_DEFINE_ERROR(DimensionMismatch);
RCG_DEFINE_ERROR(NotContained);
RCG_DEFINE_ERROR(NotUnimodular);
RCG_DEFINE_ERROR(AxiomViolation);
RCG_DEFINE_ERROR(InvalidType);
RCG_DEFINE_ERROR(UnknownForm);
RCG_DEFINE_ERROR(NotInvolution);
RCG_DEFINE_ERROR(CorootSetNotStable);
RCG_DEFINE_ERROR(NoIntegralRestriction);
RCG_DEFINE_ERROR(InternalInconsistency);
RCG_DEFINE_ERROR(ParseError);

#undef RCG_DEFINE_ERROR

}  // namespace rcg
