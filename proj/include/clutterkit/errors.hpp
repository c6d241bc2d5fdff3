#pragma once

#include <stdexcept>
#include <string>

namespace clutterkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CLUTTERKIT_DEFINE_ERROR(Name)                                      \
    struct Name : Error {                                                  \
        explicit Name(const std::string& what) : Error(what) {}            \
    }

CLUTTERKIT_DEFINE_ERROR(UnknownLabelError);
CLUTTERKIT_DEFINE_ERROR(DuplicateEdgeError);
CLUTTERKIT_DEFINE_ERROR(NotAntichainError);
CLUTTERKIT_DEFINE_ERROR(DegenerateClutterError);
CLUTTERKIT_DEFINE_ERROR(CapExceededError);
CLUTTERKIT_DEFINE_ERROR(InfeasibleError);
CLUTTERKIT_DEFINE_ERROR(UnboundedError);
CLUTTERKIT_DEFINE_ERROR(UnboundedPolyhedronError);
CLUTTERKIT_DEFINE_ERROR(EmptyInputError);
CLUTTERKIT_DEFINE_ERROR(NotPrimeError);
CLUTTERKIT_DEFINE_ERROR(AxiomViolationError);
CLUTTERKIT_DEFINE_ERROR(NotApplicableError);
CLUTTERKIT_DEFINE_ERROR(DegenerateGraphError);
CLUTTERKIT_DEFINE_ERROR(InvalidArgumentError);
CLUTTERKIT_DEFINE_ERROR(ParseError);

#undef CLUTTERKIT_DEFINE_ERROR

}  // namespace clutterkit
