#ifndef APOLLO_ERRORS_HPP
#define APOLLO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apollo {

// Base class for every failure the library reports on purpose.
// Anything else escaping is a bug.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define APOLLO_DEFINE_ERROR(Name)                                          \
    struct Name : Error {                                                   \
        explicit Name(const std::string& msg = #Name) : Error(msg) {}       \
    }

APOLLO_DEFINE_ERROR(DivisionByZero);
APOLLO_DEFINE_ERROR(IncompatibleRadicand);
APOLLO_DEFINE_ERROR(NotQuadratic);
APOLLO_DEFINE_ERROR(SyntaxError);
APOLLO_DEFINE_ERROR(NonPositiveValue);
APOLLO_DEFINE_ERROR(NonPositiveInput);
APOLLO_DEFINE_ERROR(IndexOutOfRange);
APOLLO_DEFINE_ERROR(NotTangent);
APOLLO_DEFINE_ERROR(LineOperand);
APOLLO_DEFINE_ERROR(UnnormalizedLabel);
APOLLO_DEFINE_ERROR(NotCoprime);
APOLLO_DEFINE_ERROR(SideMismatch);
APOLLO_DEFINE_ERROR(Halted);
APOLLO_DEFINE_ERROR(ExhaustedRun);
APOLLO_DEFINE_ERROR(PoleInput);
APOLLO_DEFINE_ERROR(BadDiscriminant);
APOLLO_DEFINE_ERROR(ParityViolation);
APOLLO_DEFINE_ERROR(NotReduced);
APOLLO_DEFINE_ERROR(InternalInconsistency);
APOLLO_DEFINE_ERROR(EmptyWindow);

#undef APOLLO_DEFINE_ERROR

} // namespace apollo

#endif
