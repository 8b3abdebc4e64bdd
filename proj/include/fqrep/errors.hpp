#pragma once

#include <stdexcept>
#include <string>

namespace fqrep {

/// Base of every error the library raises. Each subclass names one failed
/// precondition or mathematical obstruction.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define FQREP_DEFINE_ERROR(Name)                \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

FQREP_DEFINE_ERROR(InvalidArgument);
FQREP_DEFINE_ERROR(NonPrime);
FQREP_DEFINE_ERROR(NotPrimePower);
FQREP_DEFINE_ERROR(DivisionByZero);
FQREP_DEFINE_ERROR(NotCoprime);
FQREP_DEFINE_ERROR(CharDividesM);
FQREP_DEFINE_ERROR(ContextMismatch);
FQREP_DEFINE_ERROR(Singular);
FQREP_DEFINE_ERROR(DuplicatePoints);
FQREP_DEFINE_ERROR(InconsistentPresentation);
FQREP_DEFINE_ERROR(RelationViolation);
FQREP_DEFINE_ERROR(RSNotCoprime);
FQREP_DEFINE_ERROR(NotRealizable);
FQREP_DEFINE_ERROR(NoRootOfUnity);
FQREP_DEFINE_ERROR(EqualPrimes);

#undef FQREP_DEFINE_ERROR

using NotPrime = NonPrime;

}  // namespace fqrep
