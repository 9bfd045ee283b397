#pragma once

#include <stdexcept>
#include <string>

namespace qborel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QBOREL_ERROR(Name)                                                   \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

QBOREL_ERROR(DivisionByZero);
QBOREL_ERROR(ParseError);
QBOREL_ERROR(InvalidCartan);
QBOREL_ERROR(NotInPositiveCone);
QBOREL_ERROR(NotReduced);
QBOREL_ERROR(InvalidChain);
QBOREL_ERROR(InternalContradiction);
QBOREL_ERROR(NoNonorthogonalPair);
QBOREL_ERROR(NotOrthogonal);
QBOREL_ERROR(NotInWw);
QBOREL_ERROR(InvalidPair);
QBOREL_ERROR(HeightOverflow);
QBOREL_ERROR(NotInSubalgebra);
QBOREL_ERROR(BadIndex);
QBOREL_ERROR(InvalidTriple);
QBOREL_ERROR(DimensionMismatch);

#undef QBOREL_ERROR

} // namespace qborel
