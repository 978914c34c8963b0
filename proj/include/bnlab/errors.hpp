#pragma once

#include <stdexcept>
#include <string>

namespace bnlab {

/// Base of every domain error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define BNLAB_ERROR(name)                                        \
    class name : public Error {                                  \
    public:                                                      \
        explicit name(const std::string& what) : Error(what) {}  \
    }

BNLAB_ERROR(InvalidIndex);        // ramification index bounds violated
BNLAB_ERROR(InvalidSequence);     // vanishing sequence not strictly increasing or out of range
BNLAB_ERROR(MixedContext);        // data of different series type (r, d) combined
BNLAB_ERROR(NotApplicable);       // no divisorial witness branch applies
BNLAB_ERROR(LatticeMismatch);     // classes on different intersection lattices
BNLAB_ERROR(OddParity);           // c^2 + c.K odd, class not on a genuine surface lattice
BNLAB_ERROR(InvalidSection);      // section class does not meet the pencil class once
BNLAB_ERROR(SingularCurve);       // zero discriminant
BNLAB_ERROR(PointNotOnCurve);
BNLAB_ERROR(TorsionEta);          // translation step required to be non-torsion
BNLAB_ERROR(InvalidFixture);
BNLAB_ERROR(NegativeCoefficient); // cone coefficients must be nonnegative
BNLAB_ERROR(GenusMismatch);
BNLAB_ERROR(InvalidPartition);
BNLAB_ERROR(ParseError);

#undef BNLAB_ERROR

}  // namespace bnlab
