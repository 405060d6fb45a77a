#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define RLAB_ERROR_TYPE(Name)                           \
    struct Name : Error {                               \
        Name() : Error(#Name) {}                        \
        explicit Name(const std::string& what)          \
            : Error(std::string(#Name) + ": " + what) {}\
    }

RLAB_ERROR_TYPE(ZeroConstantTerm);
RLAB_ERROR_TYPE(NonzeroConstantInner);
RLAB_ERROR_TYPE(NotRevertible);
RLAB_ERROR_TYPE(NonSquareConstant);
RLAB_ERROR_TYPE(ZeroLinearCoefficient);
RLAB_ERROR_TYPE(BranchUndefined);
RLAB_ERROR_TYPE(InsufficientOrder);
RLAB_ERROR_TYPE(StretchedNotInvertible);
RLAB_ERROR_TYPE(InsufficientTerms);
RLAB_ERROR_TYPE(SingularHankelBlock);
RLAB_ERROR_TYPE(InsufficientDepth);
RLAB_ERROR_TYPE(SingularMatrix);
RLAB_ERROR_TYPE(PointNotOnCurve);
RLAB_ERROR_TYPE(PointAtInfinity);
RLAB_ERROR_TYPE(ZeroXCoordinate);
RLAB_ERROR_TYPE(InsufficientRank);
RLAB_ERROR_TYPE(NonSquareDiscriminant);
RLAB_ERROR_TYPE(IoError);

#undef RLAB_ERROR_TYPE

}  // namespace rlab
