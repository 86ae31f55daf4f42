#pragma once

#include <stdexcept>

namespace deformlab {

/// Base class for recoverable computation errors raised by this library.
/// Contract violations (bad lattice sizes, negative step counts, ...) throw
/// std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define DEFORMLAB_DEFINE_ERROR(name)                                          \
    class name : public Error {                                               \
    public:                                                                    \
        using Error::Error;                                                    \
    }

DEFORMLAB_DEFINE_ERROR(NonPositiveMonitor);
DEFORMLAB_DEFINE_ERROR(EmptyImage);
DEFORMLAB_DEFINE_ERROR(TimeOutOfRange);
DEFORMLAB_DEFINE_ERROR(IncompatibleRHS);
DEFORMLAB_DEFINE_ERROR(SolverDiverged);
DEFORMLAB_DEFINE_ERROR(DimensionMismatch);
DEFORMLAB_DEFINE_ERROR(WindowTooLarge);
DEFORMLAB_DEFINE_ERROR(InvalidScore);
DEFORMLAB_DEFINE_ERROR(EmptyTable);
DEFORMLAB_DEFINE_ERROR(InvalidProbability);
DEFORMLAB_DEFINE_ERROR(EmptyBatch);
DEFORMLAB_DEFINE_ERROR(NonFiniteField);
DEFORMLAB_DEFINE_ERROR(NonFiniteInput);

#undef DEFORMLAB_DEFINE_ERROR

}  // namespace deformlab
