#ifndef ZENO_ERRORS_HPP
#define ZENO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zeno {

struct NonHermitianInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadFactorization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ToleranceNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPhysical : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGrid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zeno

#endif
