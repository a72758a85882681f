#pragma once

#include <stdexcept>
#include <string>

namespace uotto {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

// specfun
struct SingularOffset : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};

// kinematics
struct DegenerateKappa : Error {
    using Error::Error;
};
struct UnderdeterminedOmega1 : Error {
    using Error::Error;
};
struct NonPositiveOmega1 : Error {
    using Error::Error;
};

// response
struct NearSingularA : Error {
    using Error::Error;
};

// oracle
struct QuadratureDivergence : Error {
    using Error::Error;
};

} // namespace uotto
