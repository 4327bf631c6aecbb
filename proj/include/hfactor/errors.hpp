#ifndef HFACTOR_ERRORS_HPP
#define HFACTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hfactor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisibilityError : Error {
    using Error::Error;
};

struct ParityError : Error {
    using Error::Error;
};

struct MissingEdgeError : Error {
    using Error::Error;
};

struct RoundConflictError : Error {
    using Error::Error;
};

struct ScriptedRoundError : Error {
    using Error::Error;
};

struct EdgeReuseError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct SubDesignUnavailableError : Error {
    using Error::Error;
};

struct StructureMismatchError : Error {
    using Error::Error;
};

struct WrongShapeError : Error {
    using Error::Error;
};

struct WrongRoundCountError : Error {
    using Error::Error;
};

struct ScaleLimitError : Error {
    using Error::Error;
};

struct NotEquitableError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace hfactor

#endif
