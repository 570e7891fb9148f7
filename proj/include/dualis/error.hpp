#pragma once

#include <stdexcept>
#include <string>

namespace dualis {

enum class ErrorCode {
    Structural,       // ring/length mismatch, bad index, invalid construction
    RingMismatch,
    NameCollision,
    NonHomogeneous,
    EmptyIdeal,
    Parse,
    UnknownVariable,
    ReservedName,
    BadRadical,
    NotOnVariety,
    ConstantCurve,
    TrivialPedal,
    DegeneratePedal,
    StepLimit,
    Window,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace dualis
