#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dgcf {

enum class ErrorCode {
    InvalidArgument,
    SizeMismatch,
    DisconnectedGraph,
    DegenerateDrawing,
    TooFewPoints,
    InfeasibleSpec,
    LayoutNotFaithful,
    InvalidEdgeSet,
    MissingCoordinates,
    ParseError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace dgcf
