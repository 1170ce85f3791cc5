#pragma once

#include <stdexcept>
#include <string>

namespace zonelab {

enum class ErrorCode {
    SingularTriple,
    ParallelPlanes,
    ParallelLines,
    NotGeneralPosition,
    BoxTooSmall,
    BoxGenericityViolation,
    DegenerateQuery,
    DegenerateInstance,
    UnknownPlane,
    InsufficientData,
    GenerationExhausted,
    ParseError,
    IoError,
    InvalidArgument,
    AssertionFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace zonelab
