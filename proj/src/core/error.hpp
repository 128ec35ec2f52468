#pragma once

#include <stdexcept>
#include <string>

namespace tablecast {

enum class ErrorCode {
    InvalidArgument,
    Dimension,
    Domain,
    NotPermutation,
    Parse,
    EmptyInput,
    Consistency,
    DegeneratePredictor,
    OracleCap,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the core carries one of the codes above so that
// the C API can map it onto a stable status value.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tablecast
