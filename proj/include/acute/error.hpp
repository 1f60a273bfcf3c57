#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acute {

enum class ErrorCode {
    DegenerateInput,
    InvalidMatrix,
    IntegerOverflow,
    NonTermination,
    OutsideT,
    OnIsoscelesLocus,
    NotAcuteOrRight,
    ObtuseInput,
    CollinearBasis,
    NotInClosureOfT,
    NotInT,
    EmptyTileList,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace acute
