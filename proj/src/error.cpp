#include "acute/error.hpp"

namespace acute {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::IntegerOverflow: return "IntegerOverflow";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::OutsideT: return "OutsideT";
    case ErrorCode::OnIsoscelesLocus: return "OnIsoscelesLocus";
    case ErrorCode::NotAcuteOrRight: return "NotAcuteOrRight";
    case ErrorCode::ObtuseInput: return "ObtuseInput";
    case ErrorCode::CollinearBasis: return "CollinearBasis";
    case ErrorCode::NotInClosureOfT: return "NotInClosureOfT";
    case ErrorCode::NotInT: return "NotInT";
    case ErrorCode::EmptyTileList: return "EmptyTileList";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace acute
