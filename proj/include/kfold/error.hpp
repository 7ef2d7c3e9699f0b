#ifndef KFOLD_ERROR_HPP_
#define KFOLD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kfold {

enum class ErrorCode {
    ParseError,
    MixedDiscriminants,
    InvalidPolygon,
    RegionUnbounded,
    NotAnEdge,
    MissingPoint,
    Incommensurable,
    PreconditionUnverified,
    WindowTooLarge,
    InvalidArgument,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::MixedDiscriminants: return "MIXED_DISCRIMINANTS";
        case ErrorCode::InvalidPolygon: return "INVALID_POLYGON";
        case ErrorCode::RegionUnbounded: return "REGION_UNBOUNDED";
        case ErrorCode::NotAnEdge: return "NOT_AN_EDGE";
        case ErrorCode::MissingPoint: return "X_MISSING_POINT";
        case ErrorCode::Incommensurable: return "INCOMMENSURABLE";
        case ErrorCode::PreconditionUnverified: return "PRECONDITION_UNVERIFIED";
        case ErrorCode::WindowTooLarge: return "WINDOW_TOO_LARGE";
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace kfold

#endif  // KFOLD_ERROR_HPP_
