#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgeom {

enum class ErrorCode {
    ColorOutOfRange,
    NotAdmissible,
    NotTrivalent,
    NotAdmissibleVertex,
    NotPlanar,
    GraphIrreducible,
    EdgeIsLoop,
    MalformedGluing,
    NonInvolutiveGluing,
    OrientationMismatch,
    NotClosed,
    MoveNotApplicable,
    RankDeficient,
    DimensionMismatch,
    RankCollapse,
    PointOnBoundary,
    NotATriangulation,
    InvalidArgument,
    ParseError,
    FileNotFound,
    UnknownCommand,
};

constexpr std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::NotTrivalent: return "NotTrivalent";
        case ErrorCode::NotAdmissibleVertex: return "NotAdmissibleVertex";
        case ErrorCode::NotPlanar: return "NotPlanar";
        case ErrorCode::GraphIrreducible: return "GraphIrreducible";
        case ErrorCode::EdgeIsLoop: return "EdgeIsLoop";
        case ErrorCode::MalformedGluing: return "MalformedGluing";
        case ErrorCode::NonInvolutiveGluing: return "NonInvolutiveGluing";
        case ErrorCode::OrientationMismatch: return "OrientationMismatch";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::MoveNotApplicable: return "MoveNotApplicable";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::RankCollapse: return "RankCollapse";
        case ErrorCode::PointOnBoundary: return "PointOnBoundary";
        case ErrorCode::NotATriangulation: return "NotATriangulation";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::FileNotFound: return "FileNotFound";
        case ErrorCode::UnknownCommand: return "UnknownCommand";
    }
    return "Unknown";
}

/// Error raised by every qgeom operation. The code identifies the failure
/// class; the message carries the specifics (offending face, line, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code), detail_(message) {}

    ErrorCode code() const noexcept { return code_; }
    /// Message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

/// Parse failure with a 1-based source position.
class ParseFailure : public Error {
public:
    ParseFailure(const std::string& source, int line, int column, const std::string& what)
        : Error(ErrorCode::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace qgeom
