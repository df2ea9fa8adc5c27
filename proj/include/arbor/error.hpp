#ifndef ARBOR_ERROR_HPP
#define ARBOR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace arbor {

enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    DuplicateVertex,
    UnknownVertex,
    BadDocument,
    VertexNotInTree,
    VertexNotInHost,
    NotAnArborescence,
    EdgeMissingFromHost,
    NotACycle,
    NotALinearExtension,
    RootMissing,
    NotSpanningReachableSet,
    ComparableVertices,
    PreconditionOrderViolated,
    NotNormalInput,
    UnreachableTarget,
    UnknownFamily,
    BadParameters,
    UnknownEnd,
    NotNormalAtDepth,
    NotATree,
    NoNecklaceInWindow,
    NotSolidFamily,
    NoWitnessInWindow,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::BadDocument: return "BadDocument";
    case ErrorCode::VertexNotInTree: return "VertexNotInTree";
    case ErrorCode::VertexNotInHost: return "VertexNotInHost";
    case ErrorCode::NotAnArborescence: return "NotAnArborescence";
    case ErrorCode::EdgeMissingFromHost: return "EdgeMissingFromHost";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotALinearExtension: return "NotALinearExtension";
    case ErrorCode::RootMissing: return "RootMissing";
    case ErrorCode::NotSpanningReachableSet: return "NotSpanningReachableSet";
    case ErrorCode::ComparableVertices: return "ComparableVertices";
    case ErrorCode::PreconditionOrderViolated: return "PreconditionOrderViolated";
    case ErrorCode::NotNormalInput: return "NotNormalInput";
    case ErrorCode::UnreachableTarget: return "UnreachableTarget";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::UnknownEnd: return "UnknownEnd";
    case ErrorCode::NotNormalAtDepth: return "NotNormalAtDepth";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NoNecklaceInWindow: return "NoNecklaceInWindow";
    case ErrorCode::NotSolidFamily: return "NotSolidFamily";
    case ErrorCode::NoWitnessInWindow: return "NoWitnessInWindow";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace arbor

#endif
