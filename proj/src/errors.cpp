#include "abelgraph/errors.hpp"

namespace abelgraph {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::UnknownPoint: return "UnknownPoint";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
        case ErrorCode::HostMismatch: return "HostMismatch";
        case ErrorCode::IndexMismatch: return "IndexMismatch";
        case ErrorCode::TotalDegreeMismatch: return "TotalDegreeMismatch";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NotProper: return "NotProper";
        case ErrorCode::GenusTooSmall: return "GenusTooSmall";
        case ErrorCode::NotSemistable: return "NotSemistable";
        case ErrorCode::NotQuasistable: return "NotQuasistable";
        case ErrorCode::NotStable: return "NotStable";
        case ErrorCode::NotSemibalanced: return "NotSemibalanced";
        case ErrorCode::NotTwoComponent: return "NotTwoComponent";
        case ErrorCode::Not1General: return "Not1General";
        case ErrorCode::MultipleHalfNodes: return "MultipleHalfNodes";
        case ErrorCode::SpecError: return "SpecError";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "UnknownError";
}

}  // namespace abelgraph
