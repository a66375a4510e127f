#include "tileasm/error.hpp"

namespace tileasm {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::InvalidDirection: return "InvalidDirection";
    case ErrorKind::ZeroPeriodDisplacement: return "ZeroPeriodDisplacement";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DegenerateRibbon: return "DegenerateRibbon";
    case ErrorKind::PathReentersWindow: return "PathReentersWindow";
    case ErrorKind::PointOutsideWindow: return "PointOutsideWindow";
    case ErrorKind::StartOutsideIntersection: return "StartOutsideIntersection";
    case ErrorKind::MismatchedStart: return "MismatchedStart";
    case ErrorKind::SimplicityViolation: return "SimplicityViolation";
    case ErrorKind::DuplicateTileName: return "DuplicateTileName";
    case ErrorKind::DuplicateSeed: return "DuplicateSeed";
    case ErrorKind::MissingSeed: return "MissingSeed";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SiteOccupied: return "SiteOccupied";
    case ErrorKind::SiteOutsideWindow: return "SiteOutsideWindow";
    case ErrorKind::WindowExceeded: return "WindowExceeded";
    case ErrorKind::NonCausalViolation: return "NonCausalViolation";
    case ErrorKind::GlueMismatch: return "GlueMismatch";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::ValuationMismatch: return "ValuationMismatch";
    case ErrorKind::StartUnoccupied: return "StartUnoccupied";
    case ErrorKind::PathIntersectsForbidden: return "PathIntersectsForbidden";
    case ErrorKind::NotConfluent: return "NotConfluent";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

}  // namespace tileasm
