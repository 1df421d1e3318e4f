#include "exotic/error.hpp"

namespace exotic {

const char* errorKindName(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Crossing: return "Crossing";
        case ErrorKind::DanglingCup: return "DanglingCup";
        case ErrorKind::RayInsideCup: return "RayInsideCup";
        case ErrorKind::HalfCupInsideCup: return "HalfCupInsideCup";
        case ErrorKind::RayRightOfHalfCup: return "RayRightOfHalfCup";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::BadParameters: return "BadParameters";
        case ErrorKind::NotStandard: return "NotStandard";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::NotARay: return "NotARay";
        case ErrorKind::NotAPartition: return "NotAPartition";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::BadPoint: return "BadPoint";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::ParameterMismatch: return "ParameterMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace exotic
