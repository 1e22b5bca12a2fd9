#include "nilcx/error.hpp"

namespace nilcx {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotALieAlgebra: return "NotALieAlgebra";
        case ErrorKind::NotNilpotent: return "NotNilpotent";
        case ErrorKind::NotAnIdeal: return "NotAnIdeal";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::NotAlmostComplex: return "NotAlmostComplex";
        case ErrorKind::OddDimension: return "OddDimension";
        case ErrorKind::NotIntegrable: return "NotIntegrable";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotJAdapted: return "NotJAdapted";
        case ErrorKind::BadPairing: return "BadPairing";
        case ErrorKind::ConjugationInconsistent: return "ConjugationInconsistent";
        case ErrorKind::ForeignParameter: return "ForeignParameter";
        case ErrorKind::JacobiViolated: return "JacobiViolated";
        case ErrorKind::Syntax: return "SyntaxError";
        case ErrorKind::DuplicateBracket: return "DuplicateBracket";
        case ErrorKind::JInconsistent: return "JInconsistent";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace nilcx
