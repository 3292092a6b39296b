#pragma once

#include <stdexcept>
#include <string>

namespace posetcalc {

enum class ErrorKind {
    // poset construction / queries
    NotBounded,
    NotGraded,
    CyclicCovers,
    UnknownElement,
    RankTooLarge,
    NotComparable,
    InvalidChain,
    TrivialPoset,
    // polynomial arithmetic
    DegreeMismatch,
    WordTooLong,
    ZeroDegree,
    IndexOutOfRange,
    InexactDivision,
    // flag vectors
    DenseTableTooLarge,
    // labelings
    MissingLabel,
    NotMaximalChain,
    NotAnRLabeling,
    NegativeLabel,
    // documents
    ParseError,
    // cross-path disagreement, always a bug
    IdentityViolation,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::CyclicCovers: return "CyclicCovers";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::TrivialPoset: return "TrivialPoset";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::WordTooLong: return "WordTooLong";
    case ErrorKind::ZeroDegree: return "ZeroDegree";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::DenseTableTooLarge: return "DenseTableTooLarge";
    case ErrorKind::MissingLabel: return "MissingLabel";
    case ErrorKind::NotMaximalChain: return "NotMaximalChain";
    case ErrorKind::NotAnRLabeling: return "NotAnRLabeling";
    case ErrorKind::NegativeLabel: return "NegativeLabel";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace posetcalc
