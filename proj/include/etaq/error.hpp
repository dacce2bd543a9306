#ifndef ETAQ_ERROR_HPP
#define ETAQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace etaq {

// Error categories shared by the library and the CLI exit-code table.
enum class ErrorKind {
    FieldMismatch,
    DivisionByZero,
    DegreeError,
    DegenerateInput,
    DegenerateRange,
    NotSmooth,
    NoTorsionSection,
    RangeError,
    InvalidPrime,
    Reducible,
    ParseError,
    NotBihomogeneous,
    IoError,
    InternalConsistency,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    const char* kind_name() const noexcept { return kind_name(kind_); }

    static const char* kind_name(ErrorKind k) noexcept {
        switch (k) {
            case ErrorKind::FieldMismatch: return "FieldMismatch";
            case ErrorKind::DivisionByZero: return "DivisionByZero";
            case ErrorKind::DegreeError: return "DegreeError";
            case ErrorKind::DegenerateInput: return "DegenerateInput";
            case ErrorKind::DegenerateRange: return "DegenerateRange";
            case ErrorKind::NotSmooth: return "NotSmooth";
            case ErrorKind::NoTorsionSection: return "NoTorsionSection";
            case ErrorKind::RangeError: return "RangeError";
            case ErrorKind::InvalidPrime: return "InvalidPrime";
            case ErrorKind::Reducible: return "Reducible";
            case ErrorKind::ParseError: return "ParseError";
            case ErrorKind::NotBihomogeneous: return "NotBihomogeneous";
            case ErrorKind::IoError: return "IoError";
            case ErrorKind::InternalConsistency: return "InternalConsistency";
        }
        return "Unknown";
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace etaq

#endif
