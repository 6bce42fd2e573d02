#pragma once

#include <stdexcept>
#include <string>

namespace focal {

enum class ErrorKind {
    DivisionByNonUnit,
    PivotNotUnit,
    WrongDegree,
    SyntaxError,
    UnknownVariable,
    ZeroPointMap,
    DegenerateSpanAtBase,
    DegenerateChart,
    DegenerateCongruence,
    NonGenericChart,
    NonGenericSample,
    InconsistentSample,
    NotAPoint,
    NotALine,
    WholeLineFocal,
    ZeroPencil,
    SingularTransform,
    GenerationFailed,
    CertificateFailed,
    UnexpectedFocusDim,
    IoError,
};

/// Library-wide exception type. `kind()` identifies the failure mode so
/// callers (the classifier's resample loop, the CLI) can react without
/// parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByNonUnit: return "DivisionByNonUnit";
        case ErrorKind::PivotNotUnit: return "PivotNotUnit";
        case ErrorKind::WrongDegree: return "WrongDegree";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::ZeroPointMap: return "ZeroPointMap";
        case ErrorKind::DegenerateSpanAtBase: return "DegenerateSpanAtBase";
        case ErrorKind::DegenerateChart: return "DegenerateChart";
        case ErrorKind::DegenerateCongruence: return "DegenerateCongruence";
        case ErrorKind::NonGenericChart: return "NonGenericChart";
        case ErrorKind::NonGenericSample: return "NonGenericSample";
        case ErrorKind::InconsistentSample: return "InconsistentSample";
        case ErrorKind::NotAPoint: return "NotAPoint";
        case ErrorKind::NotALine: return "NotALine";
        case ErrorKind::WholeLineFocal: return "WholeLineFocal";
        case ErrorKind::ZeroPencil: return "ZeroPencil";
        case ErrorKind::SingularTransform: return "SingularTransform";
        case ErrorKind::GenerationFailed: return "GenerationFailed";
        case ErrorKind::CertificateFailed: return "CertificateFailed";
        case ErrorKind::UnexpectedFocusDim: return "UnexpectedFocusDim";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace focal
