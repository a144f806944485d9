#pragma once

#include <stdexcept>
#include <string>

namespace padicdyn {

// Base class for all library failures.  Each concrete error corresponds to a
// contract violation or an honest "cannot decide at this precision" outcome;
// callers are expected to catch the specific type they can handle.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& w = "operands belong to different local fields")
        : Error(w) {}
};

struct DivisionByIndistinguishableZero : Error {
    explicit DivisionByIndistinguishableZero(
        const std::string& w = "divisor is indistinguishable from zero at its precision")
        : Error(w) {}
};

struct ConvergenceDomain : Error {
    explicit ConvergenceDomain(const std::string& w) : Error(w) {}
};

struct NoRootInField : Error {
    explicit NoRootInField(const std::string& w) : Error(w) {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& w = "element is not a unit") : Error(w) {}
};

// Raised when a decision genuinely requires more digits than are available.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& w) : Error(w) {}
};

struct CompositionDiverges : Error {
    explicit CompositionDiverges(const std::string& w) : Error(w) {}
};

struct NonUnitLinearTerm : Error {
    explicit NonUnitLinearTerm(const std::string& w) : Error(w) {}
};

struct NoDecay : Error {
    explicit NoDecay(const std::string& w) : Error(w) {}
};

struct TailNotDominated : Error {
    explicit TailNotDominated(const std::string& w) : Error(w) {}
};

struct EvalDiverges : Error {
    explicit EvalDiverges(const std::string& w) : Error(w) {}
};

struct NotStable : Error {
    explicit NotStable(const std::string& w) : Error(w) {}
};

// Signals that the requested construction exists only over a finite extension
// of the working field; the caller may retry with a larger field descriptor.
struct NeedsExtension : Error {
    explicit NeedsExtension(const std::string& w) : Error(w) {}
};

struct DegenerateImage : Error {
    explicit DegenerateImage(const std::string& w) : Error(w) {}
};

struct MixedDegreesNotPeriodic : Error {
    explicit MixedDegreesNotPeriodic(const std::string& w) : Error(w) {}
};

// Bug trap: two independent computation routes disagreed.  Never expected.
struct InternalDisagreement : Error {
    explicit InternalDisagreement(const std::string& w) : Error(w) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& w) : Error(w) {}
};

struct Unsupported : Error {
    explicit Unsupported(const std::string& w) : Error(w) {}
};

} // namespace padicdyn
