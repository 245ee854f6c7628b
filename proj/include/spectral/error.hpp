#ifndef SPECTRAL_ERROR_HPP
#define SPECTRAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spectral {

// Every throwing path in the library uses one of these types; code() is the
// stable machine-readable string surfaced by the CLI error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("parse_error", message) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& message)
        : Error("dimension_mismatch", message) {}
};

// A pairwise primitive relation fell outside the decidable catalog, or an
// operation result is not expressible in the point/segment/circle/disk algebra.
class UnsupportedConfiguration : public Error {
public:
    explicit UnsupportedConfiguration(const std::string& message)
        : Error("unsupported_configuration", message) {}
};

class IncompleteFactorization : public Error {
public:
    explicit IncompleteFactorization(const std::string& message)
        : Error("incomplete_factorization", message) {}
};

class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& message)
        : Error("precondition_violated", message) {}
};

// Two rules derived unequal regions for one spectrum kind. Fatal by design:
// the identities guarantee consistency, so a conflict means a bad input
// profile or an implementation bug.
class RuleConflict : public Error {
public:
    explicit RuleConflict(const std::string& message) : Error("rule_conflict", message) {}
};

// A profile assignment violates the standing inclusion lattice.
class ProfileInconsistent : public Error {
public:
    explicit ProfileInconsistent(const std::string& message)
        : Error("profile_inconsistent", message) {}
};

class MissingKind : public Error {
public:
    explicit MissingKind(const std::string& message) : Error("missing_kind", message) {}
};

} // namespace spectral

#endif
