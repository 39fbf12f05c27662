#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dicke2p {

enum class ErrorKind {
    NonPositiveFrequency,
    ZeroQubits,
    NegativeCoupling,
    UnboundedRegion,
    DomainError,
    StepTooLarge,
    NotSuperradiant,
    InsufficientPoints,
    TooFewPeriods,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so that front ends can
// map it onto exit codes without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // Validation failures (bad inputs) as opposed to failures of the physics.
    bool is_validation() const noexcept {
        return kind_ == ErrorKind::NonPositiveFrequency || kind_ == ErrorKind::ZeroQubits ||
               kind_ == ErrorKind::NegativeCoupling || kind_ == ErrorKind::InvalidArgument ||
               kind_ == ErrorKind::InsufficientPoints;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace dicke2p
