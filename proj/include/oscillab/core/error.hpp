#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace oscillab {

// Failure categories. The CLI maps `usage` to exit code 2 and everything else
// to exit code 1.
enum class ErrorKind {
    usage,
    config,
    positive_entropy,
    not_automorphism,
    invalid_polynomial,
    integrality,
    length,
    capacity,
    precision,
    not_prime,
    budget,
    dimension_mismatch,
    precondition,
    cert_search_exceeded,
    io,
    mismatch,  // a rerun or crosscheck disagreed with the recorded result
    internal,
};

const char* error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& message, std::string detail = {})
        : std::runtime_error(message), kind_(kind), detail_(std::move(detail)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const char* name() const noexcept { return error_name(kind_); }
    // Optional machine-readable payload (e.g. the non-cyclotomic cofactor).
    const std::string& detail() const noexcept { return detail_; }
    bool is_usage() const noexcept { return kind_ == ErrorKind::usage || kind_ == ErrorKind::config; }

   private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message, std::string detail = {}) {
    throw Error(kind, message, std::move(detail));
}

}  // namespace oscillab
