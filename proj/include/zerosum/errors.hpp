#pragma once

#include <stdexcept>

namespace zerosum {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Modulus outside the supported range (every operation requires n >= 2).
class invalid_modulus_error : public error {
public:
    using error::error;
};

/// A parameter that must be an odd prime is not one.
class invalid_prime_error : public error {
public:
    using error::error;
};

/// Structurally invalid input: dimension or modulus mismatch, malformed data.
class invalid_input_error : public error {
public:
    using error::error;
};

/// A documented precondition of the operation does not hold; the message
/// names the expected value.
class precondition_error : public error {
public:
    using error::error;
};

/// The requested computation exceeds a configured budget. The message states
/// the offending count so the caller can decide whether to raise the budget.
class resource_limit_error : public error {
public:
    using error::error;
};

/// Malformed text input; the message carries the 1-based line number.
class parse_error : public error {
public:
    using error::error;
};

} // namespace zerosum
