#pragma once

#include <stdexcept>
#include <string>

namespace selim {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape mismatch: non-square matrix, wrong row count, incompatible caps.
class dimension_error : public error {
public:
    using error::error;
};

/// A value outside the operation's domain (zero polynomial, 0 raised to a
/// negative power, exponent overflow, ...).
class domain_error : public error {
public:
    using error::error;
};

/// Input exceeds a hard size limit (e.g. permanent dimension caps).
class resource_error : public error {
public:
    using error::error;
};

/// A rational formula or an elimination degenerates for these coefficients
/// (vanishing minor, identically zero eliminant, positive-dimensional set).
class degenerate_error : public error {
public:
    using error::error;
};

/// The interpolation support does not contain the implicit equation's support.
class support_error : public error {
public:
    using error::error;
};

/// An input document fails schema validation; the message names the field.
class schema_error : public error {
public:
    using error::error;
};

/// An internal cross-check failed. Always a bug, never a user error.
class invariant_error : public error {
public:
    using error::error;
};

} // namespace selim
