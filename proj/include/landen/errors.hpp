#pragma once

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every module.
 *
 * Domain failures (a caller asked for something mathematically undefined)
 * and internal invariant violations (the library computed something that the
 * mathematics rules out) are kept distinct so the CLI can map them to
 * different exit codes.
 */

#include <stdexcept>
#include <string>

namespace landen {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different rings (conductor, modulus or VarSet differ).
class ring_mismatch : public error {
public:
    using error::error;
};

/// A cyclotomic integer that is not in the image of Z.
class not_rational : public error {
public:
    using error::error;
};

/// Inexact division; carries a printable remainder witness.
class not_divisible : public error {
public:
    explicit not_divisible(const std::string& what, std::string remainder = {})
        : error(what), remainder_(std::move(remainder)) {}

    const std::string& remainder() const noexcept { return remainder_; }

private:
    std::string remainder_;
};

class not_prime : public error {
public:
    using error::error;
};

/// The characteristic of the coefficient field divides m.
class char_divides_m : public error {
public:
    using error::error;
};

/// Point lies in the indeterminacy locus {b = 0}.
class indeterminate_point : public error {
public:
    using error::error;
};

/// Requested grid exceeds a documented cost guard.
class guard_exceeded : public error {
public:
    using error::error;
};

/// Signals a bug: a step that must always succeed did not.
class invariant_violation : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

class invalid_argument : public error {
public:
    using error::error;
};

}  // namespace landen
