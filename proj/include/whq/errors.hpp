#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace whq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatchError : public Error {
public:
    FieldMismatchError(const std::string& lhs, const std::string& rhs)
        : Error("field mismatch: " + lhs + " vs " + rhs) {}
};

class SignatureMismatchError : public Error {
public:
    SignatureMismatchError(const std::string& context, const std::string& expected,
                           const std::string& got)
        : Error(context + ": signature mismatch, expected " + expected + ", got " + got),
          expected_(expected), got_(got) {}
    const std::string& expected() const { return expected_; }
    const std::string& got() const { return got_; }

private:
    std::string expected_, got_;
};

class NotIdempotentError : public Error {
public:
    NotIdempotentError(std::uint32_t basis_col, const std::string& detail)
        : Error("map is not idempotent: e*e differs from e on basis vector " +
                std::to_string(basis_col) + " (" + detail + ")"),
          basis_col_(basis_col) {}
    std::uint32_t witness_column() const { return basis_col_; }

private:
    std::uint32_t basis_col_;
};

class NotInvertibleError : public Error {
public:
    NotInvertibleError(std::uint64_t rank, std::uint64_t dim)
        : Error("map is not invertible: rank " + std::to_string(rank) + " of " +
                std::to_string(dim)),
          rank_(rank), dim_(dim) {}
    std::uint64_t rank() const { return rank_; }
    std::uint64_t dim() const { return dim_; }

private:
    std::uint64_t rank_, dim_;
};

class DoesNotEqualizeError : public Error {
public:
    explicit DoesNotEqualizeError(std::uint32_t col)
        : Error("morphism does not equalize the defining pair (witness column " +
                std::to_string(col) + ")"),
          col_(col) {}
    std::uint32_t witness_column() const { return col_; }

private:
    std::uint32_t col_;
};

class DoesNotCoequalizeError : public Error {
public:
    explicit DoesNotCoequalizeError(std::uint32_t col)
        : Error("morphism does not coequalize the defining pair (witness column " +
                std::to_string(col) + ")"),
          col_(col) {}
    std::uint32_t witness_column() const { return col_; }

private:
    std::uint32_t col_;
};

class FactorizationFailureError : public Error {
public:
    using Error::Error;
};

class NotALoopError : public Error {
public:
    using Error::Error;
};

class IpVerificationError : public Error {
public:
    using Error::Error;
};

class InvalidGroupoidError : public Error {
public:
    using Error::Error;
};

class NotAWhqError : public Error {
public:
    explicit NotAWhqError(const std::string& first_failed)
        : Error("structure fails the axiom check at: " + first_failed),
          check_(first_failed) {}
    const std::string& failed_check() const { return check_; }

private:
    std::string check_;
};

class AxiomVerificationError : public Error {
public:
    using Error::Error;
};

class AssociativityFailureError : public Error {
public:
    AssociativityFailureError(std::uint32_t i, std::uint32_t j, std::uint32_t k)
        : Error("product is not associative on basis triple (" + std::to_string(i) + "," +
                std::to_string(j) + "," + std::to_string(k) + ")") {}
};

class AlmostLinealityRequiredError : public Error {
public:
    using Error::Error;
};

class NotAHopfQuasigroupError : public Error {
public:
    using Error::Error;
};

// malformed or ill-typed input (files, bindings, CLI arguments)
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(std::uint32_t line, std::uint32_t col, const std::string& msg)
        : InputError("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " +
                     msg),
          line_(line), col_(col) {}
    std::uint32_t line() const { return line_; }
    std::uint32_t col() const { return col_; }

private:
    std::uint32_t line_, col_;
};

class UnknownNameError : public ParseError {
public:
    UnknownNameError(std::uint32_t line, std::uint32_t col, const std::string& name)
        : ParseError(line, col, "unknown name '" + name + "'") {}
};

} // namespace whq
