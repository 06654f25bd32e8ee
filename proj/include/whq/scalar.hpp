#pragma once

// Exact field scalars: rationals (GMP-backed) or residues mod a prime.
// Every scalar carries its field; mixing fields throws.

#include <whq/errors.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace whq {

enum class FieldKind { rationals, prime };

struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    std::uint64_t modulus = 0; // nonzero prime iff kind == prime

    static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }
    static FieldSpec prime(std::uint64_t p); // validates primality

    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

bool is_prime_u64(std::uint64_t n);

class Scalar {
public:
    Scalar() = default; // rational zero

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(const FieldSpec& f, long long n);
    static Scalar of_fraction(long long num, long long den); // rationals
    static Scalar of_residue(const FieldSpec& f, std::uint64_t r);

    // Accepts "n", "n/d" over the rationals and "r", "r mod p" over a prime field.
    static Scalar parse(const FieldSpec& f, std::string_view text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical text form: "n" or "n/d"; "r mod p" for prime fields.
    std::string str() const;

    // Rational value access (rationals only).
    const mpq_class& rational() const;
    std::uint64_t residue() const;

private:
    void check_same_field(const Scalar& o) const;

    FieldSpec field_ = FieldSpec::rationals();
    mpq_class q_;           // canonical: lowest terms, positive denominator
    std::uint64_t r_ = 0;   // residue in [0, p)
};

} // namespace whq
