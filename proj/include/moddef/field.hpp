#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace moddef {

class Scalar;

/// The ground field of a computation: the rationals, or Z/p for a prime p.
/// A field is fixed per computation; scalars from different fields never mix.
class Field {
public:
    /// The rationals.
    Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws InputError if `p` is not a prime below 2^62.
    static Field prime(std::uint64_t p);
    /// Accepts "Q" or "F_<p>".
    static Field parse(std::string_view text);

    bool is_rational() const noexcept { return modulus_ == 0; }
    std::uint64_t characteristic() const noexcept { return modulus_; }
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long value) const;
    Scalar from_rational(const mpq_class& value) const;
    /// Parses "p/q" or "n"; in F_p the quotient is taken modulo p.
    Scalar parse_scalar(std::string_view text) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
    static Field prime_unchecked(std::uint64_t p) { return Field{p}; }
    std::uint64_t modulus_ = 0;
};

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; residues satisfy 0 <= value < p.
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;

    Field field() const noexcept;
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Canonical text: "p/q" (or "n" when q = 1) for rationals, the decimal
    /// residue for prime fields.
    std::string to_string() const;
    const mpq_class* as_rational() const noexcept { return std::get_if<mpq_class>(&value_); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    /// Throws std::domain_error on division by zero.
    Scalar& operator/=(const Scalar& rhs);
    Scalar inverse() const;

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

    /// lhs -= factor * rhs, without a temporary in the rational case.
    void subtract_product(const Scalar& factor, const Scalar& rhs);

private:
    friend class Field;

    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
        bool operator==(const Residue&) const = default;
    };

    explicit Scalar(mpq_class value) : value_(std::move(value)) {}
    explicit Scalar(Residue value) : value_(value) {}

    void require_same_field(const Scalar& other) const;

    std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace moddef
