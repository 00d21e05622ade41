#ifndef FFSYNC_FIELD_HPP
#define FFSYNC_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>

namespace ffsync {

/// Two computation paths that must agree by construction disagreed.
/// Always a bug in this library (or a violated internal invariant),
/// never a user input error.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class FieldElement;

/// The prime field F_p. Moduli are restricted to p < 2^31 so that a product
/// of two canonical residues always fits in a 64-bit intermediate.
class PrimeField {
public:
    /// Throws std::invalid_argument for p < 2, p >= 2^31 or composite p.
    /// Primality is verified by trial division up to sqrt(p).
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }

    bool operator==(const PrimeField&) const noexcept = default;

    // Arithmetic on canonical residues; operands must already lie in [0, p).
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        const std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + (p_ - b);
    }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return a * b % p_; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;

    /// Multiplicative inverse via Fermat exponentiation.
    /// Throws std::domain_error for a == 0.
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t reduce(std::uint64_t x) const noexcept { return x % p_; }

    FieldElement element(std::uint64_t x) const;  // reduces x mod p
    FieldElement zero() const;
    FieldElement one() const;

private:
    std::uint64_t p_;
};

/// A canonical residue paired with its field. Every operation keeps the value
/// in [0, p); mixing elements of different fields throws std::invalid_argument.
class FieldElement {
public:
    /// `canonical_value` must already lie in [0, p); use PrimeField::element
    /// to reduce arbitrary integers.
    FieldElement(const PrimeField& field, std::uint64_t canonical_value);

    std::uint64_t value() const noexcept { return value_; }
    const PrimeField& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const noexcept {
        return field_ == o.field_ && value_ == o.value_;
    }

private:
    PrimeField field_;
    std::uint64_t value_;
};

std::ostream& operator<<(std::ostream&, const FieldElement&);

}  // namespace ffsync

#endif  // FFSYNC_FIELD_HPP
