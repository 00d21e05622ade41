#ifndef FFSYNC_POLY_HPP
#define FFSYNC_POLY_HPP

#include "ffsync/field.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ffsync {

/// Dense univariate polynomial over F_p. Coefficients are canonical residues
/// stored in ascending degree with trailing zeros trimmed; the zero polynomial
/// has an empty coefficient vector and no degree.
class Polynomial {
public:
    explicit Polynomial(PrimeField field);  // zero polynomial
    Polynomial(PrimeField field, std::vector<std::uint64_t> ascending_coeffs);

    static Polynomial one(PrimeField field);
    static Polynomial monomial(PrimeField field, std::size_t degree, std::uint64_t coeff = 1);

    const PrimeField& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, or std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;

    /// Coefficient of x^i; zero above the degree.
    std::uint64_t coeff_value(std::size_t i) const noexcept;
    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }

    /// Leading coefficient; nonzero polynomial only.
    std::uint64_t leading_value() const;
    bool is_monic() const noexcept;
    /// Scales the leading coefficient to 1. Throws std::domain_error on zero.
    Polynomial monic() const;

    std::uint64_t eval_value(std::uint64_t x) const;  // x is reduced mod p
    FieldElement eval(const FieldElement& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const noexcept;

    std::string str() const;  // human-readable form in the variable "x"

private:
    PrimeField field_;
    std::vector<std::uint64_t> coeffs_;

    void trim();
    void require_same_field(const Polynomial& o) const;
};

struct PolyDivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// f = q*g + r with deg r < deg g. Throws std::domain_error when g is zero.
PolyDivMod divmod(const Polynomial& f, const Polynomial& g);

/// Monic gcd. Throws std::invalid_argument when both inputs are zero.
Polynomial poly_gcd(Polynomial f, Polynomial g);

/// Monic lcm. Throws std::invalid_argument when either input is zero.
Polynomial poly_lcm(const Polynomial& f, const Polynomial& g);

struct NilpotentSplit {
    std::size_t zero_root_multiplicity;  // k in f = x^k * cofactor
    Polynomial cofactor;                 // cofactor(0) != 0
};

/// Splits off the highest power of x: f = x^k * cofactor with cofactor(0) != 0.
/// Throws std::invalid_argument for the zero polynomial.
NilpotentSplit split_nilpotent_part(const Polynomial& f);

std::ostream& operator<<(std::ostream&, const Polynomial&);

}  // namespace ffsync

#endif  // FFSYNC_POLY_HPP
