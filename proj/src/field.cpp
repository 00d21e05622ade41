#include "ffsync/field.hpp"

#include <ostream>
#include <string>

namespace ffsync {

namespace {

constexpr std::uint64_t kModulusCap = std::uint64_t{1} << 31;

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= kModulusCap) {
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                    " exceeds the supported range (p < 2^31)");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                    " is not prime");
    }
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t base = a;
    std::uint64_t result = 1 % p_;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
}

FieldElement PrimeField::element(std::uint64_t x) const { return {*this, x % p_}; }
FieldElement PrimeField::zero() const { return {*this, 0}; }
FieldElement PrimeField::one() const { return {*this, 1 % p_}; }

FieldElement::FieldElement(const PrimeField& field, std::uint64_t canonical_value)
    : field_(field), value_(canonical_value) {
    if (value_ >= field_.modulus()) {
        throw std::invalid_argument("FieldElement: value " + std::to_string(value_) +
                                    " is not a canonical residue mod " +
                                    std::to_string(field_.modulus()));
    }
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) {
        throw std::invalid_argument("FieldElement: field mismatch (p=" +
                                    std::to_string(a.field().modulus()) + " vs p=" +
                                    std::to_string(b.field().modulus()) + ")");
    }
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    return {field_, field_.add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(*this, o);
    return {field_, field_.sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    return {field_, field_.mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(*this, o);
    return {field_, field_.mul(value_, field_.inv(o.value_))};
}

FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }

FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    return os << x.value() << " (mod " << x.field().modulus() << ")";
}

}  // namespace ffsync
