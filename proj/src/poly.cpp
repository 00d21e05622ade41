#include "ffsync/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ffsync {

Polynomial::Polynomial(PrimeField field) : field_(field) {}

Polynomial::Polynomial(PrimeField field, std::vector<std::uint64_t> ascending_coeffs)
    : field_(field), coeffs_(std::move(ascending_coeffs)) {
    for (auto& c : coeffs_) c = field_.reduce(c);
    trim();
}

Polynomial Polynomial::one(PrimeField field) { return {field, {1}}; }

Polynomial Polynomial::monomial(PrimeField field, std::size_t degree, std::uint64_t coeff) {
    std::vector<std::uint64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return {field, std::move(c)};
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::uint64_t Polynomial::coeff_value(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
}

std::uint64_t Polynomial::leading_value() const {
    if (coeffs_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Polynomial::is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

Polynomial Polynomial::monic() const {
    const std::uint64_t lead = leading_value();
    if (lead == 1) return *this;
    const std::uint64_t s = field_.inv(lead);
    std::vector<std::uint64_t> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = field_.mul(coeffs_[i], s);
    return {field_, std::move(c)};
}

std::uint64_t Polynomial::eval_value(std::uint64_t x) const {
    const std::uint64_t xr = field_.reduce(x);
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = field_.add(field_.mul(acc, xr), coeffs_[i]);
    }
    return acc;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    if (!(x.field() == field_)) throw std::invalid_argument("Polynomial: field mismatch in eval");
    return {field_, eval_value(x.value())};
}

void Polynomial::require_same_field(const Polynomial& o) const {
    if (!(field_ == o.field_)) {
        throw std::invalid_argument("Polynomial: field mismatch (p=" +
                                    std::to_string(field_.modulus()) + " vs p=" +
                                    std::to_string(o.field_.modulus()) + ")");
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_field(o);
    std::vector<std::uint64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = field_.add(coeff_value(i), o.coeff_value(i));
    }
    Polynomial r(field_, std::move(c));
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_field(o);
    std::vector<std::uint64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = field_.sub(coeff_value(i), o.coeff_value(i));
    }
    Polynomial r(field_, std::move(c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_field(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    std::vector<std::uint64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            c[i + j] = field_.add(c[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
        }
    }
    return {field_, std::move(c)};
}

bool Polynomial::operator==(const Polynomial& o) const noexcept {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const std::uint64_t c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PolyDivMod divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    const PrimeField F = f.field();
    if (!(F == g.field())) throw std::invalid_argument("divmod: field mismatch");

    if (f.is_zero() || *f.degree() < *g.degree()) {
        return {Polynomial(F), f};
    }
    const std::size_t df = *f.degree();
    const std::size_t dg = *g.degree();
    const std::uint64_t lead_inv = F.inv(g.leading_value());

    std::vector<std::uint64_t> rem = f.coeffs();
    std::vector<std::uint64_t> quot(df - dg + 1, 0);
    for (std::size_t k = df - dg + 1; k-- > 0;) {
        const std::uint64_t top = rem[k + dg];
        if (top == 0) continue;
        const std::uint64_t q = F.mul(top, lead_inv);
        quot[k] = q;
        for (std::size_t j = 0; j <= dg; ++j) {
            rem[k + j] = F.sub(rem[k + j], F.mul(q, g.coeff_value(j)));
        }
    }
    return {Polynomial(F, std::move(quot)), Polynomial(F, std::move(rem))};
}

Polynomial poly_gcd(Polynomial f, Polynomial g) {
    if (f.is_zero() && g.is_zero()) {
        throw std::invalid_argument("poly_gcd: gcd(0, 0) is undefined");
    }
    while (!g.is_zero()) {
        Polynomial r = divmod(f, g).remainder;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

Polynomial poly_lcm(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) {
        throw std::invalid_argument("poly_lcm: arguments must be nonzero");
    }
    const Polynomial d = poly_gcd(f, g);
    return divmod(f * g, d).quotient.monic();
}

NilpotentSplit split_nilpotent_part(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("split_nilpotent_part: zero polynomial");
    std::size_t k = 0;
    while (f.coeff_value(k) == 0) ++k;
    std::vector<std::uint64_t> c(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k),
                                 f.coeffs().end());
    return {k, Polynomial(f.field(), std::move(c))};
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.str(); }

}  // namespace ffsync
