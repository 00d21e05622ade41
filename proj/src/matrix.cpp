#include "ffsync/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

namespace ffsync {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_value(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::uint64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw std::invalid_argument("Matrix::from_rows: ragged row " + std::to_string(i));
        }
        for (std::size_t j = 0; j < c; ++j) m.set_value(i, j, rows[i][j]);
    }
    return m;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

FieldElement Matrix::at(std::size_t i, std::size_t j) const { return {field_, value(i, j)}; }

void Matrix::set(std::size_t i, std::size_t j, const FieldElement& v) {
    if (!(v.field() == field_)) throw std::invalid_argument("Matrix::set: field mismatch");
    data_[i * cols_ + j] = v.value();
}

void Matrix::require_same_field(const Matrix& o) const {
    if (!(field_ == o.field_)) {
        throw std::invalid_argument("Matrix: field mismatch (p=" + std::to_string(field_.modulus()) +
                                    " vs p=" + std::to_string(o.field_.modulus()) + ")");
    }
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("Matrix: dimension mismatch in addition");
    }
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.add(data_[k], o.data_[k]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("Matrix: dimension mismatch in subtraction");
    }
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.sub(data_[k], o.data_[k]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(o);
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t a = value(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                r.data_[i * o.cols_ + j] =
                    field_.add(r.data_[i * o.cols_ + j], field_.mul(a, o.value(k, j)));
            }
        }
    }
    return r;
}

bool Matrix::operator==(const Matrix& o) const noexcept {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::pow(std::uint64_t e) const {
    if (!is_square()) throw std::invalid_argument("Matrix::pow: matrix is not square");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t.set_value(j, i, value(i, j));
    }
    return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) {
        throw std::invalid_argument("Matrix::block: out of range");
    }
    Matrix b(field_, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) b.set_value(i, j, value(row0 + i, col0 + j));
    }
    return b;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
    require_same_field(b);
    if (row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_) {
        throw std::invalid_argument("Matrix::set_block: out of range");
    }
    for (std::size_t i = 0; i < b.rows_; ++i) {
        for (std::size_t j = 0; j < b.cols_; ++j) set_value(row0 + i, col0 + j, b.value(i, j));
    }
}

std::vector<std::uint64_t> Matrix::row_values(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<std::uint64_t> Matrix::col_values(std::size_t j) const {
    std::vector<std::uint64_t> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = value(i, j);
    return c;
}

std::vector<std::uint64_t> Matrix::apply(const std::vector<std::uint64_t>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: vector length mismatch");
    std::vector<std::uint64_t> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const std::uint64_t* row = data_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j] % field_.modulus();
        y[i] = acc % field_.modulus();
    }
    return y;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(data_[i * cols_ + k], data_[j * cols_ + k]);
}

void Matrix::scale_row(std::size_t i, std::uint64_t c) {
    for (std::size_t k = 0; k < cols_; ++k) {
        data_[i * cols_ + k] = field_.mul(data_[i * cols_ + k], c);
    }
}

void Matrix::add_scaled_row(std::size_t i, std::size_t j, std::uint64_t c) {
    for (std::size_t k = 0; k < cols_; ++k) {
        data_[i * cols_ + k] = field_.add(data_[i * cols_ + k], field_.mul(c, data_[j * cols_ + k]));
    }
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("hcat: field mismatch");
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row count mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Matrix vcat(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("vcat: no blocks");
    const std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (const Matrix& b : blocks) {
        if (!(b.field() == blocks.front().field())) throw std::invalid_argument("vcat: field mismatch");
        if (b.cols() != cols) throw std::invalid_argument("vcat: column count mismatch");
        rows += b.rows();
    }
    Matrix r(blocks.front().field(), rows, cols);
    std::size_t at = 0;
    for (const Matrix& b : blocks) {
        r.set_block(at, 0, b);
        at += b.rows();
    }
    return r;
}

RrefResult rref(const Matrix& a) {
    Matrix r = a;
    const PrimeField F = r.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t pr = row;
        while (pr < r.rows() && r.value(pr, col) == 0) ++pr;
        if (pr == r.rows()) continue;
        r.swap_rows(row, pr);
        r.scale_row(row, F.inv(r.value(row, col)));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            const std::uint64_t f = r.value(i, col);
            if (f != 0) r.add_scaled_row(i, row, F.neg(f));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots), row};
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = a.rows();
    RrefResult rr = rref(hcat(a, Matrix::identity(a.field(), n)));
    if (rr.rank != n || (n > 0 && rr.pivots.back() >= n)) {
        throw std::invalid_argument("inverse: matrix is singular");
    }
    return rr.r.block(0, n, n, n);
}

SubspaceBasis::SubspaceBasis(PrimeField field, std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(field, ambient_dim, 0) {}

SubspaceBasis::SubspaceBasis(std::size_t ambient, Matrix basis)
    : ambient_(ambient), basis_(std::move(basis)) {}

SubspaceBasis SubspaceBasis::span_of_columns(const Matrix& generators) {
    RrefResult rr = rref(generators.transpose());
    Matrix basis(generators.field(), generators.rows(), rr.rank);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        for (std::size_t j = 0; j < generators.rows(); ++j) basis.set_value(j, i, rr.r.value(i, j));
    }
    return {generators.rows(), std::move(basis)};
}

SubspaceBasis SubspaceBasis::full_space(PrimeField field, std::size_t ambient_dim) {
    return {ambient_dim, Matrix::identity(field, ambient_dim)};
}

const PrimeField& SubspaceBasis::field() const noexcept { return basis_.field(); }

bool SubspaceBasis::contains(const Matrix& column) const {
    if (column.rows() != ambient_ || column.cols() != 1) {
        throw std::invalid_argument("SubspaceBasis::contains: expected a single column of ambient length");
    }
    return rank(hcat(basis_, column)) == dim();
}

bool SubspaceBasis::operator==(const SubspaceBasis& o) const noexcept {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

SubspaceBasis kernel_basis(const Matrix& a) {
    RrefResult rr = rref(a);
    std::vector<char> is_pivot(a.cols(), 0);
    for (std::size_t c : rr.pivots) is_pivot[c] = 1;

    // One generator per free column: that free variable is 1, the others 0,
    // pivot variables read off the reduced rows.
    Matrix gen(a.field(), a.cols(), a.cols() - rr.rank);
    std::size_t out = 0;
    for (std::size_t fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        gen.set_value(fc, out, 1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            gen.set_value(rr.pivots[i], out, a.field().neg(rr.r.value(i, fc)));
        }
        ++out;
    }
    return SubspaceBasis::span_of_columns(gen);
}

SubspaceBasis image_basis(const Matrix& a) { return SubspaceBasis::span_of_columns(a); }

Matrix solve_right(const Matrix& b, const Matrix& c) {
    if (!(b.field() == c.field())) throw std::invalid_argument("solve_right: field mismatch");
    if (b.rows() != c.rows()) throw std::invalid_argument("solve_right: row count mismatch");
    const std::size_t k = b.cols();
    if (rank(b) != k) throw std::invalid_argument("solve_right: matrix does not have full column rank");

    RrefResult rr = rref(hcat(b, c));
    for (std::size_t p : rr.pivots) {
        if (p >= k) {
            throw ConsistencyError(
                "solve_right: inconsistent system; a right-hand column leaves the span of the basis");
        }
    }
    Matrix x(b.field(), k, c.cols());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) x.set_value(i, j, rr.r.value(i, k + j));
    }
    return x;
}

Matrix extend_to_full_basis(const Matrix& independent_columns) {
    const std::size_t n = independent_columns.rows();
    if (rank(independent_columns) != independent_columns.cols()) {
        throw std::invalid_argument("extend_to_full_basis: columns are not linearly independent");
    }
    Matrix t = independent_columns;
    for (std::size_t i = 0; i < n && t.cols() < n; ++i) {
        Matrix unit(t.field(), n, 1);
        unit.set_value(i, 0, 1);
        Matrix trial = hcat(t, unit);
        if (rank(trial) == t.cols() + 1) t = std::move(trial);
    }
    if (t.cols() != n) {
        throw ConsistencyError("extend_to_full_basis: unit vectors failed to complete the basis");
    }
    return t;
}

Matrix extend_to_full_basis(const SubspaceBasis& basis) {
    return extend_to_full_basis(basis.basis_matrix());
}

Polynomial char_poly(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
    const PrimeField F = a.field();
    const std::size_t n = a.rows();
    if (n == 0) return Polynomial::one(F);

    // Similarity reduction to upper Hessenberg form. Row eliminations below
    // the subdiagonal are paired with the inverse column operations.
    Matrix h = a;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t pr = k + 1;
        while (pr < n && h.value(pr, k) == 0) ++pr;
        if (pr == n) continue;
        if (pr != k + 1) {
            h.swap_rows(k + 1, pr);
            for (std::size_t r = 0; r < n; ++r) {
                const std::uint64_t tmp = h.value(r, k + 1);
                h.set_value(r, k + 1, h.value(r, pr));
                h.set_value(r, pr, tmp);
            }
        }
        const std::uint64_t pivot_inv = F.inv(h.value(k + 1, k));
        for (std::size_t i = k + 2; i < n; ++i) {
            const std::uint64_t f = h.value(i, k);
            if (f == 0) continue;
            const std::uint64_t t = F.mul(f, pivot_inv);
            h.add_scaled_row(i, k + 1, F.neg(t));
            for (std::size_t r = 0; r < n; ++r) {
                h.set_value(r, k + 1, F.add(h.value(r, k + 1), F.mul(t, h.value(r, i))));
            }
        }
    }

    // Leading-minor recurrence for Hessenberg matrices:
    // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_i h[i-1][k-1] (prod subdiag) p_{i-1}.
    std::vector<Polynomial> p;
    p.reserve(n + 1);
    p.push_back(Polynomial::one(F));
    for (std::size_t k = 1; k <= n; ++k) {
        const Polynomial x_minus_diag(F, {F.neg(h.value(k - 1, k - 1)), 1});
        Polynomial pk = x_minus_diag * p[k - 1];
        std::uint64_t subdiag_prod = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            subdiag_prod = F.mul(subdiag_prod, h.value(i, i - 1));
            if (subdiag_prod == 0) break;
            const std::uint64_t coeff = F.mul(h.value(i - 1, k - 1), subdiag_prod);
            if (coeff == 0) continue;
            pk = pk - Polynomial(F, {coeff}) * p[i - 1];
        }
        p.push_back(std::move(pk));
    }
    return p[n];
}

Polynomial min_poly(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("min_poly: matrix is not square");
    const PrimeField F = a.field();
    const std::size_t n = a.rows();
    if (n == 0) return Polynomial::one(F);

    struct EchelonRow {
        std::vector<std::uint64_t> v;      // reduced Krylov vector, pivot scaled to 1
        std::size_t pivot;
        std::vector<std::uint64_t> combo;  // coefficients on A^j e_s reproducing v
    };

    Polynomial m = Polynomial::one(F);
    for (std::size_t s = 0; s < n; ++s) {
        if (m.degree() && *m.degree() == n) break;

        std::vector<EchelonRow> echelon;
        std::vector<std::uint64_t> w(n, 0);
        w[s] = 1;
        for (std::size_t t = 0;; ++t) {
            std::vector<std::uint64_t> cur = w;
            std::vector<std::uint64_t> combo(t + 1, 0);
            combo[t] = 1;
            for (const EchelonRow& row : echelon) {
                const std::uint64_t f = cur[row.pivot];
                if (f == 0) continue;
                for (std::size_t j = 0; j < n; ++j) cur[j] = F.sub(cur[j], F.mul(f, row.v[j]));
                for (std::size_t j = 0; j < row.combo.size(); ++j) {
                    combo[j] = F.sub(combo[j], F.mul(f, row.combo[j]));
                }
            }
            std::size_t pivot = 0;
            while (pivot < n && cur[pivot] == 0) ++pivot;
            if (pivot == n) {
                // First dependence: sum_j combo[j] A^j e_s = 0 with combo[t] = 1,
                // so combo is the monic local annihilator.
                m = poly_lcm(m, Polynomial(F, std::move(combo)));
                break;
            }
            const std::uint64_t inv = F.inv(cur[pivot]);
            for (auto& x : cur) x = F.mul(x, inv);
            for (auto& x : combo) x = F.mul(x, inv);
            echelon.push_back({std::move(cur), pivot, std::move(combo)});
            w = a.apply(w);
        }
    }
    return m;
}

bool is_nilpotent(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("is_nilpotent: matrix is not square");
    const std::size_t r = a.rows();
    const bool by_char_poly = char_poly(a) == Polynomial::monomial(a.field(), r);
    const bool by_power = a.pow(r).is_zero();
    if (by_char_poly != by_power) {
        throw ConsistencyError("is_nilpotent: characteristic polynomial and matrix power disagree");
    }
    return by_char_poly;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << " ";
            os << m.value(i, j);
        }
    }
    return os << "] (" << m.rows() << "x" << m.cols() << " mod " << m.field().modulus() << ")";
}

}  // namespace ffsync
