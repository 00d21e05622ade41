#ifndef FFSYNC_MATRIX_HPP
#define FFSYNC_MATRIX_HPP

#include "ffsync/poly.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace ffsync {

/// Dense exact matrix over F_p, row-major canonical residues.
/// Degenerate shapes (0x0, 0xk, kx0) are legal.
class Matrix {
public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols);  // zero matrix
    static Matrix identity(PrimeField field, std::size_t n);
    /// Entries are reduced mod p. Throws std::invalid_argument on ragged rows.
    static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::uint64_t>>& rows);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_zero() const noexcept;

    std::uint64_t value(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set_value(std::size_t i, std::size_t j, std::uint64_t v) {
        data_[i * cols_ + j] = field_.reduce(v);
    }
    FieldElement at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const FieldElement& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const noexcept;

    /// Exact power; pow(0) is the identity. Square matrices only.
    Matrix pow(std::uint64_t e) const;

    Matrix transpose() const;
    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& b);

    std::vector<std::uint64_t> row_values(std::size_t i) const;
    std::vector<std::uint64_t> col_values(std::size_t j) const;

    /// Matrix-vector product; x holds canonical residues of length cols().
    std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& x) const;

    const std::vector<std::uint64_t>& data() const noexcept { return data_; }

    // Elementary row operations (used by elimination routines).
    void swap_rows(std::size_t i, std::size_t j);
    void scale_row(std::size_t i, std::uint64_t c);
    /// row_i += c * row_j
    void add_scaled_row(std::size_t i, std::size_t j, std::uint64_t c);

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> data_;

    void require_same_field(const Matrix& o) const;
};

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const std::vector<Matrix>& blocks);

struct RrefResult {
    Matrix r;                          // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column indices, strictly increasing
    std::size_t rank;
};

RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Throws std::invalid_argument when a is singular or not square.
Matrix inverse(const Matrix& a);

/// A linear subspace of F_p^ambient stored through its canonical basis: the
/// basis vectors are the nonzero rows of the RREF of the transposed generator
/// matrix, transposed back into columns. Two subspaces are equal exactly when
/// their canonical basis matrices are equal.
class SubspaceBasis {
public:
    SubspaceBasis(PrimeField field, std::size_t ambient_dim);  // zero subspace
    static SubspaceBasis span_of_columns(const Matrix& generators);
    static SubspaceBasis full_space(PrimeField field, std::size_t ambient_dim);

    const PrimeField& field() const noexcept;
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.cols(); }

    /// ambient_dim x dim matrix whose columns are the canonical basis.
    const Matrix& basis_matrix() const noexcept { return basis_; }

    /// Membership of a single column vector (ambient_dim x 1).
    bool contains(const Matrix& column) const;

    bool operator==(const SubspaceBasis& o) const noexcept;

private:
    std::size_t ambient_;
    Matrix basis_;
    SubspaceBasis(std::size_t ambient, Matrix basis);
};

/// Canonical basis of {x : Ax = 0}; dimension = cols - rank.
SubspaceBasis kernel_basis(const Matrix& a);

/// Canonical basis of the column space of A.
SubspaceBasis image_basis(const Matrix& a);

/// Unique X with B*X = C. Requires B of full column rank
/// (std::invalid_argument otherwise). A column of C outside span(B) throws
/// ConsistencyError: every caller passes right-hand sides that are guaranteed
/// to lie in the span, so failure means an invariance claim was wrong.
Matrix solve_right(const Matrix& b, const Matrix& c);

/// Completes linearly independent columns to an invertible square matrix by
/// appending standard unit vectors scanned in index order, keeping each one
/// that increases the rank. The input columns are kept verbatim as a prefix.
Matrix extend_to_full_basis(const Matrix& independent_columns);
Matrix extend_to_full_basis(const SubspaceBasis& basis);

/// Monic characteristic polynomial det(xI - A) via similarity reduction to
/// upper Hessenberg form followed by the leading-minor recurrence. The 0x0
/// matrix has characteristic polynomial 1.
Polynomial char_poly(const Matrix& a);

/// Monic minimal polynomial: lcm over standard basis vectors of each vector's
/// local annihilator (first linear dependence in its Krylov sequence).
Polynomial min_poly(const Matrix& a);

/// True iff char_poly(A) = x^r. Also verifies A^r = 0 and throws
/// ConsistencyError if the two routes disagree.
bool is_nilpotent(const Matrix& a);

std::ostream& operator<<(std::ostream&, const Matrix&);

}  // namespace ffsync

#endif  // FFSYNC_MATRIX_HPP
