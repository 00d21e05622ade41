#ifndef FFSYNC_TESTS_HELPERS_HPP
#define FFSYNC_TESTS_HELPERS_HPP

#include "ffsync/analyze.hpp"
#include "ffsync/dynamics.hpp"
#include "ffsync/matrix.hpp"
#include "ffsync/network.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace tests {

using ffsync::Matrix;
using ffsync::NetworkSystem;
using ffsync::Polynomial;
using ffsync::PrimeField;
using ffsync::SubspaceBasis;

inline Matrix make_matrix(std::uint64_t p, const std::vector<std::vector<std::uint64_t>>& rows) {
    return Matrix::from_rows(PrimeField(p), rows);
}

// ---- fixtures: the three worked systems shipped in data/ ----

inline NetworkSystem example1_system() {
    const PrimeField f5(5);
    return {f5, 3, 2,
            make_matrix(5, {{4, 3, 4, 1, 0, 4},
                            {3, 3, 2, 2, 4, 1},
                            {4, 0, 4, 2, 0, 1},
                            {1, 3, 2, 4, 1, 4},
                            {4, 3, 4, 0, 0, 0},
                            {1, 3, 2, 4, 1, 4}})};
}

inline NetworkSystem example2_system() {
    const PrimeField f3(3);
    return {f3, 3, 3,
            make_matrix(3, {{0, 0, 1, 0, 0, 1, 2, 0, 2},
                            {0, 2, 0, 1, 1, 0, 0, 2, 1},
                            {1, 0, 1, 2, 0, 2, 1, 0, 1},
                            {2, 2, 0, 1, 1, 0, 1, 2, 2},
                            {1, 0, 0, 0, 1, 0, 1, 2, 0},
                            {0, 2, 2, 0, 1, 0, 0, 2, 0},
                            {0, 1, 1, 0, 2, 0, 0, 1, 2},
                            {0, 1, 0, 0, 0, 0, 0, 0, 2},
                            {2, 1, 0, 1, 2, 2, 2, 1, 1}})};
}

inline NetworkSystem example3_system() {
    const PrimeField f5(5);
    return {f5, 3, 3,
            make_matrix(5, {{1, 2, 0, 4, 3, 0, 3, 2, 0},
                            {3, 1, 3, 4, 4, 0, 3, 1, 2},
                            {0, 0, 1, 1, 0, 4, 4, 0, 1},
                            {3, 3, 0, 2, 2, 0, 0, 4, 0},
                            {2, 0, 3, 0, 0, 0, 2, 0, 2},
                            {4, 4, 1, 3, 1, 0, 2, 4, 0},
                            {2, 0, 0, 3, 0, 0, 2, 1, 0},
                            {4, 0, 0, 1, 0, 0, 4, 0, 0},
                            {2, 2, 1, 4, 3, 0, 1, 2, 0}})};
}

inline Matrix example2_file_basis() { return make_matrix(3, {{1, 1}, {2, 0}, {0, 1}}); }
inline Matrix example3_file_basis() { return make_matrix(5, {{4, 0}, {1, 0}, {0, 1}}); }

/// The swap network over F_2: (0,1) <-> (1,0), never synchronizes.
inline NetworkSystem swap_system() {
    return {PrimeField(2), 2, 1, make_matrix(2, {{0, 1}, {1, 0}})};
}

inline NetworkSystem identity_system(std::uint64_t p, std::size_t n, std::size_t m) {
    const PrimeField f(p);
    return {f, n, m, Matrix::identity(f, n * m)};
}

inline NetworkSystem zero_system(std::uint64_t p, std::size_t n, std::size_t m) {
    const PrimeField f(p);
    return {f, n, m, Matrix(f, n * m, n * m)};
}

// ---- randomized generators (all deterministic under the caller's rng) ----

inline Matrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.set_value(i, j, dist(rng));
    }
    return m;
}

inline Matrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_matrix(f, n, n, rng);
        if (ffsync::rank(m) == n) return m;
    }
}

inline Matrix random_nilpotent(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
    Matrix upper(f, n, n);
    std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) upper.set_value(i, j, dist(rng));
    }
    const Matrix s = random_invertible(f, n, rng);
    return s * upper * ffsync::inverse(s);
}

/// Random conjugate of diag(I_k, 0); minimal polynomial is one of
/// x - 1, x, x(x - 1), all of fixed-point form.
inline Matrix random_projection_like(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> kd(0, n);
    const std::size_t k = kd(rng);
    Matrix d(f, n, n);
    for (std::size_t i = 0; i < k; ++i) d.set_value(i, i, 1);
    const Matrix s = random_invertible(f, n, rng);
    return s * d * ffsync::inverse(s);
}

inline NetworkSystem random_system(const PrimeField& f, std::size_t n, std::size_t m,
                                   std::mt19937_64& rng) {
    return {f, n, m, random_matrix(f, n * m, n * m, rng)};
}

/// All block row sums equal a common random target; the synchronization set
/// is invariant by construction, the verdict is whatever it is.
inline NetworkSystem random_equal_row_sum_system(const PrimeField& f, std::size_t n,
                                                 std::size_t m, std::mt19937_64& rng) {
    const Matrix target = random_matrix(f, m, m, rng);
    Matrix a(f, n * m, n * m);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix acc(f, m, m);
        for (std::size_t j = 1; j < n; ++j) {
            const Matrix blk = random_matrix(f, m, m, rng);
            a.set_block(i * m, j * m, blk);
            acc = acc + blk;
        }
        a.set_block(i * m, 0, target - acc);
    }
    return {f, n, m, a};
}

/// Built in difference coordinates z_1 = x_1, z_i = x_i - x_1: an invariant
/// synchronization set with a nilpotent difference block, so the system
/// synchronizes by construction. With consensus_row_sum the common row sum is
/// projection-like and the system reaches consensus.
inline NetworkSystem random_invariant_sync_system(const PrimeField& f, std::size_t n,
                                                  std::size_t m, std::mt19937_64& rng,
                                                  bool consensus_row_sum) {
    const std::size_t nm = n * m;
    const std::size_t rest = (n - 1) * m;
    const Matrix a1 = consensus_row_sum ? random_projection_like(f, m, rng)
                                        : random_matrix(f, m, m, rng);
    Matrix mz(f, nm, nm);
    mz.set_block(0, 0, a1);
    mz.set_block(0, m, random_matrix(f, m, rest, rng));
    if (rest > 0) mz.set_block(m, m, random_nilpotent(f, rest, rng));

    Matrix tz = Matrix::identity(f, nm);
    Matrix tz_inv = Matrix::identity(f, nm);
    const std::uint64_t one = 1 % f.modulus();
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t r = 0; r < m; ++r) {
            tz.set_value(i * m + r, r, f.neg(one));
            tz_inv.set_value(i * m + r, r, one);
        }
    }
    return {f, n, m, tz_inv * mz * tz};
}

/// Differing row sums that still share a nontrivial agreement subspace:
/// A_1 stabilizes span(B) and every A_i - A_1 annihilates it, so the
/// computed subspace contains span(B). The verdict is not forced.
inline NetworkSystem random_shared_subspace_system(const PrimeField& f, std::size_t n,
                                                   std::size_t m, std::mt19937_64& rng) {
    const Matrix c = random_invertible(f, m, rng);
    std::uniform_int_distribution<std::size_t> dd(1, m);
    const std::size_t d = dd(rng);
    const Matrix b = c.block(0, 0, m, d);

    Matrix upper(f, m, m);
    upper.set_block(0, 0, random_matrix(f, d, m, rng));
    if (m > d) upper.set_block(d, d, random_matrix(f, m - d, m - d, rng));
    const Matrix a1 = c * upper * ffsync::inverse(c);

    const Matrix left_null = ffsync::kernel_basis(b.transpose()).basis_matrix().transpose();
    std::vector<Matrix> sums(n, a1);
    for (std::size_t i = 1; i < n; ++i) {
        sums[i] = a1 + random_matrix(f, m, left_null.rows(), rng) * left_null;
    }

    Matrix a(f, n * m, n * m);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix acc(f, m, m);
        for (std::size_t j = 1; j < n; ++j) {
            const Matrix blk = random_matrix(f, m, m, rng);
            a.set_block(i * m, j * m, blk);
            acc = acc + blk;
        }
        a.set_block(i * m, 0, sums[i] - acc);
    }
    return {f, n, m, a};
}

/// Mixture used by the randomized agreement suites.
inline NetworkSystem random_mixed_system(const PrimeField& f, std::size_t n, std::size_t m,
                                         std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 99);
    const int roll = pick(rng);
    if (roll < 50) return random_system(f, n, m, rng);
    if (roll < 65) return random_invariant_sync_system(f, n, m, rng, false);
    if (roll < 75) return random_invariant_sync_system(f, n, m, rng, true);
    return random_shared_subspace_system(f, n, m, rng);
}

inline std::vector<std::uint64_t> random_state(const PrimeField& f, std::size_t dim,
                                               std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
    std::vector<std::uint64_t> x(dim);
    for (auto& v : x) v = dist(rng);
    return x;
}

// ---- independent oracles (never call the code paths they check) ----

/// Determinant of a polynomial matrix by Laplace expansion along the first row.
inline Polynomial det_poly(const PrimeField& f,
                           const std::vector<std::vector<Polynomial>>& grid) {
    const std::size_t n = grid.size();
    if (n == 0) return Polynomial::one(f);
    if (n == 1) return grid[0][0];
    Polynomial det(f);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) row.push_back(grid[i][k]);
            }
            minor.push_back(std::move(row));
        }
        const Polynomial term = grid[0][j] * det_poly(f, minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Characteristic polynomial through cofactor expansion of det(xI - A).
inline Polynomial char_poly_cofactor(const Matrix& a) {
    const PrimeField f = a.field();
    const std::size_t n = a.rows();
    std::vector<std::vector<Polynomial>> grid;
    grid.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Polynomial> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                row.emplace_back(f, std::vector<std::uint64_t>{f.neg(a.value(i, j)), 1});
            } else {
                row.emplace_back(f, std::vector<std::uint64_t>{f.neg(a.value(i, j))});
            }
        }
        grid.push_back(std::move(row));
    }
    return det_poly(f, grid);
}

/// Horner evaluation of a polynomial at a square matrix.
inline Matrix eval_poly_at_matrix(const Polynomial& p, const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix acc(a.field(), n, n);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * a;
        const std::uint64_t c = p.coeff_value(i);
        for (std::size_t k = 0; k < n; ++k) {
            acc.set_value(k, k, a.field().add(acc.value(k, k), c));
        }
    }
    return acc;
}

}  // namespace tests

#endif  // FFSYNC_TESTS_HELPERS_HPP
