#include "ffsync/network.hpp"

#include <string>
#include <utility>

namespace ffsync {

NetworkSystem::NetworkSystem(PrimeField field, std::size_t agents, std::size_t agent_dim, Matrix a)
    : field_(field), n_(agents), m_(agent_dim), a_(std::move(a)) {
    if (n_ < 1) throw std::invalid_argument("NetworkSystem: at least one agent required");
    if (m_ < 1) throw std::invalid_argument("NetworkSystem: agent dimension must be positive");
    if (!(a_.field() == field_)) throw std::invalid_argument("NetworkSystem: field mismatch");
    if (a_.rows() != n_ * m_ || a_.cols() != n_ * m_) {
        throw std::invalid_argument("NetworkSystem: matrix must be " + std::to_string(n_ * m_) +
                                    "x" + std::to_string(n_ * m_));
    }
}

Matrix NetworkSystem::coupling_block(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::invalid_argument("NetworkSystem: block index out of range");
    return a_.block(i * m_, j * m_, m_, m_);
}

std::vector<Matrix> block_row_sums(const NetworkSystem& sys) {
    const std::size_t n = sys.agents();
    std::vector<Matrix> sums;
    sums.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix s = sys.coupling_block(i, 0);
        for (std::size_t j = 1; j < n; ++j) s = s + sys.coupling_block(i, j);
        sums.push_back(std::move(s));
    }
    return sums;
}

bool sync_set_is_invariant(const NetworkSystem& sys) {
    const std::vector<Matrix> sums = block_row_sums(sys);
    for (std::size_t i = 1; i < sums.size(); ++i) {
        if (!(sums[i] == sums[0])) return false;
    }
    return true;
}

SubspaceBasis compute_w1(const NetworkSystem& sys) {
    const std::size_t n = sys.agents();
    const std::size_t m = sys.agent_dim();
    const std::vector<Matrix> sums = block_row_sums(sys);

    std::vector<Matrix> diffs;  // A_i - A_1 for i = 2..n
    diffs.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) diffs.push_back(sums[i] - sums[0]);

    std::vector<Matrix> blocks;
    Matrix a1_power = Matrix::identity(sys.field(), m);
    for (std::size_t t = 0; t < m; ++t) {
        for (const Matrix& d : diffs) blocks.push_back(d * a1_power);
        if (t + 1 < m) a1_power = sums[0] * a1_power;
    }
    const Matrix stacked = blocks.empty() ? Matrix(sys.field(), 0, m) : vcat(blocks);
    return kernel_basis(stacked);
}

SubspaceBasis compute_w1_alt(const NetworkSystem& sys) {
    const std::size_t n = sys.agents();
    const std::size_t m = sys.agent_dim();
    const std::vector<Matrix> sums = block_row_sums(sys);

    std::vector<Matrix> powers(n, Matrix::identity(sys.field(), m));
    std::vector<Matrix> blocks;
    for (std::size_t t = 1; t <= m; ++t) {
        for (std::size_t i = 0; i < n; ++i) powers[i] = sums[i] * powers[i];
        for (std::size_t i = 1; i < n; ++i) blocks.push_back(powers[i] - powers[0]);
    }
    const Matrix stacked = blocks.empty() ? Matrix(sys.field(), 0, m) : vcat(blocks);
    return kernel_basis(stacked);
}

Matrix compute_q(const NetworkSystem& sys, const Matrix& w1_basis_columns) {
    if (w1_basis_columns.rows() != sys.agent_dim()) {
        throw std::invalid_argument("compute_q: basis vectors must have the agent dimension");
    }
    const Matrix a1 = block_row_sums(sys)[0];
    return solve_right(w1_basis_columns, a1 * w1_basis_columns);
}

Matrix compute_q(const NetworkSystem& sys, const SubspaceBasis& w1) {
    return compute_q(sys, w1.basis_matrix());
}

namespace {

bool charpoly_sync_condition(const Polynomial& p_a, std::size_t full_dim, std::size_t sub_dim,
                             const Polynomial& p_sub) {
    return p_a == Polynomial::monomial(p_a.field(), full_dim - sub_dim) * p_sub;
}

}  // namespace

bool check_sync_invariant_case(const NetworkSystem& sys) {
    if (!sync_set_is_invariant(sys)) {
        throw std::invalid_argument(
            "check_sync_invariant_case: synchronization set is not invariant; use check_sync_general");
    }
    const Matrix a1 = block_row_sums(sys)[0];
    return charpoly_sync_condition(char_poly(sys.matrix()), sys.dim(), sys.agent_dim(),
                                   char_poly(a1));
}

bool check_sync_general(const NetworkSystem& sys) {
    const SubspaceBasis w1 = compute_w1(sys);
    const Matrix q = compute_q(sys, w1);
    return charpoly_sync_condition(char_poly(sys.matrix()), sys.dim(), w1.dim(), char_poly(q));
}

bool fixed_point_minimal_poly_form(const Polynomial& mp) {
    if (mp.is_zero()) throw std::invalid_argument("fixed_point_minimal_poly_form: zero polynomial");
    const NilpotentSplit split = split_nilpotent_part(mp);
    const PrimeField F = mp.field();
    const Polynomial x_minus_one(F, {F.neg(1 % F.modulus()), 1});
    return split.cofactor == Polynomial::one(F) || split.cofactor == x_minus_one;
}

bool check_consensus(const NetworkSystem& sys) {
    const SubspaceBasis w1 = compute_w1(sys);
    const Matrix q = compute_q(sys, w1);
    if (!charpoly_sync_condition(char_poly(sys.matrix()), sys.dim(), w1.dim(), char_poly(q))) {
        return false;
    }
    return fixed_point_minimal_poly_form(min_poly(q));
}

bool check_sync_scalar_case(const NetworkSystem& sys) {
    if (sys.agent_dim() != 1) {
        throw std::invalid_argument("check_sync_scalar_case: requires agent dimension 1");
    }
    const std::vector<Matrix> sums = block_row_sums(sys);
    const std::uint64_t alpha = sums[0].value(0, 0);
    for (const Matrix& s : sums) {
        if (s.value(0, 0) != alpha) {
            throw std::invalid_argument("check_sync_scalar_case: row sums are not constant");
        }
    }
    const PrimeField F = sys.field();
    const Polynomial target =
        Polynomial::monomial(F, sys.agents() - 1) * Polynomial(F, {F.neg(alpha), 1});
    return char_poly(sys.matrix()) == target;
}

BlockReduction block_reduction(const NetworkSystem& sys) {
    const std::size_t n = sys.agents();
    const std::size_t m = sys.agent_dim();
    const std::size_t nm = sys.dim();
    const SubspaceBasis w1 = compute_w1(sys);
    const std::size_t d = w1.dim();

    // Columns 1_n (x) a_k for the canonical W1 basis vectors a_k.
    Matrix w(sys.field(), nm, d);
    for (std::size_t i = 0; i < n; ++i) w.set_block(i * m, 0, w1.basis_matrix());

    Matrix t = extend_to_full_basis(w);
    Matrix reduced = solve_right(t, sys.matrix() * t);

    for (std::size_t i = d; i < nm; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (reduced.value(i, j) != 0) {
                throw ConsistencyError(
                    "block_reduction: conjugated matrix is not block upper triangular; "
                    "the replicated subspace failed to be invariant");
            }
        }
    }
    return {std::move(t), std::move(reduced), d};
}

bool reduction_crosscheck(const NetworkSystem& sys) {
    const BlockReduction br = block_reduction(sys);
    const std::size_t nm = sys.dim();
    return is_nilpotent(br.reduced.block(br.d, br.d, nm - br.d, nm - br.d));
}

}  // namespace ffsync
