#ifndef FFSYNC_NETWORK_HPP
#define FFSYNC_NETWORK_HPP

#include "ffsync/matrix.hpp"

#include <cstddef>
#include <vector>

namespace ffsync {

/// A linear network x(t+1) = A x(t) over F_p with n agents carrying
/// m-dimensional states. A is nm x nm and is addressed through m x m
/// coupling blocks A_ij.
class NetworkSystem {
public:
    NetworkSystem(PrimeField field, std::size_t agents, std::size_t agent_dim, Matrix a);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t agents() const noexcept { return n_; }
    std::size_t agent_dim() const noexcept { return m_; }
    std::size_t dim() const noexcept { return n_ * m_; }
    const Matrix& matrix() const noexcept { return a_; }

    /// Coupling block A_ij (zero-indexed), an m x m matrix.
    Matrix coupling_block(std::size_t i, std::size_t j) const;

private:
    PrimeField field_;
    std::size_t n_;
    std::size_t m_;
    Matrix a_;
};

/// A_i = sum_j A_ij for i = 1..n; the m x m matrix governing agent i's
/// response to a fully synchronized state.
std::vector<Matrix> block_row_sums(const NetworkSystem& sys);

/// True iff all block row sums are equal, which characterizes invariance of
/// the synchronization set {1_n (x) a} under A.
bool sync_set_is_invariant(const NetworkSystem& sys);

/// Canonical basis of W1 = { a in F_p^m : (A_i - A_1) A_1^t a = 0 for
/// i = 2..n, t = 0..m-1 }, computed as the kernel of the stacked constraint
/// matrix. For n = 1 the stack is empty and W1 is all of F_p^m.
SubspaceBasis compute_w1(const NetworkSystem& sys);

/// Equivalent power form: { a : A_1^t a = A_i^t a, i = 2..n, t = 1..m }.
/// Always equal to compute_w1 as a subspace.
SubspaceBasis compute_w1_alt(const NetworkSystem& sys);

/// The d x d matrix Q with A_1 * B = B * Q for a basis matrix B (m x d) of an
/// A_1-invariant subspace. solve_right failure here means the claimed
/// invariance is false and surfaces as ConsistencyError.
Matrix compute_q(const NetworkSystem& sys, const Matrix& w1_basis_columns);
Matrix compute_q(const NetworkSystem& sys, const SubspaceBasis& w1);

/// Synchronization test for the invariant-sync-set case:
/// P_A(x) = x^(nm-m) * P_{A_1}(x). Throws std::invalid_argument when the
/// synchronization set is not invariant (the criterion does not apply).
bool check_sync_invariant_case(const NetworkSystem& sys);

/// General synchronization test: P_A(x) = x^(nm-d) * P_Q(x) with d = dim W1
/// and Q the restriction of A_1 to W1.
bool check_sync_general(const NetworkSystem& sys);

/// Consensus test: synchronization plus a minimal polynomial of Q of
/// fixed-point form (see fixed_point_minimal_poly_form).
bool check_consensus(const NetworkSystem& sys);

/// Scalar-agent specialization (m = 1, all row sums equal to some a):
/// P_A(x) = x^(n-1) (x - a). Throws std::invalid_argument when m != 1 or the
/// row sums are not constant.
bool check_sync_scalar_case(const NetworkSystem& sys);

/// True iff mp = x^s (x - 1) for some s >= 0, or the degenerate
/// all-states-to-zero forms mp = x^s and mp = 1. These are exactly the
/// minimal polynomials for which every trajectory of w(t+1) = M w(t)
/// terminates at a constant vector.
bool fixed_point_minimal_poly_form(const Polynomial& mp);

struct BlockReduction {
    Matrix t;        // invertible nm x nm; first d columns are 1_n (x) (W1 basis)
    Matrix reduced;  // t^-1 A t, block upper triangular by construction
    std::size_t d;
};

/// Conjugates A by a basis extension of 1_n (x) W1. The lower-left
/// (nm-d) x d block of the result must vanish (W = 1_n (x) W1 is A-invariant);
/// a nonzero block throws ConsistencyError.
BlockReduction block_reduction(const NetworkSystem& sys);

/// Independent route to the synchronization verdict: nilpotency of the
/// complement block of the reduced matrix. Must equal check_sync_general on
/// every input.
bool reduction_crosscheck(const NetworkSystem& sys);

}  // namespace ffsync

#endif  // FFSYNC_NETWORK_HPP
