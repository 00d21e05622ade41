#ifndef FFSYNC_DYNAMICS_HPP
#define FFSYNC_DYNAMICS_HPP

#include "ffsync/network.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ffsync {

inline constexpr std::uint64_t kDefaultStateLimit = 2'000'000;
inline constexpr std::uint64_t kDefaultCycleCap = std::uint64_t{1} << 22;

/// p^(nm), or nullopt when the count overflows 64 bits.
std::optional<std::uint64_t> state_space_size(const NetworkSystem& sys);

/// True iff all agent blocks of the state vector are equal.
bool in_sync_set(const NetworkSystem& sys, const std::vector<std::uint64_t>& state);

struct Trajectory {
    /// x(0), x(1), ..., x(steps); exact iterates.
    std::vector<std::vector<std::uint64_t>> states;
    /// First t from which all states are blockwise equal, persisting through
    /// the detected eventual cycle. Unset when the terminal cycle leaves the
    /// synchronization set or was not detected within the cap.
    std::optional<std::size_t> sync_time;
    std::optional<std::size_t> cycle_start;
    std::optional<std::uint64_t> cycle_length;
};

/// Iterates x(t+1) = A x(t) exactly. x0 holds canonical residues of length
/// nm. Cycle detection walks the trajectory past the recorded window; cycles
/// longer than cycle_cap leave the cycle fields unset.
Trajectory simulate(const NetworkSystem& sys, const std::vector<std::uint64_t>& x0,
                    std::size_t steps, std::uint64_t cycle_cap = kDefaultCycleCap);

struct CycleSet {
    SubspaceBasis basis;  // canonical basis of Im(A^nm)
    std::size_t dim;
};

/// The set of states lying on cycles of the transition graph, realized as the
/// image of A^nm. Verifies dim = deg f_A where P_A = x^k f_A, f_A(0) != 0;
/// a mismatch throws ConsistencyError.
CycleSet cycle_set(const NetworkSystem& sys);

/// Definitional synchronization oracle: the cycle set lies inside the
/// synchronization set, tested as E * A^nm = 0 for the block-difference
/// operator E encoding x_i - x_1 = 0, i = 2..n.
bool oracle_sync_algebraic(const NetworkSystem& sys);

/// Definitional consensus oracle: synchronization plus cycle set = fixed-point
/// set ker(A - I), compared as canonical subspaces.
bool oracle_consensus_algebraic(const NetworkSystem& sys);

/// Literal check of the synchronization definition: every initial state is
/// simulated nm steps into the cycle set, then its full cycle is walked and
/// each cycle state must be blockwise equal. Throws std::invalid_argument
/// when p^(nm) exceeds state_limit.
bool oracle_sync_exhaustive(const NetworkSystem& sys,
                            std::uint64_t state_limit = kDefaultStateLimit);

/// Literal check of the consensus definition: every trajectory's eventual
/// cycle has length 1 and the fixed point is blockwise equal.
bool oracle_consensus_exhaustive(const NetworkSystem& sys,
                                 std::uint64_t state_limit = kDefaultStateLimit);

/// Eventual period of the power sequence M^t: the smallest L >= 1 with
/// M^(r+L) = M^r, r = dim(M). This is the lcm of all cycle lengths of
/// w -> Mw. nullopt when the period exceeds cap.
std::optional<std::uint64_t> eventual_period(const Matrix& m,
                                             std::uint64_t cap = kDefaultCycleCap);

}  // namespace ffsync

#endif  // FFSYNC_DYNAMICS_HPP
