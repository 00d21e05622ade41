#include "ffsync/dynamics.hpp"

#include <atomic>
#include <future>
#include <string>
#include <thread>
#include <utility>

namespace ffsync {

std::optional<std::uint64_t> state_space_size(const NetworkSystem& sys) {
    const std::uint64_t p = sys.field().modulus();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < sys.dim(); ++i) {
        if (total > std::uint64_t(-1) / p) return std::nullopt;
        total *= p;
    }
    return total;
}

bool in_sync_set(const NetworkSystem& sys, const std::vector<std::uint64_t>& state) {
    if (state.size() != sys.dim()) {
        throw std::invalid_argument("in_sync_set: state length mismatch");
    }
    const std::size_t m = sys.agent_dim();
    for (std::size_t i = 1; i < sys.agents(); ++i) {
        for (std::size_t r = 0; r < m; ++r) {
            if (state[i * m + r] != state[r]) return false;
        }
    }
    return true;
}

namespace {

// Flat copy of the system for trajectory walking. The accumulator never
// overflows: state spaces admitted by the exhaustive oracles satisfy
// dim * (p-1)^2 < 2^64, and simulate() reduces per term.
struct Stepper {
    std::uint64_t p;
    std::size_t dim;
    std::size_t agents;
    std::size_t agent_dim;
    std::vector<std::uint64_t> a;  // row-major

    explicit Stepper(const NetworkSystem& sys)
        : p(sys.field().modulus()),
          dim(sys.dim()),
          agents(sys.agents()),
          agent_dim(sys.agent_dim()),
          a(sys.matrix().data()) {}

    void step(const std::vector<std::uint64_t>& x, std::vector<std::uint64_t>& y) const {
        for (std::size_t r = 0; r < dim; ++r) {
            const std::uint64_t* row = a.data() + r * dim;
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < dim; ++j) acc += row[j] * x[j];
            y[r] = acc % p;
        }
    }

    bool blockwise_equal(const std::vector<std::uint64_t>& x) const {
        for (std::size_t i = 1; i < agents; ++i) {
            for (std::size_t r = 0; r < agent_dim; ++r) {
                if (x[i * agent_dim + r] != x[r]) return false;
            }
        }
        return true;
    }
};

void decode_state(std::uint64_t index, std::uint64_t p, std::vector<std::uint64_t>& out) {
    for (auto& digit : out) {
        digit = index % p;
        index /= p;
    }
}

// Little-endian odometer increment over F_p digits.
void next_state(std::uint64_t p, std::vector<std::uint64_t>& digits) {
    for (auto& d : digits) {
        if (++d < p) return;
        d = 0;
    }
}

std::uint64_t require_enumerable(const NetworkSystem& sys, std::uint64_t state_limit) {
    const auto total = state_space_size(sys);
    const std::uint64_t p = sys.field().modulus();
    if (!total || *total > state_limit) {
        const std::string size_str =
            total ? std::to_string(*total) : "more than 2^64";
        throw std::invalid_argument("exhaustive oracle: state space " + std::to_string(p) + "^" +
                                    std::to_string(sys.dim()) + " = " + size_str +
                                    " exceeds the limit " + std::to_string(state_limit));
    }
    return *total;
}

// Runs `verdict` on every initial state in [begin, end); returns false as soon
// as any state fails. `verdict` gets scratch buffers to avoid reallocation.
template <typename PerState>
bool check_state_range(const Stepper& st, std::uint64_t begin, std::uint64_t end,
                       const std::atomic<bool>& stop, PerState&& verdict) {
    std::vector<std::uint64_t> x(st.dim), y(st.dim);
    decode_state(begin, st.p, x);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (stop.load(std::memory_order_relaxed)) return false;
        if (!verdict(x, y)) return false;
        next_state(st.p, x);
    }
    return true;
}

template <typename PerState>
bool check_all_states(const Stepper& st, std::uint64_t total, PerState&& verdict) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t min_chunk = 4096;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(hw, std::max<std::uint64_t>(1, total / min_chunk)));

    std::atomic<bool> stop{false};
    if (workers <= 1) {
        return check_state_range(st, 0, total, stop, verdict);
    }
    std::vector<std::future<bool>> parts;
    parts.reserve(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = chunk * w;
        const std::uint64_t end = std::min(total, begin + chunk);
        parts.push_back(std::async(std::launch::async, [&, begin, end] {
            const bool ok = check_state_range(st, begin, end, stop, verdict);
            if (!ok) stop.store(true, std::memory_order_relaxed);
            return ok;
        }));
    }
    bool all_ok = true;
    for (auto& f : parts) all_ok = f.get() && all_ok;
    return all_ok;
}

}  // namespace

Trajectory simulate(const NetworkSystem& sys, const std::vector<std::uint64_t>& x0,
                    std::size_t steps, std::uint64_t cycle_cap) {
    const std::size_t nm = sys.dim();
    const std::uint64_t p = sys.field().modulus();
    if (x0.size() != nm) throw std::invalid_argument("simulate: initial state length mismatch");
    for (const std::uint64_t v : x0) {
        if (v >= p) throw std::invalid_argument("simulate: initial state entries must lie in [0, p)");
    }

    Trajectory traj;
    traj.states.reserve(steps + 1);
    traj.states.push_back(x0);
    for (std::size_t t = 0; t < steps; ++t) {
        traj.states.push_back(sys.matrix().apply(traj.states.back()));
    }

    // Every trajectory is on its eventual cycle after nm steps, so walk to
    // x(nm), measure the return time, then locate the exact entry index.
    std::vector<std::uint64_t> entry = x0;
    std::vector<std::uint64_t> prefix_flat;  // x(0) .. x(nm), flattened
    prefix_flat.reserve((nm + 1) * nm);
    prefix_flat.insert(prefix_flat.end(), entry.begin(), entry.end());
    for (std::size_t t = 0; t < nm; ++t) {
        entry = sys.matrix().apply(entry);
        prefix_flat.insert(prefix_flat.end(), entry.begin(), entry.end());
    }

    std::uint64_t period = 0;
    std::vector<std::uint64_t> z = sys.matrix().apply(entry);
    for (std::uint64_t len = 1; len <= cycle_cap; ++len) {
        if (z == entry) {
            period = len;
            break;
        }
        z = sys.matrix().apply(z);
    }
    if (period == 0) return traj;  // cycle longer than the cap; leave fields unset

    const Matrix a_period = sys.matrix().pow(period);
    std::size_t cycle_start = nm;
    for (std::size_t t = 0; t <= nm; ++t) {
        const std::vector<std::uint64_t> xt(prefix_flat.begin() + static_cast<std::ptrdiff_t>(t * nm),
                                            prefix_flat.begin() + static_cast<std::ptrdiff_t>((t + 1) * nm));
        if (a_period.apply(xt) == xt) {
            cycle_start = t;
            break;
        }
    }
    traj.cycle_start = cycle_start;
    traj.cycle_length = period;

    // sync_time requires the whole cycle to be blockwise equal, then extends
    // backwards over the tail.
    std::vector<std::uint64_t> cyc(prefix_flat.begin() + static_cast<std::ptrdiff_t>(cycle_start * nm),
                                   prefix_flat.begin() + static_cast<std::ptrdiff_t>((cycle_start + 1) * nm));
    bool cycle_synced = true;
    for (std::uint64_t k = 0; k < period; ++k) {
        if (!in_sync_set(sys, cyc)) {
            cycle_synced = false;
            break;
        }
        cyc = sys.matrix().apply(cyc);
    }
    if (!cycle_synced) return traj;

    std::size_t first_persistent = 0;
    for (std::size_t t = 0; t < cycle_start; ++t) {
        const std::vector<std::uint64_t> xt(prefix_flat.begin() + static_cast<std::ptrdiff_t>(t * nm),
                                            prefix_flat.begin() + static_cast<std::ptrdiff_t>((t + 1) * nm));
        if (!in_sync_set(sys, xt)) first_persistent = t + 1;
    }
    traj.sync_time = first_persistent;
    return traj;
}

CycleSet cycle_set(const NetworkSystem& sys) {
    const Matrix a_nm = sys.matrix().pow(sys.dim());
    SubspaceBasis basis = image_basis(a_nm);
    const NilpotentSplit split = split_nilpotent_part(char_poly(sys.matrix()));
    const std::size_t expected = split.cofactor.degree().value();
    if (basis.dim() != expected) {
        throw ConsistencyError("cycle_set: dim Im(A^nm) = " + std::to_string(basis.dim()) +
                               " but deg f_A = " + std::to_string(expected));
    }
    return {std::move(basis), expected};
}

bool oracle_sync_algebraic(const NetworkSystem& sys) {
    const std::size_t n = sys.agents();
    const std::size_t m = sys.agent_dim();
    const PrimeField F = sys.field();

    // E encodes the linear conditions x_i - x_1 = 0 for i = 2..n; the cycle
    // set Im(A^nm) lies in the synchronization set iff E * A^nm = 0.
    Matrix e(F, (n - 1) * m, n * m);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t r = 0; r < m; ++r) {
            e.set_value(k * m + r, r, F.neg(1 % F.modulus()));
            e.set_value(k * m + r, (k + 1) * m + r, 1);
        }
    }
    return (e * sys.matrix().pow(sys.dim())).is_zero();
}

bool oracle_consensus_algebraic(const NetworkSystem& sys) {
    if (!oracle_sync_algebraic(sys)) return false;
    const Matrix a_nm = sys.matrix().pow(sys.dim());
    const Matrix a_minus_i = sys.matrix() - Matrix::identity(sys.field(), sys.dim());
    return image_basis(a_nm) == kernel_basis(a_minus_i);
}

bool oracle_sync_exhaustive(const NetworkSystem& sys, std::uint64_t state_limit) {
    const std::uint64_t total = require_enumerable(sys, state_limit);
    const Stepper st(sys);
    const std::size_t nm = st.dim;
    return check_all_states(st, total,
                            [&st, nm](std::vector<std::uint64_t>& x, std::vector<std::uint64_t>& y) {
                                std::vector<std::uint64_t> cur = x;
                                for (std::size_t t = 0; t < nm; ++t) {
                                    st.step(cur, y);
                                    cur.swap(y);
                                }
                                // cur is on its cycle; every cycle state must be
                                // blockwise equal.
                                const std::vector<std::uint64_t> anchor = cur;
                                do {
                                    if (!st.blockwise_equal(cur)) return false;
                                    st.step(cur, y);
                                    cur.swap(y);
                                } while (cur != anchor);
                                return true;
                            });
}

bool oracle_consensus_exhaustive(const NetworkSystem& sys, std::uint64_t state_limit) {
    const std::uint64_t total = require_enumerable(sys, state_limit);
    const Stepper st(sys);
    const std::size_t nm = st.dim;
    return check_all_states(st, total,
                            [&st, nm](std::vector<std::uint64_t>& x, std::vector<std::uint64_t>& y) {
                                std::vector<std::uint64_t> cur = x;
                                for (std::size_t t = 0; t < nm; ++t) {
                                    st.step(cur, y);
                                    cur.swap(y);
                                }
                                if (!st.blockwise_equal(cur)) return false;
                                st.step(cur, y);  // cycle length must be 1
                                return y == cur;
                            });
}

std::optional<std::uint64_t> eventual_period(const Matrix& m, std::uint64_t cap) {
    if (!m.is_square()) throw std::invalid_argument("eventual_period: matrix is not square");
    const Matrix base = m.pow(m.rows());
    Matrix cur = base;
    for (std::uint64_t len = 1; len <= cap; ++len) {
        cur = cur * m;
        if (cur == base) return len;
    }
    return std::nullopt;
}

}  // namespace ffsync
