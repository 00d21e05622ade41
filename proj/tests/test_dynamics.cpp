#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include <random>

using namespace ffsync;
using tests::make_matrix;

TEST_CASE("simulation enters the documented 4-cycle of the second example") {
    const NetworkSystem sys = tests::example2_system();
    const std::vector<std::uint64_t> x0 = {1, 2, 2, 1, 0, 2, 0, 1, 2};
    const Trajectory traj = simulate(sys, x0, 20);

    REQUIRE(traj.states.size() == 21);
    REQUIRE(traj.cycle_start.has_value());
    REQUIRE(traj.cycle_length.has_value());
    CHECK(*traj.cycle_length == 4);
    CHECK(*traj.cycle_start <= sys.dim());

    const std::vector<std::vector<std::uint64_t>> cycle = {
        {2, 0, 2, 2, 0, 2, 2, 0, 2},
        {0, 1, 1, 0, 1, 1, 0, 1, 1},
        {1, 0, 1, 1, 0, 1, 1, 0, 1},
        {0, 2, 2, 0, 2, 2, 0, 2, 2}};
    const std::size_t c = *traj.cycle_start;
    CHECK(traj.states[c] == cycle[0]);
    CHECK(traj.states[c + 1] == cycle[1]);
    CHECK(traj.states[c + 2] == cycle[2]);
    CHECK(traj.states[c + 3] == cycle[3]);
    CHECK(traj.states[c + 4] == cycle[0]);

    REQUIRE(traj.sync_time.has_value());
    CHECK(*traj.sync_time <= sys.dim());
    for (std::size_t t = *traj.sync_time; t < traj.states.size(); ++t) {
        CHECK(in_sync_set(sys, traj.states[t]));
    }
}

TEST_CASE("simulation of the third example terminates at the documented fixed point") {
    const NetworkSystem sys = tests::example3_system();
    const Trajectory traj = simulate(sys, {3, 2, 4, 1, 4, 0, 2, 3, 1}, 15);
    const std::vector<std::uint64_t> fixed = {4, 1, 0, 4, 1, 0, 4, 1, 0};

    REQUIRE(traj.cycle_length.has_value());
    CHECK(*traj.cycle_length == 1);
    REQUIRE(traj.cycle_start.has_value());
    CHECK(traj.states[*traj.cycle_start] == fixed);
    CHECK(traj.states.back() == fixed);
}

TEST_CASE("simulation corner cases") {
    const NetworkSystem sys = tests::example1_system();
    const Trajectory zero = simulate(sys, std::vector<std::uint64_t>(6, 0), 5);
    for (const auto& s : zero.states) CHECK(s == std::vector<std::uint64_t>(6, 0));
    CHECK(zero.sync_time == 0);
    CHECK(zero.cycle_length == 1);

    // Initial state from the first example's documented response.
    const Trajectory t1 = simulate(sys, {2, 2, 4, 0, 1, 1}, 20);
    REQUIRE(t1.sync_time.has_value());
    CHECK(*t1.sync_time <= sys.dim());
    CHECK(t1.cycle_length == 3);

    // The swap system never synchronizes from (0, 1).
    const Trajectory ts = simulate(tests::swap_system(), {0, 1}, 6);
    CHECK(!ts.sync_time.has_value());
    CHECK(ts.cycle_length == 2);

    CHECK_THROWS_AS(simulate(sys, {1, 2, 3}, 5), std::invalid_argument);
    CHECK_THROWS_AS(simulate(sys, {9, 0, 0, 0, 0, 0}, 5), std::invalid_argument);
}

TEST_CASE("recorded states follow the update map") {
    std::mt19937_64 rng(30);
    const NetworkSystem sys = tests::example2_system();
    const Trajectory traj = simulate(sys, tests::random_state(sys.field(), sys.dim(), rng), 10);
    for (std::size_t t = 0; t + 1 < traj.states.size(); ++t) {
        CHECK(sys.matrix().apply(traj.states[t]) == traj.states[t + 1]);
    }
}

TEST_CASE("cycle set dimension and invertibility on it") {
    const CycleSet cs1 = cycle_set(tests::example1_system());
    CHECK(cs1.dim == 2);

    const NetworkSystem nil(PrimeField(2), 2, 1, make_matrix(2, {{0, 1}, {0, 0}}));
    CHECK(cycle_set(nil).dim == 0);

    const NetworkSystem inv = tests::identity_system(3, 3, 1);
    CHECK(cycle_set(inv).dim == 3);

    std::mt19937_64 rng(31);
    const struct { std::uint64_t p; std::size_t n, m; } fams[] = {{2, 2, 2}, {3, 2, 2}, {5, 2, 2}};
    for (const auto& fam : fams) {
        const PrimeField f(fam.p);
        for (int it = 0; it < 60; ++it) {
            const NetworkSystem sys = tests::random_mixed_system(f, fam.n, fam.m, rng);
            const CycleSet cs = cycle_set(sys);
            // A maps the cycle set bijectively onto itself.
            CHECK(rank(sys.matrix() * cs.basis.basis_matrix()) == cs.dim);
            CHECK(image_basis(sys.matrix() * cs.basis.basis_matrix()) == cs.basis);
        }
    }
}

TEST_CASE("algebraic synchronization oracle") {
    CHECK(oracle_sync_algebraic(tests::example1_system()));
    CHECK(oracle_sync_algebraic(tests::example2_system()));
    CHECK(oracle_sync_algebraic(tests::example3_system()));
    CHECK(!oracle_sync_algebraic(tests::identity_system(2, 2, 1)));
    CHECK(oracle_sync_algebraic(tests::zero_system(3, 2, 2)));
    CHECK(!oracle_sync_algebraic(tests::swap_system()));
}

TEST_CASE("algebraic consensus oracle") {
    CHECK(oracle_consensus_algebraic(tests::example3_system()));
    CHECK(!oracle_consensus_algebraic(tests::example2_system()));
    CHECK(!oracle_consensus_algebraic(tests::example1_system()));
    CHECK(oracle_consensus_algebraic(tests::zero_system(3, 2, 2)));
}

TEST_CASE("exhaustive oracles on the worked examples") {
    CHECK(oracle_sync_exhaustive(tests::example1_system()));       // 5^6 states
    CHECK(oracle_sync_exhaustive(tests::example2_system()));       // 3^9 states
    CHECK(!oracle_consensus_exhaustive(tests::example1_system()));
    CHECK(!oracle_consensus_exhaustive(tests::example2_system()));
    CHECK(!oracle_sync_exhaustive(tests::swap_system()));
    CHECK(oracle_sync_exhaustive(tests::zero_system(3, 2, 2)));
    CHECK(oracle_consensus_exhaustive(tests::zero_system(3, 2, 2)));
}

TEST_CASE("exhaustive consensus check of the third example at the default limit") {
    // 5^9 = 1953125 initial states, just inside the default limit.
    CHECK(oracle_consensus_exhaustive(tests::example3_system()));
    CHECK(oracle_sync_exhaustive(tests::example3_system()));
}

TEST_CASE("exhaustive oracles refuse oversized state spaces with the bound") {
    const NetworkSystem sys = tests::example1_system();  // 5^6 = 15625
    CHECK_THROWS_WITH_AS(oracle_sync_exhaustive(sys, 100),
                         doctest::Contains("15625"), std::invalid_argument);
    CHECK_THROWS_AS(oracle_consensus_exhaustive(sys, 15624), std::invalid_argument);
    CHECK(oracle_sync_exhaustive(sys, 15625));

    // A state space beyond 2^64 is refused for any limit.
    const PrimeField big(2147483647);
    const NetworkSystem huge(big, 3, 1, Matrix::identity(big, 3));
    CHECK_THROWS_AS(oracle_sync_exhaustive(huge, std::uint64_t(-1)), std::invalid_argument);
}

TEST_CASE("oracles and criteria agree on random families") {
    std::mt19937_64 rng(32);
    const struct { std::uint64_t p; std::size_t n, m; } fams[] = {
        {2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {3, 2, 2}, {3, 3, 1}, {5, 2, 2}};
    for (const auto& fam : fams) {
        const PrimeField f(fam.p);
        for (int it = 0; it < 60; ++it) {
            const NetworkSystem sys = tests::random_mixed_system(f, fam.n, fam.m, rng);
            const bool sync = check_sync_general(sys);
            CHECK(oracle_sync_algebraic(sys) == sync);
            CHECK(oracle_sync_exhaustive(sys) == sync);
            const bool consensus = check_consensus(sys);
            CHECK(oracle_consensus_algebraic(sys) == consensus);
            CHECK(oracle_consensus_exhaustive(sys) == consensus);
        }
    }
}

TEST_CASE("synchronized systems settle within nm steps") {
    std::mt19937_64 rng(33);
    const struct { std::uint64_t p; std::size_t n, m; } fams[] = {{2, 2, 2}, {3, 2, 2}, {5, 2, 2}};
    for (const auto& fam : fams) {
        const PrimeField f(fam.p);
        for (int it = 0; it < 30; ++it) {
            const NetworkSystem sys = tests::random_invariant_sync_system(f, fam.n, fam.m, rng, false);
            REQUIRE(check_sync_general(sys));
            const auto x0 = tests::random_state(f, sys.dim(), rng);
            const Trajectory traj = simulate(sys, x0, sys.dim());
            REQUIRE(traj.sync_time.has_value());
            CHECK(*traj.sync_time <= sys.dim());
        }
    }
}

TEST_CASE("eventual period of the terminal dynamics") {
    const PrimeField f5(5);
    CHECK(eventual_period(Matrix::identity(f5, 3)) == 1);
    CHECK(eventual_period(make_matrix(5, {{3, 3}, {4, 1}})) == 3);
    CHECK(eventual_period(make_matrix(3, {{1, 1}, {1, 2}})) == 4);
    CHECK(eventual_period(make_matrix(5, {{0, 1}, {0, 0}})) == 1);  // everything reaches 0
    CHECK(eventual_period(Matrix(f5, 0, 0)) == 1);
    // A 7-element orbit is not found with a cap of 3.
    const Matrix order7 = make_matrix(2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 1}});
    CHECK(!eventual_period(order7, 3).has_value());
    CHECK(eventual_period(order7, 10) == 7);
}
