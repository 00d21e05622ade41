#include "ffsync/analyze.hpp"

#include <string>
#include <utility>

namespace ffsync {

namespace {

Matrix validated_w1_basis(const NetworkSystem& sys, const SubspaceBasis& w1,
                          const Matrix& supplied) {
    if (supplied.rows() != sys.agent_dim()) {
        throw std::invalid_argument("analyze: supplied basis vectors must have the agent dimension");
    }
    if (!(supplied.field() == sys.field())) {
        throw std::invalid_argument("analyze: supplied basis field mismatch");
    }
    if (rank(supplied) != supplied.cols()) {
        throw std::invalid_argument("analyze: supplied basis columns are not linearly independent");
    }
    if (!(SubspaceBasis::span_of_columns(supplied) == w1)) {
        throw std::invalid_argument("analyze: supplied basis does not span the computed subspace");
    }
    return supplied;
}

}  // namespace

AnalysisReport analyze(const NetworkSystem& sys, const AnalyzeOptions& opts) {
    const PrimeField F = sys.field();
    const std::size_t m = sys.agent_dim();
    const std::size_t nm = sys.dim();

    SyncStructure st{.row_sums = block_row_sums(sys),
                     .s_invariant = false,
                     .w1 = compute_w1(sys),
                     .d = 0,
                     .q_basis = Matrix(F, 0, 0),
                     .q_basis_supplied = false,
                     .q = Matrix(F, 0, 0),
                     .char_poly_a = Polynomial(F),
                     .char_poly_q = Polynomial(F),
                     .min_poly_q = Polynomial(F)};
    st.s_invariant = sync_set_is_invariant(sys);
    st.d = st.w1.dim();
    if (opts.w1_basis) {
        st.q_basis = validated_w1_basis(sys, st.w1, *opts.w1_basis);
        st.q_basis_supplied = true;
    } else {
        st.q_basis = st.w1.basis_matrix();
    }
    st.q = compute_q(sys, st.q_basis);
    if (!(st.row_sums[0] * st.q_basis == st.q_basis * st.q)) {
        throw ConsistencyError("analyze: restriction identity A_1 B = B Q failed");
    }
    st.char_poly_a = char_poly(sys.matrix());
    st.char_poly_q = char_poly(st.q);
    st.min_poly_q = min_poly(st.q);

    const bool sync_general =
        st.char_poly_a == Polynomial::monomial(F, nm - st.d) * st.char_poly_q;

    if (st.s_invariant) {
        if (st.d != m) {
            throw ConsistencyError("analyze: invariant synchronization set but dim W1 != m");
        }
        const bool sync_invariant =
            st.char_poly_a == Polynomial::monomial(F, nm - m) * char_poly(st.row_sums[0]);
        if (sync_invariant != sync_general) {
            throw ConsistencyError("analyze: specialized and general criteria disagree");
        }
    }

    const bool reduction = reduction_crosscheck(sys);
    if (reduction != sync_general) {
        throw ConsistencyError("analyze: reduction route disagrees with the characteristic-polynomial criterion");
    }

    const bool consensus = sync_general && fixed_point_minimal_poly_form(st.min_poly_q);

    cycle_set(sys);  // throws ConsistencyError when dim Im(A^nm) != deg f_A

    AnalysisReport report{.p = F.modulus(),
                          .agents = sys.agents(),
                          .agent_dim = m,
                          .structure = std::move(st),
                          .synchronizes = sync_general,
                          .consensus = consensus,
                          .rule_used = SyncRule::general_case,
                          .reduction_nilpotent = reduction,
                          .oracle_agrees = std::nullopt,
                          .lemma1_dim_ok = true,
                          .terminal = std::nullopt};
    report.rule_used =
        report.structure.s_invariant ? SyncRule::invariant_case : SyncRule::general_case;

    if (opts.run_algebraic_oracles) {
        const bool o_sync = oracle_sync_algebraic(sys);
        const bool o_consensus = oracle_consensus_algebraic(sys);
        if (o_sync != report.synchronizes || o_consensus != report.consensus) {
            throw ConsistencyError("analyze: definitional oracle disagrees with the verdicts");
        }
        report.oracle_agrees = true;
    }

    if (report.synchronizes) {
        const bool use_row_sum = report.structure.s_invariant;
        const Matrix& governing = use_row_sum ? report.structure.row_sums[0] : report.structure.q;
        report.terminal = TerminalSummary{use_row_sum ? "A1" : "Q",
                                          eventual_period(governing, opts.terminal_cycle_cap)};
    }
    return report;
}

}  // namespace ffsync
