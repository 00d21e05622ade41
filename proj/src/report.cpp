#include "ffsync/report.hpp"

#include <ostream>

namespace ffsync {

namespace {

using nlohmann::ordered_json;

ordered_json poly_coeffs(const Polynomial& f) {
    ordered_json arr = ordered_json::array();
    for (const std::uint64_t c : f.coeffs()) arr.push_back(c);
    return arr;
}

ordered_json matrix_rows(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.value(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json matrix_columns(const Matrix& m) {
    ordered_json cols = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        ordered_json col = ordered_json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m.value(i, j));
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

ordered_json report_json(const AnalysisReport& report) {
    const SyncStructure& st = report.structure;

    ordered_json sums = ordered_json::array();
    for (const Matrix& s : st.row_sums) sums.push_back(matrix_rows(s));

    ordered_json j;
    j["p"] = report.p;
    j["n"] = report.agents;
    j["m"] = report.agent_dim;
    j["s_invariant"] = st.s_invariant;
    j["block_row_sums"] = std::move(sums);
    j["w1"] = ordered_json{{"dim", st.d}, {"basis", matrix_columns(st.w1.basis_matrix())}};
    j["q"] = ordered_json{{"basis_source", st.q_basis_supplied ? "file" : "canonical"},
                          {"basis", matrix_columns(st.q_basis)},
                          {"matrix", matrix_rows(st.q)}};
    j["char_poly_a"] = poly_coeffs(st.char_poly_a);
    j["char_poly_q"] = poly_coeffs(st.char_poly_q);
    j["min_poly_q"] = poly_coeffs(st.min_poly_q);
    j["verdicts"] = ordered_json{
        {"synchronizes", report.synchronizes},
        {"consensus", report.consensus},
        {"theorem_used", report.rule_used == SyncRule::invariant_case ? "thm1" : "thm2"}};
    ordered_json checks;
    checks["reduction_nilpotent"] = report.reduction_nilpotent;
    if (report.oracle_agrees) {
        checks["oracle_agrees"] = *report.oracle_agrees;
    } else {
        checks["oracle_agrees"] = nullptr;
    }
    checks["lemma1_dim_ok"] = report.lemma1_dim_ok;
    j["cross_checks"] = std::move(checks);
    if (report.terminal) {
        ordered_json t;
        t["governing"] = report.terminal->governing;
        if (report.terminal->cycle_length) {
            t["cycle_length"] = *report.terminal->cycle_length;
        } else {
            t["cycle_length"] = nullptr;
        }
        j["terminal"] = std::move(t);
    } else {
        j["terminal"] = nullptr;
    }
    return j;
}

bool oracle_run_agrees(const OracleRun& run) {
    if (run.algebraic_sync != run.analysis_sync) return false;
    if (run.algebraic_consensus != run.analysis_consensus) return false;
    if (run.exhaustive_sync && *run.exhaustive_sync != run.algebraic_sync) return false;
    if (run.exhaustive_consensus && *run.exhaustive_consensus != run.algebraic_consensus) {
        return false;
    }
    return true;
}

ordered_json oracle_json(const NetworkSystem& sys, const OracleRun& run) {
    ordered_json j;
    j["p"] = sys.field().modulus();
    j["n"] = sys.agents();
    j["m"] = sys.agent_dim();
    if (run.state_space) {
        j["state_space"] = *run.state_space;
    } else {
        j["state_space"] = nullptr;
    }
    j["state_limit"] = run.state_limit;
    j["algebraic"] = ordered_json{{"synchronizes", run.algebraic_sync},
                                  {"consensus", run.algebraic_consensus}};
    if (run.exhaustive_sync) {
        j["exhaustive"] = ordered_json{{"synchronizes", *run.exhaustive_sync},
                                       {"consensus", *run.exhaustive_consensus}};
    } else {
        j["exhaustive"] = nullptr;
    }
    j["analysis"] = ordered_json{{"synchronizes", run.analysis_sync},
                                 {"consensus", run.analysis_consensus}};
    j["agree"] = oracle_run_agrees(run);
    return j;
}

void write_trajectory_table(std::ostream& out, const Trajectory& traj) {
    out << "# t";
    if (!traj.states.empty()) {
        for (std::size_t j = 0; j < traj.states.front().size(); ++j) out << " x" << j;
    }
    out << "\n";
    for (std::size_t t = 0; t < traj.states.size(); ++t) {
        out << t;
        for (const std::uint64_t v : traj.states[t]) out << " " << v;
        out << "\n";
    }
    if (traj.sync_time) {
        out << "# sync_time=" << *traj.sync_time << "\n";
    } else {
        out << "# sync_time=none\n";
    }
    if (traj.cycle_start && traj.cycle_length) {
        out << "# cycle_start=" << *traj.cycle_start << " cycle_length=" << *traj.cycle_length
            << "\n";
    } else {
        out << "# cycle_start=none cycle_length=none\n";
    }
}

}  // namespace ffsync
