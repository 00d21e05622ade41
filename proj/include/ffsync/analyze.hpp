#ifndef FFSYNC_ANALYZE_HPP
#define FFSYNC_ANALYZE_HPP

#include "ffsync/dynamics.hpp"
#include "ffsync/network.hpp"

#include <optional>
#include <string>

namespace ffsync {

/// Which synchronization rule produced the verdict. The specialized rule
/// applies only when the synchronization set is A-invariant; the general rule
/// always applies and both must agree on overlap.
enum class SyncRule { invariant_case, general_case };

struct SyncStructure {
    std::vector<Matrix> row_sums;  // A_1 .. A_n
    bool s_invariant = false;
    SubspaceBasis w1;       // canonical
    std::size_t d = 0;      // dim W1
    Matrix q_basis;         // m x d basis matrix Q was computed against
    bool q_basis_supplied = false;
    Matrix q;               // d x d
    Polynomial char_poly_a;
    Polynomial char_poly_q;
    Polynomial min_poly_q;
};

struct TerminalSummary {
    std::string governing;  // "A1" (invariant case) or "Q"
    std::optional<std::uint64_t> cycle_length;
};

struct AnalysisReport {
    std::uint64_t p = 0;
    std::size_t agents = 0;
    std::size_t agent_dim = 0;
    SyncStructure structure;
    bool synchronizes = false;
    bool consensus = false;
    SyncRule rule_used = SyncRule::general_case;
    bool reduction_nilpotent = false;
    std::optional<bool> oracle_agrees;
    bool lemma1_dim_ok = false;
    std::optional<TerminalSummary> terminal;  // present iff synchronizes
};

struct AnalyzeOptions {
    /// Optional explicit m x d basis of W1 for reporting Q in a chosen basis.
    /// Must span exactly W1 (std::invalid_argument otherwise).
    std::optional<Matrix> w1_basis;
    /// Run the definitional algebraic oracles as a cross-check. Disagreement
    /// throws ConsistencyError, so populated reports always carry
    /// oracle_agrees = true.
    bool run_algebraic_oracles = true;
    std::uint64_t terminal_cycle_cap = kDefaultCycleCap;
};

/// Full analysis pipeline. All internal cross-checks (specialized vs general
/// rule, reduction route, cycle-set dimension, definitional oracles) must
/// agree; any disagreement throws ConsistencyError.
AnalysisReport analyze(const NetworkSystem& sys, const AnalyzeOptions& opts = {});

}  // namespace ffsync

#endif  // FFSYNC_ANALYZE_HPP
