#ifndef FFSYNC_REPORT_HPP
#define FFSYNC_REPORT_HPP

#include "ffsync/analyze.hpp"
#include "ffsync/dynamics.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>

namespace ffsync {

/// Structured report with stable key ordering; the same system file always
/// serializes to the same bytes.
nlohmann::ordered_json report_json(const AnalysisReport& report);

struct OracleRun {
    bool algebraic_sync = false;
    bool algebraic_consensus = false;
    std::optional<bool> exhaustive_sync;       // unset when skipped
    std::optional<bool> exhaustive_consensus;  // unset when skipped
    bool analysis_sync = false;
    bool analysis_consensus = false;
    std::optional<std::uint64_t> state_space;  // unset on overflow
    std::uint64_t state_limit = kDefaultStateLimit;
};

/// True iff all populated verdict pairs agree.
bool oracle_run_agrees(const OracleRun& run);

nlohmann::ordered_json oracle_json(const NetworkSystem& sys, const OracleRun& run);

/// Space-delimited table, one row per time step ("t x[0] ... x[nm-1]"),
/// followed by comment rows carrying sync_time and the detected cycle.
void write_trajectory_table(std::ostream& out, const Trajectory& traj);

}  // namespace ffsync

#endif  // FFSYNC_REPORT_HPP
