#include "ffsync/cli_app.hpp"

#include "ffsync/analyze.hpp"
#include "ffsync/report.hpp"
#include "ffsync/system_io.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>

namespace ffsync {

namespace {

constexpr int kExitSynchronizes = 0;
constexpr int kExitNoSync = 1;
constexpr int kExitInputError = 2;
constexpr int kExitConsistency = 3;

int run_analyze(const std::string& path, const std::string& basis_mode, std::ostream& out) {
    const SystemFile file = load_system(path);
    AnalyzeOptions opts;
    if (basis_mode == "paper") {
        if (!file.w1_basis) {
            throw std::invalid_argument("--basis paper requires a basis= block in the system file");
        }
        opts.w1_basis = file.w1_basis;
    }
    const AnalysisReport report = analyze(file.system, opts);
    out << report_json(report).dump(2) << "\n";
    return report.synchronizes ? kExitSynchronizes : kExitNoSync;
}

int run_simulate(const std::string& path, const std::string& x0_csv, std::size_t steps,
                 std::ostream& out) {
    const SystemFile file = load_system(path);
    const std::vector<std::uint64_t> x0 = parse_state_vector(x0_csv, file.system);
    const Trajectory traj = simulate(file.system, x0, steps);
    write_trajectory_table(out, traj);
    return kExitSynchronizes;
}

int run_oracle(const std::string& path, std::uint64_t state_limit, bool algebraic_only,
               std::ostream& out, std::ostream& err) {
    const SystemFile file = load_system(path);
    const NetworkSystem& sys = file.system;

    OracleRun run;
    run.state_limit = state_limit;
    run.state_space = state_space_size(sys);
    run.algebraic_sync = oracle_sync_algebraic(sys);
    run.algebraic_consensus = oracle_consensus_algebraic(sys);
    if (!algebraic_only) {
        // Propagates the explicit-bound refusal when the state space is too big.
        run.exhaustive_sync = oracle_sync_exhaustive(sys, state_limit);
        run.exhaustive_consensus = oracle_consensus_exhaustive(sys, state_limit);
    }
    const AnalysisReport report = analyze(sys);
    run.analysis_sync = report.synchronizes;
    run.analysis_consensus = report.consensus;

    out << oracle_json(sys, run).dump(2) << "\n";
    if (!oracle_run_agrees(run)) {
        err << "ffsync: oracle verdicts disagree with the analysis\n";
        return kExitConsistency;
    }
    return run.analysis_sync ? kExitSynchronizes : kExitNoSync;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact synchronization and consensus analysis of linear networks over prime fields"};
    app.require_subcommand(1);

    std::string analyze_path;
    std::string basis_mode = "canonical";
    CLI::App* cmd_analyze = app.add_subcommand("analyze", "Analyze a system file and emit a JSON report");
    cmd_analyze->add_option("file", analyze_path, "system file")->required();
    cmd_analyze
        ->add_option("--basis", basis_mode,
                     "W1 basis for the reported Q: the file's basis= block (paper) or the "
                     "canonical kernel basis (canonical)")
        ->check(CLI::IsMember({"paper", "canonical"}));

    std::string simulate_path;
    std::string x0_csv;
    std::size_t steps = 20;
    CLI::App* cmd_simulate =
        app.add_subcommand("simulate", "Iterate x(t+1) = A x(t) and print a plottable table");
    cmd_simulate->add_option("file", simulate_path, "system file")->required();
    cmd_simulate->add_option("--x0", x0_csv, "comma-separated initial state of length n*m")
        ->required();
    cmd_simulate->add_option("--steps", steps, "number of steps to record");

    std::string oracle_path;
    std::uint64_t state_limit = kDefaultStateLimit;
    bool algebraic_only = false;
    CLI::App* cmd_oracle = app.add_subcommand(
        "oracle", "Run the definitional oracles and compare them against the analysis");
    cmd_oracle->add_option("file", oracle_path, "system file")->required();
    cmd_oracle->add_option("--state-limit", state_limit,
                           "largest state space the exhaustive oracle will enumerate");
    cmd_oracle->add_flag("--algebraic-only", algebraic_only, "skip the exhaustive enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitSynchronizes;
    } catch (const CLI::ParseError& e) {
        err << "ffsync: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (cmd_analyze->parsed()) return run_analyze(analyze_path, basis_mode, out);
        if (cmd_simulate->parsed()) return run_simulate(simulate_path, x0_csv, steps, out);
        return run_oracle(oracle_path, state_limit, algebraic_only, out, err);
    } catch (const ConsistencyError& e) {
        err << "ffsync: internal consistency violation: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const ParseError& e) {
        err << "ffsync: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "ffsync: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        err << "ffsync: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace ffsync
