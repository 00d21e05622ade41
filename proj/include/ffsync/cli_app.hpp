#ifndef FFSYNC_CLI_APP_HPP
#define FFSYNC_CLI_APP_HPP

#include <iosfwd>

namespace ffsync {

/// Command dispatch for the ffsync tool. Exit codes: 0 synchronizes (or plain
/// success for simulate), 1 does not synchronize, 2 input error, 3 internal
/// consistency violation.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffsync

#endif  // FFSYNC_CLI_APP_HPP
