#ifndef FFSYNC_SYSTEM_IO_HPP
#define FFSYNC_SYSTEM_IO_HPP

#include "ffsync/network.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffsync {

/// Input error with source location; what() is "<source>:<line>: <message>".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& message);
};

/// A parsed system file: header (p=, n=, m=), the nm x nm matrix block A=,
/// and an optional basis= block of m rows giving an explicit W1 basis.
struct SystemFile {
    NetworkSystem system;
    std::optional<Matrix> w1_basis;  // m x d, columns are basis vectors
};

SystemFile parse_system(std::istream& in, const std::string& source_name = "<input>");
SystemFile load_system(const std::filesystem::path& path);

/// Parses a comma-separated initial state of length nm; entries are reduced
/// mod p, negative entries are rejected.
std::vector<std::uint64_t> parse_state_vector(const std::string& comma_separated,
                                              const NetworkSystem& sys);

}  // namespace ffsync

#endif  // FFSYNC_SYSTEM_IO_HPP
