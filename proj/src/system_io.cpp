#include "ffsync/system_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace ffsync {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message) {}

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

// Strips comments (from '#') and surrounding whitespace; drops empty lines.
std::vector<Line> significant_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = raw.find_last_not_of(" \t\r");
        lines.push_back({number, raw.substr(begin, end - begin + 1)});
    }
    return lines;
}

std::uint64_t parse_uint(const std::string& source, std::size_t line, const std::string& token) {
    if (!token.empty() && token.front() == '-') {
        throw ParseError(source, line, "negative entries are not allowed: '" + token + "'");
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(source, line, "expected a nonnegative integer, got '" + token + "'");
    }
    return value;
}

std::vector<std::uint64_t> parse_row(const std::string& source, const Line& line) {
    std::vector<std::uint64_t> row;
    std::istringstream ss(line.text);
    std::string token;
    while (ss >> token) row.push_back(parse_uint(source, line.number, token));
    return row;
}

}  // namespace

SystemFile parse_system(std::istream& in, const std::string& source_name) {
    const std::vector<Line> lines = significant_lines(in);
    std::size_t at = 0;

    std::optional<std::uint64_t> p_value, n_value, m_value;
    while (at < lines.size()) {
        const Line& line = lines[at];
        const auto eq = line.text.find('=');
        if (eq == std::string::npos) {
            throw ParseError(source_name, line.number, "expected 'key=value', got '" + line.text + "'");
        }
        const std::string key = line.text.substr(0, eq);
        const std::string rest = line.text.substr(eq + 1);
        if (key == "A") break;
        if (key != "p" && key != "n" && key != "m") {
            throw ParseError(source_name, line.number, "unknown header key '" + key + "'");
        }
        auto& slot = key == "p" ? p_value : key == "n" ? n_value : m_value;
        if (slot) throw ParseError(source_name, line.number, "duplicate header key '" + key + "'");
        slot = parse_uint(source_name, line.number, rest);
        ++at;
    }
    const std::size_t header_end_line = lines.empty() ? 1 : lines.back().number;
    if (!p_value) throw ParseError(source_name, header_end_line, "missing header 'p='");
    if (!n_value) throw ParseError(source_name, header_end_line, "missing header 'n='");
    if (!m_value) throw ParseError(source_name, header_end_line, "missing header 'm='");
    if (at == lines.size()) throw ParseError(source_name, header_end_line, "missing matrix block 'A='");

    const Line& a_line = lines[at];
    if (lines[at].text != "A=") {
        throw ParseError(source_name, a_line.number, "matrix block must start with a bare 'A=' line");
    }
    ++at;

    PrimeField field = [&] {
        try {
            return PrimeField(*p_value);
        } catch (const std::invalid_argument& e) {
            throw ParseError(source_name, lines.front().number, std::string("modulus not prime: ") + e.what());
        }
    }();
    if (*n_value == 0) throw ParseError(source_name, lines.front().number, "n must be at least 1");
    if (*m_value == 0) throw ParseError(source_name, lines.front().number, "m must be at least 1");
    const std::size_t n = static_cast<std::size_t>(*n_value);
    const std::size_t m = static_cast<std::size_t>(*m_value);
    const std::size_t nm = n * m;

    Matrix a(field, nm, nm);
    for (std::size_t i = 0; i < nm; ++i) {
        if (at == lines.size() || lines[at].text.find('=') != std::string::npos) {
            const std::size_t where = at < lines.size() ? lines[at].number : lines.back().number;
            throw ParseError(source_name, where,
                             "matrix block has " + std::to_string(i) + " rows, expected " +
                                 std::to_string(nm));
        }
        const std::vector<std::uint64_t> row = parse_row(source_name, lines[at]);
        if (row.size() != nm) {
            throw ParseError(source_name, lines[at].number,
                             "matrix row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(nm));
        }
        for (std::size_t j = 0; j < nm; ++j) a.set_value(i, j, row[j]);
        ++at;
    }

    SystemFile result{NetworkSystem(field, n, m, std::move(a)), std::nullopt};

    if (at < lines.size()) {
        const Line& b_line = lines[at];
        if (b_line.text != "basis=") {
            throw ParseError(source_name, b_line.number,
                             "unexpected content after the matrix block: '" + b_line.text + "'");
        }
        ++at;
        std::vector<std::vector<std::uint64_t>> rows;
        for (std::size_t i = 0; i < m; ++i) {
            if (at == lines.size()) {
                throw ParseError(source_name, lines.back().number,
                                 "basis block has " + std::to_string(i) + " rows, expected " +
                                     std::to_string(m));
            }
            rows.push_back(parse_row(source_name, lines[at]));
            if (rows.back().size() != rows.front().size()) {
                throw ParseError(source_name, lines[at].number, "basis rows have differing lengths");
            }
            ++at;
        }
        if (rows.front().empty()) {
            throw ParseError(source_name, b_line.number, "basis block has no columns");
        }
        if (at != lines.size()) {
            throw ParseError(source_name, lines[at].number,
                             "unexpected content after the basis block: '" + lines[at].text + "'");
        }
        result.w1_basis = Matrix::from_rows(field, rows);
    }
    return result;
}

SystemFile load_system(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    return parse_system(in, path.string());
}

std::vector<std::uint64_t> parse_state_vector(const std::string& comma_separated,
                                              const NetworkSystem& sys) {
    std::vector<std::uint64_t> values;
    std::string token;
    std::istringstream ss(comma_separated);
    while (std::getline(ss, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos) {
            throw std::invalid_argument("state vector: empty entry in '" + comma_separated + "'");
        }
        const auto end = token.find_last_not_of(" \t");
        token = token.substr(begin, end - begin + 1);
        if (!token.empty() && token.front() == '-') {
            throw std::invalid_argument("state vector: negative entry '" + token + "'");
        }
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("state vector: bad entry '" + token + "'");
        }
        values.push_back(sys.field().reduce(v));
    }
    if (values.size() != sys.dim()) {
        throw std::invalid_argument("state vector: got " + std::to_string(values.size()) +
                                    " entries, expected " + std::to_string(sys.dim()));
    }
    return values;
}

}  // namespace ffsync
