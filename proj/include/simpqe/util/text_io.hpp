#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace simpqe {

/// Opens `path` for reading, throwing Error when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Calls fn(line_number, line) for each line of `in` (1-based, '\n' and a trailing '\r' stripped).
void for_each_line(std::istream& in, const std::function<void(std::size_t, std::string_view)>& fn);
void for_each_line(std::string_view text, const std::function<void(std::size_t, std::string_view)>& fn);

std::vector<std::string_view> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);
bool iequals_ascii(std::string_view a, std::string_view b);

/// Strict numeric parsing of the whole field; nullopt-like failure is reported via the bool.
bool parse_double(std::string_view s, double& out);
bool parse_uint(std::string_view s, std::uint64_t& out);
bool parse_int(std::string_view s, std::int64_t& out);

/// Shortest representation that parses back to the identical double.
std::string format_exact(double v);
/// printf-style "%.<digits>g".
std::string format_sig(double v, int digits);
/// printf-style "%.<decimals>f".
std::string format_fixed(double v, int decimals);

/// Parses `key=value` tokens of a header line after the magic and version words.
/// Returns false if any token lacks '='.
bool parse_header_fields(std::string_view line, std::size_t skip_words,
                         std::vector<std::pair<std::string, std::string>>& out);

}  // namespace simpqe
