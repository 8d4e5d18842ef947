#ifndef MGLAB_TEXT_HPP
#define MGLAB_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mglab {

/// Shortest round-trip decimal form of a double. Every serialized double in
/// the project goes through this, so text output is bit-stable.
std::string format_double(double value);

/// Parse a double; throws ValidationError on malformed or trailing input.
double parse_double(std::string_view token, std::string_view what);

/// Parse a nonnegative integer; throws ValidationError on malformed input
/// or overflow.
std::uint64_t parse_u64(std::string_view token, std::string_view what);

/// Parse a signed integer; throws ValidationError on malformed input.
std::int64_t parse_i64(std::string_view token, std::string_view what);

/// Split on runs of spaces/tabs; never yields empty tokens.
std::vector<std::string_view> split_ws(std::string_view line);

/// Strip leading/trailing spaces, tabs, and carriage returns.
std::string_view trim(std::string_view s);

}  // namespace mglab

#endif  // MGLAB_TEXT_HPP
