#include "mglab/text.hpp"

#include <charconv>
#include <system_error>

#include "mglab/errors.hpp"

namespace mglab {

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view token, std::string_view what) {
  double out = 0.0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw ValidationError("malformed " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return out;
}

std::uint64_t parse_u64(std::string_view token, std::string_view what) {
  std::uint64_t out = 0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw ValidationError("malformed " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return out;
}

std::int64_t parse_i64(std::string_view token, std::string_view what) {
  std::int64_t out = 0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw ValidationError("malformed " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

}  // namespace mglab
