#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seiguard {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Seed space S = [0, 2^64); cum_end boundaries may equal 2^64 itself, hence u128.
inline constexpr u128 kSeedSpace = u128(1) << 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (bad message, bad password, out-of-space value).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Bad configuration, corpus or space definition.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Mapping-file corruption or I/O failure.
class StoreError : public Error {
 public:
  using Error::Error;
};

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int i = 40;
  while (v != 0) {
    buf[--i] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  return std::string(buf + i, buf + 40);
}

inline u128 parse_u128(std::string_view s) {
  if (s.empty()) throw Error("empty integer field");
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error("bad integer: " + std::string(s));
    u128 next = v * 10 + static_cast<unsigned>(c - '0');
    if (next < v) throw Error("integer overflow: " + std::string(s));
    v = next;
  }
  return v;
}

inline u64 parse_u64(std::string_view s) {
  u128 v = parse_u128(s);
  if (v > u128(~u64(0))) throw Error("value exceeds 64 bits: " + std::string(s));
  return static_cast<u64>(v);
}

inline u128 pow10_u128(unsigned exp) {
  if (exp > 38) throw Error("pow10 out of range");
  u128 v = 1;
  while (exp--) v *= 10;
  return v;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

// Zero-padded decimal rendering of `v` to exactly `digits` characters.
inline std::string pad_decimal(u128 v, unsigned digits) {
  std::string s = to_string(v);
  if (s.size() > digits) throw Error("value does not fit in " + std::to_string(digits) + " digits");
  return std::string(digits - s.size(), '0') + s;
}

// --- minimal UTF-8 handling (messages are compared in code point order,
//     which for valid UTF-8 equals byte order) ---

inline std::string utf8_encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

// Splits a UTF-8 string into per-code-point chunks. Throws on malformed input.
inline std::vector<std::string> utf8_chars(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    if (c >= 0xF0)
      len = 4;
    else if (c >= 0xE0)
      len = 3;
    else if (c >= 0xC0)
      len = 2;
    else if (c >= 0x80)
      throw ValidationError("malformed UTF-8");
    if (i + len > s.size()) throw ValidationError("truncated UTF-8");
    for (std::size_t k = 1; k < len; ++k)
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) throw ValidationError("malformed UTF-8");
    out.emplace_back(s.substr(i, len));
    i += len;
  }
  return out;
}

inline std::size_t utf8_length(std::string_view s) { return utf8_chars(s).size(); }

}  // namespace seiguard
