#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace voroto {

/// Self-describing artifact header. Every file the pipeline writes starts
/// with a text block
///
///   voroto-<kind> <version>
///   key=value
///   ...
///   data
///
/// followed (optionally) by a raw little-endian binary payload, so a run can
/// be reproduced from its outputs alone.
struct KvHeader {
  std::string kind;
  int version = 1;
  std::vector<std::pair<std::string, std::string>> entries;

  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, std::int64_t value);
  void set(const std::string& key, std::uint64_t value);
  void set(const std::string& key, int value) { set(key, static_cast<std::int64_t>(value)); }
  void set(const std::string& key, double value);

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  double get_double(const std::string& key) const;
};

void write_header(std::ostream& out, const KvHeader& header);

/// Parses a header and checks the kind. Throws std::runtime_error on any
/// mismatch or malformed line.
KvHeader read_header(std::istream& in, const std::string& expected_kind);

/// Raw 64-bit float payload, little-endian on disk.
void write_doubles(std::ostream& out, const double* data, std::size_t count);
void read_doubles(std::istream& in, double* data, std::size_t count);

/// Round-trippable decimal formatting (shortest form is not needed; 17
/// significant digits always reconstruct the same double).
std::string format_double(double value);

}  // namespace voroto
