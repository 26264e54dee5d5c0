#include "voroto/kvfile.hpp"

#include <bit>
#include <cinttypes>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "on-disk format is little-endian; big-endian hosts need byte swaps");

namespace voroto {

void KvHeader::set(const std::string& key, const std::string& value) {
  for (auto& e : entries) {
    if (e.first == key) {
      e.second = value;
      return;
    }
  }
  entries.emplace_back(key, value);
}

void KvHeader::set(const std::string& key, std::int64_t value) {
  set(key, std::to_string(value));
}

void KvHeader::set(const std::string& key, std::uint64_t value) {
  set(key, std::to_string(value));
}

void KvHeader::set(const std::string& key, double value) {
  set(key, format_double(value));
}

bool KvHeader::has(const std::string& key) const {
  for (const auto& e : entries)
    if (e.first == key) return true;
  return false;
}

const std::string& KvHeader::get(const std::string& key) const {
  for (const auto& e : entries)
    if (e.first == key) return e.second;
  throw std::runtime_error("missing header key: " + key);
}

std::int64_t KvHeader::get_int(const std::string& key) const {
  return std::stoll(get(key));
}

std::uint64_t KvHeader::get_u64(const std::string& key) const {
  return std::stoull(get(key));
}

double KvHeader::get_double(const std::string& key) const {
  return std::stod(get(key));
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_header(std::ostream& out, const KvHeader& header) {
  out << "voroto-" << header.kind << ' ' << header.version << '\n';
  for (const auto& [key, value] : header.entries) out << key << '=' << value << '\n';
  out << "data\n";
}

KvHeader read_header(std::istream& in, const std::string& expected_kind) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty artifact file");
  const std::string magic = "voroto-" + expected_kind + " ";
  if (line.rfind(magic, 0) != 0)
    throw std::runtime_error("not a voroto-" + expected_kind + " file (got '" + line + "')");
  KvHeader header;
  header.kind = expected_kind;
  header.version = std::stoi(line.substr(magic.size()));
  while (std::getline(in, line)) {
    if (line == "data") return header;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("malformed header line: " + line);
    header.entries.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  throw std::runtime_error("header not terminated by 'data' line");
}

void write_doubles(std::ostream& out, const double* data, std::size_t count) {
  out.write(reinterpret_cast<const char*>(data),
            static_cast<std::streamsize>(count * sizeof(double)));
  if (!out) throw std::runtime_error("short write of binary payload");
}

void read_doubles(std::istream& in, double* data, std::size_t count) {
  in.read(reinterpret_cast<char*>(data),
          static_cast<std::streamsize>(count * sizeof(double)));
  if (static_cast<std::size_t>(in.gcount()) != count * sizeof(double))
    throw std::runtime_error("short read of binary payload");
}

}  // namespace voroto
