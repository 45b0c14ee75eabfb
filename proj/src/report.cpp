#include "factmod/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace factmod {
namespace report {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string decimal(const CountScalar& v) { return v.get_str(); }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  return out;
}

std::string manifest_json(const Manifest& m) {
  nlohmann::json j;
  j["command"] = m.command;
  j["parameters"] = m.parameters;
  j["version"] = m.version;
  j["wall_seconds"] = m.wall_seconds;
  j["digest"] = m.digest;
  j["bytes"] = m.bytes;
  return j.dump(2) + "\n";
}

std::string emit(const std::string& data, const std::string& path,
                 Manifest manifest) {
  manifest.digest = hex64(fnv1a64(data));
  manifest.bytes = data.size();
  if (path.empty()) {
    std::cout << data;
    std::cout.flush();
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::bad_range, "cannot open output file " + path);
    out << data;
    out.close();
    std::ofstream mout(path + ".manifest.json", std::ios::binary);
    mout << manifest_json(manifest);
  }
  return manifest.digest;
}

}  // namespace report
}  // namespace factmod
