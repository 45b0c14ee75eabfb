#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "factmod/common.hpp"

namespace factmod {
namespace report {

// Locale-free %.17g rendering, enough digits to round-trip a double.
std::string format_double(double v);

// Decimal rendering for counts (may exceed 2^53, so JSON gets them as strings).
std::string decimal(const CountScalar& v);

// FNV-1a 64-bit digest of the output bytes; the manifest stores it so that
// reruns can be compared without keeping the data around.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

// Minimal CSV writer: '.' decimal separator comes from format_double, fields
// containing separators or quotes are quoted, header always emitted.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
std::string to_csv(const Table& t);

struct Manifest {
  std::string command;     // subcommand name
  std::string parameters;  // remaining argv, space-joined
  std::string version = kVersion;
  double wall_seconds = 0.0;  // timing lives here, outside the digest
  std::string digest;         // fnv1a-64 of the data bytes
  std::uint64_t bytes = 0;
};
std::string manifest_json(const Manifest& m);

// Writes data to path, or to stdout when path is empty.  When a path is
// given, a sibling "<path>.manifest.json" records the manifest.  Returns the
// data digest.
std::string emit(const std::string& data, const std::string& path,
                 Manifest manifest);

}  // namespace report
}  // namespace factmod
