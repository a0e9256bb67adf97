#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dirmet/matrix.hpp"
#include "dirmet/space.hpp"

namespace dirmet::io {

/// Malformed space document. The message names the line or the field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the space format:
///   {"labels": [string...], "base": [[number|"inf"...]...], "edges":
///    [[src, dst, length]...]}
/// "labels" may be omitted (defaults to indices) if "base" is present;
/// "base" may be omitted (defaults to the symmetrized shortest-path metric
/// of the edges).
FiniteDSpace parse_space(std::string_view text);

/// Serializes with an explicit dense base matrix.
std::string space_to_json(const FiniteDSpace& space);

FiniteDSpace load_space(const std::filesystem::path& path);
void save_text(const std::filesystem::path& path, std::string_view text);

/// One row per line, comma separated, "inf" for infinity.
std::string matrix_csv(const ExtendedDistanceMatrix& m);
/// 0/1 entries.
std::string reachability_csv(const ReachabilityPreorder& r);

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

}  // namespace dirmet::io
