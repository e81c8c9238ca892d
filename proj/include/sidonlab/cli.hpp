#pragma once

// Command-line front end. Exit codes: 0 ok, 1 mathematical violation,
// 2 usage or parse error, 3 enumeration cap exceeded.

#include <ostream>
#include <string>
#include <vector>

#include "sidonlab/boundcalc.hpp"

namespace sidonlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// BoundConfig from a JSON object with the same field names; unknown keys throw.
BoundConfig config_from_json(const std::string& text, BoundConfig base = {});
std::string config_to_json(const BoundConfig& cfg);

/// SIDONLAB_CAP if set, otherwise kDefaultEnumerationCap. Throws
/// std::invalid_argument on a malformed value.
std::uint64_t enumeration_cap_from_env();

/// printf %.17g
std::string format_double(double x);

}  // namespace sidonlab
