#pragma once

#include <cstdint>
#include <string>

#include "esymm/json_io.hpp"

namespace esymm {

/// Command cores shared by the command-line tool and the python module.
/// Each takes the raw input text (for the digest) plus flags and returns the
/// full machine-readable report.  Reports are deterministic for a fixed
/// (input, seed) except for the wall_time_ms field.

json run_check_lambda(const std::string& input_text, std::uint64_t seed);
json run_surface(const std::string& input_text, std::size_t verify_pairs, std::uint64_t seed);
json run_orbit(const std::string& input_text, std::size_t sample_count, std::uint64_t seed);
json run_classify_codim2(std::size_t n, std::size_t count, std::uint64_t seed,
                         const std::string& mode);
json run_star(const std::string& input_text, bool on_sigma, const std::vector<std::string>& checks,
              std::uint64_t seed);

/// Renders a report as plain text, one line per check.
std::string report_to_text(const json& report);

/// True when every check in the report passed.
bool report_passed(const json& report);

} // namespace esymm
