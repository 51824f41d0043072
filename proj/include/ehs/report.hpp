#pragma once

// Serialization of verification reports. Every number is written as a
// decimal string and every complex value as a ["re", "im"] pair, so no
// precision is lost to binary floating point.

#include <string>
#include <vector>

#include "ehs/verify.hpp"
#include "json.hpp"

namespace ehs {

using Json = nlohmann::ordered_json;

Json complex_to_json(const BigComplex& z, int sig = 0);
/// Parses ["re", "im"] or a bare decimal string; throws ConfigError.
BigComplex complex_from_json(const Json& value);

/// Keys in schema order: identity, n, N, digits, seed, trials, max_rel_err,
/// status, resample_count, wall_time_ms.
Json report_to_json(const VerificationReport& report);
Json suite_to_json(const std::vector<VerificationReport>& sections, std::uint64_t seed, int digits);

std::string report_to_csv(const std::vector<VerificationReport>& reports);
/// 20 significant digits; JSON carries the full precision.
std::string report_to_human(const VerificationReport& report);

const char* status_name(Status status);

}  // namespace ehs
