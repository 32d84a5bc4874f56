#pragma once

#include <leibniz/algebra.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace leibniz {

/// Malformed algebra file: bad JSON, out-of-range indices, duplicate
/// entries, or unparsable rationals.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File schema: {"dim": d, "basis": ["e1", ...]?, "brackets": [{"i","j","k","c"}...]}
/// with 1-based indices and c a rational string ("3", "-1/2"). Omitted
/// products are zero; duplicate (i,j,k) entries are rejected.
Algebra parse_algebra(const std::string& json_text);
Algebra load_algebra(const std::string& path);

/// Canonical serialization: brackets sorted by (i,j,k), zero entries
/// omitted, rationals as canonical strings. Parsing it back reproduces the
/// algebra exactly.
std::string emit_algebra(const Algebra& a);
void save_algebra(const Algebra& a, const std::string& path);

} // namespace leibniz
