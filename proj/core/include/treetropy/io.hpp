#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treetropy/collapse.hpp"
#include "treetropy/enumeration.hpp"
#include "treetropy/pattern.hpp"

namespace treetropy {

// Line format `n: a b c | d e`. Throws Error(ParseError) on malformed text
// and the validation errors on invalid patterns.
Pattern parse_pattern_text(std::string_view text);
std::string format_pattern_text(const Pattern& pattern);

// {"period":n,"components":[[...],...]}
Pattern parse_pattern_json(std::string_view text);
std::string format_pattern_json(const Pattern& pattern);

// JSON when the first non-blank character is '{', line format otherwise.
Pattern parse_pattern(std::string_view text);

// One pattern per non-empty line; lines starting with '#' are skipped.
std::vector<Pattern> parse_pattern_list(std::string_view text);

// {"factors":[...],"patterns":[{...},...]} with patterns from P_0 upwards;
// "valences" is added when known.
std::string format_certificate_json(const CollapseCertificate& certificate);

// The collapse chain from the input down to the trivial pattern, one line per
// level, followed by the factors.
std::string format_certificate_text(const CollapseCertificate& certificate);

std::string format_report_json(const EnumerationReport& report);
std::string format_zero_star_json(const std::vector<ZeroStarRow>& rows);

}  // namespace treetropy
