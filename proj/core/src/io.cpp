#include "treetropy/io.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <sstream>

#include "treetropy/error.hpp"

namespace treetropy {

namespace {

using nlohmann::json;

json pattern_json(const Pattern& pattern) {
  return json{{"period", pattern.period()}, {"components", pattern.components()}};
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

int parse_int(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Pattern parse_pattern_text(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::ParseError, "missing ':' after the period");
  const int period = parse_int(trim(text.substr(0, colon)));
  if (period < 1) throw Error(ErrorKind::ParseError, "period must be positive");

  std::vector<Component> comps;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto bar = rest.find('|');
    std::istringstream group{std::string(rest.substr(0, bar))};
    Component c;
    std::string token;
    while (group >> token) c.push_back(parse_int(token));
    if (c.empty()) throw Error(ErrorKind::ParseError, "empty group in '" + std::string(text) + "'");
    comps.push_back(std::move(c));
    if (bar == std::string_view::npos) break;
    rest = rest.substr(bar + 1);
  }
  return Pattern::validate(period, std::move(comps));
}

std::string format_pattern_text(const Pattern& pattern) {
  std::ostringstream out;
  out << pattern.period() << ':';
  bool first = true;
  for (const auto& c : pattern.components()) {
    if (!first) out << " |";
    first = false;
    for (Point x : c) out << ' ' << x;
  }
  return out.str();
}

Pattern parse_pattern_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("period") || !doc.contains("components")) {
    throw Error(ErrorKind::ParseError, "expected an object with \"period\" and \"components\"");
  }
  try {
    return Pattern::validate(doc.at("period").get<int>(), doc.at("components").get<std::vector<Component>>());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string format_pattern_json(const Pattern& pattern) { return pattern_json(pattern).dump(); }

Pattern parse_pattern(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') return parse_pattern_json(text);
  return parse_pattern_text(text);
}

std::vector<Pattern> parse_pattern_list(std::string_view text) {
  std::vector<Pattern> result;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    result.push_back(parse_pattern(body));
  }
  return result;
}

std::string format_certificate_json(const CollapseCertificate& certificate) {
  json doc;
  doc["factors"] = certificate.factors;
  doc["patterns"] = json::array();
  for (const auto& p : certificate.patterns) doc["patterns"].push_back(pattern_json(p));
  if (certificate.valences) doc["valences"] = *certificate.valences;
  return doc.dump();
}

std::string format_certificate_text(const CollapseCertificate& certificate) {
  std::ostringstream out;
  const auto& patterns = certificate.patterns;
  for (std::size_t i = patterns.size(); i-- > 0;) {
    if (i + 1 != patterns.size()) out << "  -> ";
    out << format_pattern_text(patterns[i]);
    if (i + 1 != patterns.size()) out << "   (blocks of " << certificate.factors[i + 1] << ')';
    out << '\n';
  }
  out << "factors: (";
  for (std::size_t i = 0; i < certificate.factors.size(); ++i) out << (i ? ", " : "") << certificate.factors[i];
  out << ")\n";
  return out.str();
}

std::string format_report_json(const EnumerationReport& report) {
  json doc;
  doc["period"] = report.period;
  if (report.star_k) doc["star_k"] = *report.star_k;
  doc["labeled"] = report.labeled;
  doc["classes"] = report.classes;
  doc["zero_classes"] = report.zero_classes;
  doc["disagreements"] = json::array();
  for (const auto& p : report.disagreements) doc["disagreements"].push_back(format_pattern_text(p));
  return doc.dump();
}

std::string format_zero_star_json(const std::vector<ZeroStarRow>& rows) {
  json doc = json::array();
  for (const auto& row : rows) {
    json r{{"n", row.n},
           {"k", row.k},
           {"predicted", row.predicted},
           {"found", row.found},
           {"pattern_zero", row.pattern_zero},
           {"relaxed", row.relaxed},
           {"mode", to_string(row.mode)},
           {"examined", row.examined},
           {"constructor_ok", row.constructor_ok},
           {"deciders_agree", row.deciders_agree},
           {"consistent", row.consistent()}};
    if (row.witness) r["witness"] = format_pattern_text(*row.witness);
    doc.push_back(std::move(r));
  }
  return doc.dump();
}

}  // namespace treetropy
