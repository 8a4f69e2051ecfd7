#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "treetropy/treetropy.hpp"

namespace treetropy::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  double tolerance = 1e-9;
  std::string file;
  std::string pattern;
  std::string script;
  int n = 0;
  int k = 0;
  bool relaxed = false;
  std::vector<int> table;
  int star = 0;
  bool zero_only = false;
  bool count_only = false;
  int n_max = 10;
  int k_max = 5;
};

// A verdict the caller can branch on, carried out of a command as exit 1.
struct Negative {
  std::string message;
};

json pattern_json(const Pattern& p) { return json::parse(format_pattern_json(p)); }

std::string join_points(const std::vector<Point>& points) {
  std::ostringstream out;
  for (std::size_t i = 0; i < points.size(); ++i) out << (i ? " " : "") << points[i];
  return out.str();
}

std::string format_real(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(12) << value;
  return out.str();
}

Pattern read_pattern(const Options& o, std::istream& in) {
  std::string text;
  if (!o.file.empty()) {
    std::ifstream file(o.file);
    if (!file) throw Error(ErrorKind::ParseError, "cannot read file '" + o.file + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else if (o.pattern == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text = o.pattern;
  }
  const auto patterns = parse_pattern_list(text);
  if (patterns.size() != 1) {
    throw Error(ErrorKind::ParseError, "expected exactly one pattern, got " + std::to_string(patterns.size()));
  }
  return patterns.front();
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw Error(ErrorKind::ParseError, "format '" + o.format + "' is not available for this command");
}

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  require_format(o, {"text", "json"});
  const Pattern p = read_pattern(o, in);
  const Pattern canon = canonical_form(p);
  const StarClass star = star_class(p);
  if (o.format == "json") {
    out << json{{"pattern", pattern_json(p)},
                {"canonical", pattern_json(canon)},
                {"class", to_string(star)},
                {"endpoints", endpoints(p)}}
               .dump()
        << '\n';
  } else {
    out << "pattern: " << format_pattern_text(p) << '\n'
        << "canonical: " << format_pattern_text(canon) << '\n'
        << "class: " << to_string(star) << '\n'
        << "endpoints: " << join_points(endpoints(p)) << '\n';
  }
  return kOk;
}

int cmd_entropy(const Options& o, std::istream& in, std::ostream& out) {
  require_format(o, {"text", "json"});
  const Pattern p = read_pattern(o, in);
  const PathMatrix m = path_matrix(p);
  const SpectralOptions spectral{o.tolerance, SpectralOptions{}.max_iterations};
  const double rho = spectral_radius(m, spectral);
  const double h = rho > 1.0 ? std::log(rho) : 0.0;
  const auto witness = growth_witness(m);
  if (o.format == "json") {
    json doc{{"pattern", pattern_json(p)},
             {"paths", m.size()},
             {"spectral_radius", rho},
             {"entropy", h},
             {"zero", !witness}};
    if (witness) doc["witness"] = to_string(witness->vertex);
    out << doc.dump() << '\n';
  } else {
    out << "paths: " << m.size() << '\n'
        << "spectral radius: " << format_real(rho) << '\n'
        << "entropy: " << format_real(h) << '\n'
        << "zero (exact): " << (witness ? "no" : "yes") << '\n';
    if (witness) {
      out << "witness: " << to_string(witness->vertex) << " ->";
      for (const auto& s : witness->successors) out << ' ' << to_string(s);
      out << '\n';
    }
  }
  return kOk;
}

int cmd_zero(const Options& o, std::istream& in, std::ostream& out) {
  require_format(o, {"text", "json"});
  const Pattern p = read_pattern(o, in);
  const auto cert = is_strongly_collapsible(p);
  const auto witness = growth_witness(path_matrix(p));

  // Level at which collapsing got stuck, for the negative message.
  Pattern stuck = p;
  if (!cert) {
    while (const auto s = maximal_trivial_structure(stuck)) stuck = combinatorial_collapse(stuck, *s);
  }

  if (o.format == "json") {
    json doc{{"pattern", pattern_json(p)}, {"zero", cert.has_value()}, {"spectral_zero", !witness}};
    doc["certificate"] = cert ? json::parse(format_certificate_json(*cert)) : json(nullptr);
    if (!cert) doc["stuck_at"] = pattern_json(stuck);
    out << doc.dump() << '\n';
  } else if (cert) {
    out << "zero entropy\n" << format_certificate_text(*cert);
    out << "spectral check: " << (witness ? "positive (deciders disagree)" : "zero") << '\n';
  } else {
    out << "positive entropy: no trivial block structure";
    if (stuck != p) out << " in " << format_pattern_text(stuck);
    out << '\n';
    if (witness) {
      out << "spectral witness: " << to_string(witness->vertex) << " ->";
      for (const auto& s : witness->successors) out << ' ' << to_string(s);
      out << '\n';
    } else {
      out << "spectral check: zero (deciders disagree)\n";
    }
  }
  return cert ? kOk : kNegative;
}

std::string format_blocks(const BlockStructure& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    out << (i ? " " : "") << '{';
    for (std::size_t j = 0; j < s.blocks[i].size(); ++j) out << (j ? "," : "") << s.blocks[i][j];
    out << '}';
  }
  return out.str();
}

int cmd_collapse(const Options& o, std::istream& in, std::ostream& out) {
  require_format(o, {"text", "json"});
  const Pattern p = read_pattern(o, in);
  if (p.is_trivial()) {
    if (o.format == "json") {
      out << json{{"pattern", pattern_json(p)}, {"trivial", true}}.dump() << '\n';
    } else {
      out << "trivial pattern: nothing to collapse\n";
    }
    return kOk;
  }
  const auto divisors = trivial_block_divisors(p);
  const auto s = maximal_trivial_structure(p);
  const std::optional<Pattern> collapsed = s ? std::optional(combinatorial_collapse(p, *s)) : std::nullopt;
  if (o.format == "json") {
    json doc{{"pattern", pattern_json(p)}, {"trivial", false}, {"divisors", divisors}};
    if (s) {
      doc["blocks"] = s->blocks;
      doc["collapse"] = pattern_json(*collapsed);
    }
    out << doc.dump() << '\n';
  } else {
    out << "divisors: " << join_points(divisors) << '\n';
    if (s) {
      out << "maximal structure: p=" << s->block_count << " blocks " << format_blocks(*s) << '\n'
          << "collapse: " << format_pattern_text(*collapsed) << '\n';
    } else {
      out << "no trivial block structure\n";
    }
  }
  return s ? kOk : kNegative;
}

int cmd_explode(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto script = parse_explosion_script(o.script);
  Pattern current = base_pattern(script.base);
  json stages = json::array();
  auto emit = [&](const std::string& step, const Pattern& p) {
    if (o.format == "json") {
      stages.push_back(json{{"step", step}, {"pattern", pattern_json(p)}, {"class", to_string(star_class(p))}});
    } else {
      out << step << ": " << format_pattern_text(p) << "   " << to_string(star_class(p)) << '\n';
    }
  };
  emit("base=" + std::to_string(script.base), current);
  for (const auto& policy : script.steps) {
    current = double_pattern(current, policy);
    emit(to_string(policy), current);
  }
  if (o.format == "json") out << stages.dump() << '\n';
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (o.table.size() != 2) throw Error(ErrorKind::ParseError, "--table needs N and K");
  const int n_max = o.table[0];
  const int k_max = o.table[1];
  if (n_max < 1 || k_max < 3) throw Error(ErrorKind::BadRange, "--table needs N >= 1 and K >= 3");
  auto cell = [&](int n, int k) -> std::optional<bool> {
    if (o.relaxed) return zero_possible_relaxed(n, k);
    if (n < k) return std::nullopt;
    return zero_possible(n, k);
  };
  if (o.format == "json") {
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 3; k <= k_max; ++k) {
        const auto c = cell(n, k);
        rows.push_back(json{{"n", n}, {"k", k}, {"zero", c ? json(*c) : json(nullptr)}});
      }
    }
    out << rows.dump() << '\n';
    return kOk;
  }
  out << std::setw(4) << "n\\k";
  for (int k = 3; k <= k_max; ++k) out << std::setw(3) << k;
  out << '\n';
  for (int n = 1; n <= n_max; ++n) {
    out << std::setw(4) << n;
    for (int k = 3; k <= k_max; ++k) {
      const auto c = cell(n, k);
      out << std::setw(3) << (!c ? "-" : *c ? "0" : "+");
    }
    out << '\n';
  }
  out << "0 = zero entropy attainable, + = positive entropy forced, - = n < k\n";
  return kOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  if (!o.table.empty()) return cmd_table(o, out);
  require_format(o, {"text", "json"});
  Pattern p = [&] {
    try {
      return o.relaxed ? relaxed_star_zero_pattern(o.n, o.k) : star_zero_pattern(o.n, o.k);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotRepresentable) throw Negative{e.what()};
      throw;
    }
  }();
  const auto cert = is_strongly_collapsible(p);
  if (!cert) throw std::logic_error("constructed pattern is not strongly collapsible");
  std::string construction = "interval chain";
  if (o.relaxed) {
    construction = "relaxed";
  } else if (const auto c = o.k >= 3 ? classify_zero_case(o.n, o.k) : std::nullopt) {
    construction = to_string(c->kind);
  }
  const StarMapSearch star_map = zero_entropy_star_map(p);
  std::string centre = "none";
  if (star_map.zero) centre = star_map.centre_image ? std::to_string(*star_map.centre_image) : "fixed or in P";
  if (o.format == "json") {
    out << json{{"n", o.n},
                {"k", o.k},
                {"construction", construction},
                {"pattern", pattern_json(p)},
                {"class", to_string(star_class(p))},
                {"star_map_zero", star_map.zero},
                {"certificate", json::parse(format_certificate_json(*cert))}}
               .dump()
        << '\n';
  } else {
    out << "pattern: " << format_pattern_text(p) << '\n'
        << "class: " << to_string(star_class(p)) << '\n'
        << "construction: " << construction << '\n'
        << "star map: " << (star_map.zero ? "zero" : "positive") << " (centre image: " << centre << ")\n"
        << format_certificate_text(*cert);
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  std::vector<Pattern> kept;
  EnumerationReport report;
  report.period = o.n;
  auto visit = [&](const Pattern& p) {
    ++report.classes;
    const bool collapsible = is_strongly_collapsible(p).has_value();
    if (collapsible) ++report.zero_classes;
    if (collapsible != is_zero_entropy_spectral(p)) report.disagreements.push_back(p);
    if ((!o.zero_only || collapsible) && !o.count_only) kept.push_back(p);
    return true;
  };
  if (o.star > 0) {
    report.star_k = o.star;
    report.labeled = for_each_star_pattern(o.n, o.star, {}, visit);
  } else {
    report.labeled = count_labeled_patterns(o.n);
    for_each_pattern(o.n, true, visit);
  }
  if (o.format == "json") {
    json doc = json::parse(format_report_json(report));
    if (!o.count_only) {
      doc["patterns"] = json::array();
      for (const auto& p : kept) doc["patterns"].push_back(format_pattern_text(p));
    }
    out << doc.dump() << '\n';
  } else {
    for (const auto& p : kept) out << format_pattern_text(p) << '\n';
    out << "# labeled " << report.labeled << ", classes " << report.classes << ", zero " << report.zero_classes
        << ", disagreements " << report.disagreements.size() << '\n';
  }
  return report.disagreements.empty() ? kOk : kNegative;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (o.k_max < 3 || o.n_max < 3 || o.n_max > kHardMaxPeriod) {
    throw Error(ErrorKind::BadRange, "need 3 <= k-max and 3 <= n-max <= " + std::to_string(kHardMaxPeriod));
  }
  const auto rows = verify_zero_star_table(o.n_max, o.k_max);
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const ZeroStarRow& r) { return r.consistent(); });
  if (o.format == "json") {
    out << json{{"rows", json::parse(format_zero_star_json(rows))}, {"consistent", ok}}.dump() << '\n';
  } else {
    out << "  n  k  predicted  found  pattern  relaxed  mode              examined  constructor\n";
    for (const auto& r : rows) {
      out << std::setw(3) << r.n << std::setw(3) << r.k << std::setw(11) << (r.predicted ? "zero" : "positive")
          << std::setw(7) << (r.found ? "yes" : "no") << std::setw(9) << (r.pattern_zero ? "yes" : "no")
          << std::setw(9) << (r.relaxed ? "yes" : "no") << "  " << std::left << std::setw(16) << to_string(r.mode)
          << std::right << std::setw(10) << r.examined << "  "
          << (r.predicted ? (r.constructor_ok ? "ok" : "FAILED") : "-") << (r.consistent() ? "" : "  MISMATCH")
          << '\n';
    }
    out << (ok ? "all rows consistent\n" : "inconsistent rows found\n");
  }
  return ok ? kOk : kNegative;
}

int cmd_matrix(const Options& o, std::istream& in, std::ostream& out) {
  const Pattern p = read_pattern(o, in);
  const PathMatrix m = path_matrix(p);
  if (o.format == "dot") {
    out << to_dot(m);
  } else if (o.format == "csv") {
    out << to_csv(m);
  } else if (o.format == "json") {
    json paths = json::array();
    for (const auto& path : m.paths) paths.push_back(to_string(path));
    out << json{{"paths", paths}, {"adjacency", m.adjacency}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < m.size(); ++i) {
      out << to_string(m.paths[i]) << " ->";
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m.edge(i, j)) out << ' ' << to_string(m.paths[j]);
      }
      out << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Zero-entropy decisions for periodic tree patterns", "treetropy"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot", "csv"}))
      ->capture_default_str();
  app.add_option("--tol", o.tolerance, "Power-iteration tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--file", o.file, "Read the pattern from a file")->check(CLI::ExistingFile);

  auto with_pattern = [&](CLI::App* sub) {
    sub->add_option("pattern", o.pattern, "Pattern as `n: a b | c d`, JSON, or - for stdin");
  };
  auto* validate = app.add_subcommand("validate", "Check a pattern and print its canonical form and class");
  auto* entropy_cmd = app.add_subcommand("entropy", "Spectral radius and entropy of the path matrix");
  auto* zero = app.add_subcommand("zero", "Decide zero entropy by collapsing; exit 1 if positive");
  auto* collapse = app.add_subcommand("collapse", "One collapse step over the maximal structure");
  auto* matrix = app.add_subcommand("matrix", "Path transition matrix (text, json, dot, csv)");
  for (auto* sub : {validate, entropy_cmd, zero, collapse, matrix}) with_pattern(sub);

  auto* explode = app.add_subcommand("explode", "Apply a doubling script such as `base=3 ne ee2@0`");
  explode->add_option("script", o.script, "Explosion script")->required();

  auto* construct = app.add_subcommand("construct", "Build a zero-entropy k-star pattern of period n");
  construct->add_option("n", o.n, "Period");
  construct->add_option("k", o.k, "Number of star branches");
  construct->add_flag("--relaxed", o.relaxed, "Allow orbits that miss some branches");
  construct->add_option("--table", o.table, "Print the zero/positive table up to N and K")->expected(2);

  auto* enumerate = app.add_subcommand("enumerate", "All patterns of period n up to rotation");
  enumerate->add_option("n", o.n, "Period")->required();
  enumerate->add_option("--star", o.star, "Only k-star patterns")->check(CLI::Range(3, kHardMaxPeriod));
  enumerate->add_flag("--zero-only", o.zero_only, "Only zero-entropy patterns");
  enumerate->add_flag("--count-only", o.count_only, "Only print counts");

  auto* verify = app.add_subcommand("verify-theorem-c", "Search k-star patterns for zero entropy and compare");
  verify->add_option("--n-max", o.n_max, "Largest period")->capture_default_str();
  verify->add_option("--k-max", o.k_max, "Largest number of branches")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*construct && o.table.empty() && (o.n == 0 || o.k == 0)) {
      throw Error(ErrorKind::ParseError, "construct needs n and k");
    }
    if (*validate) return cmd_validate(o, in, out);
    if (*entropy_cmd) return cmd_entropy(o, in, out);
    if (*zero) return cmd_zero(o, in, out);
    if (*collapse) return cmd_collapse(o, in, out);
    if (*matrix) return cmd_matrix(o, in, out);
    if (*explode) return cmd_explode(o, out);
    if (*construct) return cmd_construct(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const Negative& n) {
    out << n.message << '\n';
    return kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace treetropy::cli
