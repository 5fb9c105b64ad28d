#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "musicbox/bud.hpp"
#include "musicbox/budgen.hpp"
#include "musicbox/errors.hpp"
#include "musicbox/monoid.hpp"
#include "musicbox/pattern.hpp"
#include "musicbox/scale.hpp"

namespace musicbox {

// Canonical text forms. One serialization per object, so formatted output is
// stable and byte-comparable:
//
//   pattern   `0 2 . 1 . 0 4 ; -5 . . 0 0 0 0`   (`.` rest, rows by `;` or newline)
//   monoid    `additive` | `cyclic <k>` | `max <z>`
//   colored   `<out> | <pattern> | <in> <in> ...`
//   log       `mode <m>` then `step ...` lines (1-based slots and rule ordinals)
//   system    line-oriented keyword file, `#` comments

namespace textdetail {

inline std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

inline bool parse_integer(const std::string& token, std::int64_t& out) {
  if (token.empty()) return false;
  std::size_t i = token[0] == '-' ? 1 : 0;
  if (i == token.size()) return false;
  for (std::size_t j = i; j < token.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(token[j]))) return false;
  }
  try {
    std::size_t used = 0;
    out = std::stoll(token, &used);
    return used == token.size();
  } catch (const std::exception&) {
    return false;
  }
}

inline std::int64_t require_integer(const std::string& token, const std::string& where) {
  std::int64_t value = 0;
  if (!parse_integer(token, value)) {
    throw FormatError(where + ": expected an integer, got '" + token + "'");
  }
  return value;
}

inline std::vector<std::string> split_rows(std::string_view text) {
  std::vector<std::string> rows;
  std::string current;
  for (char c : text) {
    if (c == ';' || c == '\n') {
      rows.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  rows.push_back(current);
  return rows;
}

}  // namespace textdetail

inline Pattern parse_pattern_row(const std::string& row, std::size_t row_index = 1) {
  const std::vector<std::string> tokens = textdetail::split_tokens(row);
  std::vector<Degree> degrees;
  std::vector<Atom> atoms;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (tokens[t] == ".") {
      atoms.push_back(Atom::Rest);
      continue;
    }
    std::int64_t value = 0;
    if (!textdetail::parse_integer(tokens[t], value)) {
      throw FormatError("row " + std::to_string(row_index) + ", token " +
                        std::to_string(t + 1) + ": expected a degree or '.', got '" +
                        tokens[t] + "'");
    }
    degrees.push_back(value);
    atoms.push_back(Atom::Beat);
  }
  if (atoms.empty()) {
    throw FormatError("row " + std::to_string(row_index) + " is empty");
  }
  if (degrees.empty()) {
    throw FormatError("row " + std::to_string(row_index) + " has no beat");
  }
  return Pattern(DegreePattern(std::move(degrees)), RhythmPattern(std::move(atoms)));
}

inline MultiPattern parse_multi_pattern(const std::string& text) {
  std::vector<Pattern> rows;
  std::size_t row_index = 0;
  for (const std::string& row : textdetail::split_rows(text)) {
    if (textdetail::split_tokens(row).empty()) continue;  // blank separators
    rows.push_back(parse_pattern_row(row, ++row_index));
  }
  if (rows.empty()) throw FormatError("no pattern rows found");
  return MultiPattern(std::move(rows));
}

inline Pattern parse_pattern(const std::string& text) {
  const MultiPattern m = parse_multi_pattern(text);
  if (m.multiplicity() != 1) {
    throw FormatError("expected a single-row pattern, got " +
                      std::to_string(m.multiplicity()) + " rows");
  }
  return m.row(0);
}

inline std::string format_pattern(const Pattern& p) {
  std::string out;
  for (const auto& cell : p.cells()) {
    if (!out.empty()) out += ' ';
    out += cell ? std::to_string(*cell) : std::string(".");
  }
  return out;
}

inline std::string format_multi_pattern(const MultiPattern& m) {
  std::string out;
  for (const Pattern& row : m.rows()) {
    if (!out.empty()) out += " ; ";
    out += format_pattern(row);
  }
  return out;
}

inline DegreeMonoid parse_monoid(const std::string& text) {
  const std::vector<std::string> tokens = textdetail::split_tokens(text);
  if (tokens.empty()) throw FormatError("empty monoid spec");
  if (tokens[0] == "additive") {
    if (tokens.size() != 1) throw FormatError("'additive' takes no parameter");
    return DegreeMonoid::additive();
  }
  if (tokens[0] == "cyclic") {
    if (tokens.size() != 2) throw FormatError("'cyclic' needs a modulus");
    const std::int64_t k = textdetail::require_integer(tokens[1], "cyclic modulus");
    if (k < 1) throw FormatError("cyclic modulus must be >= 1");
    return DegreeMonoid::cyclic(k);
  }
  if (tokens[0] == "max") {
    if (tokens.size() != 2) throw FormatError("'max' needs a lower bound");
    return DegreeMonoid::max_bounded(textdetail::require_integer(tokens[1], "max lower bound"));
  }
  throw FormatError("unknown monoid '" + tokens[0] + "' (expected additive, cyclic, max)");
}

inline std::string format_monoid(const DegreeMonoid& m) { return m.describe(); }

inline ColoredMultiPattern parse_colored_multi_pattern(const std::string& text) {
  const std::size_t first = text.find('|');
  const std::size_t last = text.rfind('|');
  if (first == std::string::npos || first == last) {
    throw FormatError("colored pattern needs the form '<out> | <pattern> | <inputs>'");
  }
  const std::vector<std::string> out_tokens =
      textdetail::split_tokens(std::string_view(text).substr(0, first));
  if (out_tokens.size() != 1) {
    throw FormatError("expected exactly one output color before the first '|'");
  }
  const MultiPattern body =
      parse_multi_pattern(text.substr(first + 1, last - first - 1));
  std::vector<Color> inputs;
  for (const std::string& token :
       textdetail::split_tokens(std::string_view(text).substr(last + 1))) {
    inputs.emplace_back(token);
  }
  return ColoredMultiPattern(Color(out_tokens[0]), body, std::move(inputs));
}

inline std::string format_colored_multi_pattern(const ColoredMultiPattern& x) {
  std::string out = x.output().name() + " | " + format_multi_pattern(x.body()) + " |";
  for (const Color& c : x.inputs()) out += " " + c.name();
  return out;
}

// `scale` accepts a built-in name or a comma-separated part list.
inline Scale parse_scale_spec(const std::string& text) {
  if (auto named = scale_by_name(text)) return *named;
  std::vector<int> parts;
  std::string current;
  for (char c : text + ",") {
    if (c == ',') {
      if (current.empty()) throw FormatError("empty scale part in '" + text + "'");
      parts.push_back(static_cast<int>(textdetail::require_integer(current, "scale part")));
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (parts.empty()) throw FormatError("unknown scale '" + text + "'");
  return Scale(parts);
}

inline std::string format_scale(const Scale& scale) {
  for (const char* name : {"major", "minor_natural", "minor_harmonic", "minor_pentatonic",
                           "hirajoshi", "chromatic"}) {
    if (scale_by_name(name) == scale) return name;
  }
  std::string out;
  for (int part : scale.parts) {
    if (!out.empty()) out += ',';
    out += std::to_string(part);
  }
  return out;
}

// `root` is written <step>:<octave>.
inline Note parse_root_spec(const std::string& text, int eta) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw FormatError("root needs the form <step>:<octave>, got '" + text + "'");
  }
  const std::int64_t step =
      textdetail::require_integer(text.substr(0, colon), "root step");
  const std::int64_t octave =
      textdetail::require_integer(text.substr(colon + 1), "root octave");
  if (step < 0 || step >= eta) {
    throw FormatError("root step " + std::to_string(step) + " is outside [0, " +
                      std::to_string(eta - 1) + "]");
  }
  return Note(static_cast<int>(step), static_cast<int>(octave), eta);
}

struct SystemFile {
  BudGeneratingSystem system;
  std::optional<Interpretation> interpretation;
};

namespace textdetail {

struct Line {
  std::size_t number;
  std::string text;
};

inline std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (!split_tokens(raw).empty()) lines.push_back({number, raw});
  }
  return lines;
}

}  // namespace textdetail

inline SystemFile parse_system_file(const std::string& text) {
  const std::vector<textdetail::Line> lines = textdetail::significant_lines(text);
  SystemFile out;
  bool saw_monoid = false;
  bool saw_multiplicity = false;
  bool saw_initial = false;
  std::optional<Scale> scale;
  std::optional<std::string> root_spec;
  std::optional<std::int64_t> tempo;

  const auto fail = [](std::size_t line, const std::string& why) -> void {
    throw FormatError("line " + std::to_string(line) + ": " + why);
  };

  std::size_t i = 0;
  while (i < lines.size()) {
    const textdetail::Line& line = lines[i];
    std::vector<std::string> tokens = textdetail::split_tokens(line.text);
    const std::string& keyword = tokens[0];

    if (keyword == "monoid") {
      std::string spec;
      for (std::size_t t = 1; t < tokens.size(); ++t) spec += tokens[t] + " ";
      try {
        out.system.monoid = parse_monoid(spec);
      } catch (const FormatError& e) {
        fail(line.number, e.what());
      }
      saw_monoid = true;
      ++i;
    } else if (keyword == "multiplicity") {
      if (tokens.size() != 2) fail(line.number, "'multiplicity' needs one integer");
      const std::int64_t m = textdetail::require_integer(tokens[1], "multiplicity");
      if (m < 1) fail(line.number, "multiplicity must be >= 1");
      out.system.multiplicity = static_cast<std::size_t>(m);
      saw_multiplicity = true;
      ++i;
    } else if (keyword == "colors") {
      if (tokens.size() < 2) fail(line.number, "'colors' needs at least one color");
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        out.system.colors.emplace_back(tokens[t]);
      }
      ++i;
    } else if (keyword == "initial") {
      if (tokens.size() != 2) fail(line.number, "'initial' needs one color");
      out.system.initial = Color(tokens[1]);
      saw_initial = true;
      ++i;
    } else if (keyword == "rule") {
      // rule <out> : <in>... {
      if (tokens.back() != "{") fail(line.number, "rule header must end with '{'");
      if (tokens.size() < 4 || tokens[2] != ":") {
        fail(line.number, "rule header must read 'rule <out> : <in>... {'");
      }
      const Color output(tokens[1]);
      std::vector<Color> inputs;
      for (std::size_t t = 3; t + 1 < tokens.size(); ++t) inputs.emplace_back(tokens[t]);
      if (inputs.empty()) fail(line.number, "a rule needs at least one input color");
      std::string body;
      ++i;
      bool closed = false;
      while (i < lines.size()) {
        if (textdetail::split_tokens(lines[i].text) == std::vector<std::string>{"}"}) {
          closed = true;
          ++i;
          break;
        }
        body += lines[i].text + "\n";
        ++i;
      }
      if (!closed) fail(line.number, "rule block is missing its closing '}'");
      try {
        out.system.rules.emplace_back(output, parse_multi_pattern(body), inputs);
      } catch (const FormatError& e) {
        fail(line.number, std::string("in rule body: ") + e.what());
      }
    } else if (keyword == "interpretation") {
      if (tokens != std::vector<std::string>{"interpretation", "{"}) {
        fail(line.number, "expected 'interpretation {'");
      }
      ++i;
      bool closed = false;
      while (i < lines.size()) {
        if (textdetail::split_tokens(lines[i].text) == std::vector<std::string>{"}"}) {
          closed = true;
          ++i;
          break;
        }
        // Entries may share a line, separated by ';'.
        for (const std::string& entry : textdetail::split_rows(lines[i].text)) {
          const std::vector<std::string> parts = textdetail::split_tokens(entry);
          if (parts.empty()) continue;
          if (parts[0] == "scale" && parts.size() == 2) {
            scale = parse_scale_spec(parts[1]);
          } else if (parts[0] == "root" && parts.size() == 2) {
            root_spec = parts[1];
          } else if (parts[0] == "tempo" && parts.size() == 2) {
            tempo = textdetail::require_integer(parts[1], "tempo");
          } else {
            fail(lines[i].number, "unknown interpretation entry '" + entry + "'");
          }
        }
        ++i;
      }
      if (!closed) fail(line.number, "interpretation block is missing its closing '}'");
    } else {
      fail(line.number, "unknown keyword '" + keyword + "'");
    }
  }

  if (!saw_monoid) throw FormatError("system file is missing 'monoid'");
  if (!saw_multiplicity) throw FormatError("system file is missing 'multiplicity'");
  if (!saw_initial) throw FormatError("system file is missing 'initial'");
  if (out.system.colors.empty()) {
    // Colors may be declared implicitly by the rules and the initial color;
    // the collected set is ordered lexicographically.
    std::set<Color> seen{out.system.initial};
    for (const ColoredMultiPattern& rule : out.system.rules) {
      seen.insert(rule.output());
      seen.insert(rule.inputs().begin(), rule.inputs().end());
    }
    out.system.colors.assign(seen.begin(), seen.end());
  }

  if (scale || root_spec || tempo) {
    if (!scale) throw FormatError("interpretation block is missing 'scale'");
    if (!root_spec) throw FormatError("interpretation block is missing 'root'");
    if (!tempo) throw FormatError("interpretation block is missing 'tempo'");
    if (*tempo < 1) throw FormatError("tempo must be >= 1");
    out.interpretation = Interpretation(
        RootedScale(*scale, parse_root_spec(*root_spec, scale->eta)),
        static_cast<int>(*tempo));
  }
  return out;
}

inline std::string format_system_file(const SystemFile& file) {
  std::string out;
  out += "monoid " + format_monoid(file.system.monoid) + "\n";
  out += "multiplicity " + std::to_string(file.system.multiplicity) + "\n";
  out += "colors";
  for (const Color& c : file.system.colors) out += " " + c.name();
  out += "\n";
  out += "initial " + file.system.initial.name() + "\n";
  for (const ColoredMultiPattern& rule : file.system.rules) {
    out += "rule " + rule.output().name() + " :";
    for (const Color& c : rule.inputs()) out += " " + c.name();
    out += " {\n";
    for (const Pattern& row : rule.body().rows()) {
      out += "  " + format_pattern(row) + "\n";
    }
    out += "}\n";
  }
  if (file.interpretation) {
    out += "interpretation {\n";
    out += "  scale " + format_scale(file.interpretation->rooted_scale.scale) + "\n";
    out += "  root " + std::to_string(file.interpretation->rooted_scale.root.step) + ":" +
           std::to_string(file.interpretation->rooted_scale.root.octave) + "\n";
    out += "  tempo " + std::to_string(file.interpretation->tempo) + "\n";
    out += "}\n";
  }
  return out;
}

inline std::string format_derivation_log(const DerivationLog& log) {
  std::string out = "mode ";
  switch (log.mode) {
    case GenerationMode::Partial:
      out += "partial";
      break;
    case GenerationMode::Full:
      out += "full";
      break;
    case GenerationMode::Homogeneous:
      out += "homogeneous";
      break;
  }
  out += "\n";
  for (const DerivationStep& step : log.steps) {
    out += "step";
    if (log.mode == GenerationMode::Partial) {
      out += " " + std::to_string(step.slot);
      out += step.skipped() ? " skip" : " " + std::to_string(step.choices[0] + 1);
    } else if (log.mode == GenerationMode::Full) {
      if (step.skipped()) {
        out += " skip";
      } else {
        for (std::size_t choice : step.choices) out += " " + std::to_string(choice + 1);
      }
    } else {
      out += " " + std::to_string(step.choices[0] + 1);
    }
    out += "\n";
  }
  return out;
}

inline DerivationLog parse_derivation_log(const std::string& text) {
  const std::vector<textdetail::Line> lines = textdetail::significant_lines(text);
  if (lines.empty()) throw FormatError("empty derivation log");
  DerivationLog log;

  const std::vector<std::string> head = textdetail::split_tokens(lines[0].text);
  if (head.size() != 2 || head[0] != "mode") {
    throw FormatError("line " + std::to_string(lines[0].number) +
                      ": log must start with 'mode partial|full|homogeneous'");
  }
  if (head[1] == "partial") {
    log.mode = GenerationMode::Partial;
  } else if (head[1] == "full") {
    log.mode = GenerationMode::Full;
  } else if (head[1] == "homogeneous") {
    log.mode = GenerationMode::Homogeneous;
  } else {
    throw FormatError("unknown generation mode '" + head[1] + "'");
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> tokens = textdetail::split_tokens(lines[i].text);
    const auto fail = [&lines, i](const std::string& why) -> void {
      throw FormatError("line " + std::to_string(lines[i].number) + ": " + why);
    };
    if (tokens[0] != "step") fail("expected 'step'");
    DerivationStep step;
    switch (log.mode) {
      case GenerationMode::Partial: {
        if (tokens.size() != 3) fail("partial steps read 'step <slot> <rule|skip>'");
        const std::int64_t slot = textdetail::require_integer(tokens[1], "slot");
        if (slot < 1) fail("slots are 1-based");
        step.slot = static_cast<std::size_t>(slot);
        if (tokens[2] != "skip") {
          const std::int64_t rule = textdetail::require_integer(tokens[2], "rule ordinal");
          if (rule < 1) fail("rule ordinals are 1-based");
          step.choices.push_back(static_cast<std::size_t>(rule - 1));
        }
        break;
      }
      case GenerationMode::Full: {
        if (tokens.size() < 2) fail("full steps read 'step <rules...>' or 'step skip'");
        if (!(tokens.size() == 2 && tokens[1] == "skip")) {
          for (std::size_t t = 1; t < tokens.size(); ++t) {
            const std::int64_t rule = textdetail::require_integer(tokens[t], "rule ordinal");
            if (rule < 1) fail("rule ordinals are 1-based");
            step.choices.push_back(static_cast<std::size_t>(rule - 1));
          }
        }
        break;
      }
      case GenerationMode::Homogeneous: {
        if (tokens.size() != 2) fail("homogeneous steps read 'step <rule>'");
        const std::int64_t rule = textdetail::require_integer(tokens[1], "rule ordinal");
        if (rule < 1) fail("rule ordinals are 1-based");
        step.choices.push_back(static_cast<std::size_t>(rule - 1));
        break;
      }
    }
    log.steps.push_back(std::move(step));
  }
  return log;
}

}  // namespace musicbox
