// Command-line front end: parse pattern and system files, compose and
// transform patterns, run the random generators, render ABC and MIDI.
//
// Exit codes: 0 success, 1 validation error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "musicbox/musicbox.hpp"

namespace {

using namespace musicbox;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw FormatError("failed while writing '" + path + "'");
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(content.data()),
            static_cast<std::streamsize>(content.size()));
  if (!out) throw FormatError("failed while writing '" + path + "'");
}

bool looks_like_system_file(const std::string& content) {
  for (const auto& line : textdetail::significant_lines(content)) {
    const auto tokens = textdetail::split_tokens(line.text);
    return tokens[0] == "monoid" || tokens[0] == "multiplicity" ||
           tokens[0] == "colors" || tokens[0] == "initial" || tokens[0] == "rule";
  }
  return false;
}

struct CheckOptions {
  std::string path;
};

int run_check(const CheckOptions& opt) {
  const std::string content = read_file(opt.path);
  if (looks_like_system_file(content)) {
    const SystemFile file = parse_system_file(content);
    const std::vector<Diagnostic> diagnostics = validate_system(file.system);
    for (const Diagnostic& d : diagnostics) {
      std::cout << (d.severity == Diagnostic::Severity::Error ? "error: " : "note: ")
                << d.message << "\n";
    }
    if (has_errors(diagnostics)) return 1;
    std::cout << "system ok: " << file.system.rules.size() << " rules over "
              << file.system.colors.size() << " colors, multiplicity "
              << file.system.multiplicity << "\n";
    return 0;
  }
  const MultiPattern m = parse_multi_pattern(content);
  std::cout << "pattern ok: multiplicity " << m.multiplicity() << ", arity " << m.arity()
            << ", length " << m.length() << "\n";
  return 0;
}

struct ComposeOptions {
  std::string left;
  std::string right;
  std::size_t position = 1;
  std::string monoid = "additive";
};

int run_compose(const ComposeOptions& opt) {
  const DegreeMonoid m = parse_monoid(opt.monoid);
  const MultiPattern left = parse_multi_pattern(read_file(opt.left));
  const MultiPattern right = parse_multi_pattern(read_file(opt.right));
  std::cout << format_multi_pattern(compose(m, left, opt.position, right)) << "\n";
  return 0;
}

struct TransformOptions {
  std::string op;
  std::string input;
  std::string monoid = "additive";
};

int run_transform(const TransformOptions& opt) {
  const DegreeMonoid m = parse_monoid(opt.monoid);
  const MultiPattern x = parse_multi_pattern(read_file(opt.input));

  std::string name = opt.op;
  std::string arg;
  if (const std::size_t colon = opt.op.find(':'); colon != std::string::npos) {
    name = opt.op.substr(0, colon);
    arg = opt.op.substr(colon + 1);
  }
  const auto int_arg = [&arg, &name]() {
    return textdetail::require_integer(arg, "argument of " + name);
  };

  MultiPattern result = x;
  if (name == "mir") {
    result = mirror(x);
  } else if (name == "inv") {
    result = inverse(m, x);
  } else if (name == "minv") {
    result = retrograde_inverse(m, x);
  } else if (name == "mul") {
    result = multiply_degrees(m, x, int_arg());
  } else if (name == "red") {
    result = reduce_degrees(int_arg(), x);
  } else if (name == "dil") {
    result = dilate_rests(int_arg(), x);
  } else if (name == "tran") {
    result = transpose(m, int_arg(), x);
  } else if (name == "rep") {
    const std::int64_t k = int_arg();
    if (k < 1) throw FormatError("rep needs a count >= 1");
    result = repeat(m, static_cast<std::size_t>(k), x);
  } else if (name == "temp") {
    const std::int64_t k = int_arg();
    if (k < 0) throw FormatError("temp needs a count >= 0");
    result = temporize(m, static_cast<std::size_t>(k), x);
  } else if (name == "conc") {
    result = concatenate(m, x, parse_multi_pattern(read_file(arg)));
  } else if (name == "har") {
    if (x.multiplicity() != 1) throw FormatError("har expects a single-row pattern");
    result = harmonize(m, x.row(0), parse_multi_pattern(read_file(arg)));
  } else if (name == "arp") {
    if (x.multiplicity() != 1) throw FormatError("arp expects a single-row pattern");
    result = arpeggiate(m, x.row(0), parse_multi_pattern(read_file(arg)));
  } else {
    throw FormatError("unknown transform '" + name + "'");
  }
  std::cout << format_multi_pattern(result) << "\n";
  return 0;
}

struct GenerateOptions {
  std::string system;
  std::string mode = "partial";
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  std::string log_path;
};

int run_generate(const GenerateOptions& opt) {
  const SystemFile file = parse_system_file(read_file(opt.system));
  SplitMix64 gen(opt.seed);
  GenerationResult result = [&]() {
    if (opt.mode == "partial") return generate_partial(file.system, opt.iterations, gen);
    if (opt.mode == "full") return generate_full(file.system, opt.iterations, gen);
    if (opt.mode == "homogeneous") {
      return generate_homogeneous(file.system, opt.iterations, gen);
    }
    throw FormatError("unknown mode '" + opt.mode +
                      "' (expected partial, full, homogeneous)");
  }();
  if (!opt.log_path.empty()) {
    write_file(opt.log_path, format_derivation_log(result.log));
  }
  std::cout << format_multi_pattern(result.pattern) << "\n";
  return 0;
}

struct ReplayOptions {
  std::string system;
  std::string log_path;
};

int run_replay(const ReplayOptions& opt) {
  const SystemFile file = parse_system_file(read_file(opt.system));
  const DerivationLog log = parse_derivation_log(read_file(opt.log_path));
  std::cout << format_multi_pattern(replay(file.system, log)) << "\n";
  return 0;
}

struct PresetOptions {
  std::string kind;
  std::string pattern;
  std::string out;
  std::size_t stretch = 1;
  std::string flat;
  std::string lambda = "id";
  std::string chord;
  std::string arpeggio;
};

int run_preset(const PresetOptions& opt) {
  const Pattern p = parse_pattern(read_file(opt.pattern));
  BudGeneratingSystem system;
  if (opt.kind == "temporizer") {
    system = temporizer_system(p, opt.stretch);
  } else if (opt.kind == "rhythmic") {
    if (opt.flat.empty()) throw FormatError("rhythmic preset needs --flat");
    system = rhythmic_system(p, parse_pattern(read_file(opt.flat)));
  } else if (opt.kind == "concatenating") {
    system = concatenating_system(p, parse_homogeneous_op(opt.lambda));
  } else if (opt.kind == "harmonizator") {
    if (opt.chord.empty()) throw FormatError("harmonizator preset needs --chord");
    system = harmonizator_system(p, parse_multi_pattern(read_file(opt.chord)));
  } else if (opt.kind == "arpeggiator") {
    if (opt.arpeggio.empty()) throw FormatError("arpeggiator preset needs --arpeggio");
    system = arpeggiator_system(p, parse_multi_pattern(read_file(opt.arpeggio)));
  } else if (opt.kind == "stacking") {
    system = stacking_system(p, parse_homogeneous_op(opt.lambda));
  } else {
    throw FormatError("unknown preset kind '" + opt.kind + "'");
  }
  write_file(opt.out, format_system_file(SystemFile{system, std::nullopt}));
  return 0;
}

struct RenderOptions {
  std::string pattern;
  std::string scale;
  std::string root;
  int tempo = 128;
  std::string format = "abc";
  std::string out;
  std::string title;
};

int run_render(const RenderOptions& opt) {
  const MultiPattern m = parse_multi_pattern(read_file(opt.pattern));
  const Scale scale = parse_scale_spec(opt.scale);
  const Note root = parse_root_spec(opt.root, scale.eta);
  const Interpretation interp(RootedScale(scale, root), opt.tempo);
  if (opt.format == "abc") {
    write_file(opt.out, write_abc(m, interp, opt.title));
  } else if (opt.format == "midi") {
    write_file(opt.out, write_midi(m, interp));
  } else {
    throw FormatError("unknown render format '" + opt.format + "' (expected abc, midi)");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"music box patterns: compose, transform, generate, render"};
  app.require_subcommand(1);
  int status = 0;

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "validate a pattern or system file");
  check->add_option("file", check_opt.path, "file to validate")->required();
  check->callback([&]() { status = run_check(check_opt); });

  ComposeOptions compose_opt;
  CLI::App* compose = app.add_subcommand("compose", "partial composition of two patterns");
  compose->add_option("--left", compose_opt.left, "left pattern file")->required();
  compose->add_option("--pos", compose_opt.position, "1-based input position")->required();
  compose->add_option("--right", compose_opt.right, "right pattern file")->required();
  compose->add_option("--monoid", compose_opt.monoid, "degree monoid (default additive)");
  compose->callback([&]() { status = run_compose(compose_opt); });

  TransformOptions transform_opt;
  CLI::App* transform = app.add_subcommand("transform", "apply a named operation");
  transform
      ->add_option("--op", transform_opt.op,
                   "mir|inv|minv|mul:<a>|red:<k>|dil:<b>|tran:<d>|rep:<k>|temp:<k>|"
                   "conc:<file>|har:<chordfile>|arp:<arpfile>")
      ->required();
  transform->add_option("file", transform_opt.input, "pattern file")->required();
  transform->add_option("--monoid", transform_opt.monoid, "degree monoid (default additive)");
  transform->callback([&]() { status = run_transform(transform_opt); });

  GenerateOptions generate_opt;
  CLI::App* generate = app.add_subcommand("generate", "run a seeded random generation");
  generate->add_option("--system", generate_opt.system, "system file")->required();
  generate->add_option("--mode", generate_opt.mode, "partial|full|homogeneous")->required();
  generate->add_option("--iterations", generate_opt.iterations, "number of iterations")
      ->required();
  generate->add_option("--seed", generate_opt.seed, "64-bit seed")->required();
  generate->add_option("--log", generate_opt.log_path, "write the derivation log here");
  generate->callback([&]() { status = run_generate(generate_opt); });

  ReplayOptions replay_opt;
  CLI::App* replay = app.add_subcommand("replay", "re-run a recorded derivation log");
  replay->add_option("--system", replay_opt.system, "system file")->required();
  replay->add_option("--log", replay_opt.log_path, "derivation log file")->required();
  replay->callback([&]() { status = run_replay(replay_opt); });

  PresetOptions preset_opt;
  CLI::App* preset = app.add_subcommand("preset", "emit one of the stock systems");
  preset
      ->add_option("--kind", preset_opt.kind,
                   "temporizer|rhythmic|concatenating|harmonizator|arpeggiator|stacking")
      ->required();
  preset->add_option("--pattern", preset_opt.pattern, "input pattern file")->required();
  preset->add_option("--out", preset_opt.out, "output system file")->required();
  preset->add_option("--stretch", preset_opt.stretch, "temporizer: max extra rests per beat");
  preset->add_option("--flat", preset_opt.flat, "rhythmic: flat pattern file");
  preset->add_option("--lambda", preset_opt.lambda,
                     "concatenating/stacking: id|inv|mir|minv|tran:<d>");
  preset->add_option("--chord", preset_opt.chord, "harmonizator: chord file");
  preset->add_option("--arpeggio", preset_opt.arpeggio, "arpeggiator: arpeggio file");
  preset->callback([&]() { status = run_preset(preset_opt); });

  RenderOptions render_opt;
  CLI::App* render = app.add_subcommand("render", "write ABC or MIDI for a pattern");
  render->add_option("--pattern", render_opt.pattern, "pattern file")->required();
  render->add_option("--scale", render_opt.scale, "scale name or comma-separated parts")
      ->required();
  render->add_option("--root", render_opt.root, "root note as <step>:<octave>")->required();
  render->add_option("--tempo", render_opt.tempo, "atoms (eighths) per minute")->required();
  render->add_option("--format", render_opt.format, "abc|midi")->required();
  render->add_option("--out", render_opt.out, "output file")->required();
  render->add_option("--title", render_opt.title, "ABC title line");
  render->callback([&]() { status = run_render(render_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const musicbox::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
