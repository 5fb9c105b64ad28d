// Generates a phrase from a temporizer system and prints its ABC
// transcription. Pass a seed to hear a different variation.

#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "musicbox/musicbox.hpp"

using namespace musicbox;

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 42;

  const Pattern theme = parse_pattern("0 2 . 1 . 0 4");
  const BudGeneratingSystem system = temporizer_system(theme, 2);

  SplitMix64 gen(seed);
  const GenerationResult result = generate_partial(system, 12, gen);

  std::cout << "pattern: " << format_multi_pattern(result.pattern) << "\n\n";

  const Interpretation interp(RootedScale(*scale_by_name("hirajoshi"), Note(9, 3)), 128);
  std::cout << write_abc(result.pattern, interp, "temporized variation");
  return 0;
}
