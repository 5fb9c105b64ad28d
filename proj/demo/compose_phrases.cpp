// Builds a few phrases by operad composition and prints them, together with
// the effect of some classic transformations.

#include <iostream>

#include "musicbox/musicbox.hpp"

using namespace musicbox;

int main() {
  const DegreeMonoid add = DegreeMonoid::additive();

  const MultiPattern theme = parse_multi_pattern("0 2 . 1 . 0 4 ; -5 . . 0 0 0 0");
  const MultiPattern answer = parse_multi_pattern("1 . 0 ; 0 . 1");

  std::cout << "theme:          " << format_multi_pattern(theme) << "\n";
  std::cout << "answer:         " << format_multi_pattern(answer) << "\n";
  std::cout << "theme o_3 answer: "
            << format_multi_pattern(compose(add, theme, 3, answer)) << "\n\n";

  std::cout << "retrograde:     " << format_multi_pattern(retrograde(theme)) << "\n";
  std::cout << "inverse:        " << format_multi_pattern(inverse(add, theme)) << "\n";
  std::cout << "transposed -2:  " << format_multi_pattern(transpose(add, -2, theme)) << "\n";
  std::cout << "repeated twice: " << format_multi_pattern(repeat(add, 2, theme)) << "\n\n";

  const Pattern melody = parse_pattern("-1 . 1 . 0 2");
  const MultiPattern chord = parse_multi_pattern("0 ; 2 ; 4");
  std::cout << "harmonized:     " << format_multi_pattern(harmonize(add, melody, chord))
            << "\n";
  return 0;
}
