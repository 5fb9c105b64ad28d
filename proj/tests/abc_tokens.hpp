#pragma once

// Tokenizer for ABC note bodies used to compare phrase transcriptions.
// Durations default to 1 when omitted; bar lines and whitespace carry no
// meaning, so `A,2 B, | C` and `A,2 B,1 C1` tokenize identically.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace abc {

struct Token {
  bool rest = false;
  int step = 0;    // 0..11, sharps folded in
  int octave = 4;  // ABC octave: uppercase = 4, lowercase = 5
  int duration = 1;

  friend bool operator==(const Token&, const Token&) = default;
};

inline std::vector<Token> tokenize(const std::string& body) {
  static const int kSteps['H' - 'A'] = {9, 11, 0, 2, 4, 5, 7};  // A..G
  std::vector<Token> tokens;
  std::size_t i = 0;
  const auto read_duration = [&]() {
    int value = 0;
    bool any = false;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      value = value * 10 + (body[i] - '0');
      any = true;
      ++i;
    }
    return any ? value : 1;
  };
  while (i < body.size()) {
    const char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '|') {
      ++i;
      continue;
    }
    Token token;
    if (c == 'z' || c == 'Z') {
      ++i;
      token.rest = true;
      token.duration = read_duration();
      tokens.push_back(token);
      continue;
    }
    int accidental = 0;
    if (c == '^') {
      accidental = 1;
      ++i;
    } else if (c == '_') {
      accidental = -1;
      ++i;
    }
    if (i >= body.size()) throw std::runtime_error("dangling accidental in ABC body");
    const char letter = body[i];
    if (letter >= 'A' && letter <= 'G') {
      token.step = kSteps[letter - 'A'];
      token.octave = 4;
    } else if (letter >= 'a' && letter <= 'g') {
      token.step = kSteps[letter - 'a'];
      token.octave = 5;
    } else {
      throw std::runtime_error(std::string("unexpected character '") + letter +
                               "' in ABC body");
    }
    ++i;
    token.step = (token.step + accidental + 12) % 12;
    while (i < body.size() && (body[i] == ',' || body[i] == '\'')) {
      token.octave += body[i] == ',' ? -1 : 1;
      ++i;
    }
    token.duration = read_duration();
    tokens.push_back(token);
  }
  return tokens;
}

}  // namespace abc
