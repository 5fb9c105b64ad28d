#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "musicbox/errors.hpp"
#include "musicbox/pattern.hpp"
#include "musicbox/scale.hpp"

namespace musicbox {

// One sounding note: voice row, onset and duration in atoms (eighths).
struct NoteEvent {
  std::size_t voice = 0;
  std::int64_t onset = 0;
  std::int64_t duration = 1;
  Note note;

  friend bool operator==(const NoteEvent&, const NoteEvent&) = default;
};

// Expands a multi-pattern into note events: each beat sounds from its atom
// position until the next beat or the end of the row, so a beat followed by
// s rests lasts 1 + s atoms. Leading rests are silence.
inline std::vector<NoteEvent> note_events(const MultiPattern& m, const Interpretation& interp) {
  std::vector<NoteEvent> events;
  for (std::size_t voice = 0; voice < m.multiplicity(); ++voice) {
    const Pattern& row = m.row(voice);
    const auto cells = row.cells();
    std::size_t j = 0;
    while (j < cells.size() && !cells[j].has_value()) ++j;  // leading rests
    while (j < cells.size()) {
      const std::int64_t onset = static_cast<std::int64_t>(j);
      const Degree degree = *cells[j];
      std::size_t end = j + 1;
      while (end < cells.size() && !cells[end].has_value()) ++end;
      events.push_back(NoteEvent{voice, onset, static_cast<std::int64_t>(end - j),
                                 degree_to_note(interp.rooted_scale, degree)});
      j = end;
    }
  }
  return events;
}

namespace detail {

inline void require_twelve_tet(const Interpretation& interp) {
  if (interp.rooted_scale.scale.eta != 12) {
    throw EtaError("rendering needs 12-TET, got eta = " +
                   std::to_string(interp.rooted_scale.scale.eta));
  }
}

// ABC pitch token: sharps only. Octave 4 is plain uppercase, commas go down,
// lowercase and apostrophes go up.
inline std::string abc_pitch(const Note& n) {
  static const char* const kNames[12] = {"C",  "^C", "D",  "^D", "E",  "F",
                                         "^F", "G",  "^G", "A",  "^A", "B"};
  std::string token = kNames[n.step];
  if (n.octave <= 4) {
    for (int o = n.octave; o < 4; ++o) token += ',';
  } else {
    for (std::size_t i = 0; i < token.size(); ++i) {
      const char c = token[i];
      if (c >= 'A' && c <= 'G') token[i] = static_cast<char>(c - 'A' + 'a');
    }
    for (int o = 5; o < n.octave; ++o) token += '\'';
  }
  return token;
}

}  // namespace detail

// ABC transcription: header X/T/K/M/L/Q, one V:voice<i> block per row,
// explicit duration multipliers in eighths, leading rests as z<len>.
inline std::string write_abc(const MultiPattern& m, const Interpretation& interp,
                             const std::string& title = "") {
  detail::require_twelve_tet(interp);
  std::string out;
  out += "X:1\n";
  out += "T:" + title + "\n";
  out += "K:Am\n";
  out += "M:8/8\n";
  out += "L:1/8\n";
  out += "Q:1/8=" + std::to_string(interp.tempo) + "\n";

  const std::vector<NoteEvent> events = note_events(m, interp);
  for (std::size_t voice = 0; voice < m.multiplicity(); ++voice) {
    out += "V:voice" + std::to_string(voice + 1) + "\n";
    std::string line;
    std::int64_t cursor = 0;
    for (const NoteEvent& event : events) {
      if (event.voice != voice) continue;
      if (event.onset > cursor) {
        line += "z" + std::to_string(event.onset - cursor) + " ";
      }
      line += detail::abc_pitch(event.note) + std::to_string(event.duration) + " ";
      cursor = event.onset + event.duration;
    }
    if (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

namespace detail {

inline void append_u16(std::vector<std::uint8_t>& out, std::uint16_t value) {
  out.push_back(static_cast<std::uint8_t>(value >> 8));
  out.push_back(static_cast<std::uint8_t>(value & 0xFF));
}

inline void append_u32(std::vector<std::uint8_t>& out, std::uint32_t value) {
  out.push_back(static_cast<std::uint8_t>(value >> 24));
  out.push_back(static_cast<std::uint8_t>((value >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((value >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(value & 0xFF));
}

inline void append_varlen(std::vector<std::uint8_t>& out, std::uint32_t value) {
  std::uint8_t stack[5];
  int depth = 0;
  stack[depth++] = static_cast<std::uint8_t>(value & 0x7F);
  value >>= 7;
  while (value != 0) {
    stack[depth++] = static_cast<std::uint8_t>((value & 0x7F) | 0x80);
    value >>= 7;
  }
  while (depth > 0) out.push_back(stack[--depth]);
}

inline void append_chunk(std::vector<std::uint8_t>& out, const char (&tag)[5],
                         const std::vector<std::uint8_t>& payload) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(tag[i]));
  append_u32(out, static_cast<std::uint32_t>(payload.size()));
  out.insert(out.end(), payload.begin(), payload.end());
}

}  // namespace detail

// Standard MIDI File, format 1, 480 ticks per quarter (one atom = 240 ticks):
// a tempo track followed by one track per voice. No running status.
inline std::vector<std::uint8_t> write_midi(const MultiPattern& m,
                                            const Interpretation& interp) {
  detail::require_twelve_tet(interp);
  constexpr std::int64_t kTicksPerAtom = 240;
  std::vector<std::uint8_t> out;

  std::vector<std::uint8_t> header;
  detail::append_u16(header, 1);  // format 1
  detail::append_u16(header, static_cast<std::uint16_t>(m.multiplicity() + 1));
  detail::append_u16(header, 480);
  detail::append_chunk(out, "MThd", header);

  // Tempo: `tempo` atoms per minute means tempo/2 quarters per minute.
  const std::uint32_t micros_per_quarter = static_cast<std::uint32_t>(
      (120000000ULL + interp.tempo / 2) / static_cast<std::uint64_t>(interp.tempo));
  std::vector<std::uint8_t> tempo_track;
  detail::append_varlen(tempo_track, 0);
  tempo_track.insert(tempo_track.end(), {0xFF, 0x51, 0x03});
  tempo_track.push_back(static_cast<std::uint8_t>((micros_per_quarter >> 16) & 0xFF));
  tempo_track.push_back(static_cast<std::uint8_t>((micros_per_quarter >> 8) & 0xFF));
  tempo_track.push_back(static_cast<std::uint8_t>(micros_per_quarter & 0xFF));
  detail::append_varlen(tempo_track, 0);
  tempo_track.insert(tempo_track.end(), {0xFF, 0x2F, 0x00});
  detail::append_chunk(out, "MTrk", tempo_track);

  const std::vector<NoteEvent> events = note_events(m, interp);
  for (std::size_t voice = 0; voice < m.multiplicity(); ++voice) {
    const std::uint8_t channel = static_cast<std::uint8_t>(voice % 16);
    std::vector<std::uint8_t> track;
    std::int64_t cursor = 0;
    for (const NoteEvent& event : events) {
      if (event.voice != voice) continue;
      const int key = note_to_midi(event.note);
      if (key < 0 || key > 127) {
        throw ArgumentError("note falls outside the MIDI key range: " + std::to_string(key));
      }
      const std::int64_t on_tick = event.onset * kTicksPerAtom;
      const std::int64_t off_tick = (event.onset + event.duration) * kTicksPerAtom;
      detail::append_varlen(track, static_cast<std::uint32_t>(on_tick - cursor));
      track.insert(track.end(), {static_cast<std::uint8_t>(0x90 | channel),
                                 static_cast<std::uint8_t>(key), 64});
      detail::append_varlen(track, static_cast<std::uint32_t>(off_tick - on_tick));
      track.insert(track.end(), {static_cast<std::uint8_t>(0x80 | channel),
                                 static_cast<std::uint8_t>(key), 64});
      cursor = off_tick;
    }
    detail::append_varlen(track, 0);
    track.insert(track.end(), {0xFF, 0x2F, 0x00});
    detail::append_chunk(out, "MTrk", track);
  }
  return out;
}

}  // namespace musicbox
