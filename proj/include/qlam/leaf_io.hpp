#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qlam/chord.hpp"
#include "qlam/lamination.hpp"

namespace qlam {

/// Contents of a leaf file: non-degenerate chords plus explicit degenerate
/// leaves (points).
struct LeafFile {
  std::vector<Chord> chords;
  std::vector<Angle> points;

  Lamination to_lamination(std::string provenance = {}) const;
};

/// Parses the one-chord-per-line text format ("p1/q1 p2/q2", degenerate
/// "p/q", '#' comments). Rejects crossing pairs with std::invalid_argument.
LeafFile read_leaf_stream(std::istream& in);
LeafFile read_leaf_file(const std::string& path);

/// One entry of a leaf file to be written, with an optional comment emitted
/// before it (used for the "# period n" sections).
struct LeafRecord {
  Chord chord;
  std::string section;  // comment line started when non-empty and new

  LeafRecord(Chord c, std::string s = {}) : chord(std::move(c)), section(std::move(s)) {}
};

/// Writes records in the given order, starting a "# <section>" comment line
/// whenever the section label changes. Callers pass sorted data.
void write_leaf_stream(std::ostream& out, const std::vector<LeafRecord>& records);
void write_leaf_file(const std::string& path, const std::vector<LeafRecord>& records);

/// Convenience: sorted chords, no sections.
std::vector<LeafRecord> plain_records(std::vector<Chord> chords);

}  // namespace qlam
