#include "qlam/leaf_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qlam {

Lamination LeafFile::to_lamination(std::string provenance) const {
  return Lamination::from_leaves(chords, 2, 0, std::move(provenance));
}

LeafFile read_leaf_stream(std::istream& in) {
  LeafFile file;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line);
    std::string first, second, extra;
    fields >> first >> second;
    if (fields >> extra) {
      throw std::invalid_argument("leaf file line " + std::to_string(lineno) +
                                  ": too many fields");
    }
    try {
      if (second.empty()) {
        file.points.push_back(Angle::parse(first));
      } else {
        file.chords.emplace_back(Angle::parse(first), Angle::parse(second));
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("leaf file line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  for (std::size_t i = 0; i < file.chords.size(); ++i) {
    for (std::size_t j = i + 1; j < file.chords.size(); ++j) {
      if (linked(file.chords[i], file.chords[j])) {
        throw std::invalid_argument("leaf file contains crossing chords: " +
                                    file.chords[i].str() + " x " + file.chords[j].str());
      }
    }
  }
  return file;
}

LeafFile read_leaf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open leaf file: " + path);
  return read_leaf_stream(in);
}

void write_leaf_stream(std::ostream& out, const std::vector<LeafRecord>& records) {
  std::string current;
  for (const LeafRecord& r : records) {
    if (!r.section.empty() && r.section != current) {
      current = r.section;
      out << "# " << current << '\n';
    }
    out << r.chord.str() << '\n';
  }
}

void write_leaf_file(const std::string& path, const std::vector<LeafRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  write_leaf_stream(out, records);
}

std::vector<LeafRecord> plain_records(std::vector<Chord> chords) {
  std::sort(chords.begin(), chords.end());
  std::vector<LeafRecord> records;
  records.reserve(chords.size());
  for (auto& c : chords) records.emplace_back(std::move(c));
  return records;
}

}  // namespace qlam
