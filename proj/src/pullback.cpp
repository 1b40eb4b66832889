#include "qlam/pullback.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qlam/renorm.hpp"

namespace qlam {

namespace {

Angle half(const Angle& x) {
  return Angle::from_fraction(x.numerator(), x.denominator() * 2);
}

Angle opposite(const Angle& x) { return angle_add(x, Rational(1, 2)); }

/// x lies in the half-open arc [from, from + 1/2).
bool in_lower_half(const Angle& from, const Angle& x) {
  const Angle to = opposite(from);
  if (from < to) return from <= x && x < to;
  return from <= x || x < to;
}

}  // namespace

CriticalPortrait CriticalPortrait::critical_leaf(const Angle& x) {
  std::vector<Angle> v{x, opposite(x)};
  std::sort(v.begin(), v.end());
  return CriticalPortrait(Kind::CriticalLeaf, std::move(v));
}

CriticalPortrait CriticalPortrait::critical_quadrilateral(std::vector<Angle> vertices) {
  if (vertices.size() != 4) throw std::invalid_argument("quadrilateral needs 4 vertices");
  std::sort(vertices.begin(), vertices.end());
  if (std::unique(vertices.begin(), vertices.end()) != vertices.end()) {
    throw std::invalid_argument("quadrilateral vertices must be distinct");
  }
  if (vertices[2] != opposite(vertices[0]) || vertices[3] != opposite(vertices[1])) {
    throw std::invalid_argument("opposite vertices must have equal images");
  }
  if (sigma(2, vertices[0]) == sigma(2, vertices[1])) {
    throw std::invalid_argument("quadrilateral image is degenerate");
  }
  return CriticalPortrait(Kind::CriticalQuadrilateral, std::move(vertices));
}

CriticalPortrait CriticalPortrait::finite_critical_polygon(std::vector<Angle> vertices) {
  if (vertices.size() < 6 || vertices.size() % 2 != 0) {
    throw std::invalid_argument("critical polygon needs 2k >= 6 vertices");
  }
  std::sort(vertices.begin(), vertices.end());
  if (std::unique(vertices.begin(), vertices.end()) != vertices.end()) {
    throw std::invalid_argument("polygon vertices must be distinct");
  }
  const std::size_t k = vertices.size() / 2;
  for (std::size_t i = 0; i < k; ++i) {
    if (vertices[i + k] != opposite(vertices[i])) {
      throw std::invalid_argument("polygon must map two-to-one onto a k-gon");
    }
  }
  return CriticalPortrait(Kind::FiniteCriticalPolygon, std::move(vertices));
}

std::vector<Chord> CriticalPortrait::boundary_chords() const {
  if (kind_ == Kind::CriticalLeaf) return {Chord(vertices_[0], vertices_[1])};
  std::vector<Chord> edges;
  edges.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    edges.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  return edges;
}

std::vector<Chord> CriticalPortrait::critical_chords() const {
  const std::size_t k = vertices_.size() / 2;
  std::vector<Chord> chords;
  chords.reserve(k);
  for (std::size_t i = 0; i < k; ++i) chords.emplace_back(vertices_[i], vertices_[i + k]);
  return chords;
}

Chord CriticalPortrait::image() const {
  if (kind_ == Kind::FiniteCriticalPolygon) {
    throw std::logic_error("polygon image is a polygon, not a chord");
  }
  if (kind_ == Kind::CriticalLeaf) {
    const Angle v = sigma(2, vertices_[0]);
    return Chord(v, v);
  }
  return Chord(sigma(2, vertices_[0]), sigma(2, vertices_[1]));
}

std::vector<Angle> CriticalPortrait::image_vertices() const {
  const std::size_t k = std::max<std::size_t>(vertices_.size() / 2, 1);
  std::vector<Angle> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(sigma(2, vertices_[i]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<Chord, Chord> sibling_preimages(const Chord& c, const CriticalPortrait& portrait) {
  if (c.degenerate()) throw std::invalid_argument("cannot pull back a degenerate chord");
  for (const Chord& b : portrait.boundary_chords()) {
    if (linked(c, b)) {
      throw std::invalid_argument("chord " + c.str() + " crosses the critical object");
    }
  }
  for (const Chord& b : portrait.critical_chords()) {
    if (linked(c, b)) {
      throw std::invalid_argument("chord " + c.str() + " crosses the critical object");
    }
  }

  // split the preimages by the first critical chord {p, p+1/2}
  const Angle p = portrait.critical_chords().front().a();
  const auto lift = [&](const Angle& y, bool lower) {
    const Angle h = half(y);
    const Angle h1 = opposite(h);
    if (in_lower_half(p, h) == lower) return h;
    return h1;
  };
  Chord lower(lift(c.a(), true), lift(c.b(), true));
  Chord upper(lift(c.a(), false), lift(c.b(), false));
  if (upper < lower) std::swap(lower, upper);
  return {lower, upper};
}

Lamination build_pullback(const CriticalPortrait& portrait, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");

  std::map<Chord, int> generation;
  std::vector<Chord> frontier;
  for (const Chord& b : portrait.boundary_chords()) {
    if (generation.emplace(b, 0).second) frontier.push_back(b);
  }
  // generation 1 is the boundary itself (the lifts of the image chord);
  // deeper generations are iterated sibling preimages
  for (int g = 2; g <= depth; ++g) {
    std::vector<Chord> next;
    for (const Chord& c : frontier) {
      const auto [first, second] = sibling_preimages(c, portrait);
      for (const Chord& pulled : {first, second}) {
        if (generation.emplace(pulled, g).second) next.push_back(pulled);
      }
    }
    frontier = std::move(next);
  }

  std::vector<Chord> leaves;
  std::vector<int> gens;
  leaves.reserve(generation.size());
  gens.reserve(generation.size());
  for (const auto& [chord, gen] : generation) {
    leaves.push_back(chord);
    gens.push_back(gen);
  }
  return Lamination::from_leaves_tagged(std::move(leaves), std::move(gens), 2, depth,
                                        "pullback");
}

CriticalPortrait quadrilateral_from_leaf(const Chord& m, const HyperbolicRoot& root) {
  if (m.degenerate()) throw std::invalid_argument("leaf must be non-degenerate");
  if (m != root.minor.chord && !in_gap_V(root, m)) {
    throw std::invalid_argument("leaf " + m.str() + " is not supported by the root's gap");
  }
  const Angle ha = half(m.a());
  const Angle hb = half(m.b());
  return CriticalPortrait::critical_quadrilateral({ha, opposite(ha), hb, opposite(hb)});
}

}  // namespace qlam
