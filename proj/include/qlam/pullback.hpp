#pragma once

#include <utility>
#include <vector>

#include "qlam/lamination.hpp"

namespace qlam {

struct HyperbolicRoot;  // renorm.hpp

/// Critical object driving a pullback: a critical leaf (diameter), a critical
/// quadrilateral (hull of two critical leaves, collapsing to one chord), or a
/// finite critical 2k-gon mapping two-to-one onto a k-gon.
class CriticalPortrait {
 public:
  enum class Kind { CriticalLeaf, CriticalQuadrilateral, FiniteCriticalPolygon };

  /// The diameter {x, x+1/2}.
  static CriticalPortrait critical_leaf(const Angle& x);
  /// Validates that opposite vertices have equal images and the image is one
  /// non-degenerate chord.
  static CriticalPortrait critical_quadrilateral(std::vector<Angle> vertices);
  /// 2k cyclically ordered vertices with v[i+k] = v[i] + 1/2, k >= 3.
  static CriticalPortrait finite_critical_polygon(std::vector<Angle> vertices);

  Kind kind() const { return kind_; }
  const std::vector<Angle>& vertices() const { return vertices_; }

  /// Hull edges (the critical leaf itself for Kind::CriticalLeaf).
  std::vector<Chord> boundary_chords() const;
  /// The k diameters {v[i], v[i]+1/2}.
  std::vector<Chord> critical_chords() const;
  /// sigma_2-image as a single chord; degenerate for a critical leaf. Throws
  /// for polygons with k >= 3 (their image is a polygon, see image_vertices).
  Chord image() const;
  std::vector<Angle> image_vertices() const;

  bool operator==(const CriticalPortrait&) const = default;

 private:
  CriticalPortrait(Kind k, std::vector<Angle> v) : kind_(k), vertices_(std::move(v)) {}

  Kind kind_;
  std::vector<Angle> vertices_;  // cyclically sorted, starting at the smallest
};

/// The two sigma_2-preimage chords of c, one in each closed half-disk cut by
/// the portrait's first critical chord; disjoint, each mapping onto c.
/// Throws std::invalid_argument if c is degenerate or crosses the portrait.
std::pair<Chord, Chord> sibling_preimages(const Chord& c,
                                          const CriticalPortrait& portrait);

/// Thurston's pullback construction: the portrait's boundary chords plus all
/// iterated sibling preimages through `depth` inverse-image generations of the
/// portrait's image chord. Leaves carry their generation; output canonical.
Lamination build_pullback(const CriticalPortrait& portrait, int depth);

/// Collapsing quadrilateral over a leaf m supported by the gap V of the given
/// root: the hull of the full preimage of m's endpoints. m must be the root
/// minor or lie in V (untune succeeds on both endpoints).
CriticalPortrait quadrilateral_from_leaf(const Chord& m, const HyperbolicRoot& root);

}  // namespace qlam
