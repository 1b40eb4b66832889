#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlam/chord.hpp"

namespace qlam {

/// Finite truncation of an invariant geodesic lamination: a sorted set of
/// pairwise-unlinked non-degenerate chords. Degenerate chords (all circle
/// points) are implicit members and never stored.
class Lamination {
 public:
  Lamination() = default;

  /// Sorts, deduplicates and validates pairwise unlinkedness.
  /// Throws std::invalid_argument if two leaves cross.
  static Lamination from_leaves(std::vector<Chord> leaves, int degree = 2,
                                int depth = 0, std::string provenance = {});

  /// Same, with per-leaf construction generations (kept aligned through the
  /// sort; used by the pullback builder and the sibling checker).
  static Lamination from_leaves_tagged(std::vector<Chord> leaves,
                                       std::vector<int> generations, int degree,
                                       int depth, std::string provenance);

  const std::vector<Chord>& leaves() const { return leaves_; }
  const std::vector<int>& generations() const { return generations_; }
  int degree() const { return degree_; }
  int depth() const { return depth_; }
  const std::string& provenance() const { return provenance_; }

  bool contains(const Chord& c) const;
  std::size_t size() const { return leaves_.size(); }
  bool operator==(const Lamination& o) const { return leaves_ == o.leaves_; }

 private:
  std::vector<Chord> leaves_;      // sorted, unique, non-degenerate
  std::vector<int> generations_;   // parallel to leaves_
  int degree_ = 2;
  int depth_ = 0;
  std::string provenance_;
};

struct SiblingViolation {
  Chord leaf;
  int condition;  // 1: image not stored, 2: no preimage, 3: no disjoint sibling
  bool operator==(const SiblingViolation&) const = default;
};

/// Checks the three sibling-invariance conditions on the stored truncation.
/// A leaf of generation g is required to have its image stored when g >= 2,
/// a preimage when g <= depth_budget, and a disjoint equal-image sibling
/// whenever its image is itself a stored leaf.
std::vector<SiblingViolation> check_sibling_invariant(const Lamination& l,
                                                      int depth_budget);

/// Hausdorff distance of the two leaf sets, each augmented with all degenerate
/// chords, under the chord_metric on E. Exact.
Rational hausdorff_distance(const Lamination& l1, const Lamination& l2);

/// Face of the disk subdivision induced by a finite leaf set, given by its
/// circularly ordered vertices (>= 3 of them).
class FiniteGap {
 public:
  explicit FiniteGap(std::vector<Angle> vertices);

  const std::vector<Angle>& vertices() const { return vertices_; }
  bool operator==(const FiniteGap&) const = default;
  auto operator<=>(const FiniteGap&) const = default;

 private:
  std::vector<Angle> vertices_;  // strictly increasing, size >= 3
};

/// Faces of the subdivision bounded by >= 3 stored leaf endpoints, in
/// canonical sorted order. Truncations cannot witness infinite gaps, so only
/// finite faces are reported.
std::vector<FiniteGap> extract_gaps(const Lamination& l);

enum class GapTag {
  FiniteRotational,
  FiniteNonRotational,
  FatouDegreeK,
  SiegelSymbolic,
  CaterpillarSymbolic,
};

struct GapClass {
  GapTag tag;
  int degree = 1;                 // degree of the return map on the gap
  std::optional<int> period;      // none for non-periodic vertex data

  bool operator==(const GapClass&) const = default;
};

/// Classification of a finite gap from its (rational) vertex dynamics: period
/// of the vertex set under sigma_d, degree of the return map, and whether the
/// return map acts as a combinatorial rotation. Gaps that are preperiodic but
/// not periodic report no period. Throws on fewer than 3 vertices.
GapClass classify_finite_gap(const FiniteGap& g, int degree);

/// Siegel / caterpillar / Fatou tags come only from explicit symbolic
/// descriptors, never inferred from finite data. degree >= 2 gives a Fatou
/// gap of that degree; degree 1 gives Siegel (uncountable basis) or
/// caterpillar (countable basis).
GapClass gap_class_from_symbolic(int period, int degree, bool countable_basis);

/// True iff some rotation s has perm[i] = (i + s) mod n for all i, where
/// perm is the index permutation of the map on the sorted vertex list.
bool is_combinatorial_rotation(const std::vector<int>& perm);

}  // namespace qlam
