#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlam/pullback.hpp"
#include "qlam/qml.hpp"

namespace qlam {

struct QmlL {
  std::vector<MinorLeaf> kept;             // fixed-return minors
  std::vector<MinorLeaf> erased;           // the rest
  std::vector<Angle> retained_endpoints;   // endpoints of erased minors
};

/// Cleaning: partitions lavaurs_qml(max_period) by fixed-return-ness and
/// records the endpoints of erased minors as retained degenerate leaves.
QmlL build_qml_l(int max_period);

enum class LimitCase {
  Case1FiniteCritical,
  Case2aCriticalLeafPeriodicEndpoint,
  Case2bFixedReturnQuadrilateral,
  SiegelSymbolic,
  IsolatedDendritic,
  IsolatedHyperbolic,
};

std::string limit_case_name(LimitCase c);

struct LimitClass {
  LimitCase tag;
  std::vector<CriticalPortrait> witnesses;
  std::vector<Angle> minor_set;  // hull vertices; 1 entry when degenerate

  bool operator==(const LimitClass&) const = default;
};

/// Decides which limit case the lamination induced by the portrait witnesses:
/// critical leaves with a periodic endpoint (2a), collapsing quadrilaterals
/// over fixed-return minors (2b), generalized quadrilaterals with strictly
/// preperiodic image data (1), and the isolated flags for quadrilaterals over
/// non-fixed-return periodic minors and for critical 2k-gons with k >= 3.
LimitClass classify_limit(const CriticalPortrait& portrait,
                          const std::optional<MinorLeaf>& context_minor = {});

/// Classes of minor equivalence attached to a hyperbolic minor m: one class
/// with two critical-leaf witnesses and the collapsing quadrilateral when m is
/// fixed-return, two one-leaf classes with degenerate minor sets otherwise.
std::vector<LimitClass> limit_class_of_qlam(const MinorLeaf& m);

/// Line-oriented report: one "identifier TAB case-tag TAB witnesses" line per
/// class, witnesses separated by "; " as vertex lists.
std::string limit_class_report(const std::string& identifier,
                               const std::vector<LimitClass>& classes);

struct EquivalencePartition {
  std::vector<std::vector<std::string>> blocks;        // sorted; by first member
  std::vector<std::vector<Angle>> block_minor_hulls;   // parallel to blocks

  bool operator==(const EquivalencePartition&) const = default;
};

/// Union-find closure of the "minor sets intersect" relation (equal, shared
/// endpoint, or crossing; a point meets a chord only at an endpoint).
EquivalencePartition minor_equivalence_classes(
    const std::vector<std::pair<std::string, Chord>>& items);

/// Finite truncation of the dendritic-version relation: each gap basis is one
/// block, each kept minor merges its endpoints. Bases must be pairwise
/// disjoint; overlap throws.
EquivalencePartition dendritic_quotient_classes(
    const std::vector<MinorLeaf>& kept,
    const std::vector<std::vector<Angle>>& gap_bases);

}  // namespace qlam
