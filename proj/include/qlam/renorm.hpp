#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qlam/pullback.hpp"
#include "qlam/qml.hpp"

namespace qlam {

/// A hyperbolic root: a non-degenerate minor {a,b} together with the exact
/// period n and the two n-bit period words of a and b. The word pair defines
/// the tuning substitution 0 -> word_a, 1 -> word_b.
struct HyperbolicRoot {
  MinorLeaf minor;
  int period = 0;
  std::string word_a;  // n-bit period word of the smaller endpoint
  std::string word_b;
  ComponentType ctype = ComponentType::Primitive;

  bool operator==(const HyperbolicRoot&) const = default;
};

/// Builds the root data from a minor chord; validates is_valid_minor.
HyperbolicRoot make_root(const Chord& minor);

/// Binary substitution 0 -> word_a, 1 -> word_b applied to the canonical
/// expansion of t (terminating form for dyadic t). Strictly order-preserving;
/// semiconjugates sigma_2 to sigma_2^n.
Angle tune(const HyperbolicRoot& root, const Angle& t);
BinaryExpansion tune_expansion(const HyperbolicRoot& root, const BinaryExpansion& e);

/// Inverse block parse aligned at position 0: returns the angle whose digits
/// are the {word_a, word_b} block indicators of s's expansion, or nullopt if
/// some block is neither word. Both expansions are tried for dyadic s.
std::optional<Angle> untune(const HyperbolicRoot& root, const Angle& s);
std::optional<BinaryExpansion> untune_expansion(const HyperbolicRoot& root,
                                                const BinaryExpansion& e);

/// Both endpoints of c lie in the tuning image and c is not the root minor.
bool in_gap_V(const HyperbolicRoot& root, const Chord& c);

struct AncestorResult {
  bool trivial = false;                 // the empty oldest ancestor lamination
  std::optional<HyperbolicRoot> root;   // set iff !trivial
};

/// Oldest ancestor in the tuning genealogy: the smallest-period root whose
/// V-gap contains m (or whose minor is m); cardioid-edge ancestry collapses to
/// the trivial (empty) lamination. root_pool must contain every root of period
/// up to period(m); throws otherwise.
AncestorResult oldest_ancestor(const MinorLeaf& m,
                               const std::vector<HyperbolicRoot>& root_pool);

/// Maximal-by-inclusion roots up to max_period: type1 are cardioid edges,
/// type2 are fixed-return roots contained in no earlier maximal V-gap.
std::pair<std::vector<HyperbolicRoot>, std::vector<HyperbolicRoot>>
maximal_roots(int max_period);

/// Edges of the gap V: the root minor (over t = 0) plus, for each dyadic
/// t = k/2^j with 0 < j <= dyadic_depth, the chord joining the tunings of t's
/// two binary expansions. Canonical sorted order.
std::vector<Chord> v_edges(const HyperbolicRoot& root, int dyadic_depth);

struct QmlNr {
  std::vector<MinorLeaf> kept;     // non-renormalizable minors + type2 roots
  std::vector<MinorLeaf> erased;   // minors inside maximal V-gaps + type1 roots
  std::vector<Chord> v_gap_edges;  // edges of the type2 gaps (leaves of the result)
  std::vector<Chord> ca_nr_edges;  // type1 gap edges minus each root minor
};

/// The non-renormalizable parameter lamination with its central-gap boundary.
QmlNr build_qml_nr(int max_period, int dyadic_depth);

namespace detail {

/// Digit-stream cores behind tune/untune; exposed for exhaustive checks that
/// must stay off reduced rationals.
DigitStream tune_stream(const HyperbolicRoot& root, const DigitStream& in);
std::optional<DigitStream> untune_stream(const HyperbolicRoot& root,
                                         const DigitStream& in);

}  // namespace detail

}  // namespace qlam
