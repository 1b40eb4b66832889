#pragma once

#include <compare>
#include <string>

#include "qlam/angle.hpp"

namespace qlam {

/// Unordered pair of circle points; degenerate when both coincide.
/// Stored with a() <= b() in the canonical [0,1) order.
class Chord {
 public:
  Chord() = default;  // degenerate chord at 0
  Chord(Angle x, Angle y);

  const Angle& a() const { return a_; }
  const Angle& b() const { return b_; }
  bool degenerate() const { return a_ == b_; }
  bool has_endpoint(const Angle& x) const { return a_ == x || b_ == x; }

  std::string str() const;

  bool operator==(const Chord&) const = default;
  std::strong_ordering operator<=>(const Chord& o) const {
    if (auto c = a_ <=> o.a_; c != 0) return c;
    return b_ <=> o.b_;
  }

 private:
  Angle a_, b_;
};

/// True iff the chords cross in the open disk. Degenerate chords never link;
/// a shared endpoint does not link.
bool linked(const Chord& c1, const Chord& c2);

/// Arc metric length min(|a-b|, 1-|a-b|), in [0, 1/2].
Rational chord_length(const Chord& c);

/// Chord with both endpoints multiplied by the degree (mod 1); may be degenerate.
Chord image_chord(int degree, const Chord& c);
Chord image_chord_iter(int degree, Chord c, int count);

/// Endpoints sum to an integer: invariant under conjugation, constant real part.
bool is_vertical(const Chord& c);

/// Disjoint as point sets: not equal, no shared endpoint, not linked.
bool chords_disjoint(const Chord& c1, const Chord& c2);

/// Endpoints have the same image under doubling (a diameter).
bool is_critical(const Chord& c);

/// min over the two endpoint matchings of max(circle_distance): the metric on
/// the space E of unordered endpoint pairs.
Rational chord_metric(const Chord& c1, const Chord& c2);

}  // namespace qlam
