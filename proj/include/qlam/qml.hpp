#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qlam/chord.hpp"

namespace qlam {

/// A minor: a (possibly degenerate) chord whose endpoints are sigma_2-periodic
/// of equal exact period.
struct MinorLeaf {
  Chord chord;
  int period = 1;

  bool operator==(const MinorLeaf&) const = default;
  auto operator<=>(const MinorLeaf&) const = default;
};

/// Validates endpoint periodicity and equal periods.
MinorLeaf make_minor(const Chord& c);

/// All angles of exact period n under sigma_2.
std::vector<Angle> periodic_angles(int n);

/// Number of exact-period-n angles: sum over d | n of mu(n/d) (2^d - 1).
BigInt periodic_angle_count(int n);

/// Thurston's quadratic minor lamination, truncated to the given period:
/// for each period in increasing order, scan the exact-period angles from 0
/// and connect each unpaired angle to the smallest unpaired angle of the same
/// period whose chord crosses no chord created so far. Monotone in max_period.
std::vector<MinorLeaf> lavaurs_qml(int max_period);

/// The two majors: for degenerate {t} the critical leaf {t/2,(t+1)/2} twice,
/// otherwise the unique pairing of the endpoint preimages into two disjoint
/// chords of length >= 1/3, both mapping onto m.
std::pair<Chord, Chord> majors_of_minor(const Chord& m);

/// periodic_major result: either the major with periodic endpoints, or the
/// flip marker for the sigma_2-invariant minor {1/3,2/3}, whose periodic major
/// is the minor itself.
struct PeriodicMajor {
  bool flip = false;
  Chord major;  // meaningful iff !flip
};

PeriodicMajor periodic_major(const MinorLeaf& m);  // throws on degenerate m

/// True iff the chords m, sigma(m), ..., sigma^{k-1}(m) (k the endpoint
/// period) are pairwise disjoint point sets; equal chords count as meeting.
bool is_fixed_return(const MinorLeaf& m);

enum class ComponentType { CardioidEdge, Satellite, Primitive };

std::string component_type_name(ComponentType t);

/// Primitive iff fixed-return; cardioid-edge iff the hull of the endpoint
/// orbits is a single invariant polygon (or chord) rotated combinatorially by
/// sigma_2; satellite otherwise.
ComponentType component_type(const MinorLeaf& m);  // throws on degenerate m

/// Folklore verification predicate: no forward image crosses c, none is
/// strictly shorter, and the two majors are disjoint. Endpoints must be
/// periodic of equal exact period.
bool is_valid_minor(const Chord& c);

}  // namespace qlam
