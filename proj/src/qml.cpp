#include "qlam/qml.hpp"

#include "qlam/lamination.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlam {

MinorLeaf make_minor(const Chord& c) {
  const int pa = exact_period(c.a());
  if (!c.degenerate() && pa != exact_period(c.b())) {
    throw std::invalid_argument("minor endpoints must have equal exact period: " +
                                c.str());
  }
  return MinorLeaf{c, pa};
}

std::vector<Angle> periodic_angles(int n) {
  if (n < 1) throw std::invalid_argument("period must be >= 1");
  std::vector<Angle> out;
  const BigInt den = (BigInt(1) << static_cast<unsigned>(n)) - 1;
  for (BigInt k = 0; k < den; ++k) {
    Angle a = Angle::from_fraction(k, den);
    if (exact_period(a) == n) out.push_back(a);
  }
  return out;
}

BigInt periodic_angle_count(int n) {
  // sum over d | n of mu(n/d) (2^d - 1)
  const auto mobius = [](int m) {
    int mu = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p != 0) continue;
      m /= p;
      if (m % p == 0) return 0;
      mu = -mu;
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  BigInt total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    total += mobius(n / d) * ((BigInt(1) << static_cast<unsigned>(d)) - 1);
  }
  return total;
}

std::vector<MinorLeaf> lavaurs_qml(int max_period) {
  if (max_period < 2) throw std::invalid_argument("max_period must be >= 2");
  std::vector<MinorLeaf> minors;
  std::vector<Chord> existing;
  for (int n = 2; n <= max_period; ++n) {
    const std::vector<Angle> angles = periodic_angles(n);
    std::vector<bool> paired(angles.size(), false);
    for (std::size_t i = 0; i < angles.size(); ++i) {
      if (paired[i]) continue;
      bool found = false;
      for (std::size_t j = i + 1; j < angles.size() && !found; ++j) {
        if (paired[j]) continue;
        Chord candidate(angles[i], angles[j]);
        const bool crosses = std::any_of(existing.begin(), existing.end(),
                                         [&](const Chord& c) { return linked(candidate, c); });
        if (!crosses) {
          paired[i] = paired[j] = true;
          existing.push_back(candidate);
          minors.push_back(MinorLeaf{candidate, n});
          found = true;
        }
      }
      if (!found) {
        throw std::logic_error("lavaurs pairing failed at angle " + angles[i].str());
      }
    }
  }
  return minors;
}

std::pair<Chord, Chord> majors_of_minor(const Chord& m) {
  const Angle half_a = Angle::from_fraction(m.a().numerator(), m.a().denominator() * 2);
  const Angle half_a1 = angle_add(half_a, Rational(1, 2));
  if (m.degenerate()) {
    const Chord leaf(half_a, half_a1);
    return {leaf, leaf};
  }
  const Angle half_b = Angle::from_fraction(m.b().numerator(), m.b().denominator() * 2);
  const Angle half_b1 = angle_add(half_b, Rational(1, 2));
  // the two pairings of the four preimage endpoints; the majors are the longer
  const std::pair<Chord, Chord> straight{Chord(half_a, half_b), Chord(half_a1, half_b1)};
  const std::pair<Chord, Chord> crossed{Chord(half_a, half_b1), Chord(half_a1, half_b)};
  const Rational len_straight =
      std::min(chord_length(straight.first), chord_length(straight.second));
  const Rational len_crossed =
      std::min(chord_length(crossed.first), chord_length(crossed.second));
  auto majors = len_straight >= len_crossed ? straight : crossed;
  if (majors.second < majors.first) std::swap(majors.first, majors.second);
  return majors;
}

PeriodicMajor periodic_major(const MinorLeaf& m) {
  if (m.chord.degenerate()) throw std::invalid_argument("degenerate minor has no major pair");
  const auto majors = majors_of_minor(m.chord);
  for (const Chord& major : {majors.first, majors.second}) {
    if (major.a().is_periodic() && major.b().is_periodic()) {
      if (major == m.chord) return {true, {}};  // sigma-invariant flip case
      return {false, major};
    }
  }
  return {true, {}};
}

bool is_fixed_return(const MinorLeaf& m) {
  if (m.chord.degenerate()) throw std::invalid_argument("degenerate minor");
  std::vector<Chord> orbit;
  orbit.reserve(m.period);
  Chord c = m.chord;
  for (int i = 0; i < m.period; ++i) {
    orbit.push_back(c);
    c = image_chord(2, c);
  }
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t j = i + 1; j < orbit.size(); ++j) {
      if (!chords_disjoint(orbit[i], orbit[j])) return false;
    }
  }
  return true;
}

std::string component_type_name(ComponentType t) {
  switch (t) {
    case ComponentType::CardioidEdge: return "cardioid-edge";
    case ComponentType::Satellite: return "satellite";
    case ComponentType::Primitive: return "primitive";
  }
  return {};
}

ComponentType component_type(const MinorLeaf& m) {
  if (m.chord.degenerate()) throw std::invalid_argument("degenerate minor");
  if (is_fixed_return(m)) return ComponentType::Primitive;

  // hull of the union of the endpoint orbits
  std::vector<Angle> hull;
  for (const Angle& start : {m.chord.a(), m.chord.b()}) {
    Angle x = start;
    for (int i = 0; i < m.period; ++i) {
      hull.push_back(x);
      x = sigma(2, x);
    }
  }
  std::sort(hull.begin(), hull.end());
  hull.erase(std::unique(hull.begin(), hull.end()), hull.end());

  std::vector<int> perm(hull.size());
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Angle img = sigma(2, hull[i]);
    const auto it = std::lower_bound(hull.begin(), hull.end(), img);
    if (it == hull.end() || *it != img) return ComponentType::Satellite;  // not invariant
    perm[i] = static_cast<int>(it - hull.begin());
  }
  return is_combinatorial_rotation(perm) ? ComponentType::CardioidEdge
                                         : ComponentType::Satellite;
}

bool is_valid_minor(const Chord& c) {
  const MinorLeaf m = make_minor(c);  // rejects unequal endpoint periods
  if (c.degenerate()) return true;
  Chord img = c;
  for (int i = 1; i < m.period; ++i) {
    img = image_chord(2, img);
    if (linked(img, c)) return false;
    if (chord_length(img) < chord_length(c)) return false;
  }
  const auto majors = majors_of_minor(c);
  return majors.first == majors.second || chords_disjoint(majors.first, majors.second);
}

}  // namespace qlam
