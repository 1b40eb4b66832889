#include "qlam/chord.hpp"

#include <algorithm>

namespace qlam {

Chord::Chord(Angle x, Angle y) {
  if (y < x) std::swap(x, y);
  a_ = std::move(x);
  b_ = std::move(y);
}

std::string Chord::str() const {
  if (degenerate()) return a_.str();
  return a_.str() + " " + b_.str();
}

bool linked(const Chord& c1, const Chord& c2) {
  if (c1.degenerate() || c2.degenerate()) return false;
  const auto inside = [&](const Angle& x) { return c1.a() < x && x < c1.b(); };
  const auto outside = [&](const Angle& x) { return x < c1.a() || c1.b() < x; };
  return (inside(c2.a()) && outside(c2.b())) || (inside(c2.b()) && outside(c2.a()));
}

Rational chord_length(const Chord& c) {
  Rational d = c.b().value() - c.a().value();
  return d <= Rational(1, 2) ? d : 1 - d;
}

Chord image_chord(int degree, const Chord& c) {
  return Chord(sigma(degree, c.a()), sigma(degree, c.b()));
}

Chord image_chord_iter(int degree, Chord c, int count) {
  return Chord(sigma_iter(degree, c.a(), count), sigma_iter(degree, c.b(), count));
}

bool is_vertical(const Chord& c) {
  const Rational s = c.a().value() + c.b().value();
  return boost::multiprecision::denominator(s) == 1;
}

bool chords_disjoint(const Chord& c1, const Chord& c2) {
  if (c1 == c2) return false;
  if (c1.has_endpoint(c2.a()) || c1.has_endpoint(c2.b())) return false;
  return !linked(c1, c2);
}

bool is_critical(const Chord& c) {
  return !c.degenerate() && sigma(2, c.a()) == sigma(2, c.b());
}

Rational chord_metric(const Chord& c1, const Chord& c2) {
  const Rational straight =
      std::max(circle_distance(c1.a(), c2.a()), circle_distance(c1.b(), c2.b()));
  const Rational crossed =
      std::max(circle_distance(c1.a(), c2.b()), circle_distance(c1.b(), c2.a()));
  return std::min(straight, crossed);
}

}  // namespace qlam
