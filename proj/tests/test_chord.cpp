#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qlam/chord.hpp"

using namespace qlam;

namespace {

Angle A(long long p, long long q) { return Angle::from_fraction(p, q); }
Chord C(long long p1, long long q1, long long p2, long long q2) {
  return Chord(A(p1, q1), A(p2, q2));
}

Angle random_angle(std::mt19937_64& rng, long long max_den) {
  const long long q = 1 + static_cast<long long>(rng() % max_den);
  return A(static_cast<long long>(rng() % q), q);
}

}  // namespace

TEST_CASE("linked worked examples") {
  CHECK(linked(C(0, 1, 1, 2), C(1, 4, 3, 4)));
  CHECK_FALSE(linked(C(1, 7, 2, 7), C(5, 7, 6, 7)));
  CHECK(linked(C(1, 7, 4, 7), C(2, 7, 6, 7)));
  // degenerate chords never link; shared endpoints do not link
  CHECK_FALSE(linked(C(1, 3, 1, 3), C(1, 4, 3, 4)));
  CHECK_FALSE(linked(C(1, 3, 2, 3), C(1, 3, 5, 6)));
}

TEST_CASE("linked is symmetric and irreflexive") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 3000; ++i) {
    const Chord c1(random_angle(rng, 60), random_angle(rng, 60));
    const Chord c2(random_angle(rng, 60), random_angle(rng, 60));
    CHECK(linked(c1, c2) == linked(c2, c1));
    CHECK_FALSE(linked(c1, c1));
  }
}

TEST_CASE("chord_length") {
  CHECK(chord_length(C(0, 1, 1, 2)) == Rational(1, 2));
  CHECK(chord_length(C(1, 7, 2, 7)) == Rational(1, 7));
  CHECK(chord_length(C(1, 14, 9, 14)) == Rational(3, 7));
  CHECK(chord_length(C(1, 3, 1, 3)) == 0);
}

TEST_CASE("image_chord") {
  CHECK(image_chord(2, C(1, 3, 2, 3)) == C(1, 3, 2, 3));
  CHECK(image_chord(2, C(1, 4, 3, 4)) == C(1, 2, 1, 2));
  CHECK(image_chord(2, C(1, 4, 3, 4)).degenerate());
  CHECK(image_chord(2, C(3, 7, 4, 7)) == C(6, 7, 1, 7));
}

TEST_CASE("image endpoint denominators divide the source denominators") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 3000; ++i) {
    const Angle a = random_angle(rng, 500);
    CHECK(a.denominator() % sigma(2, a).denominator() == 0);
  }
}

TEST_CASE("is_vertical") {
  CHECK(is_vertical(C(1, 4, 3, 4)));
  CHECK(is_vertical(C(1, 3, 2, 3)));
  CHECK_FALSE(is_vertical(C(1, 7, 2, 7)));
  CHECK_FALSE(is_vertical(C(0, 1, 1, 2)));  // the horizontal diameter
  CHECK(is_vertical(C(0, 1, 0, 1)));
}

TEST_CASE("chords_disjoint and is_critical") {
  CHECK(chords_disjoint(C(3, 7, 4, 7), C(6, 7, 1, 7)));
  CHECK_FALSE(chords_disjoint(C(1, 7, 2, 7), C(2, 7, 4, 7)));
  CHECK_FALSE(chords_disjoint(C(1, 3, 2, 3), C(1, 3, 2, 3)));
  CHECK(is_critical(C(1, 4, 3, 4)));
  CHECK(is_critical(C(1, 6, 2, 3)));
  CHECK_FALSE(is_critical(C(1, 3, 2, 3)));
}

TEST_CASE("chord_metric is a metric") {
  CHECK(chord_metric(C(1, 7, 2, 7), C(1, 7, 2, 7)) == 0);
  CHECK(chord_metric(C(3, 7, 4, 7), C(1, 2, 1, 2)) == Rational(1, 14));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 2000; ++i) {
    const Chord x(random_angle(rng, 40), random_angle(rng, 40));
    const Chord y(random_angle(rng, 40), random_angle(rng, 40));
    const Chord z(random_angle(rng, 40), random_angle(rng, 40));
    CHECK(chord_metric(x, y) == chord_metric(y, x));
    CHECK(chord_metric(x, y) >= 0);
    if (x == y) CHECK(chord_metric(x, y) == 0);
    if (chord_metric(x, y) == 0) CHECK(x == y);
    CHECK(chord_metric(x, z) <= chord_metric(x, y) + chord_metric(y, z));
  }
}
