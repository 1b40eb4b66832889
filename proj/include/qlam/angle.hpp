#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qlam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of the circle R/Z, stored as a reduced fraction in [0,1).
/// Immutable; all arithmetic is exact.
class Angle {
 public:
  Angle();  // angle 0

  /// Reduced representative of (num mod den)/den. Throws std::invalid_argument
  /// unless den > 0. num may be negative.
  static Angle from_fraction(BigInt num, BigInt den);

  /// Parses "p/q" or a bare integer ("0"). Throws std::invalid_argument on
  /// malformed input or zero denominator.
  static Angle parse(const std::string& text);

  const Rational& value() const { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  /// Denominator is a power of two (includes 0).
  bool is_dyadic() const;
  /// Denominator is odd, i.e. the angle is sigma_2-periodic.
  bool is_periodic() const;

  /// "p/q" in lowest terms; "0" for the zero angle.
  std::string str() const;

  bool operator==(const Angle& o) const { return key_ == o.key_ && value_ == o.value_; }
  std::strong_ordering operator<=>(const Angle& o) const {
    if (key_ != o.key_) return key_ <=> o.key_;
    if (value_ == o.value_) return std::strong_ordering::equal;
    return value_ < o.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  explicit Angle(Rational v);

  Rational value_;     // reduced, in [0,1)
  std::int64_t key_;   // floor(value * 2^62); ties broken exactly
};

/// value + circle fraction, reduced back into [0,1).
Angle angle_add(const Angle& value, const Rational& delta);

/// Exact circle distance min(|x-y|, 1-|x-y|).
Rational circle_distance(const Angle& x, const Angle& y);

/// d * a mod 1.
Angle sigma(int degree, const Angle& a);
/// sigma applied `count` times.
Angle sigma_iter(int degree, Angle a, int count);

struct OrbitInfo {
  int preperiod_length = 0;
  int period_length = 1;
  // orbit[i+1] = sigma_d(orbit[i]); size = preperiod_length + period_length + 1,
  // the last entry repeating orbit[preperiod_length].
  std::vector<Angle> orbit;
};

OrbitInfo orbit_info(int degree, const Angle& a);

/// Exact period of a periodic angle under sigma_2. Throws if a is not periodic.
int exact_period(const Angle& a);

/// Eventually periodic binary word: value = 0.pre(per)^inf in base 2.
/// Canonical form: per is primitive (not a power of a shorter word) and pre is
/// the shortest prefix realizing the stream.
struct BinaryExpansion {
  std::string pre;  // '0'/'1' chars, possibly empty
  std::string per;  // non-empty

  bool operator==(const BinaryExpansion&) const = default;

  /// Digit at stream position i (i >= 0).
  char digit(std::size_t i) const {
    if (i < pre.size()) return pre[i];
    return per[(i - pre.size()) % per.size()];
  }

  /// Normalizes to canonical form in place and returns *this.
  BinaryExpansion& canonicalize();

  /// The stream shifted left by one digit (image under doubling).
  BinaryExpansion shifted() const;

  std::string str() const;  // e.g. "0.01(10)"
};

/// Canonical expansion of a; terminating style for dyadic angles.
BinaryExpansion to_binary(const Angle& a);

/// Exact value of an expansion (mod 1). Inverse of to_binary on all angles.
Angle from_binary(const BinaryExpansion& e);

/// For dyadic angles the terminating form (...1(0)) and the co-form (...0(1));
/// for other angles both entries equal the canonical expansion.
std::pair<BinaryExpansion, BinaryExpansion> both_expansions(const Angle& a);

namespace detail {

/// Digit stream of a rational: pre_len leading digits then per_len repeating
/// digits, one byte per binary digit. The workhorse behind to_binary and the
/// tuning substitution; kept separate so bulk checks can stay off cpp_rational.
struct DigitStream {
  std::vector<std::uint8_t> digits;  // size = pre_len + per_len
  std::size_t pre_len = 0;

  std::size_t per_len() const { return digits.size() - pre_len; }
  std::uint8_t at(std::size_t i) const {
    return i < pre_len ? digits[i]
                       : digits[pre_len + (i - pre_len) % per_len()];
  }
};

/// Stream of (num mod den)/den. den > 0.
DigitStream digit_stream(const BigInt& num, const BigInt& den);
/// Fast path for small denominators.
DigitStream digit_stream_u64(std::uint64_t num, std::uint64_t den);

BinaryExpansion to_expansion(const DigitStream& s);
DigitStream to_stream(const BinaryExpansion& e);

}  // namespace detail

}  // namespace qlam
