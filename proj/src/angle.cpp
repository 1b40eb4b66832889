#include "qlam/angle.hpp"

#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qlam {

namespace mp = boost::multiprecision;

namespace {

std::int64_t order_key(const Rational& v) {
  BigInt scaled = (mp::numerator(v) << 62) / mp::denominator(v);
  return scaled.convert_to<std::int64_t>();
}

}  // namespace

Angle::Angle() : value_(0), key_(0) {}

Angle::Angle(Rational v) : value_(std::move(v)), key_(order_key(value_)) {}

Angle Angle::from_fraction(BigInt num, BigInt den) {
  if (den <= 0) throw std::invalid_argument("angle denominator must be positive");
  BigInt r = num % den;
  if (r < 0) r += den;
  return Angle(Rational(r, den));
}

Angle Angle::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return from_fraction(BigInt(text), 1);
    return from_fraction(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed angle: " + text);
  }
}

bool Angle::is_dyadic() const {
  BigInt d = denominator();
  return (d & (d - 1)) == 0;
}

bool Angle::is_periodic() const { return (denominator() & 1) == 1; }

std::string Angle::str() const {
  if (value_ == 0) return "0";
  std::ostringstream os;
  os << numerator() << '/' << denominator();
  return os.str();
}

Angle angle_add(const Angle& value, const Rational& delta) {
  return Angle::from_fraction(
      mp::numerator(value.value()) * mp::denominator(delta) +
          mp::numerator(delta) * mp::denominator(value.value()),
      mp::denominator(value.value()) * mp::denominator(delta));
}

Rational circle_distance(const Angle& x, const Angle& y) {
  Rational d = x.value() - y.value();
  if (d < 0) d = -d;
  return d <= Rational(1, 2) ? d : 1 - d;
}

Angle sigma(int degree, const Angle& a) {
  return Angle::from_fraction(a.numerator() * degree, a.denominator());
}

Angle sigma_iter(int degree, Angle a, int count) {
  BigInt mult = mp::pow(BigInt(degree), static_cast<unsigned>(count));
  return Angle::from_fraction(a.numerator() * mult, a.denominator());
}

OrbitInfo orbit_info(int degree, const Angle& a) {
  OrbitInfo info;
  std::map<Angle, int> seen;
  std::vector<Angle> states{a};
  seen.emplace(a, 0);
  for (;;) {
    Angle next = sigma(degree, states.back());
    auto it = seen.find(next);
    if (it != seen.end()) {
      info.preperiod_length = it->second;
      info.period_length = static_cast<int>(states.size()) - it->second;
      states.push_back(next);  // closing repeat
      info.orbit = std::move(states);
      return info;
    }
    seen.emplace(next, static_cast<int>(states.size()));
    states.push_back(next);
  }
}

int exact_period(const Angle& a) {
  if (!a.is_periodic()) throw std::invalid_argument("angle is not periodic: " + a.str());
  // multiplicative order of 2 modulo the denominator
  const BigInt q = a.denominator();
  if (q == 1) return 1;
  BigInt t = 2 % q;
  int k = 1;
  while (t != 1) {
    t = (t * 2) % q;
    ++k;
  }
  return k;
}

BinaryExpansion& BinaryExpansion::canonicalize() {
  // primitive period word
  const std::size_t n = per.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = per[i] == per[i - d];
    if (repeats) {
      per.resize(d);
      break;
    }
  }
  // shortest preperiod: absorb matching tail digits by rotating the period
  while (!pre.empty() && pre.back() == per.back()) {
    per = per.back() + per.substr(0, per.size() - 1);
    pre.pop_back();
  }
  return *this;
}

BinaryExpansion BinaryExpansion::shifted() const {
  BinaryExpansion s;
  if (!pre.empty()) {
    s.pre = pre.substr(1);
    s.per = per;
  } else {
    s.per = per.substr(1) + per[0];
  }
  return s.canonicalize();
}

std::string BinaryExpansion::str() const { return "0." + pre + "(" + per + ")"; }

namespace detail {

DigitStream digit_stream_u64(std::uint64_t num, std::uint64_t den) {
  num %= den;
  if (const std::uint64_t g = std::gcd(num, den); g > 1) {
    num /= g;
    den /= g;
  }
  DigitStream s;
  const int e = std::countr_zero(den);
  const std::uint64_t m = den >> e;
  s.pre_len = static_cast<std::size_t>(e);
  std::size_t per = 1;
  if (m > 1) {
    std::uint64_t t = 2 % m;
    per = 1;
    while (t != 1) {
      t = (t * 2) % m;
      ++per;
    }
  }
  s.digits.reserve(s.pre_len + per);
  std::uint64_t x = num % den;
  for (std::size_t i = 0; i < s.pre_len + per; ++i) {
    x *= 2;
    s.digits.push_back(static_cast<std::uint8_t>(x >= den));
    if (x >= den) x -= den;
  }
  // dyadic: after the preperiod the stream is constant 0
  if (m == 1) s.digits.back() = 0;
  return s;
}

DigitStream digit_stream(const BigInt& num_in, const BigInt& den_in) {
  if (den_in <= (std::numeric_limits<std::uint64_t>::max)() >> 1 && num_in >= 0) {
    return digit_stream_u64(num_in.convert_to<std::uint64_t>(),
                            den_in.convert_to<std::uint64_t>());
  }
  BigInt num = num_in % den_in;
  BigInt den = den_in;
  if (const BigInt g = mp::gcd(num, den); g > 1) {
    num /= g;
    den /= g;
  }
  DigitStream s;
  const std::size_t e = den == 1 ? 0 : static_cast<std::size_t>(mp::lsb(den));
  const BigInt m = den >> e;
  s.pre_len = e;
  std::size_t per = 1;
  if (m > 1) {
    BigInt t = 2 % m;
    per = 1;
    while (t != 1) {
      t = (t * 2) % m;
      ++per;
    }
  }
  s.digits.reserve(s.pre_len + per);
  BigInt x = num % den;
  for (std::size_t i = 0; i < s.pre_len + per; ++i) {
    x <<= 1;
    const bool one = x >= den;
    s.digits.push_back(static_cast<std::uint8_t>(one));
    if (one) x -= den;
  }
  if (m == 1) s.digits.back() = 0;
  return s;
}

BinaryExpansion to_expansion(const DigitStream& s) {
  BinaryExpansion e;
  e.pre.reserve(s.pre_len);
  for (std::size_t i = 0; i < s.pre_len; ++i) e.pre.push_back('0' + s.digits[i]);
  e.per.reserve(s.digits.size() - s.pre_len);
  for (std::size_t i = s.pre_len; i < s.digits.size(); ++i) e.per.push_back('0' + s.digits[i]);
  return e;
}

DigitStream to_stream(const BinaryExpansion& e) {
  DigitStream s;
  s.pre_len = e.pre.size();
  s.digits.reserve(e.pre.size() + e.per.size());
  for (char c : e.pre) s.digits.push_back(static_cast<std::uint8_t>(c - '0'));
  for (char c : e.per) s.digits.push_back(static_cast<std::uint8_t>(c - '0'));
  return s;
}

}  // namespace detail

BinaryExpansion to_binary(const Angle& a) {
  return detail::to_expansion(detail::digit_stream(a.numerator(), a.denominator()));
}

Angle from_binary(const BinaryExpansion& e) {
  if (e.per.empty()) throw std::invalid_argument("expansion period must be non-empty");
  BigInt pre_int = 0;
  for (char c : e.pre) pre_int = (pre_int << 1) | (c == '1' ? 1 : 0);
  BigInt per_int = 0;
  for (char c : e.per) per_int = (per_int << 1) | (c == '1' ? 1 : 0);
  const BigInt pre_den = BigInt(1) << static_cast<unsigned>(e.pre.size());
  const BigInt per_den = (BigInt(1) << static_cast<unsigned>(e.per.size())) - 1;
  // pre_int/2^|pre| + per_int/(2^|pre| (2^|per| - 1))
  return Angle::from_fraction(pre_int * per_den + per_int, pre_den * per_den);
}

std::pair<BinaryExpansion, BinaryExpansion> both_expansions(const Angle& a) {
  BinaryExpansion term = to_binary(a);
  if (!a.is_dyadic()) return {term, term};
  if (a.is_zero()) return {term, BinaryExpansion{"", "1"}};
  BinaryExpansion co;
  co.pre = term.pre;
  co.pre.back() = '0';
  co.per = "1";
  return {term, co};
}

}  // namespace qlam
