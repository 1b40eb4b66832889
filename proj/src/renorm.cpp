#include "qlam/renorm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qlam {

namespace {

using detail::DigitStream;

std::vector<std::uint8_t> word_digits(const std::string& w) {
  std::vector<std::uint8_t> d;
  d.reserve(w.size());
  for (char c : w) d.push_back(static_cast<std::uint8_t>(c - '0'));
  return d;
}

/// Substitution at digit-stream level: 0 -> A, 1 -> B on both parts.
DigitStream tune_stream_words(const std::vector<std::uint8_t>& word_a,
                        const std::vector<std::uint8_t>& word_b, const DigitStream& in) {
  const std::size_t n = word_a.size();
  DigitStream out;
  out.pre_len = in.pre_len * n;
  out.digits.resize(in.digits.size() * n);
  std::uint8_t* dst = out.digits.data();
  const std::uint8_t* wa = word_a.data();
  const std::uint8_t* wb = word_b.data();
  for (const std::uint8_t d : in.digits) {
    const std::uint8_t* w = d ? wb : wa;
    for (std::size_t k = 0; k < n; ++k) dst[k] = w[k];
    dst += n;
  }
  return out;
}

/// Block parse at digit-stream level, anchored at position 0. The preperiod is
/// extended to a multiple of n by unrolling the period; the periodic block run
/// spans lcm(per_len, n) digits.
std::optional<DigitStream> untune_stream_words(const std::vector<std::uint8_t>& word_a,
                                         const std::vector<std::uint8_t>& word_b,
                                         const DigitStream& in) {
  const std::size_t n = word_a.size();
  const std::size_t pre_blocks = (in.pre_len + n - 1) / n;
  const std::size_t per_span = std::lcm(in.per_len(), n);
  const std::size_t per_blocks = per_span / n;

  DigitStream out;
  out.pre_len = pre_blocks;
  out.digits.reserve(pre_blocks + per_blocks);
  // sequential scan with wrap-around into the periodic part
  const std::uint8_t* src = in.digits.data();
  const std::size_t size = in.digits.size();
  std::size_t pos = 0;
  for (std::size_t b = 0; b < pre_blocks + per_blocks; ++b) {
    bool match_a = true, match_b = true;
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint8_t d = src[pos];
      if (++pos == size) pos = in.pre_len;
      match_a = match_a & (d == word_a[k]);
      match_b = match_b & (d == word_b[k]);
    }
    if (match_a) {
      out.digits.push_back(0);
    } else if (match_b) {
      out.digits.push_back(1);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace

HyperbolicRoot make_root(const Chord& minor) {
  if (minor.degenerate()) throw std::invalid_argument("root minor must be non-degenerate");
  if (!is_valid_minor(minor)) {
    throw std::invalid_argument("not a valid minor: " + minor.str());
  }
  HyperbolicRoot root;
  root.minor = make_minor(minor);
  root.period = root.minor.period;
  root.word_a = to_binary(minor.a()).per;
  root.word_b = to_binary(minor.b()).per;
  root.ctype = component_type(root.minor);
  return root;
}

namespace detail {

DigitStream tune_stream(const HyperbolicRoot& root, const DigitStream& in) {
  return tune_stream_words(word_digits(root.word_a), word_digits(root.word_b), in);
}

std::optional<DigitStream> untune_stream(const HyperbolicRoot& root,
                                         const DigitStream& in) {
  return untune_stream_words(word_digits(root.word_a), word_digits(root.word_b), in);
}

}  // namespace detail

BinaryExpansion tune_expansion(const HyperbolicRoot& root, const BinaryExpansion& e) {
  return detail::to_expansion(detail::tune_stream(root, detail::to_stream(e)));
}

Angle tune(const HyperbolicRoot& root, const Angle& t) {
  return from_binary(tune_expansion(root, to_binary(t)));
}

std::optional<BinaryExpansion> untune_expansion(const HyperbolicRoot& root,
                                                const BinaryExpansion& e) {
  const auto out = detail::untune_stream(root, detail::to_stream(e));
  if (!out) return std::nullopt;
  return detail::to_expansion(*out).canonicalize();
}

std::optional<Angle> untune(const HyperbolicRoot& root, const Angle& s) {
  const auto [term, co] = both_expansions(s);
  if (auto e = untune_expansion(root, term)) return from_binary(*e);
  if (!(co == term)) {
    if (auto e = untune_expansion(root, co)) return from_binary(*e);
  }
  return std::nullopt;
}

bool in_gap_V(const HyperbolicRoot& root, const Chord& c) {
  if (c == root.minor.chord) return false;
  return untune(root, c.a()).has_value() && untune(root, c.b()).has_value();
}

AncestorResult oldest_ancestor(const MinorLeaf& m,
                               const std::vector<HyperbolicRoot>& root_pool) {
  // the pool must cover every period below m's
  for (int n = 2; n < m.period; ++n) {
    const BigInt expected = periodic_angle_count(n) / 2;
    const auto present = std::count_if(root_pool.begin(), root_pool.end(),
                                       [n](const HyperbolicRoot& r) { return r.period == n; });
    if (BigInt(present) < expected) {
      throw std::invalid_argument("root pool is missing roots of period " +
                                  std::to_string(n));
    }
  }

  const HyperbolicRoot* best = nullptr;
  for (const HyperbolicRoot& r : root_pool) {
    if (r.period > m.period) continue;
    if (best && best->period <= r.period) continue;
    if (r.minor.chord == m.chord || in_gap_V(r, m.chord)) best = &r;
  }
  if (best) {
    if (best->ctype == ComponentType::CardioidEdge) return {true, std::nullopt};
    return {false, *best};
  }
  switch (component_type(m)) {
    case ComponentType::CardioidEdge:
      return {true, std::nullopt};
    case ComponentType::Primitive:
      return {false, make_root(m.chord)};
    case ComponentType::Satellite:
      break;
  }
  throw std::logic_error("satellite minor with no containing gap; pool insufficient");
}

std::pair<std::vector<HyperbolicRoot>, std::vector<HyperbolicRoot>>
maximal_roots(int max_period) {
  std::vector<HyperbolicRoot> type1, type2;
  for (const MinorLeaf& m : lavaurs_qml(max_period)) {
    switch (component_type(m)) {
      case ComponentType::CardioidEdge:
        type1.push_back(make_root(m.chord));
        break;
      case ComponentType::Primitive: {
        const auto contained = [&](const std::vector<HyperbolicRoot>& pool) {
          return std::any_of(pool.begin(), pool.end(), [&](const HyperbolicRoot& r) {
            return r.period < m.period && in_gap_V(r, m.chord);
          });
        };
        if (!contained(type1) && !contained(type2)) type2.push_back(make_root(m.chord));
        break;
      }
      case ComponentType::Satellite:
        break;  // always inside the parent's gap
    }
  }
  return {type1, type2};
}

std::vector<Chord> v_edges(const HyperbolicRoot& root, int dyadic_depth) {
  if (dyadic_depth < 0) throw std::invalid_argument("dyadic_depth must be >= 0");
  std::vector<Chord> edges;
  const auto edge_over = [&](const Angle& t) {
    const auto [term, co] = both_expansions(t);
    return Chord(from_binary(tune_expansion(root, term)),
                 from_binary(tune_expansion(root, co)));
  };
  edges.push_back(edge_over(Angle()));  // t = 0: the root minor itself
  for (int j = 1; j <= dyadic_depth; ++j) {
    const BigInt den = BigInt(1) << static_cast<unsigned>(j);
    for (BigInt k = 1; k < den; k += 2) {
      edges.push_back(edge_over(Angle::from_fraction(k, den)));
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

QmlNr build_qml_nr(int max_period, int dyadic_depth) {
  QmlNr result;
  const auto [type1, type2] = maximal_roots(max_period);

  std::set<Chord> type1_minors;
  for (const auto& r : type1) type1_minors.insert(r.minor.chord);

  for (const MinorLeaf& m : lavaurs_qml(max_period)) {
    const bool cardioid_edge = type1_minors.count(m.chord) > 0;
    const auto in_some_gap = [&](const std::vector<HyperbolicRoot>& pool) {
      return std::any_of(pool.begin(), pool.end(),
                         [&](const HyperbolicRoot& r) { return in_gap_V(r, m.chord); });
    };
    if (cardioid_edge || in_some_gap(type1) || in_some_gap(type2)) {
      result.erased.push_back(m);
    } else {
      result.kept.push_back(m);
    }
  }

  for (const auto& r : type2) {
    const auto edges = v_edges(r, dyadic_depth);
    result.v_gap_edges.insert(result.v_gap_edges.end(), edges.begin(), edges.end());
  }
  for (const auto& r : type1) {
    for (const auto& e : v_edges(r, dyadic_depth)) {
      if (e != r.minor.chord) result.ca_nr_edges.push_back(e);
    }
  }
  std::sort(result.v_gap_edges.begin(), result.v_gap_edges.end());
  std::sort(result.ca_nr_edges.begin(), result.ca_nr_edges.end());
  std::sort(result.kept.begin(), result.kept.end());
  std::sort(result.erased.begin(), result.erased.end());
  return result;
}

}  // namespace qlam
