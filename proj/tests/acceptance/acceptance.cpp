// Acceptance suite: runs every criterion with its stated tolerance and prints
// one pass/fail line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qlam/cleaning.hpp"
#include "qlam/cli.hpp"
#include "qlam/leaf_io.hpp"
#include "qlam/render.hpp"
#include "qlam/renorm.hpp"

using namespace qlam;

namespace {

Angle A(long long p, long long q) { return Angle::from_fraction(p, q); }
Chord C(long long p1, long long q1, long long p2, long long q2) {
  return Chord(A(p1, q1), A(p2, q2));
}

struct Harness {
  int failures = 0;
  int index = 0;

  void run(const std::string& name, const std::function<bool(std::string&)>& body) {
    ++index;
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %d. %s%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

bool pairwise_unlinked(const std::vector<Chord>& chords, std::string& detail) {
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (linked(chords[i], chords[j])) {
        detail = chords[i].str() + " crosses " + chords[j].str();
        return false;
      }
    }
  }
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<MinorLeaf> g_qml12;  // shared by criteria 1, 2 and 6

bool qml_counts(std::string& detail) {
  // oracle values computed by the Moebius sum before comparing
  std::vector<BigInt> oracle;
  for (int n = 2; n <= 12; ++n) oracle.push_back(periodic_angle_count(n) / 2);
  const std::vector<long long> frozen{1, 3, 6, 15, 27, 63, 120, 252, 495, 1023, 2010};
  for (std::size_t i = 0; i < frozen.size(); ++i) {
    if (oracle[i] != frozen[i]) {
      detail = "oracle disagrees with frozen counts";
      return false;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  g_qml12 = lavaurs_qml(12);
  const double elapsed = seconds_since(start);

  std::vector<long long> counts(13, 0);
  for (const MinorLeaf& m : g_qml12) counts[m.period] += 1;
  for (int n = 2; n <= 12; ++n) {
    if (BigInt(counts[n]) != oracle[n - 2]) {
      detail = "period " + std::to_string(n) + ": got " + std::to_string(counts[n]);
      return false;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "generated in %.2f s (budget 10 s)", elapsed);
  detail = buf;
  return elapsed < 10.0;
}

bool unlinkedness(std::string& detail) {
  std::vector<Chord> qml_chords;
  qml_chords.reserve(g_qml12.size());
  for (const MinorLeaf& m : g_qml12) qml_chords.push_back(m.chord);
  if (!pairwise_unlinked(qml_chords, detail)) return false;

  std::vector<Chord> kept_l;
  for (const MinorLeaf& m : build_qml_l(8).kept) kept_l.push_back(m.chord);
  if (!pairwise_unlinked(kept_l, detail)) return false;

  const QmlNr nr = build_qml_nr(8, 6);
  std::vector<Chord> nr_chords;
  for (const MinorLeaf& m : nr.kept) nr_chords.push_back(m.chord);
  nr_chords.insert(nr_chords.end(), nr.v_gap_edges.begin(), nr.v_gap_edges.end());
  nr_chords.insert(nr_chords.end(), nr.ca_nr_edges.begin(), nr.ca_nr_edges.end());
  std::sort(nr_chords.begin(), nr_chords.end());
  nr_chords.erase(std::unique(nr_chords.begin(), nr_chords.end()), nr_chords.end());
  if (!pairwise_unlinked(nr_chords, detail)) return false;

  detail = std::to_string(qml_chords.size()) + " qml, " + std::to_string(kept_l.size()) +
           " kept, " + std::to_string(nr_chords.size()) + " nr chords";
  return true;
}

bool cleaning_partition(std::string& detail) {
  // independent oracle: a minor is kept iff its chord orbit is pairwise
  // disjoint as point sets
  std::set<Chord> oracle_kept, oracle_erased;
  for (const MinorLeaf& m : lavaurs_qml(4)) {
    std::vector<Chord> orbit;
    Chord c = m.chord;
    for (int i = 0; i < m.period; ++i) {
      orbit.push_back(c);
      c = image_chord(2, c);
    }
    bool disjoint = true;
    for (std::size_t i = 0; i < orbit.size() && disjoint; ++i) {
      for (std::size_t j = i + 1; j < orbit.size() && disjoint; ++j) {
        const bool meet = orbit[i] == orbit[j] ||
                          orbit[i].has_endpoint(orbit[j].a()) ||
                          orbit[i].has_endpoint(orbit[j].b()) ||
                          linked(orbit[i], orbit[j]);
        if (meet) disjoint = false;
      }
    }
    (disjoint ? oracle_kept : oracle_erased).insert(m.chord);
  }

  const std::set<Chord> expected_erased{C(1, 3, 2, 3),     C(1, 7, 2, 7),
                                        C(5, 7, 6, 7),     C(1, 15, 2, 15),
                                        C(13, 15, 14, 15), C(2, 5, 3, 5)};
  const std::set<Chord> expected_kept{C(3, 7, 4, 7), C(1, 5, 4, 15), C(7, 15, 8, 15),
                                      C(11, 15, 4, 5)};
  if (oracle_kept != expected_kept || oracle_erased != expected_erased) {
    detail = "oracle enumeration disagrees with frozen sets";
    return false;
  }

  const QmlL result = build_qml_l(4);
  std::set<Chord> kept, erased;
  for (const MinorLeaf& m : result.kept) kept.insert(m.chord);
  for (const MinorLeaf& m : result.erased) erased.insert(m.chord);
  if (kept != expected_kept) {
    detail = "kept set mismatch";
    return false;
  }
  if (erased != expected_erased) {
    detail = "erased set mismatch";
    return false;
  }
  return true;
}

bool five_case_classes(std::string& detail) {
  const auto airplane = limit_class_of_qlam(make_minor(C(3, 7, 4, 7)));
  if (airplane.size() != 1 || airplane[0].witnesses.size() != 3) {
    detail = "airplane class structure";
    return false;
  }
  if (airplane[0].minor_set != std::vector<Angle>{A(3, 7), A(4, 7)}) {
    detail = "airplane hull";
    return false;
  }
  const std::set<std::vector<Angle>> witness_vertices{
      airplane[0].witnesses[0].vertices(), airplane[0].witnesses[1].vertices(),
      airplane[0].witnesses[2].vertices()};
  const std::set<std::vector<Angle>> expected_witnesses{
      {A(2, 7), A(11, 14)},
      {A(3, 14), A(5, 7)},
      {A(3, 14), A(2, 7), A(5, 7), A(11, 14)}};
  if (witness_vertices != expected_witnesses) {
    detail = "airplane witnesses";
    return false;
  }

  const auto rabbit = limit_class_of_qlam(make_minor(C(1, 7, 2, 7)));
  if (rabbit.size() != 2) {
    detail = "rabbit class count";
    return false;
  }
  const std::set<std::vector<Angle>> minor_sets{rabbit[0].minor_set,
                                                rabbit[1].minor_set};
  if (minor_sets != std::set<std::vector<Angle>>{{A(1, 7)}, {A(2, 7)}}) {
    detail = "rabbit minor sets";
    return false;
  }
  for (const auto& cls : rabbit) {
    if (cls.witnesses.size() != 1 ||
        cls.witnesses[0].kind() != CriticalPortrait::Kind::CriticalLeaf) {
      detail = "rabbit witnesses";
      return false;
    }
  }
  return true;
}

bool tuning_semiconjugacy(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();

  std::vector<HyperbolicRoot> roots;
  for (const MinorLeaf& m : lavaurs_qml(5)) roots.push_back(make_root(m.chord));

  long long pairs = 0;
  for (long long q = 1; q <= 1023; ++q) {
    for (long long p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto stream_t = detail::digit_stream_u64(p, q);
      const auto stream_st = detail::digit_stream_u64((2 * p) % q, q);
      for (const HyperbolicRoot& root : roots) {
        ++pairs;
        const std::size_t n = static_cast<std::size_t>(root.period);
        const auto sub = detail::tune_stream(root, stream_t);
        const std::size_t per = sub.per_len();

        // sigma^n o tune drops n leading digits; tune o sigma substitutes the
        // independently doubled angle's stream: equal shapes, equal digits
        const std::size_t shifted_pre = sub.pre_len >= n ? sub.pre_len - n : 0;
        if (stream_st.pre_len * n != shifted_pre || stream_st.per_len() * n != per) {
          detail = "stream shapes diverge at " + std::to_string(p) + "/" +
                   std::to_string(q);
          return false;
        }
        // walk the shifted stream sequentially (sub index j + n, wrapping
        // into the periodic part) against the substitution of stream_st
        std::size_t src = n;
        const std::size_t size = sub.digits.size();
        if (src >= size) src = sub.pre_len + (src - size);
        bool ok = true;
        for (std::size_t i = 0; ok && i < stream_st.digits.size(); ++i) {
          const std::string& w = stream_st.digits[i] ? root.word_b : root.word_a;
          for (std::size_t k = 0; k < n; ++k) {
            if (sub.digits[src] != static_cast<std::uint8_t>(w[k] - '0')) {
              ok = false;
              break;
            }
            if (++src == size) src = sub.pre_len;
          }
        }
        if (!ok) {
          detail = "semiconjugacy fails at " + std::to_string(p) + "/" +
                   std::to_string(q) + " root " + root.minor.chord.str();
          return false;
        }

        // untune(tune(t)) must reproduce t's stream exactly
        const auto parsed = detail::untune_stream(root, sub);
        if (!parsed || parsed->pre_len != stream_t.pre_len ||
            parsed->digits != stream_t.digits) {
          detail = "round trip fails at " + std::to_string(p) + "/" +
                   std::to_string(q) + " root " + root.minor.chord.str();
          return false;
        }
      }
    }
  }

  // reduced-rational cross-check on a subrange
  for (long long q = 1; q <= 127; ++q) {
    for (long long p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Angle t = A(p, q);
      for (const HyperbolicRoot& root : roots) {
        if (root.period > 4) continue;
        const Angle tuned = tune(root, t);
        if (sigma_iter(2, tuned, root.period) != tune(root, sigma(2, t))) {
          detail = "angle-level semiconjugacy fails at " + t.str();
          return false;
        }
        if (untune(root, tuned) != t) {
          detail = "angle-level round trip fails at " + t.str();
          return false;
        }
      }
    }
  }

  const double elapsed = seconds_since(start);
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%lld root-angle pairs in %.2f s (budget 30 s)",
                pairs, elapsed);
  detail = buf;
  return elapsed < 30.0;
}

bool renormalization_erasure(std::string& detail) {
  const auto [type1, type2] = maximal_roots(4);
  std::vector<HyperbolicRoot> roots = type1;
  roots.insert(roots.end(), type2.begin(), type2.end());

  const QmlNr nr = build_qml_nr(12, 0);
  std::set<Chord> erased;
  for (const MinorLeaf& m : nr.erased) erased.insert(m.chord);

  std::vector<HyperbolicRoot> pool;
  const std::vector<MinorLeaf>& all = g_qml12.empty() ? (g_qml12 = lavaurs_qml(12))
                                                      : g_qml12;
  pool.reserve(all.size());
  for (const MinorLeaf& m : all) pool.push_back(make_root(m.chord));

  int tuned_count = 0;
  for (const HyperbolicRoot& root : roots) {
    for (const MinorLeaf& mp : lavaurs_qml(3)) {
      const Chord tuned(tune(root, mp.chord.a()), tune(root, mp.chord.b()));
      ++tuned_count;
      if (erased.count(tuned) == 0) {
        detail = "tuned minor " + tuned.str() + " not erased";
        return false;
      }
      const AncestorResult ancestor = oldest_ancestor(make_minor(tuned), pool);
      if (root.ctype == ComponentType::CardioidEdge) {
        if (!ancestor.trivial) {
          detail = "expected trivial ancestor for " + tuned.str();
          return false;
        }
      } else {
        if (ancestor.trivial || ancestor.root->minor.chord != root.minor.chord) {
          detail = "ancestor mismatch for " + tuned.str();
          return false;
        }
      }
    }
  }
  detail = std::to_string(tuned_count) + " tuned minors checked";
  return true;
}

bool pullback_validity(std::string& detail) {
  int portraits = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Angle& x : periodic_angles(n)) {
      const Angle lift = Angle::from_fraction(x.numerator(), x.denominator() * 2);
      const Lamination lam = build_pullback(CriticalPortrait::critical_leaf(lift), 8);
      ++portraits;
      const auto violations = check_sibling_invariant(lam, 7);
      if (!violations.empty()) {
        detail = "critical leaf over " + x.str() + ": " +
                 std::to_string(violations.size()) + " violations";
        return false;
      }
    }
  }
  for (const MinorLeaf& m : lavaurs_qml(6)) {
    if (!is_fixed_return(m)) continue;  // quadrilateral portraits live over these
    const auto majors = majors_of_minor(m.chord);
    const auto quad = CriticalPortrait::critical_quadrilateral(
        {majors.first.a(), majors.first.b(), majors.second.a(), majors.second.b()});
    const Lamination lam = build_pullback(quad, 8);
    ++portraits;
    const auto violations = check_sibling_invariant(lam, 7);
    if (!violations.empty()) {
      detail = "quadrilateral over " + m.chord.str() + ": " +
               std::to_string(violations.size()) + " violations";
      return false;
    }
  }
  detail = std::to_string(portraits) + " portraits at depth 8";
  return true;
}

bool metric_sanity(std::string& detail) {
  std::mt19937_64 rng(20250810);
  const auto random_lamination = [&rng]() {
    std::vector<Chord> leaves;
    const int tries = 3 + static_cast<int>(rng() % 8);
    for (int i = 0; i < tries; ++i) {
      const long long q1 = 1 + static_cast<long long>(rng() % 255);
      const long long q2 = 1 + static_cast<long long>(rng() % 255);
      const Chord c(A(static_cast<long long>(rng() % q1), q1),
                    A(static_cast<long long>(rng() % q2), q2));
      if (c.degenerate()) continue;
      const bool crosses = std::any_of(leaves.begin(), leaves.end(),
                                       [&](const Chord& l) { return linked(c, l); });
      if (!crosses) leaves.push_back(c);
    }
    return Lamination::from_leaves(std::move(leaves));
  };

  for (int round = 0; round < 1000; ++round) {
    const Lamination x = random_lamination();
    const Lamination y = random_lamination();
    const Lamination z = random_lamination();
    if (hausdorff_distance(x, x) != 0) {
      detail = "d(L,L) != 0";
      return false;
    }
    const Rational dxy = hausdorff_distance(x, y);
    if (dxy != hausdorff_distance(y, x)) {
      detail = "asymmetric";
      return false;
    }
    if ((dxy == 0) != (x == y)) {
      detail = "zero without equality";
      return false;
    }
    if (hausdorff_distance(x, z) > dxy + hausdorff_distance(y, z)) {
      detail = "triangle inequality fails";
      return false;
    }
  }
  detail = "1000 random triples";
  return true;
}

bool rendering(std::string& detail) {
  const auto dir = std::filesystem::temp_directory_path() / "qlam-acceptance";
  std::filesystem::create_directories(dir);
  const auto leaves_path = (dir / "qml10.leaves").string();
  const auto svg1_path = (dir / "qml10-a.svg").string();
  const auto svg2_path = (dir / "qml10-b.svg").string();

  std::ostringstream sink;
  if (run_cli({"gen-qml", "--max-period", "10", "--out", leaves_path}, sink, sink) != 0) {
    detail = "gen-qml failed";
    return false;
  }
  const std::size_t leaf_count = read_leaf_file(leaves_path).chords.size();
  if (run_cli({"render", "--in", leaves_path, "--out", svg1_path}, sink, sink) != 0 ||
      run_cli({"render", "--in", leaves_path, "--out", svg2_path}, sink, sink) != 0) {
    detail = "render failed";
    return false;
  }
  const auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const std::string svg1 = slurp(svg1_path);
  if (svg1 != slurp(svg2_path)) {
    detail = "output differs across runs";
    return false;
  }
  std::size_t paths = 0, pos = 0;
  while ((pos = svg1.find("<path", pos)) != std::string::npos) {
    ++paths;
    pos += 5;
  }
  if (paths != leaf_count + 1) {
    detail = "path count " + std::to_string(paths) + " for " +
             std::to_string(leaf_count) + " leaves";
    return false;
  }
  detail = std::to_string(paths) + " paths, byte-identical";
  return true;
}

}  // namespace

int main() {
  Harness h;
  h.run("qml generation counts (periods 2..12, Moebius oracle, < 10 s)", qml_counts);
  h.run("unlinkedness of qml(12), qml^l kept(8), qml^nr(8,6)", unlinkedness);
  h.run("cleaning partition at period <= 4 vs orbit-disjointness oracle",
        cleaning_partition);
  h.run("five-case class structure for {3/7,4/7} and {1/7,2/7}", five_case_classes);
  h.run("tuning semiconjugacy and round trip (roots <= 5, denominators <= 1023, < 30 s)",
        tuning_semiconjugacy);
  h.run("renormalization erasure and oldest ancestors", renormalization_erasure);
  h.run("pullback validity (periodic portraits <= 6, depth 8)", pullback_validity);
  h.run("hausdorff metric axioms on 1000 random triples", metric_sanity);
  h.run("rendering: path count and byte-identical output", rendering);
  if (h.failures == 0) {
    std::printf("all %d acceptance criteria passed\n", h.index);
  } else {
    std::printf("%d of %d acceptance criteria failed\n", h.failures, h.index);
  }
  return h.failures;
}
