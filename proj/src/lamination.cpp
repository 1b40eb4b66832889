#include "qlam/lamination.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qlam {

namespace {

struct TaggedLeaf {
  Chord chord;
  int gen;
};

void validate_unlinked(const std::vector<Chord>& leaves) {
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      if (linked(leaves[i], leaves[j])) {
        throw std::invalid_argument("crossing leaves: " + leaves[i].str() + " x " +
                                    leaves[j].str());
      }
    }
  }
}

}  // namespace

Lamination Lamination::from_leaves(std::vector<Chord> leaves, int degree, int depth,
                                   std::string provenance) {
  return from_leaves_tagged(std::move(leaves), {}, degree, depth, std::move(provenance));
}

Lamination Lamination::from_leaves_tagged(std::vector<Chord> leaves,
                                          std::vector<int> generations, int degree,
                                          int depth, std::string provenance) {
  if (generations.empty()) generations.assign(leaves.size(), 0);
  if (generations.size() != leaves.size()) {
    throw std::invalid_argument("generation tags do not match leaves");
  }
  std::vector<TaggedLeaf> tagged;
  tagged.reserve(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i].degenerate()) continue;  // implicit members, never stored
    tagged.push_back({leaves[i], generations[i]});
  }
  std::sort(tagged.begin(), tagged.end(), [](const TaggedLeaf& x, const TaggedLeaf& y) {
    if (x.chord != y.chord) return x.chord < y.chord;
    return x.gen < y.gen;
  });
  Lamination l;
  l.degree_ = degree;
  l.depth_ = depth;
  l.provenance_ = std::move(provenance);
  for (auto& t : tagged) {
    if (!l.leaves_.empty() && l.leaves_.back() == t.chord) continue;  // keep min gen
    l.leaves_.push_back(t.chord);
    l.generations_.push_back(t.gen);
  }
  validate_unlinked(l.leaves_);
  return l;
}

bool Lamination::contains(const Chord& c) const {
  return std::binary_search(leaves_.begin(), leaves_.end(), c);
}

std::vector<SiblingViolation> check_sibling_invariant(const Lamination& l,
                                                      int depth_budget) {
  std::vector<SiblingViolation> violations;
  const auto& leaves = l.leaves();
  const auto& gens = l.generations();

  // image chord -> indices of its stored preimages
  std::map<Chord, std::vector<std::size_t>> preimages;
  std::vector<Chord> images(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    images[i] = image_chord(l.degree(), leaves[i]);
    preimages[images[i]].push_back(i);
  }

  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const Chord& leaf = leaves[i];
    const int gen = gens[i];
    const Chord& img = images[i];

    if (gen >= 2 && !img.degenerate() && !l.contains(img)) {
      violations.push_back({leaf, 1});
    }
    if (gen <= depth_budget && preimages.find(leaf) == preimages.end()) {
      violations.push_back({leaf, 2});
    }
    if (!img.degenerate() && l.contains(img)) {
      const auto& sibs = preimages[img];
      const bool has_disjoint_sibling =
          std::any_of(sibs.begin(), sibs.end(), [&](std::size_t j) {
            return j != i && chords_disjoint(leaves[j], leaf);
          });
      if (!has_disjoint_sibling) violations.push_back({leaf, 3});
    }
  }
  return violations;
}

Rational hausdorff_distance(const Lamination& l1, const Lamination& l2) {
  const auto directed = [](const Lamination& from, const Lamination& to) {
    Rational worst = 0;
    for (const Chord& leaf : from.leaves()) {
      // nearest degenerate chord sits at the midpoint of the short arc
      Rational best = chord_length(leaf) / 2;
      for (const Chord& other : to.leaves()) {
        best = std::min(best, chord_metric(leaf, other));
        if (best == 0) break;
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(l1, l2), directed(l2, l1));
}

FiniteGap::FiniteGap(std::vector<Angle> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw std::invalid_argument("gap needs >= 3 vertices");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (!(vertices_[i - 1] < vertices_[i])) {
      throw std::invalid_argument("gap vertices must be strictly increasing");
    }
  }
}

std::vector<FiniteGap> extract_gaps(const Lamination& l) {
  const auto& leaves = l.leaves();
  std::vector<FiniteGap> gaps;
  if (leaves.empty()) return gaps;

  // Leaves, viewed as arcs (a,b) on the side away from the basepoint just
  // below angle 0, form a laminar family: order by (a asc, b desc) and
  // recover the nesting forest with a stack.
  std::vector<std::size_t> order(leaves.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (leaves[i].a() != leaves[j].a()) return leaves[i].a() < leaves[j].a();
    return leaves[j].b() < leaves[i].b();
  });

  std::vector<std::vector<std::size_t>> children(leaves.size());
  std::vector<std::size_t> roots;
  std::vector<std::size_t> stack;
  for (std::size_t idx : order) {
    while (!stack.empty() && leaves[stack.back()].b() < leaves[idx].b()) stack.pop_back();
    if (stack.empty()) {
      roots.push_back(idx);
    } else {
      children[stack.back()].push_back(idx);
    }
    stack.push_back(idx);
  }

  const auto face_from = [](const std::vector<Angle>& raw) -> std::optional<FiniteGap> {
    std::vector<Angle> verts;
    for (const Angle& v : raw) {
      if (verts.empty() || verts.back() != v) verts.push_back(v);
    }
    if (verts.size() >= 2 && verts.front() == verts.back()) verts.pop_back();
    if (verts.size() < 3) return std::nullopt;
    return FiniteGap(std::move(verts));
  };

  // face inside each chord, between it and its immediate children
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    std::vector<Angle> raw{leaves[i].a()};
    for (std::size_t c : children[i]) {
      raw.push_back(leaves[c].a());
      raw.push_back(leaves[c].b());
    }
    raw.push_back(leaves[i].b());
    if (auto g = face_from(raw)) gaps.push_back(std::move(*g));
  }
  // outermost face bounded by the root chords
  {
    std::vector<Angle> raw;
    for (std::size_t r : roots) {
      raw.push_back(leaves[r].a());
      raw.push_back(leaves[r].b());
    }
    if (auto g = face_from(raw)) gaps.push_back(std::move(*g));
  }

  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

bool is_combinatorial_rotation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (n == 0) return false;
  const int s = perm[0];
  for (int i = 0; i < n; ++i) {
    if (perm[i] != (i + s) % n) return false;
  }
  return true;
}

GapClass classify_finite_gap(const FiniteGap& g, int degree) {
  const std::vector<Angle>& verts = g.vertices();

  // iterate the vertex set until it repeats
  std::vector<std::set<Angle>> trajectory;
  std::map<std::set<Angle>, int> seen;
  std::set<Angle> current(verts.begin(), verts.end());
  int preperiod = -1, period = -1;
  for (;;) {
    auto it = seen.find(current);
    if (it != seen.end()) {
      preperiod = it->second;
      period = static_cast<int>(trajectory.size()) - it->second;
      break;
    }
    seen.emplace(current, static_cast<int>(trajectory.size()));
    trajectory.push_back(current);
    std::set<Angle> next;
    for (const Angle& v : current) next.insert(sigma(degree, v));
    current = std::move(next);
  }

  GapClass result;
  if (preperiod > 0) {
    // preperiodic gap: report the first-step covering degree, no period
    const std::size_t image_size = trajectory.size() > 1 ? trajectory[1].size()
                                                         : trajectory[0].size();
    result.tag = GapTag::FiniteNonRotational;
    result.degree = static_cast<int>(trajectory[0].size() / image_size);
    result.period = std::nullopt;
    return result;
  }

  // periodic: degree of the return map is the product of the step degrees
  int return_degree = 1;
  for (int k = 0; k < period; ++k) {
    const auto& from = trajectory[k];
    const auto& to = k + 1 < period ? trajectory[k + 1] : trajectory[0];
    return_degree *= static_cast<int>(from.size() / to.size());
  }

  std::vector<int> perm(verts.size());
  bool bijective = return_degree == 1;
  if (bijective) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const Angle img = sigma_iter(degree, verts[i], period);
      const auto it = std::lower_bound(verts.begin(), verts.end(), img);
      if (it == verts.end() || *it != img) {
        bijective = false;
        break;
      }
      perm[i] = static_cast<int>(it - verts.begin());
    }
  }

  result.tag = bijective && is_combinatorial_rotation(perm) ? GapTag::FiniteRotational
                                                            : GapTag::FiniteNonRotational;
  result.degree = return_degree;
  result.period = period;
  return result;
}

GapClass gap_class_from_symbolic(int period, int degree, bool countable_basis) {
  if (period < 1 || degree < 1) throw std::invalid_argument("bad symbolic gap data");
  GapClass g;
  g.period = period;
  g.degree = degree;
  if (degree >= 2) {
    g.tag = GapTag::FatouDegreeK;
  } else {
    g.tag = countable_basis ? GapTag::CaterpillarSymbolic : GapTag::SiegelSymbolic;
  }
  return g;
}

}  // namespace qlam
