#include "qlam/cleaning.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qlam {

namespace {

/// Endpoints of the periodic major; for the flip case the minor's own.
std::pair<Angle, Angle> periodic_major_endpoints(const MinorLeaf& m) {
  const PeriodicMajor pm = periodic_major(m);
  if (pm.flip) return {m.chord.a(), m.chord.b()};
  return {pm.major.a(), pm.major.b()};
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t i, std::size_t j) { parent[find(i)] = find(j); }
};

/// True iff the chords meet as point sets (equal, shared endpoint, or cross).
bool minor_sets_intersect(const Chord& x, const Chord& y) {
  if (x == y) return true;
  if (x.has_endpoint(y.a()) || x.has_endpoint(y.b())) return true;
  return linked(x, y);
}

EquivalencePartition finish_partition(const std::vector<std::string>& ids,
                                      const std::vector<Chord>& sets, UnionFind& uf) {
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < ids.size(); ++i) groups[uf.find(i)].push_back(i);

  struct Block {
    std::vector<std::string> members;
    std::vector<Angle> hull;
  };
  std::vector<Block> blocks;
  for (auto& [root, indices] : groups) {
    Block b;
    std::vector<Angle> hull;
    for (std::size_t i : indices) {
      b.members.push_back(ids[i]);
      hull.push_back(sets[i].a());
      hull.push_back(sets[i].b());
    }
    std::sort(b.members.begin(), b.members.end());
    std::sort(hull.begin(), hull.end());
    hull.erase(std::unique(hull.begin(), hull.end()), hull.end());
    b.hull = std::move(hull);
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return x.members < y.members; });

  EquivalencePartition out;
  for (auto& b : blocks) {
    out.blocks.push_back(std::move(b.members));
    out.block_minor_hulls.push_back(std::move(b.hull));
  }
  return out;
}

}  // namespace

QmlL build_qml_l(int max_period) {
  QmlL out;
  for (const MinorLeaf& m : lavaurs_qml(max_period)) {
    if (is_fixed_return(m)) {
      out.kept.push_back(m);
    } else {
      out.erased.push_back(m);
      out.retained_endpoints.push_back(m.chord.a());
      out.retained_endpoints.push_back(m.chord.b());
    }
  }
  std::sort(out.retained_endpoints.begin(), out.retained_endpoints.end());
  out.retained_endpoints.erase(
      std::unique(out.retained_endpoints.begin(), out.retained_endpoints.end()),
      out.retained_endpoints.end());
  return out;
}

std::string limit_case_name(LimitCase c) {
  switch (c) {
    case LimitCase::Case1FiniteCritical: return "case-1-finite-critical";
    case LimitCase::Case2aCriticalLeafPeriodicEndpoint:
      return "case-2a-critical-leaf-periodic-endpoint";
    case LimitCase::Case2bFixedReturnQuadrilateral:
      return "case-2b-fixed-return-quadrilateral";
    case LimitCase::SiegelSymbolic: return "siegel-symbolic";
    case LimitCase::IsolatedDendritic: return "isolated-dendritic";
    case LimitCase::IsolatedHyperbolic: return "isolated-hyperbolic";
  }
  return {};
}

LimitClass classify_limit(const CriticalPortrait& portrait,
                          const std::optional<MinorLeaf>& context_minor) {
  LimitClass out;
  out.witnesses.push_back(portrait);

  switch (portrait.kind()) {
    case CriticalPortrait::Kind::CriticalLeaf: {
      const Angle& v0 = portrait.vertices()[0];
      const Angle& v1 = portrait.vertices()[1];
      const Angle collapse = sigma(2, v0);
      if (v0.is_periodic() || v1.is_periodic()) {
        out.tag = LimitCase::Case2aCriticalLeafPeriodicEndpoint;
      } else {
        out.tag = LimitCase::Case1FiniteCritical;  // dendritic context
      }
      out.minor_set = {collapse};
      if (context_minor) {
        // the context's minor must contain the collapse point
        if (!context_minor->chord.has_endpoint(collapse)) {
          throw std::invalid_argument("context minor does not match the critical leaf");
        }
      }
      return out;
    }
    case CriticalPortrait::Kind::CriticalQuadrilateral: {
      const Chord img = portrait.image();
      out.minor_set = {img.a(), img.b()};
      if (!img.a().is_periodic() || !img.b().is_periodic()) {
        // the image chord is strictly preperiodic: dendritic context
        out.tag = LimitCase::Case1FiniteCritical;
        return out;
      }
      if (context_minor && context_minor->chord != img) {
        throw std::invalid_argument("context minor does not match the quadrilateral");
      }
      const MinorLeaf m = context_minor ? *context_minor : make_minor(img);
      out.tag = is_fixed_return(m) ? LimitCase::Case2bFixedReturnQuadrilateral
                                   : LimitCase::IsolatedHyperbolic;
      return out;
    }
    case CriticalPortrait::Kind::FiniteCriticalPolygon: {
      for (const Angle& v : portrait.vertices()) {
        if (v.is_periodic()) {
          throw std::invalid_argument("critical polygon with periodic vertices");
        }
      }
      out.tag = LimitCase::IsolatedDendritic;  // more than four vertices
      out.minor_set = portrait.image_vertices();
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<LimitClass> limit_class_of_qlam(const MinorLeaf& m) {
  if (m.chord.degenerate() || !is_valid_minor(m.chord)) {
    throw std::invalid_argument("not a hyperbolic minor: " + m.chord.str());
  }
  const auto [major_a, major_b] = periodic_major_endpoints(m);

  if (is_fixed_return(m)) {
    LimitClass cls;
    cls.tag = LimitCase::Case2bFixedReturnQuadrilateral;
    cls.witnesses.push_back(CriticalPortrait::critical_leaf(major_a));
    cls.witnesses.push_back(CriticalPortrait::critical_leaf(major_b));
    const Angle ha = Angle::from_fraction(m.chord.a().numerator(), m.chord.a().denominator() * 2);
    const Angle hb = Angle::from_fraction(m.chord.b().numerator(), m.chord.b().denominator() * 2);
    cls.witnesses.push_back(CriticalPortrait::critical_quadrilateral(
        {ha, angle_add(ha, Rational(1, 2)), hb, angle_add(hb, Rational(1, 2))}));
    cls.minor_set = {m.chord.a(), m.chord.b()};
    return {cls};
  }

  std::vector<LimitClass> classes;
  for (const Angle& endpoint : {major_a, major_b}) {
    LimitClass cls;
    cls.tag = LimitCase::Case2aCriticalLeafPeriodicEndpoint;
    cls.witnesses.push_back(CriticalPortrait::critical_leaf(endpoint));
    cls.minor_set = {sigma(2, endpoint)};
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::string limit_class_report(const std::string& identifier,
                               const std::vector<LimitClass>& classes) {
  std::string out;
  for (const LimitClass& cls : classes) {
    out += identifier;
    out += '\t';
    out += limit_case_name(cls.tag);
    out += '\t';
    for (std::size_t w = 0; w < cls.witnesses.size(); ++w) {
      if (w > 0) out += "; ";
      const auto& vertices = cls.witnesses[w].vertices();
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0) out += ' ';
        out += vertices[i].str();
      }
    }
    out += '\n';
  }
  return out;
}

EquivalencePartition minor_equivalence_classes(
    const std::vector<std::pair<std::string, Chord>>& items) {
  std::vector<std::string> ids;
  std::vector<Chord> sets;
  for (const auto& [id, chord] : items) {
    ids.push_back(id);
    sets.push_back(chord);
  }
  UnionFind uf(items.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (minor_sets_intersect(sets[i], sets[j])) uf.unite(i, j);
    }
  }
  return finish_partition(ids, sets, uf);
}

EquivalencePartition dendritic_quotient_classes(
    const std::vector<MinorLeaf>& kept,
    const std::vector<std::vector<Angle>>& gap_bases) {
  std::set<Angle> base_union;
  for (const auto& basis : gap_bases) {
    for (const Angle& a : basis) {
      if (!base_union.insert(a).second) {
        throw std::invalid_argument("gap bases overlap at " + a.str());
      }
    }
  }

  std::vector<Angle> angles;
  for (const auto& m : kept) {
    angles.push_back(m.chord.a());
    angles.push_back(m.chord.b());
  }
  for (const auto& basis : gap_bases) {
    angles.insert(angles.end(), basis.begin(), basis.end());
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

  const auto index_of = [&](const Angle& a) {
    return static_cast<std::size_t>(
        std::lower_bound(angles.begin(), angles.end(), a) - angles.begin());
  };
  UnionFind uf(angles.size());
  for (const auto& m : kept) uf.unite(index_of(m.chord.a()), index_of(m.chord.b()));
  for (const auto& basis : gap_bases) {
    for (std::size_t i = 1; i < basis.size(); ++i) {
      uf.unite(index_of(basis[0]), index_of(basis[i]));
    }
  }

  std::vector<std::string> ids;
  std::vector<Chord> point_sets;
  for (const Angle& a : angles) {
    ids.push_back(a.str());
    point_sets.emplace_back(a, a);
  }
  return finish_partition(ids, point_sets, uf);
}

}  // namespace qlam
