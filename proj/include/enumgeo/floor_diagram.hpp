#pragma once

// Tropical counting with floor diagrams for the chopped rectangles of the
// blown quadric (the quadric is k = 0, the projective plane the full triangle).
//
// A floor diagram of a class (a, b, k) has a floors joined into a tree by a-1
// weighted elevators, b bottom ends and b-k top ends of weight 1. The
// divergence of a floor (weight entering from below minus weight leaving
// upward) is 0 or 1, with exactly k floors at divergence 1. A marking is a
// total order on floors, elevators and ends in which each elevator sits
// between its two floors, bottom ends precede their floor and top ends follow
// it; markings are counted up to diagram isomorphism.
//
// Floors are labelled by their rank in the marking, which quotients out floor
// automorphisms; identical ends on one floor are then the only symmetry left.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "enumgeo/big_integer.hpp"
#include "enumgeo/errors.hpp"
#include "enumgeo/lattice.hpp"

namespace enumgeo {

struct FloorProfile {
  int floors = 0;
  int bottom_ends = 0;
  int top_ends = 0;
  std::vector<int> divergences;  // multiset, ascending
};

/// Reads the profile off the Newton polygon: floor i spans heights [i, i+1]
/// and its divergence is the drop in slice width across it.
inline FloorProfile profile_for(const SurfaceClass& c) {
  const NewtonPolygon poly = polygon_for(c);
  FloorProfile p;
  p.floors = c.a;
  p.bottom_ends = poly.width_at(0);
  p.top_ends = poly.width_at(c.a);
  for (int i = 0; i < c.a; ++i) p.divergences.push_back(poly.width_at(i) - poly.width_at(i + 1));
  std::sort(p.divergences.begin(), p.divergences.end());
  return p;
}

/// Degree-d plane curves: the triangle, every floor at divergence 1.
inline FloorProfile plane_profile(int degree) {
  if (degree < 1) throw PolygonDegenerateError("plane degree must be positive");
  return {degree, degree, 0, std::vector<int>(degree, 1)};
}

struct Elevator {
  int lower = 0;
  int upper = 0;
  int weight = 1;
  friend auto operator<=>(const Elevator&, const Elevator&) = default;
};

struct FloorDiagram {
  int floors = 0;
  std::vector<int> divergence;  // per floor
  std::vector<Elevator> elevators;
  std::vector<int> bottom;  // floor of each bottom end, ascending
  std::vector<int> top;     // floor of each top end, ascending
};

struct DiagramClass {
  FloorDiagram diagram;
  BigInt markings;
};

inline BigInt complex_multiplicity(const FloorDiagram& d) {
  BigInt m = 1;
  for (const auto& e : d.elevators) m *= BigInt(e.weight) * e.weight;
  return m;
}

/// All-real-point multiplicity: an elevator of odd weight is dual to two
/// triangles without interior lattice points, so it contributes +1; any even
/// weight kills the diagram.
inline int welschinger_multiplicity(const FloorDiagram& d) {
  for (const auto& e : d.elevators)
    if (e.weight % 2 == 0) return 0;
  return 1;
}

namespace detail {

struct LabelledTree {
  std::vector<std::pair<int, int>> edges;  // (lower rank, upper rank)
  std::vector<std::uint32_t> lower_side;   // per edge: floors on the lower endpoint's side
};

inline std::vector<LabelledTree> labelled_trees(int n) {
  std::vector<LabelledTree> out;
  auto finish = [&](std::vector<std::pair<int, int>> edges) {
    LabelledTree t;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      std::uint32_t side = 1u << edges[e].first;
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t f = 0; f < edges.size(); ++f) {
          if (f == e) continue;
          const auto [u, v] = edges[f];
          const bool hu = side >> u & 1u, hv = side >> v & 1u;
          if (hu != hv) {
            side |= (1u << u) | (1u << v);
            grew = true;
          }
        }
      }
      t.lower_side.push_back(side);
    }
    t.edges = std::move(edges);
    out.push_back(std::move(t));
  };
  if (n == 1) {
    finish({});
    return out;
  }
  if (n == 2) {
    finish({{0, 1}});
    return out;
  }
  // Pruefer sequences of length n-2.
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
      --degree[leaf];
      --degree[x];
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i) {
      if (degree[i] == 1) (u < 0 ? u : v) = i;
    }
    edges.emplace_back(u, v);
    finish(std::move(edges));

    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return out;
}

inline void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int i = 0; i <= total; ++i) {
    cur.push_back(i);
    compositions(total - i, parts, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(total, parts, cur, out);
  return out;
}

/// Words in which floors 0..n-1 appear in order and every other element sits
/// in its allowed gap range; gap g lies between floor g-1 and floor g.
/// Elements of one group are indistinguishable.
class MarkingCounter {
 public:
  struct Group {
    int first_gap;
    int last_gap;
    int size;
  };

  MarkingCounter(int floors, std::vector<Group> groups) : floors_(floors), groups_(std::move(groups)) {}

  BigInt count() {
    std::vector<int> remaining;
    for (const auto& g : groups_) remaining.push_back(g.size);
    return walk(0, remaining);
  }

 private:
  BigInt walk(int gap, std::vector<int>& remaining) {
    bool empty = true;
    for (int r : remaining) empty = empty && r == 0;
    if (gap == floors_ && empty) return 1;
    auto key = std::make_pair(gap, remaining);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BigInt total = 0;
    bool floor_allowed = gap < floors_;
    for (std::size_t i = 0; i < groups_.size(); ++i) {
      if (remaining[i] == 0) continue;
      if (groups_[i].last_gap == gap) floor_allowed = false;
      if (groups_[i].first_gap <= gap && gap <= groups_[i].last_gap) {
        --remaining[i];
        total += walk(gap, remaining);
        ++remaining[i];
      }
    }
    if (floor_allowed) total += walk(gap + 1, remaining);
    memo_.emplace(std::move(key), total);
    return total;
  }

  int floors_;
  std::vector<Group> groups_;
  std::map<std::pair<int, std::vector<int>>, BigInt> memo_;
};

inline BigInt count_markings(const FloorDiagram& d) {
  std::vector<MarkingCounter::Group> groups;
  std::vector<int> bottom(d.floors, 0), top(d.floors, 0);
  for (int f : d.bottom) ++bottom[f];
  for (int f : d.top) ++top[f];
  for (int f = 0; f < d.floors; ++f) {
    if (bottom[f] > 0) groups.push_back({0, f, bottom[f]});
    if (top[f] > 0) groups.push_back({f + 1, d.floors, top[f]});
  }
  for (const auto& e : d.elevators) groups.push_back({e.lower + 1, e.upper, 1});
  return MarkingCounter(d.floors, std::move(groups)).count();
}

/// Canonical text of the unmarked diagram, independent of floor labels.
inline std::string canonical_form(const FloorDiagram& d) {
  std::vector<int> bottom(d.floors, 0), top(d.floors, 0);
  for (int f : d.bottom) ++bottom[f];
  for (int f : d.top) ++top[f];
  struct Link {
    int to;
    std::string tag;
  };
  std::vector<std::vector<Link>> links(d.floors);
  for (const auto& e : d.elevators) {
    links[e.lower].push_back({e.upper, "u" + std::to_string(e.weight)});
    links[e.upper].push_back({e.lower, "d" + std::to_string(e.weight)});
  }
  auto encode = [&](auto&& self, int v, int parent) -> std::string {
    std::vector<std::string> children;
    for (const auto& l : links[v]) {
      if (l.to == parent) continue;
      children.push_back(l.tag + self(self, l.to, v));
    }
    std::sort(children.begin(), children.end());
    std::string s = "[" + std::to_string(d.divergence[v]) + "," + std::to_string(bottom[v]) + "," +
                    std::to_string(top[v]);
    for (const auto& c : children) s += c;
    return s + "]";
  };
  std::string best;
  for (int r = 0; r < d.floors; ++r) {
    std::string s = encode(encode, r, -1);
    if (r == 0 || s < best) best = std::move(s);
  }
  return best;
}

/// Calls visit(diagram) for every rank-labelled diagram of the profile.
template <class Visit>
void for_each_labelled_diagram(const FloorProfile& p, Visit&& visit) {
  if (p.floors < 1 || p.floors > 31) throw PolygonDegenerateError("floor count out of range");
  const auto trees = labelled_trees(p.floors);
  const auto bottoms = compositions(p.bottom_ends, p.floors);
  const auto tops = compositions(p.top_ends, p.floors);
  std::vector<int> div = p.divergences;
  std::sort(div.begin(), div.end());

  std::vector<int> flux(p.floors);
  std::vector<int> weights;
  do {
    for (const auto& bot : bottoms) {
      for (const auto& tp : tops) {
        for (int v = 0; v < p.floors; ++v) flux[v] = bot[v] - tp[v] - div[v];
        for (const auto& tree : trees) {
          weights.clear();
          bool ok = true;
          for (const auto side : tree.lower_side) {
            int w = 0;
            for (int v = 0; v < p.floors; ++v)
              if (side >> v & 1u) w += flux[v];
            if (w < 1) {
              ok = false;
              break;
            }
            weights.push_back(w);
          }
          if (!ok) continue;
          FloorDiagram d;
          d.floors = p.floors;
          d.divergence = div;
          for (std::size_t e = 0; e < tree.edges.size(); ++e)
            d.elevators.push_back({tree.edges[e].first, tree.edges[e].second, weights[e]});
          for (int v = 0; v < p.floors; ++v) {
            d.bottom.insert(d.bottom.end(), bot[v], v);
            d.top.insert(d.top.end(), tp[v], v);
          }
          visit(d);
        }
      }
    }
  } while (std::next_permutation(div.begin(), div.end()));
}

}  // namespace detail

/// Isomorphism classes of floor diagrams with their marking counts, ordered
/// by canonical form.
inline std::vector<DiagramClass> enumerate_floor_diagrams(const FloorProfile& p) {
  std::map<std::string, DiagramClass> classes;
  detail::for_each_labelled_diagram(p, [&](const FloorDiagram& d) {
    const BigInt m = detail::count_markings(d);
    auto [it, inserted] = classes.try_emplace(detail::canonical_form(d), DiagramClass{d, 0});
    it->second.markings += m;
  });
  std::vector<DiagramClass> out;
  for (auto& [_, c] : classes) out.push_back(std::move(c));
  return out;
}

inline std::vector<DiagramClass> enumerate_floor_diagrams(const SurfaceClass& c) {
  return enumerate_floor_diagrams(profile_for(c));
}

struct TropicalCounts {
  BigInt complex = 0;
  BigInt real = 0;
};

inline TropicalCounts tropical_counts(const FloorProfile& p) {
  TropicalCounts t;
  detail::for_each_labelled_diagram(p, [&](const FloorDiagram& d) {
    const BigInt m = detail::count_markings(d);
    t.complex += complex_multiplicity(d) * m;
    t.real += welschinger_multiplicity(d) * m;
  });
  return t;
}

namespace detail {
// Classes with a = 0 or b = 0: only a single ruling line, possibly through
// the blown-up point, is an irreducible rational curve.
inline bool is_ruling_class(const SurfaceClass& c) {
  return ((c.a == 0 && c.b == 1) || (c.a == 1 && c.b == 0)) && (c.k == 0 || c.k == 1);
}
}  // namespace detail

inline TropicalCounts tropical_counts(const SurfaceClass& c) {
  if (c.a <= 0 || c.b <= 0) {
    const int v = detail::is_ruling_class(c) ? 1 : 0;
    return {v, v};
  }
  return tropical_counts(profile_for(c));
}

inline BigInt count_complex(const SurfaceClass& c) { return tropical_counts(c).complex; }

/// W(beta, s = 0).
inline BigInt count_welschinger_real(const SurfaceClass& c) { return tropical_counts(c).real; }

inline bool tropical_applicable(const SurfaceClass& c) {
  if (c.a <= 0 || c.b <= 0) return true;
  return c.k >= 0 && c.k <= std::min(c.a, c.b);
}

inline nlohmann::json to_json(const DiagramClass& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : c.diagram.elevators) edges.push_back({e.lower, e.upper, e.weight});
  nlohmann::json j;
  j["floors"] = c.diagram.floors;
  j["divergence"] = c.diagram.divergence;
  j["edges"] = std::move(edges);
  j["bottom"] = c.diagram.bottom;
  j["top"] = c.diagram.top;
  if (c.markings <= std::numeric_limits<std::int64_t>::max())
    j["markings"] = c.markings.convert_to<std::int64_t>();
  else
    j["markings"] = to_decimal(c.markings);
  return j;
}

inline nlohmann::json dump_diagrams(const std::vector<DiagramClass>& classes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : classes) out.push_back(to_json(c));
  return out;
}

}  // namespace enumgeo
