#pragma once

// Hand-built maps and independent oracles shared across the test suites.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "tess/curvature.hpp"
#include "tess/generators.hpp"
#include "tess/planar_map.hpp"

namespace fixtures {

using namespace tess;

// A single m-gon with its reverse side as boundary face: the disk a core
// or cap contributes to a gluing.
inline Patch disk_patch(int m) {
  std::vector<VertexId> cycle(m);
  std::iota(cycle.begin(), cycle.end(), 0);
  auto [map, closing] = PlanarMap::from_faces_with_closure({cycle});
  return {std::move(map), std::move(closing)};
}

// Annulus of n squares between two n-cycles: inner labels 0..n-1, outer
// n..2n-1. Each seam vertex of a self-gluing ends up with pattern
// (4,4,4,4), so the band repeats flatly forever.
inline Patch square_band_annulus(int n) {
  std::vector<std::vector<VertexId>> faces;
  for (int i = 0; i < n; ++i)
    faces.push_back({i, (i + 1) % n, n + (i + 1) % n, n + i});
  auto [map, closing] = PlanarMap::from_faces_with_closure(faces);
  return {std::move(map), std::move(closing)};
}

// Annulus of t heptagons and t triangles: inner cycle 0..3t-1 (three inner
// vertices per heptagon), outer cycle of u/m/w vertices. Heptagons cannot
// continue flatly: every self-gluing seam picks up nonzero curvature, e.g.
// a (3,7,7) vertex with Phi = 5/42.
inline Patch hepta_band_annulus(int t) {
  int base = 3 * t;
  auto inner = [&](int j) { return j % (3 * t); };
  auto u = [&](int j) { return base + 3 * (j % t); };
  auto m = [&](int j) { return base + 3 * (j % t) + 1; };
  auto w = [&](int j) { return base + 3 * (j % t) + 2; };
  std::vector<std::vector<VertexId>> faces;
  for (int j = 0; j < t; ++j) {
    faces.push_back({inner(3 * j), inner(3 * j + 1), inner(3 * j + 2),
                     inner(3 * j + 3), w(j), m(j), u(j)});
    faces.push_back({inner(3 * j + 3), u(j + 1), w(j)});
  }
  auto [map, closing] = PlanarMap::from_faces_with_closure(faces);
  return {std::move(map), std::move(closing)};
}

// An 18-gon wrapped in a ring of faces with the given degrees (3, 4 or 5);
// ring face i sits on core edge (i, i+1). Interior vertex i has pattern
// {ring[i-1], ring[i], 18}, so a ring like 5,4,4,3,4,...  manufactures bad
// (4,5,18) vertices a couple of steps from good (3,4,18) ones.
inline Patch ring_patch(const std::vector<int>& ring_degrees) {
  int n = static_cast<int>(ring_degrees.size());
  std::vector<VertexId> core(n);
  std::iota(core.begin(), core.end(), 0);
  std::vector<std::vector<VertexId>> faces = {core};
  // l[i]: outer vertex shared by ring faces i-1 and i (merged when face
  // i-1 is a triangle)
  std::vector<VertexId> l(n + 1);
  VertexId next = n;
  l[0] = next++;
  for (int i = 0; i < n; ++i)
    l[i + 1] = ring_degrees[i] == 3 ? l[i] : next++;
  if (ring_degrees[n - 1] == 3)
    l[0] = l[n - 1];  // triangle in the last slot merges across the start
  l[n] = l[0];
  for (int i = 0; i < n; ++i) {
    int a = core[(i + 1) % n], b = core[i];
    switch (ring_degrees[i]) {
      case 3:
        faces.push_back({a, b, l[i]});
        break;
      case 4:
        faces.push_back({a, b, l[i], l[i + 1]});
        break;
      case 5:
        faces.push_back({a, b, l[i], next, l[i + 1]});
        ++next;
        break;
      default:
        fail(errc::invalid_argument, "ring degree must be 3..5");
    }
  }
  auto [map, closing] = PlanarMap::from_faces_with_closure(faces);
  return {std::move(map), std::move(closing)};
}

// The n-gon face whose vertices all have labels < n (the "top" ring of a
// prism or antiprism as generated).
inline int top_face(const PlanarMap& m, int n) {
  for (int f = 0; f < m.face_count(); ++f) {
    if (m.face_degree(f) != n) continue;
    auto cyc = m.face_cycle_labels(f);
    if (std::all_of(cyc.begin(), cyc.end(), [&](VertexId v) { return v < n; }))
      return f;
  }
  fail(errc::invalid_argument, "no top face");
}

// Top n-gon plus only the triangles leaning on it; the boundary is the
// zigzag through both rings.
inline Patch antiprism_half(int n) {
  PlanarMap ap = antiprism(n);
  std::vector<std::vector<VertexId>> faces;
  for (int f = 0; f < ap.face_count(); ++f) {
    auto cyc = ap.face_cycle_labels(f);
    int tops = static_cast<int>(
        std::count_if(cyc.begin(), cyc.end(), [&](VertexId v) { return v < n; }));
    if ((cyc.size() == static_cast<std::size_t>(n) && tops == n) ||
        (cyc.size() == 3 && tops == 2))
      faces.push_back(cyc);
  }
  auto [map, closing] = PlanarMap::from_faces_with_closure(faces);
  return {std::move(map), std::move(closing)};
}

// Exhaustive adjacency-based automorphism count, independent of the flag
// propagation: backtracks over vertex bijections preserving adjacency,
// then counts the (bijection, orientation) pairs whose images respect
// every cyclic neighbor order (orientation applied globally).
inline int brute_force_aut_count(const PlanarMap& m) {
  int n = m.vertex_count();
  std::vector<std::set<int>> adj(n);
  std::vector<std::vector<VertexId>> rot_labels(n);
  for (int vi = 0; vi < n; ++vi)
    for (int d : m.rotation(vi)) {
      adj[vi].insert(m.target(d));
      rot_labels[vi].push_back(m.label(m.target(d)));
    }

  auto cyclic_eq = [](const std::vector<VertexId>& a,
                      std::vector<VertexId> b) {
    if (a.size() != b.size()) return false;
    for (std::size_t r = 0; r < b.size(); ++r) {
      if (std::equal(a.begin(), a.end(), b.begin())) return true;
      std::rotate(b.begin(), b.begin() + 1, b.end());
    }
    return false;
  };

  int count = 0;
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> place = [&](int vi) {
    if (vi == n) {
      for (bool reversed : {false, true}) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
          std::vector<VertexId> mapped;
          for (int d : m.rotation(v))
            mapped.push_back(m.label(image[m.target(d)]));
          if (reversed) std::reverse(mapped.begin(), mapped.end());
          ok = cyclic_eq(rot_labels[image[v]], mapped);
        }
        count += ok;
      }
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || adj[cand].size() != adj[vi].size()) continue;
      bool ok = true;
      for (int w : adj[vi])
        if (image[w] >= 0 && !adj[cand].count(image[w])) ok = false;
      for (int w = 0; w < vi && ok; ++w)
        if ((adj[vi].count(w) > 0) != (adj[cand].count(image[w]) > 0))
          ok = false;
      if (!ok) continue;
      image[vi] = cand;
      used[cand] = 1;
      place(vi + 1);
      used[cand] = 0;
      image[vi] = -1;
    }
  };
  place(0);
  return count;
}

// All degree patterns (nondecreasing, entries >= 3, lengths 3..6) whose
// curvature can still reach `floor`, fed to the callback.
inline void for_each_pattern_at_least(
    int max_entry, const Q& floor,
    const std::function<void(const Pattern&)>& fn) {
  Pattern p;
  std::function<void(int)> rec = [&](int n) {
    if (static_cast<int>(p.size()) == n) {
      if (pattern_curvature(p) >= floor) fn(p);
      return;
    }
    int rest = n - static_cast<int>(p.size());
    Q partial = 1 - Q(n, 2);
    for (int x : p) partial += Q(1, x);
    for (int v = p.empty() ? 3 : p.back(); v <= max_entry; ++v) {
      if (partial + Q(rest, v) < floor) break;
      p.push_back(v);
      rec(n);
      p.pop_back();
    }
  };
  for (int n = 3; n <= 6; ++n) rec(n);
}

}  // namespace fixtures
