#include "tess/generators.hpp"

#include <algorithm>
#include <set>

#include "tess/curvature.hpp"
#include "tess/error.hpp"

namespace tess {

namespace {

int mod(int i, int n) { return ((i % n) + n) % n; }

VertexId fresh_base(const std::vector<std::vector<VertexId>>& faces) {
  VertexId mx = -1;
  for (const auto& f : faces)
    for (VertexId v : f) mx = std::max(mx, v);
  return mx + 1;
}

}  // namespace

PlanarMap prism(int n) {
  if (n < 3) fail(errc::invalid_argument, "prism needs n >= 3");
  RotationSpec spec;
  auto t = [&](int i) { return mod(i, n); };
  auto b = [&](int i) { return n + mod(i, n); };
  for (int i = 0; i < n; ++i)
    spec.vertices.push_back({t(i), {t(i + 1), t(i - 1), b(i)}});
  for (int i = 0; i < n; ++i)
    spec.vertices.push_back({b(i), {b(i - 1), b(i + 1), t(i)}});
  return PlanarMap::from_rotation_system(spec);
}

PlanarMap antiprism(int n) {
  if (n < 3) fail(errc::invalid_argument, "antiprism needs n >= 3");
  RotationSpec spec;
  auto t = [&](int i) { return mod(i, n); };
  auto b = [&](int i) { return n + mod(i, n); };
  for (int i = 0; i < n; ++i)
    spec.vertices.push_back({t(i), {t(i + 1), b(i), b(i - 1), t(i - 1)}});
  for (int i = 0; i < n; ++i)
    spec.vertices.push_back({b(i), {b(i - 1), t(i), t(i + 1), b(i + 1)}});
  return PlanarMap::from_rotation_system(spec);
}

PlanarMap platonic(const std::string& name) {
  if (name == "tetrahedron") {
    RotationSpec spec;
    spec.vertices = {{0, {1, 2, 3}}, {1, {0, 3, 2}}, {2, {0, 1, 3}},
                     {3, {0, 2, 1}}};
    return PlanarMap::from_rotation_system(spec);
  }
  if (name == "cube") return prism(4);
  if (name == "octahedron") return antiprism(3);
  if (name == "icosahedron") {
    // cap both pentagons of the 5-antiprism with an apex
    PlanarMap ap = antiprism(5);
    auto faces = ap.faces_as_label_cycles();
    VertexId apex = fresh_base(faces);
    std::vector<std::vector<VertexId>> out;
    for (const auto& f : faces) {
      if (f.size() != 5) {
        out.push_back(f);
        continue;
      }
      for (std::size_t i = 0; i < 5; ++i)
        out.push_back({f[i], f[(i + 1) % 5], apex});
      ++apex;
    }
    return PlanarMap::from_faces(out);
  }
  if (name == "dodecahedron") return dual(platonic("icosahedron"));
  fail(errc::invalid_argument, "unknown solid: " + name);
}

PlanarMap dual(const PlanarMap& m) {
  std::vector<std::vector<VertexId>> faces;
  for (int vi = 0; vi < m.vertex_count(); ++vi) {
    std::vector<VertexId> cycle;
    for (int d : m.rotation(vi)) cycle.push_back(m.face_of(d));
    faces.push_back(std::move(cycle));
  }
  return PlanarMap::from_faces(faces);
}

PlanarMap truncate_map(const PlanarMap& m) {
  // new vertex per dart, sitting at the origin end of its edge
  std::vector<std::vector<VertexId>> faces;
  for (int f = 0; f < m.face_count(); ++f) {
    std::vector<VertexId> cycle;
    for (int d : m.face_darts(f)) {
      cycle.push_back(d);
      cycle.push_back(PlanarMap::reverse(d));
    }
    faces.push_back(std::move(cycle));
  }
  for (int vi = 0; vi < m.vertex_count(); ++vi) {
    std::vector<VertexId> cycle(m.rotation(vi).rbegin(),
                                m.rotation(vi).rend());
    faces.push_back(std::move(cycle));
  }
  return PlanarMap::from_faces(faces);
}

PlanarMap fullerene_c60() { return truncate_map(platonic("icosahedron")); }

namespace {

// Core squares, side squares and corner triangles; the enclosing m-gon is
// whatever from_faces_with_closure traces around the outside.
std::vector<std::vector<VertexId>> grid_faces(int a, int b) {
  if (a < 1 || b < 1) fail(errc::invalid_argument, "grid needs a,b >= 1");
  auto g = [&](int i, int j) { return i * (b + 1) + j; };
  std::vector<std::vector<VertexId>> faces;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      faces.push_back({g(i, j), g(i + 1, j), g(i + 1, j + 1), g(i, j + 1)});

  // counterclockwise outline, corners at positions 0, a, a+b, 2a+b
  std::vector<VertexId> outline;
  for (int i = 0; i < a; ++i) outline.push_back(g(i, 0));
  for (int j = 0; j < b; ++j) outline.push_back(g(a, j));
  for (int i = a; i > 0; --i) outline.push_back(g(i, b));
  for (int j = b; j > 0; --j) outline.push_back(g(0, j));
  int L = static_cast<int>(outline.size());
  std::set<int> corners = {0, a, a + b, 2 * a + b};

  // one outer copy per outline vertex, two at corners (one per side)
  VertexId next = (a + 1) * (b + 1);
  std::vector<VertexId> o_prev(L), o_next(L);
  for (int k = 0; k < L; ++k) {
    o_prev[k] = next++;
    o_next[k] = corners.count(k) ? next++ : o_prev[k];
  }
  for (int k = 0; k < L; ++k)
    faces.push_back(
        {outline[mod(k + 1, L)], outline[k], o_next[k], o_prev[mod(k + 1, L)]});
  for (int k : corners) faces.push_back({outline[k], o_prev[k], o_next[k]});
  return faces;
}

}  // namespace

PlanarMap grid_example(int a, int b) {
  return PlanarMap::from_faces_with_closure(grid_faces(a, b)).first;
}

Patch grid_example_core(int a, int b) {
  auto [m, closing] = PlanarMap::from_faces_with_closure(grid_faces(a, b));
  return {std::move(m), std::move(closing)};
}

Patch open_at_face(const PlanarMap& m, int face) {
  if (face < 0 || face >= m.face_count())
    fail(errc::invalid_argument, "no such face");
  auto faces = m.faces_as_label_cycles();
  faces.erase(faces.begin() + face);
  auto [res, closing] = PlanarMap::from_faces_with_closure(faces);
  return {std::move(res), std::move(closing)};
}

namespace {

// Index of the boundary face whose vertex labels are exactly `labels`.
int find_boundary_face(const Patch& p, const std::set<VertexId>& labels) {
  for (int f : p.boundary_faces) {
    auto cyc = p.map.face_cycle_labels(f);
    if (std::set<VertexId>(cyc.begin(), cyc.end()) == labels) return f;
  }
  return -1;
}

// True (via *forward) if `seq` reads along cyclic `cycle` forwards or
// backwards from some offset.
bool cyclic_match(const std::vector<VertexId>& cycle,
                  const std::vector<VertexId>& seq, bool* forward) {
  int n = static_cast<int>(cycle.size());
  if (static_cast<int>(seq.size()) != n) return false;
  for (int r = 0; r < n; ++r) {
    bool fwd = true, bwd = true;
    for (int i = 0; i < n && (fwd || bwd); ++i) {
      if (cycle[mod(r + i, n)] != seq[i]) fwd = false;
      if (cycle[mod(r - i, n)] != seq[i]) bwd = false;
    }
    if (fwd || bwd) {
      *forward = fwd;
      return true;
    }
  }
  return false;
}

}  // namespace

Patch glue_patches(const GlueSpec& spec) {
  const auto& corr = spec.correspondence;
  int L = static_cast<int>(corr.size());
  if (L < 3) fail(errc::incompatible_boundaries, "degenerate correspondence");
  std::set<VertexId> lset, rset;
  std::vector<VertexId> lseq, rseq;
  for (auto [l, r] : corr) {
    lset.insert(l);
    rset.insert(r);
    lseq.push_back(l);
    rseq.push_back(r);
  }
  if (static_cast<int>(lset.size()) != L || static_cast<int>(rset.size()) != L)
    fail(errc::incompatible_boundaries, "correspondence is not a bijection");
  int bf_l = find_boundary_face(spec.left, lset);
  int bf_r = find_boundary_face(spec.right, rset);
  if (bf_l < 0 || bf_r < 0)
    fail(errc::incompatible_boundaries,
         "correspondence does not match a boundary cycle");

  bool left_fwd, right_fwd;
  if (!cyclic_match(spec.left.map.face_cycle_labels(bf_l), lseq, &left_fwd) ||
      !cyclic_match(spec.right.map.face_cycle_labels(bf_r), rseq, &right_fwd))
    fail(errc::incompatible_boundaries,
         "correspondence does not respect cyclic order");

  // The two interiors must induce opposite seam directions: if the
  // identified boundary walks would run parallel, mirror the right patch.
  bool mirror = (left_fwd == right_fwd);

  VertexId next = 0;
  for (int vi = 0; vi < spec.left.map.vertex_count(); ++vi)
    next = std::max(next, spec.left.map.label(vi) + 1);
  std::unordered_map<VertexId, VertexId> rename;
  for (int i = 0; i < L; ++i) rename[rseq[i]] = lseq[i];
  for (int vi = 0; vi < spec.right.map.vertex_count(); ++vi) {
    VertexId v = spec.right.map.label(vi);
    if (!rename.count(v)) rename[v] = next++;
  }

  std::vector<std::vector<VertexId>> faces;
  std::vector<std::vector<VertexId>> kept_boundary;  // first two labels each
  for (int f = 0; f < spec.left.map.face_count(); ++f) {
    if (f == bf_l) continue;
    faces.push_back(spec.left.map.face_cycle_labels(f));
    if (std::count(spec.left.boundary_faces.begin(),
                   spec.left.boundary_faces.end(), f))
      kept_boundary.push_back(faces.back());
  }
  for (int f = 0; f < spec.right.map.face_count(); ++f) {
    if (f == bf_r) continue;
    auto cyc = spec.right.map.face_cycle_labels(f);
    for (VertexId& v : cyc) v = rename.at(v);
    if (mirror) std::reverse(cyc.begin(), cyc.end());
    faces.push_back(cyc);
    if (std::count(spec.right.boundary_faces.begin(),
                   spec.right.boundary_faces.end(), f))
      kept_boundary.push_back(faces.back());
  }

  PlanarMap glued = PlanarMap::from_faces(faces);
  std::vector<int> boundary;
  for (const auto& cyc : kept_boundary)
    boundary.push_back(glued.face_with_dart(cyc[1], cyc[0]));
  return {std::move(glued), std::move(boundary)};
}

PlanarMap subdivide_hexagons(const PlanarMap& m) {
  auto faces = m.faces_as_label_cycles();
  VertexId next = fresh_base(faces);
  std::vector<std::vector<VertexId>> out;
  for (const auto& f : faces) {
    if (f.size() != 6) {
      out.push_back(f);
      continue;
    }
    VertexId center = next++;
    for (std::size_t i = 0; i < 6; ++i)
      out.push_back({f[i], f[(i + 1) % 6], center});
  }
  return PlanarMap::from_faces(out);
}

namespace {

// Tries every cyclic alignment (both directions) of the two boundary
// cycles; calls check(result, seam labels) on each successful gluing and
// reports whether any alignment satisfied it.
template <typename Check>
bool any_alignment(const Patch& left, int bf_l, const Patch& right, int bf_r,
                   Check check) {
  auto lcyc = left.map.face_cycle_labels(bf_l);
  auto rcyc = right.map.face_cycle_labels(bf_r);
  int n = static_cast<int>(lcyc.size());
  if (static_cast<int>(rcyc.size()) != n) return false;
  for (int dir : {1, -1}) {
    for (int r = 0; r < n; ++r) {
      GlueSpec spec;
      spec.left = left;
      spec.right = right;
      for (int i = 0; i < n; ++i)
        spec.correspondence.push_back({lcyc[i], rcyc[mod(r + dir * i, n)]});
      try {
        Patch glued = glue_patches(spec);
        if (check(glued, lcyc)) return true;
      } catch (const error&) {
        // alignment does not glue cleanly; try the next one
      }
    }
  }
  return false;
}

bool seam_curvatures(const Patch& glued, const std::vector<VertexId>& seam,
                     bool require_zero) {
  for (VertexId v : seam) {
    int vi = glued.map.index_of(v);
    if (glued.is_boundary_vertex(vi)) return false;
    Q phi = curvature(glued.map, vi, glued.boundary_faces);
    if (require_zero ? phi != 0 : phi < 0) return false;
  }
  return true;
}

}  // namespace

bool periodic_closure_check(const Patch& annulus, const Patch& core) {
  if (annulus.boundary_faces.size() != 2 || core.boundary_faces.empty())
    fail(errc::incompatible_boundaries,
         "need a two-boundary annulus and a bounded core");

  bool attaches = false;
  for (int cbf : core.boundary_faces)
    for (int abf : annulus.boundary_faces)
      attaches = attaches ||
                 any_alignment(core, cbf, annulus, abf,
                               [](const Patch& g, const auto& seam) {
                                 return seam_curvatures(g, seam, false);
                               });

  bool repeats = false;
  for (int obf : annulus.boundary_faces)
    for (int ibf : annulus.boundary_faces) {
      if (obf == ibf) continue;
      repeats = repeats ||
                any_alignment(annulus, obf, annulus, ibf,
                              [](const Patch& g, const auto& seam) {
                                return seam_curvatures(g, seam, true);
                              });
    }
  return attaches && repeats;
}

}  // namespace tess
