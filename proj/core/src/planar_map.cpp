#include "tess/planar_map.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tess {

namespace {

std::string edge_name(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

PlanarMap PlanarMap::from_rotation_system(const RotationSpec& spec) {
  PlanarMap m;
  if (spec.vertices.empty()) fail(errc::malformed_input, "empty rotation system");

  for (const auto& [label, nbrs] : spec.vertices) {
    if (label < 0) fail(errc::malformed_input, "negative vertex id");
    if (m.index_.count(label))
      fail(errc::malformed_input, "duplicate vertex id " + std::to_string(label));
    if (nbrs.empty())
      fail(errc::malformed_input, "isolated vertex " + std::to_string(label));
    m.index_.emplace(label, static_cast<int>(m.labels_.size()));
    m.labels_.push_back(label);
  }

  const int n = static_cast<int>(m.labels_.size());
  m.rotation_.resize(n);

  // Create dart pairs per undirected edge; enforce the simple-graph
  // restriction at parse time.
  std::map<std::pair<int, int>, int> dart_of;  // (origin idx, target idx)
  for (const auto& [label, nbrs] : spec.vertices) {
    const int ui = m.index_.at(label);
    std::set<VertexId> seen;
    for (VertexId w : nbrs) {
      if (w == label)
        fail(errc::malformed_input, "self-loop at vertex " + std::to_string(label));
      if (!seen.insert(w).second)
        fail(errc::malformed_input,
             "duplicate neighbor " + std::to_string(w) + " at vertex " +
                 std::to_string(label));
      auto it = m.index_.find(w);
      if (it == m.index_.end())
        fail(errc::malformed_input,
             "vertex " + std::to_string(label) + " lists unknown neighbor " +
                 std::to_string(w));
      const int wi = it->second;
      if (!dart_of.count({ui, wi})) {
        const int d = static_cast<int>(m.dart_origin_.size());
        dart_of[{ui, wi}] = d;
        dart_of[{wi, ui}] = d + 1;
        m.dart_origin_.push_back(ui);
        m.dart_origin_.push_back(wi);
      }
      m.rotation_[ui].push_back(dart_of[{ui, wi}]);
    }
  }

  // Symmetry: u lists v iff v lists u.
  m.dart_pos_.assign(m.dart_origin_.size(), -1);
  for (int vi = 0; vi < n; ++vi)
    for (int p = 0; p < static_cast<int>(m.rotation_[vi].size()); ++p)
      m.dart_pos_[m.rotation_[vi][p]] = p;
  for (int d = 0; d < m.dart_count(); ++d)
    if (m.dart_pos_[d] < 0)
      fail(errc::malformed_input,
           "asymmetric adjacency: " + std::to_string(m.labels_[m.origin(d)]) +
               " is listed by " + std::to_string(m.labels_[m.target(d)]) +
               " but not vice versa");

  m.trace_faces();

  if (m.euler_characteristic() != 2)
    fail(errc::non_spherical_embedding,
         "V-E+F = " + std::to_string(m.euler_characteristic()));
  return m;
}

void PlanarMap::trace_faces() {
  dart_face_.assign(dart_origin_.size(), -1);
  faces_.clear();
  for (int d0 = 0; d0 < dart_count(); ++d0) {
    if (dart_face_[d0] >= 0) continue;
    const int f = static_cast<int>(faces_.size());
    std::vector<int> walk;
    int d = d0;
    do {
      dart_face_[d] = f;
      walk.push_back(d);
      d = face_next(d);
    } while (d != d0);
    faces_.push_back(std::move(walk));
  }
}

PlanarMap PlanarMap::from_faces(const std::vector<std::vector<VertexId>>& faces) {
  auto [m, closing] = from_faces_with_closure(faces);
  if (!closing.empty())
    fail(errc::malformed_input, "face list does not cover every edge twice");
  return m;
}

std::pair<PlanarMap, std::vector<int>> PlanarMap::from_faces_with_closure(
    const std::vector<std::vector<VertexId>>& faces) {
  // Directed edge cover: each (u,v) at most once, and (v,u) must either be
  // supplied or is chained into a closing boundary walk.
  std::set<std::pair<VertexId, VertexId>> directed;
  for (const auto& f : faces) {
    if (f.size() < 2) fail(errc::malformed_input, "degenerate face");
    for (std::size_t i = 0; i < f.size(); ++i) {
      const VertexId u = f[i], v = f[(i + 1) % f.size()];
      if (u == v) fail(errc::malformed_input, "self-loop in face");
      if (!directed.insert({u, v}).second)
        fail(errc::non_simple_result,
             "directed edge " + edge_name(u, v) + " used twice");
    }
  }

  std::vector<std::vector<VertexId>> all = faces;
  std::map<VertexId, std::vector<VertexId>> missing_from;  // v -> targets u
  for (const auto& [u, v] : directed)
    if (!directed.count({v, u})) missing_from[v].push_back(u);

  std::vector<int> closing_positions;
  for (auto& [v, outs] : missing_from)
    if (outs.size() > 1)
      fail(errc::malformed_input, "ambiguous boundary at vertex " +
                                      std::to_string(v));
  std::set<VertexId> consumed;
  for (const auto& [start, outs] : missing_from) {
    if (consumed.count(start)) continue;
    std::vector<VertexId> walk;
    VertexId v = start;
    do {
      consumed.insert(v);
      walk.push_back(v);
      auto it = missing_from.find(v);
      if (it == missing_from.end())
        fail(errc::malformed_input, "open boundary walk at vertex " +
                                        std::to_string(v));
      v = it->second.front();
    } while (v != start);
    closing_positions.push_back(static_cast<int>(all.size()));
    all.push_back(std::move(walk));
  }

  // Rebuild rotations by chaining corners: the corner (u, v, w) of an
  // oriented face puts u immediately after w in the rotation at v.
  std::map<VertexId, std::map<VertexId, VertexId>> succ;
  for (const auto& f : all) {
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i) {
      const VertexId u = f[i], v = f[(i + 1) % k], w = f[(i + 2) % k];
      if (!succ[v].emplace(w, u).second)
        fail(errc::non_simple_result, "conflicting corners at vertex " +
                                          std::to_string(v));
    }
  }

  RotationSpec spec;
  for (const auto& [v, next] : succ) {
    std::vector<VertexId> cyc;
    const VertexId first = next.begin()->first;
    VertexId cur = first;
    do {
      cyc.push_back(cur);
      auto it = next.find(cur);
      if (it == next.end())
        fail(errc::malformed_input, "broken corner chain at vertex " +
                                        std::to_string(v));
      cur = it->second;
    } while (cur != first && cyc.size() <= next.size());
    if (cyc.size() != next.size() || cur != first)
      fail(errc::malformed_input,
           "corners at vertex " + std::to_string(v) + " do not form a disk");
    spec.vertices.emplace_back(v, std::move(cyc));
  }

  PlanarMap m = from_rotation_system(spec);

  // Locate the closing faces in the traced map.
  std::vector<int> closing_ids;
  for (int pos : closing_positions) {
    // tracing runs each cycle in reverse, so the closing face holds the
    // reversed first dart of the walk
    const auto& walk = all[pos];
    closing_ids.push_back(m.face_with_dart(walk[1], walk[0]));
  }
  return {std::move(m), std::move(closing_ids)};
}

int PlanarMap::index_of(VertexId label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    fail(errc::invalid_argument, "unknown vertex id " + std::to_string(label));
  return it->second;
}

bool PlanarMap::has_label(VertexId label) const { return index_.count(label) > 0; }

int PlanarMap::rot_next(int d) const {
  const auto& rot = rotation_[dart_origin_[d]];
  return rot[(dart_pos_[d] + 1) % rot.size()];
}

int PlanarMap::rot_prev(int d) const {
  const auto& rot = rotation_[dart_origin_[d]];
  return rot[(dart_pos_[d] + rot.size() - 1) % rot.size()];
}

std::vector<int> PlanarMap::face_vertices(int f) const {
  std::vector<int> vs;
  vs.reserve(faces_[f].size());
  for (int d : faces_[f]) vs.push_back(origin(d));
  return vs;
}

std::vector<VertexId> PlanarMap::face_cycle_labels(int f) const {
  std::vector<VertexId> vs;
  vs.reserve(faces_[f].size());
  for (int d : faces_[f]) vs.push_back(labels_[origin(d)]);
  return vs;
}

std::vector<int> PlanarMap::faces_at(int vi) const {
  std::vector<int> fs;
  fs.reserve(rotation_[vi].size());
  for (int d : rotation_[vi]) fs.push_back(dart_face_[d]);
  return fs;
}

bool PlanarMap::face_touches(int f, int vi) const {
  for (int d : faces_[f])
    if (origin(d) == vi) return true;
  return false;
}

int PlanarMap::dart_between(int ui, int wi) const {
  for (int d : rotation_[ui])
    if (target(d) == wi) return d;
  return -1;
}

int PlanarMap::face_with_dart(VertexId u, VertexId w) const {
  const int d = dart_between(index_of(u), index_of(w));
  if (d < 0)
    fail(errc::invalid_argument, "no edge " + edge_name(u, w));
  return dart_face_[d];
}

std::vector<int> PlanarMap::distances_from(
    std::span<const int> source_indices) const {
  std::vector<int> dist(vertex_count(), -1);
  std::deque<int> queue;
  for (int s : source_indices) {
    if (dist[s] == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int d : rotation_[v]) {
      const int w = target(d);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int PlanarMap::graph_distance(VertexId u, VertexId v) const {
  const int ui = index_of(u), vi = index_of(v);
  const int src[] = {ui};
  return distances_from(src)[vi];
}

std::vector<std::array<int, 2>> PlanarMap::dual_adjacency() const {
  std::vector<std::array<int, 2>> adj;
  for (int d = 0; d < dart_count(); d += 2) {
    const int f = dart_face_[d], g = dart_face_[d ^ 1];
    adj.push_back({std::min(f, g), std::max(f, g)});
  }
  std::sort(adj.begin(), adj.end());
  return adj;
}

RotationSpec PlanarMap::rotation_spec() const {
  RotationSpec spec;
  for (int vi = 0; vi < vertex_count(); ++vi) {
    std::vector<VertexId> nbrs;
    nbrs.reserve(rotation_[vi].size());
    for (int d : rotation_[vi]) nbrs.push_back(labels_[target(d)]);
    spec.vertices.emplace_back(labels_[vi], std::move(nbrs));
  }
  return spec;
}

std::vector<std::vector<VertexId>> PlanarMap::faces_as_label_cycles() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(faces_.size());
  for (int f = 0; f < face_count(); ++f) out.push_back(face_cycle_labels(f));
  return out;
}

bool Patch::is_boundary_vertex(int vi) const {
  for (int f : boundary_faces)
    if (map.face_touches(f, vi)) return true;
  return false;
}

std::vector<int> Patch::boundary_vertex_indices() const {
  std::set<int> b;
  for (int f : boundary_faces)
    for (int vi : map.face_vertices(f)) b.insert(vi);
  return {b.begin(), b.end()};
}

std::vector<int> Patch::interior_vertex_indices() const {
  std::set<int> b;
  for (int f : boundary_faces)
    for (int vi : map.face_vertices(f)) b.insert(vi);
  std::vector<int> out;
  for (int vi = 0; vi < map.vertex_count(); ++vi)
    if (!b.count(vi)) out.push_back(vi);
  return out;
}

ValidationReport validate_tessellation(const PlanarMap& m,
                                       std::span<const int> boundary_faces) {
  ValidationReport r;
  std::set<int> boundary(boundary_faces.begin(), boundary_faces.end());

  // (i) disk faces: each face walk a simple cycle.
  for (int f = 0; f < m.face_count(); ++f) {
    std::set<int> vs;
    std::set<int> edges;
    bool simple = true;
    for (int d : m.face_darts(f)) {
      if (!vs.insert(m.origin(d)).second) simple = false;
      if (!edges.insert(d / 2).second) simple = false;
    }
    if (!simple) {
      r.disk_faces = false;
      r.nondisk_faces.push_back(f);
    }
  }

  // (ii) the two darts of each edge lie in two distinct faces.
  for (int d = 0; d < m.dart_count(); d += 2) {
    if (m.face_of(d) == m.face_of(d ^ 1)) {
      r.edge_in_two_faces = false;
      r.one_face_edges.push_back(
          {m.label(m.origin(d)), m.label(m.target(d))});
    }
  }

  // (iii) closures of two faces meet in nothing, a vertex, or an edge.
  std::map<std::array<int, 2>, int> shared_vertices;
  std::map<std::array<int, 2>, int> shared_edges;
  for (int vi = 0; vi < m.vertex_count(); ++vi) {
    std::set<int> fs;
    for (int d : m.rotation(vi)) fs.insert(m.face_of(d));
    for (auto it = fs.begin(); it != fs.end(); ++it)
      for (auto jt = std::next(it); jt != fs.end(); ++jt)
        ++shared_vertices[{*it, *jt}];
  }
  for (int d = 0; d < m.dart_count(); d += 2) {
    const int f = m.face_of(d), g = m.face_of(d ^ 1);
    if (f != g) ++shared_edges[{std::min(f, g), std::max(f, g)}];
  }
  for (const auto& [pair, sv] : shared_vertices) {
    const auto eit = shared_edges.find(pair);
    const int se = eit == shared_edges.end() ? 0 : eit->second;
    const bool ok = (sv == 1 && se == 0) || (sv == 2 && se == 1);
    if (!ok) {
      r.closure_intersection = false;
      r.bad_face_pairs.push_back(pair);
    }
  }
  for (const auto& [pair, se] : shared_edges) {
    if (se > 1 && !shared_vertices.count(pair)) {
      r.closure_intersection = false;
      r.bad_face_pairs.push_back(pair);
    }
  }

  // Degree bounds; vertex degrees only off the boundary.
  for (int vi = 0; vi < m.vertex_count(); ++vi) {
    bool on_boundary = false;
    for (int f : boundary)
      if (m.face_touches(f, vi)) on_boundary = true;
    if (!on_boundary && m.degree(vi) < 3) {
      r.vertex_degrees = false;
      r.low_degree_vertices.push_back(m.label(vi));
    }
  }
  for (int f = 0; f < m.face_count(); ++f) {
    if (m.face_degree(f) < 3) {
      r.face_degrees = false;
      r.low_degree_faces.push_back(f);
    }
  }
  return r;
}

ValidationReport validate_tessellation(const Patch& p) {
  return validate_tessellation(p.map, p.boundary_faces);
}

}  // namespace tess
