#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tess/error.hpp"

namespace tess {

using VertexId = int;  // external vertex label, arbitrary nonnegative integer

/// Per-vertex neighbor lists in cyclic order; the order *is* the embedding.
struct RotationSpec {
  std::vector<std::pair<VertexId, std::vector<VertexId>>> vertices;
};

// A finite combinatorial map over darts. Darts come in reverse pairs
// (reverse(d) == d ^ 1) covering each edge twice; faces are derived by
// tracing: the successor of dart (u,v) in its face walk is (v,w) where w
// immediately follows u in the cyclic rotation at v.
class PlanarMap {
 public:
  static PlanarMap from_rotation_system(const RotationSpec& spec);

  // Builds from a consistently oriented face list: every edge must be
  // covered by exactly two faces, once in each direction.
  static PlanarMap from_faces(const std::vector<std::vector<VertexId>>& faces);

  // Like from_faces, but edges covered only once are allowed: the missing
  // reverse darts are chained into one or more closing boundary walks which
  // become additional faces. Returns the map and the closing face ids.
  static std::pair<PlanarMap, std::vector<int>> from_faces_with_closure(
      const std::vector<std::vector<VertexId>>& faces);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(dart_origin_.size()) / 2; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int dart_count() const { return static_cast<int>(dart_origin_.size()); }
  int euler_characteristic() const {
    return vertex_count() - edge_count() + face_count();
  }

  VertexId label(int vi) const { return labels_[vi]; }
  int index_of(VertexId label) const;
  bool has_label(VertexId label) const;

  int degree(int vi) const { return static_cast<int>(rotation_[vi].size()); }
  const std::vector<int>& rotation(int vi) const { return rotation_[vi]; }

  int origin(int d) const { return dart_origin_[d]; }
  int target(int d) const { return dart_origin_[d ^ 1]; }
  static int reverse(int d) { return d ^ 1; }

  int rot_next(int d) const;
  int rot_prev(int d) const;
  int face_next(int d) const { return rot_next(reverse(d)); }

  int face_of(int d) const { return dart_face_[d]; }
  const std::vector<int>& face_darts(int f) const { return faces_[f]; }
  int face_degree(int f) const { return static_cast<int>(faces_[f].size()); }
  std::vector<int> face_vertices(int f) const;          // indices, walk order
  std::vector<VertexId> face_cycle_labels(int f) const;

  // One face per corner around vi (size == degree(vi)).
  std::vector<int> faces_at(int vi) const;
  bool face_touches(int f, int vi) const;

  // Dart from vertex index ui to wi, or -1.
  int dart_between(int ui, int wi) const;
  // Face containing the dart (u, w) given by labels; errc::invalid_argument
  // if no such dart exists.
  int face_with_dart(VertexId u, VertexId w) const;

  int graph_distance(VertexId u, VertexId v) const;
  // BFS over vertex indices; -1 for unreachable.
  std::vector<int> distances_from(std::span<const int> source_indices) const;

  // Each adjacent unordered face pair listed once per shared edge.
  std::vector<std::array<int, 2>> dual_adjacency() const;

  RotationSpec rotation_spec() const;
  std::vector<std::vector<VertexId>> faces_as_label_cycles() const;

 private:
  std::vector<VertexId> labels_;
  std::unordered_map<VertexId, int> index_;
  std::vector<std::vector<int>> rotation_;  // vertex index -> outgoing darts
  std::vector<int> dart_origin_;
  std::vector<int> dart_pos_;               // position within origin's rotation
  std::vector<int> dart_face_;
  std::vector<std::vector<int>> faces_;     // face -> dart walk

  void trace_faces();
};

// Finite stand-in for an infinite graph: a map with one (or, for an
// annulus, two) designated boundary faces. Curvature and patterns are
// undefined on vertices incident to a boundary face.
struct Patch {
  PlanarMap map;
  std::vector<int> boundary_faces;

  bool is_boundary_vertex(int vi) const;
  std::vector<int> boundary_vertex_indices() const;
  std::vector<int> interior_vertex_indices() const;
};

struct ValidationReport {
  bool disk_faces = true;               // (i) every face walk a simple cycle
  std::vector<int> nondisk_faces;
  bool edge_in_two_faces = true;        // (ii)
  std::vector<std::array<VertexId, 2>> one_face_edges;
  bool closure_intersection = true;     // (iii)
  std::vector<std::array<int, 2>> bad_face_pairs;
  bool vertex_degrees = true;           // deg(x) >= 3
  std::vector<VertexId> low_degree_vertices;
  bool face_degrees = true;             // deg(sigma) >= 3
  std::vector<int> low_degree_faces;

  bool valid() const {
    return disk_faces && edge_in_two_faces && closure_intersection &&
           vertex_degrees && face_degrees;
  }
};

// Tessellation axioms. For a patch, the axioms are enforced on all faces
// including boundary ones; the vertex-degree bound only on interior
// vertices.
ValidationReport validate_tessellation(const PlanarMap& m,
                                       std::span<const int> boundary_faces = {});
ValidationReport validate_tessellation(const Patch& p);

}  // namespace tess
