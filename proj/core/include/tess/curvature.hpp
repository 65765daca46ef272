#pragma once

#include <map>
#include <span>
#include <vector>

#include "tess/planar_map.hpp"
#include "tess/rational.hpp"

namespace tess {

/// Nondecreasing face-degree vector of a vertex; length == vertex degree.
using Pattern = std::vector<int>;

std::string format_pattern(const Pattern& p);

// Good/bad split of Definition 3.1: good means Phi >= 1/132.
inline const Q& good_threshold() {
  static const Q t(1, 132);
  return t;
}

/// Phi of a bare pattern: 1 - N/2 + sum 1/a_i.
Q pattern_curvature(const Pattern& p);

// boundary_faces: the patch boundary, empty for a closed map. Asking for a
// boundary vertex raises errc::incomplete_pattern.
Pattern vertex_pattern(const PlanarMap& m, int vi,
                       std::span<const int> boundary_faces = {});
Q curvature(const PlanarMap& m, int vi,
            std::span<const int> boundary_faces = {});

struct CurvatureProfile {
  std::map<VertexId, Q> phi;   // interior vertices only, keyed by label
  std::vector<VertexId> t_g;   // labels with Phi > 0, ascending
  Q total;
};

CurvatureProfile curvature_profile(const PlanarMap& m,
                                   std::span<const int> boundary_faces = {});
CurvatureProfile curvature_profile(const Patch& p);

enum class VertexClass { good, bad, zero };

struct Classification {
  std::vector<VertexId> good;  // Phi >= 1/132
  std::vector<VertexId> bad;   // 0 < Phi < 1/132
  std::vector<VertexId> zero;  // Phi == 0
};

// Rejects with errc::not_nonnegatively_curved if any vertex in scope has
// negative curvature.
Classification classify_vertices(const PlanarMap& m,
                                 std::span<const int> boundary_faces = {});

VertexClass classify_pattern(const Pattern& p);

/// True iff 12 * total curvature is an integer.
bool check_twelfth_integrality(const CurvatureProfile& profile);

}  // namespace tess
