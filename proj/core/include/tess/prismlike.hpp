#pragma once

#include <optional>
#include <vector>

#include "tess/planar_map.hpp"
#include "tess/rational.hpp"

namespace tess {

// Degree at which a face forces cylinder structure.
inline constexpr int kLargeFaceThreshold = 43;

struct PrismlikeVerdict {
  bool prismlike = false;
  std::vector<int> witnesses;  // faces of degree >= threshold
};

// Finite map: at least two large faces. Patch: any interior-complete large
// face (every vertex of it interior) makes the infinite stand-in qualify.
PrismlikeVerdict is_prismlike(const PlanarMap& m);
PrismlikeVerdict is_prismlike(const Patch& p);

enum class BandType { triangles, squares };

struct Band {
  BandType type;
  std::vector<int> faces;
};

struct BandDecomposition {
  int sigma1 = -1;
  std::optional<int> sigma2;
  std::vector<Band> bands;  // L_1..L_M outward from sigma1
};

// Slices everything between the two big faces into homogeneous
// triangle/square rings by vertex distance from the first big face's
// boundary. Any deviation from that shape raises
// errc::not_prismlike_structure.
BandDecomposition band_decomposition(const PlanarMap& m);

// Sum of Phi over the vertices of sigma; requires deg >= threshold, all
// incident vertices interior with Phi >= 0, and comes out >= 1.
Q large_face_curvature_sum(const PlanarMap& m, int sigma,
                           std::span<const int> boundary_faces = {});

}  // namespace tess
