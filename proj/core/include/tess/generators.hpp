#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tess/planar_map.hpp"

namespace tess {

// Canonical labeling: prism/antiprism use top ring 0..n-1, bottom ring
// n..2n-1; derived solids inherit from their construction.
PlanarMap prism(int n);
PlanarMap antiprism(int n);

PlanarMap platonic(const std::string& name);
PlanarMap fullerene_c60();

// Face-per-vertex / vertex-per-face exchange; new labels are the face ids
// of the input.
PlanarMap dual(const PlanarMap& m);

// Cuts every corner: one new vertex per dart, each old k-valent vertex
// becomes a k-gon, each old k-gon a 2k-gon.
PlanarMap truncate_map(const PlanarMap& m);

// Square-grid core with a ring of squares, four corner triangles and one
// big m-gon, m = 2(a+b+2). Total curvature 2, positively curved set of
// size m+4 (the m-gon rim plus the four grid corners).
PlanarMap grid_example(int a, int b);

// Everything of grid_example except the m-gon; the boundary face is the
// m-cycle left open.
Patch grid_example_core(int a, int b);

// The map minus one face, that face's cycle becoming the patch boundary.
Patch open_at_face(const PlanarMap& m, int face);

struct GlueSpec {
  Patch left;
  Patch right;
  // Consecutive pairs (left label, right label) walking the glued boundary
  // cycles; must follow both cycles' cyclic orders, the right one forwards
  // or backwards.
  std::vector<std::pair<VertexId, VertexId>> correspondence;
};

// Identifies the two boundary cycles. Seam vertices keep the left labels;
// the remaining right vertices are relabeled above the left range. Result
// boundary faces are whatever boundary faces were not glued (empty for two
// disks).
Patch glue_patches(const GlueSpec& spec);

PlanarMap subdivide_hexagons(const PlanarMap& m);

// Certifies that `annulus` extends `core` to an infinite nonnegatively
// curved graph: some alignment of core boundary with an annulus boundary
// leaves the seam with Phi >= 0, and some self-gluing of the annulus onto
// its other boundary leaves that seam exactly flat.
bool periodic_closure_check(const Patch& annulus, const Patch& core);

}  // namespace tess
