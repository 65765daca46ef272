#pragma once

#include <string>
#include <vector>

#include "tess/planar_map.hpp"
#include "tess/rational.hpp"

namespace tess {

// A symmetry of the embedded map, stored as a permutation of darts. It
// commutes with dart reversal and maps rotation successors to successors
// (orientation-preserving) or predecessors (reversing); vertex and face
// bijections follow.
struct CellularAutomorphism {
  std::vector<int> dart_map;
  bool reversing = false;

  std::vector<int> vertex_map(const PlanarMap& m) const;  // index -> index
  std::vector<int> face_map(const PlanarMap& m) const;
  bool is_identity() const;
};

struct AutGroup {
  std::vector<CellularAutomorphism> elements;
  int order() const { return static_cast<int>(elements.size()); }
  int preserving_count() const;
};

// Propagates the image of one base dart across rotations and reversals;
// each (candidate dart, orientation) extends in at most one way.
AutGroup cellular_automorphisms(const PlanarMap& m);

struct RestrictionData {
  int image_order = 0;   // of the action on the positively curved set
  int kernel_order = 0;  // elements fixing that set pointwise
};

// Action on the positively curved vertices; errc::undefined_for_flat when
// that set is empty. Asserts order = kernel * image.
RestrictionData restrict_to_TG(const PlanarMap& m, const AutGroup& g);

// No non-identity element fixes a face together with two adjacent vertices
// of it.
bool verify_rigidity(const PlanarMap& m, const AutGroup& g);

struct OrderBoundReport {
  int order = 0;
  int a = 0;        // #positively curved vertices
  int b = 0;        // max degree among them
  int max_face = 0;
  bool small_case_applies = false;  // max face degree <= 42
  bool divides = false;             // order | a!*b!  or  order | 4*max_face
  std::string detail;
};

OrderBoundReport verify_order_bounds(const PlanarMap& m);

// Pointwise-distinct on N(v) for distinct kernel elements (monomorphism
// property of the neighborhood restriction), checked for every positively
// curved v.
bool verify_kernel_monomorphism(const PlanarMap& m, const AutGroup& g);

// Whitney condition under which abstract and cellular automorphisms agree.
bool is_three_connected(const PlanarMap& m);

}  // namespace tess
