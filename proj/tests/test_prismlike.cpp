#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "tess/curvature.hpp"
#include "tess/generators.hpp"
#include "tess/prismlike.hpp"

using namespace tess;

// Two prism halves glued rim to rim: two big faces separated by two square
// rings.
static PlanarMap stacked_prism(int n) {
  Patch half = open_at_face(prism(n), fixtures::top_face(prism(n), n));
  auto rim = half.map.face_cycle_labels(half.boundary_faces[0]);
  GlueSpec spec;
  spec.left = half;
  spec.right = half;
  for (std::size_t i = 0; i < rim.size(); ++i)
    spec.correspondence.push_back({rim[i], rim[i]});
  Patch glued = glue_patches(spec);
  REQUIRE(glued.boundary_faces.empty());
  return glued.map;
}

TEST_CASE("detection threshold") {
  CHECK_FALSE(is_prismlike(platonic("cube")).prismlike);
  CHECK_FALSE(is_prismlike(prism(42)).prismlike);
  CHECK(is_prismlike(prism(43)).prismlike);
  CHECK(is_prismlike(prism(43)).witnesses.size() == 2);
  CHECK(is_prismlike(antiprism(50)).prismlike);
  // one big face is not enough
  CHECK_FALSE(is_prismlike(grid_example(20, 1)).prismlike);
}

TEST_CASE("patch detection needs an interior-complete big face") {
  Patch core = fixtures::disk_patch(43);  // the 43-gon rim is all boundary
  CHECK_FALSE(is_prismlike(core).prismlike);

  Patch half =
      open_at_face(prism(43), fixtures::top_face(prism(43), 43));
  CHECK(is_prismlike(half).prismlike);  // bottom 43-gon sits fully interior
  CHECK(is_prismlike(half).witnesses.size() == 1);
}

TEST_CASE("band decomposition of prisms and antiprisms") {
  for (int n : {43, 50, 60}) {
    BandDecomposition p = band_decomposition(prism(n));
    REQUIRE(p.bands.size() == 1);
    CHECK(p.bands[0].type == BandType::squares);
    CHECK(p.bands[0].faces.size() == static_cast<std::size_t>(n));

    BandDecomposition a = band_decomposition(antiprism(n));
    REQUIRE(a.bands.size() == 1);
    CHECK(a.bands[0].type == BandType::triangles);
    CHECK(a.bands[0].faces.size() == static_cast<std::size_t>(2 * n));
  }
}

TEST_CASE("stacked prism decomposes into two bands") {
  PlanarMap m = stacked_prism(43);
  CHECK(validate_tessellation(m).valid());
  BandDecomposition d = band_decomposition(m);
  REQUIRE(d.bands.size() == 2);
  for (const Band& b : d.bands) {
    CHECK(b.type == BandType::squares);
    CHECK(b.faces.size() == 43);
  }
  // seam vertices are flat, positive curvature confined to the two rims
  CurvatureProfile prof = curvature_profile(m);
  CHECK(prof.total == 2);
  CHECK(prof.t_g.size() == 2 * 43);
}

TEST_CASE("positive curvature lives exactly on the two rims") {
  for (const PlanarMap& m : {prism(45), antiprism(47), stacked_prism(44)}) {
    BandDecomposition d = band_decomposition(m);
    std::set<int> rims;
    for (int vi : m.face_vertices(d.sigma1)) rims.insert(vi);
    for (int vi : m.face_vertices(*d.sigma2)) rims.insert(vi);
    for (int vi = 0; vi < m.vertex_count(); ++vi)
      CHECK((curvature(m, vi) > 0) == (rims.count(vi) > 0));
  }
}

TEST_CASE("structure violations are reported for non-prismlike shapes") {
  CHECK_THROWS_AS(band_decomposition(platonic("cube")), error);
  CHECK_THROWS_AS(band_decomposition(grid_example(20, 1)), error);
}

TEST_CASE("large face curvature sums") {
  for (int n = 43; n <= 60; ++n) {
    for (const PlanarMap& m : {prism(n), antiprism(n)}) {
      auto verdict = is_prismlike(m);
      for (int f : verdict.witnesses)
        CHECK(large_face_curvature_sum(m, f) == 1);
    }
  }
  // grid big face: the sum exceeds 1 by the four corner contributions
  PlanarMap g = grid_example(20, 1);
  int big = -1;
  for (int f = 0; f < g.face_count(); ++f)
    if (g.face_degree(f) == 46) big = f;
  REQUIRE(big >= 0);
  // 38 rim vertices at (4,4,46) plus 8 corner copies at (3,4,46)
  CHECK(large_face_curvature_sum(g, big) == Q(5, 3));

  CHECK_THROWS_AS(large_face_curvature_sum(platonic("cube"), 0), error);
}

TEST_CASE("subdivided hexagonal bands still decompose cleanly") {
  // prism-like graphs never show 5..42-gons in bands once hexagons are cut
  for (const PlanarMap& m :
       {subdivide_hexagons(prism(43)), subdivide_hexagons(antiprism(50))}) {
    BandDecomposition d = band_decomposition(m);
    for (const Band& b : d.bands)
      for (int f : b.faces) CHECK(m.face_degree(f) <= 4);
  }
}
