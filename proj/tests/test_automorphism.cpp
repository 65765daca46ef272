#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "tess/automorphism.hpp"
#include "tess/curvature.hpp"
#include "tess/generators.hpp"

using namespace tess;

TEST_CASE("orders of the classical groups") {
  CHECK(cellular_automorphisms(platonic("tetrahedron")).order() == 24);
  CHECK(cellular_automorphisms(platonic("cube")).order() == 48);
  CHECK(cellular_automorphisms(platonic("octahedron")).order() == 48);
  CHECK(cellular_automorphisms(platonic("dodecahedron")).order() == 120);
  CHECK(cellular_automorphisms(platonic("icosahedron")).order() == 120);
  CHECK(cellular_automorphisms(fullerene_c60()).order() == 120);
  CHECK(cellular_automorphisms(prism(43)).order() == 4 * 43);
  CHECK(cellular_automorphisms(antiprism(50)).order() == 4 * 50);
}

TEST_CASE("brute-force adjacency oracle agrees on small graphs") {
  std::vector<PlanarMap> small;
  small.push_back(platonic("tetrahedron"));
  small.push_back(platonic("cube"));
  small.push_back(platonic("octahedron"));
  small.push_back(platonic("icosahedron"));
  for (int n = 3; n <= 8; ++n) {
    small.push_back(prism(n));
    small.push_back(antiprism(n));
  }
  small.push_back(grid_example(1, 1));  // 16 vertices
  for (const PlanarMap& m : small) {
    CAPTURE(m.vertex_count());
    CHECK(cellular_automorphisms(m).order() ==
          fixtures::brute_force_aut_count(m));
  }
}

TEST_CASE("group axioms via the composition table") {
  for (const PlanarMap& m : {platonic("cube"), prism(7), antiprism(5)}) {
    AutGroup g = cellular_automorphisms(m);
    std::set<std::pair<std::vector<int>, bool>> members;
    for (const auto& e : g.elements) members.insert({e.dart_map, e.reversing});
    CHECK(members.size() == static_cast<std::size_t>(g.order()));
    CHECK(members.count({[&] {
                           std::vector<int> id(m.dart_count());
                           for (int d = 0; d < m.dart_count(); ++d) id[d] = d;
                           return id;
                         }(),
                         false}) == 1);
    for (const auto& a : g.elements)
      for (const auto& b : g.elements) {
        std::vector<int> comp(m.dart_count());
        for (int d = 0; d < m.dart_count(); ++d) comp[d] = a.dart_map[b.dart_map[d]];
        CHECK(members.count({comp, a.reversing != b.reversing}) == 1);
      }
  }
}

TEST_CASE("an automorphism is pinned by one dart image") {
  PlanarMap m = platonic("dodecahedron");
  AutGroup g = cellular_automorphisms(m);
  std::set<std::pair<int, bool>> flags;
  for (const auto& e : g.elements)
    CHECK(flags.insert({e.dart_map[0], e.reversing}).second);
}

TEST_CASE("preserving elements form an index <= 2 subgroup") {
  for (const PlanarMap& m :
       {platonic("tetrahedron"), prism(9), fullerene_c60()}) {
    AutGroup g = cellular_automorphisms(m);
    int p = g.preserving_count();
    CHECK((p == g.order() || 2 * p == g.order()));
  }
}

TEST_CASE("restriction to the positively curved set") {
  PlanarMap cube = platonic("cube");
  RestrictionData r = restrict_to_TG(cube, cellular_automorphisms(cube));
  CHECK(r.kernel_order == 1);
  CHECK(r.image_order == 48);

  PlanarMap p43 = prism(43);
  RestrictionData rp = restrict_to_TG(p43, cellular_automorphisms(p43));
  CHECK(rp.kernel_order == 1);
  CHECK(rp.image_order == 172);

  PlanarMap c60 = fullerene_c60();
  RestrictionData rc = restrict_to_TG(c60, cellular_automorphisms(c60));
  CHECK(rc.image_order == 120);
  CHECK(rc.kernel_order * rc.image_order == 120);
}

TEST_CASE("rigidity and the kernel monomorphism") {
  for (const PlanarMap& m :
       {platonic("cube"), prism(10), antiprism(7), fullerene_c60(),
        grid_example(2, 2)}) {
    AutGroup g = cellular_automorphisms(m);
    CHECK(verify_rigidity(m, g));
    CHECK(verify_kernel_monomorphism(m, g));
  }
}

TEST_CASE("order bounds in both face-degree regimes") {
  OrderBoundReport cube = verify_order_bounds(platonic("cube"));
  CHECK(cube.small_case_applies);
  CHECK(cube.a == 8);
  CHECK(cube.b == 3);
  CHECK(cube.divides);

  for (int n : {43, 50, 60}) {
    OrderBoundReport p = verify_order_bounds(prism(n));
    CHECK_FALSE(p.small_case_applies);
    CHECK(p.order == 4 * n);
    CHECK(p.divides);
    OrderBoundReport a = verify_order_bounds(antiprism(n));
    CHECK(a.order == 4 * n);
    CHECK(a.divides);
  }
}

TEST_CASE("three-connectivity annotation") {
  CHECK(is_three_connected(platonic("tetrahedron")));
  CHECK(is_three_connected(prism(10)));
  CHECK(is_three_connected(fullerene_c60()));
  CHECK(is_three_connected(grid_example(1, 1)));
}
