#include "tess/curvature.hpp"

#include <algorithm>

namespace tess {

std::string format_pattern(const Pattern& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Q pattern_curvature(const Pattern& p) {
  Q phi = 1 - Q(static_cast<int>(p.size()), 2);
  for (int a : p) phi += Q(1, a);
  return phi;
}

namespace {

bool on_boundary(const PlanarMap& m, int vi, std::span<const int> boundary) {
  for (int f : boundary)
    if (m.face_touches(f, vi)) return true;
  return false;
}

}  // namespace

Pattern vertex_pattern(const PlanarMap& m, int vi,
                       std::span<const int> boundary_faces) {
  if (on_boundary(m, vi, boundary_faces))
    fail(errc::incomplete_pattern,
         "vertex " + std::to_string(m.label(vi)) + " lies on the boundary");
  Pattern p;
  p.reserve(m.degree(vi));
  for (int f : m.faces_at(vi)) p.push_back(m.face_degree(f));
  std::sort(p.begin(), p.end());
  return p;
}

Q curvature(const PlanarMap& m, int vi, std::span<const int> boundary_faces) {
  return pattern_curvature(vertex_pattern(m, vi, boundary_faces));
}

CurvatureProfile curvature_profile(const PlanarMap& m,
                                   std::span<const int> boundary_faces) {
  CurvatureProfile profile;
  profile.total = 0;
  for (int vi = 0; vi < m.vertex_count(); ++vi) {
    if (on_boundary(m, vi, boundary_faces)) continue;
    Q phi = curvature(m, vi, boundary_faces);
    profile.total += phi;
    if (phi > 0) profile.t_g.push_back(m.label(vi));
    profile.phi.emplace(m.label(vi), std::move(phi));
  }
  std::sort(profile.t_g.begin(), profile.t_g.end());
  return profile;
}

CurvatureProfile curvature_profile(const Patch& p) {
  return curvature_profile(p.map, p.boundary_faces);
}

VertexClass classify_pattern(const Pattern& p) {
  const Q phi = pattern_curvature(p);
  if (phi < 0)
    fail(errc::not_nonnegatively_curved,
         "pattern " + format_pattern(p) + " has negative curvature");
  if (phi == 0) return VertexClass::zero;
  return phi >= good_threshold() ? VertexClass::good : VertexClass::bad;
}

Classification classify_vertices(const PlanarMap& m,
                                 std::span<const int> boundary_faces) {
  Classification c;
  const CurvatureProfile profile = curvature_profile(m, boundary_faces);
  for (const auto& [label, phi] : profile.phi) {
    if (phi < 0)
      fail(errc::not_nonnegatively_curved,
           "vertex " + std::to_string(label) + " has curvature " +
               format_rational(phi));
    if (phi == 0)
      c.zero.push_back(label);
    else if (phi >= good_threshold())
      c.good.push_back(label);
    else
      c.bad.push_back(label);
  }
  return c;
}

bool check_twelfth_integrality(const CurvatureProfile& profile) {
  return boost::multiprecision::denominator(Q(profile.total * 12)) == 1;
}

}  // namespace tess
