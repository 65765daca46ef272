#include "tess/prismlike.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tess/curvature.hpp"
#include "tess/error.hpp"

namespace tess {

PrismlikeVerdict is_prismlike(const PlanarMap& m) {
  PrismlikeVerdict v;
  for (int f = 0; f < m.face_count(); ++f)
    if (m.face_degree(f) >= kLargeFaceThreshold) v.witnesses.push_back(f);
  v.prismlike = v.witnesses.size() >= 2;
  return v;
}

PrismlikeVerdict is_prismlike(const Patch& p) {
  PrismlikeVerdict v;
  for (int f = 0; f < p.map.face_count(); ++f) {
    if (std::count(p.boundary_faces.begin(), p.boundary_faces.end(), f))
      continue;
    if (p.map.face_degree(f) < kLargeFaceThreshold) continue;
    bool complete = true;
    for (int vi : p.map.face_vertices(f))
      complete = complete && !p.is_boundary_vertex(vi);
    if (complete) v.witnesses.push_back(f);
  }
  v.prismlike = !v.witnesses.empty();
  return v;
}

BandDecomposition band_decomposition(const PlanarMap& m) {
  auto verdict = is_prismlike(m);
  if (!verdict.prismlike)
    fail(errc::invalid_argument, "not a prism-like map");
  if (verdict.witnesses.size() != 2)
    fail(errc::not_prismlike_structure,
         "expected exactly two large faces, found " +
             std::to_string(verdict.witnesses.size()));

  BandDecomposition out;
  out.sigma1 = verdict.witnesses[0];
  out.sigma2 = verdict.witnesses[1];
  if (m.face_degree(out.sigma1) != m.face_degree(*out.sigma2))
    fail(errc::not_prismlike_structure, "large faces of unequal degree");

  auto v1 = m.face_vertices(out.sigma1);
  auto v2 = m.face_vertices(*out.sigma2);
  std::set<int> s1(v1.begin(), v1.end()), s2(v2.begin(), v2.end());
  for (int vi : s1)
    if (s2.count(vi))
      fail(errc::not_prismlike_structure, "large face boundaries intersect");

  // positive curvature must live exactly on the two rims
  for (int vi = 0; vi < m.vertex_count(); ++vi) {
    bool rim = s1.count(vi) || s2.count(vi);
    Q phi = curvature(m, vi);
    if (phi < 0 || (phi > 0) != rim)
      fail(errc::not_prismlike_structure,
           "curvature off the rims at vertex " + std::to_string(m.label(vi)));
  }

  std::vector<int> sources(s1.begin(), s1.end());
  auto dist = m.distances_from(sources);

  std::map<int, Band> bands;  // index i -> L_i
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == out.sigma1 || f == *out.sigma2) continue;
    int deg = m.face_degree(f);
    if (deg != 3 && deg != 4)
      fail(errc::not_prismlike_structure,
           "band face of degree " + std::to_string(deg));
    int d = m.vertex_count();
    for (int vi : m.face_vertices(f)) d = std::min(d, dist[vi]);
    Band& band = bands[d + 1];
    BandType type = deg == 3 ? BandType::triangles : BandType::squares;
    if (!band.faces.empty() && band.type != type)
      fail(errc::not_prismlike_structure,
           "mixed face types in band " + std::to_string(d + 1));
    band.type = type;
    band.faces.push_back(f);
  }
  int expect = 1;
  for (auto& [i, band] : bands) {
    if (i != expect++)
      fail(errc::not_prismlike_structure, "gap in band indices");
    std::sort(band.faces.begin(), band.faces.end());
    out.bands.push_back(std::move(band));
  }
  return out;
}

Q large_face_curvature_sum(const PlanarMap& m, int sigma,
                           std::span<const int> boundary_faces) {
  if (sigma < 0 || sigma >= m.face_count() ||
      m.face_degree(sigma) < kLargeFaceThreshold)
    fail(errc::invalid_argument, "face is not large enough");
  Q sum = 0;
  for (int vi : m.face_vertices(sigma)) {
    for (int f : m.faces_at(vi))
      for (int bf : boundary_faces)
        if (f == bf)
          fail(errc::invalid_argument, "large face touches the boundary");
    Q phi = curvature(m, vi, boundary_faces);
    if (phi < 0) fail(errc::invalid_argument, "negative curvature on the rim");
    sum += phi;
  }
  if (sum < 1)
    fail(errc::not_prismlike_structure, "rim curvature sum below 1");
  return sum;
}

}  // namespace tess
