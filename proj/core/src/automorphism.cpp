#include "tess/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

#include "tess/curvature.hpp"
#include "tess/error.hpp"

namespace tess {

std::vector<int> CellularAutomorphism::vertex_map(const PlanarMap& m) const {
  std::vector<int> vm(m.vertex_count());
  for (int vi = 0; vi < m.vertex_count(); ++vi)
    vm[vi] = m.origin(dart_map[m.rotation(vi)[0]]);
  return vm;
}

std::vector<int> CellularAutomorphism::face_map(const PlanarMap& m) const {
  std::vector<int> fm(m.face_count());
  for (int f = 0; f < m.face_count(); ++f) {
    int d = dart_map[m.face_darts(f)[0]];
    // a reversing symmetry walks the image face backwards, which is the
    // face on the other side of the image dart
    fm[f] = m.face_of(reversing ? PlanarMap::reverse(d) : d);
  }
  return fm;
}

bool CellularAutomorphism::is_identity() const {
  if (reversing) return false;
  for (int d = 0; d < static_cast<int>(dart_map.size()); ++d)
    if (dart_map[d] != d) return false;
  return true;
}

int AutGroup::preserving_count() const {
  int n = 0;
  for (const auto& e : elements) n += !e.reversing;
  return n;
}

namespace {

// Extends base_dart -> image across the whole map, or fails (empty).
std::optional<std::vector<int>> propagate(const PlanarMap& m, int image,
                                          bool reversing) {
  int n = m.dart_count();
  std::vector<int> map(n, -1), hit(n, 0);
  map[0] = image;
  hit[image] = 1;
  std::deque<int> queue = {0};
  auto assign = [&](int d, int e) {
    if (map[d] == e) return true;
    if (map[d] != -1 || hit[e]) return false;
    map[d] = e;
    hit[e] = 1;
    queue.push_back(d);
    return true;
  };
  while (!queue.empty()) {
    int d = queue.front();
    queue.pop_front();
    if (!assign(PlanarMap::reverse(d), PlanarMap::reverse(map[d])))
      return std::nullopt;
    int succ = reversing ? m.rot_prev(map[d]) : m.rot_next(map[d]);
    if (!assign(m.rot_next(d), succ)) return std::nullopt;
  }
  for (int d = 0; d < n; ++d)
    if (map[d] == -1) return std::nullopt;  // disconnected (cannot happen)
  return map;
}

}  // namespace

AutGroup cellular_automorphisms(const PlanarMap& m) {
  AutGroup g;
  for (int image = 0; image < m.dart_count(); ++image)
    for (bool reversing : {false, true})
      if (auto map = propagate(m, image, reversing))
        g.elements.push_back({std::move(*map), reversing});
  return g;
}

namespace {

std::vector<int> positive_vertices(const PlanarMap& m) {
  std::vector<int> out;
  for (int vi = 0; vi < m.vertex_count(); ++vi)
    if (curvature(m, vi) > 0) out.push_back(vi);
  return out;
}

}  // namespace

RestrictionData restrict_to_TG(const PlanarMap& m, const AutGroup& g) {
  std::vector<int> tg = positive_vertices(m);
  if (tg.empty())
    fail(errc::undefined_for_flat, "no positively curved vertices to act on");

  std::set<std::vector<int>> image;
  int kernel = 0;
  for (const auto& e : g.elements) {
    auto vm = e.vertex_map(m);
    std::vector<int> restricted;
    for (int vi : tg) restricted.push_back(vm[vi]);
    bool fixes = true;
    for (std::size_t i = 0; i < tg.size(); ++i)
      fixes = fixes && restricted[i] == tg[i];
    kernel += fixes;
    image.insert(std::move(restricted));
  }
  RestrictionData out{static_cast<int>(image.size()), kernel};
  if (out.image_order * out.kernel_order != g.order())
    fail(errc::invalid_argument, "restriction does not factor the group");
  return out;
}

bool verify_rigidity(const PlanarMap& m, const AutGroup& g) {
  for (const auto& e : g.elements) {
    if (e.is_identity()) continue;
    auto vm = e.vertex_map(m);
    auto fm = e.face_map(m);
    for (int f = 0; f < m.face_count(); ++f) {
      if (fm[f] != f) continue;
      auto verts = m.face_vertices(f);
      int k = static_cast<int>(verts.size());
      for (int i = 0; i < k; ++i) {
        int u = verts[i], w = verts[(i + 1) % k];
        if (vm[u] == u && vm[w] == w) return false;
      }
    }
  }
  return true;
}

OrderBoundReport verify_order_bounds(const PlanarMap& m) {
  OrderBoundReport r;
  AutGroup g = cellular_automorphisms(m);
  r.order = g.order();
  std::vector<int> tg = positive_vertices(m);
  r.a = static_cast<int>(tg.size());
  for (int vi : tg) r.b = std::max(r.b, m.degree(vi));
  for (int f = 0; f < m.face_count(); ++f)
    r.max_face = std::max(r.max_face, m.face_degree(f));
  r.small_case_applies = r.max_face <= 42;
  BigInt budget = r.small_case_applies
                      ? factorial(r.a) * factorial(r.b)
                      : BigInt(4) * r.max_face;
  r.divides = r.order > 0 && budget % r.order == 0;
  r.detail = r.small_case_applies
                 ? std::to_string(r.order) + " | " + std::to_string(r.a) +
                       "!*" + std::to_string(r.b) + "!"
                 : std::to_string(r.order) + " | 4*" +
                       std::to_string(r.max_face);
  return r;
}

bool verify_kernel_monomorphism(const PlanarMap& m, const AutGroup& g) {
  std::vector<int> tg = positive_vertices(m);
  std::set<int> tgset(tg.begin(), tg.end());

  std::vector<std::vector<int>> kernel_maps;
  for (const auto& e : g.elements) {
    auto vm = e.vertex_map(m);
    bool fixes = true;
    for (int vi : tg) fixes = fixes && vm[vi] == vi;
    if (fixes) kernel_maps.push_back(std::move(vm));
  }

  for (int v : tg) {
    std::set<std::vector<int>> seen;
    for (const auto& vm : kernel_maps) {
      std::vector<int> on_neighbors;
      for (int d : m.rotation(v)) on_neighbors.push_back(vm[m.target(d)]);
      if (!seen.insert(on_neighbors).second) return false;
    }
  }
  return true;
}

bool is_three_connected(const PlanarMap& m) {
  int n = m.vertex_count();
  if (n < 4) return false;
  for (int cut1 = 0; cut1 < n; ++cut1)
    for (int cut2 = cut1 + 1; cut2 < n; ++cut2) {
      int start = -1;
      for (int vi = 0; vi < n && start < 0; ++vi)
        if (vi != cut1 && vi != cut2) start = vi;
      std::vector<char> seen(n, 0);
      seen[cut1] = seen[cut2] = 1;
      std::deque<int> queue = {start};
      seen[start] = 1;
      int reached = 1;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int d : m.rotation(u)) {
          int w = m.target(d);
          if (!seen[w]) {
            seen[w] = 1;
            ++reached;
            queue.push_back(w);
          }
        }
      }
      if (reached < n - 2) return false;
    }
  return true;
}

}  // namespace tess
