#include "tess/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tess/error.hpp"

namespace tess {

namespace {

Patch assemble(RotationSpec spec,
               const std::vector<std::pair<VertexId, VertexId>>& outers) {
  PlanarMap m = PlanarMap::from_rotation_system(spec);
  std::vector<int> boundary;
  for (auto [u, w] : outers) boundary.push_back(m.face_with_dart(u, w));
  return {std::move(m), std::move(boundary)};
}

}  // namespace

Patch read_patch_text(std::istream& in) {
  RotationSpec spec;
  std::vector<std::pair<VertexId, VertexId>> outers;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    std::string colon;
    if (head == "v") {
      VertexId id;
      if (!(ls >> id >> colon) || colon != ":")
        fail(errc::malformed_input, "bad vertex line: " + line);
      std::vector<VertexId> nbrs;
      VertexId n;
      while (ls >> n) nbrs.push_back(n);
      spec.vertices.push_back({id, std::move(nbrs)});
    } else if (head == "outer") {
      VertexId u, w;
      if (!(ls >> colon >> u >> w) || colon != ":")
        fail(errc::malformed_input, "bad outer line: " + line);
      outers.push_back({u, w});
    } else {
      fail(errc::malformed_input, "unrecognized line: " + line);
    }
  }
  if (spec.vertices.empty()) fail(errc::malformed_input, "empty input");
  return assemble(std::move(spec), outers);
}

void write_patch_text(std::ostream& out, const Patch& p) {
  for (int vi = 0; vi < p.map.vertex_count(); ++vi) {
    out << "v " << p.map.label(vi) << " :";
    for (int d : p.map.rotation(vi)) out << ' ' << p.map.label(p.map.target(d));
    out << '\n';
  }
  for (int f : p.boundary_faces) {
    auto cyc = p.map.face_cycle_labels(f);
    out << "outer : " << cyc[0] << ' ' << cyc[1] << '\n';
  }
}

Patch read_patch_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::malformed_input, e.what());
  }
  try {
    RotationSpec spec;
    for (const auto& entry : j.at("rotation")) {
      VertexId id = entry.at(0).get<VertexId>();
      std::vector<VertexId> nbrs = entry.at(1).get<std::vector<VertexId>>();
      spec.vertices.push_back({id, std::move(nbrs)});
    }
    std::vector<std::pair<VertexId, VertexId>> outers;
    if (j.contains("outer"))
      for (const auto& o : j["outer"])
        outers.push_back({o.at(0).get<VertexId>(), o.at(1).get<VertexId>()});
    return assemble(std::move(spec), outers);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::malformed_input, e.what());
  }
}

void write_patch_json(std::ostream& out, const Patch& p) {
  nlohmann::json rotation = nlohmann::json::array();
  for (int vi = 0; vi < p.map.vertex_count(); ++vi) {
    nlohmann::json nbrs = nlohmann::json::array();
    for (int d : p.map.rotation(vi)) nbrs.push_back(p.map.label(p.map.target(d)));
    rotation.push_back({p.map.label(vi), nbrs});
  }
  nlohmann::json j{{"rotation", rotation}};
  if (!p.boundary_faces.empty()) {
    nlohmann::json outers = nlohmann::json::array();
    for (int f : p.boundary_faces) {
      auto cyc = p.map.face_cycle_labels(f);
      outers.push_back({cyc[0], cyc[1]});
    }
    j["outer"] = outers;
  }
  out << j.dump(2) << '\n';
}

Patch read_patch_auto(std::istream& in) {
  int c = in.peek();
  while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
    in.get();
    c = in.peek();
  }
  return c == '{' ? read_patch_json(in) : read_patch_text(in);
}

Patch read_patch_file(const std::string& path) {
  if (path == "-") return read_patch_auto(std::cin);
  std::ifstream f(path);
  if (!f) fail(errc::malformed_input, "cannot open " + path);
  return read_patch_auto(f);
}

}  // namespace tess
