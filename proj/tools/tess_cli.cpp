#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tess/automorphism.hpp"
#include "tess/curvature.hpp"
#include "tess/discharging.hpp"
#include "tess/error.hpp"
#include "tess/generators.hpp"
#include "tess/io.hpp"
#include "tess/pattern_tables.hpp"
#include "tess/prismlike.hpp"

namespace {

using nlohmann::json;
using namespace tess;

PlanarMap run_generator(const std::vector<std::string>& words) {
  if (words.empty()) fail(errc::invalid_argument, "empty generator");
  const std::string& kind = words[0];
  auto num = [&](std::size_t i) {
    if (i >= words.size())
      fail(errc::invalid_argument, "missing argument for " + kind);
    return std::stoi(words[i]);
  };
  if (kind == "prism") return prism(num(1));
  if (kind == "antiprism") return antiprism(num(1));
  if (kind == "platonic") {
    if (words.size() < 2) fail(errc::invalid_argument, "missing solid name");
    return platonic(words[1]);
  }
  if (kind == "c60") return fullerene_c60();
  if (kind == "grid") return grid_example(num(1), num(2));
  fail(errc::invalid_argument, "unknown generator: " + kind);
}

int cmd_validate(const std::string& file) {
  Patch p = read_patch_file(file);
  ValidationReport r = validate_tessellation(p);
  auto line = [](const char* name, bool ok) {
    std::cout << name << ": " << (ok ? "ok" : "FAIL") << '\n';
  };
  line("disk-faces", r.disk_faces);
  line("edge-in-two-faces", r.edge_in_two_faces);
  line("closure-intersection", r.closure_intersection);
  line("vertex-degrees", r.vertex_degrees);
  line("face-degrees", r.face_degrees);
  return r.valid() ? 0 : 1;
}

int cmd_curvature(const std::string& file) {
  Patch p = read_patch_file(file);
  for (int vi : p.interior_vertex_indices())
    std::cout << p.map.label(vi) << ','
              << format_pattern(vertex_pattern(p.map, vi, p.boundary_faces))
              << ',' << format_rational(curvature(p.map, vi, p.boundary_faces))
              << '\n';
  return 0;
}

int cmd_total(const std::string& file) {
  Patch p = read_patch_file(file);
  std::cout << format_rational(curvature_profile(p).total) << '\n';
  return 0;
}

int cmd_classify(const std::string& file) {
  Patch p = read_patch_file(file);
  Classification c = classify_vertices(p.map, p.boundary_faces);
  auto section = [&](const char* name, const std::vector<VertexId>& vs) {
    std::cout << name << " (" << vs.size() << "):";
    for (VertexId v : vs) std::cout << ' ' << v;
    std::cout << '\n';
  };
  section("good", c.good);
  section("bad", c.bad);
  section("zero", c.zero);
  return 0;
}

int cmd_tables(const std::string& sign) {
  TableSign s;
  if (sign == "positive")
    s = TableSign::positive;
  else if (sign == "zero")
    s = TableSign::zero;
  else
    fail(errc::invalid_argument, "sign must be positive or zero");
  for (const auto& f : enumerate_families(s)) std::cout << f.format() << '\n';
  return 0;
}

int cmd_prismlike(const std::string& file) {
  Patch p = read_patch_file(file);
  json out;
  PrismlikeVerdict v = p.boundary_faces.empty() ? is_prismlike(p.map)
                                                : is_prismlike(p);
  out["prismlike"] = v.prismlike;
  out["witnesses"] = v.witnesses;
  if (v.prismlike && p.boundary_faces.empty()) {
    try {
      BandDecomposition bd = band_decomposition(subdivide_hexagons(p.map));
      json bands = json::array();
      for (const auto& band : bd.bands)
        bands.push_back({{"type", band.type == BandType::triangles
                                      ? "triangles"
                                      : "squares"},
                         {"faces", band.faces.size()}});
      out["bands"] = bands;
    } catch (const error& e) {
      out["band_error"] = e.what();
    }
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

json certificate_json(const DischargingCertificate& cert) {
  json transfers = json::array();
  for (const auto& t : cert.transfers)
    transfers.push_back({{"from", t.from},
                         {"to", t.to},
                         {"amount", format_rational(t.amount)}});
  return {{"transfers", transfers},
          {"radius", cert.radius},
          {"threshold", format_rational(cert.threshold)}};
}

DischargingCertificate certificate_from_json(const json& j) {
  DischargingCertificate cert;
  try {
    cert.radius = j.at("radius").get<int>();
    cert.threshold = parse_rational(j.at("threshold").get<std::string>());
    for (const auto& t : j.at("transfers"))
      cert.transfers.push_back(
          {t.at("from").get<VertexId>(), t.at("to").get<VertexId>(),
           parse_rational(t.at("amount").get<std::string>())});
  } catch (const json::exception& e) {
    fail(errc::malformed_input, e.what());
  }
  return cert;
}

int cmd_discharge(const std::string& file, int radius,
                  const std::string& threshold) {
  Patch p = read_patch_file(file);
  auto cert = find_certificate(p.map, radius, parse_rational(threshold),
                               p.boundary_faces);
  if (!cert) {
    std::cout << "infeasible\n";
    return 1;
  }
  json out = certificate_json(*cert);
  out["bound"] =
      bound_from_certificate(p.map, *cert, p.boundary_faces)
          .convert_to<long long>();
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_discharge_verify(const std::string& file, const std::string& cert_file) {
  Patch p = read_patch_file(file);
  std::ifstream cf(cert_file);
  if (!cf) fail(errc::malformed_input, "cannot open " + cert_file);
  json j;
  try {
    cf >> j;
  } catch (const json::exception& e) {
    fail(errc::malformed_input, e.what());
  }
  auto check = verify_certificate(p.map, certificate_from_json(j),
                                  p.boundary_faces);
  if (check.ok) {
    std::cout << "valid\n";
    return 0;
  }
  for (const auto& v : check.violations) std::cout << v << '\n';
  return 1;
}

int cmd_aut(const std::string& file, bool verify_bounds) {
  Patch p = read_patch_file(file);
  AutGroup g = cellular_automorphisms(p.map);
  json out;
  out["order"] = g.order();
  out["orientation_split"] = {{"preserving", g.preserving_count()},
                              {"reversing", g.order() - g.preserving_count()}};
  out["three_connected"] = is_three_connected(p.map);
  if (verify_bounds) {
    OrderBoundReport r = verify_order_bounds(p.map);
    out["a"] = r.a;
    out["b"] = r.b;
    out["max_face_degree"] = r.max_face;
    out["divisibility"] = r.detail;
    out["divides"] = r.divides;
    out["rigidity"] = verify_rigidity(p.map, g);
    std::cout << out.dump(2) << '\n';
    return r.divides ? 0 : 1;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_generate(const std::vector<std::string>& words) {
  PlanarMap m = run_generator(words);
  write_patch_text(std::cout, {std::move(m), {}});
  return 0;
}

int cmd_glue(const std::string& left, const std::string& right,
             const std::string& corr_file) {
  GlueSpec spec;
  spec.left = read_patch_file(left);
  spec.right = read_patch_file(right);
  std::ifstream cf(corr_file);
  if (!cf) fail(errc::malformed_input, "cannot open " + corr_file);
  VertexId l, r;
  while (cf >> l >> r) spec.correspondence.push_back({l, r});
  write_patch_text(std::cout, glue_patches(spec));
  return 0;
}

int cmd_subdivide(const std::string& file) {
  Patch p = read_patch_file(file);
  if (!p.boundary_faces.empty())
    fail(errc::invalid_argument, "subdivision expects a closed map");
  write_patch_text(std::cout, {subdivide_hexagons(p.map), {}});
  return 0;
}

int cmd_corpus(const std::string& manifest_file) {
  std::ifstream mf(manifest_file);
  if (!mf) fail(errc::malformed_input, "cannot open " + manifest_file);
  json manifest;
  try {
    mf >> manifest;
  } catch (const json::exception& e) {
    fail(errc::malformed_input, e.what());
  }

  int failures = 0;
  for (const auto& entry : manifest) {
    std::string name = entry.at("name").get<std::string>();
    Patch p;
    if (entry.contains("generate")) {
      p = {run_generator(entry["generate"].get<std::vector<std::string>>()),
           {}};
    } else {
      std::string path = entry.at("file").get<std::string>();
      if (!std::ifstream(path)) {
        std::cout << name << ": SKIP (missing " << path << ")\n";
        continue;
      }
      p = read_patch_file(path);
    }
    std::vector<std::string> bad;
    if (!validate_tessellation(p).valid()) bad.push_back("invalid");
    CurvatureProfile prof = curvature_profile(p);
    if (entry.contains("total") &&
        prof.total != parse_rational(entry["total"].get<std::string>()))
      bad.push_back("total=" + format_rational(prof.total));
    if (entry.contains("t_g") &&
        prof.t_g.size() != entry["t_g"].get<std::size_t>())
      bad.push_back("t_g=" + std::to_string(prof.t_g.size()));
    if (entry.contains("prismlike") &&
        is_prismlike(p.map).prismlike != entry["prismlike"].get<bool>())
      bad.push_back("prismlike mismatch");
    if (entry.contains("discharge_bound")) {
      auto cert = find_certificate(p.map, 4, Q(1, 132), p.boundary_faces);
      if (!cert)
        bad.push_back("discharge infeasible");
      else if (bound_from_certificate(p.map, *cert, p.boundary_faces) !=
               entry["discharge_bound"].get<long long>())
        bad.push_back("discharge bound mismatch");
    }
    if (entry.contains("aut_order") &&
        cellular_automorphisms(p.map).order() !=
            entry["aut_order"].get<int>())
      bad.push_back("aut mismatch");
    if (bad.empty()) {
      std::cout << name << ": ok\n";
    } else {
      ++failures;
      std::cout << name << ": FAIL (";
      for (std::size_t i = 0; i < bad.size(); ++i)
        std::cout << (i ? "; " : "") << bad[i];
      std::cout << ")\n";
    }
  }
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact curvature toolkit for planar tessellations"};
  app.require_subcommand(1);

  std::string file = "-", sign = "positive", threshold = "1/132";
  std::string left, right, corr, cert_file;
  int radius = 4;
  bool verify_bounds = false;
  std::vector<std::string> gen_words;

  auto* validate = app.add_subcommand("validate", "check tessellation axioms");
  validate->add_option("file", file);
  auto* curv = app.add_subcommand("curvature", "per-vertex pattern and Phi");
  curv->add_option("file", file);
  auto* total = app.add_subcommand("total", "total curvature");
  total->add_option("file", file);
  auto* classify = app.add_subcommand("classify", "good/bad/zero split");
  classify->add_option("file", file);
  auto* tables = app.add_subcommand("tables", "pattern tables");
  tables->add_option("--sign", sign, "positive or zero");
  auto* plike = app.add_subcommand("prismlike", "prism-like verdict");
  plike->add_option("file", file);
  auto* disch = app.add_subcommand("discharge", "find a discharge plan");
  auto* disch_verify =
      disch->add_subcommand("verify", "check a certificate file");
  disch_verify->add_option("file", file)->required();
  disch_verify->add_option("cert", cert_file)->required();
  disch->add_option("file", file);
  disch->add_option("--radius", radius);
  disch->add_option("--threshold", threshold);
  auto* aut = app.add_subcommand("aut", "cellular automorphism group");
  aut->add_option("file", file);
  aut->add_flag("--verify-bounds", verify_bounds);
  auto* gen = app.add_subcommand("generate", "emit a named family member");
  gen->add_option("kind", gen_words, "prism|antiprism|platonic|c60|grid")
      ->expected(-1);
  gen->add_option("--n", [&gen_words](const std::vector<std::string>& v) {
    gen_words.push_back(v[0]);
    return true;
  });
  gen->add_option("--name", [&gen_words](const std::vector<std::string>& v) {
    gen_words.push_back(v[0]);
    return true;
  });
  gen->add_option("--a", [&gen_words](const std::vector<std::string>& v) {
    gen_words.push_back(v[0]);
    return true;
  });
  gen->add_option("--b", [&gen_words](const std::vector<std::string>& v) {
    gen_words.push_back(v[0]);
    return true;
  });
  auto* glue = app.add_subcommand("glue", "glue two patches");
  glue->add_option("--left", left)->required();
  glue->add_option("--right", right)->required();
  glue->add_option("--corr", corr)->required();
  auto* subdiv = app.add_subcommand("subdivide-hex", "triangulate hexagons");
  subdiv->add_option("file", file);
  auto* corpus = app.add_subcommand("corpus", "run a manifest of checks");
  corpus->add_option("manifest", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*curv) return cmd_curvature(file);
    if (*total) return cmd_total(file);
    if (*classify) return cmd_classify(file);
    if (*tables) return cmd_tables(sign);
    if (*plike) return cmd_prismlike(file);
    if (*disch) {
      if (*disch_verify) return cmd_discharge_verify(file, cert_file);
      return cmd_discharge(file, radius, threshold);
    }
    if (*aut) return cmd_aut(file, verify_bounds);
    if (*gen) return cmd_generate(gen_words);
    if (*glue) return cmd_glue(left, right, corr);
    if (*subdiv) return cmd_subdivide(file);
    if (*corpus) return cmd_corpus(file);
  } catch (const error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return e.code() == errc::malformed_input ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
