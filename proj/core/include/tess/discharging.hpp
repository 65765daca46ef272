#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tess/planar_map.hpp"
#include "tess/rational.hpp"

namespace tess {

struct Transfer {
  VertexId from;
  VertexId to;
  Q amount;  // > 0
};

// A charge-redistribution plan: after applying the transfers, every
// positively curved vertex carries at least `threshold` and nothing goes
// negative. Total charge is conserved by construction.
struct DischargingCertificate {
  std::vector<Transfer> transfers;
  int radius = 4;
  Q threshold = Q(1, 132);
};

// Finds a plan moving surplus from vertices with Phi >= threshold to those
// with 0 < Phi < threshold, each transfer within graph distance `radius`.
// Solved as an exact max-flow (capacities scaled to integers by the common
// denominator); nullopt when no plan exists at this radius.
std::optional<DischargingCertificate> find_certificate(
    const PlanarMap& m, int radius = 4, Q threshold = Q(1, 132),
    std::span<const int> boundary_faces = {});

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

CertificateCheck verify_certificate(const PlanarMap& m,
                                    const DischargingCertificate& cert,
                                    std::span<const int> boundary_faces = {});

// floor(total curvature / threshold): with a verified certificate this
// bounds the number of positively curved vertices.
BigInt bound_from_certificate(const PlanarMap& m,
                              const DischargingCertificate& cert,
                              std::span<const int> boundary_faces = {});

}  // namespace tess
