#include "tess/discharging.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

#include "tess/curvature.hpp"
#include "tess/error.hpp"

namespace tess {

namespace {

// Dinic over arbitrary-precision integers; tiny graphs, no unit-cap tricks
// needed.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1) {}

  int add_arc(int u, int v, BigInt cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(v);
    next_.push_back(head_[u]);
    head_[u] = id;
    cap_.push_back(std::move(cap));
    to_.push_back(u);
    next_.push_back(head_[v]);
    head_[v] = id + 1;
    cap_.push_back(0);
    return id;
  }

  const BigInt& residual(int arc) const { return cap_[arc]; }
  BigInt flow_on(int arc) const { return cap_[arc ^ 1]; }

  BigInt run(int s, int t) {
    BigInt inf = 1;
    for (int e = head_[s]; e != -1; e = next_[e]) inf += cap_[e];
    BigInt total = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      for (;;) {
        BigInt pushed = dfs(s, t, inf);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

 private:
  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e != -1; e = next_[e])
        if (cap_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[u] + 1;
          q.push(to_[e]);
        }
    }
    return level_[t] >= 0;
  }

  BigInt dfs(int u, int t, const BigInt& limit) {
    if (u == t) return limit;
    for (int& e = iter_[u]; e != -1; e = next_[e]) {
      int v = to_[e];
      if (cap_[e] == 0 || level_[v] != level_[u] + 1) continue;
      BigInt pushed = dfs(v, t, std::min(limit, cap_[e]));
      if (pushed > 0) {
        cap_[e] -= pushed;
        cap_[e ^ 1] += pushed;
        return pushed;
      }
    }
    level_[u] = -1;
    return 0;
  }

  std::vector<int> head_, next_, to_, iter_, level_;
  std::vector<BigInt> cap_;
};

}  // namespace

std::optional<DischargingCertificate> find_certificate(
    const PlanarMap& m, int radius, Q threshold,
    std::span<const int> boundary_faces) {
  CurvatureProfile profile = curvature_profile(m, boundary_faces);

  std::vector<int> good, bad;  // split against the requested threshold
  for (const auto& [v, phi] : profile.phi) {
    if (phi < 0)
      fail(errc::not_nonnegatively_curved,
           "negative curvature at vertex " + std::to_string(v));
    if (phi >= threshold)
      good.push_back(m.index_of(v));
    else if (phi > 0)
      bad.push_back(m.index_of(v));
  }

  DischargingCertificate cert;
  cert.radius = radius;
  cert.threshold = threshold;
  if (bad.empty()) return cert;
  if (good.empty()) return std::nullopt;

  // common denominator so all arc capacities are integers
  BigInt scale = 1;
  auto surplus = [&](int vi) {
    return curvature(m, vi, boundary_faces) - threshold;
  };
  auto deficit = [&](int vi) {
    return threshold - curvature(m, vi, boundary_faces);
  };
  for (int vi : good) scale = lcm(scale, denominator(surplus(vi)));
  for (int vi : bad) scale = lcm(scale, denominator(deficit(vi)));
  auto scaled = [&](const Q& q) {
    return BigInt(numerator(q) * (scale / denominator(q)));
  };

  int n_good = static_cast<int>(good.size());
  int n_bad = static_cast<int>(bad.size());
  int source = n_good + n_bad, sink = source + 1;
  MaxFlow net(sink + 1);
  BigInt demand = 0;
  std::vector<int> bad_arcs;
  for (int i = 0; i < n_good; ++i)
    net.add_arc(source, i, scaled(surplus(good[i])));
  for (int j = 0; j < n_bad; ++j) {
    BigInt c = scaled(deficit(bad[j]));
    demand += c;
    bad_arcs.push_back(net.add_arc(n_good + j, sink, c));
  }

  std::vector<std::array<int, 2>> pair_arcs;  // (good index, arc id)
  for (int j = 0; j < n_bad; ++j) {
    auto dist = m.distances_from(std::vector<int>{bad[j]});
    for (int i = 0; i < n_good; ++i)
      if (dist[good[i]] >= 0 && dist[good[i]] <= radius)
        pair_arcs.push_back({i, net.add_arc(i, n_good + j, demand)});
  }

  if (net.run(source, sink) != demand) return std::nullopt;

  std::size_t at = 0;
  for (int j = 0; j < n_bad; ++j) {
    auto dist = m.distances_from(std::vector<int>{bad[j]});
    for (int i = 0; i < n_good; ++i) {
      if (dist[good[i]] < 0 || dist[good[i]] > radius) continue;
      BigInt f = net.flow_on(pair_arcs[at++][1]);
      if (f > 0)
        cert.transfers.push_back(
            {m.label(good[i]), m.label(bad[j]), Q(f, scale)});
    }
  }
  return cert;
}

CertificateCheck verify_certificate(const PlanarMap& m,
                                    const DischargingCertificate& cert,
                                    std::span<const int> boundary_faces) {
  CertificateCheck out;
  auto flag = [&](const std::string& s) {
    out.ok = false;
    out.violations.push_back(s);
  };

  std::map<VertexId, Q> delta;
  for (const auto& t : cert.transfers) {
    if (!m.has_label(t.from) || !m.has_label(t.to)) {
      flag("transfer references unknown vertex");
      continue;
    }
    if (t.amount <= 0) flag("non-positive transfer amount");
    if (m.graph_distance(t.from, t.to) > cert.radius)
      flag("transfer beyond radius: " + std::to_string(t.from) + " -> " +
           std::to_string(t.to));
    delta[t.from] -= t.amount;
    delta[t.to] += t.amount;
  }

  CurvatureProfile profile = curvature_profile(m, boundary_faces);
  Q after_total = 0;
  for (const auto& [v, phi] : profile.phi) {
    Q after = phi + (delta.count(v) ? delta[v] : Q(0));
    after_total += after;
    if (after < 0)
      flag("vertex " + std::to_string(v) + " driven negative");
    if (phi > 0 && after < cert.threshold)
      flag("positively curved vertex " + std::to_string(v) +
           " below threshold after transfers");
  }
  for (const auto& [v, d] : delta)
    if (!profile.phi.count(v)) flag("transfer touches a boundary vertex");
  if (after_total != profile.total) flag("charge not conserved");
  return out;
}

BigInt bound_from_certificate(const PlanarMap& m,
                              const DischargingCertificate& cert,
                              std::span<const int> boundary_faces) {
  auto check = verify_certificate(m, cert, boundary_faces);
  if (!check.ok)
    fail(errc::invalid_argument, "certificate does not verify: " +
                                     check.violations.front());
  CurvatureProfile profile = curvature_profile(m, boundary_faces);
  BigInt bound = floor_rational(profile.total / cert.threshold);
  if (BigInt(profile.t_g.size()) > bound)
    fail(errc::invalid_argument, "bound contradicted by the vertex count");
  return bound;
}

}  // namespace tess
