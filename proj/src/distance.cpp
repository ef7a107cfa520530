#include "dee/distance.hpp"

#include <cmath>
#include <queue>

namespace dee {

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  const auto adj = g.adjacency();
  DistanceMatrix dist = DistanceMatrix::Constant(n, n, -1);
  std::queue<Vertex> frontier;
  for (Vertex root = 0; root < n; ++root) {
    dist(root, root) = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      for (Vertex v : adj[u]) {
        if (dist(root, v) < 0) {
          dist(root, v) = dist(root, u) + 1;
          frontier.push(v);
        }
      }
    }
  }
  if ((dist.array() < 0).any()) throw DisconnectedGraph();
  return dist;
}

DistanceProfile distance_profile(const Graph& g) { return distance_profile(distance_matrix(g)); }

DistanceProfile distance_profile(DistanceMatrix dist) {
  DistanceProfile p;
  p.distance_degrees = dist.rowwise().sum();
  p.wiener = p.distance_degrees.sum() / 2;
  p.diameter = dist.size() ? dist.maxCoeff() : 0;
  const auto n = dist.rows();
  if (n == 1) {
    p.geo_mean = 0.0;
  } else {
    double log_sum = 0.0;
    for (auto d : p.distance_degrees) log_sum += std::log(static_cast<double>(d));
    p.geo_mean = std::exp(log_sum / static_cast<double>(n));
  }
  p.dist = std::move(dist);
  return p;
}

namespace {

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
    throw std::overflow_error("spectral moment exceeds 64-bit range");
  return acc;
}

}  // namespace

std::int64_t spectral_moment_from_distances(const DistanceProfile& profile, int k) {
  if (k < 1) throw std::invalid_argument("spectral moment order must be >= 1");
  const auto& d = profile.dist;
  const auto n = d.rows();
  if (k == 1) return 0;
  if (k == 2) {
    std::int64_t sum = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) sum = checked_mul_add(sum, d(i, j), d(i, j));
    return 2 * sum;
  }
  // power = D^(k-1); the trace of D^k is the Frobenius product with D.
  DistanceMatrix power = d;
  for (int step = 2; step < k; ++step) {
    DistanceMatrix next(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (Eigen::Index l = 0; l < n; ++l) acc = checked_mul_add(acc, power(i, l), d(l, j));
        next(i, j) = acc;
      }
    power = std::move(next);
  }
  std::int64_t trace = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index l = 0; l < n; ++l) trace = checked_mul_add(trace, power(i, l), d(l, i));
  return trace;
}

std::optional<std::int64_t> is_distance_degree_regular(const DistanceProfile& profile) {
  const auto& deg = profile.distance_degrees;
  if (deg.size() == 0) return std::nullopt;
  if ((deg.array() == deg(0)).all()) return deg(0);
  return std::nullopt;
}

}  // namespace dee
