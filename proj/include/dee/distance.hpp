#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include <Eigen/Core>

#include "dee/graph.hpp"

namespace dee {

using DistanceMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using DegreeVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

class DisconnectedGraph : public std::runtime_error {
 public:
  DisconnectedGraph() : std::runtime_error("graph is not connected") {}
};

/// Hop-count distances from one BFS per vertex. Throws DisconnectedGraph.
DistanceMatrix distance_matrix(const Graph& g);

/// Distance-based invariants of a connected graph.
///
/// wiener and the distance degrees are exact. geo_mean is the geometric mean
/// of the distance degrees, accumulated in log space; it is 0 for the single
/// vertex graph, whose only distance degree is 0.
struct DistanceProfile {
  DistanceMatrix dist;
  DegreeVector distance_degrees;
  std::int64_t wiener = 0;
  double geo_mean = 0.0;
  std::int64_t diameter = 0;

  int order() const { return static_cast<int>(dist.rows()); }
};

DistanceProfile distance_profile(const Graph& g);
DistanceProfile distance_profile(DistanceMatrix dist);

/// trace(D^k), exact. k = 1 is 0 and k = 2 is 2 * sum_{i<j} d_ij^2 by closed
/// form; larger k multiplies out the matrix power. Throws
/// std::invalid_argument for k < 1 and std::overflow_error if an entry of
/// D^k leaves int64.
std::int64_t spectral_moment_from_distances(const DistanceProfile& profile, int k);

/// The common distance degree r when every D_i equals r.
std::optional<std::int64_t> is_distance_degree_regular(const DistanceProfile& profile);

}  // namespace dee
