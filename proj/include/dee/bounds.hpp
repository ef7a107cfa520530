#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "dee/distance.hpp"
#include "dee/graph.hpp"
#include "dee/spectral.hpp"

namespace dee {

/// A positive quantity rest + e^exponent, kept in this form so that bounds
/// whose exponential leaves double range can still be compared and printed.
struct ExpSum {
  double rest = 0.0;
  double exponent = 0.0;

  /// +infinity when e^exponent is not representable.
  double value() const;
  /// Natural log of the quantity, finite whenever exponent is.
  double log() const;
  bool representable() const;
};

inline ExpSum as_exp_sum(const DeeValue& d) { return {d.split_rest, d.split_lead}; }

/// a <= b * (1 + rel_slack), evaluated in log space.
bool le_within(const ExpSum& a, const ExpSum& b, double rel_slack);
/// |a - b| <= rel * b, evaluated in log space.
bool rel_equal(const ExpSum& a, const ExpSum& b, double rel);

/// e^x + (n-1) e^(-x/(n-1)); e^x alone when n = 1. Increasing in x >= 0.
/// Throws std::invalid_argument for x < 0 or n < 1.
double f_monotone(double x, int n);
ExpSum f_monotone_split(double x, int n);

/// sqrt((4W^2 - M^2 n) / (n (n-1))), a lower bound on mu_1; 0 when n = 1.
/// Throws std::invalid_argument when 4W^2 < M^2 n.
double mu1_lower_bound_wiener(double wiener, double geo_mean, int n);
/// sqrt(sum D_i^2 / n).
double mu1_lower_bound_degrees(const DistanceProfile& profile);

/// f(mu1_lower_bound_wiener); exactly 1 for the single vertex.
ExpSum lower_bound_thm1(const DistanceProfile& profile);
/// n - 1 + e^sqrt(2 diameter W).
ExpSum upper_bound_thm1(const DistanceProfile& profile);
/// f(mu1): the bound before mu_1 is estimated from W and M.
ExpSum lower_bound_spectral(double mu1, int n);
/// f(2W/n).
ExpSum lower_bound_prior(double wiener, int n);
/// n - 1 + e^(diameter sqrt(n (n-1))).
ExpSum upper_bound_prior(std::int64_t diameter, int n);

struct Corollary1Bounds {
  ExpSum lower;
  ExpSum upper;
};

/// For distance-degree regular graphs with common distance degree r:
/// lower f(r), upper n - 1 + e^sqrt(diameter n r).
Corollary1Bounds corollary1_bounds(double r, std::int64_t diameter, int n);

/// Relative tolerance for the equality flags.
inline constexpr double kEqualityTolerance = 1e-9;

struct BoundsReport {
  DistanceProfile profile;
  DSpectrum spectrum;
  DeeValue dee_exact;

  ExpSum lower_thm1;
  ExpSum upper_thm1;
  ExpSum lower_spectral;
  double mu1_lb_degrees = 0.0;
  double mu1_lb_wiener = 0.0;
  ExpSum lower_prior;
  ExpSum upper_prior;
  std::optional<Corollary1Bounds> corollary1;
  bool equality_lower = false;
  bool equality_upper = false;
};

/// Throws DisconnectedGraph, or the eigensolver's errors.
BoundsReport bounds_report(const Graph& g, const JacobiOptions& options = {});

}  // namespace dee
