#include "dee/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dee {

double ExpSum::value() const { return rest + std::exp(exponent); }

double ExpSum::log() const {
  if (rest <= 0.0) return exponent;
  const double log_rest = std::log(rest);
  const double hi = std::max(exponent, log_rest);
  const double lo = std::min(exponent, log_rest);
  return hi + std::log1p(std::exp(lo - hi));
}

bool ExpSum::representable() const { return std::isfinite(value()); }

bool le_within(const ExpSum& a, const ExpSum& b, double rel_slack) {
  return a.log() <= b.log() + std::log1p(rel_slack);
}

bool rel_equal(const ExpSum& a, const ExpSum& b, double rel) {
  // |a - b| <= rel b  <=>  log(1 - rel) <= log a - log b <= log(1 + rel)
  const double diff = a.log() - b.log();
  return diff <= std::log1p(rel) && diff >= std::log1p(-rel);
}

ExpSum f_monotone_split(double x, int n) {
  if (!(x >= 0.0)) throw std::invalid_argument("f requires x >= 0");
  if (n < 1) throw std::invalid_argument("f requires n >= 1");
  if (n == 1) return {0.0, x};
  const double m = n - 1;
  return {m * std::exp(-x / m), x};
}

double f_monotone(double x, int n) { return f_monotone_split(x, n).value(); }

double mu1_lower_bound_wiener(double wiener, double geo_mean, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n == 1) return 0.0;
  const double numer = 4.0 * wiener * wiener - geo_mean * geo_mean * n;
  if (numer < 0.0) throw std::invalid_argument("inconsistent inputs: 4W^2 < M^2 n");
  return std::sqrt(numer / (static_cast<double>(n) * (n - 1)));
}

double mu1_lower_bound_degrees(const DistanceProfile& profile) {
  const Eigen::VectorXd d = profile.distance_degrees.cast<double>();
  return std::sqrt(d.squaredNorm() / static_cast<double>(d.size()));
}

ExpSum lower_bound_thm1(const DistanceProfile& profile) {
  const int n = profile.order();
  if (n == 1) return {0.0, 0.0};
  return f_monotone_split(
      mu1_lower_bound_wiener(static_cast<double>(profile.wiener), profile.geo_mean, n), n);
}

ExpSum upper_bound_thm1(const DistanceProfile& profile) {
  const double product = 2.0 * static_cast<double>(profile.diameter) * static_cast<double>(profile.wiener);
  return {static_cast<double>(profile.order() - 1), std::sqrt(product)};
}

ExpSum lower_bound_spectral(double mu1, int n) {
  if (mu1 < 0.0) throw std::invalid_argument("largest D-eigenvalue must be non-negative");
  return f_monotone_split(mu1, n);
}

ExpSum lower_bound_prior(double wiener, int n) { return f_monotone_split(2.0 * wiener / n, n); }

ExpSum upper_bound_prior(std::int64_t diameter, int n) {
  const double nn = n;
  return {nn - 1.0, static_cast<double>(diameter) * std::sqrt(nn * (nn - 1.0))};
}

Corollary1Bounds corollary1_bounds(double r, std::int64_t diameter, int n) {
  return {f_monotone_split(r, n),
          {static_cast<double>(n - 1), std::sqrt(static_cast<double>(diameter) * n * r)}};
}

BoundsReport bounds_report(const Graph& g, const JacobiOptions& options) {
  BoundsReport rep;
  rep.profile = distance_profile(g);
  rep.spectrum = d_spectrum(rep.profile.dist, options);
  rep.dee_exact = dee(rep.spectrum);

  const auto& p = rep.profile;
  const int n = p.order();
  const double w = static_cast<double>(p.wiener);
  rep.mu1_lb_degrees = mu1_lower_bound_degrees(p);
  rep.mu1_lb_wiener = mu1_lower_bound_wiener(w, p.geo_mean, n);
  rep.lower_thm1 = lower_bound_thm1(p);
  rep.upper_thm1 = upper_bound_thm1(p);
  // Rounding can leave mu_1 of K_1 a hair below zero.
  rep.lower_spectral = lower_bound_spectral(std::max(0.0, rep.spectrum.largest()), n);
  rep.lower_prior = lower_bound_prior(w, n);
  rep.upper_prior = upper_bound_prior(p.diameter, n);
  if (auto r = is_distance_degree_regular(p))
    rep.corollary1 = corollary1_bounds(static_cast<double>(*r), p.diameter, n);

  const ExpSum exact = as_exp_sum(rep.dee_exact);
  rep.equality_lower = rel_equal(rep.lower_thm1, exact, kEqualityTolerance);
  rep.equality_upper = rel_equal(rep.upper_thm1, exact, kEqualityTolerance);
  return rep;
}

}  // namespace dee
