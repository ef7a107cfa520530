#include "dee/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace dee {

DSpectrum d_spectrum(const DistanceMatrix& dist, const JacobiOptions& options) {
  DSpectrum s;
  s.eigenvalues = eigen_symmetric(dist.cast<double>(), options);
  const double eps = zero_threshold(s.largest());
  for (double mu : s.eigenvalues) {
    if (mu > eps)
      ++s.n_plus;
    else if (std::abs(mu) <= eps)
      ++s.n_zero;
    else
      ++s.n_minus;
  }
  return s;
}

DSpectrum d_spectrum(const Graph& g, const JacobiOptions& options) {
  return d_spectrum(distance_matrix(g), options);
}

DeeValue dee(const DSpectrum& spectrum) {
  const auto& mu = spectrum.eigenvalues;
  DeeValue out;
  out.split_lead = mu(0);
  // ascending: smallest terms first
  for (Eigen::Index i = mu.size() - 1; i >= 1; --i) out.split_rest += std::exp(mu(i));
  const double lead = std::exp(out.split_lead);
  if (std::isinf(lead)) {
    out.overflow = true;
    out.value = std::numeric_limits<double>::infinity();
  } else {
    out.value = out.split_rest + lead;
  }
  return out;
}

Eigen::VectorXd cycle_spectrum_closed_form(int n) {
  if (n < 3) throw std::invalid_argument("cycle spectrum requires n >= 3");
  Eigen::VectorXd mu(n);
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int k = 1; k < n; ++k)
      sum += std::min(k, n - k) * std::cos(2.0 * std::numbers::pi * j * k / n);
    mu(j) = sum;
  }
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return mu;
}

}  // namespace dee
