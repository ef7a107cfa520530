#pragma once

#include <algorithm>

#include <Eigen/Core>

#include "dee/distance.hpp"
#include "dee/graph.hpp"
#include "dee/jacobi.hpp"

namespace dee {

/// Distance-matrix eigenvalues, non-increasing, with sign counts.
struct DSpectrum {
  Eigen::VectorXd eigenvalues;
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  double largest() const { return eigenvalues(0); }
};

/// |mu| at or below this counts as zero.
inline double zero_threshold(double mu1) { return 1e-7 * std::max(1.0, mu1); }

DSpectrum d_spectrum(const DistanceMatrix& dist, const JacobiOptions& options = {});
/// Throws DisconnectedGraph, or the eigensolver's errors.
DSpectrum d_spectrum(const Graph& g, const JacobiOptions& options = {});

/// Sum of exponentials of a spectrum, also kept as rest + e^lead.
///
/// split_rest sums e^mu_i over every eigenvalue but the largest; split_lead
/// is the largest eigenvalue itself. When e^lead is not representable,
/// overflow is set and value is +infinity; the split form stays exact.
struct DeeValue {
  double value = 0.0;
  double split_rest = 0.0;
  double split_lead = 0.0;
  bool overflow = false;
};

DeeValue dee(const DSpectrum& spectrum);

/// D(C_n) eigenvalues from the circulant formula
/// mu_j = sum_k min(k, n-k) cos(2 pi j k / n), non-increasing.
/// Throws std::invalid_argument for n < 3.
Eigen::VectorXd cycle_spectrum_closed_form(int n);

}  // namespace dee
