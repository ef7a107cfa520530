#include "doctest.h"

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "dee/spectral.hpp"
#include "oracles.hpp"

using namespace dee;

namespace {

bool all_close(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
  return a.size() == b.size() && ((a - b).cwiseAbs().array() <= tol).all();
}

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("Jacobi on the exchange matrix") {
  Eigen::Matrix2d m;
  m << 0, 1, 1, 0;
  CHECK(all_close(eigen_symmetric(m), vec({1, -1}), 1e-15));
}

TEST_CASE("Jacobi input validation") {
  Eigen::Matrix2d asym;
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(eigen_symmetric(asym), NotSymmetric);
  Eigen::MatrixXd rect = Eigen::MatrixXd::Zero(2, 3);
  CHECK_THROWS_AS(eigen_symmetric(rect), NotSymmetric);

  Eigen::Matrix2d nearly;
  nearly << 0, 1, 1 + 1e-13, 0;
  CHECK_NOTHROW(eigen_symmetric(nearly));
}

TEST_CASE("Jacobi reports non-convergence") {
  JacobiOptions one_sweep;
  one_sweep.max_sweeps = 1;
  CHECK_THROWS_AS(d_spectrum(c60_truncated_icosahedron(), one_sweep), NoConvergence);

  Eigen::Matrix2d m;
  m << 0, 1, 1, 0;
  JacobiOptions none;
  none.max_sweeps = 0;
  CHECK_THROWS_AS(eigen_symmetric(m, none), NoConvergence);
  // already diagonal: zero sweeps suffice
  CHECK_NOTHROW(eigen_symmetric(Eigen::Matrix2d(Eigen::Matrix2d::Identity()), none));
}

TEST_CASE("Jacobi works in long double") {
  Eigen::Matrix<long double, 3, 3> m;
  m << 2, 1, 0, 1, 2, 1, 0, 1, 2;
  auto mu = eigen_symmetric(m);
  const long double r2 = std::sqrt(2.0L);
  CHECK(std::abs(static_cast<double>(mu(0) - (2 + r2))) < 1e-15);
  CHECK(std::abs(static_cast<double>(mu(1) - 2)) < 1e-15);
  CHECK(std::abs(static_cast<double>(mu(2) - (2 - r2))) < 1e-15);
}

TEST_CASE("eigenpair residuals are small") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal;
  for (int n : {1, 2, 5, 13, 30, 60}) {
    Eigen::MatrixXd x(n, n);
    for (auto& v : x.reshaped()) v = normal(rng);
    Eigen::MatrixXd m = x + x.transpose();
    auto eig = jacobi_eigen(m);
    for (int k = 0; k + 1 < n; ++k) CHECK(eig.values(k) >= eig.values(k + 1));
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXd v = eig.vectors.col(k);
      CHECK((m * v - eig.values(k) * v).norm() <= 1e-8 * m.norm());
    }
    CHECK((eig.vectors.transpose() * eig.vectors - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-10);
  }
  auto c60 = jacobi_eigen(distance_matrix(c60_truncated_icosahedron()).cast<double>());
  const Eigen::MatrixXd d = distance_matrix(c60_truncated_icosahedron()).cast<double>();
  for (int k = 0; k < 60; ++k)
    CHECK((d * c60.vectors.col(k) - c60.values(k) * c60.vectors.col(k)).norm() <= 1e-8 * d.norm());
}

TEST_CASE("complete graph spectra") {
  for (int n = 2; n <= 12; ++n) {
    auto s = d_spectrum(complete_graph(n));
    Eigen::VectorXd expected = Eigen::VectorXd::Constant(n, -1.0);
    expected(0) = n - 1;
    CHECK(all_close(s.eigenvalues, expected, 1e-9));
    CHECK(s.n_plus == 1);
    CHECK(s.n_minus == n - 1);
  }
}

TEST_CASE("hexagonal cell spectrum") {
  auto s = d_spectrum(cycle_graph(6));
  CHECK(all_close(s.eigenvalues, vec({9, 0, 0, -1, -4, -4}), 1e-8));
  CHECK(s.n_plus == 1);
  CHECK(s.n_zero == 2);
  CHECK(s.n_minus == 3);
}

TEST_CASE("single vertex spectrum") {
  auto s = d_spectrum(Graph(1, {}));
  CHECK(s.eigenvalues.size() == 1);
  CHECK(s.eigenvalues(0) == 0.0);
  CHECK(s.n_zero == 1);
  auto v = dee::dee(s);
  CHECK(v.value == 1.0);
  CHECK(v.split_rest == 0.0);
}

TEST_CASE("chemical tree spectrum") {
  auto s = d_spectrum(chemical_tree_fig1());
  CHECK(all_close(s.eigenvalues, vec({7.46, -0.51, -1.08, -2, -3.86}), 0.005));
  CHECK(s.eigenvalues(3) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("C60 spectrum") {
  auto s = d_spectrum(c60_truncated_icosahedron());
  CHECK(s.largest() == doctest::Approx(278.0).epsilon(1e-12));
  CHECK(s.n_plus == 18);
  CHECK(s.n_zero == 0);
  CHECK(s.n_minus == 42);
}

TEST_CASE("circulant closed form") {
  CHECK(all_close(cycle_spectrum_closed_form(6), vec({9, 0, 0, -1, -4, -4}), 1e-12));
  CHECK(all_close(cycle_spectrum_closed_form(3), vec({2, -1, -1}), 1e-12));
  CHECK_THROWS_AS(cycle_spectrum_closed_form(2), std::invalid_argument);

  // n = 4 against the characteristic-polynomial oracle
  Eigen::Matrix<std::int64_t, 4, 4> d4 = distance_matrix(cycle_graph(4));
  auto roots = oracle::quartic_real_roots(oracle::char_poly4(d4));
  // D(C4) has the double root -2, which the oracle declines; fall back to the
  // polynomial itself: x^4 - 12x^2 - 16x = x (x - 4) (x + 2)^2
  CHECK_FALSE(roots.has_value());
  CHECK(oracle::char_poly4(d4) == std::array<std::int64_t, 5>{0, -16, -12, 0, 1});
  CHECK(all_close(cycle_spectrum_closed_form(4), vec({4, 0, -2, -2}), 1e-12));
}

TEST_CASE("Jacobi matches the circulant closed form on cycles") {
  for (int n = 3; n <= 40; ++n)
    CHECK(all_close(d_spectrum(cycle_graph(n)).eigenvalues, cycle_spectrum_closed_form(n), 1e-8));
}

TEST_CASE("Jacobi matches quartic roots") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> entry(-9, 9);
  int checked = 0;
  while (checked < 300) {
    Eigen::Matrix<std::int64_t, 4, 4> a;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) a(i, j) = a(j, i) = entry(rng);
    auto roots = oracle::quartic_real_roots(oracle::char_poly4(a));
    if (!roots) continue;
    ++checked;
    auto mu = eigen_symmetric(a.cast<double>());
    for (int k = 0; k < 4; ++k) CHECK(std::abs(mu(k) - static_cast<double>((*roots)[k])) < 1e-8);
  }
}

TEST_CASE("DEE of the worked examples") {
  auto c6 = dee::dee(d_spectrum(cycle_graph(6)));
  CHECK(std::abs(c6.value - 8105.5) < 0.05);
  CHECK(c6.split_lead == doctest::Approx(9.0));
  CHECK_FALSE(c6.overflow);
  CHECK(c6.value == doctest::Approx(c6.split_rest + std::exp(c6.split_lead)).epsilon(1e-12));

  // Reference from a 30-digit mpmath eigendecomposition of the same matrix.
  auto tree = dee::dee(d_spectrum(chemical_tree_fig1()));
  CHECK(tree.value == doctest::Approx(1737.0162177926527).epsilon(1e-12));
  // The printed 1738.2 is what the two-decimal eigenvalues give.
  DSpectrum rounded;
  rounded.eigenvalues = vec({7.46, -0.51, -1.08, -2, -3.86});
  CHECK(std::abs(dee::dee(rounded).value - 1738.2) < 0.05);

  auto c60 = dee::dee(d_spectrum(c60_truncated_icosahedron()));
  CHECK(std::abs(c60.split_rest - 152.11) < 0.01);
  CHECK(std::abs(c60.split_lead - 278.0) < 1e-6);
  CHECK_FALSE(c60.overflow);
}

TEST_CASE("DEE overflow keeps the split form") {
  DSpectrum s;
  s.eigenvalues = vec({800, -1, -799});
  auto v = dee::dee(s);
  CHECK(v.overflow);
  CHECK(std::isinf(v.value));
  CHECK(v.split_lead == 800);
  CHECK(v.split_rest == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("spectral identities on small connected graphs") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : corpus::all_connected_graphs(n)) {
      auto p = distance_profile(g);
      auto s = d_spectrum(p.dist);
      const auto& mu = s.eigenvalues;
      CHECK(std::abs(mu.sum()) <= n * 1e-9 * std::max(1.0, std::abs(mu(0))));
      const double n2 = static_cast<double>(spectral_moment_from_distances(p, 2));
      CHECK(std::abs(mu.squaredNorm() - n2) <= 1e-9 * n2);
      const double n3 = static_cast<double>(spectral_moment_from_distances(p, 3));
      CHECK(std::abs(mu.array().cube().sum() - n3) <= 1e-8 * std::abs(n3));
      CHECK(s.n_plus + s.n_zero + s.n_minus == n);
      const Eigen::VectorXd degrees = p.distance_degrees.cast<double>();
      CHECK(mu(0) >= std::sqrt(degrees.squaredNorm() / n) - 1e-9);
      if (auto r = is_distance_degree_regular(p)) CHECK(std::abs(mu(0) - *r) <= 1e-9);
    }
  }
}

TEST_CASE("two distinct eigenvalues only for complete graphs") {
  for (int n = 2; n <= 12; ++n)
    CHECK(oracle::distinct_values(d_spectrum(complete_graph(n)).eigenvalues, 1e-7) == 2);
  for (int n = 3; n <= 6; ++n) {
    for (const auto& g : corpus::all_connected_graphs(n)) {
      if (g.size() == static_cast<std::size_t>(n * (n - 1) / 2)) continue;
      CHECK(oracle::distinct_values(d_spectrum(g).eigenvalues, 1e-7) >= 3);
    }
  }
  for (int n = 7; n <= 8; ++n)
    for (const auto& g : corpus::random_connected_graphs(n, 500, 31 + n))
      if (g.size() != static_cast<std::size_t>(n * (n - 1) / 2))
        CHECK(oracle::distinct_values(d_spectrum(g).eigenvalues, 1e-7) >= 3);
}
