#ifndef BRAIDZETA_NUMERIC_HPP
#define BRAIDZETA_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "braidzeta/burau.hpp"

namespace braidzeta {

/// q = e^{i theta} on the unit circle.
struct UnitCirclePoint {
  double theta = 0.0;

  std::complex<double> q() const { return std::polar(1.0, theta); }
  /// base point for matrices living in the t = q^{1/2} embedding
  std::complex<double> t() const { return std::polar(1.0, theta / 2.0); }
};

using ComplexMatrix = Eigen::MatrixXcd;

/// Evaluate every Laurent entry at the given complex base point. Matrices in
/// the t-embedding should pass p.t() instead of p.q().
inline ComplexMatrix eval_matrix(const LaurentMatrix& m, std::complex<double> base) {
  ComplexMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(i, j).eval(base);
  return out;
}

inline ComplexMatrix eval_matrix(const LaurentMatrix& m, const UnitCirclePoint& p) {
  return eval_matrix(m, p.q());
}

/// Eigenvalue report for the Riemann-hypothesis analogue.
struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;
  double max_modulus_deviation = 0.0;
  bool rh_satisfied = false;
  bool in_window = false;            // |theta| < 2*pi/n
  bool near_root_of_unity = false;   // q close to a root of unity of order <= 2n
  double theta = 0.0;
  int strands = 0;
  BraidWord word;
};

/// Eigenvalues of the reduced Burau image at q = e^{i theta}; rh_satisfied
/// iff every modulus is within tol of 1. Out-of-window theta is allowed and
/// simply reported.
inline SpectrumReport rh_check(const BraidWord& w, const UnitCirclePoint& p,
                               double tol = 1e-8) {
  SpectrumReport rep;
  rep.theta = p.theta;
  rep.strands = w.strands;
  rep.word = w;
  rep.in_window = std::abs(p.theta) < 2.0 * M_PI / w.strands;
  for (int k = 1; k <= 2 * w.strands; ++k) {
    const double frac = p.theta * k / (2.0 * M_PI);
    if (std::abs(frac - std::round(frac)) < 1e-6) {
      rep.near_root_of_unity = true;
      break;
    }
  }
  const ComplexMatrix m = eval_matrix(reduced_burau_matrix(w).matrix, p);
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw EigenSolverFailure("complex eigensolver did not converge");
  rep.max_modulus_deviation = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const std::complex<double> ev = solver.eigenvalues()(i);
    rep.eigenvalues.push_back(ev);
    rep.max_modulus_deviation =
        std::max(rep.max_modulus_deviation, std::abs(std::abs(ev) - 1.0));
  }
  rep.rh_satisfied = rep.max_modulus_deviation <= tol;
  return rep;
}

/// The n-1 closed-form eigenvalues 2cos(theta/2) - 2cos(pi j / n) of the
/// Squier form, cross-checked against the numerically diagonalized Omega.
inline std::vector<double> omega_spectrum(int n, double theta) {
  if (n < 2) throw Error("omega_spectrum requires n >= 2");
  std::vector<double> closed;
  for (int j = 1; j < n; ++j)
    closed.push_back(2.0 * std::cos(theta / 2.0) - 2.0 * std::cos(M_PI * j / n));
  std::sort(closed.begin(), closed.end());

  const ComplexMatrix omega =
      eval_matrix(squier_omega(n), UnitCirclePoint{theta}.t());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(omega);
  if (solver.info() != Eigen::Success)
    throw EigenSolverFailure("Hermitian eigensolver did not converge");
  for (int j = 0; j < n - 1; ++j)
    if (std::abs(solver.eigenvalues()(j) - closed[static_cast<size_t>(j)]) > 1e-9)
      throw Error("Omega spectrum disagrees with the closed eigenvalue formula");
  return closed;
}

/// true iff the Squier form is positive definite, equivalently |theta| < 2pi/n
inline bool definiteness_window(int n, double theta) {
  const std::vector<double> spec = omega_spectrum(n, theta);
  return spec.front() > 0.0;
}

/// Frobenius-norm check of the Squier identity at a numeric unit-circle q.
inline double squier_numeric_deviation(const BraidWord& w, const UnitCirclePoint& p) {
  const std::complex<double> t = p.t();
  const ComplexMatrix omega = eval_matrix(squier_omega(w.strands), t);
  const LaurentMatrix red_t =
      reduced_burau_matrix(w).matrix.map([](const LaurentPoly& poly) {
        return poly.substitute_power(2);
      });
  const ComplexMatrix b = eval_matrix(red_t, t);
  return (b.adjoint() * omega * b - omega).norm();
}

} // namespace braidzeta

#endif
