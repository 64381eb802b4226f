#pragma once

// Generalized self-similar potentials given by stiffness matrices V_pq over
// sites p, q = 0..M-1, and their plane-wave eigenvalues.

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fraclap {

struct StiffnessMatrix {
  Eigen::MatrixXd V;

  /// Symmetric Toeplitz matrix V_pq = g[|p - q|].
  static StiffnessMatrix toeplitz(const std::vector<double>& generators);
  /// Any square matrix; validation decides whether it is usable.
  static StiffnessMatrix dense(const Eigen::MatrixXd& V);
  /// Matrix of the quadratic form {(D - 1)^m u}^2: V = b b^T, b_j = (-1)^{m-j} C(m, j).
  static StiffnessMatrix difference_order(int m);

  int size() const { return static_cast<int>(V.rows()); }
};

struct StiffnessReport {
  bool valid = false;
  bool symmetric = false;
  bool zero_sum = false;
  bool semidefinite = false;
  int kernel_dim = 0;
  /// Number of leading polynomial degrees 0..d-1 the form annihilates (capped at M-1).
  int tempering_order = 0;
  std::vector<double> eigenvalues;  // ascending
  std::vector<std::string> violations;
};

/// Checks symmetry, zero sum (constants carry no energy), positive
/// semidefiniteness and that the kernel is exactly the annihilated polynomials.
StiffnessReport validate_stiffness(const StiffnessMatrix& V);

/// A_V = 1/2 sum_{p,q} V_pq |p - q|^alpha, alpha > 0.
double scaling_factor(const StiffnessMatrix& V, double alpha);

/// Same sum restricted to p != q.
double scaling_factor_offdiagonal(const StiffnessMatrix& V, double alpha);

/// (A_V / C_{n,alpha}) k^alpha. Requires a valid V, alpha/2 not an integer,
/// and alpha < 2 d for tempering order d.
double potential_eigenvalue(const StiffnessMatrix& V, int n, double alpha, double k);

/// Reads a CSV whose first row holds the Toeplitz generators V_0..V_{M-1}.
/// Further rows, if present, must complete a square dense matrix.
StiffnessMatrix load_stiffness_csv(const std::string& path);
StiffnessMatrix parse_stiffness_csv(const std::string& text);

}  // namespace fraclap
