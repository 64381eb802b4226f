#pragma once

// The continuum fractional Laplacian in three representations: the standard
// singular integral (0 < alpha < 2), the order-2m tempered integral
// (0 < alpha < 2m) and the epsilon-regularized integral (alpha >= 0).

#include <string>

#include "fraclap/field.hpp"
#include "fraclap/quad.hpp"

namespace fraclap {

enum class Representation { Standard, OrderM, Regularized };

const char* representation_name(Representation rep);
/// "standard", "order-m" or "regularized". Throws DomainError otherwise.
Representation parse_representation(const std::string& name);

/// Unit-eigenvalue normalization uses C_{n,alpha} and C_{m,n,alpha} = 1/A; the
/// physical one multiplies the order-2m integral by h^alpha / (2 zeta) instead.
enum class Normalization { UnitEigenvalue, Physical };

struct FLOptions {
  double tol = 1e-10;  // relative tolerance of the radial quadrature
  QuadSpec spec{};     // regularized representation
  Normalization norm = Normalization::UnitEigenvalue;
  double h = 1.0;
  double zeta = 1.0;
  int taylor_terms = 30;  // sphere-average Taylor terms used near r = 0
};

struct FLResult {
  double value = 0.0;
  double error = 0.0;
  Representation rep = Representation::Standard;
  double alpha = 0.0;
  int n = 1;
  int m = 0;
  bool integer_branch = false;  // alpha/2 integer, evaluated as a local operator
  bool ill_conditioned = false; // alpha within 1e-3 of an even integer
};

/// (C_{n,alpha}/2) int [u(x+r) + u(x-r) - 2u(x)] |r|^{-n-alpha} d^n r, 0 < alpha < 2.
FLResult fl_standard(const TestField& u, const Point& x, double alpha, const FLOptions& opt = {});

/// C_{m,n,alpha} int Delta_2m(r) u(x) |r|^{-n-alpha} d^n r, 0 < alpha < 2m.
FLResult fl_order_m(const TestField& u, const Point& x, double alpha, int m, const FLOptions& opt = {});

/// -(2 G(alpha+1) / (pi U_{n,alpha})) reg int_0^inf S(r) Re(eps - i r)^{-alpha-1} dr,
/// with S the sphere average of u about x. At alpha = 2p returns (-1)^{p+1} Delta^p u(x).
FLResult fl_regularized(const TestField& u, const Point& x, double alpha, const FLOptions& opt = {});

FLResult fl_apply(Representation rep, const TestField& u, const Point& x, double alpha, int m,
                  const FLOptions& opt = {});

/// Eigenvalue of the representation on the plane wave exp(i k x_1) in n dimensions.
double fl_eigenvalue(Representation rep, int n, double alpha, int m, double k, const FLOptions& opt = {});

}  // namespace fraclap
