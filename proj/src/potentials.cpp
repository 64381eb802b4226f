#include "fraclap/potentials.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "fraclap/constants.hpp"
#include "fraclap/errors.hpp"

namespace fraclap {

namespace {

constexpr double kRelTol = 1e-10;

std::vector<double> parse_row(const std::string& line) {
  std::vector<double> row;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw DomainError("stiffness CSV: empty cell");
    const std::string t = cell.substr(b, e - b + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw DomainError("stiffness CSV: '" + t + "' is not a number");
    }
    if (used != t.size()) throw DomainError("stiffness CSV: '" + t + "' is not a number");
    row.push_back(v);
  }
  return row;
}

}  // namespace

StiffnessMatrix StiffnessMatrix::toeplitz(const std::vector<double>& g) {
  if (g.size() < 2) throw DomainError("stiffness matrix needs M >= 2 sites");
  const auto M = static_cast<Eigen::Index>(g.size());
  StiffnessMatrix s;
  s.V.resize(M, M);
  for (Eigen::Index p = 0; p < M; ++p)
    for (Eigen::Index q = 0; q < M; ++q) s.V(p, q) = g[static_cast<std::size_t>(std::abs(p - q))];
  return s;
}

StiffnessMatrix StiffnessMatrix::dense(const Eigen::MatrixXd& V) {
  if (V.rows() != V.cols()) throw DomainError("stiffness matrix must be square");
  if (V.rows() < 2) throw DomainError("stiffness matrix needs M >= 2 sites");
  if (!V.allFinite()) throw DomainError("stiffness matrix entries must be finite");
  return StiffnessMatrix{V};
}

StiffnessMatrix StiffnessMatrix::difference_order(int m) {
  if (m < 1 || m > kMaxDifferenceOrder) throw DomainError("difference order m outside [1, 20]");
  Eigen::VectorXd b(m + 1);
  for (int j = 0; j <= m; ++j) b(j) = (((m - j) % 2) ? -1.0 : 1.0) * binomial(m, j);
  return StiffnessMatrix{b * b.transpose()};
}

StiffnessReport validate_stiffness(const StiffnessMatrix& S) {
  StiffnessReport r;
  const Eigen::MatrixXd& V = S.V;
  const Eigen::Index M = V.rows();
  if (M < 2 || V.cols() != M) {
    r.violations.push_back("matrix must be square with M >= 2");
    return r;
  }
  const double scale = V.cwiseAbs().maxCoeff();
  const double tol = kRelTol * std::max(scale, std::numeric_limits<double>::min());

  r.symmetric = (V - V.transpose()).cwiseAbs().maxCoeff() <= tol;
  if (!r.symmetric) r.violations.push_back("not symmetric");

  const double total = V.sum();
  r.zero_sum = std::abs(total) <= tol * static_cast<double>(M * M);
  if (!r.zero_sum) r.violations.push_back("entries do not sum to zero (sum " + std::to_string(total) + ")");

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (V + V.transpose()), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double norm = ev.cwiseAbs().maxCoeff();
  const double etol = kRelTol * norm;
  r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  r.semidefinite = ev.minCoeff() >= -etol;
  if (!r.semidefinite) r.violations.push_back("not positive semidefinite (eigenvalue " + std::to_string(ev.minCoeff()) + ")");
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i)) <= etol) ++r.kernel_dim;

  // polynomial degrees annihilated, scaled columns p^k / max p^k
  for (int k = 0; k < M - 1; ++k) {
    Eigen::VectorXd pk(M);
    for (Eigen::Index p = 0; p < M; ++p) pk(p) = std::pow(static_cast<double>(p) / static_cast<double>(M - 1), k);
    if ((V * pk).cwiseAbs().maxCoeff() > tol * static_cast<double>(M)) break;
    ++r.tempering_order;
  }
  if (r.kernel_dim != r.tempering_order || r.tempering_order == 0)
    r.violations.push_back("kernel dimension " + std::to_string(r.kernel_dim) + " does not match the " +
                           std::to_string(r.tempering_order) + " annihilated polynomial degree(s)");
  r.valid = r.violations.empty();
  return r;
}

double scaling_factor(const StiffnessMatrix& S, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("scaling factor is only defined for alpha > 0");
  double s = 0.0;
  for (Eigen::Index p = 0; p < S.V.rows(); ++p)
    for (Eigen::Index q = 0; q < S.V.cols(); ++q)
      s += S.V(p, q) * std::pow(static_cast<double>(std::abs(p - q)), alpha);
  return 0.5 * s;
}

double scaling_factor_offdiagonal(const StiffnessMatrix& S, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("scaling factor is only defined for alpha > 0");
  double s = 0.0;
  for (Eigen::Index p = 0; p < S.V.rows(); ++p)
    for (Eigen::Index q = 0; q < S.V.cols(); ++q)
      if (p != q) s += S.V(p, q) * std::pow(static_cast<double>(std::abs(p - q)), alpha);
  return 0.5 * s;
}

double potential_eigenvalue(const StiffnessMatrix& S, int n, double alpha, double k) {
  if (!(alpha > 0.0)) throw DomainError("potential eigenvalue needs alpha > 0");
  if (!(k >= 0.0)) throw DomainError("wave number k must be >= 0");
  if (is_even_integer(alpha)) throw DomainError("potential eigenvalue is undefined at even-integer alpha");
  const StiffnessReport rep = validate_stiffness(S);
  if (!rep.valid) {
    std::string msg = "invalid stiffness matrix:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    throw DomainError(msg);
  }
  if (!(alpha < 2.0 * rep.tempering_order))
    throw DomainError("alpha = " + std::to_string(alpha) + " exceeds 2d = " + std::to_string(2 * rep.tempering_order) +
                      " for this potential");
  if (k == 0.0) return 0.0;
  return scaling_factor(S, alpha) / c_standard(n, alpha).value * std::pow(k, alpha);
}

StiffnessMatrix parse_stiffness_csv(const std::string& text) {
  std::stringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t")] == '#') continue;
    rows.push_back(parse_row(line));
  }
  if (rows.empty()) throw DomainError("stiffness CSV is empty");
  if (rows.size() == 1) return StiffnessMatrix::toeplitz(rows[0]);
  const std::size_t M = rows[0].size();
  if (rows.size() != M) throw DomainError("stiffness CSV: expected one generator row or a square matrix");
  Eigen::MatrixXd V(static_cast<Eigen::Index>(M), static_cast<Eigen::Index>(M));
  for (std::size_t p = 0; p < M; ++p) {
    if (rows[p].size() != M) throw DomainError("stiffness CSV: ragged matrix row");
    for (std::size_t q = 0; q < M; ++q) V(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) = rows[p][q];
  }
  return StiffnessMatrix::dense(V);
}

StiffnessMatrix load_stiffness_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open stiffness file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_stiffness_csv(ss.str());
}

}  // namespace fraclap
