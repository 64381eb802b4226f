#include "fraclap/fraclap.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "fraclap/constants.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/field.hpp"
#include "fraclap/flcore.hpp"
#include "fraclap/lattice.hpp"
#include "fraclap/oracle.hpp"
#include "fraclap/potentials.hpp"
#include "fraclap/quad.hpp"
#include "fraclap/selftest.hpp"

struct fl_field {
  fraclap::TestField f;
};

struct fl_stiffness {
  fraclap::StiffnessMatrix s;
};

namespace {

thread_local std::string g_error;

fl_status fail(fl_status s, const std::string& msg) {
  g_error = msg;
  return s;
}

template <class F>
fl_status guard(F&& body) {
  try {
    g_error.clear();
    body();
    return FL_OK;
  } catch (const fraclap::DomainError& e) {
    return fail(FL_DOMAIN, e.what());
  } catch (const fraclap::ConvergenceError& e) {
    return fail(FL_CONVERGENCE, e.what());
  } catch (const fraclap::IoError& e) {
    return fail(FL_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FL_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FL_INTERNAL, e.what());
  }
}

#define FL_REQUIRE(ptr) \
  if (!(ptr)) return fail(FL_ARGUMENT, #ptr " must not be null")

fraclap::SelfSimilarParams to_params(const fl_lattice& p) {
  fraclap::SelfSimilarParams q;
  q.delta = p.delta;
  q.a = p.a;
  q.h = p.h;
  q.m = p.m;
  q.spring = p.spring;
  q.tol = p.tol;
  q.s_max = p.s_max;
  return q;
}

fraclap::Point to_point(const double* x, int n) {
  fraclap::Point p{0.0, 0.0, 0.0};
  for (int i = 0; i < n && i < 3; ++i) p[static_cast<std::size_t>(i)] = x[i];
  return p;
}

void check_rep(fl_representation rep) {
  if (rep < FL_REP_STANDARD || rep > FL_REP_REGULARIZED) throw fraclap::DomainError("unknown representation code");
}

fraclap::GridField to_grid(const double* s, size_t N, double dx) {
  fraclap::GridField g;
  g.samples.assign(s, s + N);
  g.dx = dx;
  return g;
}

}  // namespace

extern "C" {

const char* fl_last_error(void) { return g_error.c_str(); }

const char* fl_version(void) { return "0.1.0"; }

fl_status fl_gamma(double x, double* out) {
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::gamma(x); });
}

fl_status fl_c_standard(int n, double alpha, double* out, int* distributional) {
  FL_REQUIRE(out);
  return guard([&] {
    const auto c = fraclap::c_standard(n, alpha);
    *out = c.value;
    if (distributional) *distributional = c.distributional ? 1 : 0;
  });
}

fl_status fl_norm_constants(int m, int n, double alpha, fl_constants* out) {
  FL_REQUIRE(out);
  return guard([&] {
    const auto c = fraclap::norm_constants(m, n, alpha);
    *out = fl_constants{c.U, c.V, c.A, c.c_general, c.c_standard, c.distributional ? 1 : 0};
  });
}

fl_status fl_a_delta(double delta, double h, double zeta, double* out) {
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::a_delta(delta, h, zeta); });
}

fl_status fl_unit_sphere_moment(int n, double alpha, double* out) {
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::unit_sphere_moment(n, alpha); });
}

fl_status fl_v_integral(int m, double alpha, double* out) {
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::v_integral(m, alpha); });
}

fl_status fl_central_diff_power(int m, double alpha, double* out) {
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::central_diff_power(m, alpha); });
}

fl_status fl_diff_weights(int m, double* weights, size_t cap) {
  FL_REQUIRE(weights);
  if (m >= 1 && cap < static_cast<size_t>(2 * m + 1)) return fail(FL_ARGUMENT, "weight buffer holds fewer than 2m+1 entries");
  return guard([&] {
    const auto w = fraclap::diff_weights(m);
    std::memcpy(weights, w.weights.data(), w.weights.size() * sizeof(double));
  });
}

void fl_lattice_defaults(fl_lattice* p) {
  if (!p) return;
  const fraclap::SelfSimilarParams d;
  *p = fl_lattice{d.delta, d.a, d.h, d.m, d.spring, d.tol, d.s_max};
}

fl_status fl_wm_dispersion(double kh, const fl_lattice* p, double* out) {
  FL_REQUIRE(p);
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::wm_dispersion(kh, to_params(*p)); });
}

fl_status fl_selfsim_laplacian(const fl_field* u, double x, const fl_lattice* p, double* out) {
  FL_REQUIRE(u);
  FL_REQUIRE(p);
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::selfsim_laplacian(u->f, x, to_params(*p)).value; });
}

fl_status fl_wm_energy_density(const fl_field* u, double x, const fl_lattice* p, double* out) {
  FL_REQUIRE(u);
  FL_REQUIRE(p);
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::wm_energy_density(u->f, x, to_params(*p)).value; });
}

fl_status fl_continuum_coefficient(int m, double delta, double h, double* out) {
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::sine_power_continuum_limit(m, delta, h); });
}

fl_status fl_continuum_envelope_error(double kh, const fl_lattice* p, int samples, double* out) {
  FL_REQUIRE(p);
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::continuum_envelope_error(kh, to_params(*p), samples); });
}

fl_status fl_reg_kernel(double xi, double alpha, double eps, double* out) {
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::reg_kernel(xi, alpha, eps); });
}

fl_status fl_i_reg(double xi0, double alpha, double* out) {
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::i_reg(xi0, alpha); });
}

fl_status fl_field_gaussian(int n, double sigma, const double* center, fl_field** out) {
  FL_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    const fraclap::Point c = center ? to_point(center, n) : fraclap::Point{0.0, 0.0, 0.0};
    *out = new fl_field{fraclap::TestField::gaussian(n, sigma, c)};
  });
}

fl_status fl_field_plane_wave(int n, const double* k, fl_field** out) {
  FL_REQUIRE(k);
  FL_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new fl_field{fraclap::TestField::plane_wave(n, to_point(k, n))}; });
}

void fl_field_free(fl_field* f) { delete f; }

fl_status fl_field_value(const fl_field* f, const double* x, double* out) {
  FL_REQUIRE(f);
  FL_REQUIRE(x);
  FL_REQUIRE(out);
  return guard([&] { *out = f->f(to_point(x, f->f.dimension())); });
}

fl_status fl_apply(fl_representation rep, const fl_field* u, const double* x, double alpha, int m, double tol,
                   fl_result* out) {
  FL_REQUIRE(u);
  FL_REQUIRE(x);
  FL_REQUIRE(out);
  return guard([&] {
    check_rep(rep);
    fraclap::FLOptions opt;
    if (tol > 0.0) {
      opt.tol = tol;
      opt.spec.tol = std::min(opt.spec.tol, tol);
    }
    const auto r = fraclap::fl_apply(static_cast<fraclap::Representation>(rep), u->f, to_point(x, u->f.dimension()),
                                     alpha, m, opt);
    *out = fl_result{r.value, r.error, r.integer_branch ? 1 : 0, r.ill_conditioned ? 1 : 0};
  });
}

fl_status fl_eigenvalue(fl_representation rep, int n, double alpha, int m, double k, double* out) {
  FL_REQUIRE(out);
  return guard([&] {
    check_rep(rep);
    *out = fraclap::fl_eigenvalue(static_cast<fraclap::Representation>(rep), n, alpha, m, k);
  });
}

fl_status fl_parse_representation(const char* name, fl_representation* out) {
  FL_REQUIRE(name);
  FL_REQUIRE(out);
  return guard([&] { *out = static_cast<fl_representation>(fraclap::parse_representation(name)); });
}

fl_status fl_dft_fl(const double* samples, size_t N, double dx, double alpha, double* out) {
  FL_REQUIRE(samples);
  FL_REQUIRE(out);
  return guard([&] {
    const auto r = fraclap::dft_fl(to_grid(samples, N, dx), alpha);
    std::memcpy(out, r.samples.data(), N * sizeof(double));
  });
}

fl_status fl_dft_fl_at(const double* samples, size_t N, double dx, double alpha, double x, double* out) {
  FL_REQUIRE(samples);
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::dft_fl_at(to_grid(samples, N, dx), alpha, x); });
}

fl_status fl_gaussian_reference(double alpha, double sigma, double x, double* out) {
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::gaussian_reference(alpha, sigma, x); });
}

fl_status fl_stiffness_toeplitz(const double* generators, size_t M, fl_stiffness** out) {
  FL_REQUIRE(generators);
  FL_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    *out = new fl_stiffness{fraclap::StiffnessMatrix::toeplitz(std::vector<double>(generators, generators + M))};
  });
}

fl_status fl_stiffness_dense(const double* rowmajor, size_t M, fl_stiffness** out) {
  FL_REQUIRE(rowmajor);
  FL_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    const auto n = static_cast<Eigen::Index>(M);
    Eigen::MatrixXd V(n, n);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q) V(p, q) = rowmajor[p * n + q];
    *out = new fl_stiffness{fraclap::StiffnessMatrix::dense(V)};
  });
}

fl_status fl_stiffness_load(const char* path, fl_stiffness** out) {
  FL_REQUIRE(path);
  FL_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new fl_stiffness{fraclap::load_stiffness_csv(path)}; });
}

void fl_stiffness_free(fl_stiffness* s) { delete s; }

fl_status fl_stiffness_validate(const fl_stiffness* s, int* valid, int* kernel_dim, int* tempering_order) {
  FL_REQUIRE(s);
  FL_REQUIRE(valid);
  return guard([&] {
    const auto r = fraclap::validate_stiffness(s->s);
    *valid = r.valid ? 1 : 0;
    if (kernel_dim) *kernel_dim = r.kernel_dim;
    if (tempering_order) *tempering_order = r.tempering_order;
    if (!r.valid) {
      std::string msg;
      for (const auto& v : r.violations) msg += (msg.empty() ? "" : "; ") + v;
      g_error = msg;
    }
  });
}

fl_status fl_scaling_factor(const fl_stiffness* s, double alpha, double* out) {
  FL_REQUIRE(s);
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::scaling_factor(s->s, alpha); });
}

fl_status fl_potential_eigenvalue(const fl_stiffness* s, int n, double alpha, double k, double* out) {
  FL_REQUIRE(s);
  FL_REQUIRE(out);
  return guard([&] { *out = fraclap::potential_eigenvalue(s->s, n, alpha, k); });
}

fl_status fl_selftest(const char* filter, int inject_fault, fl_selftest_callback cb, void* user, int* failures) {
  FL_REQUIRE(failures);
  return guard([&] {
    fraclap::SelftestOptions opt;
    opt.filter = filter ? filter : "";
    opt.inject_fault = inject_fault != 0;
    int failed = 0;
    fraclap::run_selftest(opt, [&](const fraclap::CheckResult& r) {
      if (!r.passed) ++failed;
      if (cb) cb(r.module.c_str(), r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
    });
    *failures = failed;
  });
}

}  // extern "C"
