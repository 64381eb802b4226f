#ifndef FRACLAP_H
#define FRACLAP_H

/* C interface to the fractional Laplacian library. Every function returns an
 * fl_status; on failure fl_last_error() describes what went wrong on the
 * calling thread. Handles are opaque and owned by the caller. */

#include <stddef.h>

#if defined(FRACLAP_BUILDING_LIBRARY)
#define FL_API __attribute__((visibility("default")))
#else
#define FL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fl_status {
  FL_OK = 0,
  FL_DOMAIN = 1,      /* argument outside the valid window */
  FL_CONVERGENCE = 2, /* quadrature, truncation or extrapolation did not settle */
  FL_ARGUMENT = 3,    /* null pointer or bad handle */
  FL_IO = 4,
  FL_INTERNAL = 5
} fl_status;

typedef enum fl_representation {
  FL_REP_STANDARD = 0,
  FL_REP_ORDER_M = 1,
  FL_REP_REGULARIZED = 2
} fl_representation;

typedef struct fl_field fl_field;
typedef struct fl_stiffness fl_stiffness;

typedef struct fl_constants {
  double U, V, A, c_general, c_standard;
  int distributional; /* C_standard is zero: alpha/2 is an integer */
} fl_constants;

typedef struct fl_result {
  double value;
  double error;
  int integer_branch;
  int ill_conditioned;
} fl_result;

typedef struct fl_lattice {
  double delta, a, h;
  int m;
  double spring;
  double tol;
  int s_max; /* 0 = automatic window */
} fl_lattice;

FL_API const char* fl_last_error(void);
FL_API const char* fl_version(void);

/* constants */
FL_API fl_status fl_gamma(double x, double* out);
FL_API fl_status fl_c_standard(int n, double alpha, double* out, int* distributional);
FL_API fl_status fl_norm_constants(int m, int n, double alpha, fl_constants* out);
FL_API fl_status fl_a_delta(double delta, double h, double zeta, double* out);
FL_API fl_status fl_unit_sphere_moment(int n, double alpha, double* out);
FL_API fl_status fl_v_integral(int m, double alpha, double* out);
FL_API fl_status fl_central_diff_power(int m, double alpha, double* out);
/* writes 2m+1 weights w_{-m}..w_m; `cap` is the buffer length */
FL_API fl_status fl_diff_weights(int m, double* weights, size_t cap);

/* lattice */
FL_API void fl_lattice_defaults(fl_lattice* p);
FL_API fl_status fl_wm_dispersion(double kh, const fl_lattice* p, double* out);
FL_API fl_status fl_selfsim_laplacian(const fl_field* u, double x, const fl_lattice* p, double* out);
FL_API fl_status fl_wm_energy_density(const fl_field* u, double x, const fl_lattice* p, double* out);
/* h^delta V_{m,delta}: limit of |ln a| omega^2 / kh^delta as a -> 1 */
FL_API fl_status fl_continuum_coefficient(int m, double delta, double h, double* out);
FL_API fl_status fl_continuum_envelope_error(double kh, const fl_lattice* p, int samples, double* out);

/* regularization */
FL_API fl_status fl_reg_kernel(double xi, double alpha, double eps, double* out);
FL_API fl_status fl_i_reg(double xi0, double alpha, double* out);

/* fields and representations */
FL_API fl_status fl_field_gaussian(int n, double sigma, const double* center, fl_field** out);
FL_API fl_status fl_field_plane_wave(int n, const double* k, fl_field** out);
FL_API void fl_field_free(fl_field* f);
FL_API fl_status fl_field_value(const fl_field* f, const double* x, double* out);

/* m is ignored except for FL_REP_ORDER_M; tol <= 0 selects the default */
FL_API fl_status fl_apply(fl_representation rep, const fl_field* u, const double* x, double alpha, int m, double tol,
                          fl_result* out);
FL_API fl_status fl_eigenvalue(fl_representation rep, int n, double alpha, int m, double k, double* out);
FL_API fl_status fl_parse_representation(const char* name, fl_representation* out);

/* spectral oracle: -|k|^alpha on N periodic samples with spacing dx */
FL_API fl_status fl_dft_fl(const double* samples, size_t N, double dx, double alpha, double* out);
/* same, interpolated at offset x from the first sample */
FL_API fl_status fl_dft_fl_at(const double* samples, size_t N, double dx, double alpha, double x, double* out);
FL_API fl_status fl_gaussian_reference(double alpha, double sigma, double x, double* out);

/* stiffness matrices */
FL_API fl_status fl_stiffness_toeplitz(const double* generators, size_t M, fl_stiffness** out);
FL_API fl_status fl_stiffness_dense(const double* rowmajor, size_t M, fl_stiffness** out);
FL_API fl_status fl_stiffness_load(const char* path, fl_stiffness** out);
FL_API void fl_stiffness_free(fl_stiffness* s);
FL_API fl_status fl_stiffness_validate(const fl_stiffness* s, int* valid, int* kernel_dim, int* tempering_order);
FL_API fl_status fl_scaling_factor(const fl_stiffness* s, double alpha, double* out);
FL_API fl_status fl_potential_eigenvalue(const fl_stiffness* s, int n, double alpha, double k, double* out);

/* self test */
typedef void (*fl_selftest_callback)(const char* module, const char* name, int passed, const char* detail, void* user);
/* filter may be NULL; failures receives the number of failed checks */
FL_API fl_status fl_selftest(const char* filter, int inject_fault, fl_selftest_callback cb, void* user, int* failures);

#ifdef __cplusplus
}
#endif

#endif
