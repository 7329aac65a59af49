/*
 * timlab: C interface to the transverse Ising ring laboratory.
 *
 * Every function returns a tim_status. On failure a human-readable message
 * is available from tim_last_error() on the calling thread until the next
 * failing call on that thread. Complex numbers cross the boundary as
 * tim_complex, which is layout compatible with double[2] (re, im).
 *
 * Basis convention: qubit 1 is the most significant bit of a basis index,
 * |0> has sigma_z = +1 and |1> has sigma_z = -1.
 */
#ifndef TIMLAB_H
#define TIMLAB_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(TIMLAB_BUILDING)
#    define TIMLAB_API __declspec(dllexport)
#  else
#    define TIMLAB_API __declspec(dllimport)
#  endif
#else
#  define TIMLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tim_status {
  TIM_OK = 0,
  TIM_ERR_INVALID_ARGUMENT = 1,
  TIM_ERR_NOT_HERMITIAN = 2,
  TIM_ERR_NO_CONVERGENCE = 3,
  TIM_ERR_NOT_PSD = 4,
  TIM_ERR_DIMENSION_TOO_LARGE = 5,
  TIM_ERR_WRONG_SIZE = 6,
  TIM_ERR_OUT_OF_REGION = 7,
  TIM_ERR_BAD_SUBSET = 8,
  TIM_ERR_NOT_X_FORM = 9,
  TIM_ERR_NOT_SYMMETRIC_MIDDLE = 10,
  TIM_ERR_NO_DEFINITE_PARITY = 11,
  TIM_ERR_FROZEN_DYNAMICS = 12,
  TIM_ERR_ZERO_COUPLING = 13,
  TIM_ERR_INTERNAL = 99
} tim_status;

typedef struct tim_complex {
  double re;
  double im;
} tim_complex;

TIMLAB_API const char* tim_version(void);
TIMLAB_API const char* tim_status_name(tim_status status);
TIMLAB_API const char* tim_last_error(void);

/* ---- model handle ------------------------------------------------------ */

/* Ring of n qubits (3 <= n <= 10) with exchange j and transverse field b.
 * The handle owns the Hamiltonian and its eigendecomposition. */
typedef struct tim_model tim_model;

TIMLAB_API tim_status tim_model_create(int n, double j, double b, tim_model** out);
TIMLAB_API void tim_model_destroy(tim_model* model);

TIMLAB_API tim_status tim_model_dimension(const tim_model* model, size_t* dim);

/* Row-major copy of the 2^n x 2^n Hamiltonian; len must equal dim*dim. */
TIMLAB_API tim_status tim_model_hamiltonian(const tim_model* model, tim_complex* out, size_t len);

/* Numeric eigenvalues in ascending order; len must equal dim. */
TIMLAB_API tim_status tim_model_spectrum(const tim_model* model, double* out, size_t len);

/* Eigenvector of the lowest eigenvalue; len must equal dim. */
TIMLAB_API tim_status tim_model_ground_vector(const tim_model* model, tim_complex* out, size_t len);

/* exp(-i H t) applied to state0; both arrays hold dim entries. */
TIMLAB_API tim_status tim_model_evolve(const tim_model* model, const tim_complex* state0,
                                       double t, tim_complex* out, size_t len);

typedef struct tim_symmetry_report {
  double commutator_norm_parity;
  double commutator_norm_translation;
  double commutator_norm_reflection;
  double field_flip_norm;
} tim_symmetry_report;

TIMLAB_API tim_status tim_model_symmetry_report(const tim_model* model, tim_symmetry_report* out);

/* ---- three-qubit closed forms ------------------------------------------ */

/* E0..E7 in closed-form label order. */
TIMLAB_API tim_status tim_spectrum3(double j, double b, double out[8]);

typedef struct tim_ground_report {
  double a1;
  double a2;
  double concurrence;
  double xi_squared;
  double fidelity;          /* |<closed-form ground|numeric ground>| */
  double relation_residual; /* |xi^2 - (1 - 2C)| */
} tim_ground_report;

/* Requires j > 0 and b > 0 (TIM_ERR_OUT_OF_REGION otherwise). */
TIMLAB_API tim_status tim_ground_report_compute(double j, double b, tim_ground_report* out);

/* Closed-form state cos(theta)|111> + sin(theta) e^{i phi}|W>. */
TIMLAB_API tim_status tim_mixing_state(double theta, double phi, tim_complex out[8]);
TIMLAB_API tim_status tim_mixing_values(double theta, double* concurrence, double* xi_squared);

TIMLAB_API tim_status tim_w_state(tim_complex out[8]);

/* ---- entanglement ------------------------------------------------------ */

/* rho: row-major 2^n x 2^n density matrix; keep: 1-based qubit labels.
 * Writes the 2^k x 2^k reduced matrix (k = keep_len) to out. */
TIMLAB_API tim_status tim_partial_trace(const tim_complex* rho, int n, const int* keep,
                                        size_t keep_len, tim_complex* out, size_t out_len);

TIMLAB_API tim_status tim_concurrence_x(const tim_complex rho2[16], double* out);
TIMLAB_API tim_status tim_concurrence_wootters(const tim_complex rho2[16], double* out);
TIMLAB_API tim_status tim_squeezing_parity(const tim_complex state[8], double* out);

/* ---- dynamics ---------------------------------------------------------- */

TIMLAB_API tim_status tim_w_schedule(double j, double* b, double* t_star);
TIMLAB_API tim_status tim_rabi_params(double j, double b, double* omega, double* mixing_angle);
TIMLAB_API tim_status tim_evolve_closed(double j, double b, double t, tim_complex* c111,
                                        tim_complex* c_w);

#ifdef __cplusplus
}
#endif

#endif /* TIMLAB_H */
