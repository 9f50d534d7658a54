/* C ABI for the dwl phase-space quantifier library.
 *
 * Kept in sync with the exported symbols of dwl-ffi (see tests/smoke.rs).
 * Complex 4x4 matrices cross the boundary as 32 doubles: row-major
 * entries, re/im interleaved.
 */

#ifndef DWL_H
#define DWL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every fallible entry point. */
typedef enum DwlStatus {
  DWL_STATUS_OK = 0,
  DWL_STATUS_NULL_POINTER = 1,
  DWL_STATUS_INVALID_ARGUMENT = 2,
  DWL_STATUS_NUMERICAL_ERROR = 3,
} DwlStatus;

/* Opaque Landau-state handle. */
typedef struct DwlState DwlState;

/* Creates a state from dimensionless (eps, kappa).
 * n >= 1; r is 1 or 2; spin is +1 or -1. */
DwlStatus dwl_state_new(int n, int r, int spin, double eps, double kappa,
                        DwlState **out);

/* Creates a state from physical parameters (m, eB, k_z, k_y). */
DwlStatus dwl_state_new_physical(int n, int r, int spin, double m, double eB,
                                 double kz, double ky, DwlState **out);

/* Frees a state handle; accepts NULL. */
void dwl_state_free(DwlState *state);

/* Landau level energy E_n = sqrt(m^2 + k_z^2 + 2 n eB). */
DwlStatus dwl_state_energy(const DwlState *state, double *out);

/* Spinor coefficients (A_n, B_n, eta_n). */
DwlStatus dwl_state_coefficients(const DwlState *state, double *a, double *b,
                                 double *eta);

/* Closed-form spin-parity/phase-space mutual information; n = 0 allowed. */
DwlStatus dwl_mutual_information(int n, double eps, double kappa, double *out);

/* Closed-form spin-parity relative linear entropy of a state. */
DwlStatus dwl_entropy_sp(const DwlState *state, double *out);

/* Pointwise (non-integrated) purity at the dimensionless point (s, k). */
DwlStatus dwl_local_purity(const DwlState *state, double s, double k,
                           double *out);

/* Concurrence-squared quasi-distribution at (s, k); sign-indefinite. */
DwlStatus dwl_concurrence_sq(const DwlState *state, double s, double k,
                             double *out);

/* Spin-parity density rho(s, k) = Tr[omega gamma0]. */
DwlStatus dwl_density(const DwlState *state, double s, double k, double *out);

/* The 4x4 Wigner matrix at (s, k) into out[32]. */
DwlStatus dwl_omega_matrix(const DwlState *state, double s, double k,
                           double *out);

/* Quadrature purity on a default-sized trapezoid grid with grid_points
 * per axis (>= 16); equals 1 for every pure state. */
DwlStatus dwl_purity_trace(const DwlState *state, int grid_points,
                           double *out);

/* Wootters concurrence of a two-qubit density matrix rho[32]. */
DwlStatus dwl_concurrence_general(const double *rho, double *out);

/* Entanglement of formation from a concurrence in [0, 1]. */
DwlStatus dwl_eof_from_concurrence(double c, double *out);

/* Library version as a static NUL-terminated string. */
const char *dwl_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DWL_H */
