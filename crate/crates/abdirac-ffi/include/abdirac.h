/* C interface to the abdirac library: Dirac fermions on ideal Aharonov-Bohm rings and cylinders. */

#ifndef ABDIRAC_H
#define ABDIRAC_H

/* Generated by cbindgen from the abdirac-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function. The nonzero values
// match the CLI exit codes of the same failure classes.
typedef enum AbdiracStatus {
  // Success.
  AbdiracOk = 0,
  // Caller misuse (null pointers, unnormalized packets, bad handles).
  AbdiracErrUsage = 2,
  // Input outside the mathematical domain of the operation.
  AbdiracErrDomain = 3,
  // The evaluation cannot reach the requested accuracy.
  AbdiracErrAccuracy = 4,
} AbdiracStatus;

// Opaque T=0 occupation of a finite cylinder (the filled states under the
// Fermi condition aspect^2 n^2 + lambda^2 <= alpha^2).
typedef struct AbdiracOccupation AbdiracOccupation;

// Opaque momentum-space wave packet on the infinite cylinder.
typedef struct AbdiracPacket AbdiracPacket;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version string of the underlying library (static storage, do not free).
const char *abdirac_version(void);

// mu = m c R / hbar for a mass in kilograms and a radius in meters.
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_mu_from_physical(double mass_kg, double radius_m, double *out_mu);

// mu for a mass given as a multiple of the electron mass.
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_mu_from_mass_multiple(double mass_me, double radius_m, double *out_mu);

// beta = e B R^2 / (2 hbar) for a field in tesla and a radius in meters.
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_beta_from_field(double field_t, double radius_m, double *out_beta);

// Exact Fermi radius alpha = sqrt(eps (eps + 2 mu)) from the scaled Fermi
// energy eps = E_F R.
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_alpha_from_fermi(double mu, double eps, double *out_alpha);

// Scaled ring energy E*R = sqrt(mu^2 + (beta + lambda)^2);
// `twice_lambda` is the doubled half-odd label.
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_ring_energy(double mu,
                                       double beta,
                                       int64_t twice_lambda,
                                       double *out_energy);

// Saturation function chi(mu, nu) = nu / sqrt(mu^2 + nu^2).
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_chi(double mu, double nu, double *out_chi);

// Partial ring current I*2piR of the state `twice_lambda`/2.
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_ring_current(double mu,
                                        double beta,
                                        int64_t twice_lambda,
                                        double *out_current);

// Pairing density j(mu, lambda) = mu^2 / (mu^2 + lambda^2)^(3/2)
// (continuous lambda).
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_j_ring(double mu, double lambda, double *out_j);

// Exact T=0 ring persistent current for an even electron count:
// the linearized coefficient c and the unlinearized sum of chi over all
// occupied levels.
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_ring_persistent_exact(double mu,
                                                 double beta,
                                                 uint64_t n_electrons,
                                                 double *out_c,
                                                 double *out_full_sum);

// Closed-form ring persistent current k/sqrt(1+k^2) with k = N_e/(2 mu),
// for the filling whose Fermi label is `twice_lambda_f`/2.
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_ring_persistent_approx(double mu, int64_t twice_lambda_f, double *out_c);

// Scaled infinite-cylinder energy sqrt(mu^2 + (kR)^2 + (beta + lambda)^2).
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_energy_infinite(double mu,
                                           double k_scaled,
                                           double beta,
                                           int64_t twice_lambda,
                                           double *out_energy);

// Scaled finite-cylinder energy of the mode (n, lambda).
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_energy_finite(double mu,
                                         double beta,
                                         double aspect,
                                         uint32_t n,
                                         int64_t twice_lambda,
                                         double *out_energy);

// Circular current I^c*2piR of the finite-cylinder mode (n, lambda).
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_chi_finite(double mu,
                                      double beta,
                                      double aspect,
                                      uint32_t n,
                                      int64_t twice_lambda,
                                      double *out_current);

// Cylinder pairing density j_{mu,nu}(n, lambda) (continuous lambda).
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_j_finite(double mu,
                                    double aspect,
                                    uint32_t n,
                                    double lambda,
                                    double *out_j);

// Short-cylinder persistent current ratio
// I/I_max = sqrt((alpha^2 - nu^2)/(alpha^2 + mu^2)); `out_single_shell`
// reports whether nu < alpha < 2 nu actually holds (may be null).
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_short_cylinder(double mu,
                                          double aspect,
                                          double alpha,
                                          double *out_ratio,
                                          int *out_single_shell);

// Non-relativistic limit I/I_max = N_e / (2 mu).
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_nonrel_short_limit(double mu, uint64_t n_electrons, double *out_ratio);

// Enumerates the occupied states of a finite cylinder. On success writes a
// heap handle to `out`; release it with [`abdirac_occupation_free`].
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_occupation_new(double aspect,
                                          double alpha,
                                          struct AbdiracOccupation **out);

// Largest occupied longitudinal quantum number (0 when empty).
//
// # Safety
// `occ` must be a live handle from [`abdirac_occupation_new`].
uint32_t abdirac_occupation_n_f(const struct AbdiracOccupation *occ);

// Total electron count N_e.
//
// # Safety
// `occ` must be a live handle from [`abdirac_occupation_new`].
uint64_t abdirac_occupation_n_electrons(const struct AbdiracOccupation *occ);

// Doubled lambda_n of shell `n` (1-based); 0 when out of range.
//
// # Safety
// `occ` must be a live handle from [`abdirac_occupation_new`].
int64_t abdirac_occupation_lambda_twice(const struct AbdiracOccupation *occ, uint32_t n);

// Releases an occupation handle (null is ignored).
//
// # Safety
// `occ` must be null or a handle from [`abdirac_occupation_new`] not yet
// freed.
void abdirac_occupation_free(struct AbdiracOccupation *occ);

// Exact persistent current of a filled finite cylinder: the linearized
// coefficient c(mu, nu) and the unlinearized chi sum.
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_cylinder_persistent_exact(double mu,
                                                     double beta,
                                                     double aspect,
                                                     double alpha,
                                                     double *out_c,
                                                     double *out_full_sum);

// Closed-form estimate c ~= (sum_n lambda_n) / sqrt(mu^2 + alpha^2) for an
// enumerated occupation.
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_cylinder_persistent_approx(double mu,
                                                      const struct AbdiracOccupation *occ,
                                                      double *out_c);

// Builds a packet from parallel arrays of length `len`: the uniform
// ascending kR grid and the real/imaginary parts of a_+ and a_-.
// `len` must be odd and >= 3. Release with [`abdirac_packet_free`].
//
// # Safety
// All array pointers must reference `len` readable doubles.
enum AbdiracStatus abdirac_packet_new(const double *k,
                                      const double *re_a_plus,
                                      const double *im_a_plus,
                                      const double *re_a_minus,
                                      const double *im_a_minus,
                                      size_t len,
                                      struct AbdiracPacket **out);

// Gaussian packet a_{+-}(k) = c_{+-} exp(-(k-k0)^2/(2 s^2)) on a 12 s grid
// (weights are the real amplitudes of the two polarizations), normalized.
//
// # Safety
// Out-pointers must reference valid writable memory; null out-pointers
// yield a usage status (never a write).
enum AbdiracStatus abdirac_packet_gaussian(double k0,
                                           double s,
                                           double weight_plus,
                                           double weight_minus,
                                           size_t nodes,
                                           struct AbdiracPacket **out);

// Norm integral of the packet under its Simpson rule.
//
// # Safety
// `packet` must be a live handle.
double abdirac_packet_norm(const struct AbdiracPacket *packet);

// Rescales the packet so its norm integral is exactly 1.
//
// # Safety
// `packet` must be a live handle.
enum AbdiracStatus abdirac_packet_normalize(struct AbdiracPacket *packet);

// Mean scaled energy `<E> R` of the normalized packet.
//
// # Safety
// `packet` must be a live handle.
enum AbdiracStatus abdirac_packet_energy(const struct AbdiracPacket *packet,
                                         double mu,
                                         double beta,
                                         int64_t twice_lambda,
                                         double *out_energy);

// Stationary circular current I^c*2piR of the normalized packet.
//
// # Safety
// `packet` must be a live handle.
enum AbdiracStatus abdirac_packet_circular_current(const struct AbdiracPacket *packet,
                                                   double mu,
                                                   double beta,
                                                   int64_t twice_lambda,
                                                   double *out_current);

// Polarization degree P = lambda int dk (|a_+|^2 - |a_-|^2).
//
// # Safety
// `packet` must be a live handle.
enum AbdiracStatus abdirac_packet_polarization(const struct AbdiracPacket *packet,
                                               int64_t twice_lambda,
                                               double *out_polarization);

// Longitudinal current I^3 (units 1/R) at time `t` and height `z`, both in
// units of R. `out_imag_residual` receives the Hermiticity defect of the
// double integral and may be null.
//
// # Safety
// `packet` must be a live handle.
enum AbdiracStatus abdirac_packet_longitudinal_current(const struct AbdiracPacket *packet,
                                                       double mu,
                                                       double beta,
                                                       int64_t twice_lambda,
                                                       double t,
                                                       double z,
                                                       double *out_current,
                                                       double *out_imag_residual);

// Releases a packet handle (null is ignored).
//
// # Safety
// `packet` must be null or a handle not yet freed.
void abdirac_packet_free(struct AbdiracPacket *packet);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABDIRAC_H */
