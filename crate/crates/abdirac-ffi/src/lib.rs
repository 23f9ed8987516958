//! C ABI for the abdirac library.
//!
//! Conventions:
//! * every fallible entry point returns an [`AbdiracStatus`] and writes its
//!   results through out-pointers;
//! * half-odd angular momenta cross the boundary as doubled integers
//!   (`twice_lambda = 2 lambda`, odd);
//! * occupation sets and wave packets are opaque handles created by `*_new`
//!   constructors and released by the matching `*_free`;
//! * all quantities are dimensionless exactly as in the Rust crate
//!   (energies `E*R`, currents `I*2piR`, momenta `kR`).
//!
//! The C header `include/abdirac.h` is generated by cbindgen at build time.

// Frozen oracle values in tests are kept at full printed precision.
#![allow(clippy::excessive_precision)]

use std::ffi::{c_char, c_double, c_int};

use abdirac::cylinder;
use abdirac::error::Error;
use abdirac::halfint::HalfInteger;
use abdirac::params::{self, CylinderConfig, RingConfig};
use abdirac::ring;
use abdirac::wavepacket::{self, PacketSpec};
use num_complex::Complex64;

/// Status codes returned by every fallible function. The nonzero values
/// match the CLI exit codes of the same failure classes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbdiracStatus {
    /// Success.
    AbdiracOk = 0,
    /// Caller misuse (null pointers, unnormalized packets, bad handles).
    AbdiracErrUsage = 2,
    /// Input outside the mathematical domain of the operation.
    AbdiracErrDomain = 3,
    /// The evaluation cannot reach the requested accuracy.
    AbdiracErrAccuracy = 4,
}

use AbdiracStatus::*;

fn status_of(err: &Error) -> AbdiracStatus {
    match err {
        Error::Usage(_) => AbdiracErrUsage,
        Error::Domain(_) => AbdiracErrDomain,
        Error::Accuracy(_) => AbdiracErrAccuracy,
    }
}

fn write_out(out: *mut c_double, value: f64) -> AbdiracStatus {
    if out.is_null() {
        return AbdiracErrUsage;
    }
    unsafe { *out = value };
    AbdiracOk
}

fn half(twice: i64) -> Result<HalfInteger, Error> {
    HalfInteger::new(twice)
}

macro_rules! try_ffi {
    ($expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(e) => return status_of(&e),
        }
    };
}

/// Version string of the underlying library (static storage, do not free).
#[no_mangle]
pub extern "C" fn abdirac_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

// ---------------------------------------------------------------------------
// dimensionless parameters from SI inputs
// ---------------------------------------------------------------------------

/// mu = m c R / hbar for a mass in kilograms and a radius in meters.
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_mu_from_physical(
    mass_kg: c_double,
    radius_m: c_double,
    out_mu: *mut c_double,
) -> AbdiracStatus {
    let v = try_ffi!(params::mu_from_physical(mass_kg, radius_m));
    write_out(out_mu, v)
}

/// mu for a mass given as a multiple of the electron mass.
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_mu_from_mass_multiple(
    mass_me: c_double,
    radius_m: c_double,
    out_mu: *mut c_double,
) -> AbdiracStatus {
    let v = try_ffi!(params::mu_from_mass_multiple(mass_me, radius_m));
    write_out(out_mu, v)
}

/// beta = e B R^2 / (2 hbar) for a field in tesla and a radius in meters.
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_beta_from_field(
    field_t: c_double,
    radius_m: c_double,
    out_beta: *mut c_double,
) -> AbdiracStatus {
    let v = try_ffi!(params::beta_from_field(field_t, radius_m));
    write_out(out_beta, v)
}

/// Exact Fermi radius alpha = sqrt(eps (eps + 2 mu)) from the scaled Fermi
/// energy eps = E_F R.
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_alpha_from_fermi(
    mu: c_double,
    eps: c_double,
    out_alpha: *mut c_double,
) -> AbdiracStatus {
    let v = try_ffi!(params::alpha_from_fermi(mu, eps));
    write_out(out_alpha, v)
}

// ---------------------------------------------------------------------------
// ring formulas
// ---------------------------------------------------------------------------

/// Scaled ring energy E*R = sqrt(mu^2 + (beta + lambda)^2);
/// `twice_lambda` is the doubled half-odd label.
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_ring_energy(
    mu: c_double,
    beta: c_double,
    twice_lambda: i64,
    out_energy: *mut c_double,
) -> AbdiracStatus {
    let lambda = try_ffi!(half(twice_lambda));
    try_ffi!(RingConfig::new(mu, beta));
    write_out(out_energy, ring::ring_energy(mu, beta, lambda))
}

/// Saturation function chi(mu, nu) = nu / sqrt(mu^2 + nu^2).
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_chi(
    mu: c_double,
    nu: c_double,
    out_chi: *mut c_double,
) -> AbdiracStatus {
    let v = try_ffi!(ring::chi(mu, nu));
    write_out(out_chi, v)
}

/// Partial ring current I*2piR of the state `twice_lambda`/2.
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_ring_current(
    mu: c_double,
    beta: c_double,
    twice_lambda: i64,
    out_current: *mut c_double,
) -> AbdiracStatus {
    let lambda = try_ffi!(half(twice_lambda));
    try_ffi!(RingConfig::new(mu, beta));
    let v = try_ffi!(ring::partial_current_ring(mu, beta, lambda));
    write_out(out_current, v)
}

/// Pairing density j(mu, lambda) = mu^2 / (mu^2 + lambda^2)^(3/2)
/// (continuous lambda).
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_j_ring(
    mu: c_double,
    lambda: c_double,
    out_j: *mut c_double,
) -> AbdiracStatus {
    let v = try_ffi!(ring::j_ring(mu, lambda));
    write_out(out_j, v)
}

/// Exact T=0 ring persistent current for an even electron count:
/// the linearized coefficient c and the unlinearized sum of chi over all
/// occupied levels.
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_ring_persistent_exact(
    mu: c_double,
    beta: c_double,
    n_electrons: u64,
    out_c: *mut c_double,
    out_full_sum: *mut c_double,
) -> AbdiracStatus {
    try_ffi!(RingConfig::new(mu, beta));
    let filling = try_ffi!(ring::FermiFillingRing::from_electron_count(n_electrons));
    let p = try_ffi!(ring::persistent_ring_exact(mu, &filling, beta));
    if out_c.is_null() || out_full_sum.is_null() {
        return AbdiracErrUsage;
    }
    unsafe {
        *out_c = p.c;
        *out_full_sum = p.full_sum;
    }
    AbdiracOk
}

/// Closed-form ring persistent current k/sqrt(1+k^2) with k = N_e/(2 mu),
/// for the filling whose Fermi label is `twice_lambda_f`/2.
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_ring_persistent_approx(
    mu: c_double,
    twice_lambda_f: i64,
    out_c: *mut c_double,
) -> AbdiracStatus {
    let lf = try_ffi!(half(twice_lambda_f));
    let v = try_ffi!(ring::persistent_ring_approx(mu, lf));
    write_out(out_c, v)
}

// ---------------------------------------------------------------------------
// cylinder formulas
// ---------------------------------------------------------------------------

/// Scaled infinite-cylinder energy sqrt(mu^2 + (kR)^2 + (beta + lambda)^2).
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_energy_infinite(
    mu: c_double,
    k_scaled: c_double,
    beta: c_double,
    twice_lambda: i64,
    out_energy: *mut c_double,
) -> AbdiracStatus {
    let lambda = try_ffi!(half(twice_lambda));
    try_ffi!(CylinderConfig::infinite(mu, beta));
    write_out(
        out_energy,
        cylinder::energy_infinite(mu, k_scaled, beta, lambda),
    )
}

/// Scaled finite-cylinder energy of the mode (n, lambda).
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_energy_finite(
    mu: c_double,
    beta: c_double,
    aspect: c_double,
    n: u32,
    twice_lambda: i64,
    out_energy: *mut c_double,
) -> AbdiracStatus {
    let lambda = try_ffi!(half(twice_lambda));
    let config = try_ffi!(CylinderConfig::finite(mu, beta, aspect));
    let v = try_ffi!(cylinder::energy_finite(&config, n, lambda));
    write_out(out_energy, v)
}

/// Circular current I^c*2piR of the finite-cylinder mode (n, lambda).
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_chi_finite(
    mu: c_double,
    beta: c_double,
    aspect: c_double,
    n: u32,
    twice_lambda: i64,
    out_current: *mut c_double,
) -> AbdiracStatus {
    let lambda = try_ffi!(half(twice_lambda));
    let config = try_ffi!(CylinderConfig::finite(mu, beta, aspect));
    let v = try_ffi!(cylinder::chi_finite(&config, n, lambda));
    write_out(out_current, v)
}

/// Cylinder pairing density j_{mu,nu}(n, lambda) (continuous lambda).
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_j_finite(
    mu: c_double,
    aspect: c_double,
    n: u32,
    lambda: c_double,
    out_j: *mut c_double,
) -> AbdiracStatus {
    let v = try_ffi!(cylinder::j_finite(mu, aspect, n, lambda));
    write_out(out_j, v)
}

/// Short-cylinder persistent current ratio
/// I/I_max = sqrt((alpha^2 - nu^2)/(alpha^2 + mu^2)); `out_single_shell`
/// reports whether nu < alpha < 2 nu actually holds (may be null).
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_short_cylinder(
    mu: c_double,
    aspect: c_double,
    alpha: c_double,
    out_ratio: *mut c_double,
    out_single_shell: *mut c_int,
) -> AbdiracStatus {
    let s = try_ffi!(cylinder::persistent_short_cylinder(mu, aspect, alpha));
    if !out_single_shell.is_null() {
        unsafe { *out_single_shell = s.single_shell as c_int };
    }
    write_out(out_ratio, s.ratio)
}

/// Non-relativistic limit I/I_max = N_e / (2 mu).
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_nonrel_short_limit(
    mu: c_double,
    n_electrons: u64,
    out_ratio: *mut c_double,
) -> AbdiracStatus {
    let v = try_ffi!(cylinder::nonrel_short_limit(mu, n_electrons));
    write_out(out_ratio, v)
}

// ---------------------------------------------------------------------------
// occupation sets (opaque handle)
// ---------------------------------------------------------------------------

/// Opaque T=0 occupation of a finite cylinder (the filled states under the
/// Fermi condition aspect^2 n^2 + lambda^2 <= alpha^2).
pub struct AbdiracOccupation {
    inner: cylinder::OccupationSet,
}

/// Enumerates the occupied states of a finite cylinder. On success writes a
/// heap handle to `out`; release it with [`abdirac_occupation_free`].
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_occupation_new(
    aspect: c_double,
    alpha: c_double,
    out: *mut *mut AbdiracOccupation,
) -> AbdiracStatus {
    if out.is_null() {
        return AbdiracErrUsage;
    }
    let config = try_ffi!(CylinderConfig::finite(1.0, 0.0, aspect));
    let inner = try_ffi!(cylinder::enumerate_occupied(&config, alpha));
    unsafe { *out = Box::into_raw(Box::new(AbdiracOccupation { inner })) };
    AbdiracOk
}

/// Largest occupied longitudinal quantum number (0 when empty).
///
/// # Safety
/// `occ` must be a live handle from [`abdirac_occupation_new`].
#[no_mangle]
pub unsafe extern "C" fn abdirac_occupation_n_f(occ: *const AbdiracOccupation) -> u32 {
    if occ.is_null() {
        return 0;
    }
    (*occ).inner.n_f()
}

/// Total electron count N_e.
///
/// # Safety
/// `occ` must be a live handle from [`abdirac_occupation_new`].
#[no_mangle]
pub unsafe extern "C" fn abdirac_occupation_n_electrons(occ: *const AbdiracOccupation) -> u64 {
    if occ.is_null() {
        return 0;
    }
    (*occ).inner.n_electrons()
}

/// Doubled lambda_n of shell `n` (1-based); 0 when out of range.
///
/// # Safety
/// `occ` must be a live handle from [`abdirac_occupation_new`].
#[no_mangle]
pub unsafe extern "C" fn abdirac_occupation_lambda_twice(
    occ: *const AbdiracOccupation,
    n: u32,
) -> i64 {
    if occ.is_null() || n == 0 {
        return 0;
    }
    (*occ)
        .inner
        .lambda_n()
        .get(n as usize - 1)
        .map(|l| l.twice())
        .unwrap_or(0)
}

/// Releases an occupation handle (null is ignored).
///
/// # Safety
/// `occ` must be null or a handle from [`abdirac_occupation_new`] not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn abdirac_occupation_free(occ: *mut AbdiracOccupation) {
    if !occ.is_null() {
        drop(Box::from_raw(occ));
    }
}

/// Exact persistent current of a filled finite cylinder: the linearized
/// coefficient c(mu, nu) and the unlinearized chi sum.
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_cylinder_persistent_exact(
    mu: c_double,
    beta: c_double,
    aspect: c_double,
    alpha: c_double,
    out_c: *mut c_double,
    out_full_sum: *mut c_double,
) -> AbdiracStatus {
    let config = try_ffi!(CylinderConfig::finite(mu, beta, aspect));
    let p = try_ffi!(cylinder::persistent_finite_exact(&config, alpha));
    if out_c.is_null() || out_full_sum.is_null() {
        return AbdiracErrUsage;
    }
    unsafe {
        *out_c = p.c;
        *out_full_sum = p.full_sum;
    }
    AbdiracOk
}

/// Closed-form estimate c ~= (sum_n lambda_n) / sqrt(mu^2 + alpha^2) for an
/// enumerated occupation.
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_cylinder_persistent_approx(
    mu: c_double,
    occ: *const AbdiracOccupation,
    out_c: *mut c_double,
) -> AbdiracStatus {
    if occ.is_null() {
        return AbdiracErrUsage;
    }
    let inner = unsafe { &(*occ).inner };
    let v = try_ffi!(cylinder::persistent_finite_approx(mu, inner));
    write_out(out_c, v)
}

// ---------------------------------------------------------------------------
// wave packets (opaque handle)
// ---------------------------------------------------------------------------

/// Opaque momentum-space wave packet on the infinite cylinder.
pub struct AbdiracPacket {
    inner: PacketSpec,
}

/// Builds a packet from parallel arrays of length `len`: the uniform
/// ascending kR grid and the real/imaginary parts of a_+ and a_-.
/// `len` must be odd and >= 3. Release with [`abdirac_packet_free`].
///
/// # Safety
/// All array pointers must reference `len` readable doubles.
#[no_mangle]
pub unsafe extern "C" fn abdirac_packet_new(
    k: *const c_double,
    re_a_plus: *const c_double,
    im_a_plus: *const c_double,
    re_a_minus: *const c_double,
    im_a_minus: *const c_double,
    len: usize,
    out: *mut *mut AbdiracPacket,
) -> AbdiracStatus {
    if out.is_null()
        || k.is_null()
        || re_a_plus.is_null()
        || im_a_plus.is_null()
        || re_a_minus.is_null()
        || im_a_minus.is_null()
    {
        return AbdiracErrUsage;
    }
    let k = std::slice::from_raw_parts(k, len).to_vec();
    let a_plus: Vec<Complex64> = std::slice::from_raw_parts(re_a_plus, len)
        .iter()
        .zip(std::slice::from_raw_parts(im_a_plus, len))
        .map(|(&re, &im)| Complex64::new(re, im))
        .collect();
    let a_minus: Vec<Complex64> = std::slice::from_raw_parts(re_a_minus, len)
        .iter()
        .zip(std::slice::from_raw_parts(im_a_minus, len))
        .map(|(&re, &im)| Complex64::new(re, im))
        .collect();
    let inner = try_ffi!(PacketSpec::new(k, a_plus, a_minus));
    *out = Box::into_raw(Box::new(AbdiracPacket { inner }));
    AbdiracOk
}

/// Gaussian packet a_{+-}(k) = c_{+-} exp(-(k-k0)^2/(2 s^2)) on a 12 s grid
/// (weights are the real amplitudes of the two polarizations), normalized.
///
/// # Safety
/// Out-pointers must reference valid writable memory; null out-pointers
/// yield a usage status (never a write).
#[no_mangle]
pub unsafe extern "C" fn abdirac_packet_gaussian(
    k0: c_double,
    s: c_double,
    weight_plus: c_double,
    weight_minus: c_double,
    nodes: usize,
    out: *mut *mut AbdiracPacket,
) -> AbdiracStatus {
    if out.is_null() {
        return AbdiracErrUsage;
    }
    let packet = try_ffi!(PacketSpec::gaussian(
        k0,
        s,
        Complex64::new(weight_plus, 0.0),
        Complex64::new(weight_minus, 0.0),
        nodes
    ));
    let inner = try_ffi!(packet.normalize());
    unsafe { *out = Box::into_raw(Box::new(AbdiracPacket { inner })) };
    AbdiracOk
}

/// Norm integral of the packet under its Simpson rule.
///
/// # Safety
/// `packet` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn abdirac_packet_norm(packet: *const AbdiracPacket) -> c_double {
    if packet.is_null() {
        return f64::NAN;
    }
    (*packet).inner.norm()
}

/// Rescales the packet so its norm integral is exactly 1.
///
/// # Safety
/// `packet` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn abdirac_packet_normalize(packet: *mut AbdiracPacket) -> AbdiracStatus {
    if packet.is_null() {
        return AbdiracErrUsage;
    }
    let inner = (*packet).inner.clone();
    match inner.normalize() {
        Ok(normalized) => {
            (*packet).inner = normalized;
            AbdiracOk
        }
        Err(e) => status_of(&e),
    }
}

/// Mean scaled energy `<E> R` of the normalized packet.
///
/// # Safety
/// `packet` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn abdirac_packet_energy(
    packet: *const AbdiracPacket,
    mu: c_double,
    beta: c_double,
    twice_lambda: i64,
    out_energy: *mut c_double,
) -> AbdiracStatus {
    if packet.is_null() {
        return AbdiracErrUsage;
    }
    let lambda = try_ffi!(half(twice_lambda));
    let config = try_ffi!(CylinderConfig::infinite(mu, beta));
    let v = try_ffi!(wavepacket::packet_energy(&config, lambda, &(*packet).inner));
    write_out(out_energy, v)
}

/// Stationary circular current I^c*2piR of the normalized packet.
///
/// # Safety
/// `packet` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn abdirac_packet_circular_current(
    packet: *const AbdiracPacket,
    mu: c_double,
    beta: c_double,
    twice_lambda: i64,
    out_current: *mut c_double,
) -> AbdiracStatus {
    if packet.is_null() {
        return AbdiracErrUsage;
    }
    let lambda = try_ffi!(half(twice_lambda));
    let config = try_ffi!(CylinderConfig::infinite(mu, beta));
    let v = try_ffi!(wavepacket::circular_current(
        &config,
        lambda,
        &(*packet).inner
    ));
    write_out(out_current, v)
}

/// Polarization degree P = lambda int dk (|a_+|^2 - |a_-|^2).
///
/// # Safety
/// `packet` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn abdirac_packet_polarization(
    packet: *const AbdiracPacket,
    twice_lambda: i64,
    out_polarization: *mut c_double,
) -> AbdiracStatus {
    if packet.is_null() {
        return AbdiracErrUsage;
    }
    let lambda = try_ffi!(half(twice_lambda));
    let v = try_ffi!(wavepacket::polarization_degree(lambda, &(*packet).inner));
    write_out(out_polarization, v)
}

/// Longitudinal current I^3 (units 1/R) at time `t` and height `z`, both in
/// units of R. `out_imag_residual` receives the Hermiticity defect of the
/// double integral and may be null.
///
/// # Safety
/// `packet` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn abdirac_packet_longitudinal_current(
    packet: *const AbdiracPacket,
    mu: c_double,
    beta: c_double,
    twice_lambda: i64,
    t: c_double,
    z: c_double,
    out_current: *mut c_double,
    out_imag_residual: *mut c_double,
) -> AbdiracStatus {
    if packet.is_null() {
        return AbdiracErrUsage;
    }
    let lambda = try_ffi!(half(twice_lambda));
    let config = try_ffi!(CylinderConfig::infinite(mu, beta));
    let v = try_ffi!(wavepacket::longitudinal_current(
        &config,
        lambda,
        &(*packet).inner,
        t,
        z
    ));
    if !out_imag_residual.is_null() {
        *out_imag_residual = v.imag_residual;
    }
    write_out(out_current, v.value)
}

/// Releases a packet handle (null is ignored).
///
/// # Safety
/// `packet` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abdirac_packet_free(packet: *mut AbdiracPacket) {
    if !packet.is_null() {
        drop(Box::from_raw(packet));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trips() {
        unsafe {
            let mut v = 0.0;
            assert_eq!(abdirac_chi(2.0, 1.0, &mut v), AbdiracOk);
            assert!((v - 0.447_213_595_499_957_93).abs() < 1e-15);
            assert_eq!(abdirac_chi(0.0, 0.0, &mut v), AbdiracErrDomain);
            assert_eq!(abdirac_ring_energy(3.0, 0.0, 1, &mut v), AbdiracOk);
            assert!((v - 9.25f64.sqrt()).abs() < 1e-15);
            // even numerator is rejected
            assert_eq!(abdirac_ring_energy(3.0, 0.0, 2, &mut v), AbdiracErrDomain);
            assert_eq!(
                abdirac_ring_energy(3.0, 0.0, 1, std::ptr::null_mut()),
                AbdiracErrUsage
            );
            assert_eq!(
                abdirac_mu_from_mass_multiple(0.0135, 100e-9, &mut v),
                AbdiracOk
            );
            assert!((v - 3495.0).abs() <= 1.0);
        }
    }

    #[test]
    fn persistent_current_matches_library() {
        unsafe {
            let (mut c, mut full) = (0.0, 0.0);
            assert_eq!(
                abdirac_ring_persistent_exact(100.0, 0.0, 100, &mut c, &mut full),
                AbdiracOk
            );
            assert!((c - 0.447_217_173_275_506_363).abs() < 1e-12);
            assert_eq!(full, 0.0);
            assert_eq!(
                abdirac_ring_persistent_exact(100.0, 0.0, 7, &mut c, &mut full),
                AbdiracErrDomain
            );
            let mut approx = 0.0;
            assert_eq!(
                abdirac_ring_persistent_approx(1000.0, 999, &mut approx),
                AbdiracOk
            );
            assert!((c - approx).abs() < 1e-2);
        }
    }

    #[test]
    fn occupation_handle_lifecycle() {
        unsafe {
            let mut occ: *mut AbdiracOccupation = std::ptr::null_mut();
            assert_eq!(abdirac_occupation_new(2.0, 5.0, &mut occ), AbdiracOk);
            {
                assert_eq!(abdirac_occupation_n_f(occ), 2);
                assert_eq!(abdirac_occupation_n_electrons(occ), 16);
                assert_eq!(abdirac_occupation_lambda_twice(occ, 1), 9);
                assert_eq!(abdirac_occupation_lambda_twice(occ, 2), 5);
                assert_eq!(abdirac_occupation_lambda_twice(occ, 3), 0);
                let mut approx = 0.0;
                assert_eq!(
                    abdirac_cylinder_persistent_approx(200.0, occ, &mut approx),
                    AbdiracOk
                );
                abdirac_occupation_free(occ);
            }
            assert_eq!(
                abdirac_occupation_new(-1.0, 5.0, &mut occ),
                AbdiracErrDomain
            );
        }
    }

    #[test]
    fn packet_handle_lifecycle() {
        unsafe {
            let mut packet: *mut AbdiracPacket = std::ptr::null_mut();
            assert_eq!(
                abdirac_packet_gaussian(2.0, 0.1, 1.0, 0.0, 1025, &mut packet),
                AbdiracOk
            );
            {
                assert!((abdirac_packet_norm(packet) - 1.0).abs() < 1e-12);
                let mut e = 0.0;
                assert_eq!(
                    abdirac_packet_energy(packet, 1.0, 0.0, 1, &mut e),
                    AbdiracOk
                );
                assert!((e - 2.291_548_153_129_323).abs() < 1e-12);
                let mut cur = 0.0;
                assert_eq!(
                    abdirac_packet_circular_current(packet, 1.0, 0.0, 1, &mut cur),
                    AbdiracOk
                );
                assert!(cur.abs() < 1.0);
                let mut p = 0.0;
                assert_eq!(abdirac_packet_polarization(packet, 3, &mut p), AbdiracOk);
                assert!((p - 1.5).abs() < 1e-12);
                let (mut i3, mut im) = (0.0, 0.0);
                assert_eq!(
                    abdirac_packet_longitudinal_current(
                        packet, 1.0, 0.0, 1, 0.0, 0.0, &mut i3, &mut im
                    ),
                    AbdiracOk
                );
                assert!(im < 1e-10);
                // oscillation guard
                assert_eq!(
                    abdirac_packet_longitudinal_current(
                        packet, 1.0, 0.0, 1, 1e9, 0.0, &mut i3, &mut im
                    ),
                    AbdiracErrAccuracy
                );
                abdirac_packet_free(packet);
            }
            // building from raw arrays
            let k = [0.0, 0.5, 1.0];
            let re = [1.0, 2.0, 1.0];
            let im = [0.0, 0.0, 0.0];
            let zero = [0.0, 0.0, 0.0];
            {
                assert_eq!(
                    abdirac_packet_new(
                        k.as_ptr(),
                        re.as_ptr(),
                        im.as_ptr(),
                        zero.as_ptr(),
                        zero.as_ptr(),
                        3,
                        &mut packet
                    ),
                    AbdiracOk
                );
                assert_eq!(abdirac_packet_normalize(packet), AbdiracOk);
                assert!((abdirac_packet_norm(packet) - 1.0).abs() < 1e-14);
                abdirac_packet_free(packet);
            }
        }
    }
}
