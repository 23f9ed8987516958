//! Square-integrable wave packets on infinite Aharonov-Bohm cylinders and
//! their observables: mean energy, circular current, polarization degree and
//! the time-dependent longitudinal current.
//!
//! A packet of fixed total angular momentum lambda is
//! psi_lambda = int dk [a_+(k) U^+_{k,lambda} + a_-(k) U^-_{k,lambda}]
//! with int dk (|a_+|^2 + |a_-|^2) = 1. Amplitudes live on a uniform kR grid
//! with an odd node count; every integral uses composite Simpson weights on
//! that grid, so doubling the resolution is a direct error check.
//!
//! The longitudinal current is the double k-integral of Appendix-type form
//!
//! I^3 = (1/4pi) int dk dk' e^{i t (E - E') - i z (k - k')}
//!       { [k (E'+M) + k' (E+M)] (a_+^* a_+' + a_-^* a_-')
//!         + i (lambda+beta) (E' - E) (a_+^* a_-' + a_-^* a_+') }
//!       / sqrt(E E' (E+M)(E'+M)),
//!
//! whose mass term M(k + k') follows from the spinor bilinear
//! psi-bar gamma^3 psi; it makes the integrand Hermitian, so the result is
//! real and vanishes at t = 0 for symmetric real packets.

use crate::cylinder::energy_infinite;
use crate::error::{Error, Result};
use crate::halfint::HalfInteger;
use crate::params::CylinderConfig;
use crate::quad::simpson_weights;
use crate::C64;

/// Default Gaussian grid resolution.
pub const DEFAULT_PACKET_NODES: usize = 1025;

/// Tolerance inside which a packet counts as normalized.
pub const NORMALIZATION_TOL: f64 = 1e-8;

/// Momentum-space amplitudes of a single-lambda packet.
#[derive(Debug, Clone, PartialEq)]
pub struct PacketSpec {
    k: Vec<f64>,
    a_plus: Vec<C64>,
    a_minus: Vec<C64>,
    weights: Vec<f64>,
    dk: f64,
}

impl PacketSpec {
    /// Builds a packet from a strictly increasing uniform kR grid (odd node
    /// count) and per-node amplitudes.
    pub fn new(k: Vec<f64>, a_plus: Vec<C64>, a_minus: Vec<C64>) -> Result<Self> {
        if k.len() < 3 || k.len().is_multiple_of(2) {
            return Err(Error::usage(format!(
                "packet grid needs an odd node count >= 3, got {}",
                k.len()
            )));
        }
        if a_plus.len() != k.len() || a_minus.len() != k.len() {
            return Err(Error::usage(
                "amplitude arrays must match the k grid length",
            ));
        }
        let dk = k[1] - k[0];
        if !(dk > 0.0) {
            return Err(Error::usage("k grid must be strictly increasing"));
        }
        for w in k.windows(2) {
            let step = w[1] - w[0];
            if (step - dk).abs() > 1e-9 * dk {
                return Err(Error::usage("k grid must be uniform"));
            }
        }
        let weights = simpson_weights(k.len(), dk)?;
        Ok(PacketSpec {
            k,
            a_plus,
            a_minus,
            weights,
            dk,
        })
    }

    /// Gaussian packet a_{+-}(k) = c_{+-} exp(-(k - k0)^2 / (2 s^2)) sampled
    /// on [k0 - 6s, k0 + 6s]. Not yet normalized.
    pub fn gaussian(k0: f64, s: f64, c_plus: C64, c_minus: C64, nodes: usize) -> Result<Self> {
        if !(s > 0.0) {
            return Err(Error::domain(format!(
                "Gaussian width must be > 0, got {s}"
            )));
        }
        let n = if nodes.is_multiple_of(2) {
            nodes + 1
        } else {
            nodes
        };
        let lo = k0 - 6.0 * s;
        let hi = k0 + 6.0 * s;
        let dk = (hi - lo) / (n - 1) as f64;
        let mut k = Vec::with_capacity(n);
        let mut a_plus = Vec::with_capacity(n);
        let mut a_minus = Vec::with_capacity(n);
        for i in 0..n {
            let ki = lo + i as f64 * dk;
            let g = (-(ki - k0) * (ki - k0) / (2.0 * s * s)).exp();
            k.push(ki);
            a_plus.push(c_plus * g);
            a_minus.push(c_minus * g);
        }
        PacketSpec::new(k, a_plus, a_minus)
    }

    pub fn k_grid(&self) -> &[f64] {
        &self.k
    }

    pub fn dk(&self) -> f64 {
        self.dk
    }

    pub fn a_plus(&self) -> &[C64] {
        &self.a_plus
    }

    pub fn a_minus(&self) -> &[C64] {
        &self.a_minus
    }

    pub fn simpson(&self) -> &[f64] {
        &self.weights
    }

    /// int dk (|a_+|^2 + |a_-|^2) under the packet's Simpson rule.
    pub fn norm(&self) -> f64 {
        self.k
            .iter()
            .enumerate()
            .map(|(i, _)| {
                self.weights[i] * (self.a_plus[i].norm_sqr() + self.a_minus[i].norm_sqr())
            })
            .sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm() - 1.0).abs() <= NORMALIZATION_TOL
    }

    /// Rescales the amplitudes so the norm integral is exactly 1.
    pub fn normalize(mut self) -> Result<PacketSpec> {
        let norm = self.norm();
        if !(norm > 0.0) {
            return Err(Error::domain("cannot normalize an all-zero packet"));
        }
        let scale = 1.0 / norm.sqrt();
        for a in self.a_plus.iter_mut().chain(self.a_minus.iter_mut()) {
            *a *= scale;
        }
        Ok(self)
    }

    /// Reads a packet from CSV columns
    /// `k,re_a_plus,im_a_plus,re_a_minus,im_a_minus` (header optional,
    /// `#` comments ignored).
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut k = Vec::new();
        let mut a_plus = Vec::new();
        let mut a_minus = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if lineno == 0 && line.starts_with('k') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 5 {
                return Err(Error::usage(format!(
                    "packet CSV line {}: expected 5 columns, got {}",
                    lineno + 1,
                    fields.len()
                )));
            }
            let mut nums = [0.0f64; 5];
            for (slot, field) in nums.iter_mut().zip(fields.iter()) {
                *slot = field.parse().map_err(|_| {
                    Error::usage(format!(
                        "packet CSV line {}: bad number {field:?}",
                        lineno + 1
                    ))
                })?;
            }
            k.push(nums[0]);
            a_plus.push(C64::new(nums[1], nums[2]));
            a_minus.push(C64::new(nums[3], nums[4]));
        }
        PacketSpec::new(k, a_plus, a_minus)
    }
}

fn require_infinite(config: &CylinderConfig) -> Result<()> {
    if config.aspect().is_some() {
        return Err(Error::usage(
            "packet observables live on the infinite cylinder",
        ));
    }
    Ok(())
}

fn require_normalized(spec: &PacketSpec) -> Result<()> {
    if !spec.is_normalized() {
        return Err(Error::usage(format!(
            "packet must be normalized first (norm = {})",
            spec.norm()
        )));
    }
    Ok(())
}

/// Mean scaled energy `<E> R` = int dk E_{k,lambda} (|a_+|^2 + |a_-|^2).
pub fn packet_energy(
    config: &CylinderConfig,
    lambda: HalfInteger,
    spec: &PacketSpec,
) -> Result<f64> {
    require_infinite(config)?;
    require_normalized(spec)?;
    Ok(spec
        .k_grid()
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let e = energy_infinite(config.mu(), k, config.beta(), lambda);
            spec.simpson()[i] * e * (spec.a_plus()[i].norm_sqr() + spec.a_minus()[i].norm_sqr())
        })
        .sum())
}

/// Stationary circular current
/// I^c 2piR = (lambda + beta) int dk (|a_+|^2 + |a_-|^2) / E_{k,lambda}.
///
/// Saturates to +-1 as lambda -> +-infinity for any normalized packet and
/// equals (1/2pi) `d<E>/dbeta`.
pub fn circular_current(
    config: &CylinderConfig,
    lambda: HalfInteger,
    spec: &PacketSpec,
) -> Result<f64> {
    require_infinite(config)?;
    require_normalized(spec)?;
    let nu = config.beta() + lambda.value();
    Ok(spec
        .k_grid()
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let e = energy_infinite(config.mu(), k, config.beta(), lambda);
            spec.simpson()[i] * (spec.a_plus()[i].norm_sqr() + spec.a_minus()[i].norm_sqr()) / e
        })
        .sum::<f64>()
        * nu)
}

/// Polarization degree P = lambda int dk (|a_+|^2 - |a_-|^2), in
/// [-|lambda|, |lambda|].
pub fn polarization_degree(lambda: HalfInteger, spec: &PacketSpec) -> Result<f64> {
    require_normalized(spec)?;
    Ok(spec
        .k_grid()
        .iter()
        .enumerate()
        .map(|(i, _)| {
            spec.simpson()[i] * (spec.a_plus()[i].norm_sqr() - spec.a_minus()[i].norm_sqr())
        })
        .sum::<f64>()
        * lambda.value())
}

/// Longitudinal current value and the Hermiticity residual of the double
/// integral (the imaginary part, which must vanish).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LongitudinalCurrent {
    /// I^3 in natural units with R = 1.
    pub value: f64,
    /// |Im| of the accumulated double sum; < 1e-10 for sane grids.
    pub imag_residual: f64,
}

/// Evaluates the longitudinal current double integral at (t, z), both given
/// in units of R.
///
/// Errors with an accuracy failure when the requested (t, z) makes the
/// integrand phase advance by more than pi/2 per grid cell, because the
/// Simpson rule can no longer track the oscillation.
pub fn longitudinal_current(
    config: &CylinderConfig,
    lambda: HalfInteger,
    spec: &PacketSpec,
    t: f64,
    z: f64,
) -> Result<LongitudinalCurrent> {
    require_infinite(config)?;
    require_normalized(spec)?;
    if !t.is_finite() || !z.is_finite() {
        return Err(Error::domain("(t, z) must be finite"));
    }
    // |d(phase)/dk| <= |t| |dE/dk| + |z| <= |t| + |z| per unit k.
    let advance = (t.abs() + z.abs()) * spec.dk();
    if advance > std::f64::consts::FRAC_PI_2 {
        return Err(Error::accuracy(format!(
            "phase advance per grid cell is {advance:.3} > pi/2; refine the k grid \
             or reduce |t| + |z|"
        )));
    }
    let mu = config.mu();
    let nu = config.beta() + lambda.value();
    let n = spec.k_grid().len();
    let mut e = vec![0.0; n];
    let mut root = vec![0.0; n];
    for i in 0..n {
        e[i] = energy_infinite(mu, spec.k_grid()[i], config.beta(), lambda);
        root[i] = (e[i] * (e[i] + mu)).sqrt();
    }
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..n {
        let ki = spec.k_grid()[i];
        let (api, ami) = (spec.a_plus()[i].conj(), spec.a_minus()[i].conj());
        let wi = spec.simpson()[i];
        for j in 0..n {
            let kj = spec.k_grid()[j];
            let phase_arg = t * (e[i] - e[j]) - z * (ki - kj);
            let phase = C64::new(phase_arg.cos(), phase_arg.sin());
            let diag = ki * (e[j] + mu) + kj * (e[i] + mu);
            let pp = api * spec.a_plus()[j] + ami * spec.a_minus()[j];
            let pm = api * spec.a_minus()[j] + ami * spec.a_plus()[j];
            let cross = C64::new(0.0, nu * (e[j] - e[i]));
            let denom = root[i] * root[j];
            acc += phase * (diag * pp + cross * pm) * (wi * spec.simpson()[j] / denom);
        }
    }
    let total = acc / (4.0 * std::f64::consts::PI);
    Ok(LongitudinalCurrent {
        value: total.re,
        imag_residual: total.im.abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn infinite(mu: f64, beta: f64) -> CylinderConfig {
        CylinderConfig::infinite(mu, beta).unwrap()
    }

    fn half(twice: i64) -> HalfInteger {
        HalfInteger::new(twice).unwrap()
    }

    fn gaussian_plus(k0: f64, s: f64, nodes: usize) -> PacketSpec {
        PacketSpec::gaussian(k0, s, C64::new(1.0, 0.0), C64::new(0.0, 0.0), nodes).unwrap()
    }

    #[test]
    fn gaussian_norm_matches_analytic_integral() {
        // |a|^2 = exp(-(k-k0)^2/s^2) integrates to s sqrt(pi)
        let s = 0.3;
        let p = gaussian_plus(1.0, s, 1025);
        let analytic = s * std::f64::consts::PI.sqrt();
        assert!((p.norm() - analytic).abs() < 1e-12 * analytic);
        let n = p.normalize().unwrap();
        assert!((n.norm() - 1.0).abs() < 1e-14);
        assert!(n.is_normalized());
    }

    #[test]
    fn normalize_is_idempotent_and_scale_invariant() {
        let p = gaussian_plus(2.0, 0.1, 257).normalize().unwrap();
        let again = p.clone().normalize().unwrap();
        for (a, b) in p.a_plus().iter().zip(again.a_plus().iter()) {
            assert!((a - b).norm() < 1e-12);
        }
        // doubling the amplitudes and renormalizing returns the original
        let doubled = PacketSpec::new(
            p.k_grid().to_vec(),
            p.a_plus().iter().map(|a| 2.0 * a).collect(),
            p.a_minus().iter().map(|a| 2.0 * a).collect(),
        )
        .unwrap()
        .normalize()
        .unwrap();
        for (a, b) in p.a_plus().iter().zip(doubled.a_plus().iter()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn invalid_packets_are_rejected() {
        let zero = PacketSpec::new(
            vec![0.0, 0.5, 1.0],
            vec![C64::new(0.0, 0.0); 3],
            vec![C64::new(0.0, 0.0); 3],
        )
        .unwrap();
        assert!(zero.normalize().is_err());
        // even node count
        assert!(PacketSpec::new(
            vec![0.0, 0.5, 1.0, 1.5],
            vec![C64::new(1.0, 0.0); 4],
            vec![C64::new(0.0, 0.0); 4],
        )
        .is_err());
        // non-uniform grid
        assert!(PacketSpec::new(
            vec![0.0, 0.5, 1.7],
            vec![C64::new(1.0, 0.0); 3],
            vec![C64::new(0.0, 0.0); 3],
        )
        .is_err());
        // decreasing grid
        assert!(PacketSpec::new(
            vec![1.0, 0.5, 0.0],
            vec![C64::new(1.0, 0.0); 3],
            vec![C64::new(0.0, 0.0); 3],
        )
        .is_err());
    }

    #[test]
    fn csv_round_trip() {
        let p = PacketSpec::gaussian(1.5, 0.2, C64::new(0.8, 0.1), C64::new(0.0, 0.6), 65).unwrap();
        let mut text = String::from("k,re_a_plus,im_a_plus,re_a_minus,im_a_minus\n");
        for (i, &k) in p.k_grid().iter().enumerate() {
            text.push_str(&format!(
                "{:.17e},{:.17e},{:.17e},{:.17e},{:.17e}\n",
                k,
                p.a_plus()[i].re,
                p.a_plus()[i].im,
                p.a_minus()[i].re,
                p.a_minus()[i].im
            ));
        }
        let q = PacketSpec::from_csv(&text).unwrap();
        assert_eq!(p.k_grid().len(), q.k_grid().len());
        for (a, b) in p.a_plus().iter().zip(q.a_plus().iter()) {
            assert!((a - b).norm() < 1e-15);
        }
        assert!(PacketSpec::from_csv("k,re\n1,2\n").is_err());
    }

    #[test]
    fn energy_of_narrow_gaussian() {
        // frozen from a refined-quadrature oracle run (1025 -> 16385 nodes
        // agree to 1e-14): mu=1, lambda=1/2, beta=0, k0=2, s=0.1
        let config = infinite(1.0, 0.0);
        let p = gaussian_plus(2.0, 0.1, 1025).normalize().unwrap();
        let e = packet_energy(&config, half(1), &p).unwrap();
        assert!((e - 2.291_548_153_129_323).abs() < 1e-12, "E = {e:.15}");
        // delta-concentration limit: E -> E(k0)
        let narrow = gaussian_plus(2.0, 1e-3, 1025).normalize().unwrap();
        let e = packet_energy(&config, half(1), &narrow).unwrap();
        assert!((e - 5.25f64.sqrt()).abs() < 1e-6);
        // never below the dispersion minimum
        let wide = gaussian_plus(0.0, 2.0, 1025).normalize().unwrap();
        assert!(packet_energy(&config, half(1), &wide).unwrap() > 1.0f64.hypot(0.5));
    }

    #[test]
    fn unnormalized_packets_are_a_usage_error() {
        let config = infinite(1.0, 0.0);
        let p = gaussian_plus(2.0, 0.1, 257); // not normalized
        assert!(packet_energy(&config, half(1), &p).is_err());
        assert!(circular_current(&config, half(1), &p).is_err());
        assert!(polarization_degree(half(1), &p).is_err());
        // finite cylinders are rejected
        let finite = CylinderConfig::finite(1.0, 0.0, 2.0).unwrap();
        let n = gaussian_plus(2.0, 0.1, 257).normalize().unwrap();
        assert!(packet_energy(&finite, half(1), &n).is_err());
    }

    #[test]
    fn circular_current_limits() {
        let config = infinite(1.0, 0.0);
        // vanishing prefactor lambda + beta = 0
        let cfg0 = infinite(1.0, -0.5);
        let p = gaussian_plus(1.0, 0.3, 513).normalize().unwrap();
        assert_eq!(circular_current(&cfg0, half(1), &p).unwrap(), 0.0);
        // delta-concentration: chi-type value at k0
        let narrow = gaussian_plus(2.0, 0.01, 513).normalize().unwrap();
        let v = circular_current(&config, half(1), &narrow).unwrap();
        let expect = 0.5 / (1.0f64 + 4.0 + 0.25).sqrt();
        assert!((v - expect).abs() < 1e-5, "{v} vs {expect}");
        // saturation at lambda ~ 1e4
        let sat = gaussian_plus(0.0, 1.0, 1025).normalize().unwrap();
        let v = circular_current(&config, half(20001), &sat).unwrap();
        assert!(v > 1.0 - 1e-6 && v < 1.0, "v = {v:.12}");
    }

    #[test]
    fn polarization_degrees() {
        let p = gaussian_plus(1.0, 0.2, 513).normalize().unwrap();
        assert!((polarization_degree(half(3), &p).unwrap() - 1.5).abs() < 1e-12);
        // 70/30 split at lambda = 3/2 gives 0.6
        let mix = PacketSpec::gaussian(
            1.0,
            0.2,
            C64::new(0.7f64.sqrt(), 0.0),
            C64::new(0.0, 0.3f64.sqrt()),
            513,
        )
        .unwrap()
        .normalize()
        .unwrap();
        let v = polarization_degree(half(3), &mix).unwrap();
        assert!((v - 0.6).abs() < 1e-12, "P = {v}");
        // equal weights are unpolarized
        let eq = PacketSpec::gaussian(
            1.0,
            0.2,
            C64::new(0.5f64.sqrt(), 0.0),
            C64::new(0.5f64.sqrt(), 0.0),
            513,
        )
        .unwrap()
        .normalize()
        .unwrap();
        assert!(polarization_degree(half(3), &eq).unwrap().abs() < 1e-14);
    }

    #[test]
    fn longitudinal_current_symmetric_packet_vanishes_at_t0() {
        let config = infinite(1.0, 0.0);
        let sym = gaussian_plus(0.0, 0.4, 513).normalize().unwrap();
        for z in [0.0, 0.9, -3.2] {
            let i3 = longitudinal_current(&config, half(1), &sym, 0.0, z).unwrap();
            assert!(i3.value.abs() < 1e-10, "I3 = {:.3e} at z = {z}", i3.value);
            assert!(i3.imag_residual < 1e-10);
        }
    }

    #[test]
    fn longitudinal_current_rides_at_group_velocity() {
        // mu=1, lambda=1/2, k0=2, s=0.2: the current at the moving center
        // matches its t=0 value to well under 5%, and doubling the grid
        // resolution leaves it unchanged at the 1e-10 level.
        let config = infinite(1.0, 0.0);
        let p = gaussian_plus(2.0, 0.2, 1025).normalize().unwrap();
        let vg = 2.0 / (5.25f64).sqrt();
        let i0 = longitudinal_current(&config, half(1), &p, 0.0, 0.0).unwrap();
        let t = 10.0;
        let ride = longitudinal_current(&config, half(1), &p, t, vg * t).unwrap();
        let rel = (ride.value - i0.value).abs() / i0.value.abs();
        assert!(rel < 0.05, "rel = {rel:.4e}");
        let p2 = gaussian_plus(2.0, 0.2, 2049).normalize().unwrap();
        let ride2 = longitudinal_current(&config, half(1), &p2, t, vg * t).unwrap();
        assert!(((ride2.value - ride.value) / ride.value).abs() < 1e-8);
    }

    #[test]
    fn single_mode_packet_current_is_time_constant() {
        // a delta-like packet has no dispersion to leading order: the
        // current at the packet center stays at (k0/E) x (localization)
        let config = infinite(1.0, 0.0);
        let p = gaussian_plus(2.0, 0.05, 1025).normalize().unwrap();
        let vg = 2.0 / (5.25f64).sqrt();
        let j0 = longitudinal_current(&config, half(1), &p, 0.0, 0.0).unwrap();
        assert!(j0.value > 0.0);
        for t in [2.0, 4.0] {
            let j = longitudinal_current(&config, half(1), &p, t, vg * t).unwrap();
            assert!(
                ((j.value - j0.value) / j0.value).abs() < 1e-4,
                "drift at t = {t}"
            );
        }
    }

    #[test]
    fn oscillation_guard_trips_on_coarse_grids() {
        let config = infinite(1.0, 0.0);
        let p = gaussian_plus(2.0, 0.2, 257).normalize().unwrap();
        let err = longitudinal_current(&config, half(1), &p, 1e6, 0.0);
        match err {
            Err(crate::error::Error::Accuracy(_)) => {}
            other => panic!("expected accuracy error, got {other:?}"),
        }
    }

    #[test]
    fn circular_current_has_no_polarization_cross_term() {
        // rotating the relative phase of a_- leaves I^c unchanged
        let config = infinite(2.0, 0.1);
        let a = PacketSpec::gaussian(1.0, 0.3, C64::new(0.6, 0.0), C64::new(0.8, 0.0), 513)
            .unwrap()
            .normalize()
            .unwrap();
        let rotated = PacketSpec::new(
            a.k_grid().to_vec(),
            a.a_plus().to_vec(),
            a.a_minus().iter().map(|c| c * C64::new(0.0, 1.0)).collect(),
        )
        .unwrap();
        let va = circular_current(&config, half(1), &a).unwrap();
        let vb = circular_current(&config, half(1), &rotated).unwrap();
        assert_eq!(va, vb);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn normalization_always_lands_on_one(
            k0 in -3.0f64..3.0,
            s in 0.05f64..1.5,
            w in 0.0f64..1.0,
            phase in 0.0f64..std::f64::consts::TAU,
        ) {
            let p = PacketSpec::gaussian(
                k0,
                s,
                C64::new(w.sqrt(), 0.0),
                C64::from_polar((1.0 - w).sqrt(), phase),
                257,
            )
            .unwrap()
            .normalize()
            .unwrap();
            prop_assert!((p.norm() - 1.0).abs() < 1e-12);
            // currents of normalized packets stay inside the saturation band
            let config = CylinderConfig::infinite(0.5, 0.0).unwrap();
            let v = circular_current(&config, HalfInteger::new(5).unwrap(), &p).unwrap();
            prop_assert!(v.abs() < 1.0);
        }
    }
}
