//! Scalar theory of Aharonov-Bohm cylinders: dispersion relations for
//! infinite and finite cylinders, circular currents, Fermi-sea enumeration,
//! persistent currents and the short-cylinder / non-relativistic limits,
//! plus the sum-to-integral machinery used by the closed-form estimates.
//!
//! For a finite cylinder of length L the aspect ratio is `nu = pi R / L`
//! (named `aspect` here to avoid clashing with the ring's `nu = beta +
//! lambda`); the longitudinal levels sit at `k_n R = aspect * n`.

use crate::error::{Error, Result};
use crate::halfint::HalfInteger;
use crate::numeric::KahanSum;
use crate::params::CylinderConfig;

/// Scaled energy on the infinite cylinder:
/// E*R = sqrt(mu^2 + (kR)^2 + (beta + lambda)^2). At k = 0 this is the ring
/// energy; for beta > 0 the spectrum bottom sits at lambda = -1/2.
pub fn energy_infinite(mu: f64, k_scaled: f64, beta: f64, lambda: HalfInteger) -> f64 {
    mu.hypot(k_scaled).hypot(beta + lambda.value())
}

/// Scaled energy of the finite-cylinder mode (n, lambda):
/// E*R = sqrt(mu^2 + aspect^2 n^2 + (beta + lambda)^2), n = 1, 2, ...
pub fn energy_finite(config: &CylinderConfig, n: u32, lambda: HalfInteger) -> Result<f64> {
    let aspect = config.require_aspect()?;
    if n < 1 {
        return Err(Error::domain("longitudinal quantum number n starts at 1"));
    }
    Ok(energy_infinite(
        config.mu(),
        aspect * n as f64,
        config.beta(),
        lambda,
    ))
}

/// Circular current I^c * 2piR of the finite-cylinder state (n, lambda):
/// chi_{mu,nu}(n, lambda) = (beta + lambda) / E*R. Equals the
/// beta-derivative of the scaled energy and is independent of polarization.
pub fn chi_finite(config: &CylinderConfig, n: u32, lambda: HalfInteger) -> Result<f64> {
    let e = energy_finite(config, n, lambda)?;
    Ok((config.beta() + lambda.value()) / e)
}

/// Pairing density on the cylinder,
/// j_{mu,nu}(n, lambda) = (mu^2 + nu^2 n^2) / (mu^2 + nu^2 n^2 + lambda^2)^(3/2).
///
/// With aspect*n = 0 this reduces formally to the ring density j(mu, lambda).
pub fn j_finite(mu: f64, aspect: f64, n: u32, lambda: f64) -> Result<f64> {
    let kn = aspect * n as f64;
    let transverse = mu.hypot(kn);
    if transverse == 0.0 && lambda == 0.0 {
        return Err(Error::domain("j is undefined when all arguments vanish"));
    }
    let h = transverse.hypot(lambda);
    Ok(transverse * transverse / (h * h * h))
}

/// The set of occupied states at T=0: for each longitudinal level n up to
/// n_F, the largest occupied angular label lambda_n.
#[derive(Debug, Clone, PartialEq)]
pub struct OccupationSet {
    aspect: f64,
    alpha: f64,
    /// lambda_n for n = 1..=n_F; non-increasing in n.
    lambda_n: Vec<HalfInteger>,
}

impl OccupationSet {
    pub fn aspect(&self) -> f64 {
        self.aspect
    }

    /// Fermi radius in (aspect*n, lambda) space.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Largest occupied longitudinal quantum number (0 for an empty set).
    pub fn n_f(&self) -> u32 {
        self.lambda_n.len() as u32
    }

    pub fn lambda_n(&self) -> &[HalfInteger] {
        &self.lambda_n
    }

    /// lambda_F = lambda_{n=1}, the largest occupied angular label.
    pub fn lambda_f(&self) -> Option<HalfInteger> {
        self.lambda_n.first().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda_n.is_empty()
    }

    /// Total electron count N_e = sum_n (2 lambda_n + 1), computed exactly
    /// in integer arithmetic.
    pub fn n_electrons(&self) -> u64 {
        self.lambda_n.iter().map(|l| (l.twice() + 1) as u64).sum()
    }

    /// Exact sum of the lambda_n (doubled value halved at the end).
    pub fn lambda_sum(&self) -> f64 {
        let twice: i64 = self.lambda_n.iter().map(|l| l.twice()).sum();
        0.5 * twice as f64
    }

    /// The shell identity N_e = n_F + 2 sum_n lambda_n, checked in integer
    /// arithmetic.
    pub fn shell_identity_holds(&self) -> bool {
        let twice_sum: i64 = self.lambda_n.iter().map(|l| l.twice()).sum();
        self.n_electrons() as i64 == self.lambda_n.len() as i64 + twice_sum
    }
}

/// Enumerates every occupied state of a finite cylinder: the condition
/// aspect^2 n^2 + lambda^2 <= alpha^2 with ties at exact equality included.
///
/// Returns an empty set when even (n=1, lambda=1/2) fails the bound.
pub fn enumerate_occupied(config: &CylinderConfig, alpha: f64) -> Result<OccupationSet> {
    let aspect = config.require_aspect()?;
    if !(alpha >= 0.0) {
        return Err(Error::domain(format!("alpha must be >= 0, got {alpha}")));
    }
    let alpha2 = alpha * alpha;
    let mut lambda_n = Vec::new();
    let mut n = 1u32;
    loop {
        let kn = aspect * n as f64;
        let room = alpha2 - kn * kn;
        match HalfInteger::largest_with_square_below(room) {
            Some(l) => lambda_n.push(l),
            None => break,
        }
        n += 1;
    }
    Ok(OccupationSet {
        aspect,
        alpha,
        lambda_n,
    })
}

/// Result of the exact persistent-current double sum on a finite cylinder.
#[derive(Debug, Clone, PartialEq)]
pub struct CylinderPersistent {
    /// c(mu, nu) = sum over occupied (n, lambda > 0) of j_{mu,nu}(n, lambda);
    /// the current is I = c * beta/(pi R) up to O(beta^3).
    pub c: f64,
    /// Unlinearized sum of chi over all occupied states (both lambda signs).
    pub full_sum: f64,
    pub occupation: OccupationSet,
}

/// Exact persistent current of a filled finite cylinder, summed shell by
/// shell (ascending n, then ascending lambda) with compensated accumulation.
pub fn persistent_finite_exact(config: &CylinderConfig, alpha: f64) -> Result<CylinderPersistent> {
    let occupation = enumerate_occupied(config, alpha)?;
    let aspect = occupation.aspect();
    let mu = config.mu();
    let beta = config.beta();
    let mut c = KahanSum::new();
    let mut full = KahanSum::new();
    for (i, lam_max) in occupation.lambda_n().iter().enumerate() {
        let n = (i + 1) as u32;
        let kn = aspect * n as f64;
        let transverse = mu.hypot(kn);
        let mut shell_c = KahanSum::new();
        let mut shell_full = KahanSum::new();
        for lambda in HalfInteger::positive_up_to(*lam_max) {
            let l = lambda.value();
            shell_c.add(j_finite(mu, aspect, n, l)?);
            let e_plus = transverse.hypot(l + beta);
            let e_minus = transverse.hypot(-l + beta);
            shell_full.add((l + beta) / e_plus + (-l + beta) / e_minus);
        }
        c.add(shell_c.value());
        full.add(shell_full.value());
    }
    Ok(CylinderPersistent {
        c: c.value(),
        full_sum: full.value(),
        occupation,
    })
}

/// Closed-form estimate c ~= (sum_n lambda_n) / sqrt(mu^2 + alpha^2),
/// quoted as a very good approximation for mu > 200.
pub fn persistent_finite_approx(mu: f64, occupation: &OccupationSet) -> Result<f64> {
    if occupation.is_empty() {
        return Err(Error::domain(
            "persistent-current approximation needs a non-empty occupation",
        ));
    }
    Ok(occupation.lambda_sum() / mu.hypot(occupation.alpha()))
}

/// The three routes to sum_{n=1}^{n_F} lambda_n with
/// lambda_n = sqrt(nu^2 (n_F^2 - n^2) + 1/4).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellSum {
    /// Direct term-by-term summation (compensated).
    pub direct: f64,
    /// The integral from 0 to n_F of sqrt(nu^2 (n_F^2 - x^2) + 1/4) dx,
    /// evaluated from its antiderivative:
    /// n_F/4 + (nu^2 n_F^2 + 1/4) asin(nu n_F / sqrt(nu^2 n_F^2 + 1/4)) / (2 nu).
    pub integral: f64,
    /// The quoted closed form n_F (1 + pi n_F / nu) / 4. It is dimensionally
    /// inconsistent with the integrand (nu appears inverted) and disagrees
    /// with both routes above by orders of magnitude at small nu; it is
    /// returned so the discrepancy stays measurable, never asserted against.
    pub printed_closed_form: f64,
}

/// Evaluates the shell sum three ways; see [`ShellSum`].
pub fn lambda_shell_sum(nu: f64, n_f: u32) -> Result<ShellSum> {
    if n_f < 1 {
        return Err(Error::domain("shell sum needs n_F >= 1"));
    }
    if !(nu > 0.0) {
        return Err(Error::domain("shell sum needs aspect nu > 0"));
    }
    let nf = n_f as f64;
    let mut direct = KahanSum::new();
    for n in 1..=n_f {
        let x = n as f64;
        direct.add((nu * nu * (nf * nf - x * x) + 0.25).sqrt());
    }
    let a2 = nu * nu * nf * nf + 0.25;
    let integral = 0.25 * nf + a2 * (nu * nf / a2.sqrt()).asin() / (2.0 * nu);
    let printed = 0.25 * nf * (1.0 + std::f64::consts::PI * nf / nu);
    Ok(ShellSum {
        direct: direct.value(),
        integral,
        printed_closed_form: printed,
    })
}

/// Short-cylinder persistent current ratio and regime flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShortCylinder {
    /// I / I_max = sqrt((alpha^2 - nu^2) / (alpha^2 + mu^2)).
    pub ratio: f64,
    /// True when nu < alpha < 2 nu, i.e. only the n = 1 shell is occupied
    /// and the formula applies.
    pub single_shell: bool,
    /// True when nu >> 1 (taken as nu >= 10), the other half of the
    /// short-cylinder regime.
    pub nu_large: bool,
}

/// Persistent current of a very short cylinder,
/// I/I_max = sqrt((alpha^2 - nu^2) / (alpha^2 + mu^2)).
///
/// With nu = 0 and alpha = lambda_F this reduces to the ring approximation.
/// Outside the regime nu < alpha < 2 nu the value is still returned but
/// flagged.
pub fn persistent_short_cylinder(mu: f64, aspect: f64, alpha: f64) -> Result<ShortCylinder> {
    if !(aspect >= 0.0) || !(alpha >= 0.0) || !(mu >= 0.0) {
        return Err(Error::domain("mu, aspect and alpha must all be >= 0"));
    }
    if alpha <= aspect {
        return Err(Error::domain(format!(
            "no occupied state: alpha = {alpha} <= aspect = {aspect}"
        )));
    }
    let ratio = ((alpha * alpha - aspect * aspect) / (alpha * alpha + mu * mu)).sqrt();
    Ok(ShortCylinder {
        ratio,
        single_shell: alpha < 2.0 * aspect,
        nu_large: aspect >= 10.0,
    })
}

/// Non-relativistic limit of the short-cylinder current,
/// I/I_max = N_e / (2 mu); valid for alpha << mu.
pub fn nonrel_short_limit(mu: f64, n_electrons: u64) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(Error::domain("the non-relativistic limit requires mu > 0"));
    }
    Ok(n_electrons as f64 / (2.0 * mu))
}

/// One row of a finite-cylinder spectrum table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderSpectrumRow {
    pub n: u32,
    pub lambda: HalfInteger,
    /// E*R, always >= sqrt(mu^2 + aspect^2 n^2).
    pub energy_scaled: f64,
    /// I^c*2piR; independent of the polarization sigma.
    pub current_scaled: f64,
}

/// Spectrum rows over n = 1..=n_max and lambda = -lambda_max..=lambda_max.
pub fn cylinder_spectrum(
    config: &CylinderConfig,
    n_max: u32,
    lambda_max: HalfInteger,
) -> Result<Vec<CylinderSpectrumRow>> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut lambdas: Vec<HalfInteger> = HalfInteger::positive_up_to(lambda_max)
            .flat_map(|l| [l.neg(), l])
            .collect();
        lambdas.sort();
        for lambda in lambdas {
            rows.push(CylinderSpectrumRow {
                n,
                lambda,
                energy_scaled: energy_finite(config, n, lambda)?,
                current_scaled: chi_finite(config, n, lambda)?,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::CylinderConfig;
    use crate::ring;

    fn cfg(mu: f64, beta: f64, aspect: f64) -> CylinderConfig {
        CylinderConfig::finite(mu, beta, aspect).unwrap()
    }

    #[test]
    fn infinite_energy_reduces_to_ring_at_k0() {
        let l = HalfInteger::new(3).unwrap();
        let e = energy_infinite(2.5, 0.0, 0.1, l);
        assert_eq!(e, ring::ring_energy(2.5, 0.1, l));
    }

    #[test]
    fn infinite_energy_massless_example() {
        // mu = 0, kR = 3, lambda = +-1/2 -> sqrt(9.25)
        for l in [HalfInteger::ONE_HALF, HalfInteger::MINUS_ONE_HALF] {
            let e = energy_infinite(0.0, 3.0, 0.0, l);
            assert!((e - 9.25f64.sqrt()).abs() < 1e-15);
        }
    }

    #[test]
    fn ground_level_minimizes_angular_term() {
        // For beta > 0 the lowest level has lambda = -1/2.
        let beta = 0.3;
        let e_minus = energy_infinite(1.0, 0.0, beta, HalfInteger::MINUS_ONE_HALF);
        let e_plus = energy_infinite(1.0, 0.0, beta, HalfInteger::ONE_HALF);
        assert!(e_minus < e_plus);
    }

    #[test]
    fn finite_energy_matches_infinite_at_kn() {
        let config = cfg(7.0, 0.05, 1.75);
        let l = HalfInteger::new(5).unwrap();
        for n in 1..=4 {
            let ef = energy_finite(&config, n, l).unwrap();
            let ei = energy_infinite(7.0, 1.75 * n as f64, 0.05, l);
            assert_eq!(ef, ei);
        }
    }

    #[test]
    fn finite_energy_monotone_in_n_and_angular() {
        let config = cfg(3.0, 0.0, 0.8);
        let l = HalfInteger::ONE_HALF;
        let mut prev = 0.0;
        for n in 1..=6 {
            let e = energy_finite(&config, n, l).unwrap();
            assert!(e > prev);
            prev = e;
        }
        let e1 = energy_finite(&config, 1, HalfInteger::new(1).unwrap()).unwrap();
        let e3 = energy_finite(&config, 1, HalfInteger::new(3).unwrap()).unwrap();
        assert!(e3 > e1);
        assert!(energy_finite(&config, 0, l).is_err());
    }

    #[test]
    fn aspect_to_zero_approaches_ring() {
        let l = HalfInteger::new(3).unwrap();
        let ring_e = ring::ring_energy(4.0, 0.0, l);
        let e = energy_finite(&cfg(4.0, 0.0, 1e-8), 1, l).unwrap();
        assert!((e - ring_e).abs() < 1e-14);
    }

    #[test]
    fn chi_finite_flips_sign_with_lambda_at_zero_flux() {
        let config = cfg(5.0, 0.0, 1.2);
        let l = HalfInteger::new(7).unwrap();
        let plus = chi_finite(&config, 2, l).unwrap();
        let minus = chi_finite(&config, 2, l.neg()).unwrap();
        assert_eq!(plus, -minus);
        assert!(plus.abs() < 1.0);
    }

    #[test]
    fn empty_occupation_below_first_state() {
        let config = cfg(10.0, 0.0, 2.0);
        let alpha_min = (2.0f64 * 2.0 + 0.25).sqrt();
        let occ = enumerate_occupied(&config, alpha_min - 1e-9).unwrap();
        assert!(occ.is_empty());
        assert_eq!(occ.n_electrons(), 0);
        // Tie included at exact equality.
        let occ = enumerate_occupied(&config, alpha_min).unwrap();
        assert_eq!(occ.n_f(), 1);
        assert_eq!(occ.lambda_f().unwrap().twice(), 1);
    }

    #[test]
    fn shell_identity_is_exact() {
        let config = cfg(1.0, 0.0, 0.7);
        for alpha in [1.0, 3.3, 10.1, 25.7] {
            let occ = enumerate_occupied(&config, alpha).unwrap();
            assert!(occ.shell_identity_holds());
            // per-shell counts 2 lambda_n + 1 are even, so N_e is even
            assert_eq!(occ.n_electrons() % 2, 0);
        }
    }

    #[test]
    fn shell_sum_single_shell_is_half() {
        let s = lambda_shell_sum(0.37, 1).unwrap();
        assert_eq!(s.direct, 0.5);
        assert!(lambda_shell_sum(0.37, 0).is_err());
        assert!(lambda_shell_sum(0.0, 5).is_err());
    }

    #[test]
    fn short_cylinder_boundary_and_regime_flags() {
        // alpha -> nu from above drives the ratio to 0.
        let s = persistent_short_cylinder(100.0, 10.0, 10.0 + 1e-9).unwrap();
        assert!(s.ratio < 1e-4);
        assert!(persistent_short_cylinder(100.0, 10.0, 10.0).is_err());
        let s = persistent_short_cylinder(100.0, 10.0, 15.0).unwrap();
        assert!(s.single_shell && s.nu_large);
        let s = persistent_short_cylinder(100.0, 10.0, 25.0).unwrap();
        assert!(!s.single_shell);
        let s = persistent_short_cylinder(100.0, 2.0, 3.0).unwrap();
        assert!(!s.nu_large);
    }

    #[test]
    fn nonrel_limit_values() {
        assert_eq!(nonrel_short_limit(3495.0, 0).unwrap(), 0.0);
        let v = nonrel_short_limit(3495.0, 100).unwrap();
        assert!((v - 0.014_306_151_645_207_44).abs() < 1e-15);
        assert!(nonrel_short_limit(0.0, 10).is_err());
    }

    #[test]
    fn short_cylinder_reduces_to_ring_form() {
        // nu = 0, alpha = lambda_F: ratio = lambda_F/sqrt(mu^2+lambda_F^2)
        let mu = 800.0;
        let lf = 399.5;
        let s = persistent_short_cylinder(mu, 0.0, lf).unwrap();
        assert!((s.ratio - lf / mu.hypot(lf)).abs() < 1e-15);
    }

    #[test]
    fn j_finite_reduces_to_ring_density() {
        let j0 = j_finite(0.7, 0.0, 3, 0.5).unwrap();
        assert_eq!(j0, ring::j_ring(0.7, 0.5).unwrap());
        let jmax = j_finite(std::f64::consts::FRAC_1_SQRT_2, 0.0, 1, 0.5).unwrap();
        assert!((jmax - 0.7698).abs() < 1e-4);
        assert!(j_finite(0.0, 0.0, 1, 0.0).is_err());
    }

    #[test]
    fn frozen_point_values() {
        let config = cfg(10.0, 0.0, 2.0);
        let l = HalfInteger::ONE_HALF;
        let e = energy_finite(&config, 1, l).unwrap();
        assert!((e - 10.210_288_928_331_069_2).abs() < 1e-14);
        let x = chi_finite(&config, 1, l).unwrap();
        assert!((x - 0.048_970_210_687_439_175_2).abs() < 1e-15);
        let j = j_finite(10.0, 2.0, 1, 0.5).unwrap();
        assert!((j - 0.097_705_552_258_871_453_1).abs() < 1e-15);
    }

    #[test]
    fn chi_finite_is_beta_derivative() {
        use crate::numeric::central_diff;
        let l = HalfInteger::new(3).unwrap();
        let base = cfg(10.0, 1e-5, 2.0);
        let fd = central_diff(
            |b| energy_finite(&cfg(10.0, b, 2.0), 1, l).unwrap(),
            1e-5,
            1e-6,
        );
        let cur = chi_finite(&base, 1, l).unwrap();
        assert!(((fd - cur) / cur).abs() < 1e-8);
    }

    #[test]
    fn enumeration_example_and_brute_force() {
        // aspect = 2, alpha = 5 fills two shells
        let config = cfg(1.0, 0.0, 2.0);
        let occ = enumerate_occupied(&config, 5.0).unwrap();
        assert_eq!(occ.n_f(), 2);
        assert_eq!(occ.lambda_n()[0].twice(), 9); // 9/2
        assert_eq!(occ.lambda_n()[1].twice(), 5); // 5/2
        assert_eq!(occ.n_electrons(), 16);
        assert_eq!(occ.lambda_f().unwrap().twice(), 9);

        // independent brute-force scan over a bounding box
        let mut count = 0u64;
        for n in 1..=10u32 {
            let mut t = -21i64;
            while t <= 21 {
                let lam = 0.5 * t as f64;
                if (2.0 * n as f64).powi(2) + lam * lam <= 25.0 {
                    count += 1;
                }
                t += 2;
            }
        }
        assert_eq!(count, occ.n_electrons());
    }

    #[test]
    fn every_occupied_state_respects_the_energy_bound() {
        // Cond0 and Cond are algebraically equivalent: E_{n,lambda} at beta=0
        // never exceeds sqrt(mu^2 + alpha^2) on the occupied set.
        for mu in [0.0, 1.0, 57.0] {
            let config = cfg(mu, 0.0, 1.3);
            let alpha = 8.6;
            let occ = enumerate_occupied(&config, alpha).unwrap();
            let cap = mu.hypot(alpha);
            for (i, lam_max) in occ.lambda_n().iter().enumerate() {
                for lam in HalfInteger::positive_up_to(*lam_max) {
                    let e = energy_finite(&config, (i + 1) as u32, lam).unwrap();
                    assert!(e <= cap + 1e-12);
                }
            }
        }
    }

    #[test]
    fn persistent_exact_matches_brute_force() {
        // mu = 200, aspect = 2, alpha = 20; frozen from the brute-force oracle
        let config = CylinderConfig::finite(200.0, 1e-6, 2.0).unwrap();
        let p = persistent_finite_exact(&config, 20.0).unwrap();
        assert!(
            (p.c - 0.721_412_011_630_102_712).abs() < 1e-12,
            "c = {:.15e}",
            p.c
        );
        let shells: Vec<i64> = p.occupation.lambda_n().iter().map(|l| l.twice()).collect();
        assert_eq!(shells, vec![39, 39, 37, 35, 33, 31, 27, 23, 17]);
        // linearization: full_sum = 2 beta c + O(beta^3)
        assert!((p.full_sum - 2.0 * 1e-6 * p.c).abs() < 1e-15);
        // empty sea
        let p0 = persistent_finite_exact(&config, 0.5).unwrap();
        assert_eq!(p0.c, 0.0);
        assert_eq!(p0.full_sum, 0.0);
    }

    #[test]
    fn persistent_approx_gap_shrinks_with_mu() {
        // The closed form undershoots by the half-cell offsets of each
        // shell sum; at (mu=200, aspect=2, alpha=20) the gap is ~3.1% and
        // it must shrink monotonically as mu grows at fixed alpha/mu.
        let config = CylinderConfig::finite(200.0, 0.0, 2.0).unwrap();
        let p = persistent_finite_exact(&config, 20.0).unwrap();
        let approx = persistent_finite_approx(200.0, &p.occupation).unwrap();
        assert!((approx - 0.699_013_626_122_517_384).abs() < 1e-12);
        let gap = (p.c - approx).abs() / p.c;
        assert!((gap - 3.104_798e-2).abs() < 1e-6, "gap = {gap:.6e}");

        let mut prev = f64::MAX;
        for mu in [200.0, 400.0, 800.0] {
            let config = CylinderConfig::finite(mu, 0.0, 2.0).unwrap();
            let p = persistent_finite_exact(&config, mu / 10.0).unwrap();
            let approx = persistent_finite_approx(mu, &p.occupation).unwrap();
            let gap = (p.c - approx).abs() / p.c;
            assert!(gap < prev);
            prev = gap;
        }

        let empty = enumerate_occupied(&config, 0.1).unwrap();
        assert!(persistent_finite_approx(200.0, &empty).is_err());
    }

    #[test]
    fn single_shell_outer_sum_collapses() {
        // aspect large enough that only n = 1 fits: c equals the plain
        // lambda sum over the first shell.
        let config = cfg(30.0, 0.0, 6.0);
        let alpha = 9.0;
        let p = persistent_finite_exact(&config, alpha).unwrap();
        assert_eq!(p.occupation.n_f(), 1);
        let lam_max = p.occupation.lambda_f().unwrap();
        let mut acc = 0.0;
        for lam in HalfInteger::positive_up_to(lam_max) {
            acc += j_finite(30.0, 6.0, 1, lam.value()).unwrap();
        }
        assert!((p.c - acc).abs() < 1e-15);
    }

    #[test]
    fn shell_sum_three_routes_at_nu_tenth() {
        // nu = 0.1, n_F = 200: direct and integral agree to ~0.3%; the
        // printed closed form is two orders of magnitude away.
        let s = lambda_shell_sum(0.1, 200).unwrap();
        assert!((s.direct - 3.133_543_521_668_989_34e3).abs() < 1e-9);
        assert!((s.integral - 3.143_535_318_268_426_18e3).abs() < 1e-9);
        assert!((s.printed_closed_form - 3.142_092_653_589_792_90e5).abs() < 1e-7);
        let rel = (s.direct - s.integral).abs() / s.integral;
        assert!(rel < 5e-3, "rel = {rel:.4e}");
        assert!(s.printed_closed_form / s.direct > 50.0);

        // cross-check the analytic antiderivative by quadrature after the
        // substitution x = n_F sin(theta)
        let by_quad = crate::quad::integrate_gl(256, 0.0, std::f64::consts::FRAC_PI_2, |th| {
            let (nf, nu) = (200.0f64, 0.1f64);
            nf * th.cos() * (nu * nu * nf * nf * th.cos() * th.cos() + 0.25).sqrt()
        });
        assert!((s.integral - by_quad).abs() < 1e-8 * s.integral);
    }

    #[test]
    fn short_cylinder_frozen_value() {
        let s = persistent_short_cylinder(100.0, 10.0, 15.0).unwrap();
        assert!((s.ratio - 0.110_566_445_521_711_618).abs() < 1e-15);
        assert!(s.single_shell && s.nu_large);
    }

    #[test]
    fn short_cylinder_matches_exact_sum_within_5_percent() {
        // (mu=500, nu=40, alpha=60): one shell, lambda_F = 44.5
        let config = CylinderConfig::finite(500.0, 1e-6, 40.0).unwrap();
        let p = persistent_finite_exact(&config, 60.0).unwrap();
        assert_eq!(p.occupation.n_f(), 1);
        let s = persistent_short_cylinder(500.0, 40.0, 60.0).unwrap();
        assert!(s.single_shell);
        let rel = (s.ratio - p.c).abs() / p.c;
        assert!(rel < 0.05, "rel = {rel:.4e}");
    }

    #[test]
    fn nonrel_ratio_approaches_short_formula() {
        // alpha/mu -> 0 with nu << alpha: the two estimates merge.
        let mu = 1e5;
        let (aspect, alpha) = (0.05, 30.0);
        let occ = enumerate_occupied(&cfg(mu, 0.0, aspect), alpha).unwrap();
        let short = persistent_short_cylinder(mu, aspect, alpha).unwrap();
        let nr = nonrel_short_limit(mu, occ.n_electrons()).unwrap();
        // N_e/2 ~= area of the quarter disc; both scale as alpha-ish/mu, so
        // only the short formula with its exact alpha is compared here.
        assert!((short.ratio * mu / alpha - 1.0).abs() < 1e-3);
        assert!(nr > 0.0);
    }

    #[test]
    fn spectrum_row_count_and_consistency() {
        let config = cfg(10.0, 0.0, 2.0);
        let rows = cylinder_spectrum(&config, 2, HalfInteger::new(5).unwrap()).unwrap();
        assert_eq!(rows.len(), 12);
        for row in &rows {
            assert_eq!(
                row.energy_scaled,
                energy_finite(&config, row.n, row.lambda).unwrap()
            );
            assert!(row.energy_scaled >= 10.0f64.hypot(2.0 * row.n as f64));
            assert!(row.current_scaled.abs() < 1.0);
        }
    }
}
