//! Dimensionless system parameters and their construction from SI inputs.
//!
//! Everything downstream works with `mu = M R` (mass times radius),
//! `beta = e B R^2 / 2` (flux parameter), `aspect = pi R / L` (finite
//! cylinders) and `alpha = R sqrt(E_F (E_F + 2M))` (Fermi radius in quantum
//!-number space). SI units are confined to this module.

use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// CODATA 2018 values, hard-coded at full published precision so that
/// derived parameters (for example mu for an InSb ring) reproduce to the
/// last digit on every platform.
pub mod constants {
    /// Electron mass, kg.
    pub const ELECTRON_MASS_KG: f64 = 9.109_383_701_5e-31;
    /// Speed of light, m/s (exact).
    pub const SPEED_OF_LIGHT_M_S: f64 = 2.997_924_58e8;
    /// Reduced Planck constant, J s.
    pub const HBAR_J_S: f64 = 1.054_571_817e-34;
    /// Elementary charge, C (exact).
    pub const ELEMENTARY_CHARGE_C: f64 = 1.602_176_634e-19;
    /// One electron volt, J (exact).
    pub const ELECTRON_VOLT_J: f64 = 1.602_176_634e-19;
}

/// Flux parameters at or below this magnitude are flagged as perturbative:
/// linearization in beta then neglects only O(beta^2) relative corrections.
pub const PERTURBATIVE_BETA: f64 = 1e-8;

/// Dimensionless parameters of an ideal ring.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingConfig {
    mu: f64,
    beta: f64,
}

impl RingConfig {
    pub fn new(mu: f64, beta: f64) -> Result<Self> {
        if !mu.is_finite() || mu < 0.0 {
            return Err(Error::domain(format!(
                "mu must be finite and >= 0, got {mu}"
            )));
        }
        if !beta.is_finite() {
            return Err(Error::domain("beta must be finite"));
        }
        Ok(RingConfig { mu, beta })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// True when |beta| is small enough that O(beta^2) terms are negligible
    /// at double precision tolerances. Diagnostic only; no ceiling is imposed.
    pub fn is_perturbative(&self) -> bool {
        self.beta.abs() <= PERTURBATIVE_BETA
    }
}

/// Dimensionless parameters of a cylinder; `aspect = pi R / L` is present
/// for finite cylinders and absent for infinite ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderConfig {
    mu: f64,
    beta: f64,
    aspect: Option<f64>,
}

impl CylinderConfig {
    /// Finite cylinder with aspect ratio `aspect = pi R / L > 0`.
    pub fn finite(mu: f64, beta: f64, aspect: f64) -> Result<Self> {
        if !aspect.is_finite() || aspect <= 0.0 {
            return Err(Error::domain(format!(
                "aspect = pi R / L must be finite and > 0, got {aspect}"
            )));
        }
        let ring = RingConfig::new(mu, beta)?;
        Ok(CylinderConfig {
            mu: ring.mu,
            beta: ring.beta,
            aspect: Some(aspect),
        })
    }

    /// Infinite cylinder (free longitudinal motion).
    pub fn infinite(mu: f64, beta: f64) -> Result<Self> {
        let ring = RingConfig::new(mu, beta)?;
        Ok(CylinderConfig {
            mu: ring.mu,
            beta: ring.beta,
            aspect: None,
        })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn aspect(&self) -> Option<f64> {
        self.aspect
    }

    /// Aspect ratio of a finite cylinder, or a usage error for infinite ones.
    pub fn require_aspect(&self) -> Result<f64> {
        self.aspect
            .ok_or_else(|| Error::usage("operation requires a finite cylinder (aspect missing)"))
    }

    pub fn is_perturbative(&self) -> bool {
        self.beta.abs() <= PERTURBATIVE_BETA
    }
}

/// Raw physical inputs in SI units, as read from a config file.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PhysicalInput {
    /// Mass in multiples of the electron mass.
    pub mass_me: Option<f64>,
    /// Ring/cylinder radius in meters.
    pub radius_m: Option<f64>,
    /// Magnetic field in tesla.
    pub field_t: Option<f64>,
    /// Fermi energy in eV.
    pub fermi_ev: Option<f64>,
}

impl PhysicalInput {
    /// Parses either `key=value` lines or a flat JSON object. Recognized
    /// keys: `mass_me`, `radius_m`, `field_T`, `fermi_eV`.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        let map: BTreeMap<String, f64> = if trimmed.starts_with('{') {
            let value: serde_json::Value = serde_json::from_str(trimmed)
                .map_err(|e| Error::usage(format!("config is not valid JSON: {e}")))?;
            let obj = value
                .as_object()
                .ok_or_else(|| Error::usage("config JSON must be an object"))?;
            let mut map = BTreeMap::new();
            for (k, v) in obj {
                let num = v
                    .as_f64()
                    .ok_or_else(|| Error::usage(format!("config key {k} is not a number")))?;
                map.insert(k.clone(), num);
            }
            map
        } else {
            let mut map = BTreeMap::new();
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (key, value) = line.split_once('=').ok_or_else(|| {
                    Error::usage(format!("config line {} is not key=value", lineno + 1))
                })?;
                let num: f64 = value.trim().parse().map_err(|_| {
                    Error::usage(format!("config line {}: bad number {value:?}", lineno + 1))
                })?;
                map.insert(key.trim().to_string(), num);
            }
            map
        };

        let mut input = PhysicalInput::default();
        for (key, value) in map {
            match key.as_str() {
                "mass_me" => input.mass_me = Some(value),
                "radius_m" => input.radius_m = Some(value),
                "field_T" => input.field_t = Some(value),
                "fermi_eV" => input.fermi_ev = Some(value),
                other => {
                    return Err(Error::usage(format!("unknown config key {other:?}")));
                }
            }
        }
        input.validate()?;
        Ok(input)
    }

    fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("mass_me", self.mass_me),
            ("radius_m", self.radius_m),
            ("fermi_eV", self.fermi_ev),
        ] {
            if let Some(v) = v {
                if !v.is_finite() || v <= 0.0 {
                    return Err(Error::domain(format!("{name} must be > 0, got {v}")));
                }
            }
        }
        if let Some(b) = self.field_t {
            if !b.is_finite() {
                return Err(Error::domain("field_T must be finite"));
            }
        }
        Ok(())
    }

    /// Dimensionless mu from the stored mass and radius.
    pub fn mu(&self) -> Result<f64> {
        let mass_me = self
            .mass_me
            .ok_or_else(|| Error::usage("config is missing mass_me"))?;
        let radius = self
            .radius_m
            .ok_or_else(|| Error::usage("config is missing radius_m"))?;
        mu_from_mass_multiple(mass_me, radius)
    }

    /// Dimensionless beta from the stored field and radius (0 without field).
    pub fn beta(&self) -> Result<f64> {
        let radius = self
            .radius_m
            .ok_or_else(|| Error::usage("config is missing radius_m"))?;
        match self.field_t {
            Some(b) => beta_from_field(b, radius),
            None => Ok(0.0),
        }
    }

    /// Scaled Fermi energy eps = E_F R / (hbar c), if a Fermi energy is set.
    pub fn fermi_scaled(&self) -> Result<Option<f64>> {
        let radius = self
            .radius_m
            .ok_or_else(|| Error::usage("config is missing radius_m"))?;
        self.fermi_ev
            .map(|ev| fermi_scaled_from_ev(ev, radius))
            .transpose()
    }

    pub fn ring_config(&self) -> Result<RingConfig> {
        RingConfig::new(self.mu()?, self.beta()?)
    }

    pub fn cylinder_config(&self, aspect: Option<f64>) -> Result<CylinderConfig> {
        match aspect {
            Some(a) => CylinderConfig::finite(self.mu()?, self.beta()?, a),
            None => CylinderConfig::infinite(self.mu()?, self.beta()?),
        }
    }
}

/// mu = m c R / hbar for a mass given in kilograms.
pub fn mu_from_physical(mass_kg: f64, radius_m: f64) -> Result<f64> {
    if !(mass_kg > 0.0) || !(radius_m > 0.0) {
        return Err(Error::domain(format!(
            "mass and radius must be > 0, got mass = {mass_kg} kg, radius = {radius_m} m"
        )));
    }
    Ok(mass_kg * constants::SPEED_OF_LIGHT_M_S * radius_m / constants::HBAR_J_S)
}

/// mu for a mass given as a multiple of the electron mass.
pub fn mu_from_mass_multiple(mass_me: f64, radius_m: f64) -> Result<f64> {
    mu_from_physical(mass_me * constants::ELECTRON_MASS_KG, radius_m)
}

/// beta = e B R^2 / (2 hbar); the sign follows the field.
pub fn beta_from_field(field_t: f64, radius_m: f64) -> Result<f64> {
    if !(radius_m > 0.0) {
        return Err(Error::domain(format!(
            "radius must be > 0, got {radius_m} m"
        )));
    }
    if !field_t.is_finite() {
        return Err(Error::domain("field must be finite"));
    }
    Ok(
        constants::ELEMENTARY_CHARGE_C * field_t * radius_m * radius_m
            / (2.0 * constants::HBAR_J_S),
    )
}

/// Exact Fermi radius alpha = sqrt(eps (eps + 2 mu)) from the scaled Fermi
/// energy eps = E_F R (natural units).
pub fn alpha_from_fermi(mu: f64, eps: f64) -> Result<f64> {
    if !(eps >= 0.0) {
        return Err(Error::domain(format!(
            "scaled Fermi energy must be >= 0, got {eps}"
        )));
    }
    if !(mu >= 0.0) {
        return Err(Error::domain(format!("mu must be >= 0, got {mu}")));
    }
    Ok((eps * (eps + 2.0 * mu)).sqrt())
}

/// Non-relativistic approximation alpha ~= sqrt(2 mu eps), kept alongside
/// the exact form for comparison.
pub fn alpha_from_fermi_approx(mu: f64, eps: f64) -> Result<f64> {
    if !(eps >= 0.0) || !(mu >= 0.0) {
        return Err(Error::domain(
            "mu and scaled Fermi energy must both be >= 0",
        ));
    }
    Ok((2.0 * mu * eps).sqrt())
}

/// Scaled Fermi energy eps = E_F R / (hbar c) for E_F in eV.
pub fn fermi_scaled_from_ev(fermi_ev: f64, radius_m: f64) -> Result<f64> {
    if !(fermi_ev >= 0.0) || !(radius_m > 0.0) {
        return Err(Error::domain("fermi_eV must be >= 0 and radius_m > 0"));
    }
    Ok(fermi_ev * constants::ELECTRON_VOLT_J * radius_m
        / (constants::HBAR_J_S * constants::SPEED_OF_LIGHT_M_S))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insb_ring_reproduces_mu_3495() {
        // InSb effective mass 0.0135 m_e on a 100 nm ring.
        let mu = mu_from_mass_multiple(0.0135, 100e-9).unwrap();
        assert!((mu - 3495.0).abs() <= 1.0, "mu = {mu}");
    }

    #[test]
    fn mu_is_one_at_reduced_compton_radius() {
        let r = constants::HBAR_J_S / (constants::ELECTRON_MASS_KG * constants::SPEED_OF_LIGHT_M_S);
        let mu = mu_from_physical(constants::ELECTRON_MASS_KG, r).unwrap();
        assert!((mu - 1.0).abs() < 1e-14);
    }

    #[test]
    fn mu_for_bare_electron_on_100nm_ring() {
        // Direct evaluation with the CODATA constants above.
        let mu = mu_from_physical(constants::ELECTRON_MASS_KG, 100e-9).unwrap();
        assert!(
            (mu / 2.589_605_076_405_928e5 - 1.0).abs() < 1e-12,
            "mu = {mu:.6e}"
        );
    }

    #[test]
    fn mu_is_linear_in_both_arguments() {
        let base = mu_from_physical(2.0e-30, 5.0e-8).unwrap();
        let m2 = mu_from_physical(4.0e-30, 5.0e-8).unwrap();
        let r2 = mu_from_physical(2.0e-30, 1.0e-7).unwrap();
        assert!((m2 / base - 2.0).abs() < 1e-15);
        assert!((r2 / base - 2.0).abs() < 1e-15);
        assert!(mu_from_physical(-1.0, 1.0).is_err());
        assert!(mu_from_physical(1.0e-30, 0.0).is_err());
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_from_field(0.0, 100e-9).unwrap(), 0.0);
        let b = beta_from_field(1e-6, 100e-9).unwrap();
        assert!((b - 7.596e-6).abs() < 1e-9, "beta = {b:.9e}");
        let bm = beta_from_field(-1e-6, 100e-9).unwrap();
        assert_eq!(bm, -b);
        assert!(beta_from_field(1.0, -1.0).is_err());
    }

    #[test]
    fn beta_scaling_in_field_and_radius() {
        let b = beta_from_field(2e-6, 50e-9).unwrap();
        let b_field = beta_from_field(4e-6, 50e-9).unwrap();
        let b_radius = beta_from_field(2e-6, 100e-9).unwrap();
        assert!((b_field / b - 2.0).abs() < 1e-15);
        assert!((b_radius / b - 4.0).abs() < 1e-15);
    }

    #[test]
    fn alpha_exact_and_approx() {
        assert_eq!(alpha_from_fermi(123.0, 0.0).unwrap(), 0.0);
        let a = alpha_from_fermi(1000.0, 0.125).unwrap();
        assert!((a - 15.811_882_399_006_136).abs() < 1e-9, "alpha = {a}");
        assert!(alpha_from_fermi(10.0, -0.5).is_err());

        // exact >= approx with relative gap <= eps/(4 mu)
        for (mu, eps) in [(1000.0, 0.125), (200.0, 3.0), (50.0, 10.0)] {
            let exact = alpha_from_fermi(mu, eps).unwrap();
            let approx = alpha_from_fermi_approx(mu, eps).unwrap();
            assert!(exact >= approx);
            assert!((exact - approx) / exact <= eps / (4.0 * mu) + 1e-12);
        }

        // ratio -> 1 as eps/mu -> 0
        let exact = alpha_from_fermi(1e6, 1e-3).unwrap();
        let approx = alpha_from_fermi_approx(1e6, 1e-3).unwrap();
        assert!((exact / approx - 1.0).abs() < 1e-9);
    }

    #[test]
    fn perturbative_flag() {
        assert!(RingConfig::new(3495.0, 1e-9).unwrap().is_perturbative());
        assert!(!RingConfig::new(3495.0, 1e-4).unwrap().is_perturbative());
    }

    #[test]
    fn config_validation() {
        assert!(RingConfig::new(-1.0, 0.0).is_err());
        assert!(RingConfig::new(f64::NAN, 0.0).is_err());
        assert!(CylinderConfig::finite(10.0, 0.0, 0.0).is_err());
        assert!(CylinderConfig::finite(10.0, 0.0, 2.0).is_ok());
        let inf = CylinderConfig::infinite(10.0, 0.0).unwrap();
        assert!(inf.require_aspect().is_err());
    }

    #[test]
    fn parses_key_value_and_json_configs() {
        let kv = "# InSb ring\nmass_me = 0.0135\nradius_m = 1e-7\nfield_T = 1e-6\n";
        let a = PhysicalInput::parse(kv).unwrap();
        let js = r#"{"mass_me": 0.0135, "radius_m": 1e-7, "field_T": 1e-6}"#;
        let b = PhysicalInput::parse(js).unwrap();
        assert_eq!(a, b);
        let cfg = a.ring_config().unwrap();
        assert!((cfg.mu() - 3495.0).abs() <= 1.0);
        assert!((cfg.beta() - 7.596e-6).abs() < 1e-9);

        assert!(PhysicalInput::parse("bogus_key = 1\n").is_err());
        assert!(PhysicalInput::parse("mass_me\n").is_err());
        assert!(PhysicalInput::parse("mass_me = -2\n").is_err());
    }
}
