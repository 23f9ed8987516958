//! Command-line surface: spectrum tables, persistent-current evaluation,
//! wave-packet observables, parameter sweeps and the invariant verifier.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain error, 4 accuracy error.

// Range guards use negated comparisons on purpose: they reject NaN bounds.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use abdirac::cylinder;
use abdirac::error::{Error, Result};
use abdirac::halfint::HalfInteger;
use abdirac::params::{CylinderConfig, PhysicalInput, RingConfig};
use abdirac::ring;
use abdirac::spinor;
use abdirac::table::{Provenance, ResultTable};
use abdirac::verify;
use abdirac::wavepacket::{self, PacketSpec};

#[derive(Parser)]
#[command(
    name = "abdirac",
    version,
    about = "Dirac fermions on ideal Aharonov-Bohm rings and cylinders",
    long_about = "Spectra, spinors, circular currents and T=0 persistent currents of \
                  relativistic fermions on ideal Aharonov-Bohm rings and cylinders. \
                  All quantities are dimensionless (energies E*R, currents I*2piR); \
                  SI inputs enter through --config files with keys mass_me, radius_m, \
                  field_T, fermi_eV."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate single-particle energies and currents.
    Spectrum(SpectrumArgs),
    /// Evaluate the T=0 persistent current of a filled system.
    Persistent(PersistentArgs),
    /// Wave-packet observables on the infinite cylinder.
    Packet(PacketArgs),
    /// Sweep one parameter of a target quantity over a range.
    Sweep(SweepArgs),
    /// Run the numerical invariant suites and report pass/fail.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Geometry {
    Ring,
    Cylinder,
}

#[derive(Args)]
struct CommonArgs {
    /// Dimensionless mass parameter mu = M R.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    /// Dimensionless flux parameter beta = e B R^2 / 2.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// Config file (key=value or JSON) with mass_me, radius_m, field_T, fermi_eV.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit JSON instead of CSV.
    #[arg(long)]
    json: bool,
    /// Azimuthal quadrature nodes (recorded in the provenance header).
    #[arg(long, default_value_t = spinor::DEFAULT_PHI_NODES)]
    nodes: usize,
}

impl CommonArgs {
    fn physical(&self) -> Result<Option<PhysicalInput>> {
        match &self.config {
            None => Ok(None),
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::usage(format!("cannot read --config {}: {e}", path.display()))
                })?;
                Ok(Some(PhysicalInput::parse(&text)?))
            }
        }
    }

    /// (mu, beta) from flags, falling back to the config file.
    fn mu_beta(&self) -> Result<(f64, f64)> {
        let physical = self.physical()?;
        let mu = match (self.mu, &physical) {
            (Some(mu), _) => mu,
            (None, Some(p)) => p.mu()?,
            (None, None) => return Err(Error::usage("--mu is required (or provide --config)")),
        };
        let beta = match (self.beta, &physical) {
            (Some(beta), _) => beta,
            (None, Some(p)) => p.beta()?,
            (None, None) => 0.0,
        };
        Ok((mu, beta))
    }

    fn write(&self, table: &ResultTable) -> Result<()> {
        let text = if self.json {
            table.to_json()
        } else {
            table.to_csv()
        };
        match &self.out {
            None => {
                print!("{text}");
                Ok(())
            }
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Error::usage(format!("cannot write {}: {e}", path.display()))),
        }
    }
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long, value_enum)]
    geometry: Geometry,
    #[command(flatten)]
    common: CommonArgs,
    /// Largest |lambda| to tabulate (rounded to the nearest half-odd integer).
    #[arg(long, allow_hyphen_values = true)]
    lambda_max: f64,
    /// Largest longitudinal quantum number (cylinders).
    #[arg(long, default_value_t = 1)]
    n_max: u32,
    /// Aspect ratio pi R / L (finite cylinders).
    #[arg(long, allow_hyphen_values = true)]
    aspect: Option<f64>,
}

#[derive(Args)]
struct PersistentArgs {
    #[arg(long, value_enum)]
    geometry: Geometry,
    #[command(flatten)]
    common: CommonArgs,
    /// Electron count N_e (rings; must be even).
    #[arg(long)]
    ne: Option<u64>,
    /// Fermi label lambda_F (rings; alternative to --ne).
    #[arg(long, allow_hyphen_values = true)]
    lambda_f: Option<f64>,
    /// Fermi radius alpha (cylinders).
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    /// Aspect ratio pi R / L (cylinders).
    #[arg(long, allow_hyphen_values = true)]
    aspect: Option<f64>,
    /// Also emit the closed-form approximation and its gaps.
    #[arg(long)]
    compare_approx: bool,
}

#[derive(Args)]
struct PacketArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Total angular momentum lambda (half-odd integer).
    #[arg(long, allow_hyphen_values = true)]
    lambda: f64,
    /// CSV with columns k,re_a_plus,im_a_plus,re_a_minus,im_a_minus.
    #[arg(long)]
    packet_csv: PathBuf,
    /// Time grid start:stop:count (units of R).
    #[arg(long, default_value = "0:0:1", allow_hyphen_values = true)]
    t_grid: String,
    /// Longitudinal grid start:stop:count (units of R).
    #[arg(long, default_value = "0:0:1", allow_hyphen_values = true)]
    z_grid: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepVar {
    Mu,
    Beta,
    Lambda,
    Aspect,
    Alpha,
    N,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepTarget {
    /// Ring E*R and I*2piR of one state.
    RingState,
    /// Ring persistent-current coefficient c and its closed form.
    RingPersistent,
    /// Finite-cylinder E*R and I*2piR of one state.
    CylinderState,
    /// Finite-cylinder persistent current and its approximations.
    CylinderPersistent,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum)]
    target: SweepTarget,
    /// The parameter to sweep.
    #[arg(long, value_enum)]
    var: SweepVar,
    #[arg(long, allow_hyphen_values = true)]
    start: f64,
    #[arg(long, allow_hyphen_values = true)]
    stop: f64,
    #[arg(long)]
    count: usize,
    /// Logarithmic spacing instead of linear.
    #[arg(long)]
    log: bool,
    /// Fixed parameters as key=value (beta, lambda, n, aspect, alpha, ne,
    /// lambda_f, lambda_f_ratio, alpha_ratio).
    #[arg(long, value_name = "KEY=VALUE")]
    fixed: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Spinor,
    Currents,
    Sums,
    Packets,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn provenance(quadrature: String) -> Provenance {
    let command: Vec<String> = std::env::args().collect();
    Provenance::new(command.join(" "), quadrature)
}

fn lambda_arg(x: f64, flag: &str) -> Result<HalfInteger> {
    let rounded = HalfInteger::nearest(x);
    if (rounded.value() - x).abs() > 1e-9 {
        return Err(Error::usage(format!(
            "--{flag} must be a half-odd integer, got {x} (nearest is {})",
            rounded.value()
        )));
    }
    Ok(rounded)
}

fn parse_grid(spec: &str, flag: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::usage(format!(
            "--{flag} expects start:stop:count, got {spec:?}"
        )));
    }
    let start: f64 = parts[0]
        .parse()
        .map_err(|_| Error::usage(format!("--{flag}: bad start {:?}", parts[0])))?;
    let stop: f64 = parts[1]
        .parse()
        .map_err(|_| Error::usage(format!("--{flag}: bad stop {:?}", parts[1])))?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| Error::usage(format!("--{flag}: bad count {:?}", parts[2])))?;
    if count == 0 {
        return Err(Error::usage(format!("--{flag}: count must be >= 1")));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    Ok((0..count)
        .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
        .collect())
}

fn cmd_spectrum(args: &SpectrumArgs) -> Result<ResultTable> {
    let (mu, beta) = args.common.mu_beta()?;
    let lambda_max = HalfInteger::nearest(args.lambda_max);
    match args.geometry {
        Geometry::Ring => {
            let config = RingConfig::new(mu, beta)?;
            let mut table = ResultTable::new(
                provenance("analytic".into()),
                vec!["lambda".into(), "E*R".into(), "I*2piR".into()],
            );
            for row in ring::ring_spectrum(config.mu(), config.beta(), lambda_max)? {
                table.push_row(vec![
                    row.lambda.value(),
                    row.energy_scaled,
                    row.current_scaled,
                ]);
            }
            Ok(table)
        }
        Geometry::Cylinder => {
            let aspect = args
                .aspect
                .ok_or_else(|| Error::usage("--aspect is required for cylinder spectra"))?;
            let config = CylinderConfig::finite(mu, beta, aspect)?;
            let mut table = ResultTable::new(
                provenance("analytic".into()),
                vec!["n".into(), "lambda".into(), "E*R".into(), "I*2piR".into()],
            );
            for row in cylinder::cylinder_spectrum(&config, args.n_max, lambda_max)? {
                table.push_row(vec![
                    row.n as f64,
                    row.lambda.value(),
                    row.energy_scaled,
                    row.current_scaled,
                ]);
            }
            Ok(table)
        }
    }
}

fn ring_filling(args: &PersistentArgs) -> Result<ring::FermiFillingRing> {
    match (args.ne, args.lambda_f) {
        (Some(ne), None) => ring::FermiFillingRing::from_electron_count(ne)
            .map_err(|e| Error::usage(format!("--ne: {e}"))),
        (None, Some(lf)) => ring::FermiFillingRing::from_lambda_f(lambda_arg(lf, "lambda-f")?),
        (None, None) => Err(Error::usage(
            "ring persistent current needs --ne or --lambda-f",
        )),
        (Some(_), Some(_)) => Err(Error::usage("--ne and --lambda-f are mutually exclusive")),
    }
}

fn cmd_persistent(args: &PersistentArgs) -> Result<ResultTable> {
    let (mu, beta) = args.common.mu_beta()?;
    match args.geometry {
        Geometry::Ring => {
            let config = RingConfig::new(mu, beta)?;
            let (mu, beta) = (config.mu(), config.beta());
            let filling = ring_filling(args)?;
            let exact = ring::persistent_ring_exact(mu, &filling, beta)?;
            let mut columns = vec![
                "mu".into(),
                "beta".into(),
                "lambda_F".into(),
                "N_e".into(),
                "c_exact".into(),
                "I_full*2piR".into(),
            ];
            let mut row = vec![
                mu,
                beta,
                filling.lambda_f().value(),
                filling.n_electrons() as f64,
                exact.c,
                exact.full_sum,
            ];
            if args.compare_approx {
                let approx = ring::persistent_ring_approx(mu, filling.lambda_f())?;
                columns.extend(["c_approx".into(), "gap_abs".into(), "gap_rel".into()]);
                let gap = exact.c - approx;
                row.extend([
                    approx,
                    gap.abs(),
                    gap.abs() / exact.c.abs().max(f64::MIN_POSITIVE),
                ]);
            }
            let mut table = ResultTable::new(provenance("kahan-sum".into()), columns);
            table.push_row(row);
            Ok(table)
        }
        Geometry::Cylinder => {
            let aspect = args
                .aspect
                .ok_or_else(|| Error::usage("--aspect is required for cylinders"))?;
            let alpha = match (args.alpha, args.common.physical()?) {
                (Some(a), _) => a,
                (None, Some(p)) => {
                    let eps = p.fermi_scaled()?.ok_or_else(|| {
                        Error::usage("--alpha missing and config has no fermi_eV")
                    })?;
                    abdirac::params::alpha_from_fermi(p.mu()?, eps)?
                }
                (None, None) => {
                    return Err(Error::usage("cylinder persistent current needs --alpha"))
                }
            };
            let config = CylinderConfig::finite(mu, beta, aspect)?;
            let exact = cylinder::persistent_finite_exact(&config, alpha)?;
            let occ = &exact.occupation;
            let mut columns = vec![
                "mu".into(),
                "beta".into(),
                "aspect".into(),
                "alpha".into(),
                "n_F".into(),
                "lambda_F".into(),
                "N_e".into(),
                "c_exact".into(),
                "I_full*2piR".into(),
                "short_formula_applicable".into(),
            ];
            let applicable = aspect < alpha && alpha < 2.0 * aspect;
            let mut row = vec![
                mu,
                beta,
                aspect,
                alpha,
                occ.n_f() as f64,
                occ.lambda_f().map(|l| l.value()).unwrap_or(f64::NAN),
                occ.n_electrons() as f64,
                exact.c,
                exact.full_sum,
                if applicable { 1.0 } else { 0.0 },
            ];
            if args.compare_approx {
                columns.extend([
                    "c_approx".into(),
                    "gap_abs".into(),
                    "gap_rel".into(),
                    "c_short".into(),
                ]);
                let approx = cylinder::persistent_finite_approx(mu, occ)?;
                let gap = exact.c - approx;
                let short = if alpha > aspect {
                    cylinder::persistent_short_cylinder(mu, aspect, alpha)?.ratio
                } else {
                    f64::NAN
                };
                row.extend([
                    approx,
                    gap.abs(),
                    gap.abs() / exact.c.abs().max(f64::MIN_POSITIVE),
                    short,
                ]);
            }
            let mut table = ResultTable::new(provenance("kahan-sum".into()), columns);
            table.push_row(row);
            if applicable {
                eprintln!("note: short-cylinder formula applicable (aspect < alpha < 2*aspect)");
            }
            Ok(table)
        }
    }
}

fn cmd_packet(args: &PacketArgs) -> Result<ResultTable> {
    let (mu, beta) = args.common.mu_beta()?;
    let config = CylinderConfig::infinite(mu, beta)?;
    let lambda = lambda_arg(args.lambda, "lambda")?;
    let text = std::fs::read_to_string(&args.packet_csv).map_err(|e| {
        Error::usage(format!(
            "cannot read --packet-csv {}: {e}",
            args.packet_csv.display()
        ))
    })?;
    let packet = PacketSpec::from_csv(&text)?.normalize()?;
    let t_grid = parse_grid(&args.t_grid, "t-grid")?;
    let z_grid = parse_grid(&args.z_grid, "z-grid")?;

    let mut table = ResultTable::new(
        provenance(format!("simpson k-nodes={}", packet.k_grid().len())),
        vec![
            "t".into(),
            "z".into(),
            "I3*R".into(),
            "I3_imag_residual".into(),
        ],
    );
    table.push_scalar(
        "I_c*2piR",
        wavepacket::circular_current(&config, lambda, &packet)?,
    );
    table.push_scalar("E*R", wavepacket::packet_energy(&config, lambda, &packet)?);
    table.push_scalar("P", wavepacket::polarization_degree(lambda, &packet)?);
    for &t in &t_grid {
        for &z in &z_grid {
            let i3 = wavepacket::longitudinal_current(&config, lambda, &packet, t, z)?;
            table.push_row(vec![t, z, i3.value, i3.imag_residual]);
        }
    }
    Ok(table)
}

struct FixedParams(std::collections::BTreeMap<String, f64>);

impl FixedParams {
    fn parse(pairs: &[String]) -> Result<Self> {
        let mut map = std::collections::BTreeMap::new();
        for pair in pairs {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::usage(format!("--fixed {pair:?} is not key=value")))?;
            let value: f64 = v
                .trim()
                .parse()
                .map_err(|_| Error::usage(format!("--fixed {pair:?}: bad number")))?;
            map.insert(k.trim().to_string(), value);
        }
        Ok(FixedParams(map))
    }

    fn get(&self, key: &str) -> Option<f64> {
        self.0.get(key).copied()
    }

    fn require(&self, key: &str) -> Result<f64> {
        self.get(key)
            .ok_or_else(|| Error::usage(format!("--fixed {key}=... is required for this target")))
    }
}

fn cmd_sweep(args: &SweepArgs) -> Result<ResultTable> {
    if args.count < 2 {
        return Err(Error::usage("--count must be >= 2"));
    }
    if !(args.start < args.stop) {
        return Err(Error::usage("--start must be < --stop"));
    }
    if args.log && !(args.start > 0.0) {
        return Err(Error::usage("--log needs --start > 0"));
    }
    let fixed = FixedParams::parse(&args.fixed)?;
    let swept_mu = args.var == SweepVar::Mu;
    let (mu0, beta0) = if swept_mu {
        (
            f64::NAN,
            args.common.beta.or(fixed.get("beta")).unwrap_or(0.0),
        )
    } else {
        let (mu, beta) = args.common.mu_beta()?;
        (mu, fixed.get("beta").unwrap_or(beta))
    };

    let grid: Vec<f64> = (0..args.count)
        .map(|i| {
            let f = i as f64 / (args.count - 1) as f64;
            if args.log {
                (args.start.ln() + (args.stop.ln() - args.start.ln()) * f).exp()
            } else {
                args.start + (args.stop - args.start) * f
            }
        })
        .collect();

    let var_name = match args.var {
        SweepVar::Mu => "mu",
        SweepVar::Beta => "beta",
        SweepVar::Lambda => "lambda",
        SweepVar::Aspect => "aspect",
        SweepVar::Alpha => "alpha",
        SweepVar::N => "n",
    };

    let mut table = match args.target {
        SweepTarget::RingState | SweepTarget::CylinderState => ResultTable::new(
            provenance("analytic".into()),
            vec![var_name.into(), "E*R".into(), "I*2piR".into()],
        ),
        SweepTarget::RingPersistent => ResultTable::new(
            provenance("kahan-sum".into()),
            vec![
                var_name.into(),
                "lambda_F".into(),
                "c_exact".into(),
                "c_approx".into(),
                "gap_abs".into(),
            ],
        ),
        SweepTarget::CylinderPersistent => ResultTable::new(
            provenance("kahan-sum".into()),
            vec![
                var_name.into(),
                "alpha".into(),
                "N_e".into(),
                "c_exact".into(),
                "c_approx".into(),
                "gap_abs".into(),
            ],
        ),
    };

    for &x in &grid {
        let mu = if swept_mu { x } else { mu0 };
        let beta = if args.var == SweepVar::Beta { x } else { beta0 };
        if !mu.is_finite() {
            return Err(Error::usage("--mu (or a config file) is required"));
        }
        match args.target {
            SweepTarget::RingState => {
                let lambda = if args.var == SweepVar::Lambda {
                    HalfInteger::nearest(x)
                } else {
                    lambda_arg(fixed.require("lambda")?, "fixed lambda")?
                };
                let config = RingConfig::new(mu, beta)?;
                table.push_row(vec![
                    x,
                    ring::ring_energy(config.mu(), config.beta(), lambda),
                    ring::partial_current_ring(config.mu(), config.beta(), lambda)?,
                ]);
            }
            SweepTarget::RingPersistent => {
                RingConfig::new(mu, beta)?;
                let lf = if let Some(ratio) = fixed.get("lambda_f_ratio") {
                    HalfInteger::nearest(ratio * mu)
                } else if let Some(lf) = fixed.get("lambda_f") {
                    lambda_arg(lf, "fixed lambda_f")?
                } else if let Some(ne) = fixed.get("ne") {
                    ring::FermiFillingRing::from_electron_count(ne as u64)?.lambda_f()
                } else {
                    return Err(Error::usage(
                        "--fixed lambda_f_ratio=... (or lambda_f=, ne=) is required",
                    ));
                };
                let filling = ring::FermiFillingRing::from_lambda_f(lf)?;
                let exact = ring::persistent_ring_exact(mu, &filling, beta)?;
                let approx = ring::persistent_ring_approx(mu, lf)?;
                table.push_row(vec![
                    x,
                    lf.value(),
                    exact.c,
                    approx,
                    (exact.c - approx).abs(),
                ]);
            }
            SweepTarget::CylinderState => {
                let aspect = if args.var == SweepVar::Aspect {
                    x
                } else {
                    fixed.require("aspect")?
                };
                let n = if args.var == SweepVar::N {
                    x.round() as u32
                } else {
                    fixed.get("n").unwrap_or(1.0).round() as u32
                };
                let lambda = if args.var == SweepVar::Lambda {
                    HalfInteger::nearest(x)
                } else {
                    lambda_arg(fixed.require("lambda")?, "fixed lambda")?
                };
                let config = CylinderConfig::finite(mu, beta, aspect)?;
                table.push_row(vec![
                    x,
                    cylinder::energy_finite(&config, n, lambda)?,
                    cylinder::chi_finite(&config, n, lambda)?,
                ]);
            }
            SweepTarget::CylinderPersistent => {
                let aspect = if args.var == SweepVar::Aspect {
                    x
                } else {
                    fixed.require("aspect")?
                };
                let alpha = if args.var == SweepVar::Alpha {
                    x
                } else if let Some(ratio) = fixed.get("alpha_ratio") {
                    ratio * mu
                } else {
                    fixed.require("alpha")?
                };
                let config = CylinderConfig::finite(mu, beta, aspect)?;
                let exact = cylinder::persistent_finite_exact(&config, alpha)?;
                let approx = if exact.occupation.is_empty() {
                    f64::NAN
                } else {
                    cylinder::persistent_finite_approx(mu, &exact.occupation)?
                };
                table.push_row(vec![
                    x,
                    alpha,
                    exact.occupation.n_electrons() as f64,
                    exact.c,
                    approx,
                    (exact.c - approx).abs(),
                ]);
            }
        }
    }
    Ok(table)
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let reports = match args.suite {
        Suite::All => verify::all_suites(),
        Suite::Spinor => verify::spinor_suite(),
        Suite::Currents => verify::currents_suite(),
        Suite::Sums => verify::sums_suite(),
        Suite::Packets => verify::packets_suite(),
    };
    let all_passed = reports.iter().all(|r| r.passed);
    let text = if args.json {
        serde_json::to_string_pretty(&reports).expect("report serialization cannot fail") + "\n"
    } else {
        let mut out = String::new();
        for r in &reports {
            out.push_str(&format!(
                "{} {:10} {:35} observed {:.3e} vs {:.3e}  {}\n",
                if r.passed { "PASS" } else { "FAIL" },
                r.module,
                r.name,
                r.observed,
                r.threshold,
                r.detail
            ));
        }
        out.push_str(&format!(
            "{} invariants, {} failed\n",
            reports.len(),
            reports.iter().filter(|r| !r.passed).count()
        ));
        out
    };
    match &args.out {
        None => print!("{text}"),
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::usage(format!("cannot write {}: {e}", path.display())))?,
    }
    Ok(all_passed)
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Spectrum(args) => args.common.write(&cmd_spectrum(args)?)?,
        Command::Persistent(args) => args.common.write(&cmd_persistent(args)?)?,
        Command::Packet(args) => args.common.write(&cmd_packet(args)?)?,
        Command::Sweep(args) => args.common.write(&cmd_sweep(args)?)?,
        Command::Verify(args) => {
            if !cmd_verify(args)? {
                // invariant failures exit 1, distinct from usage/domain codes
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            let mut stderr = std::io::stderr();
            let _ = writeln!(stderr, "error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
