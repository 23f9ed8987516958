//! End-to-end tests of the command-line surface: table formats, exit codes,
//! determinism and agreement with direct library calls.

use std::path::PathBuf;
use std::process::{Command, Output};

use abdirac::table::ResultTable;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_abdirac"));
    // pin the provenance timestamp so byte-identity checks are meaningful
    cmd.env("SOURCE_DATE_EPOCH", "1700000000");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn ring_spectrum_rows_and_symmetry() {
    let csv = stdout_of(&[
        "spectrum",
        "--geometry",
        "ring",
        "--mu",
        "1",
        "--beta",
        "0",
        "--lambda-max",
        "4.5",
    ]);
    let (cols, rows) = ResultTable::parse_csv(&csv).unwrap();
    assert_eq!(cols, vec!["lambda", "E*R", "I*2piR"]);
    assert_eq!(rows.len(), 10);
    // energies symmetric at beta = 0
    for row in &rows {
        let mirror = rows
            .iter()
            .find(|r| (r[0] + row[0]).abs() < 1e-12)
            .expect("mirror state present");
        assert_eq!(row[1], mirror[1]);
    }
}

#[test]
fn empty_lambda_range_yields_empty_table_and_exit_zero() {
    let out = run(&[
        "spectrum",
        "--geometry",
        "ring",
        "--mu",
        "1",
        "--lambda-max",
        "-0.5",
    ]);
    assert!(out.status.success());
    let (cols, rows) = ResultTable::parse_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(cols.len(), 3);
    assert!(rows.is_empty());
}

#[test]
fn cylinder_spectrum_matches_library() {
    let csv = stdout_of(&[
        "spectrum",
        "--geometry",
        "cylinder",
        "--mu",
        "10",
        "--beta",
        "0",
        "--aspect",
        "2",
        "--n-max",
        "2",
        "--lambda-max",
        "2.5",
    ]);
    let (_, rows) = ResultTable::parse_csv(&csv).unwrap();
    assert_eq!(rows.len(), 12);
    let config = abdirac::params::CylinderConfig::finite(10.0, 0.0, 2.0).unwrap();
    for row in &rows {
        let lambda = abdirac::halfint::HalfInteger::nearest(row[1]);
        let e = abdirac::cylinder::energy_finite(&config, row[0] as u32, lambda).unwrap();
        assert_eq!(row[2].to_bits(), e.to_bits());
    }
}

#[test]
fn persistent_ring_gap_is_small_at_mu_1000() {
    let csv = stdout_of(&[
        "persistent",
        "--geometry",
        "ring",
        "--mu",
        "1000",
        "--lambda-f",
        "499.5",
        "--compare-approx",
    ]);
    let (cols, rows) = ResultTable::parse_csv(&csv).unwrap();
    let gap_idx = cols.iter().position(|c| c == "gap_abs").unwrap();
    assert_eq!(rows.len(), 1);
    assert!(rows[0][gap_idx] < 1e-5, "gap = {}", rows[0][gap_idx]);
}

#[test]
fn persistent_ring_rejects_odd_electron_count() {
    let out = run(&[
        "persistent",
        "--geometry",
        "ring",
        "--mu",
        "100",
        "--ne",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--ne"), "stderr: {err}");
}

#[test]
fn persistent_cylinder_flags_short_regime() {
    let out = run(&[
        "persistent",
        "--geometry",
        "cylinder",
        "--mu",
        "500",
        "--beta",
        "1e-6",
        "--aspect",
        "40",
        "--alpha",
        "60",
        "--compare-approx",
    ]);
    assert!(out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("short-cylinder formula applicable"));
    let (cols, rows) = ResultTable::parse_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let flag_idx = cols
        .iter()
        .position(|c| c == "short_formula_applicable")
        .unwrap();
    assert_eq!(rows[0][flag_idx], 1.0);
}

#[test]
fn sweep_reproduces_monotone_persistent_current() {
    // mu from 100 to 1000 on even integers with lambda_F = mu/2: the
    // c_exact column decreases monotonically.
    let csv = stdout_of(&[
        "sweep",
        "--target",
        "ring-persistent",
        "--var",
        "mu",
        "--start",
        "100",
        "--stop",
        "1000",
        "--count",
        "46",
        "--fixed",
        "lambda_f_ratio=0.5",
    ]);
    let (cols, rows) = ResultTable::parse_csv(&csv).unwrap();
    assert_eq!(rows.len(), 46);
    let c_idx = cols.iter().position(|c| c == "c_exact").unwrap();
    let mut prev = f64::MAX;
    for row in &rows {
        assert!(row[c_idx] < prev, "not decreasing at mu = {}", row[0]);
        prev = row[c_idx];
    }
}

#[test]
fn sweep_validates_ranges_with_flag_names() {
    let out = run(&[
        "sweep",
        "--target",
        "ring-state",
        "--var",
        "mu",
        "--start",
        "5",
        "--stop",
        "1",
        "--count",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--start"));

    let out = run(&[
        "sweep",
        "--target",
        "ring-state",
        "--var",
        "mu",
        "--start",
        "1",
        "--stop",
        "5",
        "--count",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--count"));
}

#[test]
fn identical_command_lines_are_byte_identical() {
    let args = [
        "sweep",
        "--target",
        "ring-state",
        "--var",
        "beta",
        "--start",
        "-0.4",
        "--stop",
        "0.4",
        "--count",
        "17",
        "--mu",
        "2",
        "--fixed",
        "lambda=0.5",
    ];
    let a = stdout_of(&args);
    let b = stdout_of(&args);
    assert_eq!(a, b);
    assert!(a.contains("# command:"));
    assert!(a.contains("# generated_unix: 1700000000"));
    assert!(a.contains("# quadrature:"));
}

#[test]
fn json_output_carries_provenance_and_rows() {
    let js = stdout_of(&[
        "spectrum",
        "--geometry",
        "ring",
        "--mu",
        "1",
        "--lambda-max",
        "1.5",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    assert!(v["provenance"]["command"]
        .as_str()
        .unwrap()
        .contains("spectrum"));
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert_eq!(v["columns"][1], "E*R");
}

#[test]
fn domain_errors_exit_with_code_three() {
    let out = run(&[
        "spectrum",
        "--geometry",
        "ring",
        "--mu",
        "-1",
        "--lambda-max",
        "0.5",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("domain error"));
}

fn write_packet_csv(dir: &std::path::Path, k0: f64, s: f64, nodes: usize) -> PathBuf {
    let mut text = String::from("k,re_a_plus,im_a_plus,re_a_minus,im_a_minus\n");
    let lo = k0 - 6.0 * s;
    let dk = 12.0 * s / (nodes - 1) as f64;
    for i in 0..nodes {
        let k = lo + i as f64 * dk;
        let a = (-(k - k0) * (k - k0) / (2.0 * s * s)).exp();
        text.push_str(&format!("{k:.17e},{a:.17e},0,0,0\n"));
    }
    let path = dir.join("packet.csv");
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn packet_command_grid_and_scalars() {
    let dir = std::env::temp_dir().join(format!("abdirac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let packet_path = write_packet_csv(&dir, 0.0, 0.4, 257);

    let csv = stdout_of(&[
        "packet",
        "--mu",
        "1",
        "--beta",
        "0",
        "--lambda",
        "0.5",
        "--packet-csv",
        packet_path.to_str().unwrap(),
        "--t-grid",
        "0:2:3",
        "--z-grid",
        "-1:1:5",
    ]);
    let (cols, rows) = ResultTable::parse_csv(&csv).unwrap();
    assert_eq!(cols[2], "I3*R");
    // row count = |t grid| x |z grid|
    assert_eq!(rows.len(), 15);
    // symmetric packet: the t = 0 rows vanish
    for row in rows.iter().filter(|r| r[0] == 0.0) {
        assert!(row[2].abs() < 1e-10);
    }

    // the scalar block reproduces direct library calls bit-identically
    let text = std::fs::read_to_string(&packet_path).unwrap();
    let packet = abdirac::wavepacket::PacketSpec::from_csv(&text)
        .unwrap()
        .normalize()
        .unwrap();
    let config = abdirac::params::CylinderConfig::infinite(1.0, 0.0).unwrap();
    let lambda = abdirac::halfint::HalfInteger::ONE_HALF;
    let expected = [
        (
            "I_c*2piR",
            abdirac::wavepacket::circular_current(&config, lambda, &packet).unwrap(),
        ),
        (
            "E*R",
            abdirac::wavepacket::packet_energy(&config, lambda, &packet).unwrap(),
        ),
        (
            "P",
            abdirac::wavepacket::polarization_degree(lambda, &packet).unwrap(),
        ),
    ];
    for (name, value) in expected {
        let line = csv
            .lines()
            .find(|l| l.starts_with(&format!("# {name}:")))
            .unwrap_or_else(|| panic!("scalar {name} missing"));
        let parsed: f64 = line.split(':').nth(1).unwrap().trim().parse().unwrap();
        assert_eq!(parsed.to_bits(), value.to_bits(), "{name}");
    }

    // oscillation guard surfaces as exit code 4
    let out = bin()
        .args([
            "packet",
            "--mu",
            "1",
            "--lambda",
            "0.5",
            "--packet-csv",
            packet_path.to_str().unwrap(),
            "--t-grid",
            "0:1000000:2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("accuracy error"));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn config_file_feeds_physical_parameters() {
    let dir = std::env::temp_dir().join(format!("abdirac-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("ring.cfg");
    std::fs::write(&cfg, "mass_me = 0.0135\nradius_m = 1e-7\nfield_T = 1e-6\n").unwrap();
    let csv = stdout_of(&[
        "persistent",
        "--geometry",
        "ring",
        "--config",
        cfg.to_str().unwrap(),
        "--ne",
        "100",
    ]);
    let (cols, rows) = ResultTable::parse_csv(&csv).unwrap();
    let mu_idx = cols.iter().position(|c| c == "mu").unwrap();
    let beta_idx = cols.iter().position(|c| c == "beta").unwrap();
    assert!((rows[0][mu_idx] - 3495.0).abs() <= 1.0);
    assert!((rows[0][beta_idx] - 7.596e-6).abs() < 1e-9);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_subcommand_exits_zero_and_lists_invariants() {
    let out = run(&["verify", "--suite", "sums"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 5);
    assert!(!text.contains("\nFAIL"));

    let out = run(&["verify", "--suite", "currents", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let arr = v.as_array().unwrap();
    assert!(arr.len() >= 5);
    assert!(arr.iter().all(|r| r["passed"].as_bool().unwrap()));
}

#[test]
fn verify_all_reports_at_least_twenty_invariants() {
    let out = run(&["verify"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let count = text
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .count();
    assert!(count >= 20, "only {count} invariants listed");
    assert!(text.contains("0 failed"));
}
