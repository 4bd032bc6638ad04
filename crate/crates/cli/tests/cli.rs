//! End-to-end tests of the binary surface: flags, formats, exit codes, and
//! determinism.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partition-moments"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn zeta_riemann_two() {
    let out = stdout(&["zeta", "--riemann", "2"]);
    assert!(out.contains("1.64493406684823"), "{out}");
}

#[test]
fn compare_ratios_trend_to_one() {
    let out = stdout(&[
        "compare",
        "--family",
        "naturals",
        "--n",
        "50:400:geometric",
        "--k",
        "2",
    ]);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "n,alpha,ratio_t0,ratio_t1,ratio_t2");
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 4); // 50, 100, 200, 400
    for k in 0..3 {
        let first = (rows[0][2 + k] - 1.0f64).abs();
        let last = (rows[3][2 + k] - 1.0f64).abs();
        assert!(
            last < first,
            "ratio_t{k} should approach 1: {first} -> {last}"
        );
        assert!((rows[3][2 + k] - 1.0f64).abs() < 0.05);
    }
}

#[test]
fn exact_csv_round_trips() {
    let out = stdout(&["exact", "--family", "barnes2", "--n-max", "30", "--k", "3"]);
    let parsed = partition_moments::exact::ExactMomentTable::from_csv(&out).unwrap();
    let seq = partition_moments::sequences::enumerate(
        &partition_moments::sequences::SequenceFamily::Barnes(2),
        30,
    )
    .unwrap();
    let direct = partition_moments::exact::exact_moments(&seq, 30, 3).unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn json_rows_parse_and_carry_provenance() {
    let out = stdout(&[
        "--format",
        "json",
        "asym",
        "--family",
        "epstein2",
        "--n",
        "1000",
        "--k",
        "1",
        "--alpha-source",
        "series",
    ]);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["alpha_source"], "series");
        assert_eq!(v["case"], "mu0=1");
        assert!(v["cutoff"].is_u64());
        assert!(v["solver_rel_residual_budget"].is_number());
        assert!(v["terms"].is_array());
    }
    assert_eq!(out.lines().count(), 2); // k = 0 and k = 1
}

#[test]
fn output_is_deterministic() {
    let args = [
        "asym",
        "--family",
        "barnes3",
        "--n",
        "100:1000:x10",
        "--k",
        "2",
    ];
    assert_eq!(stdout(&args), stdout(&args));
    let threaded = [
        "--threads",
        "4",
        "asym",
        "--family",
        "barnes3",
        "--n",
        "100:1000:x10",
        "--k",
        "2",
    ];
    assert_eq!(stdout(&args), stdout(&threaded));
}

#[test]
fn invalid_arguments_exit_two() {
    assert_eq!(run(&["zeta", "--riemann", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["asym", "--family", "nonsense", "--n", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["corollary", "--name", "nope", "--n", "10"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn numerical_failure_exits_three() {
    let out = run(&[
        "saddle", "--family", "naturals", "--n", "100000", "--cutoff", "40",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("suggested cutoff"), "{err}");
}

#[test]
fn custom_file_without_one_is_rejected() {
    let mut file = tempfile_path("no_one.txt");
    writeln!(file.1, "2 1").unwrap();
    writeln!(file.1, "3 2").unwrap();
    drop(file.1);
    let path = file.0.to_str().unwrap();
    let out = run(&[
        "exact",
        "--family",
        "custom",
        "--custom-file",
        path,
        "--n-max",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn custom_file_happy_path() {
    let mut file = tempfile_path("ok.txt");
    writeln!(file.1, "1 2").unwrap();
    writeln!(file.1, "2 1").unwrap();
    drop(file.1);
    let path = file.0.to_str().unwrap();
    let out = stdout(&[
        "exact",
        "--family",
        "custom",
        "--custom-file",
        path,
        "--n-max",
        "2",
        "--k",
        "1",
    ]);
    // partitions of 2 over {1a, 1b, 2}: {1a,1a},{1a,1b},{1b,1b},{2}
    assert!(out.lines().any(|l| l == "2,4,7"), "{out}");
}

#[test]
fn corollary_hr_matches_series_asym() {
    let coro = stdout(&["corollary", "--name", "hr-t0", "--n", "10000"]);
    let asym = stdout(&[
        "asym",
        "--family",
        "naturals",
        "--n",
        "10000",
        "--k",
        "0",
        "--alpha-source",
        "series",
    ]);
    let coro_log10: f64 = coro
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(2)
        .unwrap()
        .parse()
        .unwrap();
    let asym_log10: f64 = asym
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(2)
        .unwrap()
        .parse()
        .unwrap();
    assert!((coro_log10 - asym_log10).abs() < 1e-9 * coro_log10.abs());
}

fn tempfile_path(name: &str) -> (std::path::PathBuf, std::fs::File) {
    let dir = std::env::temp_dir().join("pm-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{}-{name}", std::process::id()));
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}
