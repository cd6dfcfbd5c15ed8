use std::process::Command;

use ritz_bounds::harness::{
    figure1_config, parse_csv, run_experiment, write_csv, ExperimentConfig, SpectrumSource,
    CSV_HEADER,
};
use ritz_bounds::{figure1_spectrum, BoundFamily};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ritz-bounds"))
}

#[test]
fn preset_matches_builtin_spectrum() {
    let preset = figure1_config();
    let SpectrumSource::Inline(values) = &preset.spectrum else {
        panic!("preset spectrum is inline")
    };
    assert_eq!(values.as_slice(), figure1_spectrum().values());
    assert!(preset
        .description
        .as_deref()
        .unwrap()
        .contains("reconstruction"));
}

#[test]
fn exact_bounds_hold_on_preset() {
    let out = run_experiment(&figure1_config()).unwrap();
    assert!(out.warnings.is_empty());
    let mut checked = 0;
    for r in &out.records {
        assert!(r.abs_error >= 0.0);
        assert!(r.bound_value >= 0.0);
        if matches!(
            r.family,
            BoundFamily::ExtremalExact | BoundFamily::InteriorExact
        ) {
            assert!(
                r.abs_error <= r.bound_value * (1.0 + 1e-8) + 1e-12,
                "target {} n {} {}: {} > {}",
                r.target_index,
                r.ambient_dim,
                r.family,
                r.abs_error,
                r.bound_value
            );
            checked += 1;
        }
    }
    assert!(checked > 200);
}

#[test]
fn figure1_target1_extremal_stream() {
    let cfg = ExperimentConfig::from_json(r#"{"spectrum": "figure1", "targets": [{"index": 1}]}"#)
        .unwrap();
    let out = run_experiment(&cfg).unwrap();
    assert_eq!(out.records.len(), 46);
    for r in &out.records {
        assert!(r.abs_error <= r.bound_value * (1.0 + 1e-8) + 1e-12);
    }
}

#[test]
fn optimized_shift_rows() {
    let cfg = ExperimentConfig::from_json(
        r#"{"spectrum": "figure1", "targets": [
              {"index": 24, "families": ["interior-exact"], "shift": {"optimize": {"target_error": 1e-8}}},
              {"index": 1, "families": ["interior-exact"], "shift": {"optimize": {"target_error": 1e-8}}}]}"#,
    )
    .unwrap();
    let out = run_experiment(&cfg).unwrap();
    let t24: Vec<_> = out
        .records
        .iter()
        .filter(|r| r.target_index == 24)
        .collect();
    assert!(t24.iter().all(|r| (r.shift.unwrap() - 0.45).abs() < 1e-6));
    let t1: Vec<_> = out.records.iter().filter(|r| r.target_index == 1).collect();
    assert!(t1.iter().all(|r| r.shift == Some(f64::INFINITY)));
    for r in out.records {
        assert!(r.abs_error <= r.bound_value * (1.0 + 1e-8) + 1e-12);
    }
}

#[test]
fn deterministic_csv() {
    let render = || {
        let mut buf = Vec::new();
        write_csv(
            &run_experiment(&figure1_config()).unwrap().records,
            &mut buf,
        )
        .unwrap();
        buf
    };
    let a = render();
    assert_eq!(a, render());
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with(CSV_HEADER));
    assert_eq!(
        parse_csv(&text).unwrap(),
        run_experiment(&figure1_config()).unwrap().records
    );
}

#[test]
fn cli_run_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    let csv = dir.path().join("out.csv");
    std::fs::write(
        &cfg,
        format!(
            r#"{{"spectrum": {{"inline": [3, 2, 1, 0]}}, "targets": [{{"index": 1}}], "output": {:?}}}"#,
            csv.display().to_string()
        ),
    )
    .unwrap();
    let status = bin().arg("run").arg(&cfg).status().unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 5);
    let last = parse_csv(&text).unwrap().pop().unwrap();
    assert!(last.abs_error <= 3e-10);
}

#[test]
fn cli_run_to_stdout_with_empty_targets() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"spectrum": "figure1", "targets": []}"#).unwrap();
    let out = bin().arg("run").arg(&cfg).output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        format!("{CSV_HEADER}\n")
    );
}

#[test]
fn cli_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    let out = bin().arg("run").arg(&missing).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        "{\"spectrum\": \"figure1\",\n \"targets\": [{\"index\": 0}]}",
    )
    .unwrap();
    let out = bin().arg("run").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("targets[0].index"));

    let syntax = dir.path().join("syntax.json");
    std::fs::write(&syntax, "{\"spectrum\": \n  figure1}").unwrap();
    let out = bin().arg("run").arg(&syntax).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let unwritable = dir.path().join("cfg.json");
    std::fs::write(
        &unwritable,
        r#"{"spectrum": {"inline": [1, 0]}, "output": "/nonexistent-dir/x.csv"}"#,
    )
    .unwrap();
    let out = bin().arg("run").arg(&unwritable).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cli_figure1_preset() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("fig");
    let status = bin()
        .arg("figure1")
        .arg("--out")
        .arg(&out_dir)
        .status()
        .unwrap();
    assert!(status.success());
    let records =
        parse_csv(&std::fs::read_to_string(out_dir.join("figure1.csv")).unwrap()).unwrap();
    assert_eq!(records, run_experiment(&figure1_config()).unwrap().records);
}

#[test]
fn cli_optimize_shift() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"spectrum": "figure1"}"#).unwrap();
    let out = bin()
        .args(["optimize-shift"])
        .arg(&cfg)
        .args(["--target", "24", "--error", "1e-8"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let shift: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("shift "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((shift - 0.45).abs() < 1e-6);
    assert!(text.contains("converged true"));

    let out = bin()
        .args(["optimize-shift"])
        .arg(&cfg)
        .args(["--target", "99", "--error", "1e-8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
