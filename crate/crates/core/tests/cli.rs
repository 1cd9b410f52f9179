use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kgrotor"))
        .args(args)
        .env_remove("KGROTOR_MASS_DB")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = run(&a);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["spectrum", "HCl", "--lmax", "-1"],
        vec!["constants", "HCl", "--l", "1", "--lmax", "2"],
        vec!["fit", "HCl", "--nu0", "1", "--lines-file", "x.csv"],
        vec!["fit", "--m1", "1.0", "--nu0", "2.0"],
        vec!["compare", "HCl", "--format", "yaml"],
        vec!["spectrum", "HCl", "--lmax", "2000000"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unknown_species_exit_3() {
    for spec in ["1H:99Zz:1.0", "Unobtainium", "1H:35Cl", "1H:35Cl:-1"] {
        assert_eq!(run(&["constants", spec]).status.code(), Some(3), "{spec}");
    }
}

#[test]
fn unreachable_line_exit_4() {
    let out = run(&[
        "fit",
        "--m1",
        "1.007825",
        "--m2",
        "34.968853",
        "--nu0",
        "1e-12",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("reachable range"));
}

#[test]
fn lmax_zero_is_one_row() {
    let v = json(&["spectrum", "HCl", "--lmax", "0"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["command"], "spectrum");
}

#[test]
fn homonuclear_asymmetry_terms_vanish() {
    let v = json(&["spectrum", "N2", "--lmax", "5"]);
    for row in v["rows"].as_array().unwrap() {
        for key in ["t3_cm1", "t4_cm1", "t5_cm1"] {
            assert_eq!(row[key].as_f64(), Some(0.0), "{key}");
        }
    }
}

#[test]
fn constants_for_hcl() {
    let v = json(&["constants", "1H:35Cl:1.2746"]);
    let row = &v["rows"][0];
    let b = row["b_cm1"].as_f64().unwrap();
    let tb = row["b_textbook_cm1"].as_f64().unwrap();
    assert!((b - 1.1536859).abs() < 1e-6, "{b}");
    assert!((tb - 10.5926156).abs() < 1e-6, "{tb}");
    assert_eq!(
        row["b_l_cm1"].as_f64().unwrap() + b,
        row["b_rel_cm1"].as_f64().unwrap()
    );
}

#[test]
fn fit_recovers_preset_bond_length() {
    let spectrum = json(&["spectrum", "HCl", "--lmax", "0"]);
    let nu0 = spectrum["rows"][0]["nu_bar_cm1"].to_string();
    let v = json(&["fit", "HCl", "--nu0", &nu0]);
    let a = v["rows"][0]["a_angstrom"].as_f64().unwrap();
    assert!((a - 1.2746).abs() < 1e-9 * 1.2746, "{a}");
}

#[test]
fn fit_from_lines_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lines.csv");
    let spectrum = json(&["spectrum", "CO", "--lmax", "4"]);
    let mut text = String::from("l,nu_bar_cm1\n# synthetic\n");
    for row in spectrum["rows"].as_array().unwrap() {
        text.push_str(&format!("{},{}\r\n", row["l"], row["nu_bar_cm1"]));
    }
    fs::write(&path, text).unwrap();
    let v = json(&["fit", "CO", "--lines-file", path.to_str().unwrap()]);
    assert_eq!(v["observations"], 5);
    let a = v["rows"][0]["a_angstrom"].as_f64().unwrap();
    let preset = kgrotor::MoleculeDb::open(None)
        .unwrap()
        .resolve_system("CO")
        .unwrap();
    let want = preset.bond_length() / kgrotor::units::ANGSTROM;
    assert!((a - want).abs() < 1e-9 * want, "{a}");
}

#[test]
fn mass_db_flag_beats_env() {
    let dir = tempfile::tempdir().unwrap();
    let heavy = dir.path().join("heavy.csv");
    let light = dir.path().join("light.csv");
    fs::write(&heavy, "symbol,mass_amu\nA,2.0\nB,4.0\n").unwrap();
    fs::write(&light, "symbol,mass_amu\nA,1.0\nB,1.0\n").unwrap();

    let m1 = |out: Output| {
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        v["m1_kg"].as_f64().unwrap() / 1.66053906660e-27
    };
    let base = ["constants", "A:B:1.0", "--format", "json"];
    let with_env = Command::new(env!("CARGO_BIN_EXE_kgrotor"))
        .args(base)
        .env("KGROTOR_MASS_DB", &heavy)
        .output()
        .unwrap();
    assert!((m1(with_env) - 2.0).abs() < 1e-12);

    let both = Command::new(env!("CARGO_BIN_EXE_kgrotor"))
        .args(base)
        .args(["--mass-db", light.to_str().unwrap()])
        .env("KGROTOR_MASS_DB", &heavy)
        .output()
        .unwrap();
    assert!((m1(both) - 1.0).abs() < 1e-12);

    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "X,-1.0\n").unwrap();
    let out = run(&["constants", "HCl", "--mass-db", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn compare_reports_every_model() {
    let v = json(&["compare", "HCl", "--lmax", "3"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let row = &rows[2];
    for name in [
        "nr_weighted",
        "nr_textbook",
        "taylor1",
        "taylor2",
        "kg_exact",
    ] {
        assert!(row[format!("excitation_{name}_j")].as_f64().unwrap() > 0.0);
        assert!(row[format!("nu_{name}_cm1")].as_f64().unwrap() > 0.0);
    }
    assert!(row["rel_taylor2"].as_f64().unwrap().abs() < 1e-10);

    let abs = json(&["compare", "HCl", "--lmax", "0", "--absolute"]);
    let eps = abs["epsilon_j"].as_f64().unwrap();
    assert_eq!(abs["rows"][0]["w_kg_exact_j"].as_f64().unwrap(), eps);
}

#[test]
fn human_output_is_readable() {
    let out = run(&["constants", "HCl"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("B [cm^-1]"));
    assert!(text.contains("epsilon [eV]"));
}
