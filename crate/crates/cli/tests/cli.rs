use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use dqg::format::{from_json, to_json, GameFile, ResultFile};
use dqg::{Complex, Tolerances};

fn dqg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dqg"))
        .args(args)
        .env_remove("DQG_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn emit(name: &str, dir: &Path) -> String {
    let path = dir.join(format!("{name}.json"));
    let o = dqg(&["catalog", name, "--emit", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    path.to_str().unwrap().to_owned()
}

#[test]
fn catalog_pd_solves_to_mutual_defection() {
    let o = dqg(&["catalog", "pd", "--solve"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let eq_line = text
        .lines()
        .find(|l| l.trim_start().starts_with("(2,2)"))
        .unwrap();
    assert!(eq_line.contains("|11⟩"), "{eq_line}");
    assert!(eq_line.contains("payoffs (1, 1)"), "{eq_line}");
    assert!(text.contains("equilibria: 1"));
    assert!(text.contains("A (measurement): ψ3 ≻ ψ1 ≻ ψ4 ≻ ψ2"));
}

#[test]
fn equivalence_check_passes() {
    let o = dqg(&[
        "equiv-check",
        "--dim",
        "4",
        "--trials",
        "200",
        "--seed",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("dqg equiv-check  dim=4 trials=200 seed=7"));
}

#[test]
fn non_unitary_operation_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = emit("pd", dir.path());
    let mut file: GameFile<f64> = from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    file.ops_b[1][0][0] = Complex::new(0.5, 0.0);
    fs::write(&path, to_json(&file)).unwrap();
    let o = dqg(&["solve", &path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("UNITARY_TOL"), "{}", stderr(&o));
}

#[test]
fn unreadable_and_malformed_files_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(
        dqg(&["solve", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let junk = dir.path().join("junk.json");
    fs::write(&junk, "{ not json").unwrap();
    assert_eq!(
        dqg(&["order-check", junk.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn emitted_games_round_trip_bit_identically() {
    let dir = tempfile::tempdir().unwrap();
    for name in dqg::catalog::CATALOG_NAMES {
        let path = emit(name, dir.path());
        let text = fs::read_to_string(&path).unwrap();
        let file: GameFile<f64> = from_json(&text).unwrap();
        let loaded = file.load(&Tolerances::default()).unwrap();
        let (pref_a, pref_b) = loaded.preferences.unwrap();
        let entry = dqg::catalog::CatalogEntry {
            name: loaded.name.unwrap(),
            game: loaded.game,
            pref_a,
            pref_b,
            expected: loaded.expected,
        };
        assert_eq!(to_json(&GameFile::from_entry(&entry)), text, "{name}");
    }
}

#[test]
fn machine_output_is_deterministic_and_loadable() {
    let dir = tempfile::tempdir().unwrap();
    let game = emit("two-games-a", dir.path());
    let out = dir.path().join("result.json");
    let run = || {
        dqg(&[
            "--format",
            "machine",
            "solve",
            &game,
            "--out",
            out.to_str().unwrap(),
        ])
    };
    let first = run();
    let second = run();
    assert!(first.status.success(), "{}", stderr(&first));
    assert_eq!(first.stdout, second.stdout);
    let result: ResultFile<f64> = from_json(&stdout(&first)).unwrap();
    result.validate().unwrap();
    assert_eq!(result.equilibria, vec![(0, 1)]);
    assert_eq!(fs::read_to_string(&out).unwrap(), stdout(&first));
    assert!(result.provenance.game_digest.starts_with("sha256:"));

    let args = [
        "--format",
        "machine",
        "equiv-check",
        "--dim",
        "2",
        "--trials",
        "30",
        "--seed",
        "3",
    ];
    let (a, b) = (dqg(&args), dqg(&args));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn order_check_reports_commuting_pd() {
    let dir = tempfile::tempdir().unwrap();
    let game = emit("pd", dir.path());
    let o = dqg(&["order-check", &game]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("outputs under both play orders match"));
}

#[test]
fn reverse_accepts_the_evolution_pair() {
    let dir = tempfile::tempdir().unwrap();
    let game = emit("time-evolution", dir.path());
    let file: GameFile<f64> = from_json(&fs::read_to_string(&game).unwrap()).unwrap();
    let loaded = file.load(&Tolerances::default()).unwrap();
    let g = loaded.game;
    let plus = dqg::apply(&g.ops_a()[1], g.input_state()).unwrap();
    let minus = dqg::apply(&g.ops_b()[1], g.input_state()).unwrap();
    let candidates = format!(
        "[{{\"pi_a\": {}, \"pi_b\": {}}}, {{\"pi_a\": {}, \"pi_b\": {}}}]",
        serde_json::to_string(plus.amps()).unwrap(),
        serde_json::to_string(minus.amps()).unwrap(),
        serde_json::to_string(minus.amps()).unwrap(),
        serde_json::to_string(plus.amps()).unwrap(),
    );
    let cand_path = dir.path().join("candidates.json");
    fs::write(&cand_path, candidates).unwrap();
    let o = dqg(&[
        "--format",
        "machine",
        "reverse",
        &game,
        "--target",
        "2,2",
        "--candidates",
        cand_path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let report: dqg::format::ReverseFile<f64> = from_json(&stdout(&o)).unwrap();
    let indices: Vec<usize> = report.accepted.iter().map(|m| m.index).collect();
    assert_eq!(indices, vec![0]);
}

#[test]
fn count_games_prints_the_factorial_figure() {
    let o = dqg(&["count-games", "2", "2"]);
    assert!(stdout(&o).starts_with("((mn)!)^2 = 576"));
    let o = dqg(&["count-games", "1", "1"]);
    assert!(stdout(&o).starts_with("((mn)!)^2 = 1 "));
}

#[test]
fn bad_tolerance_override_exits_2() {
    let o = Command::new(env!("CARGO_BIN_EXE_dqg"))
        .args(["catalog", "pd"])
        .env("DQG_TOL", "abc")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("DQG_TOL"));
}
