use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dqg::catalog::{self, CatalogEntry};
use dqg::checks::equivalence_check;
use dqg::equilibrium::DEFAULT_ENUMERATION_CAP;
use dqg::format::{
    self, CandidateFile, GameFile, InducedFile, LoadedGame, ObservableFile, PreferenceFile,
    ResultFile, ReverseFile,
};
use dqg::random::{random_unitary, rng_from_seed};
use dqg::{
    build_outputs, count_games, enumerate_orderings, induced_preference, order_sensitivity,
    reverse_engineer_distance, solve_detailed, OutcomeWeights, PreferenceSpec, Profile,
    ProfileLabel, Solution, Tolerances,
};

mod render;

#[derive(Parser)]
#[command(name = "dqg", version, about = "Discrete quantum game solver")]
struct Cli {
    /// Output style on stdout.
    #[arg(long, value_enum, global = true, default_value_t = Style::Table)]
    format: Style,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Style {
    Table,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a game for pure-strategy Nash equilibria.
    Solve {
        game: PathBuf,
        /// Preference rule for A; defaults to the game file's own.
        #[arg(long)]
        pref_a: Option<PathBuf>,
        #[arg(long)]
        pref_b: Option<PathBuf>,
        /// Write the result file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measurement-induced cardinal and rank grids.
    Induce {
        game: PathBuf,
        #[arg(long)]
        measurement: PathBuf,
        /// JSON list of `[w_A, w_B]` per outcome.
        #[arg(long)]
        weights: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Randomized check that strictly competitive weighting and global
    /// distance rank outputs identically.
    EquivCheck {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare both play orders and list commuting operation pairs.
    OrderCheck { game: PathBuf },
    /// Build a catalog game, optionally writing and solving it.
    Catalog {
        /// One of: pd, ewl-classical, ewl, time-evolution, two-games-a, two-games-b.
        name: String,
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long)]
        solve: bool,
        /// Seed for the arbitrary operation in two-games-b.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Search candidate preferred-state pairs that make `target` the unique
    /// equilibrium under global distance preferences.
    Reverse {
        game: PathBuf,
        /// 1-based profile, e.g. `2,2`.
        #[arg(long)]
        target: String,
        #[arg(long)]
        candidates: PathBuf,
    },
    /// Number of pairs of strict orderings of the m n outputs, ((mn)!)^2.
    CountGames {
        m: usize,
        n: usize,
        /// Also enumerate them and count those with this 1-based unique
        /// equilibrium.
        #[arg(long)]
        enumerate: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<dqg::Error> for Failure {
    fn from(e: dqg::Error) -> Self {
        Self {
            code: if e.is_format() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn tolerances() -> Result<Tolerances<f64>, Failure> {
    match std::env::var("DQG_TOL") {
        Err(_) => Ok(Tolerances::default()),
        Ok(text) => match text.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t > 0.0 => Ok(Tolerances::uniform(t)),
            _ => Err(Failure::usage(format!(
                "DQG_TOL must be a positive decimal, got \"{text}\""
            ))),
        },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn parse<D: format::DeserializeOwned>(path: &Path) -> Result<(D, String), Failure> {
    let text = read(path)?;
    let value =
        format::from_json(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Ok((value, text))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_game(path: &Path, tol: &Tolerances<f64>) -> Result<(LoadedGame, String), Failure> {
    let (file, text): (GameFile<f64>, _) = parse(path)?;
    let loaded = file
        .load(tol)
        .map_err(|e| Failure::from(e).prefixed(path))?;
    Ok((loaded, text))
}

fn load_pref(path: &Path, tol: &Tolerances<f64>) -> Result<PreferenceSpec, Failure> {
    let (file, _): (PreferenceFile<f64>, _) = parse(path)?;
    file.to_spec(tol)
        .map_err(|e| Failure::from(e).prefixed(path))
}

impl Failure {
    fn prefixed(self, path: &Path) -> Self {
        Self {
            message: format!("{}: {}", path.display(), self.message),
            ..self
        }
    }
}

fn parse_profile(text: &str, shape: (usize, usize)) -> Result<Profile, Failure> {
    let bad = || {
        Failure::usage(format!(
            "expected a 1-based profile like 2,2, got \"{text}\""
        ))
    };
    let (i, j) = text.split_once(',').ok_or_else(bad)?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    let j: usize = j.trim().parse().map_err(|_| bad())?;
    if i == 0 || j == 0 || i > shape.0 || j > shape.1 {
        return Err(Failure::usage(format!(
            "profile ({i},{j}) outside the {}x{} grid",
            shape.0, shape.1
        )));
    }
    Ok((i - 1, j - 1))
}

fn header(out: &mut String, command: &str, detail: &str, tol: &Tolerances<f64>) {
    let _ = writeln!(out, "dqg {command}  {detail}  tol={:e}", tol.tie);
}

fn solve_output(
    style: Style,
    title: &str,
    game_text: &str,
    solution: &Solution,
    specs: (&PreferenceSpec, &PreferenceSpec),
    tol: &Tolerances<f64>,
    out: Option<&Path>,
) -> Outcome {
    let result = ResultFile::from_solution(solution, game_text.as_bytes(), specs.0, specs.1);
    let json = format::to_json(&result);
    if let Some(path) = out {
        write(path, &json)?;
    }
    Ok(match style {
        Style::Machine => json,
        Style::Table => {
            let mut s = String::new();
            header(&mut s, "solve", title, tol);
            s.push_str(&render::solution(solution, specs));
            s
        }
    })
}

fn cmd_solve(
    style: Style,
    game: &Path,
    pref_a: Option<&Path>,
    pref_b: Option<&Path>,
    out: Option<&Path>,
) -> Outcome {
    let tol = tolerances()?;
    let (loaded, text) = load_game(game, &tol)?;
    let defaults = loaded.preferences.clone();
    let pick = |path: Option<&Path>, fallback: Option<PreferenceSpec>, who: &str| match path {
        Some(p) => load_pref(p, &tol),
        None => fallback.ok_or_else(|| {
            Failure::usage(format!(
                "no preference for {who}: pass --pref-{} or add a preferences block",
                who.to_lowercase()
            ))
        }),
    };
    let spec_a = pick(pref_a, defaults.clone().map(|d| d.0), "A")?;
    let spec_b = pick(pref_b, defaults.map(|d| d.1), "B")?;
    let solution = solve_detailed(&loaded.game, &spec_a, &spec_b, &tol)?;
    let title = format!("game={}", game.display());
    solve_output(
        style,
        &title,
        &text,
        &solution,
        (&spec_a, &spec_b),
        &tol,
        out,
    )
}

fn cmd_induce(
    style: Style,
    game: &Path,
    measurement: &Path,
    weights: &Path,
    out: Option<&Path>,
) -> Outcome {
    let tol = tolerances()?;
    let (loaded, _) = load_game(game, &tol)?;
    let (obs, _): (ObservableFile<f64>, _) = parse(measurement)?;
    let m = obs
        .to_observable(&tol)
        .map_err(|e| Failure::from(e).prefixed(measurement))?;
    let (pairs, _): (Vec<(f64, f64)>, _) = parse(weights)?;
    let w = OutcomeWeights::new(pairs);
    let outputs = build_outputs(&loaded.game)?;
    let (pa, pb) = induced_preference(&outputs, &m, &w, tol.tie)?;
    let json = format::to_json(&InducedFile::new(&pa, &pb));
    if let Some(path) = out {
        write(path, &json)?;
    }
    Ok(match style {
        Style::Machine => json,
        Style::Table => {
            let mut s = String::new();
            header(&mut s, "induce", &format!("game={}", game.display()), &tol);
            s.push_str(&render::outputs(&outputs));
            s.push_str(&render::induced(&pa, &pb));
            s
        }
    })
}

fn cmd_equiv(style: Style, dim: usize, trials: usize, seed: u64) -> Outcome {
    if dim == 0 {
        return Err(Failure::usage("--dim must be at least 1"));
    }
    let report = equivalence_check(dim, trials, seed)?;
    let text = match style {
        Style::Machine => format::to_json(&report),
        Style::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "dqg equiv-check  dim={dim} trials={trials} seed={seed}");
            let _ = writeln!(
                s,
                "{} of {trials} trials agree{}",
                trials - report.failures.len(),
                if report.passed() {
                    String::new()
                } else {
                    format!("; failing trials {:?}", report.failures)
                }
            );
            s
        }
    };
    if report.passed() {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::check(format!(
            "{} trial(s) ranked differently",
            report.failures.len()
        )))
    }
}

fn cmd_order(style: Style, game: &Path) -> Outcome {
    let tol = tolerances()?;
    let (loaded, _) = load_game(game, &tol)?;
    let report = order_sensitivity(&loaded.game, tol.unitary)?;
    Ok(match style {
        Style::Machine => format::to_json(&report),
        Style::Table => {
            let mut s = String::new();
            header(
                &mut s,
                "order-check",
                &format!("game={}", game.display()),
                &tol,
            );
            s.push_str(&render::order(&report));
            s
        }
    })
}

fn catalog_entry(name: &str, seed: Option<u64>) -> Result<CatalogEntry, Failure> {
    match (name, seed) {
        ("two-games-b", Some(seed)) => {
            let alpha = random_unitary(4, &mut rng_from_seed(seed));
            Ok(catalog::two_games(Some(alpha))?.1)
        }
        (_, Some(_)) => Err(Failure::usage("--seed only applies to two-games-b")),
        (name, None) => Ok(catalog::by_name(name)?),
    }
}

fn cmd_catalog(
    style: Style,
    name: &str,
    emit: Option<&Path>,
    solve: bool,
    seed: Option<u64>,
) -> Outcome {
    let tol = tolerances()?;
    let entry = catalog_entry(name, seed)?;
    let text = format::to_json(&GameFile::from_entry(&entry));
    if let Some(path) = emit {
        write(path, &text)?;
    }
    let mut detail = format!("name={name}");
    if name == "two-games-b" {
        let _ = write!(
            detail,
            " seed={}",
            seed.unwrap_or(catalog::DEFAULT_ALPHA_SEED)
        );
    }
    if !solve {
        return Ok(match style {
            Style::Machine if emit.is_none() => text,
            Style::Machine => String::new(),
            Style::Table => {
                let mut s = String::new();
                header(&mut s, "catalog", &detail, &tol);
                s.push_str(&render::game(&entry.game, &build_outputs(&entry.game)?));
                s
            }
        });
    }
    let solution = solve_detailed(&entry.game, &entry.pref_a, &entry.pref_b, &tol)?;
    let mut s = solve_output(
        style,
        &detail,
        &text,
        &solution,
        (&entry.pref_a, &entry.pref_b),
        &tol,
        None,
    )?;
    if let Some(expected) = &entry.expected {
        let hit = solution.result.unique().is_some_and(|e| {
            e.profile == expected.profile
                && dqg::overlap2(solution.outputs.get(e.profile), &expected.state)
                    .is_ok_and(|f| f >= 1.0 - tol.phase)
        });
        if !hit {
            print!("{s}");
            return Err(Failure::check(format!(
                "expected unique equilibrium {} was not reproduced",
                ProfileLabel(expected.profile)
            )));
        }
        if style == Style::Table {
            let _ = writeln!(
                s,
                "expected equilibrium {} reproduced",
                ProfileLabel(expected.profile)
            );
        }
    }
    Ok(s)
}

fn cmd_reverse(style: Style, game: &Path, target: &str, candidates: &Path) -> Outcome {
    let tol = tolerances()?;
    let (loaded, _) = load_game(game, &tol)?;
    let target = parse_profile(target, loaded.game.shape())?;
    let (list, _): (Vec<CandidateFile<f64>>, _) = parse(candidates)?;
    let pairs =
        format::load_candidates(&list, &tol).map_err(|e| Failure::from(e).prefixed(candidates))?;
    let matches = reverse_engineer_distance(&loaded.game, target, &pairs, &tol)?;
    Ok(match style {
        Style::Machine => format::to_json(&ReverseFile::new(target, pairs.len(), &matches)),
        Style::Table => {
            let mut s = String::new();
            header(&mut s, "reverse", &format!("game={}", game.display()), &tol);
            let _ = writeln!(
                s,
                "target {}: {} of {} candidate pairs accepted",
                ProfileLabel(target),
                matches.len(),
                pairs.len()
            );
            for m in &matches {
                let _ = writeln!(s, "  #{}", m.index + 1);
                let _ = writeln!(s, "    pi_A {}", render::state(&m.pi_a));
                let _ = writeln!(s, "    pi_B {}", render::state(&m.pi_b));
            }
            s
        }
    })
}

fn cmd_count(style: Style, m: usize, n: usize, enumerate: Option<&str>) -> Outcome {
    if m == 0 || n == 0 {
        return Err(Failure::usage("m and n must be at least 1"));
    }
    let count = count_games(m, n);
    let enumerated = match enumerate {
        Some(t) => {
            let target = parse_profile(t, (m, n))?;
            Some((
                target,
                enumerate_orderings(m, n, target, DEFAULT_ENUMERATION_CAP)?,
            ))
        }
        None => None,
    };
    Ok(match style {
        Style::Machine => {
            let mut v = serde_json::json!({ "m": m, "n": n, "count": count.to_string() });
            if let Some((target, e)) = &enumerated {
                v["target"] = serde_json::json!([target.0, target.1]);
                v["unique_target"] = serde_json::json!(e.count);
            }
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Style::Table => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "((mn)!)^2 = {count} pairs of strict orderings of the {} outputs of a {m}x{n} game",
                m * n
            );
            let _ = writeln!(
                s,
                "(the game count read as ((mn)!)^2, one strict ordering per player)"
            );
            if let Some((target, e)) = &enumerated {
                let _ = writeln!(
                    s,
                    "{} of {} have {} as their unique equilibrium",
                    e.count,
                    e.pairs,
                    ProfileLabel(*target)
                );
            }
            s
        }
    })
}

fn run(cli: Cli) -> Outcome {
    let style = cli.format;
    match cli.command {
        Command::Solve {
            game,
            pref_a,
            pref_b,
            out,
        } => cmd_solve(
            style,
            &game,
            pref_a.as_deref(),
            pref_b.as_deref(),
            out.as_deref(),
        ),
        Command::Induce {
            game,
            measurement,
            weights,
            out,
        } => cmd_induce(style, &game, &measurement, &weights, out.as_deref()),
        Command::EquivCheck { dim, trials, seed } => cmd_equiv(style, dim, trials, seed),
        Command::OrderCheck { game } => cmd_order(style, &game),
        Command::Catalog {
            name,
            emit,
            solve,
            seed,
        } => cmd_catalog(style, &name, emit.as_deref(), solve, seed),
        Command::Reverse {
            game,
            target,
            candidates,
        } => cmd_reverse(style, &game, &target, &candidates),
        Command::CountGames { m, n, enumerate } => cmd_count(style, m, n, enumerate.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
