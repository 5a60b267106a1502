//! Human-readable tables.

use std::fmt::Write as _;

use dqg::{
    equal_up_to_phase, GameDefinition, OrderReport, OutputTable, Preference, PreferenceSpec,
    ProfileLabel, Solution, StateVector, C64,
};

fn real(x: f64) -> String {
    let x = if x.abs() < 5e-5 { 0.0 } else { x };
    format!("{x:.4}")
}

fn amplitude(c: C64) -> String {
    if c.im.abs() < 5e-5 {
        real(c.re)
    } else {
        let sign = if c.im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{}i", real(c.re), real(c.im.abs()))
    }
}

/// `|b...>` when the state is a computational basis state on qubits.
fn ket(s: &StateVector) -> Option<String> {
    let dim = s.dim();
    if !dim.is_power_of_two() || dim < 2 {
        return None;
    }
    let bits = dim.trailing_zeros() as usize;
    (0..dim)
        .find(|&k| StateVector::basis(dim, k).is_ok_and(|b| equal_up_to_phase(s, &b, 1e-9)))
        .map(|k| format!("|{:0bits$b}⟩", k))
}

/// Amplitudes in the computational basis to 4 decimals.
pub fn state(s: &StateVector) -> String {
    let amps: Vec<String> = s.amps().iter().map(|&c| amplitude(c)).collect();
    match ket(s) {
        Some(k) => format!("[{}]  {k}", amps.join(", ")),
        None => format!("[{}]", amps.join(", ")),
    }
}

pub fn outputs(table: &OutputTable) -> String {
    let mut s = String::from("outputs\n");
    let n = table.shape().1;
    for ((i, j), st) in table.iter() {
        let _ = writeln!(
            s,
            "  ψ{:<2} {}  {}",
            i * n + j + 1,
            ProfileLabel((i, j)),
            state(st)
        );
    }
    s
}

pub fn game(g: &GameDefinition, table: &OutputTable) -> String {
    let (m, n) = g.shape();
    let mut s = format!(
        "{m}x{n} profiles, dim {}, {}\ninput {}\n",
        g.dim(),
        match g.play_order() {
            dqg::PlayOrder::BFirst => "B_FIRST",
            dqg::PlayOrder::AFirst => "A_FIRST",
        },
        state(g.input_state())
    );
    s.push_str(&outputs(table));
    s
}

fn number(x: f64) -> String {
    if x == x.round() && x.abs() < 1e15 {
        format!("{x}")
    } else {
        format!("{x:.4}")
    }
}

fn grid(p: &Preference) -> String {
    let mut s = String::new();
    match p.cardinal_grid() {
        Some(rows) => {
            for row in rows {
                let cells: Vec<String> = row.iter().map(|&x| format!("{:>8}", number(x))).collect();
                let _ = writeln!(s, "    {}", cells.join(" "));
            }
        }
        None => {
            for row in p.rank_grid() {
                let cells: Vec<String> = row.iter().map(|r| format!("{r:>3}")).collect();
                let _ = writeln!(s, "    {}", cells.join(" "));
            }
        }
    }
    s
}

pub fn induced(pa: &Preference, pb: &Preference) -> String {
    let mut s = String::new();
    for (name, p) in [("A", pa), ("B", pb)] {
        let _ = writeln!(s, "{name}: {}", p.chain());
        s.push_str(&grid(p));
    }
    s
}

pub fn solution(sol: &Solution, specs: (&PreferenceSpec, &PreferenceSpec)) -> String {
    let mut s = outputs(&sol.outputs);
    for (name, p, spec) in [("A", &sol.pref_a, specs.0), ("B", &sol.pref_b, specs.1)] {
        let _ = writeln!(s, "{name} ({}): {}", spec.variant(), p.chain());
    }
    let eqs = &sol.result.equilibria;
    let _ = writeln!(s, "equilibria: {}", eqs.len());
    for e in eqs {
        let _ = write!(
            s,
            "  {}  {}",
            ProfileLabel(e.profile),
            state(sol.outputs.get(e.profile))
        );
        if let Some((a, b)) = e.payoffs {
            let _ = write!(s, "  payoffs ({}, {})", number(a), number(b));
        }
        s.push('\n');
    }
    s
}

pub fn order(report: &OrderReport) -> String {
    let mut s = String::from("commuting pairs [alpha_i, beta_j] = 0\n");
    for (i, row) in report.commuting_pairs.iter().enumerate() {
        let cells: Vec<&str> = row.iter().map(|&c| if c { "yes" } else { "no" }).collect();
        let _ = writeln!(s, "  alpha_{} {}", i + 1, cells.join(" "));
    }
    let _ = writeln!(
        s,
        "outputs under both play orders {}",
        if report.outputs_match {
            "match"
        } else {
            "differ"
        }
    );
    s
}
