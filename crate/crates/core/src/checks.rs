//! Randomized self-checks shared by the CLI.

use std::f64::consts::TAU;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::game::OutputTable;
use crate::preference::{
    distance_pref_global, induced_preference, strictly_competitive_weights, Player,
};
use crate::quantum::{HermitianObservable, StateVector};
use crate::random::{random_basis, random_state, rng_from_seed};
use crate::scalar::TIE_TOL;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    /// Indices of trials whose rank grids disagreed.
    pub failures: Vec<usize>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compare the strictly competitive induced preference with the global
/// distance preference towards the favoured eigenstate, on `trials` random
/// instances: a random measurement basis, up to nine outputs (fresh states,
/// phase-shifted repeats, phase-shifted eigenstates) and random `a > b`.
pub fn equivalence_check(dim: usize, trials: usize, seed: u64) -> Result<EquivalenceReport> {
    let mut rng = rng_from_seed(seed);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let basis: Vec<StateVector> = random_basis(dim, &mut rng);
        let labels = (0..dim).map(|k| k as f64).collect();
        let m = HermitianObservable::new(basis.clone(), labels)?;
        let rows = rng.random_range(1..=3);
        let cols = rng.random_range(1..=3);
        let mut states: Vec<StateVector> = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            let phase = rng.random_range(0.0..TAU);
            let s = match rng.random_range(0..4) {
                0 if !states.is_empty() => {
                    states[rng.random_range(0..states.len())].with_phase(phase)
                }
                1 => basis[rng.random_range(0..dim)].with_phase(phase),
                _ => random_state(dim, &mut rng),
            };
            states.push(s);
        }
        let outputs = OutputTable::from_grid(states.chunks(cols).map(<[_]>::to_vec).collect())?;
        let x: f64 = rng.random_range(-10.0..10.0);
        let y: f64 = rng.random_range(-10.0..10.0);
        let (a, b) = if x > y { (x, y) } else { (y, x) };
        let k = rng.random_range(0..dim);
        let player = if rng.random_bool(0.5) {
            Player::A
        } else {
            Player::B
        };
        let w = strictly_competitive_weights(&m, k, a, b, player)?;
        let (pa, pb) = induced_preference(&outputs, &m, &w, TIE_TOL)?;
        let induced = match player {
            Player::A => pa,
            Player::B => pb,
        };
        let p1 = distance_pref_global(&outputs, &basis[k], player, TIE_TOL)?;
        if induced.ranks() != p1.ranks() {
            failures.push(trial);
        }
    }
    Ok(EquivalenceReport {
        dim,
        trials,
        seed,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let r = equivalence_check(4, 50, 7).unwrap();
        assert!(r.passed());
        assert_eq!(r, equivalence_check(4, 50, 7).unwrap());
    }
}
