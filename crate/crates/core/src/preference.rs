//! Player preferences over strategy profiles.
//!
//! Every rule produces a cardinal score per profile (larger is better) and a
//! weak ordering derived from it. Scores within the tie tolerance of their
//! neighbour in descending order share a rank, so two profiles get different
//! ranks only when their scores are separated by more than the tolerance.
//!
//! Rules provided:
//! - expected payoff of a measurement with per-outcome weights,
//! - squared overlap with a globally preferred state,
//! - squared overlap with the output closest to that state,
//! - measurement variance (smaller preferred),
//! - information gain `log2(dim) - H(p)` of the outcome distribution,
//! - an explicit list of states, most preferred first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{OutputTable, Profile};
use crate::quantum::{equal_up_to_phase, overlap2, HermitianObservable, StateVector};
use crate::scalar::{Real, Tolerances};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    A,
    B,
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::A => f.write_str("A"),
            Player::B => f.write_str("B"),
        }
    }
}

/// Payoff pair `(omega_A, omega_B)` attached to each measurement eigenstate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutcomeWeights<T = f64> {
    pairs: Vec<(T, T)>,
}

impl<T: Real> OutcomeWeights<T> {
    pub fn new(pairs: Vec<(T, T)>) -> Self {
        Self { pairs }
    }

    pub fn from_columns(a: &[T], b: &[T]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::WeightLength {
                expected: a.len(),
                found: b.len(),
            });
        }
        Ok(Self {
            pairs: a.iter().copied().zip(b.iter().copied()).collect(),
        })
    }

    /// A's column taken from `for_a`, B's from `for_b`.
    pub fn combine(for_a: &Self, for_b: &Self) -> Result<Self> {
        Self::from_columns(&for_a.column(Player::A), &for_b.column(Player::B))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(T, T)] {
        &self.pairs
    }

    pub fn column(&self, player: Player) -> Vec<T> {
        self.pairs
            .iter()
            .map(|&(a, b)| match player {
                Player::A => a,
                Player::B => b,
            })
            .collect()
    }

    /// `(index, a, b)` when the player's column assigns `a` to exactly one
    /// outcome and `b < a` to every other.
    pub fn strictly_competitive(&self, player: Player) -> Option<(usize, T, T)> {
        let col = self.column(player);
        let top = col.iter().copied().fold(T::neg_infinity(), T::max);
        let winners: Vec<usize> = (0..col.len()).filter(|&k| col[k] == top).collect();
        if winners.len() != 1 {
            return None;
        }
        let rest: Vec<T> = (0..col.len())
            .filter(|&k| k != winners[0])
            .map(|k| col[k])
            .collect();
        let low = rest.first().copied().unwrap_or(top - T::one());
        rest.iter()
            .all(|&w| w == low)
            .then_some((winners[0], top, low))
    }

    /// Affine rescaling `c * w + d` of both columns.
    pub fn affine(&self, c: T, d: T) -> Self {
        Self {
            pairs: self
                .pairs
                .iter()
                .map(|&(a, b)| (c * a + d, c * b + d))
                .collect(),
        }
    }
}

/// Weights `a` on `preferred_index` and `b` elsewhere in `player`'s column;
/// the other player's column is zero. Use [`OutcomeWeights::combine`] to join
/// two players' constructions.
pub fn strictly_competitive_weights<T: Real>(
    m: &HermitianObservable<T>,
    preferred_index: usize,
    a: T,
    b: T,
    player: Player,
) -> Result<OutcomeWeights<T>> {
    if a.is_nan() || b.is_nan() || a <= b {
        return Err(Error::NotStrictlyCompetitive {
            a: a.to_f64().unwrap_or(f64::NAN),
            b: b.to_f64().unwrap_or(f64::NAN),
        });
    }
    let dim = m.dim();
    if preferred_index >= dim {
        return Err(Error::IndexOutOfRange {
            index: preferred_index,
            len: dim,
        });
    }
    let col: Vec<T> = (0..dim)
        .map(|k| if k == preferred_index { a } else { b })
        .collect();
    let zeros = vec![T::zero(); dim];
    match player {
        Player::A => OutcomeWeights::from_columns(&col, &zeros),
        Player::B => OutcomeWeights::from_columns(&zeros, &col),
    }
}

/// Weak ordering over an `m x n` profile grid. Rank 0 is most preferred and
/// used ranks are exactly `0..=r`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Preference<T = f64> {
    player: Player,
    shape: (usize, usize),
    ranks: Vec<usize>,
    cardinal: Option<Vec<T>>,
}

impl<T: Real> Preference<T> {
    /// Rank profiles by descending score.
    pub fn from_cardinal(
        player: Player,
        shape: (usize, usize),
        cardinal: Vec<T>,
        tie_tol: T,
    ) -> Result<Self> {
        check_len(shape, cardinal.len())?;
        let ranks = ranks_descending(&cardinal, tie_tol);
        Ok(Self {
            player,
            shape,
            ranks,
            cardinal: Some(cardinal),
        })
    }

    /// Purely ordinal preference. Ranks must already be gap-free.
    pub fn from_ranks(player: Player, shape: (usize, usize), ranks: Vec<usize>) -> Result<Self> {
        check_len(shape, ranks.len())?;
        let max = ranks.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; max + 1];
        for &r in &ranks {
            used[r] = true;
        }
        if let Some(gap) = used.iter().position(|u| !u) {
            return Err(Error::InvalidParameter(format!(
                "ranks are not consecutive: rank {gap} unused"
            )));
        }
        Ok(Self {
            player,
            shape,
            ranks,
            cardinal: None,
        })
    }

    pub fn player(&self) -> Player {
        self.player
    }

    pub fn shape(&self) -> (usize, usize) {
        self.shape
    }

    pub fn rank(&self, (i, j): Profile) -> usize {
        self.ranks[i * self.shape.1 + j]
    }

    pub fn cardinal(&self, (i, j): Profile) -> Option<T> {
        self.cardinal.as_ref().map(|c| c[i * self.shape.1 + j])
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn cardinals(&self) -> Option<&[T]> {
        self.cardinal.as_deref()
    }

    pub fn rank_grid(&self) -> Vec<Vec<usize>> {
        self.ranks
            .chunks(self.shape.1)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn cardinal_grid(&self) -> Option<Vec<Vec<T>>> {
        self.cardinal
            .as_ref()
            .map(|c| c.chunks(self.shape.1).map(<[T]>::to_vec).collect())
    }

    /// Profiles in preference order grouped by rank, each group row-major.
    pub fn levels(&self) -> Vec<Vec<Profile>> {
        let top = self.ranks.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); top + 1];
        for (k, &r) in self.ranks.iter().enumerate() {
            levels[r].push((k / self.shape.1, k % self.shape.1));
        }
        levels
    }

    /// Chain such as `ψ3 ≻ ψ1 ≻ ψ4 ≻ ψ2`, numbering profiles row-major from 1.
    /// Tied profiles are joined with `=`.
    pub fn chain(&self) -> String {
        let n = self.shape.1;
        self.levels()
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|&(i, j)| format!("ψ{}", i * n + j + 1))
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect::<Vec<_>>()
            .join(" ≻ ")
    }

    /// Same preference with profiles permuted: A's index `i` moves to `perm[i]`.
    pub fn permute_a(&self, perm: &[usize]) -> Self {
        let (m, n) = self.shape;
        let mut ranks = vec![0; m * n];
        let mut cardinal = self.cardinal.clone();
        for i in 0..m {
            for j in 0..n {
                ranks[perm[i] * n + j] = self.ranks[i * n + j];
                if let (Some(dst), Some(src)) = (cardinal.as_mut(), self.cardinal.as_ref()) {
                    dst[perm[i] * n + j] = src[i * n + j];
                }
            }
        }
        Self {
            ranks,
            cardinal,
            ..self.clone()
        }
    }
}

fn check_len(shape: (usize, usize), len: usize) -> Result<()> {
    if shape.0 == 0 || shape.1 == 0 {
        return Err(Error::EmptyStrategySet);
    }
    if shape.0 * shape.1 != len {
        return Err(Error::DimensionMismatch {
            expected: shape.0 * shape.1,
            found: len,
        });
    }
    Ok(())
}

/// Dense ranks by descending score; a new rank starts whenever the next score
/// is more than `tol` below its predecessor.
fn ranks_descending<T: Real>(scores: &[T], tol: T) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&x, &y| {
        scores[y]
            .partial_cmp(&scores[x])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(x.cmp(&y))
    });
    let mut ranks = vec![0; scores.len()];
    let mut rank = 0;
    for w in 1..order.len() {
        if scores[order[w]] < scores[order[w - 1]] - tol {
            rank += 1;
        }
        ranks[order[w]] = rank;
    }
    ranks
}

fn check_state_dim<T: Real>(outputs: &OutputTable<T>, dim: usize) -> Result<()> {
    if outputs.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: outputs.dim(),
            found: dim,
        });
    }
    Ok(())
}

/// `sum_k w_k |<psi|phi_k>|^2` for every output.
fn expected_payoffs<T: Real>(
    outputs: &OutputTable<T>,
    m: &HermitianObservable<T>,
    weights: &[T],
) -> Result<Vec<T>> {
    check_state_dim(outputs, m.dim())?;
    if weights.len() != m.dim() {
        return Err(Error::WeightLength {
            expected: m.dim(),
            found: weights.len(),
        });
    }
    outputs
        .states()
        .iter()
        .map(|s| {
            Ok(m.probabilities(s)?
                .into_iter()
                .zip(weights)
                .map(|(p, &w)| p * w)
                .sum())
        })
        .collect()
}

/// Expected payoffs of measuring `m` with weights `w`, and the preferences
/// they induce for both players.
pub fn induced_preference<T: Real>(
    outputs: &OutputTable<T>,
    m: &HermitianObservable<T>,
    w: &OutcomeWeights<T>,
    tie_tol: T,
) -> Result<(Preference<T>, Preference<T>)> {
    if w.len() != m.dim() {
        return Err(Error::WeightLength {
            expected: m.dim(),
            found: w.len(),
        });
    }
    let shape = outputs.shape();
    let pa = expected_payoffs(outputs, m, &w.column(Player::A))?;
    let pb = expected_payoffs(outputs, m, &w.column(Player::B))?;
    Ok((
        Preference::from_cardinal(Player::A, shape, pa, tie_tol)?,
        Preference::from_cardinal(Player::B, shape, pb, tie_tol)?,
    ))
}

/// Squared overlap with a globally most preferred state.
pub fn distance_pref_global<T: Real>(
    outputs: &OutputTable<T>,
    gamma: &StateVector<T>,
    player: Player,
    tie_tol: T,
) -> Result<Preference<T>> {
    check_state_dim(outputs, gamma.dim())?;
    let scores = outputs
        .states()
        .iter()
        .map(|s| overlap2(s, gamma))
        .collect::<Result<Vec<_>>>()?;
    Preference::from_cardinal(player, outputs.shape(), scores, tie_tol)
}

/// Squared overlap with the output closest to `gamma`.
pub fn distance_pref_local<T: Real>(
    outputs: &OutputTable<T>,
    gamma: &StateVector<T>,
    player: Player,
    tie_tol: T,
) -> Result<Preference<T>> {
    let closest = local_optimum(outputs, gamma, tie_tol)?;
    distance_pref_global(outputs, outputs.get(closest), player, tie_tol)
}

/// Profile whose output is uniquely closest to `gamma`.
///
/// Outputs that are the same state as the best one (up to phase) do not count
/// as rivals; only a distinct state scoring within `tie_tol` is ambiguous.
pub fn local_optimum<T: Real>(
    outputs: &OutputTable<T>,
    gamma: &StateVector<T>,
    tie_tol: T,
) -> Result<Profile> {
    check_state_dim(outputs, gamma.dim())?;
    let scores = outputs
        .states()
        .iter()
        .map(|s| overlap2(s, gamma))
        .collect::<Result<Vec<_>>>()?;
    let best = (0..scores.len()).fold(0, |b, k| if scores[k] > scores[b] { k } else { b });
    let (_, cols) = outputs.shape();
    let as_profile = |k: usize| (k / cols, k % cols);
    let best_state = &outputs.states()[best];
    for k in 0..scores.len() {
        if k != best
            && scores[k] >= scores[best] - tie_tol
            && !equal_up_to_phase(&outputs.states()[k], best_state, tie_tol)
        {
            let (first, second) = if k < best { (k, best) } else { (best, k) };
            return Err(Error::AmbiguousLocalMaximum {
                first: as_profile(first),
                second: as_profile(second),
            });
        }
    }
    Ok(as_profile(best))
}

/// Negative variance of `m` in each output, so smaller variance ranks higher.
pub fn variance_pref<T: Real>(
    outputs: &OutputTable<T>,
    m: &HermitianObservable<T>,
    player: Player,
    tie_tol: T,
) -> Result<Preference<T>> {
    check_state_dim(outputs, m.dim())?;
    let scores = outputs
        .states()
        .iter()
        .map(|s| m.variance(s).map(|v| -v))
        .collect::<Result<Vec<_>>>()?;
    Preference::from_cardinal(player, outputs.shape(), scores, tie_tol)
}

/// Shannon entropy in bits, with `0 log 0 = 0`.
pub fn shannon_entropy<T: Real>(p: &[T]) -> T {
    p.iter()
        .filter(|&&x| x > T::zero())
        .map(|&x| -x * x.log2())
        .sum()
}

/// `log2(dim) - H(p)` for the outcome distribution of `m` in each output.
pub fn info_pref<T: Real>(
    outputs: &OutputTable<T>,
    m: &HermitianObservable<T>,
    player: Player,
    tie_tol: T,
) -> Result<Preference<T>> {
    check_state_dim(outputs, m.dim())?;
    let max_bits = T::from_usize(m.dim()).expect("dim fits").log2();
    let scores = outputs
        .states()
        .iter()
        .map(|s| Ok(max_bits - shannon_entropy(&m.probabilities(s)?)))
        .collect::<Result<Vec<_>>>()?;
    Preference::from_cardinal(player, outputs.shape(), scores, tie_tol)
}

/// Explicit ranking over states: each output takes the rank of the first
/// listed state it equals up to phase. Every output must match some entry.
pub fn state_order_pref<T: Real>(
    outputs: &OutputTable<T>,
    ranked: &[StateVector<T>],
    player: Player,
    phase_tol: T,
) -> Result<Preference<T>> {
    for s in ranked {
        check_state_dim(outputs, s.dim())?;
    }
    let positions = outputs
        .iter()
        .map(|(p, s)| {
            ranked
                .iter()
                .position(|r| equal_up_to_phase(s, r, phase_tol))
                .ok_or(Error::UnrankedOutput { profile: p })
        })
        .collect::<Result<Vec<_>>>()?;
    // Compress list positions to consecutive ranks.
    let mut used: Vec<usize> = positions.clone();
    used.sort_unstable();
    used.dedup();
    let ranks = positions
        .iter()
        .map(|p| used.binary_search(p).expect("present"))
        .collect();
    Preference::from_ranks(player, outputs.shape(), ranks)
}

/// How a player turns output states into a preference.
#[derive(Debug, Clone, PartialEq)]
pub enum PreferenceSpec<T = f64> {
    /// Expected payoff of `observable` with this player's per-outcome weights.
    Measurement {
        observable: HermitianObservable<T>,
        weights: Vec<T>,
    },
    DistanceGlobal {
        gamma: StateVector<T>,
    },
    DistanceLocal {
        gamma: StateVector<T>,
    },
    Variance {
        observable: HermitianObservable<T>,
    },
    Info {
        observable: HermitianObservable<T>,
    },
    /// States listed most preferred first.
    StateOrder {
        states: Vec<StateVector<T>>,
    },
}

impl<T: Real> PreferenceSpec<T> {
    pub fn evaluate(
        &self,
        outputs: &OutputTable<T>,
        player: Player,
        tol: &Tolerances<T>,
    ) -> Result<Preference<T>> {
        let tie = tol.tie;
        match self {
            PreferenceSpec::Measurement {
                observable,
                weights,
            } => {
                let scores = expected_payoffs(outputs, observable, weights)?;
                Preference::from_cardinal(player, outputs.shape(), scores, tie)
            }
            PreferenceSpec::DistanceGlobal { gamma } => {
                distance_pref_global(outputs, gamma, player, tie)
            }
            PreferenceSpec::DistanceLocal { gamma } => {
                distance_pref_local(outputs, gamma, player, tie)
            }
            PreferenceSpec::Variance { observable } => {
                variance_pref(outputs, observable, player, tie)
            }
            PreferenceSpec::Info { observable } => info_pref(outputs, observable, player, tie),
            PreferenceSpec::StateOrder { states } => {
                state_order_pref(outputs, states, player, tol.phase)
            }
        }
    }

    pub fn variant(&self) -> &'static str {
        match self {
            PreferenceSpec::Measurement { .. } => "measurement",
            PreferenceSpec::DistanceGlobal { .. } => "distance_global",
            PreferenceSpec::DistanceLocal { .. } => "distance_local",
            PreferenceSpec::Variance { .. } => "variance",
            PreferenceSpec::Info { .. } => "info",
            PreferenceSpec::StateOrder { .. } => "state_order",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    const TOL: f64 = 1e-9;

    fn ket(a: &[f64]) -> StateVector {
        StateVector::from_real(a).unwrap()
    }

    fn p1p2_states() -> OutputTable {
        let (a, b, c) = (0.8, 0.6, 0.5);
        let d = (1.0f64 - c * c).sqrt();
        OutputTable::column(vec![ket(&[a, b]), ket(&[b, -a]), ket(&[c, d])]).unwrap()
    }

    #[test]
    fn ranking_with_ties() {
        let scores = vec![0.5, 1.0, 0.5 + 1e-12, 0.2];
        assert_eq!(ranks_descending(&scores, TOL), vec![1, 0, 1, 2]);
        assert_eq!(ranks_descending(&[1.0, 1.0, 1.0], TOL), vec![0, 0, 0]);
    }

    #[test]
    fn from_ranks_rejects_gaps() {
        assert!(Preference::<f64>::from_ranks(Player::A, (1, 2), vec![0, 2]).is_err());
        assert!(Preference::<f64>::from_ranks(Player::A, (1, 2), vec![1, 0]).is_ok());
        assert!(Preference::<f64>::from_ranks(Player::A, (2, 2), vec![1, 0]).is_err());
    }

    #[test]
    fn global_distance_example() {
        let pref = distance_pref_global(&p1p2_states(), &ket(&[1.0, 0.0]), Player::A, TOL).unwrap();
        let card = pref.cardinals().unwrap();
        for (got, want) in card.iter().zip([0.64, 0.36, 0.25]) {
            assert!((got - want).abs() < 1e-12);
        }
        assert_eq!(pref.ranks(), &[0, 1, 2]);
        assert_eq!(pref.chain(), "ψ1 ≻ ψ2 ≻ ψ3");
    }

    #[test]
    fn local_distance_example() {
        let pref = distance_pref_local(&p1p2_states(), &ket(&[1.0, 0.0]), Player::A, TOL).unwrap();
        let card = pref.cardinals().unwrap();
        let third = (0.8 * 0.5 + 0.6 * 0.75f64.sqrt()).powi(2);
        assert!((card[0] - 1.0).abs() < 1e-12);
        assert!(card[1] < 1e-12);
        assert!((card[2] - third).abs() < 1e-12);
        assert!((third - 0.845_692_193_8).abs() < 1e-9);
        assert_eq!(pref.ranks(), &[0, 2, 1]);
        assert_eq!(pref.chain(), "ψ1 ≻ ψ3 ≻ ψ2");
    }

    #[test]
    fn local_equals_global_when_gamma_is_an_output() {
        let outputs = p1p2_states();
        let gamma = outputs.get((2, 0)).clone();
        let g = distance_pref_global(&outputs, &gamma, Player::B, TOL).unwrap();
        let l = distance_pref_local(&outputs, &gamma, Player::B, TOL).unwrap();
        assert_eq!(g.ranks(), l.ranks());
        assert_eq!(g.rank((2, 0)), 0);
    }

    #[test]
    fn local_distance_ambiguity() {
        let plus = ket(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]);
        let minus = ket(&[FRAC_1_SQRT_2, -FRAC_1_SQRT_2]);
        let outputs = OutputTable::column(vec![plus, minus]).unwrap();
        assert_eq!(
            distance_pref_local(&outputs, &ket(&[1.0, 0.0]), Player::A, TOL),
            Err(Error::AmbiguousLocalMaximum {
                first: (0, 0),
                second: (1, 0)
            })
        );
        // A repeated state is not a rival.
        let z = ket(&[1.0, 0.0]);
        let dup =
            OutputTable::column(vec![z.clone(), z.with_phase(0.3), ket(&[0.0, 1.0])]).unwrap();
        assert!(distance_pref_local(&dup, &z, Player::A, TOL).is_ok());
    }

    #[test]
    fn strictly_competitive_construction() {
        let m = HermitianObservable::computational(vec![0.0, 1.0, 2.0, 3.0]).unwrap();
        let w = strictly_competitive_weights(&m, 0, 1.0, 0.0, Player::A).unwrap();
        assert_eq!(w.column(Player::A), vec![1.0, 0.0, 0.0, 0.0]);
        assert_eq!(w.strictly_competitive(Player::A), Some((0, 1.0, 0.0)));
        assert_eq!(
            strictly_competitive_weights(&m, 0, 1.0, 1.0, Player::A),
            Err(Error::NotStrictlyCompetitive { a: 1.0, b: 1.0 })
        );
        assert!(matches!(
            strictly_competitive_weights(&m, 4, 2.0, 1.0, Player::B),
            Err(Error::IndexOutOfRange { .. })
        ));
        let wb = strictly_competitive_weights(&m, 2, 5.0, -1.0, Player::B).unwrap();
        let both = OutcomeWeights::combine(&w, &wb).unwrap();
        assert_eq!(both.strictly_competitive(Player::B), Some((2, 5.0, -1.0)));
        assert_eq!(both.strictly_competitive(Player::A), Some((0, 1.0, 0.0)));
    }

    #[test]
    fn strictly_competitive_cardinal_formula() {
        // x-basis on two qubits, preferred |++>: cardinal on |00> is (5-1)/4 + 1.
        let h = FRAC_1_SQRT_2;
        let plus = ket(&[h, h]);
        let minus = ket(&[h, -h]);
        let basis = vec![
            plus.tensor(&plus),
            plus.tensor(&minus),
            minus.tensor(&plus),
            minus.tensor(&minus),
        ];
        let m = HermitianObservable::new(basis, vec![0.0, 1.0, 2.0, 3.0]).unwrap();
        let w = strictly_competitive_weights(&m, 0, 5.0, 1.0, Player::A).unwrap();
        let outputs = OutputTable::column(vec![StateVector::qubits(&[0, 0]).unwrap()]).unwrap();
        let (pa, _) = induced_preference(&outputs, &m, &w, TOL).unwrap();
        assert!((pa.cardinal((0, 0)).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn induced_weight_length_mismatch() {
        let m = HermitianObservable::pauli_z();
        let outputs = OutputTable::column(vec![ket(&[1.0, 0.0])]).unwrap();
        let w = OutcomeWeights::new(vec![(1.0, 1.0)]);
        assert_eq!(
            induced_preference(&outputs, &m, &w, TOL),
            Err(Error::WeightLength {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn variance_examples() {
        let z = HermitianObservable::pauli_z();
        let plus = ket(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]);
        let outputs = OutputTable::column(vec![plus, ket(&[1.0, 0.0])]).unwrap();
        let pref = variance_pref(&outputs, &z, Player::A, TOL).unwrap();
        assert!((pref.cardinal((0, 0)).unwrap() + 1.0).abs() < 1e-12);
        assert_eq!(pref.cardinal((1, 0)).unwrap(), 0.0);
        assert_eq!(pref.ranks(), &[1, 0]);
    }

    #[test]
    fn info_examples() {
        let m = HermitianObservable::computational(vec![0.0, 1.0, 2.0, 3.0]).unwrap();
        let outputs = OutputTable::column(vec![
            StateVector::basis(4, 2).unwrap(),
            ket(&[0.5, 0.5, 0.5, 0.5]),
        ])
        .unwrap();
        let pref = info_pref(&outputs, &m, Player::A, TOL).unwrap();
        assert!((pref.cardinal((0, 0)).unwrap() - 2.0).abs() < 1e-12);
        assert!(pref.cardinal((1, 0)).unwrap().abs() < 1e-12);

        let q = OutputTable::column(vec![ket(&[0.9f64.sqrt(), 0.1f64.sqrt()])]).unwrap();
        let pref = info_pref(&q, &HermitianObservable::pauli_z(), Player::B, TOL).unwrap();
        let h = -(0.9f64 * 0.9f64.log2() + 0.1 * 0.1f64.log2());
        let got = pref.cardinal((0, 0)).unwrap();
        assert!((got - (1.0 - h)).abs() < 1e-12);
        assert!((got - 0.531).abs() < 1e-3);
    }

    #[test]
    fn state_order_matches_up_to_phase() {
        let s: Vec<StateVector> = (0..4).map(|k| StateVector::basis(4, k).unwrap()).collect();
        let outputs = OutputTable::from_grid(vec![
            vec![s[0].clone(), s[1].with_phase(2.0)],
            vec![s[2].clone(), s[3].clone()],
        ])
        .unwrap();
        let ranked = vec![s[3].clone(), s[0].clone(), s[2].clone(), s[1].clone()];
        let pref = state_order_pref(&outputs, &ranked, Player::A, TOL).unwrap();
        assert_eq!(pref.rank_grid(), vec![vec![1, 3], vec![2, 0]]);
        assert_eq!(
            state_order_pref(&outputs, &ranked[..3], Player::A, TOL),
            Err(Error::UnrankedOutput { profile: (0, 1) })
        );
    }
}
