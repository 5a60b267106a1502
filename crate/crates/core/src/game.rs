//! Discrete quantum games: an input state, a finite operation set per player,
//! and the grid of output states the players can jointly produce.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum::{apply, commutator_norm, equal_up_to_phase, StateVector, UnitaryOp};
use crate::scalar::Real;

/// Strategy profile `(i, j)`: A's operation index and B's, both 0-based.
pub type Profile = (usize, usize);

/// 1-based rendering matching the usual `alpha_i beta_j` labels.
pub struct ProfileLabel(pub Profile);

impl fmt::Display for ProfileLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0 .0 + 1, self.0 .1 + 1)
    }
}

/// Which player's operation acts on the input state first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PlayOrder {
    /// `alpha_i beta_j |psi_in>`: B's operation acts first.
    #[default]
    BFirst,
    /// `beta_j alpha_i |psi_in>`: A's operation acts first.
    AFirst,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GameDefinition<T = f64> {
    input_state: StateVector<T>,
    ops_a: Vec<UnitaryOp<T>>,
    ops_b: Vec<UnitaryOp<T>>,
    play_order: PlayOrder,
}

impl<T: Real> GameDefinition<T> {
    pub fn new(
        input_state: StateVector<T>,
        ops_a: Vec<UnitaryOp<T>>,
        ops_b: Vec<UnitaryOp<T>>,
        play_order: PlayOrder,
    ) -> Result<Self> {
        if ops_a.is_empty() || ops_b.is_empty() {
            return Err(Error::EmptyStrategySet);
        }
        let dim = input_state.dim();
        if let Some(op) = ops_a.iter().chain(&ops_b).find(|op| op.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: op.dim(),
            });
        }
        Ok(Self {
            input_state,
            ops_a,
            ops_b,
            play_order,
        })
    }

    pub fn dim(&self) -> usize {
        self.input_state.dim()
    }

    pub fn input_state(&self) -> &StateVector<T> {
        &self.input_state
    }

    pub fn ops_a(&self) -> &[UnitaryOp<T>] {
        &self.ops_a
    }

    pub fn ops_b(&self) -> &[UnitaryOp<T>] {
        &self.ops_b
    }

    pub fn play_order(&self) -> PlayOrder {
        self.play_order
    }

    /// `(m, n)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.ops_a.len(), self.ops_b.len())
    }

    pub fn with_play_order(&self, play_order: PlayOrder) -> Self {
        Self {
            play_order,
            ..self.clone()
        }
    }
}

/// Output states indexed by profile, row-major over `(i, j)`. Duplicate states
/// are kept as separate profiles.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputTable<T = f64> {
    rows: usize,
    cols: usize,
    states: Vec<StateVector<T>>,
}

impl<T: Real> OutputTable<T> {
    /// Build directly from a grid of states, e.g. for preference analysis
    /// detached from any particular game.
    pub fn from_grid(grid: Vec<Vec<StateVector<T>>>) -> Result<Self> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyStrategySet);
        }
        let dim = grid[0][0].dim();
        let mut states = Vec::with_capacity(rows * cols);
        for row in grid {
            if row.len() != cols {
                return Err(Error::ShapeMismatch {
                    a: (rows, cols),
                    b: (rows, row.len()),
                });
            }
            for s in row {
                if s.dim() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: s.dim(),
                    });
                }
                states.push(s);
            }
        }
        Ok(Self { rows, cols, states })
    }

    /// A single column of states, one per A strategy.
    pub fn column(states: Vec<StateVector<T>>) -> Result<Self> {
        Self::from_grid(states.into_iter().map(|s| vec![s]).collect())
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn dim(&self) -> usize {
        self.states[0].dim()
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn get(&self, (i, j): Profile) -> &StateVector<T> {
        &self.states[i * self.cols + j]
    }

    pub fn profiles(&self) -> impl Iterator<Item = Profile> + '_ {
        let cols = self.cols;
        (0..self.states.len()).map(move |k| (k / cols, k % cols))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Profile, &StateVector<T>)> {
        self.profiles().zip(self.states.iter())
    }

    pub fn states(&self) -> &[StateVector<T>] {
        &self.states
    }
}

/// Every output state `|psi_ij>` in the order dictated by the game's
/// play order.
pub fn build_outputs<T: Real>(g: &GameDefinition<T>) -> Result<OutputTable<T>> {
    let (m, n) = g.shape();
    let mut states = Vec::with_capacity(m * n);
    for a in &g.ops_a {
        for b in &g.ops_b {
            let (first, second) = match g.play_order {
                PlayOrder::BFirst => (b, a),
                PlayOrder::AFirst => (a, b),
            };
            states.push(apply(second, &apply(first, &g.input_state)?)?);
        }
    }
    Ok(OutputTable {
        rows: m,
        cols: n,
        states,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderReport {
    /// `commuting_pairs[i][j]` iff `||[alpha_i, beta_j]||_F <= tol`.
    pub commuting_pairs: Vec<Vec<bool>>,
    /// Whether both play orders give phase-equal outputs at every profile.
    pub outputs_match: bool,
}

impl OrderReport {
    pub fn all_commuting(&self) -> bool {
        self.commuting_pairs.iter().flatten().all(|&c| c)
    }
}

pub fn order_sensitivity<T: Real>(g: &GameDefinition<T>, tol: T) -> Result<OrderReport> {
    let commuting_pairs = g
        .ops_a
        .iter()
        .map(|a| {
            g.ops_b
                .iter()
                .map(|b| commutator_norm(a, b).map(|c| c <= tol))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let b_first = build_outputs(&g.with_play_order(PlayOrder::BFirst))?;
    let a_first = build_outputs(&g.with_play_order(PlayOrder::AFirst))?;
    let outputs_match = b_first
        .states
        .iter()
        .zip(&a_first.states)
        .all(|(x, y)| equal_up_to_phase(x, y, tol));
    Ok(OrderReport {
        commuting_pairs,
        outputs_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd() -> GameDefinition {
        let i4 = UnitaryOp::identity(4);
        let f1 = UnitaryOp::pauli_x().tensor(&UnitaryOp::identity(2));
        let f2 = UnitaryOp::identity(2).tensor(&UnitaryOp::pauli_x());
        GameDefinition::new(
            StateVector::qubits(&[0, 0]).unwrap(),
            vec![i4.clone(), f1],
            vec![i4, f2],
            PlayOrder::BFirst,
        )
        .unwrap()
    }

    #[test]
    fn pd_outputs_are_basis_states() {
        let out = build_outputs(&pd()).unwrap();
        assert_eq!(out.shape(), (2, 2));
        let want = [[0, 0], [0, 1], [1, 0], [1, 1]];
        for ((p, s), bits) in out.iter().zip(want) {
            assert_eq!(*s, StateVector::qubits(&bits).unwrap(), "profile {p:?}");
        }
    }

    #[test]
    fn trivial_game_returns_input() {
        let psi = StateVector::<f64>::from_real(&[0.6, 0.8]).unwrap();
        let id = UnitaryOp::identity(2);
        let g = GameDefinition::new(psi.clone(), vec![id.clone()], vec![id], PlayOrder::BFirst)
            .unwrap();
        let out = build_outputs(&g).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out.get((0, 0)), &psi);
    }

    #[test]
    fn construction_errors() {
        let psi = StateVector::<f64>::basis(2, 0).unwrap();
        assert_eq!(
            GameDefinition::new(
                psi.clone(),
                vec![],
                vec![UnitaryOp::identity(2)],
                PlayOrder::BFirst
            ),
            Err(Error::EmptyStrategySet)
        );
        assert!(matches!(
            GameDefinition::new(
                psi,
                vec![UnitaryOp::identity(4)],
                vec![UnitaryOp::identity(2)],
                PlayOrder::BFirst
            ),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 4
            })
        ));
    }

    #[test]
    fn pd_is_order_insensitive() {
        let report = order_sensitivity(&pd(), 1e-9).unwrap();
        assert!(report.all_commuting());
        assert!(report.outputs_match);
    }

    #[test]
    fn hadamard_against_controlled_z_is_order_sensitive() {
        // Input |01>. B first: CZ|01> = |01>, then H(x)I gives |+1>.
        // A first: H(x)I gives |+1>, then CZ flips the |11> sign: |-1>.
        let i4 = UnitaryOp::identity(4);
        let h1 = UnitaryOp::hadamard().tensor(&UnitaryOp::identity(2));
        let cz = UnitaryOp::diagonal_phases(&[0.0, 0.0, 0.0, std::f64::consts::PI]);
        let g = GameDefinition::new(
            StateVector::qubits(&[0, 1]).unwrap(),
            vec![i4.clone(), h1],
            vec![i4, cz],
            PlayOrder::BFirst,
        )
        .unwrap();
        let report = order_sensitivity(&g, 1e-9).unwrap();
        assert_eq!(
            report.commuting_pairs,
            vec![vec![true, true], vec![true, false]]
        );
        assert!(!report.outputs_match);

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus_one = StateVector::from_real(&[0.0, h, 0.0, h]).unwrap();
        let minus_one = StateVector::from_real(&[0.0, h, 0.0, -h]).unwrap();
        let b_first = build_outputs(&g).unwrap();
        let a_first = build_outputs(&g.with_play_order(PlayOrder::AFirst)).unwrap();
        assert!(equal_up_to_phase(b_first.get((1, 1)), &plus_one, 1e-12));
        assert!(equal_up_to_phase(a_first.get((1, 1)), &minus_one, 1e-12));
    }
}
