//! On-disk formats.
//!
//! All files are JSON. Complex numbers are `[re, im]`, states are arrays of
//! complex numbers, matrices are row-major arrays of rows. Writers emit
//! pretty-printed JSON with shortest round-trip float formatting, so loading a
//! file and writing it back reproduces the same bytes.
//!
//! - `dqg-game v1`: a game, optionally with both players' preference rules and
//!   a known equilibrium.
//! - `dqg-result v1`: equilibria found by a solve, with the rank grids used.
//! - `dqg-induced v1`: measurement-induced cardinal and rank grids.

use num_complex::Complex;
pub use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::catalog::{CatalogEntry, Expected};
use crate::equilibrium::{ReverseMatch, Solution};
use crate::error::{Error, Result};
use crate::game::{GameDefinition, OrderReport, PlayOrder, Profile};
use crate::preference::{OutcomeWeights, Preference, PreferenceSpec};
use crate::quantum::{HermitianObservable, Matrix, StateVector, UnitaryOp};
use crate::scalar::{Real, Tolerances};

pub const GAME_FORMAT: &str = "dqg-game v1";
pub const RESULT_FORMAT: &str = "dqg-result v1";
pub const INDUCED_FORMAT: &str = "dqg-induced v1";

pub type StateFile<T> = Vec<Complex<T>>;
pub type MatrixFile<T> = Vec<Vec<Complex<T>>>;

fn state_to_file<T: Real>(s: &StateVector<T>) -> StateFile<T> {
    s.amps().to_vec()
}

fn state_from_file<T: Real>(s: &StateFile<T>, tol: &Tolerances<T>) -> Result<StateVector<T>> {
    StateVector::with_tol(s.clone(), tol.norm)
}

fn op_from_file<T: Real>(m: &MatrixFile<T>, tol: &Tolerances<T>) -> Result<UnitaryOp<T>> {
    UnitaryOp::with_tol(Matrix::from_rows(m.clone())?, tol.unitary)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct ObservableFile<T> {
    pub eigenbasis: Vec<StateFile<T>>,
    pub eigenvalues: Vec<T>,
}

impl<T: Real> ObservableFile<T> {
    pub fn from_observable(m: &HermitianObservable<T>) -> Self {
        Self {
            eigenbasis: m.eigenbasis().iter().map(state_to_file).collect(),
            eigenvalues: m.eigenvalues().to_vec(),
        }
    }

    pub fn to_observable(&self, tol: &Tolerances<T>) -> Result<HermitianObservable<T>> {
        let basis = self
            .eigenbasis
            .iter()
            .map(|s| state_from_file(s, tol))
            .collect::<Result<Vec<_>>>()?;
        HermitianObservable::with_tol(basis, self.eigenvalues.clone(), tol.norm)
    }
}

/// Preference rule as stored in files, tagged by `variant`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case", bound = "T: Real")]
pub enum PreferenceFile<T> {
    Measurement {
        observable: ObservableFile<T>,
        weights: Vec<T>,
    },
    DistanceGlobal {
        gamma: StateFile<T>,
    },
    DistanceLocal {
        gamma: StateFile<T>,
    },
    Variance {
        observable: ObservableFile<T>,
    },
    Info {
        observable: ObservableFile<T>,
    },
    StateOrder {
        states: Vec<StateFile<T>>,
    },
}

impl<T: Real> PreferenceFile<T> {
    pub fn from_spec(spec: &PreferenceSpec<T>) -> Self {
        match spec {
            PreferenceSpec::Measurement {
                observable,
                weights,
            } => Self::Measurement {
                observable: ObservableFile::from_observable(observable),
                weights: weights.clone(),
            },
            PreferenceSpec::DistanceGlobal { gamma } => Self::DistanceGlobal {
                gamma: state_to_file(gamma),
            },
            PreferenceSpec::DistanceLocal { gamma } => Self::DistanceLocal {
                gamma: state_to_file(gamma),
            },
            PreferenceSpec::Variance { observable } => Self::Variance {
                observable: ObservableFile::from_observable(observable),
            },
            PreferenceSpec::Info { observable } => Self::Info {
                observable: ObservableFile::from_observable(observable),
            },
            PreferenceSpec::StateOrder { states } => Self::StateOrder {
                states: states.iter().map(state_to_file).collect(),
            },
        }
    }

    pub fn to_spec(&self, tol: &Tolerances<T>) -> Result<PreferenceSpec<T>> {
        Ok(match self {
            Self::Measurement {
                observable,
                weights,
            } => PreferenceSpec::Measurement {
                observable: observable.to_observable(tol)?,
                weights: weights.clone(),
            },
            Self::DistanceGlobal { gamma } => PreferenceSpec::DistanceGlobal {
                gamma: state_from_file(gamma, tol)?,
            },
            Self::DistanceLocal { gamma } => PreferenceSpec::DistanceLocal {
                gamma: state_from_file(gamma, tol)?,
            },
            Self::Variance { observable } => PreferenceSpec::Variance {
                observable: observable.to_observable(tol)?,
            },
            Self::Info { observable } => PreferenceSpec::Info {
                observable: observable.to_observable(tol)?,
            },
            Self::StateOrder { states } => PreferenceSpec::StateOrder {
                states: states
                    .iter()
                    .map(|s| state_from_file(s, tol))
                    .collect::<Result<_>>()?,
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct PreferencePair<T> {
    pub a: PreferenceFile<T>,
    pub b: PreferenceFile<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct ExpectedFile<T> {
    pub profile: Profile,
    pub state: StateFile<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile_order_a: Option<Vec<Profile>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct GameFile<T> {
    pub format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub input_state: StateFile<T>,
    pub ops_a: Vec<MatrixFile<T>>,
    pub ops_b: Vec<MatrixFile<T>>,
    #[serde(default)]
    pub play_order: PlayOrder,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preferences: Option<PreferencePair<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedFile<T>>,
}

/// A game file decoded into engine types.
#[derive(Debug, Clone)]
pub struct LoadedGame<T = f64> {
    pub name: Option<String>,
    pub game: GameDefinition<T>,
    pub preferences: Option<(PreferenceSpec<T>, PreferenceSpec<T>)>,
    pub expected: Option<Expected<T>>,
}

impl<T: Real> GameFile<T> {
    pub fn from_game(game: &GameDefinition<T>) -> Self {
        let ops = |ops: &[UnitaryOp<T>]| ops.iter().map(|u| u.matrix().rows()).collect();
        Self {
            format: GAME_FORMAT.into(),
            name: None,
            dim: game.dim(),
            input_state: state_to_file(game.input_state()),
            ops_a: ops(game.ops_a()),
            ops_b: ops(game.ops_b()),
            play_order: game.play_order(),
            preferences: None,
            expected: None,
        }
    }

    pub fn from_entry(entry: &CatalogEntry<T>) -> Self {
        Self {
            name: Some(entry.name.clone()),
            preferences: Some(PreferencePair {
                a: PreferenceFile::from_spec(&entry.pref_a),
                b: PreferenceFile::from_spec(&entry.pref_b),
            }),
            expected: entry.expected.as_ref().map(|e| ExpectedFile {
                profile: e.profile,
                state: state_to_file(&e.state),
                profile_order_a: e.profile_order_a.clone(),
            }),
            ..Self::from_game(&entry.game)
        }
    }

    /// Validate every invariant and build engine types.
    pub fn load(&self, tol: &Tolerances<T>) -> Result<LoadedGame<T>> {
        check_format(&self.format, GAME_FORMAT)?;
        let input = state_from_file(&self.input_state, tol)?;
        if input.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: input.dim(),
            });
        }
        let ops = |ops: &[MatrixFile<T>]| {
            ops.iter()
                .map(|m| op_from_file(m, tol))
                .collect::<Result<Vec<_>>>()
        };
        let game =
            GameDefinition::new(input, ops(&self.ops_a)?, ops(&self.ops_b)?, self.play_order)?;
        let preferences = match &self.preferences {
            Some(p) => Some((p.a.to_spec(tol)?, p.b.to_spec(tol)?)),
            None => None,
        };
        let expected = match &self.expected {
            Some(e) => Some(Expected {
                profile: e.profile,
                state: state_from_file(&e.state, tol)?,
                profile_order_a: e.profile_order_a.clone(),
            }),
            None => None,
        };
        Ok(LoadedGame {
            name: self.name.clone(),
            game,
            preferences,
            expected,
        })
    }
}

fn check_format(found: &str, expected: &str) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(Error::Format(format!(
            "expected format \"{expected}\", found \"{found}\""
        )))
    }
}

/// Candidate preferred-state pair for reverse engineering.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct CandidateFile<T> {
    pub pi_a: StateFile<T>,
    pub pi_b: StateFile<T>,
}

pub fn load_candidates<T: Real>(
    list: &[CandidateFile<T>],
    tol: &Tolerances<T>,
) -> Result<Vec<(StateVector<T>, StateVector<T>)>> {
    list.iter()
        .map(|c| {
            Ok((
                state_from_file(&c.pi_a, tol)?,
                state_from_file(&c.pi_b, tol)?,
            ))
        })
        .collect()
}

pub fn weights_from_file<T: Real>(pairs: Vec<(T, T)>) -> OutcomeWeights<T> {
    OutcomeWeights::new(pairs)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct Provenance<T> {
    /// `sha256:<hex>` of the game file bytes.
    pub game_digest: String,
    pub pref_a: PreferenceFile<T>,
    pub pref_b: PreferenceFile<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct ResultFile<T> {
    pub format: String,
    /// Equilibrium profiles `[i, j]`, 0-based, row-major order.
    pub equilibria: Vec<Profile>,
    pub states: Vec<StateFile<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payoffs: Option<Vec<(T, T)>>,
    pub ranks_a: Vec<Vec<usize>>,
    pub ranks_b: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cardinal_a: Option<Vec<Vec<T>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cardinal_b: Option<Vec<Vec<T>>>,
    pub provenance: Provenance<T>,
}

impl<T: Real> ResultFile<T> {
    pub fn from_solution(
        solution: &Solution<T>,
        game_bytes: &[u8],
        spec_a: &PreferenceSpec<T>,
        spec_b: &PreferenceSpec<T>,
    ) -> Self {
        let eqs = &solution.result.equilibria;
        let payoffs: Option<Vec<(T, T)>> = eqs.iter().map(|e| e.payoffs).collect();
        Self {
            format: RESULT_FORMAT.into(),
            equilibria: eqs.iter().map(|e| e.profile).collect(),
            states: eqs
                .iter()
                .map(|e| state_to_file(solution.outputs.get(e.profile)))
                .collect(),
            payoffs: payoffs.filter(|p| !p.is_empty()),
            ranks_a: solution.pref_a.rank_grid(),
            ranks_b: solution.pref_b.rank_grid(),
            cardinal_a: solution.pref_a.cardinal_grid(),
            cardinal_b: solution.pref_b.cardinal_grid(),
            provenance: Provenance {
                game_digest: digest(game_bytes),
                pref_a: PreferenceFile::from_spec(spec_a),
                pref_b: PreferenceFile::from_spec(spec_b),
            },
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_format(&self.format, RESULT_FORMAT)?;
        if self.states.len() != self.equilibria.len() {
            return Err(Error::Format("one state per equilibrium required".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct InducedFile<T> {
    pub format: String,
    pub cardinal_a: Vec<Vec<T>>,
    pub cardinal_b: Vec<Vec<T>>,
    pub ranks_a: Vec<Vec<usize>>,
    pub ranks_b: Vec<Vec<usize>>,
}

impl<T: Real> InducedFile<T> {
    pub fn new(pa: &Preference<T>, pb: &Preference<T>) -> Self {
        Self {
            format: INDUCED_FORMAT.into(),
            cardinal_a: pa.cardinal_grid().unwrap_or_default(),
            cardinal_b: pb.cardinal_grid().unwrap_or_default(),
            ranks_a: pa.rank_grid(),
            ranks_b: pb.rank_grid(),
        }
    }
}

/// Order-sensitivity report as written by the CLI.
pub type OrderReportFile = OrderReport;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct ReverseMatchFile<T> {
    pub index: usize,
    pub pi_a: StateFile<T>,
    pub pi_b: StateFile<T>,
}

/// Candidate pairs accepted by a reverse-engineering search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct ReverseFile<T> {
    /// 0-based target profile.
    pub target: Profile,
    pub candidates: usize,
    pub accepted: Vec<ReverseMatchFile<T>>,
}

impl<T: Real> ReverseFile<T> {
    pub fn new(target: Profile, candidates: usize, matches: &[ReverseMatch<T>]) -> Self {
        Self {
            target,
            candidates,
            accepted: matches
                .iter()
                .map(|m| ReverseMatchFile {
                    index: m.index,
                    pi_a: state_to_file(&m.pi_a),
                    pi_b: state_to_file(&m.pi_b),
                })
                .collect(),
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<S: Serialize>(value: &S) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn from_json<D: DeserializeOwned>(text: &str) -> Result<D> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn complex_serializes_as_pair() {
        let s: StateVector =
            StateVector::new(vec![Complex::new(0.6, 0.0), Complex::new(0.0, 0.8)]).unwrap();
        assert_eq!(
            serde_json::to_string(&state_to_file(&s)).unwrap(),
            "[[0.6,0.0],[0.0,0.8]]"
        );
    }

    #[test]
    fn catalog_entries_round_trip_bytes() {
        for name in catalog::CATALOG_NAMES {
            let entry = catalog::by_name(name).unwrap();
            let text = to_json(&GameFile::from_entry(&entry));
            let file: GameFile<f64> = from_json(&text).unwrap();
            let loaded = file.load(&Tolerances::default()).unwrap();
            assert_eq!(loaded.game, entry.game, "{name}");
            let again = GameFile::from_entry(&CatalogEntry {
                name: loaded.name.clone().unwrap(),
                game: loaded.game,
                pref_a: loaded.preferences.clone().unwrap().0,
                pref_b: loaded.preferences.unwrap().1,
                expected: loaded.expected,
            });
            assert_eq!(to_json(&again), text, "{name}");
        }
    }

    #[test]
    fn load_rejects_non_unitary() {
        let mut file = GameFile::from_entry(&catalog::pd_quantum::<f64>());
        file.ops_a[1][0][0] = Complex::new(0.5, 0.0);
        assert!(matches!(
            file.load(&Tolerances::default()),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn load_rejects_wrong_format_tag_and_dim() {
        let mut file = GameFile::from_entry(&catalog::pd_quantum::<f64>());
        file.format = "dqg-game v2".into();
        assert!(file.load(&Tolerances::default()).unwrap_err().is_format());
        let mut file = GameFile::from_entry(&catalog::pd_quantum::<f64>());
        file.dim = 2;
        assert!(matches!(
            file.load(&Tolerances::default()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn preference_variant_tags() {
        let spec = PreferenceSpec::DistanceGlobal {
            gamma: StateVector::<f64>::basis(2, 0).unwrap(),
        };
        let text = serde_json::to_string(&PreferenceFile::from_spec(&spec)).unwrap();
        assert_eq!(
            text,
            r#"{"variant":"distance_global","gamma":[[1.0,0.0],[0.0,0.0]]}"#
        );
    }
}
