//! Discrete quantum games: finite strategy sets of unitary operations acting
//! on a shared input state, ranked by quantum preference rules, and solved for
//! pure-strategy Nash equilibria.
//!
//! Every type is generic over the real scalar (`f64` or `f32`). The defaulted
//! type parameters and the aliases below cover the common `f64` case.

pub mod catalog;
pub mod checks;
pub mod equilibrium;
pub mod error;
pub mod format;
pub mod game;
pub mod preference;
pub mod quantum;
pub mod random;
pub mod scalar;

pub use equilibrium::{
    count_games, enumerate_orderings, pure_nash, reverse_engineer_distance, solve, solve_detailed,
    Equilibrium, EquilibriumResult, OrderingCount, ReverseMatch, Solution,
};
pub use error::{Error, Result};
pub use game::{
    build_outputs, order_sensitivity, GameDefinition, OrderReport, OutputTable, PlayOrder, Profile,
    ProfileLabel,
};
pub use preference::{
    distance_pref_global, distance_pref_local, induced_preference, info_pref, local_optimum,
    shannon_entropy, state_order_pref, strictly_competitive_weights, variance_pref, OutcomeWeights,
    Player, Preference, PreferenceSpec,
};
pub use quantum::{
    apply, commutator_norm, equal_up_to_phase, evolve, inner_product, overlap2, tensor,
    HermitianObservable, Matrix, StateVector, UnitaryOp,
};
pub use scalar::{Real, Tolerances, NORM_TOL, TIE_TOL, UNITARY_TOL};

pub use num_complex::Complex;

pub type C64 = Complex<f64>;
pub type C32 = Complex<f32>;

pub type StateVector64 = StateVector<f64>;
pub type StateVector32 = StateVector<f32>;
pub type UnitaryOp64 = UnitaryOp<f64>;
pub type UnitaryOp32 = UnitaryOp<f32>;
pub type Observable64 = HermitianObservable<f64>;
pub type Observable32 = HermitianObservable<f32>;
pub type GameDefinition64 = GameDefinition<f64>;
pub type GameDefinition32 = GameDefinition<f32>;
pub type Preference64 = Preference<f64>;
pub type Preference32 = Preference<f32>;
