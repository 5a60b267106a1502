//! Ready-made games: quantum Prisoner's Dilemma, EWL effective operations,
//! time evolution as a game, two games sharing output-state preferences, and
//! supporting measurements.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::game::{GameDefinition, OutputTable, PlayOrder, Profile};
use crate::preference::{OutcomeWeights, Player, PreferenceSpec};
use crate::quantum::{apply, evolve, overlap2, HermitianObservable, StateVector, UnitaryOp};
use crate::random::{random_unitary, rng_from_seed};
use crate::scalar::Real;

/// Seed of the default arbitrary unitary in [`two_games`].
pub const DEFAULT_ALPHA_SEED: u64 = 0x5eed_0003;

/// Names accepted by [`by_name`].
pub const CATALOG_NAMES: &[&str] = &[
    "pd",
    "ewl-classical",
    "ewl",
    "time-evolution",
    "two-games-a",
    "two-games-b",
];

/// Known equilibrium of a catalog game.
#[derive(Debug, Clone, PartialEq)]
pub struct Expected<T = f64> {
    pub profile: Profile,
    pub state: StateVector<T>,
    /// A's preference over profiles, most preferred first, when it is part of
    /// the example.
    pub profile_order_a: Option<Vec<Profile>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry<T = f64> {
    pub name: String,
    pub game: GameDefinition<T>,
    pub pref_a: PreferenceSpec<T>,
    pub pref_b: PreferenceSpec<T>,
    pub expected: Option<Expected<T>>,
}

/// Flip on qubit `which` (0 = first particle) of a two-qubit register.
pub fn flip<T: Real>(which: usize) -> UnitaryOp<T> {
    let x = UnitaryOp::pauli_x();
    let i = UnitaryOp::identity(2);
    if which == 0 {
        x.tensor(&i)
    } else {
        i.tensor(&x)
    }
}

/// Computational basis of two qubits with outcome labels `0..4`.
pub fn spin_z_measurement<T: Real>() -> HermitianObservable<T> {
    HermitianObservable::computational((0..4).map(|k| T::lit(k as f64)).collect()).expect("dim 4")
}

/// `(3,3), (0,5), (5,0), (1,1)` on `|00>, |01>, |10>, |11>`.
pub fn pd_weights<T: Real>() -> OutcomeWeights<T> {
    OutcomeWeights::new(
        [(3.0, 3.0), (0.0, 5.0), (5.0, 0.0), (1.0, 1.0)]
            .iter()
            .map(|&(a, b)| (T::lit(a), T::lit(b)))
            .collect(),
    )
}

fn measurement_specs<T: Real>(
    m: &HermitianObservable<T>,
    w: &OutcomeWeights<T>,
) -> (PreferenceSpec<T>, PreferenceSpec<T>) {
    let spec = |player| PreferenceSpec::Measurement {
        observable: m.clone(),
        weights: w.column(player),
    };
    (spec(Player::A), spec(Player::B))
}

/// Prisoner's Dilemma on two spin-1/2 particles: identity or flip on one's
/// own particle, spin-z measurement with the usual payoffs.
pub fn pd_quantum<T: Real>() -> CatalogEntry<T> {
    let i4 = UnitaryOp::identity(4);
    let game = GameDefinition::new(
        StateVector::qubits(&[0, 0]).expect("two qubits"),
        vec![i4.clone(), flip(0)],
        vec![i4, flip(1)],
        PlayOrder::BFirst,
    )
    .expect("consistent dims");
    let (pref_a, pref_b) = measurement_specs(&spin_z_measurement(), &pd_weights());
    CatalogEntry {
        name: "pd".into(),
        game,
        pref_a,
        pref_b,
        expected: Some(Expected {
            profile: (1, 1),
            state: StateVector::qubits(&[1, 1]).expect("two qubits"),
            profile_order_a: None,
        }),
    }
}

/// `exp(i gamma X(x)X / 2) = cos(gamma/2) I + i sin(gamma/2) X(x)X`.
pub fn entangler<T: Real>(gamma: T) -> UnitaryOp<T> {
    let two = T::lit(2.0);
    let (s, co) = (gamma / two).sin_cos();
    let xx = UnitaryOp::<T>::pauli_x().tensor(&UnitaryOp::pauli_x());
    let mat = UnitaryOp::<T>::identity(4)
        .matrix()
        .scale(Complex::new(co, T::zero()))
        .add(&xx.matrix().scale(Complex::new(T::zero(), s)))
        .expect("dim 4");
    UnitaryOp::new(mat).expect("entangler is unitary")
}

/// EWL protocol written as effective joint operations
/// `E^dag (U (x) I) E` for A and `E^dag (I (x) U) E` for B.
pub fn ewl_game<T: Real>(
    gamma: T,
    grid_a: &[UnitaryOp<T>],
    grid_b: &[UnitaryOp<T>],
) -> Result<CatalogEntry<T>> {
    if !(gamma >= T::zero() && gamma <= T::FRAC_PI_2()) {
        return Err(Error::InvalidParameter(format!(
            "gamma = {gamma} outside [0, pi/2]"
        )));
    }
    if grid_a.is_empty() || grid_b.is_empty() {
        return Err(Error::EmptyStrategySet);
    }
    if let Some(u) = grid_a.iter().chain(grid_b).find(|u| u.dim() != 2) {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: u.dim(),
        });
    }
    let e = entangler(gamma);
    let e_inv = e.adjoint();
    let i2 = UnitaryOp::identity(2);
    let effective = |local: UnitaryOp<T>| &(&e_inv * &local) * &e;
    let ops_a = grid_a.iter().map(|u| effective(u.tensor(&i2))).collect();
    let ops_b = grid_b.iter().map(|u| effective(i2.tensor(u))).collect();
    let game = GameDefinition::new(
        StateVector::qubits(&[0, 0])?,
        ops_a,
        ops_b,
        PlayOrder::BFirst,
    )?;
    let (pref_a, pref_b) = measurement_specs(&spin_z_measurement(), &pd_weights());
    Ok(CatalogEntry {
        name: "ewl".into(),
        game,
        pref_a,
        pref_b,
        expected: None,
    })
}

/// Twelve single-qubit strategies with real matrices: `I`, `X`, `H` and
/// `R_y(k pi / 6)` for `k = +-1..`.
pub fn ewl_real_grid<T: Real>() -> Vec<UnitaryOp<T>> {
    let mut grid = vec![
        UnitaryOp::identity(2),
        UnitaryOp::pauli_x(),
        UnitaryOp::hadamard(),
    ];
    let step = T::PI() / T::lit(6.0);
    for k in 1..=5 {
        grid.push(UnitaryOp::rotation_y(step * T::lit(k as f64)));
    }
    for k in 1..=4 {
        grid.push(UnitaryOp::rotation_y(-step * T::lit(k as f64)));
    }
    grid
}

/// `|Phi+>, |Phi->, |Psi+>, |Psi->`.
pub fn bell_states<T: Real>() -> Vec<StateVector<T>> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    [
        [h, 0.0, 0.0, h],
        [h, 0.0, 0.0, -h],
        [0.0, h, h, 0.0],
        [0.0, h, -h, 0.0],
    ]
    .iter()
    .map(|a| StateVector::from_real(a).expect("normalized"))
    .collect()
}

/// Eigenvalues of `dh` expressed in `h`'s eigenbasis order.
fn shared_eigenvalues<T: Real>(
    h: &HermitianObservable<T>,
    dh: &HermitianObservable<T>,
) -> Result<Vec<T>> {
    if h.dim() != dh.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: dh.dim(),
        });
    }
    let tol = T::default_tol();
    let mut values = vec![None; h.dim()];
    for (index, (f, &mu)) in dh.eigenbasis().iter().zip(dh.eigenvalues()).enumerate() {
        let k = h
            .eigenbasis()
            .iter()
            .position(|e| overlap2(e, f).is_ok_and(|o| o >= T::one() - tol))
            .ok_or(Error::MismatchedEigenbasis { index })?;
        if values[k].replace(mu).is_some() {
            return Err(Error::MismatchedEigenbasis { index });
        }
    }
    Ok(values.into_iter().map(|v| v.expect("bijection")).collect())
}

/// Operation sets `{I, exp(-i t (H + dH)/2)}` for A and
/// `{I, exp(-i t (H - dH)/2)}` for B; `h` and `dh` must share an eigenbasis.
/// Preferences: A ranks `psi_+ > psi(t) > psi(0) > psi_-`, B ranks
/// `psi_- > psi(0) > psi(t) > psi_+`, whose unique equilibrium is `psi(t)`.
pub fn time_evolution_game<T: Real>(
    h: &HermitianObservable<T>,
    dh: &HermitianObservable<T>,
    t: T,
    psi0: &StateVector<T>,
) -> Result<CatalogEntry<T>> {
    let dh_vals = shared_eigenvalues(h, dh)?;
    let two = T::lit(2.0);
    let plus = h.with_eigenvalues(
        h.eigenvalues()
            .iter()
            .zip(&dh_vals)
            .map(|(&a, &b)| (a + b) / two)
            .collect(),
    )?;
    let minus = h.with_eigenvalues(
        h.eigenvalues()
            .iter()
            .zip(&dh_vals)
            .map(|(&a, &b)| (a - b) / two)
            .collect(),
    )?;
    let (u_plus, u_minus) = (evolve(&plus, t), evolve(&minus, t));
    let id = UnitaryOp::identity(h.dim());
    let game = GameDefinition::new(
        psi0.clone(),
        vec![id.clone(), u_plus.clone()],
        vec![id, u_minus.clone()],
        PlayOrder::BFirst,
    )?;
    let psi_plus = apply(&u_plus, psi0)?;
    let psi_minus = apply(&u_minus, psi0)?;
    let psi_t = apply(&evolve(h, t), psi0)?;
    let pref_a = PreferenceSpec::StateOrder {
        states: vec![
            psi_plus.clone(),
            psi_t.clone(),
            psi0.clone(),
            psi_minus.clone(),
        ],
    };
    let pref_b = PreferenceSpec::StateOrder {
        states: vec![psi_minus, psi0.clone(), psi_t.clone(), psi_plus],
    };
    Ok(CatalogEntry {
        name: "time-evolution".into(),
        game,
        pref_a,
        pref_b,
        expected: Some(Expected {
            profile: (1, 1),
            state: psi_t,
            profile_order_a: None,
        }),
    })
}

/// Parameters of the default single-qubit time-evolution game:
/// `H = 0.2 Z`, `dH = Z`, `t = 0.8`, `psi(0) = |+>`.
pub fn time_evolution_default_params<T: Real>() -> (
    HermitianObservable<T>,
    HermitianObservable<T>,
    T,
    StateVector<T>,
) {
    let h = HermitianObservable::computational(vec![T::lit(0.2), T::lit(-0.2)]).expect("dim 2");
    let dh = HermitianObservable::pauli_z();
    let h2 = std::f64::consts::FRAC_1_SQRT_2;
    let psi0 = StateVector::from_real(&[h2, h2]).expect("normalized");
    (h, dh, T::lit(0.8), psi0)
}

pub fn time_evolution_default<T: Real>() -> CatalogEntry<T> {
    let (h, dh, t, psi0) = time_evolution_default_params();
    time_evolution_game(&h, &dh, t, &psi0).expect("valid defaults")
}

/// Fixed pseudo-random two-qubit unitary used when no `alpha` is supplied.
pub fn default_alpha<T: Real>() -> UnitaryOp<T> {
    random_unitary(4, &mut rng_from_seed(DEFAULT_ALPHA_SEED))
}

/// Two games with the same preferences over output states
/// (A: `|00> > |01> > |10> > |11>`, B the reverse) but different operation
/// sets. The first uses `{I, F1} x {I, F2}`; the second uses
/// `{alpha, F2 alpha} x {alpha^-1, alpha^-1 F1}` so that `alpha_2 beta_1`
/// yields `|01>` and `alpha_1 beta_2` yields `|10>`.
pub fn two_games<T: Real>(
    alpha: Option<UnitaryOp<T>>,
) -> Result<(CatalogEntry<T>, CatalogEntry<T>)> {
    let alpha = alpha.unwrap_or_else(default_alpha);
    if alpha.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: alpha.dim(),
        });
    }
    let basis: Vec<StateVector<T>> = [[0, 0], [0, 1], [1, 0], [1, 1]]
        .iter()
        .map(|b| StateVector::qubits(b).expect("two qubits"))
        .collect();
    let pref_a = PreferenceSpec::StateOrder {
        states: basis.clone(),
    };
    let pref_b = PreferenceSpec::StateOrder {
        states: basis.iter().rev().cloned().collect(),
    };
    let input = basis[0].clone();
    let (f1, f2) = (flip::<T>(0), flip::<T>(1));
    let i4 = UnitaryOp::identity(4);

    let first = CatalogEntry {
        name: "two-games-a".into(),
        game: GameDefinition::new(
            input.clone(),
            vec![i4.clone(), f1.clone()],
            vec![i4, f2.clone()],
            PlayOrder::BFirst,
        )?,
        pref_a: pref_a.clone(),
        pref_b: pref_b.clone(),
        expected: Some(Expected {
            profile: (0, 1),
            state: basis[1].clone(),
            profile_order_a: Some(vec![(0, 0), (0, 1), (1, 0), (1, 1)]),
        }),
    };

    let alpha_inv = alpha.adjoint();
    let second = CatalogEntry {
        name: "two-games-b".into(),
        game: GameDefinition::new(
            input,
            vec![alpha.clone(), &f2 * &alpha],
            vec![alpha_inv.clone(), &alpha_inv * &f1],
            PlayOrder::BFirst,
        )?,
        pref_a,
        pref_b,
        expected: Some(Expected {
            profile: (0, 1),
            state: basis[2].clone(),
            profile_order_a: Some(vec![(0, 0), (1, 0), (0, 1), (1, 1)]),
        }),
    };
    Ok((first, second))
}

/// Single-qubit outputs `a|0> + b|1>`, `b|0> - a|1>`, `c|0> + d|1>` with
/// `d = sqrt(1 - c^2)`, as a three-row table, and the preferred state `|0>`.
pub fn p1p2_example<T: Real>(a: T, b: T, c: T) -> Result<(OutputTable<T>, StateVector<T>)> {
    let (a2, b2, c2) = (a * a, b * b, c * c);
    if (a2 + b2 - T::one()).abs() > T::default_tol() {
        return Err(Error::InvalidParameter("a^2 + b^2 must equal 1".into()));
    }
    if !(a2 > b2 && b2 > c2) {
        return Err(Error::InvalidParameter("need a^2 > b^2 > c^2".into()));
    }
    let d = (T::one() - c2).sqrt();
    let real =
        |x: T, y: T| StateVector::new(vec![Complex::new(x, T::zero()), Complex::new(y, T::zero())]);
    let outputs = OutputTable::column(vec![real(a, b)?, real(b, -a)?, real(c, d)?])?;
    Ok((outputs, StateVector::basis(2, 0)?))
}

/// Spin measured at angle `theta` from z on both qubits. Per qubit the
/// eigenstates are `cos(theta/2)|0> + sin(theta/2)|1>` and
/// `-sin(theta/2)|0> + cos(theta/2)|1>`; outcome labels are `0..4`.
pub fn rotated_measurement<T: Real>(theta: T) -> HermitianObservable<T> {
    let (s, co) = (theta / T::lit(2.0)).sin_cos();
    let z = T::zero();
    let up = StateVector::new(vec![Complex::new(co, z), Complex::new(s, z)]).expect("unit");
    let down = StateVector::new(vec![Complex::new(-s, z), Complex::new(co, z)]).expect("unit");
    let single =
        HermitianObservable::new(vec![up, down], vec![T::zero(), T::one()]).expect("orthonormal");
    // Labels 0..4 in the order |00>, |01>, |10>, |11>.
    let pair = single.tensor(&single);
    pair.with_eigenvalues((0..4).map(|k| T::lit(k as f64)).collect())
        .expect("dim 4")
}

/// Two observables with mutually unbiased eigenbases: the computational basis
/// and its Hadamard transform (`H` on one qubit, `H (x) H` on two).
/// Eigenvalues are `N-1, N-3, ..., 1-N`.
pub fn mub_pair<T: Real>(dim: usize) -> Result<(HermitianObservable<T>, HermitianObservable<T>)> {
    let hadamard = match dim {
        2 => UnitaryOp::hadamard(),
        4 => UnitaryOp::hadamard().tensor(&UnitaryOp::hadamard()),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "mutually unbiased pair supported for dim 2 or 4, got {dim}"
            )))
        }
    };
    let values: Vec<T> = (0..dim)
        .map(|k| T::lit(dim as f64 - 1.0 - 2.0 * k as f64))
        .collect();
    let computational = HermitianObservable::computational(values.clone())?;
    let conjugate = HermitianObservable::from_unitary_columns(&hadamard, values)?;
    Ok((computational, conjugate))
}

/// Catalog entry by CLI name.
pub fn by_name(name: &str) -> Result<CatalogEntry<f64>> {
    match name {
        "pd" => Ok(pd_quantum()),
        "ewl-classical" => {
            let grid = vec![UnitaryOp::identity(2), UnitaryOp::pauli_x()];
            let mut e = ewl_game(0.0, &grid, &grid)?;
            e.name = "ewl-classical".into();
            e.expected = pd_quantum::<f64>().expected;
            Ok(e)
        }
        "ewl" => {
            let grid = ewl_real_grid();
            ewl_game(std::f64::consts::FRAC_PI_2, &grid, &grid)
        }
        "time-evolution" => Ok(time_evolution_default()),
        "two-games-a" => Ok(two_games(None)?.0),
        "two-games-b" => Ok(two_games(None)?.1),
        other => Err(Error::InvalidParameter(format!(
            "unknown catalog entry '{other}' (known: {})",
            CATALOG_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::build_outputs;
    use crate::quantum::{commutator_norm, equal_up_to_phase};

    #[test]
    fn entangler_at_zero_is_identity() {
        let e = entangler(0.0);
        assert!(e.matrix().max_abs_diff(UnitaryOp::identity(4).matrix()) < 1e-15);
    }

    #[test]
    fn ewl_rejects_bad_parameters() {
        let grid = vec![UnitaryOp::identity(2)];
        assert!(ewl_game(2.0, &grid, &grid).is_err());
        assert!(ewl_game(-0.1, &grid, &grid).is_err());
        assert!(ewl_game(0.5, &[], &grid).is_err());
        assert!(ewl_game(0.5, &[UnitaryOp::identity(4)], &grid).is_err());
    }

    #[test]
    fn ewl_effective_ops_commute() {
        let grid = ewl_real_grid();
        let e = ewl_game(0.7, &grid, &grid).unwrap();
        for a in e.game.ops_a() {
            for b in e.game.ops_b() {
                assert!(commutator_norm(a, b).unwrap() < 1e-9);
            }
        }
    }

    #[test]
    fn grid_has_twelve_strategies() {
        assert_eq!(ewl_real_grid::<f64>().len(), 12);
    }

    #[test]
    fn phase_strategy_reaches_a_bell_state() {
        // Outside the real grid: diag(e^{i pi/4}, e^{-i pi/4}) on A's qubit
        // turns |00> into (|00> + |11>)/sqrt 2 at full entanglement.
        let g = ewl_game(
            std::f64::consts::FRAC_PI_2,
            &[UnitaryOp::phase_rotation(std::f64::consts::FRAC_PI_4)],
            &[UnitaryOp::identity(2)],
        )
        .unwrap();
        let out = build_outputs(&g.game).unwrap();
        assert!(equal_up_to_phase(out.get((0, 0)), &bell_states()[0], 1e-12));
    }

    #[test]
    fn rotated_measurement_limits() {
        let m0 = rotated_measurement(0.0);
        for (k, e) in m0.eigenbasis().iter().enumerate() {
            assert!(equal_up_to_phase(
                e,
                &StateVector::basis(4, k).unwrap(),
                1e-15
            ));
        }
        let m = rotated_measurement(std::f64::consts::FRAC_PI_2);
        for e in m.eigenbasis() {
            for k in 0..4 {
                let o = overlap2(e, &StateVector::basis(4, k).unwrap()).unwrap();
                assert!((o - 0.25).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn mub_pairs_are_unbiased() {
        for dim in [2, 4] {
            let (ma, mb) = mub_pair::<f64>(dim).unwrap();
            for e in ma.eigenbasis() {
                for f in mb.eigenbasis() {
                    let o = overlap2(e, f).unwrap();
                    assert!((o - 1.0 / dim as f64).abs() < 1e-9);
                }
            }
        }
        assert!(mub_pair::<f64>(3).is_err());
    }

    #[test]
    fn time_evolution_requires_shared_basis() {
        let (h, _, t, psi0) = time_evolution_default_params::<f64>();
        let (_, x) = mub_pair::<f64>(2).unwrap();
        assert_eq!(
            time_evolution_game(&h, &x, t, &psi0),
            Err(Error::MismatchedEigenbasis { index: 0 })
        );
    }

    #[test]
    fn time_evolution_at_zero_time() {
        let (h, dh, _, psi0) = time_evolution_default_params::<f64>();
        let e = time_evolution_game(&h, &dh, 0.0, &psi0).unwrap();
        for (_, s) in build_outputs(&e.game).unwrap().iter() {
            assert!(equal_up_to_phase(s, &psi0, 1e-12));
        }
    }

    #[test]
    fn time_evolution_ops_multiply_to_full_evolution() {
        let (h, _, t, _) = time_evolution_default_params::<f64>();
        let e = time_evolution_default::<f64>();
        let product = &e.game.ops_a()[1] * &e.game.ops_b()[1];
        assert!(product.matrix().max_abs_diff(evolve(&h, t).matrix()) < 1e-12);
    }

    #[test]
    fn second_game_outputs() {
        let (_, b) = two_games::<f64>(None).unwrap();
        let out = build_outputs(&b.game).unwrap();
        let want = [[0, 0], [1, 0], [0, 1], [1, 1]];
        for ((p, s), bits) in out.iter().zip(want) {
            assert!(
                equal_up_to_phase(s, &StateVector::qubits(&bits).unwrap(), 1e-12),
                "profile {p:?}"
            );
        }
    }

    #[test]
    fn p1p2_constraints() {
        assert!(p1p2_example(0.8, 0.6, 0.5).is_ok());
        assert!(p1p2_example(0.8, 0.5, 0.4).is_err());
        assert!(p1p2_example(0.6, 0.8, 0.5).is_err());
        assert!(p1p2_example(0.8, 0.6, 0.7).is_err());
    }

    #[test]
    fn catalog_names_resolve() {
        for name in CATALOG_NAMES {
            assert_eq!(by_name(name).unwrap().name, *name);
        }
        assert!(by_name("chicken").is_err());
    }
}
