//! Pure-strategy Nash equilibria over a pair of weak orderings.

use itertools::Itertools;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::game::{build_outputs, GameDefinition, OutputTable, Profile};
use crate::preference::{distance_pref_global, Player, Preference, PreferenceSpec};
use crate::quantum::StateVector;
use crate::scalar::{Real, Tolerances};

/// Default bound on ordering pairs visited by [`enumerate_orderings`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct Equilibrium<T = f64> {
    pub profile: Profile,
    /// Output state at the profile, when solved from a game.
    pub state: Option<StateVector<T>>,
    /// `(A, B)` cardinal scores, when both preferences carry them.
    pub payoffs: Option<(T, T)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumResult<T = f64> {
    pub equilibria: Vec<Equilibrium<T>>,
}

impl<T: Real> EquilibriumResult<T> {
    pub fn exists(&self) -> bool {
        !self.equilibria.is_empty()
    }

    pub fn profiles(&self) -> Vec<Profile> {
        self.equilibria.iter().map(|e| e.profile).collect()
    }

    /// The equilibrium when there is exactly one.
    pub fn unique(&self) -> Option<&Equilibrium<T>> {
        match self.equilibria.as_slice() {
            [only] => Some(only),
            _ => None,
        }
    }
}

/// Profiles from which neither player has a strictly better unilateral
/// deviation, in row-major order.
pub fn pure_nash<T: Real>(pa: &Preference<T>, pb: &Preference<T>) -> Result<EquilibriumResult<T>> {
    if pa.shape() != pb.shape() {
        return Err(Error::ShapeMismatch {
            a: pa.shape(),
            b: pb.shape(),
        });
    }
    let (m, n) = pa.shape();
    // A moves along a column, B along a row.
    let best_a: Vec<usize> = (0..n)
        .map(|j| (0..m).map(|i| pa.rank((i, j))).min().expect("m >= 1"))
        .collect();
    let best_b: Vec<usize> = (0..m)
        .map(|i| (0..n).map(|j| pb.rank((i, j))).min().expect("n >= 1"))
        .collect();
    let equilibria = (0..m)
        .cartesian_product(0..n)
        .filter(|&(i, j)| pa.rank((i, j)) == best_a[j] && pb.rank((i, j)) == best_b[i])
        .map(|p| Equilibrium {
            profile: p,
            state: None,
            payoffs: pa.cardinal(p).zip(pb.cardinal(p)),
        })
        .collect();
    Ok(EquilibriumResult { equilibria })
}

/// Outputs, both preferences, and the equilibria they produce.
#[derive(Debug, Clone)]
pub struct Solution<T = f64> {
    pub outputs: OutputTable<T>,
    pub pref_a: Preference<T>,
    pub pref_b: Preference<T>,
    pub result: EquilibriumResult<T>,
}

pub fn solve_detailed<T: Real>(
    g: &GameDefinition<T>,
    spec_a: &PreferenceSpec<T>,
    spec_b: &PreferenceSpec<T>,
    tol: &Tolerances<T>,
) -> Result<Solution<T>> {
    let outputs = build_outputs(g)?;
    let pref_a = spec_a.evaluate(&outputs, Player::A, tol)?;
    let pref_b = spec_b.evaluate(&outputs, Player::B, tol)?;
    let mut result = pure_nash(&pref_a, &pref_b)?;
    for eq in &mut result.equilibria {
        eq.state = Some(outputs.get(eq.profile).clone());
    }
    Ok(Solution {
        outputs,
        pref_a,
        pref_b,
        result,
    })
}

/// Build outputs, evaluate both preference rules, and find the equilibria.
pub fn solve<T: Real>(
    g: &GameDefinition<T>,
    spec_a: &PreferenceSpec<T>,
    spec_b: &PreferenceSpec<T>,
    tol: &Tolerances<T>,
) -> Result<EquilibriumResult<T>> {
    solve_detailed(g, spec_a, spec_b, tol).map(|s| s.result)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReverseMatch<T = f64> {
    /// Position in the candidate list.
    pub index: usize,
    pub pi_a: StateVector<T>,
    pub pi_b: StateVector<T>,
}

/// Candidate target-state pairs `(pi_A, pi_B)` whose distance preferences make
/// `target` the unique equilibrium of `g`.
pub fn reverse_engineer_distance<T: Real>(
    g: &GameDefinition<T>,
    target: Profile,
    candidates: &[(StateVector<T>, StateVector<T>)],
    tol: &Tolerances<T>,
) -> Result<Vec<ReverseMatch<T>>> {
    let (m, n) = g.shape();
    if target.0 >= m || target.1 >= n {
        return Err(Error::IndexOutOfRange {
            index: target.0 * n + target.1,
            len: m * n,
        });
    }
    let outputs = build_outputs(g)?;
    let mut accepted = Vec::new();
    for (index, (pi_a, pi_b)) in candidates.iter().enumerate() {
        let pa = distance_pref_global(&outputs, pi_a, Player::A, tol.tie)?;
        let pb = distance_pref_global(&outputs, pi_b, Player::B, tol.tie)?;
        let result = pure_nash(&pa, &pb)?;
        if result.unique().map(|e| e.profile) == Some(target) {
            accepted.push(ReverseMatch {
                index,
                pi_a: pi_a.clone(),
                pi_b: pi_b.clone(),
            });
        }
    }
    Ok(accepted)
}

/// `((m n)!)^2`: the number of pairs of strict orderings of the `m n` outputs.
pub fn count_games(m: usize, n: usize) -> BigUint {
    let f: BigUint = (1..=(m * n) as u64).map(BigUint::from).product();
    &f * &f
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderingCount {
    /// Ordering pairs visited, `((m n)!)^2`.
    pub pairs: u64,
    /// Pairs whose unique equilibrium is the target.
    pub count: u64,
    /// First such pair found, as row-major rank grids for A and B.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

/// Brute force over every pair of strict orderings of an `m x n` grid.
pub fn enumerate_orderings(m: usize, n: usize, target: Profile, cap: u64) -> Result<OrderingCount> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyStrategySet);
    }
    if target.0 >= m || target.1 >= n {
        return Err(Error::IndexOutOfRange {
            index: target.0 * n + target.1,
            len: m * n,
        });
    }
    let needed = count_games(m, n);
    if needed > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            needed: needed.to_string(),
            cap,
        });
    }
    let k = m * n;
    let orderings: Vec<Preference<f64>> = (0..k)
        .permutations(k)
        .map(|ranks| Preference::from_ranks(Player::A, (m, n), ranks).expect("permutation"))
        .collect();
    let mut out = OrderingCount {
        pairs: 0,
        count: 0,
        witness: None,
    };
    for pa in &orderings {
        for pb in &orderings {
            out.pairs += 1;
            let result = pure_nash(pa, pb)?;
            if result.unique().map(|e| e.profile) == Some(target) {
                out.count += 1;
                if out.witness.is_none() {
                    out.witness = Some((pa.ranks().to_vec(), pb.ranks().to_vec()));
                }
            }
        }
    }
    Ok(out)
}
