//! Seeded random states, unitaries and bases for sweeps and property checks.
//!
//! All generators draw from a caller-supplied RNG; [`rng_from_seed`] gives a
//! portable ChaCha stream so a seed reproduces the same values everywhere.

use num_complex::Complex;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::quantum::{HermitianObservable, Matrix, StateVector, UnitaryOp};
use crate::scalar::Real;

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex::new(T::lit(re), T::lit(im))
}

/// Uniformly distributed pure state.
pub fn random_state<T: Real, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> StateVector<T> {
    loop {
        let amps = (0..dim).map(|_| gaussian(rng)).collect();
        if let Ok(s) = StateVector::normalized(amps) {
            return s;
        }
    }
}

/// Haar-distributed unitary: Gram-Schmidt on the columns of a complex
/// Gaussian matrix.
pub fn random_unitary<T: Real, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> UnitaryOp<T> {
    let columns = orthonormal_columns(dim, rng);
    let rows = (0..dim)
        .map(|r| columns.iter().map(|c| c[r]).collect())
        .collect();
    UnitaryOp::from_matrix_unchecked(Matrix::from_rows(rows).expect("square"))
}

/// Random orthonormal basis as a list of states.
pub fn random_basis<T: Real, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<StateVector<T>> {
    orthonormal_columns(dim, rng)
        .into_iter()
        .map(StateVector::from_raw)
        .collect()
}

/// Observable with a random eigenbasis and eigenvalues drawn from
/// `[-scale, scale]`.
pub fn random_observable<T: Real, R: Rng + ?Sized>(
    dim: usize,
    scale: f64,
    rng: &mut R,
) -> HermitianObservable<T> {
    let basis = random_basis(dim, rng);
    let eigenvalues = (0..dim)
        .map(|_| T::lit(rng.random_range(-scale..=scale)))
        .collect();
    HermitianObservable::new(basis, eigenvalues).expect("orthonormal by construction")
}

fn orthonormal_columns<T: Real, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<Vec<Complex<T>>> {
    // Modified Gram-Schmidt, run twice per column for stability.
    let mut cols: Vec<Vec<Complex<T>>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v: Vec<Complex<T>> = (0..dim).map(|_| gaussian(rng)).collect();
        for _ in 0..2 {
            for c in &cols {
                let proj = c
                    .iter()
                    .zip(&v)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                        acc + a.conj() * b
                    });
                for (x, a) in v.iter_mut().zip(c) {
                    *x = *x - proj * a;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if norm > T::lit(1e-6) {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    cols
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::overlap2;

    #[test]
    fn unitaries_are_unitary() {
        let mut rng = rng_from_seed(1);
        for dim in 1..=8 {
            let u: UnitaryOp = random_unitary(dim, &mut rng);
            assert!(u.matrix().unitarity_deviation() < 1e-12, "dim {dim}");
        }
    }

    #[test]
    fn bases_are_orthonormal() {
        let mut rng = rng_from_seed(2);
        let basis: Vec<StateVector> = random_basis(6, &mut rng);
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((overlap2(a, b).unwrap() - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn seeds_reproduce() {
        let a: StateVector = random_state(4, &mut rng_from_seed(9));
        let b: StateVector = random_state(4, &mut rng_from_seed(9));
        assert_eq!(a, b);
    }
}
