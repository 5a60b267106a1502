//! Dense complex linear algebra for small state spaces.
//!
//! Matrices are stored row-major. Kronecker products take the first factor as
//! the slow index, so `|a> (x) |b>` has amplitude `a_i b_j` at `i * dim_b + j`.

use std::ops::Mul;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{clamp_unit, Real};

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T = f64> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex::new(T::one(), T::zero());
        }
        m
    }

    /// Build from rows. Every row must have as many entries as there are rows.
    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self { dim, data })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Complex::new(T::lit(x), T::zero()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.data[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<Complex<T>>> {
        self.data.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        check_dim(self.dim, rhs.dim)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] = out.data[i * n + j] + a * rhs.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        check_dim(self.dim, rhs.dim)?;
        Ok(Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        let (n, m) = (self.dim, rhs.dim);
        let dim = n * m;
        let mut out = Self::zeros(dim);
        for i in 0..n {
            for j in 0..n {
                let a = self.data[i * n + j];
                for k in 0..m {
                    for l in 0..m {
                        out.data[(i * m + k) * dim + (j * m + l)] = a * rhs.data[k * m + l];
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        check_dim(self.dim, v.len())?;
        let n = self.dim;
        Ok((0..n)
            .map(|i| {
                self.data[i * n..(i + 1) * n]
                    .iter()
                    .zip(v)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (a, x)| {
                        acc + a * x
                    })
            })
            .collect())
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Largest entrywise modulus of `self - rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> T {
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// `max |(M^dag M - I)_ij|`.
    pub fn unitarity_deviation(&self) -> T {
        let prod = self
            .adjoint()
            .matmul(self)
            .expect("adjoint has the same dimension");
        prod.max_abs_diff(&Self::identity(self.dim))
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        check_dim(self.dim, rhs.dim)?;
        Ok(Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Normalized complex amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T = f64> {
    amps: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    /// Validate amplitudes against the default normalization tolerance.
    pub fn new(amps: Vec<Complex<T>>) -> Result<Self> {
        Self::with_tol(amps, T::default_tol())
    }

    /// Validate amplitudes against `tol`. The amplitudes are stored as given.
    pub fn with_tol(amps: Vec<Complex<T>>, tol: T) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::EmptyDimension);
        }
        let norm2: T = amps.iter().map(|z| z.norm_sqr()).sum();
        let deviation = (norm2 - T::one()).abs();
        if deviation.is_nan() || deviation > tol {
            return Err(Error::NotNormalized {
                deviation: deviation.to_f64().unwrap_or(f64::NAN),
                tol: tol.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { amps })
    }

    /// Rescale arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amps: Vec<Complex<T>>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::EmptyDimension);
        }
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if !norm.is_finite() || norm <= T::zero() {
            return Err(Error::InvalidParameter("zero or non-finite vector".into()));
        }
        Ok(Self {
            amps: amps.into_iter().map(|z| z / norm).collect(),
        })
    }

    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::new(
            amps.iter()
                .map(|&x| Complex::new(T::lit(x), T::zero()))
                .collect(),
        )
    }

    /// Computational basis state `|k>` in dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        if k >= dim {
            return Err(Error::IndexOutOfRange { index: k, len: dim });
        }
        let mut amps = vec![Complex::new(T::zero(), T::zero()); dim];
        amps[k] = Complex::new(T::one(), T::zero());
        Ok(Self { amps })
    }

    /// Product state `|b_1 b_2 ... b_n>` of qubits, first bit most significant.
    pub fn qubits(bits: &[u8]) -> Result<Self> {
        let index = bits.iter().try_fold(0usize, |acc, &b| match b {
            0 | 1 => Ok(acc * 2 + b as usize),
            _ => Err(Error::InvalidParameter(format!("qubit value {b}"))),
        })?;
        Self::basis(1 << bits.len(), index)
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn into_amps(self) -> Vec<Complex<T>> {
        self.amps
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let amps = self
            .amps
            .iter()
            .flat_map(|a| other.amps.iter().map(move |b| a * b))
            .collect();
        Self { amps }
    }

    /// Multiply by the global phase `e^{i theta}`.
    pub fn with_phase(&self, theta: T) -> Self {
        let p = Complex::from_polar(T::one(), theta);
        Self {
            amps: self.amps.iter().map(|z| z * p).collect(),
        }
    }

    pub fn norm_sqr(&self) -> T {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    pub(crate) fn from_raw(amps: Vec<Complex<T>>) -> Self {
        Self { amps }
    }
}

/// Unitary operator on a `dim`-dimensional space.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryOp<T = f64> {
    mat: Matrix<T>,
}

impl<T: Real> UnitaryOp<T> {
    pub fn new(mat: Matrix<T>) -> Result<Self> {
        Self::with_tol(mat, T::default_tol())
    }

    pub fn with_tol(mat: Matrix<T>, tol: T) -> Result<Self> {
        let deviation = mat.unitarity_deviation();
        if deviation.is_nan() || deviation > tol {
            return Err(Error::NotUnitary {
                deviation: deviation.to_f64().unwrap_or(f64::NAN),
                tol: tol.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { mat })
    }

    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        Self::new(Matrix::from_rows(rows)?)
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            mat: Matrix::identity(dim),
        }
    }

    pub fn pauli_x() -> Self {
        Self::real(&[&[0.0, 1.0], &[1.0, 0.0]])
    }

    pub fn pauli_z() -> Self {
        Self::real(&[&[1.0, 0.0], &[0.0, -1.0]])
    }

    pub fn hadamard() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::real(&[&[h, h], &[h, -h]])
    }

    /// Real rotation `[[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]`.
    pub fn rotation_y(theta: T) -> Self {
        let two = T::lit(2.0);
        let (s, c) = (theta / two).sin_cos();
        let z = T::zero();
        Self {
            mat: Matrix {
                dim: 2,
                data: vec![
                    Complex::new(c, z),
                    Complex::new(-s, z),
                    Complex::new(s, z),
                    Complex::new(c, z),
                ],
            },
        }
    }

    /// `diag(e^{i phi}, e^{-i phi})`.
    pub fn phase_rotation(phi: T) -> Self {
        let z = Complex::new(T::zero(), T::zero());
        Self {
            mat: Matrix {
                dim: 2,
                data: vec![
                    Complex::from_polar(T::one(), phi),
                    z,
                    z,
                    Complex::from_polar(T::one(), -phi),
                ],
            },
        }
    }

    /// Diagonal unitary with the given phases.
    pub fn diagonal_phases(phases: &[T]) -> Self {
        let mut mat = Matrix::zeros(phases.len());
        for (k, &p) in phases.iter().enumerate() {
            mat.data[k * phases.len() + k] = Complex::from_polar(T::one(), p);
        }
        Self { mat }
    }

    fn real(rows: &[&[f64]]) -> Self {
        Self {
            mat: Matrix::from_real_rows(rows).expect("square literal"),
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.dim
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.mat
    }

    pub fn adjoint(&self) -> Self {
        Self {
            mat: self.mat.adjoint(),
        }
    }

    /// Product `self * rhs` (rhs acts first).
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        Ok(Self {
            mat: self.mat.matmul(&rhs.mat)?,
        })
    }

    pub fn tensor(&self, rhs: &Self) -> Self {
        Self {
            mat: self.mat.kron(&rhs.mat),
        }
    }

    pub(crate) fn from_matrix_unchecked(mat: Matrix<T>) -> Self {
        Self { mat }
    }
}

impl<T: Real> Mul for &UnitaryOp<T> {
    type Output = UnitaryOp<T>;

    /// Panics on dimension mismatch; use [`UnitaryOp::compose`] to get an error.
    fn mul(self, rhs: Self) -> UnitaryOp<T> {
        self.compose(rhs).expect("operator dimensions must agree")
    }
}

/// Hermitian observable given by an orthonormal eigenbasis and real
/// eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianObservable<T = f64> {
    basis: Vec<StateVector<T>>,
    eigenvalues: Vec<T>,
}

impl<T: Real> HermitianObservable<T> {
    pub fn new(basis: Vec<StateVector<T>>, eigenvalues: Vec<T>) -> Result<Self> {
        Self::with_tol(basis, eigenvalues, T::default_tol())
    }

    pub fn with_tol(basis: Vec<StateVector<T>>, eigenvalues: Vec<T>, tol: T) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::EmptyDimension);
        }
        if basis.len() != eigenvalues.len() {
            return Err(Error::EigenvalueCount {
                basis: basis.len(),
                values: eigenvalues.len(),
            });
        }
        let dim = basis.len();
        for (i, e) in basis.iter().enumerate() {
            check_dim(dim, e.dim())?;
            for (j, f) in basis.iter().enumerate().skip(i) {
                let target = if i == j { T::one() } else { T::zero() };
                let deviation = (overlap2(e, f)? - target).abs();
                if deviation.is_nan() || deviation > tol {
                    return Err(Error::NotOrthonormal {
                        i,
                        j,
                        deviation: deviation.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
        Ok(Self { basis, eigenvalues })
    }

    /// Observable diagonal in the computational basis.
    pub fn computational(eigenvalues: Vec<T>) -> Result<Self> {
        let dim = eigenvalues.len();
        let basis = (0..dim)
            .map(|k| StateVector::basis(dim, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { basis, eigenvalues })
    }

    /// Columns of `u` as eigenvectors.
    pub fn from_unitary_columns(u: &UnitaryOp<T>, eigenvalues: Vec<T>) -> Result<Self> {
        let n = u.dim();
        let basis = (0..n)
            .map(|c| StateVector::from_raw((0..n).map(|r| u.mat.get(r, c)).collect()))
            .collect();
        Self::new(basis, eigenvalues)
    }

    pub fn pauli_z() -> Self {
        Self::computational(vec![T::one(), -T::one()]).expect("dim 2")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn eigenbasis(&self) -> &[StateVector<T>] {
        &self.basis
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    /// Same eigenbasis with new eigenvalues.
    pub fn with_eigenvalues(&self, eigenvalues: Vec<T>) -> Result<Self> {
        if eigenvalues.len() != self.basis.len() {
            return Err(Error::EigenvalueCount {
                basis: self.basis.len(),
                values: eigenvalues.len(),
            });
        }
        Ok(Self {
            basis: self.basis.clone(),
            eigenvalues,
        })
    }

    /// Outcome probabilities `|<psi|e_k>|^2`.
    pub fn probabilities(&self, state: &StateVector<T>) -> Result<Vec<T>> {
        self.basis.iter().map(|e| overlap2(state, e)).collect()
    }

    pub fn expectation(&self, state: &StateVector<T>) -> Result<T> {
        Ok(self
            .probabilities(state)?
            .into_iter()
            .zip(&self.eigenvalues)
            .map(|(p, &l)| p * l)
            .sum())
    }

    /// `sum lambda^2 p - (sum lambda p)^2`, floored at zero.
    pub fn variance(&self, state: &StateVector<T>) -> Result<T> {
        let p = self.probabilities(state)?;
        let mean: T = p.iter().zip(&self.eigenvalues).map(|(&p, &l)| p * l).sum();
        let second: T = p
            .iter()
            .zip(&self.eigenvalues)
            .map(|(&p, &l)| p * l * l)
            .sum();
        Ok((second - mean * mean).max(T::zero()))
    }

    /// Dense matrix `sum_k lambda_k |e_k><e_k|`.
    pub fn matrix(&self) -> Matrix<T> {
        spectral_sum(
            &self.basis,
            self.eigenvalues.iter().map(|&l| Complex::new(l, T::zero())),
        )
    }

    pub fn tensor(&self, rhs: &Self) -> Self {
        let mut basis = Vec::with_capacity(self.dim() * rhs.dim());
        let mut eigenvalues = Vec::with_capacity(basis.capacity());
        for (e, &l) in self.basis.iter().zip(&self.eigenvalues) {
            for (f, &m) in rhs.basis.iter().zip(&rhs.eigenvalues) {
                basis.push(e.tensor(f));
                eigenvalues.push(l * m);
            }
        }
        Self { basis, eigenvalues }
    }
}

fn spectral_sum<T: Real>(
    basis: &[StateVector<T>],
    coeffs: impl Iterator<Item = Complex<T>>,
) -> Matrix<T> {
    let n = basis.len();
    let mut m = Matrix::zeros(n);
    for (e, c) in basis.iter().zip(coeffs) {
        for i in 0..n {
            let ci = c * e.amps[i];
            for j in 0..n {
                m.data[i * n + j] = m.data[i * n + j] + ci * e.amps[j].conj();
            }
        }
    }
    m
}

/// `<a|b>`, conjugating `a`.
pub fn inner_product<T: Real>(a: &StateVector<T>, b: &StateVector<T>) -> Result<Complex<T>> {
    check_dim(a.dim(), b.dim())?;
    Ok(a.amps
        .iter()
        .zip(&b.amps)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (x, y)| {
            acc + x.conj() * y
        }))
}

/// Squared overlap `|<a|b>|^2` clamped to `[0, 1]`.
pub fn overlap2<T: Real>(a: &StateVector<T>, b: &StateVector<T>) -> Result<T> {
    Ok(clamp_unit(inner_product(a, b)?.norm_sqr()))
}

/// `u |s>`, renormalized.
pub fn apply<T: Real>(u: &UnitaryOp<T>, s: &StateVector<T>) -> Result<StateVector<T>> {
    let amps = u.mat.mul_vec(&s.amps)?;
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
    Ok(StateVector::from_raw(
        amps.into_iter().map(|z| z / norm).collect(),
    ))
}

pub fn tensor<T: Real>(u1: &UnitaryOp<T>, u2: &UnitaryOp<T>) -> UnitaryOp<T> {
    u1.tensor(u2)
}

/// Frobenius norm of `ab - ba`.
pub fn commutator_norm<T: Real>(a: &UnitaryOp<T>, b: &UnitaryOp<T>) -> Result<T> {
    let ab = a.mat.matmul(&b.mat)?;
    let ba = b.mat.matmul(&a.mat)?;
    Ok(ab.sub(&ba)?.frobenius_norm())
}

/// `exp(-i h t)` assembled from the stored eigendecomposition.
pub fn evolve<T: Real>(h: &HermitianObservable<T>, t: T) -> UnitaryOp<T> {
    let phases = h
        .eigenvalues
        .iter()
        .map(|&l| Complex::from_polar(T::one(), -l * t));
    UnitaryOp::from_matrix_unchecked(spectral_sum(&h.basis, phases))
}

/// True iff the states agree up to a global phase: `overlap2 >= 1 - tol`.
pub fn equal_up_to_phase<T: Real>(a: &StateVector<T>, b: &StateVector<T>, tol: T) -> bool {
    match overlap2(a, b) {
        Ok(o) => o >= T::one() - tol,
        Err(_) => false,
    }
}
