//! Fuzzy-sphere coordinates from n-dimensional SU(2) irreps.
//!
//! The generators use the standard `|j, m⟩` basis with `j = (n − 1)/2`:
//! `J₃ = diag(j, j − 1, …, −j)` and `J₁`, `J₂` built from the ladder
//! operators, `⟨m+1|J₊|m⟩ = √(j(j+1) − m(m+1))`. Coordinates are
//! `X_i = k J_i` with `k = 2/√(n² − 1)`, which puts `ΣX_i²` at the identity.
//! (Generators normalized as `2J_i` would need `k = 1/√(n² − 1)` instead;
//! both agree on `X_i = σ_i/√3` at `n = 2`.)

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub const MAX_DIMENSION: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuzzyError {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("dimension must be at most {MAX_DIMENSION}, got {0}")]
    DimensionTooLarge(usize),
    #[error("number of qubits must be at least 1")]
    NoQubits,
    #[error("2^{0} cells overflow the platform integer range")]
    CellCountOverflow(u32),
    #[error("matrix shapes differ: {0} vs {1}")]
    ShapeMismatch(usize, usize),
}

/// Dense n×n complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct MatN {
    n: usize,
    data: Vec<Complex64>,
}

impl MatN {
    pub fn zeros(n: usize) -> Self {
        MatN {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatN::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self, FuzzyError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(FuzzyError::ShapeMismatch(n, bad.len()));
        }
        Ok(MatN {
            n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.data.chunks(self.n)
    }

    pub fn scale(&self, s: Complex64) -> MatN {
        MatN {
            n: self.n,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn adjoint(&self) -> MatN {
        let mut out = MatN::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn commutator(&self, other: &MatN) -> MatN {
        &(self * other) - &(other * self)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &MatN) -> f64 {
        (self - other).max_abs()
    }
}

impl std::ops::Index<(usize, usize)> for MatN {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.n + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatN {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.n + c]
    }
}

impl Mul for &MatN {
    type Output = MatN;

    fn mul(self, rhs: &MatN) -> MatN {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = MatN::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * rhs[(k, c)];
                }
            }
        }
        out
    }
}

impl Add for &MatN {
    type Output = MatN;

    fn add(self, rhs: &MatN) -> MatN {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        MatN {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &MatN {
    type Output = MatN;

    fn sub(self, rhs: &MatN) -> MatN {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        MatN {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Serialize for MatN {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.rows())
    }
}

/// Generators `J₁, J₂, J₃` of the n-dimensional irrep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Su2Irrep {
    n: usize,
    #[serde(rename = "J")]
    generators: [MatN; 3],
}

fn check_dimension(n: usize) -> Result<(), FuzzyError> {
    if n < 2 {
        Err(FuzzyError::DimensionTooSmall(n))
    } else if n > MAX_DIMENSION {
        Err(FuzzyError::DimensionTooLarge(n))
    } else {
        Ok(())
    }
}

pub fn build_irrep(n: usize) -> Result<Su2Irrep, FuzzyError> {
    check_dimension(n)?;
    let j = (n as f64 - 1.0) / 2.0;
    let mut raise = MatN::zeros(n);
    let mut j3 = MatN::zeros(n);
    for r in 0..n {
        let m = j - r as f64;
        j3[(r, r)] = Complex64::new(m, 0.0);
        if r > 0 {
            // J+ |m⟩ = √(j(j+1) − m(m+1)) |m+1⟩, and |m+1⟩ sits at row r − 1
            raise[(r - 1, r)] = Complex64::new((j * (j + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
        }
    }
    let lower = raise.adjoint();
    let j1 = (&raise + &lower).scale(Complex64::new(0.5, 0.0));
    let j2 = (&raise - &lower).scale(Complex64::new(0.0, -0.5));
    Ok(Su2Irrep {
        n,
        generators: [j1, j2, j3],
    })
}

impl Su2Irrep {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[MatN; 3] {
        &self.generators
    }

    /// Spin `j = (n − 1)/2`.
    pub fn spin(&self) -> f64 {
        (self.n as f64 - 1.0) / 2.0
    }

    pub fn casimir(&self) -> MatN {
        sum_of_squares(&self.generators)
    }

    pub fn hermiticity_deviation(&self) -> f64 {
        self.generators
            .iter()
            .map(|g| g.max_abs_diff(&g.adjoint()))
            .fold(0.0, f64::max)
    }
}

fn sum_of_squares(ms: &[MatN; 3]) -> MatN {
    let [a, b, c] = ms;
    &(&(a * a) + &(b * b)) + &(c * c)
}

/// Max entrywise `|[J_i, J_j] − i ε_ijk J_k|` over all nine ordered pairs.
pub fn check_commutators(irrep: &Su2Irrep) -> f64 {
    commutator_deviation(&irrep.generators)
}

/// Same as [`check_commutators`] for an arbitrary generator triple.
pub fn commutator_deviation(generators: &[MatN; 3]) -> f64 {
    let n = generators[0].dim();
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let lhs = generators[i].commutator(&generators[j]);
            let rhs = match levi_civita(i, j) {
                Some((k, sign)) => generators[k].scale(Complex64::new(0.0, sign)),
                None => MatN::zeros(n),
            };
            worst = worst.max(lhs.max_abs_diff(&rhs));
        }
    }
    worst
}

/// `(k, ε_ijk)` for distinct `i, j`.
fn levi_civita(i: usize, j: usize) -> Option<(usize, f64)> {
    if i == j {
        return None;
    }
    let k = 3 - i - j;
    let sign = if (i, j) == (0, 1) || (i, j) == (1, 2) || (i, j) == (2, 0) {
        1.0
    } else {
        -1.0
    };
    Some((k, sign))
}

/// Unit-radius fuzzy sphere `X_i = k J_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyCoordinates {
    k: f64,
    irrep: Su2Irrep,
    coords: [MatN; 3],
}

/// `k = 2/√(n² − 1)`, the unit-radius parameter for spin-j generators.
pub fn noncommutativity(n: usize) -> f64 {
    let n = n as f64;
    2.0 / (n * n - 1.0).sqrt()
}

pub fn fuzzy_coordinates(n: usize) -> Result<FuzzyCoordinates, FuzzyError> {
    let irrep = build_irrep(n)?;
    let k = noncommutativity(n);
    let coords = irrep.generators.clone().map(|g| g.scale(Complex64::new(k, 0.0)));
    Ok(FuzzyCoordinates { k, irrep, coords })
}

impl FuzzyCoordinates {
    pub fn dim(&self) -> usize {
        self.irrep.n
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn irrep(&self) -> &Su2Irrep {
        &self.irrep
    }

    pub fn coords(&self) -> &[MatN; 3] {
        &self.coords
    }

    /// Max entrywise deviation of `X₁² + X₂² + X₃²` from the identity.
    pub fn radius_deviation(&self) -> f64 {
        sum_of_squares(&self.coords).max_abs_diff(&MatN::identity(self.dim()))
    }
}

impl Serialize for FuzzyCoordinates {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            n: usize,
            k: f64,
            #[serde(rename = "J")]
            j: &'a [MatN; 3],
            #[serde(rename = "X")]
            x: &'a [MatN; 3],
        }
        Wire {
            n: self.dim(),
            k: self.k,
            j: &self.irrep.generators,
            x: &self.coords,
        }
        .serialize(serializer)
    }
}

/// A register of `num_qubits` qubits viewed as a fuzzy sphere has `2^N`
/// cells.
pub fn cell_count(num_qubits: u32) -> Result<usize, FuzzyError> {
    if num_qubits == 0 {
        return Err(FuzzyError::NoQubits);
    }
    1usize
        .checked_shl(num_qubits)
        .ok_or(FuzzyError::CellCountOverflow(num_qubits))
}
