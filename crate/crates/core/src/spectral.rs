//! Inertia and spectra of adjacency matrices.
//!
//! [`inertia`] is exact: the adjacency matrix is diagonalized by congruence
//! over the rationals and the signs of the diagonal are counted. Arithmetic
//! runs on `i64` fractions with overflow checks and restarts on big rationals
//! if anything overflows, so the answer never depends on rounding.
//! [`eigenvalues`] is a floating-point Jacobi solver used for decimal
//! eigenvalues and cross-checks only.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexId};

/// Counts of positive, negative and zero adjacency eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Inertia {
    pub p: usize,
    pub n: usize,
    pub eta: usize,
}

impl Inertia {
    pub fn new(p: usize, n: usize, eta: usize) -> Self {
        Inertia { p, n, eta }
    }

    pub fn order(&self) -> usize {
        self.p + self.n + self.eta
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={}, n={}, eta={})", self.p, self.n, self.eta)
    }
}

/// Field operations the elimination needs. `None` signals overflow.
trait Scalar: Clone + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
}

/// Symmetric congruent diagonalization of an integer matrix.
///
/// Each round either pivots on a nonzero diagonal entry, or (all diagonal
/// entries zero) adds row/column j to row/column i for some nonzero a_ij,
/// which puts 2·a_ij on the diagonal, and then pivots. A block that is
/// entirely zero contributes its size to the nullity.
fn congruent_signs<S: Scalar>(matrix: &[Vec<i64>]) -> Option<Inertia> {
    let m = matrix.len();
    let mut a: Vec<Vec<S>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| S::from_i64(x)).collect())
        .collect();
    let mut active: Vec<usize> = (0..m).collect();
    let (mut p, mut n) = (0, 0);
    while !active.is_empty() {
        let pivot = match active.iter().position(|&i| !a[i][i].is_zero()) {
            Some(pos) => pos,
            None => {
                let mut found = None;
                'search: for (pi, &i) in active.iter().enumerate() {
                    for &j in &active {
                        if j != i && !a[i][j].is_zero() {
                            found = Some((pi, i, j));
                            break 'search;
                        }
                    }
                }
                let Some((pi, i, j)) = found else {
                    break;
                };
                // Row i += row j, then column i += column j.
                for &k in &active {
                    let v = a[i][k].add(&a[j][k])?;
                    a[i][k] = v;
                }
                for &k in &active {
                    let v = a[k][i].add(&a[k][j])?;
                    a[k][i] = v;
                }
                pi
            }
        };
        let i = active.remove(pivot);
        let d = a[i][i].clone();
        if d.is_positive() {
            p += 1;
        } else {
            n += 1;
        }
        for &r in &active {
            if a[r][i].is_zero() {
                continue;
            }
            let factor = a[r][i].div(&d)?;
            for &c in &active {
                if a[i][c].is_zero() {
                    continue;
                }
                let v = a[r][c].sub(&factor.mul(&a[i][c])?)?;
                a[r][c] = v;
            }
        }
    }
    Some(Inertia::new(p, n, m - p - n))
}

/// Exact inertia of a symmetric integer matrix.
pub fn matrix_inertia(matrix: &[Vec<i64>]) -> Inertia {
    congruent_signs::<Ratio<i64>>(matrix)
        .or_else(|| congruent_signs::<BigRational>(matrix))
        .expect("big rational elimination cannot overflow")
}

/// Exact inertia of the adjacency matrix of `g`.
pub fn inertia(g: &Graph) -> Inertia {
    matrix_inertia(&g.adjacency_matrix())
}

/// Sorted (non-increasing) eigenvalues with the tolerance they were computed to.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tolerance: f64,
}

impl Spectrum {
    /// The i-th largest eigenvalue, 1-based as in λ_1 ≥ λ_2 ≥ ….
    pub fn lambda(&self, i: usize) -> Option<f64> {
        i.checked_sub(1).and_then(|k| self.values.get(k).copied())
    }

    /// Sign counts with values inside ±`threshold` treated as zero.
    pub fn sign_counts(&self, threshold: f64) -> Inertia {
        let p = self.values.iter().filter(|&&x| x > threshold).count();
        let n = self.values.iter().filter(|&&x| x < -threshold).count();
        Inertia::new(p, n, self.values.len() - p - n)
    }
}

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// sweeping until the off-diagonal Frobenius norm drops below `tol`.
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>], tol: f64) -> Result<Spectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let off = |a: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    for _ in 0..MAX_SWEEPS {
        if off(&a) < tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum {
        values,
        tolerance: tol,
    })
}

/// Adjacency spectrum of `g`.
pub fn eigenvalues(g: &Graph, tol: f64) -> Result<Spectrum> {
    let m: Vec<Vec<f64>> = g
        .adjacency_matrix()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as f64).collect())
        .collect();
    symmetric_eigenvalues(&m, tol)
}

/// Deletes the lowest-index pendant vertex together with its neighbor.
/// Returns the reduced graph, the pendant and its support vertex.
pub fn pendant_reduce(g: &Graph) -> Option<(Graph, VertexId, VertexId)> {
    let v = g.vertices().find(|&v| g.degree(v) == 1)?;
    let u = g.row(v).trailing_zeros() as usize;
    let reduced = g.induced_by_mask(g.vertex_mask() & !bit(v) & !bit(u));
    Some((reduced, v, u))
}

/// Structural test for exactly one positive eigenvalue: the non-isolated
/// vertices must induce a complete multipartite graph, i.e. any two
/// non-adjacent non-isolated vertices have the same neighborhood.
pub fn is_one_positive(g: &Graph) -> bool {
    let support = g.vertex_mask() & !g.isolated_mask();
    if support == 0 {
        return false;
    }
    for u in crate::graph::bits(support) {
        let non_nbrs = support & !g.row(u) & !bit(u);
        if crate::graph::bits(non_nbrs).any(|v| g.row(v) != g.row(u)) {
            return false;
        }
    }
    true
}
