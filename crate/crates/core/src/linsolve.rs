//! Exact 4x4 linear solving.
//!
//! The solver is generic over [`Scalar`] so the same elimination serves the
//! exact prime-field systems and the floating-point systems behind the
//! figure renderer.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{Fp, OpCount};

/// Field-like scalar used by the system builders and the solver.
pub trait Scalar:
    Copy + PartialEq + fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// The integer `n` mapped into the scalar's ring.
    fn small_like(&self, n: u32) -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;
}

impl Scalar for Fp {
    fn zero_like(&self) -> Self {
        self.modulus().zero()
    }

    fn one_like(&self) -> Self {
        self.modulus().one()
    }

    fn small_like(&self, n: u32) -> Self {
        self.modulus().elem(n as u128)
    }

    fn is_zero(&self) -> bool {
        Fp::is_zero(*self)
    }

    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

/// Pivots smaller than this are treated as zero in floating point.
const F64_PIVOT_EPS: f64 = 1e-12;

impl Scalar for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }

    fn one_like(&self) -> Self {
        1.0
    }

    fn small_like(&self, n: u32) -> Self {
        n as f64
    }

    fn is_zero(&self) -> bool {
        self.abs() < F64_PIVOT_EPS
    }

    fn inverse(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

/// Augmented 4x4 system `matrix * x = rhs`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct System4<S> {
    pub matrix: [[S; 4]; 4],
    pub rhs: [S; 4],
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Solution<S> {
    Unique([S; 4]),
    Singular,
}

impl<S> Solution<S> {
    pub fn unique(self) -> Option<[S; 4]> {
        match self {
            Solution::Unique(x) => Some(x),
            Solution::Singular => None,
        }
    }

    pub fn is_singular(&self) -> bool {
        matches!(self, Solution::Singular)
    }
}

impl<S: Scalar> System4<S> {
    pub fn from_rows(rows: [([S; 4], S); 4]) -> Self {
        System4 { matrix: rows.map(|r| r.0), rhs: rows.map(|r| r.1) }
    }

    /// `matrix * x`.
    pub fn apply(&self, x: &[S; 4]) -> [S; 4] {
        self.matrix.map(|row| row.iter().zip(x).fold(x[0].zero_like(), |acc, (&a, &b)| acc + a * b))
    }

    /// Gauss-Jordan elimination, pivoting on the first nonzero entry of each column.
    pub fn solve(&self) -> Solution<S> {
        self.solve_counted(&mut |_, _| {})
    }

    /// Like [`System4::solve`], reporting each multiplication and inversion to `tally`
    /// as `(mults, invs)` increments.
    pub fn solve_counted(&self, tally: &mut impl FnMut(u64, u64)) -> Solution<S> {
        let mut a = self.matrix;
        let mut b = self.rhs;
        for col in 0..4 {
            let Some(piv) = (col..4).find(|&r| !a[r][col].is_zero()) else {
                return Solution::Singular;
            };
            a.swap(col, piv);
            b.swap(col, piv);
            let inv = match a[col][col].inverse() {
                Some(i) => i,
                None => return Solution::Singular,
            };
            tally(0, 1);
            for k in col..4 {
                a[col][k] = a[col][k] * inv;
            }
            b[col] = b[col] * inv;
            tally(5 - col as u64, 0);
            for r in 0..4 {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col];
                for k in col..4 {
                    a[r][k] = a[r][k] - factor * a[col][k];
                }
                b[r] = b[r] - factor * b[col];
                tally(5 - col as u64, 0);
            }
        }
        Solution::Unique(b)
    }

    /// Cofactor-expansion determinant, independent of the elimination path.
    pub fn determinant(&self) -> S {
        det4(&self.matrix)
    }
}

impl System4<Fp> {
    pub fn solve_with(&self, ops: &mut OpCount) -> Solution<Fp> {
        self.solve_counted(&mut |m, i| {
            ops.mults += m;
            ops.invs += i;
        })
    }
}

fn det3<S: Scalar>(m: [[S; 3]; 3]) -> S {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det4<S: Scalar>(m: &[[S; 4]; 4]) -> S {
    let mut acc = m[0][0].zero_like();
    for j in 0..4 {
        let mut minor = [[m[0][0]; 3]; 3];
        for r in 1..4 {
            let mut cc = 0;
            for c in 0..4 {
                if c != j {
                    minor[r - 1][cc] = m[r][c];
                    cc += 1;
                }
            }
        }
        let term = m[0][j] * det3(minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}
