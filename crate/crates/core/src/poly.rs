//! Dense univariate polynomials over `F_p`.
//!
//! Coefficients are stored in ascending order with trailing zeros trimmed,
//! so the zero polynomial is the empty list and equality is list equality.
//! Every polynomial in this crate has degree at most ten, so the schoolbook
//! algorithms are all we need.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{FieldModulus, Fp, OpCount};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Fp>,
    modulus: FieldModulus,
}

impl Poly {
    pub fn new(modulus: FieldModulus, coeffs: Vec<Fp>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.modulus() == modulus));
        let mut p = Poly { coeffs, modulus };
        p.trim();
        p
    }

    /// Builds a polynomial from signed integer coefficients, ascending.
    pub fn from_ints(modulus: FieldModulus, coeffs: &[i128]) -> Self {
        Poly::new(modulus, coeffs.iter().map(|&c| modulus.from_i128(c)).collect())
    }

    pub fn zero(modulus: FieldModulus) -> Self {
        Poly { coeffs: Vec::new(), modulus }
    }

    pub fn one(modulus: FieldModulus) -> Self {
        Poly::constant(modulus.one())
    }

    pub fn constant(c: Fp) -> Self {
        Poly::new(c.modulus(), vec![c])
    }

    /// The monomial `x`.
    pub fn x(modulus: FieldModulus) -> Self {
        Poly::new(modulus, vec![modulus.zero(), modulus.one()])
    }

    /// `x - root`.
    pub fn linear_root(root: Fp) -> Self {
        Poly::new(root.modulus(), vec![-root, root.modulus().one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> FieldModulus {
        self.modulus
    }

    pub fn coeffs(&self) -> &[Fp] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Fp {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.modulus.zero())
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn leading(&self) -> Option<Fp> {
        self.coeffs.last().copied()
    }

    pub fn check_same_field(&self, other: &Poly) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.value(),
                right: other.modulus.value(),
            });
        }
        Ok(())
    }

    pub fn scale_with(&self, c: Fp, ops: &mut OpCount) -> Poly {
        Poly::new(self.modulus, self.coeffs.iter().map(|&a| ops.mul(a, c)).collect())
    }

    pub fn scale(&self, c: Fp) -> Poly {
        self.scale_with(c, &mut OpCount::default())
    }

    pub fn mul_with(&self, rhs: &Poly, ops: &mut OpCount) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.modulus);
        }
        let mut out = vec![self.modulus.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += ops.mul(a, b);
            }
        }
        Poly::new(self.modulus, out)
    }

    pub fn checked_mul(&self, rhs: &Poly) -> Result<Poly> {
        self.check_same_field(rhs)?;
        Ok(self.mul_with(rhs, &mut OpCount::default()))
    }

    /// Long division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem_with(&self, divisor: &Poly, ops: &mut OpCount) -> Result<(Poly, Poly)> {
        self.check_same_field(divisor)?;
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let m = self.modulus;
        let Some(da) = self.degree() else {
            return Ok((Poly::zero(m), Poly::zero(m)));
        };
        if da < db {
            return Ok((Poly::zero(m), self.clone()));
        }
        let lead = divisor.coeffs[db];
        let lead_inv = if lead.is_one() { None } else { Some(ops.inv(lead)?) };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![m.zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = rem[k + db];
            if top.is_zero() {
                continue;
            }
            let q = match lead_inv {
                Some(li) => ops.mul(top, li),
                None => top,
            };
            quot[k] = q;
            for (j, &d) in divisor.coeffs[..db].iter().enumerate() {
                rem[k + j] -= ops.mul(q, d);
            }
            rem[k + db] = m.zero();
        }
        rem.truncate(db);
        Ok((Poly::new(m, quot), Poly::new(m, rem)))
    }

    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.divrem_with(divisor, &mut OpCount::default())
    }

    pub fn rem_with(&self, divisor: &Poly, ops: &mut OpCount) -> Result<Poly> {
        Ok(self.divrem_with(divisor, ops)?.1)
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        self.rem_with(divisor, &mut OpCount::default())
    }

    /// Quotient of a division that must be exact; a nonzero remainder is an error.
    pub fn div_exact_with(&self, divisor: &Poly, ops: &mut OpCount) -> Result<Poly> {
        let (q, r) = self.divrem_with(divisor, ops)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!("{divisor} does not divide {self} (remainder {r})")));
        }
        Ok(q)
    }

    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        self.div_exact_with(divisor, &mut OpCount::default())
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn monic_with(&self, ops: &mut OpCount) -> Result<Poly> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?;
        if lead.is_one() {
            return Ok(self.clone());
        }
        let li = ops.inv(lead)?;
        Ok(self.scale_with(li, ops))
    }

    pub fn monic(&self) -> Result<Poly> {
        self.monic_with(&mut OpCount::default())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd_with(&self, other: &Poly, ops: &mut OpCount) -> Result<(Poly, Poly, Poly)> {
        self.check_same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let m = self.modulus;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(m), Poly::zero(m));
        let (mut t0, mut t1) = (Poly::zero(m), Poly::one(m));
        while !r1.is_zero() {
            let (q, r) = r0.divrem_with(&r1, ops)?;
            let s = &s0 - &q.mul_with(&s1, ops);
            let t = &t0 - &q.mul_with(&t1, ops);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        let lead = r0.leading().expect("nonzero gcd");
        if lead.is_one() {
            return Ok((r0, s0, t0));
        }
        let li = ops.inv(lead)?;
        Ok((r0.scale_with(li, ops), s0.scale_with(li, ops), t0.scale_with(li, ops)))
    }

    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.xgcd_with(other, &mut OpCount::default())
    }

    /// Horner evaluation.
    pub fn eval_with(&self, x: Fp, ops: &mut OpCount) -> Fp {
        self.coeffs
            .iter()
            .rev()
            .fold(self.modulus.zero(), |acc, &c| ops.mul(acc, x) + c)
    }

    pub fn eval(&self, x: Fp) -> Fp {
        self.eval_with(x, &mut OpCount::default())
    }

    pub fn derivative(&self) -> Poly {
        let m = self.modulus;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| m.elem(i as u128) * c)
            .collect();
        Poly::new(m, coeffs)
    }

    /// All roots in `F_p` by exhaustive scan, ascending. Small fields only.
    pub fn roots_by_scan(&self) -> Vec<Fp> {
        self.modulus.elements().filter(|&x| self.eval(x).is_zero()).collect()
    }

    /// Parses the bracketed ascending list format, e.g. `[1,0,0,0,0,1]`.
    pub fn parse(modulus: FieldModulus, s: &str) -> Result<Poly> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a bracketed coefficient list, got {s:?}")))?;
        let coeffs = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|c| modulus.parse(c)).collect::<Result<Vec<_>>>()?
        };
        Ok(Poly::new(modulus, coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Integer coefficient lists for parsing without a modulus at hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawCoeffs(pub Vec<i128>);

impl FromStr for RawCoeffs {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a bracketed coefficient list, got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(RawCoeffs(Vec::new()));
        }
        inner
            .split(',')
            .map(|c| c.trim().parse::<i128>().map_err(|_| Error::Parse(format!("bad coefficient {c:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(RawCoeffs)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.modulus, (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.modulus, (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_with(rhs, &mut OpCount::default())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.modulus, self.coeffs.iter().map(|&c| -c).collect())
    }
}
