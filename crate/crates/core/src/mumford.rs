//! Mumford representation `<u, v>` of reduced divisor classes.
//!
//! A class `P1 + ... + Pr - r*inf` with `r <= 2` is stored as the monic `u`
//! whose roots are the abscissas of the `Pi` and the `v` with `deg v < deg u`
//! interpolating their ordinates. `u | v^2 - f` characterizes validity, and the
//! representation is unique, so class equality is pair equality.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::{AffinePoint, CurveParams};
use crate::error::{Error, Result};
use crate::field::{FieldModulus, Fp};
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MumfordDivisor {
    u: Poly,
    v: Poly,
}

impl MumfordDivisor {
    /// The neutral class `<1, 0>`.
    pub fn identity(modulus: FieldModulus) -> Self {
        MumfordDivisor { u: Poly::one(modulus), v: Poly::zero(modulus) }
    }

    /// Validated constructor.
    pub fn new(curve: &CurveParams, u: Poly, v: Poly) -> Result<Self> {
        check(curve, &u, &v)?;
        Ok(MumfordDivisor { u, v })
    }

    /// Skips validation. Callers must already know the pair is reduced and valid.
    pub(crate) fn new_unchecked(u: Poly, v: Poly) -> Self {
        debug_assert!(u.is_monic() && u.degree().unwrap_or(0) <= 2 && v.degree() < u.degree());
        MumfordDivisor { u, v }
    }

    /// `P + Q - 2*inf` for two points that are neither equal nor mirror images.
    pub fn from_points(curve: &CurveParams, p: AffinePoint, q: AffinePoint) -> Result<Self> {
        for pt in [p, q] {
            if !curve.is_on_curve(pt.x, pt.y) {
                return Err(Error::NotOnCurve { x: pt.x.value(), y: pt.y.value() });
            }
        }
        if p == q {
            return Err(Error::Precondition(format!(
                "from_points needs distinct points; 2{p} is built by the doubling path"
            )));
        }
        if p.x == q.x {
            return Err(Error::Precondition(format!(
                "{p} and {q} are an involution pair; their sum is the identity class"
            )));
        }
        let u = &Poly::linear_root(p.x) * &Poly::linear_root(q.x);
        let slope = (q.y - p.y) * (q.x - p.x).inv()?;
        let v = Poly::new(curve.modulus(), vec![p.y - slope * p.x, slope]);
        Ok(MumfordDivisor { u, v })
    }

    /// `P - inf`.
    pub fn from_single(curve: &CurveParams, p: AffinePoint) -> Result<Self> {
        if !curve.is_on_curve(p.x, p.y) {
            return Err(Error::NotOnCurve { x: p.x.value(), y: p.y.value() });
        }
        Ok(MumfordDivisor { u: Poly::linear_root(p.x), v: Poly::constant(p.y) })
    }

    pub fn validate(&self, curve: &CurveParams) -> bool {
        check(curve, &self.u, &self.v).is_ok()
    }

    pub fn u(&self) -> &Poly {
        &self.u
    }

    pub fn v(&self) -> &Poly {
        &self.v
    }

    pub fn modulus(&self) -> FieldModulus {
        self.u.modulus()
    }

    /// Degree of the effective part, `deg u`.
    pub fn weight(&self) -> usize {
        self.u.degree().expect("u is never zero")
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one()
    }

    /// The class inverse `<u, -v mod u>`.
    pub fn negate(&self) -> Self {
        MumfordDivisor { u: self.u.clone(), v: -&self.v }
    }

    /// Points of the support with multiplicity, ascending by `x`; `None` when
    /// `u` has no roots in the base field.
    pub fn support_points(&self, curve: &CurveParams) -> Option<Vec<AffinePoint>> {
        let roots = quadratic_roots(&self.u)?;
        Some(
            roots
                .into_iter()
                .map(|x| {
                    let y = self.v.eval(x);
                    debug_assert!(curve.is_on_curve(x, y));
                    AffinePoint { x, y }
                })
                .collect(),
        )
    }

    /// Parses `u=[..] v=[..]` (space or `;` separated).
    pub fn parse(curve: &CurveParams, s: &str) -> Result<Self> {
        let m = curve.modulus();
        let mut u = None;
        let mut v = None;
        for part in s.split(|c: char| c == ';' || c.is_whitespace()).filter(|p| !p.is_empty()) {
            if let Some(rest) = part.strip_prefix("u=") {
                u = Some(Poly::parse(m, rest)?);
            } else if let Some(rest) = part.strip_prefix("v=") {
                v = Some(Poly::parse(m, rest)?);
            } else {
                return Err(Error::Parse(format!("unexpected divisor component {part:?}")));
            }
        }
        let u = u.ok_or_else(|| Error::Parse(format!("divisor {s:?} lacks u=")))?;
        let v = v.ok_or_else(|| Error::Parse(format!("divisor {s:?} lacks v=")))?;
        MumfordDivisor::new(curve, u, v)
    }

    pub fn to_json(&self) -> DivisorJson {
        DivisorJson {
            u: self.u.coeffs().iter().map(|c| c.value()).collect(),
            v: self.v.coeffs().iter().map(|c| c.value()).collect(),
        }
    }

    pub fn from_json(curve: &CurveParams, j: &DivisorJson) -> Result<Self> {
        let m = curve.modulus();
        let conv = |c: &[u128]| Poly::new(m, c.iter().map(|&x| m.elem(x)).collect());
        MumfordDivisor::new(curve, conv(&j.u), conv(&j.v))
    }
}

/// Machine-readable mirror of the text format: ascending coefficient arrays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorJson {
    pub u: Vec<u128>,
    pub v: Vec<u128>,
}

fn check(curve: &CurveParams, u: &Poly, v: &Poly) -> Result<()> {
    if u.modulus() != curve.modulus() || v.modulus() != curve.modulus() {
        return Err(Error::InvalidDivisor("coefficients live in a different field".into()));
    }
    let Some(du) = u.degree() else {
        return Err(Error::InvalidDivisor("u is zero".into()));
    };
    if du > 2 {
        return Err(Error::InvalidDivisor(format!("deg u = {du} exceeds the genus")));
    }
    if !u.is_monic() {
        return Err(Error::InvalidDivisor(format!("u = {u} is not monic")));
    }
    if v.degree().is_some_and(|dv| dv >= du) {
        return Err(Error::InvalidDivisor(format!("deg v must be below deg u = {du}")));
    }
    let r = (&(v * v) - curve.f()).rem(u)?;
    if !r.is_zero() {
        return Err(Error::InvalidDivisor(format!("u = {u} does not divide v^2 - f")));
    }
    Ok(())
}

/// Roots of a monic polynomial of degree at most two, with multiplicity.
pub(crate) fn quadratic_roots(u: &Poly) -> Option<Vec<Fp>> {
    match u.degree() {
        Some(0) => Some(Vec::new()),
        Some(1) => Some(vec![-u.coeff(0)]),
        Some(2) => {
            let m = u.modulus();
            let (a, b) = (u.coeff(1), u.coeff(0));
            let disc = a.square() - m.elem(4) * b;
            let r = disc.sqrt()?;
            let half = m.elem(2).inv().expect("p is odd");
            let mut roots = vec![(-a - r) * half, (-a + r) * half];
            roots.sort();
            Some(roots)
        }
        _ => None,
    }
}

impl fmt::Display for MumfordDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={} v={}", self.u, self.v)
    }
}

impl fmt::Debug for MumfordDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.u, self.v)
    }
}

/// A pair of weight-two operands sharing the place `shared`:
/// `D1 = shared + mu`, `D2 = shared + omega`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SharedPlaceDecomposition {
    pub shared: AffinePoint,
    pub mu: AffinePoint,
    pub omega: AffinePoint,
}
