//! The curve `C: y^2 = f(x)` with `f` monic, squarefree and of degree five.
//!
//! This odd-degree model has a single point at infinity. It is never stored:
//! every divisor in the crate carries an implied `-r*inf` term.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FieldModulus, Fp};
use crate::poly::{Poly, RawCoeffs};

/// Default ceiling on `p` for anything that enumerates the field.
pub const DEFAULT_ENUMERATION_BOUND: u128 = 1000;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveParams {
    f: Poly,
}

impl CurveParams {
    /// Accepts `f` only when it is monic of degree exactly 5 and squarefree.
    pub fn new(f: Poly) -> Result<Self> {
        if f.degree() != Some(5) {
            return Err(Error::InvalidCurve(format!("f = {f} must have degree 5, has degree {:?}", f.degree())));
        }
        if !f.is_monic() {
            return Err(Error::InvalidCurve(format!("f = {f} is not monic")));
        }
        let g = f.gcd(&f.derivative())?;
        if !g.is_one() {
            return Err(Error::InvalidCurve(format!("f = {f} is not squarefree (gcd(f, f') = {g})")));
        }
        Ok(CurveParams { f })
    }

    pub fn from_ints(modulus: FieldModulus, f: &[i128]) -> Result<Self> {
        CurveParams::new(Poly::from_ints(modulus, f))
    }

    /// Draws monic quintics with uniform lower coefficients until one is squarefree.
    pub fn random(modulus: FieldModulus, rng: &mut impl Rng) -> Self {
        loop {
            let mut coeffs: Vec<Fp> = (0..5).map(|_| modulus.random(rng)).collect();
            coeffs.push(modulus.one());
            if let Ok(c) = CurveParams::new(Poly::new(modulus, coeffs)) {
                return c;
            }
        }
    }

    /// Parses the two-line curve header:
    ///
    /// ```text
    /// p=7
    /// f=[1,0,0,0,0,1]
    /// ```
    pub fn parse_header(text: &str) -> Result<Self> {
        let mut p = None;
        let mut f = None;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            if let Some(v) = line.strip_prefix("p=") {
                let v: u128 = v.trim().parse().map_err(|_| Error::Parse(format!("bad modulus line {line:?}")))?;
                p = Some(FieldModulus::new(v)?);
            } else if let Some(v) = line.strip_prefix("f=") {
                f = Some(v.trim().parse::<RawCoeffs>()?);
            } else {
                return Err(Error::Parse(format!("unexpected curve header line {line:?}")));
            }
        }
        let p = p.ok_or_else(|| Error::Parse("curve header lacks a p= line".into()))?;
        let f = f.ok_or_else(|| Error::Parse("curve header lacks an f= line".into()))?;
        CurveParams::from_ints(p, &f.0)
    }

    pub fn header(&self) -> String {
        format!("p={}\nf={}\n", self.modulus(), self.f)
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn modulus(&self) -> FieldModulus {
        self.f.modulus()
    }

    pub fn is_on_curve(&self, x: Fp, y: Fp) -> bool {
        y.square() == self.f.eval(x)
    }

    pub fn point(&self, x: Fp, y: Fp) -> Result<AffinePoint> {
        if !self.is_on_curve(x, y) {
            return Err(Error::NotOnCurve { x: x.value(), y: y.value() });
        }
        Ok(AffinePoint { x, y })
    }

    /// Points above `x0`: two, one (a Weierstrass point) or none.
    pub fn lift_x(&self, x0: Fp) -> Vec<AffinePoint> {
        self.f
            .eval(x0)
            .square_roots()
            .into_iter()
            .map(|y| AffinePoint { x: x0, y })
            .collect()
    }

    /// Every affine point, ordered by `x` and then `y`.
    pub fn enumerate_points(&self, bound: u128) -> Result<Vec<AffinePoint>> {
        self.check_enumerable(bound)?;
        Ok(self.modulus().elements().flat_map(|x| self.lift_x(x)).collect())
    }

    pub fn check_enumerable(&self, bound: u128) -> Result<()> {
        let p = self.modulus().value();
        if p > bound {
            return Err(Error::Refused(format!("p = {p} exceeds the enumeration bound {bound}")));
        }
        Ok(())
    }

    /// A uniformly chosen abscissa with at least one point above it.
    pub fn random_point(&self, rng: &mut impl Rng) -> AffinePoint {
        loop {
            let x = self.modulus().random(rng);
            let pts = self.lift_x(x);
            if !pts.is_empty() {
                return pts[rng.gen_range(0..pts.len())];
            }
        }
    }
}

impl fmt::Display for CurveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {} over F_{}", self.f, self.modulus())
    }
}

/// An affine point; constructed only through [`CurveParams::point`] or
/// [`CurveParams::lift_x`], so `y^2 = f(x)` holds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffinePoint {
    pub x: Fp,
    pub y: Fp,
}

impl AffinePoint {
    /// The hyperelliptic involution `(x, y) -> (x, -y)`.
    pub fn involute(self) -> AffinePoint {
        AffinePoint { x: self.x, y: -self.y }
    }

    pub fn is_weierstrass(self) -> bool {
        self.y.is_zero()
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}
