//! Cantor's composition and reduction.
//!
//! Deliberately plain: this module is the reference the explicit formulas
//! are checked against, and the engine behind their fallback path.

use crate::curve::CurveParams;
use crate::error::{Error, Result};
use crate::field::OpCount;
use crate::mumford::MumfordDivisor;
use crate::poly::Poly;

/// Composition without reduction. The returned `u` is monic, `deg u <= 4`,
/// `deg v < deg u`, and `u | v^2 - f`.
pub fn cantor_compose_with(
    curve: &CurveParams,
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
    ops: &mut OpCount,
) -> Result<(Poly, Poly)> {
    let (u1, v1) = (d1.u(), d1.v());
    let (u2, v2) = (d2.u(), d2.v());
    // d0 = e1 u1 + e2 u2
    let (d0, e1, e2) = u1.xgcd_with(u2, ops)?;
    // d = c1 d0 + c2 (v1 + v2)
    let (d, c1, c2) = d0.xgcd_with(&(v1 + v2), ops)?;
    let s1 = c1.mul_with(&e1, ops);
    let s2 = c1.mul_with(&e2, ops);
    let s3 = c2;

    let d_sq = d.mul_with(&d, ops);
    let u = u1.mul_with(u2, ops).div_exact_with(&d_sq, ops)?;
    let t1 = s1.mul_with(u1, ops).mul_with(v2, ops);
    let t2 = s2.mul_with(u2, ops).mul_with(v1, ops);
    let t3 = s3.mul_with(&(&v1.mul_with(v2, ops) + curve.f()), ops);
    let numerator = &(&t1 + &t2) + &t3;
    let v = numerator.div_exact_with(&d, ops)?.rem_with(&u, ops)?;
    Ok((u, v))
}

pub fn cantor_compose(curve: &CurveParams, d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<(Poly, Poly)> {
    cantor_compose_with(curve, d1, d2, &mut OpCount::default())
}

/// Reduces a semi-reduced pair to the unique reduced representative.
pub fn cantor_reduce_with(curve: &CurveParams, u: Poly, v: Poly, ops: &mut OpCount) -> Result<MumfordDivisor> {
    if u.is_zero() {
        return Err(Error::InvalidDivisor("u is zero".into()));
    }
    let (mut u, mut v) = (u, v);
    while u.degree().is_some_and(|d| d > 2) {
        let next_u = (curve.f() - &v.mul_with(&v, ops)).div_exact_with(&u, ops)?;
        u = next_u.monic_with(ops)?;
        v = (-&v).rem_with(&u, ops)?;
    }
    let u = u.monic_with(ops)?;
    let v = v.rem_with(&u, ops)?;
    MumfordDivisor::new(curve, u, v)
}

pub fn cantor_reduce(curve: &CurveParams, u: Poly, v: Poly) -> Result<MumfordDivisor> {
    cantor_reduce_with(curve, u, v, &mut OpCount::default())
}

pub fn cantor_add_with(
    curve: &CurveParams,
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
    ops: &mut OpCount,
) -> Result<MumfordDivisor> {
    let (u, v) = cantor_compose_with(curve, d1, d2, ops)?;
    cantor_reduce_with(curve, u, v, ops)
}

pub fn cantor_add(curve: &CurveParams, d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<MumfordDivisor> {
    cantor_add_with(curve, d1, d2, &mut OpCount::default())
}
