//! Cantor's composition and reduction step by step.
//!
//!     cargo run --example cantor_oracle

use genus2::cantor::{cantor_compose, cantor_reduce};
use genus2::{CurveParams, FieldModulus, MumfordDivisor};

fn main() -> genus2::Result<()> {
    let p = FieldModulus::new(11)?;
    let curve = CurveParams::from_ints(p, &[3, 1, 0, 0, 0, 1])?;
    let points = curve.enumerate_points(1000)?;
    println!("{curve}, {} affine points", points.len());

    let d1 = MumfordDivisor::from_points(&curve, points[0], points[2])?;
    let d2 = MumfordDivisor::from_points(&curve, points[4], points[6])?;
    let (u, v) = cantor_compose(&curve, &d1, &d2)?;
    println!("compose {d1} and {d2}");
    println!("  semi-reduced u = {u}, v = {v}");
    let sum = cantor_reduce(&curve, u, v)?;
    println!("  reduced        {sum}");
    println!("explicit formulas agree: {}", genus2::explicit::add(&curve, &d1, &d2)? == sum);
    Ok(())
}
