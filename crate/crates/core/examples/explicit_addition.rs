//! The three explicit constructions on y^2 = x^5 + 1 over F_7, with the
//! linear system, the interpolating cubic, and the Cantor cross-check.
//!
//!     cargo run --example explicit_addition

use genus2::explicit::{self, AdditionCase};
use genus2::{cantor, CurveParams, FieldModulus, MumfordDivisor, OpCount};

fn show(curve: &CurveParams, d1: &MumfordDivisor, d2: &MumfordDivisor) -> genus2::Result<()> {
    let mut ops = OpCount::default();
    let out = explicit::add_traced(curve, d1, d2, &mut ops)?;
    println!("{d1}  +  {d2}");
    println!("  case   {}", out.case);
    if let Some(trace) = &out.trace {
        println!("  L(x) = {}", trace.cubic.to_poly());
    }
    if let AdditionCase::SharedPlace(dec) = out.case {
        println!("  shared {}, chord through {} and {}", dec.shared, dec.mu, dec.omega);
    }
    println!("  sum    {}", out.result);
    println!("  cost   {} mult, {} inv, {} sqrt", ops.mults, ops.invs, ops.sqrts);
    assert_eq!(out.result, cantor::cantor_add(curve, d1, d2)?);
    Ok(())
}

fn main() -> genus2::Result<()> {
    let p = FieldModulus::new(7)?;
    let curve = CurveParams::from_ints(p, &[1, 0, 0, 0, 0, 1])?;
    let pt = |x, y| curve.point(p.elem(x), p.elem(y)).expect("on the curve");
    let div = |a, b| MumfordDivisor::from_points(&curve, a, b).expect("distinct abscissas");

    let d1 = div(pt(0, 1), pt(1, 3));
    let d2 = div(pt(5, 2), pt(6, 0));
    println!("case-1 system for the disjoint pair:\n{:?}\n", explicit::build_case1_system(&d1, &d2)?);
    show(&curve, &d1, &d2)?;
    show(&curve, &d1, &d1)?;
    show(&curve, &d1, &div(pt(0, 1), pt(5, 2)))?;
    // a pair the explicit formulas hand to Cantor
    show(&curve, &d1, &d1.negate())?;
    Ok(())
}
