//! Building reduced divisors, printing them in text and JSON, and listing
//! the whole Jacobian of a small curve.
//!
//!     cargo run --example mumford_divisors

use genus2::group::enumerate_jacobian;
use genus2::{CurveParams, FieldModulus, MumfordDivisor};

fn main() -> genus2::Result<()> {
    let p = FieldModulus::new(7)?;
    let curve = CurveParams::from_ints(p, &[1, 0, 0, 0, 0, 1])?;
    println!("{curve}");
    let points = curve.enumerate_points(1000)?;
    println!("{} affine points: {:?}", points.len(), points.iter().map(|q| q.to_string()).collect::<Vec<_>>());

    let pt = |x, y| curve.point(p.elem(x), p.elem(y));
    let d = MumfordDivisor::from_points(&curve, pt(0, 1)?, pt(1, 3)?)?;
    println!("(0,1) + (1,3) - 2inf  ->  {d}");
    println!("as JSON: {}", serde_json::to_string(&d.to_json()).expect("serializable"));
    println!("negation: {}", d.negate());
    println!("parsed back: {}", MumfordDivisor::parse(&curve, "u=[0,6,1];v=[1,2]")? == d);

    let all = enumerate_jacobian(&curve, 1000)?;
    let by_weight = |w| all.iter().filter(|d| d.weight() == w).count();
    println!("|J| = {} ({} identity, {} weight one, {} weight two)", all.len(), by_weight(0), by_weight(1), by_weight(2));
    Ok(())
}
