//! Double-and-add with per-case tallies, element orders, and a large-prime
//! scalar multiplication checked against the Cantor ladder.
//!
//!     cargo run --release --example scalar_multiplication

use genus2::group::{element_order, enumerate_jacobian, scalar_mul_cantor, scalar_mul_with};
use genus2::{CurveParams, FieldModulus, MumfordDivisor, OpCounters};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> genus2::Result<()> {
    let small = CurveParams::from_ints(FieldModulus::new(7)?, &[1, 0, 0, 0, 0, 1])?;
    let all = enumerate_jacobian(&small, 1000)?;
    let d = &all[all.len() - 1];
    println!("on {small}: |J| = {}, ord({d}) = {}", all.len(), element_order(&small, d)?);

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let curve = CurveParams::random(FieldModulus::mersenne_127(), &mut rng);
    let (a, b) = (curve.random_point(&mut rng), curve.random_point(&mut rng));
    let d = MumfordDivisor::from_points(&curve, a, b)?;
    let n: u128 = 0xDEAD_BEEF_CAFE_F00D;
    let mut counters = OpCounters::default();
    let r = scalar_mul_with(&curve, n, &d, &mut counters)?;
    println!("on {curve}:");
    println!("  n * D = {r}");
    println!("  {} additions: {:?}", counters.additions(), counters.case_tally);
    println!("  {} mult, {} inv, {} sqrt", counters.field_mults, counters.field_invs, counters.field_sqrts);
    println!("  Cantor ladder agrees: {}", scalar_mul_cantor(&curve, n, &d)? == r);
    Ok(())
}
