//! Field-operation counts and timings for each addition case against
//! Cantor's algorithm at p = 2^127 - 1.
//!
//!     cargo run --release --example op_counts

use genus2::cli::bench::run_bench;
use genus2::{CurveParams, FieldModulus};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> genus2::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let curve = CurveParams::random(FieldModulus::mersenne_127(), &mut rng);
    println!("{curve}");
    let report = run_bench(&curve, 2000, 0)?;
    print!("{}", report.render_table());
    Ok(())
}
