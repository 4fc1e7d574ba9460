//! Exhaustive comparison of explicit addition with Cantor's algorithm on
//! all ordered pairs, for a few seeded curves.
//!
//!     cargo run --release --example verify_sweep

use genus2::group::oracle_sweep;
use genus2::{CurveParams, FieldModulus};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> genus2::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for p in [5, 7, 11, 13] {
        let curve = CurveParams::random(FieldModulus::new(p)?, &mut rng);
        let report = oracle_sweep(&curve, 1000)?;
        print!("{}", report.render_text());
        println!();
    }
    Ok(())
}
