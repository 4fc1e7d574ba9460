//! Writes the three construction sketches as SVG files.
//!
//!     cargo run --example figures -- [output-dir]

use genus2::cli::figure::Figure;

fn main() -> genus2::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| ".".into());
    for case in 1..=3 {
        let fig = Figure::build(case)?;
        let path = std::path::Path::new(&dir).join(format!("case{case}.svg"));
        std::fs::write(&path, fig.to_svg()).map_err(|e| genus2::Error::Parse(e.to_string()))?;
        println!("{}: L(x) = {:.4}x^3 + {:.4}x^2 + {:.4}x + {:.4}", path.display(), fig.cubic.p3, fig.cubic.p2, fig.cubic.p1, fig.cubic.p0);
    }
    Ok(())
}
