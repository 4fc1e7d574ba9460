//! Prime-field arithmetic, square roots, and polynomial gcds.
//!
//!     cargo run --example field_arithmetic

use genus2::{FieldModulus, Poly};

fn main() -> genus2::Result<()> {
    let p = FieldModulus::new(13)?;
    let a = p.elem(7);
    let b = p.from_i128(-3);
    println!("in F_13: 7 + (-3) = {}, 7 * (-3) = {}, 7^-1 = {}", a + b, a * b, a.inv()?);
    for x in [p.elem(10), p.elem(5)] {
        match x.sqrt() {
            Some(r) => println!("sqrt({x}) = +-{r}"),
            None => println!("{x} is not a square"),
        }
    }

    let m = FieldModulus::mersenne_127();
    let x = m.parse("123456789012345678901234567890")?;
    println!("over 2^127 - 1: x * x^-1 = {}", x * x.inv()?);

    let f = Poly::from_ints(p, &[2, 3, 1]); // (x + 1)(x + 2)
    let g = Poly::from_ints(p, &[3, 4, 1]); // (x + 1)(x + 3)
    let (d, s, t) = f.xgcd(&g)?;
    println!("gcd({f}, {g}) = {d} = ({s})*f + ({t})*g");
    Ok(())
}
