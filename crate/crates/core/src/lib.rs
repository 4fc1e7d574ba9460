//! Group law on the Jacobian of a genus-2 curve `y^2 = f(x)`, `deg f = 5`,
//! over a prime field, computed with base-field operations only.
//!
//! Sums of reduced divisors in Mumford form are obtained by solving a 4x4
//! linear system for an interpolating cubic `L(x)` and reading the residual
//! intersection of `y = L(x)` with the curve. Three configurations are
//! covered explicitly ([`explicit`]): disjoint supports, doubling, and
//! operands sharing one place. Everything else, and every test, goes
//! through Cantor's algorithm ([`cantor`]).
//!
//! ```
//! use genus2::{CurveParams, FieldModulus, MumfordDivisor, explicit, cantor};
//!
//! let p = FieldModulus::new(7).unwrap();
//! let curve = CurveParams::from_ints(p, &[1, 0, 0, 0, 0, 1]).unwrap();
//! let pt = |x, y| curve.point(p.elem(x), p.elem(y)).unwrap();
//! let d1 = MumfordDivisor::from_points(&curve, pt(0, 1), pt(1, 3)).unwrap();
//! let d2 = MumfordDivisor::from_points(&curve, pt(5, 2), pt(6, 0)).unwrap();
//! let sum = explicit::add(&curve, &d1, &d2).unwrap();
//! assert_eq!(sum, cantor::cantor_add(&curve, &d1, &d2).unwrap());
//! ```
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod cantor;
pub mod cli;
pub mod curve;
pub mod error;
pub mod explicit;
pub mod field;
pub mod group;
pub mod linsolve;
pub mod mumford;
pub mod poly;

pub use curve::{AffinePoint, CurveParams};
pub use error::{Error, Result};
pub use explicit::{AdditionCase, CaseKind, FallbackReason, InterpolationCubic};
pub use field::{FieldModulus, Fp, OpCount};
pub use group::OpCounters;
pub use linsolve::{Solution, System4};
pub use mumford::{MumfordDivisor, SharedPlaceDecomposition};
pub use poly::Poly;
