//! Explicit addition of reduced divisors using only base-field operations.
//!
//! Every case follows one recipe. Write both operands as Mumford pairs
//! `<u1, v1>`, `<u2, v2>` with `deg ui = 2` and coprime `ui`, solve the 4x4
//! linear system for the cubic `L = p3*x^3 + p2*x^2 + p1*x + p0` with
//! `L = v1 mod u1` and `L = v2 mod u2`, then read the sum off the residual
//! intersection of `y = L(x)` with the curve:
//!
//! ```text
//! u3 = monic((L^2 - f) / (u1 * u2)),    v3 = -L mod u3
//! ```
//!
//! The three cases differ only in how the operands are written:
//!
//! * disjoint supports: the operands as given;
//! * doubling `2[mu + omega]`: the tangent pairs `<(x - mu_x)^2, T_mu>` and
//!   `<(x - omega_x)^2, T_omega>`, where `T` is the tangent line;
//! * a shared place `P`: `[P + mu] + [P + omega]` regrouped as
//!   `[2P] + [mu + omega]`, i.e. a tangent pair at `P` and the chord pair
//!   through `mu` and `omega`.
//!
//! Configurations outside these generic positions (weight-deficient operands,
//! Weierstrass tangents, opposite points, repeated places) are handed to
//! Cantor's algorithm.

use std::fmt;

use crate::cantor;
use crate::curve::{AffinePoint, CurveParams};
use crate::error::{Error, Result};
use crate::field::{Fp, OpCount};
use crate::linsolve::{Scalar, Solution, System4};
use crate::mumford::{MumfordDivisor, SharedPlaceDecomposition};
use crate::poly::Poly;

/// Coefficients of the interpolating cubic `L(x) = p3*x^3 + p2*x^2 + p1*x + p0`.
///
/// `p3 = 0` is allowed; the sum then has weight one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InterpolationCubic<S = Fp> {
    pub p3: S,
    pub p2: S,
    pub p1: S,
    pub p0: S,
}

impl<S: Scalar> InterpolationCubic<S> {
    /// Unknowns are ordered `(p3, p2, p1, p0)` in every system builder.
    pub fn from_solution(x: [S; 4]) -> Self {
        InterpolationCubic { p3: x[0], p2: x[1], p1: x[2], p0: x[3] }
    }

    pub fn eval(&self, x: S) -> S {
        ((self.p3 * x + self.p2) * x + self.p1) * x + self.p0
    }

    pub fn slope_at(&self, x: S) -> S {
        let three = x.small_like(3);
        let two = x.small_like(2);
        (three * self.p3 * x + two * self.p2) * x + self.p1
    }
}

impl InterpolationCubic<Fp> {
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.p0.modulus(), vec![self.p0, self.p1, self.p2, self.p3])
    }
}

/// Reason an addition left the explicit formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FallbackReason {
    IdentityOperand,
    WeightOneOperand,
    /// Doubling a class whose `u` has no roots in the base field.
    NonSplitDoubling,
    /// Doubling `2P - 2inf`: both support points coincide.
    RepeatedPointDoubling,
    WeierstrassTangent,
    /// The operands share an abscissa whose points are mirror images.
    InvolutionPairShared,
    /// One operand is `2P` where `P` is also the shared place.
    RepeatedSharedPlace,
    /// `u1 = u2` but the classes differ (this includes `D2 = -D1`).
    SameUDifferentV,
    /// Coprime `u`s with a singular system. Never observed; kept so the
    /// dispatcher stays total.
    SingularGenericSystem,
}

impl fmt::Display for FallbackReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FallbackReason::IdentityOperand => "identity operand",
            FallbackReason::WeightOneOperand => "weight-one operand",
            FallbackReason::NonSplitDoubling => "doubling with irreducible u",
            FallbackReason::RepeatedPointDoubling => "doubling a repeated point",
            FallbackReason::WeierstrassTangent => "vertical tangent at a Weierstrass point",
            FallbackReason::InvolutionPairShared => "shared abscissa with opposite points",
            FallbackReason::RepeatedSharedPlace => "shared place with multiplicity two",
            FallbackReason::SameUDifferentV => "equal u with different v",
            FallbackReason::SingularGenericSystem => "singular system for coprime u",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdditionCase {
    DisjointGeneric,
    Doubling,
    SharedPlace(SharedPlaceDecomposition),
    Fallback(FallbackReason),
}

/// The variant of an [`AdditionCase`] without its payload, for tallies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum CaseKind {
    DisjointGeneric,
    Doubling,
    SharedPlace,
    Fallback,
}

impl CaseKind {
    pub const ALL: [CaseKind; 4] =
        [CaseKind::DisjointGeneric, CaseKind::Doubling, CaseKind::SharedPlace, CaseKind::Fallback];

    pub fn name(self) -> &'static str {
        match self {
            CaseKind::DisjointGeneric => "DisjointGeneric",
            CaseKind::Doubling => "Doubling",
            CaseKind::SharedPlace => "SharedPlace",
            CaseKind::Fallback => "Fallback",
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl AdditionCase {
    pub fn kind(&self) -> CaseKind {
        match self {
            AdditionCase::DisjointGeneric => CaseKind::DisjointGeneric,
            AdditionCase::Doubling => CaseKind::Doubling,
            AdditionCase::SharedPlace(_) => CaseKind::SharedPlace,
            AdditionCase::Fallback(_) => CaseKind::Fallback,
        }
    }
}

impl fmt::Display for AdditionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdditionCase::Fallback(r) => write!(f, "Fallback({r})"),
            AdditionCase::SharedPlace(d) => write!(f, "SharedPlace(P={})", d.shared),
            other => write!(f, "{}", other.kind()),
        }
    }
}

/// Intermediate data of a non-fallback addition: the two Mumford forms the
/// system was built from and the cubic that solved it.
#[derive(Clone, Debug, PartialEq)]
pub struct AdditionTrace {
    pub forms: [(Poly, Poly); 2],
    pub cubic: InterpolationCubic,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdditionOutcome {
    pub result: MumfordDivisor,
    pub case: AdditionCase,
    pub trace: Option<AdditionTrace>,
}

// ---------------------------------------------------------------------------
// Row builders, generic so the figure renderer can reuse them over the reals.

/// Rows forcing `L = c*x + d mod x^2 + a*x + b`, from
/// `x^3 = (a^2 - b)*x + a*b mod u`.
pub fn case1_rows<S: Scalar>(a: S, b: S, c: S, d: S) -> [([S; 4], S); 2] {
    let zero = a.zero_like();
    let one = a.one_like();
    [([a * a - b, -a, one, zero], c), ([a * b, -b, zero, one], d)]
}

/// Rows forcing `L` through `(x0, y0)` with slope `slope`: the case-1 rows for
/// `u = (x - x0)^2`, `v = slope*(x - x0) + y0`.
pub fn tangent_rows<S: Scalar>(x0: S, y0: S, slope: S) -> [([S; 4], S); 2] {
    let zero = x0.zero_like();
    let one = x0.one_like();
    let two = x0.small_like(2);
    let three = x0.small_like(3);
    let sq = x0 * x0;
    [
        ([three * sq, two * x0, one, zero], slope),
        ([-(two * sq * x0), -sq, zero, one], y0 - slope * x0),
    ]
}

/// Rows forcing `L` through two points with distinct abscissas: the case-1
/// rows for `u = (x - mu_x)(x - omega_x)` and the chord through both.
pub fn chord_rows<S: Scalar>(mu: (S, S), omega: (S, S)) -> Option<[([S; 4], S); 2]> {
    let (mx, my) = mu;
    let (wx, wy) = omega;
    let dx_inv = (mx - wx).inverse()?;
    let slope = (my - wy) * dx_inv;
    let intercept = (mx * wy - wx * my) * dx_inv;
    let zero = mx.zero_like();
    let one = mx.one_like();
    let sum = mx + wx;
    let prod = mx * wx;
    Some([
        ([mx * mx + wx * sum, sum, one, zero], slope),
        ([-(mx * mx * wx) - mx * wx * wx, -prod, zero, one], intercept),
    ])
}

/// Slope of `y^2 = f(x)` at a point by implicit differentiation: `f'(x) / 2y`.
pub fn implicit_slope<S: Scalar>(fprime_at_x: S, y: S) -> Option<S> {
    let two = y.small_like(2);
    Some(fprime_at_x * (two * y).inverse()?)
}

// ---------------------------------------------------------------------------
// Prime-field system construction.

// Multiplications performed by the row builders above, for the op tallies.
const CASE1_ROW_MULTS: u64 = 2;
const TANGENT_ROW_MULTS: u64 = 6;
const CHORD_ROW_MULTS: u64 = 11;

fn require_weight_two(d: &MumfordDivisor) -> Result<()> {
    if d.weight() != 2 {
        return Err(Error::Precondition(format!("operand {d} has weight {}, expected 2", d.weight())));
    }
    Ok(())
}

fn form_rows(u: &Poly, v: &Poly) -> [([Fp; 4], Fp); 2] {
    case1_rows(u.coeff(1), u.coeff(0), v.coeff(1), v.coeff(0))
}

/// The disjoint-support system for `u1 = x^2 + a*x + b`, `v1 = c*x + d` and
/// `u2 = x^2 + A*x + B`, `v2 = C*x + D`.
pub fn build_case1_system(d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<System4<Fp>> {
    require_weight_two(d1)?;
    require_weight_two(d2)?;
    let [r1, r2] = form_rows(d1.u(), d1.v());
    let [r3, r4] = form_rows(d2.u(), d2.v());
    Ok(System4::from_rows([r1, r2, r3, r4]))
}

pub fn tangent_slope_with(curve: &CurveParams, p: AffinePoint, ops: &mut OpCount) -> Result<Fp> {
    if p.is_weierstrass() {
        return Err(Error::WeierstrassTangent);
    }
    let fp = curve.f().derivative().eval_with(p.x, ops);
    let inv = ops.inv(p.y.double())?;
    Ok(ops.mul(fp, inv))
}

pub fn tangent_slope(curve: &CurveParams, p: AffinePoint) -> Result<Fp> {
    tangent_slope_with(curve, p, &mut OpCount::default())
}

/// The Mumford pair of `2P - 2inf`: `<(x - Px)^2, slope*(x - Px) + Py>`.
pub fn tangent_form(curve: &CurveParams, p: AffinePoint) -> Result<(Poly, Poly)> {
    let slope = tangent_slope(curve, p)?;
    let lin = Poly::linear_root(p.x);
    let u = &lin * &lin;
    let v = Poly::new(curve.modulus(), vec![p.y - slope * p.x, slope]);
    Ok((u, v))
}

/// The Mumford pair of `mu + omega - 2inf` for distinct abscissas.
pub fn chord_form(mu: AffinePoint, omega: AffinePoint) -> Result<(Poly, Poly)> {
    if mu.x == omega.x {
        return Err(Error::Precondition("chord through points with equal abscissa".into()));
    }
    let u = &Poly::linear_root(mu.x) * &Poly::linear_root(omega.x);
    let slope = (mu.y - omega.y) * (mu.x - omega.x).inv()?;
    let v = Poly::new(mu.x.modulus(), vec![mu.y - slope * mu.x, slope]);
    Ok((u, v))
}

fn case2_system_with(
    curve: &CurveParams,
    mu: AffinePoint,
    omega: AffinePoint,
    ops: &mut OpCount,
) -> Result<System4<Fp>> {
    if mu.x == omega.x {
        return Err(Error::Precondition(format!("doubling needs distinct abscissas, got {mu} and {omega}")));
    }
    let lm = tangent_slope_with(curve, mu, ops)?;
    let lw = tangent_slope_with(curve, omega, ops)?;
    let [r1, r2] = tangent_rows(mu.x, mu.y, lm);
    let [r3, r4] = tangent_rows(omega.x, omega.y, lw);
    ops.mults += 2 * TANGENT_ROW_MULTS;
    Ok(System4::from_rows([r1, r2, r3, r4]))
}

/// The doubling system for `2[mu + omega - 2inf]`: a tangent pair of rows at each point.
pub fn build_case2_system(curve: &CurveParams, mu: AffinePoint, omega: AffinePoint) -> Result<System4<Fp>> {
    case2_system_with(curve, mu, omega, &mut OpCount::default())
}

fn shared_root(g: &Poly) -> Fp {
    debug_assert_eq!(g.degree(), Some(1));
    -g.coeff(0)
}

/// Common factor of the two `u`s, if any.
///
/// When the factor is linear its root is also `(B - b) / (a - A)` for
/// `u1 = x^2 + a*x + b`, `u2 = x^2 + A*x + B`; that identity is asserted.
pub fn detect_shared_place(d1: &MumfordDivisor, d2: &MumfordDivisor) -> Option<Poly> {
    detect_shared_place_with(d1, d2, &mut OpCount::default())
}

fn detect_shared_place_with(d1: &MumfordDivisor, d2: &MumfordDivisor, ops: &mut OpCount) -> Option<Poly> {
    let (u1, u2) = (d1.u(), d2.u());
    // gcd(u1, u2) = gcd(u2, u1 - u2) and u1 - u2 has degree at most one
    let diff = u1 - u2;
    let g = match diff.degree() {
        None => u1.clone(),
        Some(0) => Poly::one(u1.modulus()),
        Some(_) => {
            let lin = diff.monic_with(ops).expect("nonzero");
            if u2.eval_with(shared_root(&lin), ops).is_zero() {
                lin
            } else {
                Poly::one(u1.modulus())
            }
        }
    };
    debug_assert_eq!(Some(&g), u1.gcd(u2).ok().as_ref());
    if g.degree() == Some(1) {
        let (a, b) = (u1.coeff(1), u1.coeff(0));
        let (alpha, beta) = (u2.coeff(1), u2.coeff(0));
        debug_assert!(a != alpha);
        debug_assert_eq!(shared_root(&g), (beta - b) * (a - alpha).inv().expect("a != alpha"));
    }
    if g.degree() == Some(0) {
        None
    } else {
        Some(g)
    }
}

fn case3_system_with(
    curve: &CurveParams,
    dec: &SharedPlaceDecomposition,
    ops: &mut OpCount,
) -> Result<System4<Fp>> {
    let SharedPlaceDecomposition { shared, mu, omega } = *dec;
    if shared.x == mu.x || shared.x == omega.x {
        return Err(Error::Precondition("shared place repeated inside an operand".into()));
    }
    let slope = tangent_slope_with(curve, shared, ops)?;
    let [r1, r2] = tangent_rows(shared.x, shared.y, slope);
    let Some([r3, r4]) = chord_rows((mu.x, mu.y), (omega.x, omega.y)) else {
        return Err(Error::Precondition(format!("vertical chord through {mu} and {omega}")));
    };
    ops.mults += TANGENT_ROW_MULTS + CHORD_ROW_MULTS;
    ops.invs += 1;
    Ok(System4::from_rows([r1, r2, r3, r4]))
}

/// The shared-place system for `[2P - 2inf] + [mu + omega - 2inf]`.
pub fn build_case3_system(curve: &CurveParams, dec: &SharedPlaceDecomposition) -> Result<System4<Fp>> {
    case3_system_with(curve, dec, &mut OpCount::default())
}

/// Residual divisor of the cubic: `u3 = monic((L^2 - f) / (u1*u2))`, `v3 = -L mod u3`.
pub fn compose_from_cubic(curve: &CurveParams, cubic: &InterpolationCubic, u1: &Poly, u2: &Poly) -> Result<MumfordDivisor> {
    compose_from_cubic_with(curve, cubic, u1, u2, &mut OpCount::default())
}

pub fn compose_from_cubic_with(
    curve: &CurveParams,
    cubic: &InterpolationCubic,
    u1: &Poly,
    u2: &Poly,
    ops: &mut OpCount,
) -> Result<MumfordDivisor> {
    let l = cubic.to_poly();
    let num = &l.mul_with(&l, ops) - curve.f();
    let den = u1.mul_with(u2, ops);
    let q = num.div_exact_with(&den, ops)?;
    if q.degree().is_some_and(|d| d > 2) || q.is_zero() {
        return Err(Error::Internal(format!("residual quotient {q} has the wrong degree")));
    }
    let u3 = q.monic_with(ops)?;
    let v3 = (-&l).rem_with(&u3, ops)?;
    let out = MumfordDivisor::new_unchecked(u3, v3);
    debug_assert!(out.validate(curve));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Dispatch.

/// A classified addition, with the Mumford forms the explicit path will use.
struct Plan {
    case: AdditionCase,
    forms: Option<[(Poly, Poly); 2]>,
    system: Option<System4<Fp>>,
}

impl Plan {
    fn fallback(reason: FallbackReason) -> Self {
        Plan { case: AdditionCase::Fallback(reason), forms: None, system: None }
    }
}

fn plan(curve: &CurveParams, d1: &MumfordDivisor, d2: &MumfordDivisor, ops: &mut OpCount) -> Result<Plan> {
    for d in [d1, d2] {
        match d.weight() {
            0 => return Ok(Plan::fallback(FallbackReason::IdentityOperand)),
            1 => return Ok(Plan::fallback(FallbackReason::WeightOneOperand)),
            _ => {}
        }
    }
    if d1 == d2 {
        return plan_doubling(curve, d1, ops);
    }
    let Some(g) = detect_shared_place_with(d1, d2, ops) else {
        let system = build_case1_system(d1, d2)?;
        ops.mults += 2 * CASE1_ROW_MULTS;
        return Ok(Plan {
            case: AdditionCase::DisjointGeneric,
            forms: Some([(d1.u().clone(), d1.v().clone()), (d2.u().clone(), d2.v().clone())]),
            system: Some(system),
        });
    };
    if g.degree() == Some(2) {
        return Ok(Plan::fallback(FallbackReason::SameUDifferentV));
    }
    let s = shared_root(&g);
    let t1 = d1.v().eval_with(s, ops);
    let t2 = d2.v().eval_with(s, ops);
    if t1 != t2 {
        return Ok(Plan::fallback(FallbackReason::InvolutionPairShared));
    }
    if t1.is_zero() {
        return Ok(Plan::fallback(FallbackReason::WeierstrassTangent));
    }
    // the other roots from the root sums: u1 = x^2 + a x + b has roots s and -a - s
    let mu_x = -d1.u().coeff(1) - s;
    let omega_x = -d2.u().coeff(1) - s;
    if mu_x == s || omega_x == s {
        return Ok(Plan::fallback(FallbackReason::RepeatedSharedPlace));
    }
    // mu_x = omega_x would force u1 = u2, which the gcd already excluded
    debug_assert!(mu_x != omega_x);
    let shared = AffinePoint { x: s, y: t1 };
    let mu = AffinePoint { x: mu_x, y: d1.v().eval_with(mu_x, ops) };
    let omega = AffinePoint { x: omega_x, y: d2.v().eval_with(omega_x, ops) };
    let dec = SharedPlaceDecomposition { shared, mu, omega };
    let system = case3_system_with(curve, &dec, ops)?;
    let forms = [tangent_form(curve, shared)?, chord_form(mu, omega)?];
    Ok(Plan { case: AdditionCase::SharedPlace(dec), forms: Some(forms), system: Some(system) })
}

fn plan_doubling(curve: &CurveParams, d: &MumfordDivisor, ops: &mut OpCount) -> Result<Plan> {
    ops.sqrts += 1;
    let Some(pts) = d.support_points(curve) else {
        return Ok(Plan::fallback(FallbackReason::NonSplitDoubling));
    };
    let (mu, omega) = (pts[0], pts[1]);
    if mu == omega {
        return Ok(Plan::fallback(FallbackReason::RepeatedPointDoubling));
    }
    if mu.is_weierstrass() || omega.is_weierstrass() {
        return Ok(Plan::fallback(FallbackReason::WeierstrassTangent));
    }
    let system = case2_system_with(curve, mu, omega, ops)?;
    let forms = [tangent_form(curve, mu)?, tangent_form(curve, omega)?];
    Ok(Plan { case: AdditionCase::Doubling, forms: Some(forms), system: Some(system) })
}

/// Which formula `add` will use for this pair.
pub fn classify(curve: &CurveParams, d1: &MumfordDivisor, d2: &MumfordDivisor) -> AdditionCase {
    let mut ops = OpCount::default();
    match plan(curve, d1, d2, &mut ops) {
        Ok(Plan { system: Some(sys), .. }) if sys.solve().is_singular() => {
            AdditionCase::Fallback(FallbackReason::SingularGenericSystem)
        }
        Ok(p) => p.case,
        Err(_) => AdditionCase::Fallback(FallbackReason::SingularGenericSystem),
    }
}

/// Full addition with the case taken and, for explicit cases, the cubic.
pub fn add_traced(
    curve: &CurveParams,
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
    ops: &mut OpCount,
) -> Result<AdditionOutcome> {
    let p = plan(curve, d1, d2, ops)?;
    let (Some(system), Some(forms)) = (p.system, p.forms) else {
        let result = cantor::cantor_add_with(curve, d1, d2, ops)?;
        return Ok(AdditionOutcome { result, case: p.case, trace: None });
    };
    let Solution::Unique(x) = system.solve_with(ops) else {
        let result = cantor::cantor_add_with(curve, d1, d2, ops)?;
        return Ok(AdditionOutcome {
            result,
            case: AdditionCase::Fallback(FallbackReason::SingularGenericSystem),
            trace: None,
        });
    };
    let cubic = InterpolationCubic::from_solution(x);
    let result = compose_from_cubic_with(curve, &cubic, &forms[0].0, &forms[1].0, ops)?;
    Ok(AdditionOutcome { result, case: p.case, trace: Some(AdditionTrace { forms, cubic }) })
}

pub fn add_with(
    curve: &CurveParams,
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
    ops: &mut OpCount,
) -> Result<(MumfordDivisor, AdditionCase)> {
    add_traced(curve, d1, d2, ops).map(|o| (o.result, o.case))
}

/// `[D1] + [D2]`.
pub fn add(curve: &CurveParams, d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<MumfordDivisor> {
    Ok(add_with(curve, d1, d2, &mut OpCount::default())?.0)
}

/// `2[D]`, through the tangent construction whenever it applies.
pub fn double(curve: &CurveParams, d: &MumfordDivisor) -> Result<MumfordDivisor> {
    add(curve, d, d)
}

pub fn double_with(curve: &CurveParams, d: &MumfordDivisor, ops: &mut OpCount) -> Result<(MumfordDivisor, AdditionCase)> {
    add_with(curve, d, d, ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldModulus;
    use crate::group::enumerate_jacobian;

    fn f7() -> FieldModulus {
        FieldModulus::new(7).unwrap()
    }

    fn c7() -> CurveParams {
        CurveParams::from_ints(f7(), &[1, 0, 0, 0, 0, 1]).unwrap()
    }

    fn pt(x: u128, y: u128) -> AffinePoint {
        c7().point(f7().elem(x), f7().elem(y)).unwrap()
    }

    fn p7(c: &[i128]) -> Poly {
        Poly::from_ints(f7(), c)
    }

    fn row(vals: [i128; 5]) -> ([Fp; 4], Fp) {
        let m = f7();
        ([vals[0], vals[1], vals[2], vals[3]].map(|v| m.from_i128(v)), m.from_i128(vals[4]))
    }

    fn div(a: (u128, u128), b: (u128, u128)) -> MumfordDivisor {
        MumfordDivisor::from_points(&c7(), pt(a.0, a.1), pt(b.0, b.1)).unwrap()
    }

    #[test]
    fn case1_rows_by_substitution() {
        let c = c7();
        let x2 = MumfordDivisor::new(&c, p7(&[0, 0, 1]), Poly::zero(f7()));
        // x^2 | v^2 - f needs f(0) = 0, so build the all-zero system directly
        assert!(x2.is_err());
        let zero = f7().zero();
        let [r1, r2] = case1_rows(zero, zero, zero, zero);
        assert!(System4::from_rows([r1, r2, r1, r2]).solve().is_singular());

        let d1 = div((0, 1), (1, 3));
        let d2 = div((5, 2), (6, 0));
        assert_eq!(d2.u(), &p7(&[2, 3, 1]));
        assert_eq!(d2.v(), &p7(&[5, 5]));
        let sys = build_case1_system(&d1, &d2).unwrap();
        assert_eq!((sys.matrix[0], sys.rhs[0]), row([1, 1, 1, 0, 2]));
        assert_eq!((sys.matrix[1], sys.rhs[1]), row([0, 0, 0, 1, 1]));
        // a = 3, b = 2: a^2 - b = 7, ab = 6
        assert_eq!((sys.matrix[2], sys.rhs[2]), row([0, -3, 1, 0, 5]));
        assert_eq!((sys.matrix[3], sys.rhs[3]), row([6, -2, 0, 1, 5]));
        assert!(build_case1_system(&MumfordDivisor::identity(f7()), &d2).is_err());
    }

    #[test]
    fn case1_sum_matches_interpolation_oracle() {
        // L through (0,1), (1,3), (5,2), (6,0) by Lagrange interpolation is
        // 2x^3 + 4x^2 + 3x + 1 and the residual divisor is <x^2 + 1, 6x + 3>.
        let c = c7();
        let d1 = div((0, 1), (1, 3));
        let d2 = div((5, 2), (6, 0));
        let out = add_traced(&c, &d1, &d2, &mut OpCount::default()).unwrap();
        assert_eq!(out.case, AdditionCase::DisjointGeneric);
        assert_eq!(out.trace.unwrap().cubic.to_poly(), p7(&[1, 3, 4, 2]));
        assert_eq!(out.result, MumfordDivisor::new(&c, p7(&[1, 0, 1]), p7(&[3, 6])).unwrap());
        assert_eq!(out.result, cantor::cantor_add(&c, &d1, &d2).unwrap());
    }

    #[test]
    fn tangent_slope_examples() {
        let c = c7();
        assert_eq!(tangent_slope(&c, pt(1, 3)).unwrap(), f7().elem(2));
        assert_eq!(tangent_slope(&c, pt(6, 0)), Err(Error::WeierstrassTangent));
        for p in c.enumerate_points(1000).unwrap().into_iter().filter(|p| !p.is_weierstrass()) {
            assert_eq!(tangent_slope(&c, p.involute()).unwrap(), -tangent_slope(&c, p).unwrap());
        }
    }

    #[test]
    fn case2_rows_are_case1_rows_of_tangent_forms() {
        let c = c7();
        let (mu, omega) = (pt(1, 3), pt(5, 2));
        let sys = build_case2_system(&c, mu, omega).unwrap();
        assert_eq!((sys.matrix[0], sys.rhs[0]), row([3, 2, 1, 0, 2]));
        let (u1, v1) = tangent_form(&c, mu).unwrap();
        let (u2, v2) = tangent_form(&c, omega).unwrap();
        let d1 = MumfordDivisor::new(&c, u1, v1).unwrap();
        let d2 = MumfordDivisor::new(&c, u2, v2).unwrap();
        assert_eq!(build_case1_system(&d1, &d2).unwrap(), sys);
        assert!(build_case2_system(&c, mu, mu).is_err());
        assert!(build_case2_system(&c, mu, pt(6, 0)).is_err());
    }

    #[test]
    fn shared_place_detection() {
        let c = c7();
        let d1 = div((0, 1), (1, 3));
        let d2 = div((0, 1), (5, 2));
        assert_eq!(d2.u(), &p7(&[0, 2, 1]));
        assert_eq!(detect_shared_place(&d1, &d2), Some(Poly::x(f7())));
        assert_eq!(detect_shared_place(&d1, &d1), Some(d1.u().clone()));
        assert_eq!(detect_shared_place(&d1, &div((5, 2), (6, 0))), None);
        match classify(&c, &d1, &d2) {
            AdditionCase::SharedPlace(dec) => {
                assert_eq!(dec.shared, pt(0, 1));
                assert_eq!(dec.mu, pt(1, 3));
                assert_eq!(dec.omega, pt(5, 2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn case3_chord_rows_are_case1_rows() {
        let c = c7();
        let dec = SharedPlaceDecomposition { shared: pt(0, 1), mu: pt(1, 3), omega: pt(5, 2) };
        let sys = build_case3_system(&c, &dec).unwrap();
        let (u1, v1) = tangent_form(&c, dec.shared).unwrap();
        let d1 = MumfordDivisor::new(&c, u1, v1).unwrap();
        let d2 = MumfordDivisor::from_points(&c, dec.mu, dec.omega).unwrap();
        assert_eq!(build_case1_system(&d1, &d2).unwrap(), sys);
        // horizontal chord: slope 0 and intercept mu_y
        let flat = chord_rows((f7().elem(0), f7().elem(1)), (f7().elem(3), f7().elem(1))).unwrap();
        assert_eq!(flat[0].1, f7().zero());
        assert_eq!(flat[1].1, f7().one());
        let bad = SharedPlaceDecomposition { shared: pt(0, 1), mu: pt(1, 3), omega: pt(1, 4) };
        assert!(build_case3_system(&c, &bad).is_err());
        let weier = SharedPlaceDecomposition { shared: pt(6, 0), mu: pt(1, 3), omega: pt(5, 2) };
        assert!(build_case3_system(&c, &weier).is_err());
    }

    #[test]
    fn classify_examples() {
        let c = c7();
        let d = div((0, 1), (1, 3));
        let id = MumfordDivisor::identity(f7());
        assert_eq!(classify(&c, &d, &d), AdditionCase::Doubling);
        assert_eq!(classify(&c, &id, &d), AdditionCase::Fallback(FallbackReason::IdentityOperand));
        assert_eq!(classify(&c, &d, &d.negate()), AdditionCase::Fallback(FallbackReason::SameUDifferentV));
        let w = div((1, 3), (6, 0));
        assert_eq!(classify(&c, &w, &w), AdditionCase::Fallback(FallbackReason::WeierstrassTangent));
        let single = MumfordDivisor::from_single(&c, pt(5, 2)).unwrap();
        assert_eq!(classify(&c, &d, &single), AdditionCase::Fallback(FallbackReason::WeightOneOperand));
        // (0,1)+(1,3) and (0,6)+(5,2) share x = 0 with opposite points
        assert_eq!(
            classify(&c, &d, &div((0, 6), (5, 2))),
            AdditionCase::Fallback(FallbackReason::InvolutionPairShared)
        );
        // 2(1,3) and (1,3)+(0,1) share (1,3), which is doubled inside the first operand
        let (u, v) = tangent_form(&c, pt(1, 3)).unwrap();
        let twice = MumfordDivisor::new(&c, u, v).unwrap();
        assert_eq!(
            classify(&c, &twice, &div((1, 3), (0, 1))),
            AdditionCase::Fallback(FallbackReason::RepeatedSharedPlace)
        );
    }

    #[test]
    fn identity_and_inverse_through_dispatch() {
        let c = c7();
        let id = MumfordDivisor::identity(f7());
        for d in enumerate_jacobian(&c, 1000).unwrap() {
            assert_eq!(add(&c, &id, &d).unwrap(), d);
            assert_eq!(add(&c, &d, &id).unwrap(), d);
            assert!(add(&c, &d, &d.negate()).unwrap().is_identity());
        }
        assert_eq!(double(&c, &id).unwrap(), id);
    }

    #[test]
    fn doubling_matches_cantor_and_is_tangent() {
        let c = c7();
        let fprime = c.f().derivative();
        for d in enumerate_jacobian(&c, 1000).unwrap() {
            let out = add_traced(&c, &d, &d, &mut OpCount::default()).unwrap();
            assert_eq!(out.result, cantor::cantor_add(&c, &d, &d).unwrap());
            assert!(out.result.validate(&c));
            if out.case == AdditionCase::Doubling {
                let cubic = out.trace.unwrap().cubic;
                for p in d.support_points(&c).unwrap() {
                    assert_eq!(cubic.eval(p.x), p.y);
                    assert_eq!(cubic.slope_at(p.x), fprime.eval(p.x) * p.y.double().inv().unwrap());
                }
            }
        }
    }

    #[test]
    fn every_explicit_case_interpolates_its_forms() {
        let c = c7();
        let all = enumerate_jacobian(&c, 1000).unwrap();
        for d1 in &all {
            for d2 in &all {
                let out = add_traced(&c, d1, d2, &mut OpCount::default()).unwrap();
                let Some(trace) = out.trace else { continue };
                let l = trace.cubic.to_poly();
                for (u, v) in &trace.forms {
                    assert!((&l - v).rem(u).unwrap().is_zero());
                }
                let prod = &trace.forms[0].0 * &trace.forms[1].0;
                assert!((&(&l * &l) - c.f()).rem(&prod).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn float_builders_agree_with_case1_rows() {
        let (mx, my, wx, wy) = (0.5f64, 1.25, -1.5, 0.75);
        let chord = chord_rows((mx, my), (wx, wy)).unwrap();
        let a = -(mx + wx);
        let b = mx * wx;
        let slope = (my - wy) / (mx - wx);
        let generic = case1_rows(a, b, slope, my - slope * mx);
        for (r, g) in chord.iter().zip(generic.iter()) {
            for k in 0..4 {
                assert!((r.0[k] - g.0[k]).abs() < 1e-12);
            }
            assert!((r.1 - g.1).abs() < 1e-12);
        }
    }
}
