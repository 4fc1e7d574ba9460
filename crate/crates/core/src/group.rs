//! Group-level operations on the Jacobian: scalar multiplication, element
//! enumeration and orders, plus the exhaustive oracle sweep.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cantor;
use crate::curve::CurveParams;
use crate::error::{Error, Result};
use crate::explicit::{self, AdditionCase, CaseKind, FallbackReason};
use crate::field::OpCount;
use crate::mumford::MumfordDivisor;
use crate::poly::Poly;

/// Field-operation and case tallies, accumulated explicitly by the caller.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OpCounters {
    pub field_mults: u64,
    pub field_invs: u64,
    pub field_sqrts: u64,
    pub case_tally: BTreeMap<CaseKind, u64>,
}

impl OpCounters {
    pub fn record(&mut self, case: &AdditionCase, ops: OpCount) {
        self.field_mults += ops.mults;
        self.field_invs += ops.invs;
        self.field_sqrts += ops.sqrts;
        *self.case_tally.entry(case.kind()).or_default() += 1;
    }

    pub fn merge(&mut self, other: &OpCounters) {
        self.field_mults += other.field_mults;
        self.field_invs += other.field_invs;
        self.field_sqrts += other.field_sqrts;
        for (k, v) in &other.case_tally {
            *self.case_tally.entry(*k).or_default() += v;
        }
    }

    pub fn additions(&self) -> u64 {
        self.case_tally.values().sum()
    }
}

/// Explicit-formula addition that records its cost into `counters`.
pub fn add_counted(
    curve: &CurveParams,
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
    counters: &mut OpCounters,
) -> Result<MumfordDivisor> {
    let mut ops = OpCount::default();
    let (r, case) = explicit::add_with(curve, d1, d2, &mut ops)?;
    counters.record(&case, ops);
    Ok(r)
}

/// `n * D` by left-to-right double-and-add over the explicit group law.
pub fn scalar_mul_with(
    curve: &CurveParams,
    n: u128,
    d: &MumfordDivisor,
    counters: &mut OpCounters,
) -> Result<MumfordDivisor> {
    let mut acc = MumfordDivisor::identity(curve.modulus());
    if n == 0 {
        return Ok(acc);
    }
    for i in (0..128 - n.leading_zeros()).rev() {
        acc = add_counted(curve, &acc, &acc, counters)?;
        if (n >> i) & 1 == 1 {
            acc = add_counted(curve, &acc, d, counters)?;
        }
    }
    Ok(acc)
}

pub fn scalar_mul(curve: &CurveParams, n: u128, d: &MumfordDivisor) -> Result<MumfordDivisor> {
    scalar_mul_with(curve, n, d, &mut OpCounters::default())
}

/// The same ladder over Cantor's algorithm.
pub fn scalar_mul_cantor(curve: &CurveParams, n: u128, d: &MumfordDivisor) -> Result<MumfordDivisor> {
    let mut acc = MumfordDivisor::identity(curve.modulus());
    for i in (0..128 - n.leading_zeros()).rev() {
        acc = cantor::cantor_add(curve, &acc, &acc)?;
        if (n >> i) & 1 == 1 {
            acc = cantor::cantor_add(curve, &acc, d)?;
        }
    }
    Ok(acc)
}

/// Every reduced divisor class, by scanning monic `u` with `deg u <= 2` and
/// solving `v^2 = f mod u` coefficientwise.
///
/// Order: identity, then weight one by `x`, then weight two by `(b, a)` of
/// `u = x^2 + a x + b`, then `v` ascending.
pub fn enumerate_jacobian(curve: &CurveParams, bound: u128) -> Result<Vec<MumfordDivisor>> {
    curve.check_enumerable(bound)?;
    let m = curve.modulus();
    let mut out = vec![MumfordDivisor::identity(m)];
    for pt in curve.enumerate_points(bound)? {
        out.push(MumfordDivisor::from_single(curve, pt)?);
    }
    let elems: Vec<_> = m.elements().collect();
    let two_inv = m.elem(2).inv()?;
    for &b in &elems {
        for &a in &elems {
            let u = Poly::new(m, vec![b, a, m.one()]);
            let r = curve.f().rem(&u)?;
            let (f0, f1) = (r.coeff(0), r.coeff(1));
            // v = c x + d:  v^2 = (2cd - a c^2) x + (d^2 - b c^2)  mod u
            let mut found = Vec::new();
            for &c in &elems {
                if c.is_zero() {
                    if f1.is_zero() {
                        found.extend(f0.square_roots().into_iter().map(|d| (c, d)));
                    }
                    continue;
                }
                let c2 = c.square();
                let d = (f1 + a * c2) * two_inv * c.inv()?;
                if d.square() - b * c2 == f0 {
                    found.push((c, d));
                }
            }
            found.sort_by_key(|&(c, d)| (c, d));
            for (c, d) in found {
                let v = Poly::new(m, vec![d, c]);
                out.push(MumfordDivisor::new_unchecked(u.clone(), v));
            }
        }
    }
    Ok(out)
}

/// Hasse-Weil upper bound `(sqrt(p) + 1)^4` on the Jacobian order.
fn hasse_weil_bound(curve: &CurveParams) -> u128 {
    let p = curve.modulus().value() as f64;
    ((p.sqrt() + 1.0).powi(4)).ceil() as u128
}

/// Least `n >= 1` with `n * D = 0`, by repeated addition.
pub fn element_order(curve: &CurveParams, d: &MumfordDivisor) -> Result<u128> {
    let limit = hasse_weil_bound(curve);
    let mut acc = d.clone();
    let mut n = 1u128;
    while !acc.is_identity() {
        acc = explicit::add(curve, &acc, d)?;
        n += 1;
        if n > limit {
            return Err(Error::Internal(format!("order of {d} exceeds the Hasse-Weil bound {limit}")));
        }
    }
    Ok(n)
}

/// A pair on which the explicit and Cantor results disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub left: String,
    pub right: String,
    pub explicit: String,
    pub cantor: String,
    pub case: String,
}

/// Outcome of comparing explicit addition with Cantor on all ordered pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub modulus: u128,
    pub curve: String,
    pub group_order: usize,
    pub pairs: u64,
    pub mismatches: Vec<Mismatch>,
    pub counters: OpCounters,
    pub fallback_reasons: BTreeMap<String, u64>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn case_count(&self, kind: CaseKind) -> u64 {
        self.counters.case_tally.get(&kind).copied().unwrap_or(0)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("curve: {}\n", self.curve));
        s.push_str(&format!("group order: {}\n", self.group_order));
        s.push_str(&format!("pairs checked: {}\n", self.pairs));
        s.push_str(&format!("mismatches: {}\n", self.mismatches.len()));
        s.push_str("cases:\n");
        for kind in CaseKind::ALL {
            s.push_str(&format!("  {:<16} {}\n", kind.name(), self.case_count(kind)));
        }
        s.push_str("fallback reasons:\n");
        for (r, n) in &self.fallback_reasons {
            s.push_str(&format!("  {r:<40} {n}\n"));
        }
        for m in &self.mismatches {
            s.push_str(&format!(
                "MISMATCH {} + {}: explicit {} cantor {} ({})\n",
                m.left, m.right, m.explicit, m.cantor, m.case
            ));
        }
        s
    }
}

#[derive(Default)]
struct RowResult {
    counters: OpCounters,
    reasons: BTreeMap<FallbackReason, u64>,
    mismatches: Vec<Mismatch>,
}

/// Compares `explicit::add` with `cantor_add` on every ordered pair of
/// reduced divisors. Rows are processed in parallel and merged in order.
pub fn oracle_sweep(curve: &CurveParams, bound: u128) -> Result<SweepReport> {
    let all = enumerate_jacobian(curve, bound)?;
    let rows: Vec<Result<RowResult>> = all
        .par_iter()
        .map(|d1| {
            let mut row = RowResult::default();
            for d2 in &all {
                let mut ops = OpCount::default();
                let (got, case) = explicit::add_with(curve, d1, d2, &mut ops)?;
                row.counters.record(&case, ops);
                if let AdditionCase::Fallback(r) = case {
                    *row.reasons.entry(r).or_default() += 1;
                }
                let want = cantor::cantor_add(curve, d1, d2)?;
                if got != want {
                    row.mismatches.push(Mismatch {
                        left: d1.to_string(),
                        right: d2.to_string(),
                        explicit: got.to_string(),
                        cantor: want.to_string(),
                        case: case.to_string(),
                    });
                }
            }
            Ok(row)
        })
        .collect();
    let mut report = SweepReport {
        modulus: curve.modulus().value(),
        curve: curve.to_string(),
        group_order: all.len(),
        pairs: (all.len() * all.len()) as u64,
        ..Default::default()
    };
    let mut reasons = BTreeMap::<FallbackReason, u64>::new();
    for row in rows {
        let row = row?;
        report.counters.merge(&row.counters);
        for (r, n) in row.reasons {
            *reasons.entry(r).or_default() += n;
        }
        report.mismatches.extend(row.mismatches);
    }
    report.fallback_reasons = reasons.into_iter().map(|(r, n)| (r.to_string(), n)).collect();
    Ok(report)
}
