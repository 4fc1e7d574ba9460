//! Field-operation and timing comparison between the explicit formulas and
//! Cantor's algorithm on random divisors over a large prime.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cantor;
use crate::curve::{AffinePoint, CurveParams};
use crate::error::Result;
use crate::explicit::{self, AdditionCase, CaseKind};
use crate::field::OpCount;
use crate::mumford::MumfordDivisor;

/// Totals for one row of the table.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub additions: u64,
    pub mults: u64,
    pub invs: u64,
    pub sqrts: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl BenchRow {
    fn add(&mut self, ops: OpCount, elapsed: Duration) {
        self.additions += 1;
        self.mults += ops.mults;
        self.invs += ops.invs;
        self.sqrts += ops.sqrts;
        self.elapsed += elapsed;
    }

    fn mean(&self, total: u64) -> f64 {
        if self.additions == 0 {
            0.0
        } else {
            total as f64 / self.additions as f64
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BenchReport {
    pub modulus: u128,
    pub iterations: usize,
    /// Explicit additions keyed by the case they took.
    pub explicit: BTreeMap<CaseKind, BenchRow>,
    /// Cantor's algorithm on the same operands.
    pub cantor: BenchRow,
    pub mismatches: u64,
}

/// Row labels, in table order.
pub const ROW_LABELS: [(&str, Option<CaseKind>); 5] = [
    ("case1", Some(CaseKind::DisjointGeneric)),
    ("case2", Some(CaseKind::Doubling)),
    ("case3", Some(CaseKind::SharedPlace)),
    ("fallback", Some(CaseKind::Fallback)),
    ("cantor", None),
];

impl BenchReport {
    fn row(&self, kind: Option<CaseKind>) -> BenchRow {
        match kind {
            Some(k) => self.explicit.get(&k).copied().unwrap_or_default(),
            None => self.cantor,
        }
    }

    /// The deterministic part of the report: counts only, no timings.
    pub fn render_counts(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<10} {:>8} {:>12} {:>10} {:>10}", "row", "adds", "mults", "invs", "sqrts");
        for (label, kind) in ROW_LABELS {
            let r = self.row(kind);
            let _ = writeln!(s, "{:<10} {:>8} {:>12} {:>10} {:>10}", label, r.additions, r.mults, r.invs, r.sqrts);
        }
        s
    }

    pub fn render_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "p = {} ({} bits), {} additions", self.modulus, 128 - self.modulus.leading_zeros(), self.iterations);
        let _ = writeln!(
            s,
            "{:<10} {:>8} {:>12} {:>10} {:>10} {:>12}",
            "row", "adds", "mults/add", "invs/add", "sqrts/add", "us/add"
        );
        for (label, kind) in ROW_LABELS {
            let r = self.row(kind);
            let us = if r.additions == 0 { 0.0 } else { r.elapsed.as_secs_f64() * 1e6 / r.additions as f64 };
            let _ = writeln!(
                s,
                "{:<10} {:>8} {:>12.1} {:>10.2} {:>10.2} {:>12.2}",
                label,
                r.additions,
                r.mean(r.mults),
                r.mean(r.invs),
                r.mean(r.sqrts),
                us
            );
        }
        let _ = writeln!(s, "cross-check mismatches: {}", self.mismatches);
        s
    }
}

fn distinct_x_point(curve: &CurveParams, rng: &mut ChaCha8Rng, avoid: &[AffinePoint]) -> AffinePoint {
    loop {
        let p = curve.random_point(rng);
        if avoid.iter().all(|q| q.x != p.x) {
            return p;
        }
    }
}

/// One operand pair. Iterations cycle through generic, doubling,
/// shared-place and degenerate inputs so that every row is populated.
fn operands(curve: &CurveParams, rng: &mut ChaCha8Rng, i: usize) -> Result<(MumfordDivisor, MumfordDivisor)> {
    let a = curve.random_point(rng);
    let b = distinct_x_point(curve, rng, &[a]);
    let d1 = MumfordDivisor::from_points(curve, a, b)?;
    Ok(match i % 4 {
        0 => {
            let c = distinct_x_point(curve, rng, &[a, b]);
            let d = distinct_x_point(curve, rng, &[a, b, c]);
            (d1, MumfordDivisor::from_points(curve, c, d)?)
        }
        1 => (d1.clone(), d1),
        2 => {
            let c = distinct_x_point(curve, rng, &[a, b]);
            (d1, MumfordDivisor::from_points(curve, a, c)?)
        }
        _ => {
            if rng.gen_bool(0.5) {
                (d1.clone(), d1.negate())
            } else {
                let c = curve.random_point(rng);
                (d1, MumfordDivisor::from_single(curve, c)?)
            }
        }
    })
}

pub fn run_bench(curve: &CurveParams, iterations: usize, seed: u64) -> Result<BenchReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = BenchReport { modulus: curve.modulus().value(), iterations, ..Default::default() };
    for i in 0..iterations {
        let (d1, d2) = operands(curve, &mut rng, i)?;

        let mut ops = OpCount::default();
        let start = Instant::now();
        let (got, case): (MumfordDivisor, AdditionCase) = explicit::add_with(curve, &d1, &d2, &mut ops)?;
        let elapsed = start.elapsed();
        report.explicit.entry(case.kind()).or_default().add(ops, elapsed);

        let mut cops = OpCount::default();
        let start = Instant::now();
        let want = cantor::cantor_add_with(curve, &d1, &d2, &mut cops)?;
        report.cantor.add(cops, start.elapsed());

        if got != want {
            report.mismatches += 1;
        }
    }
    Ok(report)
}
