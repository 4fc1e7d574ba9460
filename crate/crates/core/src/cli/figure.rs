//! SVG sketches of the three addition constructions over the real numbers.
//!
//! This is the only floating-point code in the crate. The cubic comes from
//! the same row builders as the prime-field path, instantiated at `f64`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::explicit::{chord_rows, implicit_slope, tangent_rows, InterpolationCubic};
use crate::linsolve::System4;

/// `f(x) = x^5 - 5x^3 + 4x + 1`, ascending.
pub const DEMO_QUINTIC: [f64; 6] = [1.0, 4.0, 0.0, -5.0, 0.0, 1.0];

const X_RANGE: (f64, f64) = (-2.4, 2.8);
const Y_RANGE: (f64, f64) = (-7.0, 7.0);
const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 640.0;
const SAMPLES: usize = 1200;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstructionPoint {
    pub x: f64,
    pub y: f64,
    /// 2 where the cubic is tangent to the curve.
    pub multiplicity: u8,
    pub residual: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Figure {
    pub case: u8,
    pub cubic: InterpolationCubic<f64>,
    /// Input places and the two residual intersections, with multiplicity summing to six.
    pub construction: Vec<ConstructionPoint>,
    /// The sum: residual points reflected through the x-axis.
    pub result: Vec<(f64, f64)>,
}

fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs.iter().enumerate().skip(1).map(|(i, &c)| i as f64 * c).collect()
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Quotient of `num / den` (ascending coefficients, `den` monic).
fn poly_div(num: &[f64], den: &[f64]) -> Vec<f64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0.0; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let q = rem[k + dd] / den[dd];
        quot[k] = q;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= q * d;
        }
    }
    quot
}

fn curve_point(x: f64, sign: f64) -> (f64, f64) {
    (x, sign * eval(&DEMO_QUINTIC, x).sqrt())
}

fn slope(x: f64, y: f64) -> f64 {
    implicit_slope(eval(&derivative(&DEMO_QUINTIC), x), y).expect("fixtures avoid y = 0")
}

fn chord_u(a: f64, b: f64) -> Vec<f64> {
    vec![a * b, -(a + b), 1.0]
}

fn tangent_u(a: f64) -> Vec<f64> {
    vec![a * a, -2.0 * a, 1.0]
}

impl Figure {
    /// Builds the curated figure for case 1 (disjoint), 2 (doubling) or 3 (shared place).
    pub fn build(case: u8) -> Result<Figure> {
        let (rows, u1, u2, inputs) = match case {
            1 => {
                let p = [curve_point(1.0, 1.0), curve_point(-0.1, -1.0), curve_point(2.1, -1.0), curve_point(-1.9, 1.0)];
                let [r1, r2] = chord_rows(p[0], p[1]).expect("distinct abscissas");
                let [r3, r4] = chord_rows(p[2], p[3]).expect("distinct abscissas");
                let inputs = p.iter().map(|&(x, y)| (x, y, 1u8)).collect::<Vec<_>>();
                ([r1, r2, r3, r4], chord_u(p[0].0, p[1].0), chord_u(p[2].0, p[3].0), inputs)
            }
            2 => {
                let mu = curve_point(-1.9, -1.0);
                let omega = curve_point(2.5, -1.0);
                let [r1, r2] = tangent_rows(mu.0, mu.1, slope(mu.0, mu.1));
                let [r3, r4] = tangent_rows(omega.0, omega.1, slope(omega.0, omega.1));
                let inputs = vec![(mu.0, mu.1, 2u8), (omega.0, omega.1, 2u8)];
                ([r1, r2, r3, r4], tangent_u(mu.0), tangent_u(omega.0), inputs)
            }
            3 => {
                let shared = curve_point(0.3, 1.0);
                let mu = curve_point(-2.0, 1.0);
                let omega = curve_point(1.0, -1.0);
                let [r1, r2] = tangent_rows(shared.0, shared.1, slope(shared.0, shared.1));
                let [r3, r4] = chord_rows(mu, omega).expect("distinct abscissas");
                let inputs = vec![(shared.0, shared.1, 2u8), (mu.0, mu.1, 1), (omega.0, omega.1, 1)];
                ([r1, r2, r3, r4], tangent_u(shared.0), chord_u(mu.0, omega.0), inputs)
            }
            other => return Err(Error::Precondition(format!("figure case must be 1, 2 or 3, got {other}"))),
        };
        let sol = System4::from_rows(rows)
            .solve()
            .unique()
            .ok_or_else(|| Error::Internal("figure system is singular".into()))?;
        let cubic = InterpolationCubic::from_solution(sol);
        let l = [cubic.p0, cubic.p1, cubic.p2, cubic.p3];
        let mut num = poly_mul(&l, &l);
        for (i, &c) in DEMO_QUINTIC.iter().enumerate() {
            num[i] -= c;
        }
        let q = poly_div(&num, &poly_mul(&u1, &u2));
        let (a, b) = (q[1] / q[2], q[0] / q[2]);
        let disc = a * a - 4.0 * b;
        if disc < 0.0 {
            return Err(Error::Internal("residual intersections are not real".into()));
        }
        let roots = [(-a - disc.sqrt()) / 2.0, (-a + disc.sqrt()) / 2.0];

        let mut construction: Vec<ConstructionPoint> = inputs
            .into_iter()
            .map(|(x, y, multiplicity)| ConstructionPoint { x, y, multiplicity, residual: false })
            .collect();
        let mut result = Vec::new();
        for x in roots {
            let sign = if cubic.eval(x) < 0.0 { -1.0 } else { 1.0 };
            let (x, y) = curve_point(x, sign);
            construction.push(ConstructionPoint { x, y, multiplicity: 1, residual: true });
            result.push((x, -y));
        }
        Ok(Figure { case, cubic, construction, result })
    }

    pub fn to_svg(&self) -> String {
        let sx = |x: f64| (x - X_RANGE.0) / (X_RANGE.1 - X_RANGE.0) * WIDTH;
        let sy = |y: f64| (Y_RANGE.1 - y) / (Y_RANGE.1 - Y_RANGE.0) * HEIGHT;
        let title = match self.case {
            1 => "Disjoint supports",
            2 => "Doubling",
            _ => "Shared place",
        };
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" data-case="{}" data-f="{}">"#,
            self.case,
            join(&DEMO_QUINTIC)
        );
        let _ = writeln!(s, "  <title>{title}</title>");
        let _ = writeln!(s, r#"  <rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
        let _ = writeln!(
            s,
            r##"  <line x1="0" y1="{y0}" x2="{WIDTH}" y2="{y0}" stroke="#999" stroke-width="1"/>"##,
            y0 = sy(0.0)
        );
        let _ = writeln!(
            s,
            r##"  <line x1="{x0}" y1="0" x2="{x0}" y2="{HEIGHT}" stroke="#999" stroke-width="1"/>"##,
            x0 = sx(0.0)
        );

        // curve: both branches, broken wherever f < 0
        for sign in [1.0, -1.0] {
            let mut seg: Vec<(f64, f64)> = Vec::new();
            let mut segments = Vec::new();
            for i in 0..=SAMPLES {
                let x = X_RANGE.0 + (X_RANGE.1 - X_RANGE.0) * i as f64 / SAMPLES as f64;
                let fx = eval(&DEMO_QUINTIC, x);
                if fx >= 0.0 {
                    seg.push((x, sign * fx.sqrt()));
                } else if !seg.is_empty() {
                    segments.push(std::mem::take(&mut seg));
                }
            }
            if !seg.is_empty() {
                segments.push(seg);
            }
            for seg in segments {
                let _ = writeln!(
                    s,
                    r##"  <polyline class="curve" fill="none" stroke="#222" stroke-width="2" points="{}"/>"##,
                    points(&seg, sx, sy)
                );
            }
        }

        let cubic_pts: Vec<(f64, f64)> = (0..=SAMPLES)
            .map(|i| {
                let x = X_RANGE.0 + (X_RANGE.1 - X_RANGE.0) * i as f64 / SAMPLES as f64;
                (x, self.cubic.eval(x).clamp(Y_RANGE.0 * 4.0, Y_RANGE.1 * 4.0))
            })
            .collect();
        let c = &self.cubic;
        let _ = writeln!(
            s,
            r##"  <polyline id="cubic" class="cubic" fill="none" stroke="#c33" stroke-width="1.5" data-coeffs="{}" points="{}"/>"##,
            join(&[c.p0, c.p1, c.p2, c.p3]),
            points(&cubic_pts, sx, sy)
        );

        for p in &self.construction {
            let _ = writeln!(
                s,
                r##"  <circle class="construction" cx="{:.3}" cy="{:.3}" r="5" fill="{}" data-x="{}" data-y="{}" data-multiplicity="{}" data-residual="{}"/>"##,
                sx(p.x),
                sy(p.y),
                if p.residual { "#888" } else { "#000" },
                p.x,
                p.y,
                p.multiplicity,
                p.residual
            );
        }
        for &(x, y) in &self.result {
            let _ = writeln!(
                s,
                r##"  <circle class="result" cx="{:.3}" cy="{:.3}" r="6" fill="#1f5fd6" data-x="{x}" data-y="{y}"/>"##,
                sx(x),
                sy(y)
            );
            // dashed segment from the residual intersection to its mirror image
            let _ = writeln!(
                s,
                r##"  <line class="involution" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#1f5fd6" stroke-dasharray="4 3"/>"##,
                sx(x),
                sy(-y),
                sx(x),
                sy(y)
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn join(v: &[f64]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn points(pts: &[(f64, f64)], sx: impl Fn(f64) -> f64, sy: impl Fn(f64) -> f64) -> String {
    pts.iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
        .collect::<Vec<_>>()
        .join(" ")
}
