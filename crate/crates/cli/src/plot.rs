//   Copyright 2026 The tugames Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

//! SVG drawing of three-player solution sets in barycentric coordinates.

use std::fmt::Write;

use tugames::game::PayoffVector;
use tugames::rational::{self, Rational};
use tugames::solutions::SolutionReport;
use tugames::Game;

use crate::Failure;

const SCALE: f64 = 100.0;

/// Formats `x` with six significant digits and no trailing zeros.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".into();
    }
    let decimals = (5 - x.abs().log10().floor() as i32).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

struct Map {
    s: Rational,
}

impl Map {
    /// Plane position of `x`; the imputation triangle becomes
    /// `(−1, 0), (1, 0), (0, √3)`.
    fn place(&self, x: &PayoffVector) -> (f64, f64) {
        let c = x.coords();
        let u = rational::to_f64(&((&c[1] - &c[0]) / &self.s));
        let w = rational::to_f64(&(&c[2] / &self.s));
        (u * SCALE, -(w * 3f64.sqrt()) * SCALE)
    }
}

/// Sorts the vertices of a planar convex set around their centroid.
fn around(points: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    let k = points.len() as f64;
    let (cx, cy) = points.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x / k, b + y / k));
    let mut points = points;
    points.sort_by(|a, b| (a.1 - cy).atan2(a.0 - cx).total_cmp(&(b.1 - cy).atan2(b.0 - cx)));
    points
}

fn shape(out: &mut String, class: &str, points: Vec<(f64, f64)>, radius: f64) {
    match points.len() {
        0 => {}
        1 => {
            let _ = writeln!(
                out,
                r#"  <circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
                sig6(points[0].0),
                sig6(points[0].1),
                sig6(radius)
            );
        }
        2 => {
            let _ = writeln!(
                out,
                r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                sig6(points[0].0),
                sig6(points[0].1),
                sig6(points[1].0),
                sig6(points[1].1)
            );
        }
        _ => {
            let list: Vec<String> = around(points)
                .iter()
                .map(|(x, y)| format!("{},{}", sig6(*x), sig6(*y)))
                .collect();
            let _ = writeln!(out, r#"  <polygon class="{class}" points="{}"/>"#, list.join(" "));
        }
    }
}

pub fn svg(game: &Game, report: &SolutionReport) -> Result<String, Failure> {
    if game.n() != 3 {
        return Err(Failure::usage("plot needs a three-player game"));
    }
    let total = game.grand_value().clone();
    let map = Map {
        s: if total == rational::int(0) {
            rational::int(1)
        } else {
            total.clone()
        },
    };
    let simplex: Vec<PayoffVector> = (0..3)
        .map(|i| {
            PayoffVector::new(
                (0..3)
                    .map(|j| if i == j { map.s.clone() } else { rational::int(0) })
                    .collect(),
            )
        })
        .collect();
    let weber: Vec<(f64, f64)> = report.weber.vertices().iter().map(|x| map.place(x)).collect();
    let core: Vec<(f64, f64)> = match report.core.vertices() {
        Ok(v) => v.vertices().iter().map(|x| map.place(x)).collect(),
        Err(tugames::Error::Empty) => Vec::new(),
        Err(e) => return Err(e.into()),
    };
    let pieces: Vec<Vec<(f64, f64)>> = report
        .intermediate
        .minimal()?
        .nonempty()
        .map(|c| Ok(c.polytope.vertices()?.vertices().iter().map(|x| map.place(x)).collect()))
        .collect::<tugames::Result<_>>()?;

    let all = simplex.iter().map(|x| map.place(x)).chain(weber.iter().copied());
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for (x, y) in all {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let pad = 0.15 * SCALE;
    let (x0, y0, w, h) = (x0 - pad, y0 - pad, x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        sig6(x0),
        sig6(y0),
        sig6(w),
        sig6(h),
        sig6(w * 2.0),
        sig6(h * 2.0)
    );
    out.push_str("  <style>\n");
    out.push_str("    .simplex { fill: none; stroke: #999; stroke-width: 1; }\n");
    out.push_str("    .weber { fill: none; stroke: #1f77b4; stroke-width: 1.5; }\n");
    out.push_str("    .intermediate { fill: #d62728; fill-opacity: 0.3; stroke: #d62728; stroke-width: 2.5; }\n");
    out.push_str("    .core { fill: #2ca02c; stroke: #2ca02c; stroke-width: 2; }\n");
    out.push_str("  </style>\n");
    shape(&mut out, "simplex", simplex.iter().map(|x| map.place(x)).collect(), 0.0);
    shape(&mut out, "weber", weber, 2.0);
    for piece in pieces {
        shape(&mut out, "intermediate", piece, 3.0);
    }
    shape(&mut out, "core", core, 4.0);
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::sig6;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(100.0), "100");
        assert_eq!(sig6(-173.20508075688772), "-173.205");
        assert_eq!(sig6(0.000123456789), "0.000123457");
        assert_eq!(sig6(-0.0000001), "-0.0000001");
    }
}
