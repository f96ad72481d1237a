//! Elliptic curves in long Weierstrass form over small finite fields.
//!
//! y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6
//!
//! The b/c quantities below are valid in every characteristic, so curves in
//! characteristic 2 and 3 need no special handling. Point counts are by
//! enumeration.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::finite_field::{field_of_order, prime_power, Field, FieldError};

/// Largest q accepted by [`optimal_search`].
pub const OPTIMAL_SEARCH_LIMIT: u64 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("the curve is singular (discriminant 0)")]
    Singular,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("brute-force search supports q <= {OPTIMAL_SEARCH_LIMIT}, got {0}")]
    TooLarge(u64),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine(u32, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    field: Field,
    /// a1, a2, a3, a4, a6
    a: [u32; 5],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveJson {
    pub q: u32,
    pub a1: u32,
    pub a2: u32,
    pub a3: u32,
    pub a4: u32,
    pub a6: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveStats {
    pub count: u64,
    pub trace: i64,
    pub j: u32,
    pub supersingular: bool,
}

struct BQuantities {
    b2: u32,
    b4: u32,
    b6: u32,
    b8: u32,
}

impl WeierstrassCurve {
    pub fn new(field: &Field, a: [u32; 5]) -> Result<Self, CurveError> {
        let curve = WeierstrassCurve { field: field.clone(), a };
        if curve.discriminant() == 0 {
            return Err(CurveError::Singular);
        }
        Ok(curve)
    }

    /// Curve with integer coefficients reduced into the prime subfield.
    pub fn from_ints(q: u64, a: [i64; 5]) -> Result<Self, CurveError> {
        let field = field_of_order(q)?;
        let coeffs = a.map(|c| field.from_int(c));
        Self::new(&field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coefficients(&self) -> [u32; 5] {
        self.a
    }

    pub fn to_json(&self) -> CurveJson {
        let [a1, a2, a3, a4, a6] = self.a;
        CurveJson { q: self.field.size(), a1, a2, a3, a4, a6 }
    }

    fn b_quantities(&self) -> BQuantities {
        let f = &self.field;
        let [a1, a2, a3, a4, a6] = self.a;
        let c = |v: i64| f.from_int(v);
        let b2 = f.add(f.mul(a1, a1), f.mul(c(4), a2));
        let b4 = f.add(f.mul(c(2), a4), f.mul(a1, a3));
        let b6 = f.add(f.mul(a3, a3), f.mul(c(4), a6));
        // b8 = a1²a6 + 4a2a6 - a1a3a4 + a2a3² - a4²
        let mut b8 = f.mul(f.mul(a1, a1), a6);
        b8 = f.add(b8, f.mul(c(4), f.mul(a2, a6)));
        b8 = f.sub(b8, f.mul(a1, f.mul(a3, a4)));
        b8 = f.add(b8, f.mul(a2, f.mul(a3, a3)));
        b8 = f.sub(b8, f.mul(a4, a4));
        BQuantities { b2, b4, b6, b8 }
    }

    /// Δ = -b2²b8 - 8b4³ - 27b6² + 9b2b4b6
    pub fn discriminant(&self) -> u32 {
        let f = &self.field;
        let c = |v: i64| f.from_int(v);
        let BQuantities { b2, b4, b6, b8 } = self.b_quantities();
        let mut d = f.neg(f.mul(f.mul(b2, b2), b8));
        d = f.sub(d, f.mul(c(8), f.pow(b4, 3)));
        d = f.sub(d, f.mul(c(27), f.mul(b6, b6)));
        f.add(d, f.mul(c(9), f.mul(b2, f.mul(b4, b6))))
    }

    /// c4 = b2² - 24b4
    pub fn c4(&self) -> u32 {
        let f = &self.field;
        let BQuantities { b2, b4, .. } = self.b_quantities();
        f.sub(f.mul(b2, b2), f.mul(f.from_int(24), b4))
    }

    /// j = c4³/Δ
    pub fn j_invariant(&self) -> u32 {
        let f = &self.field;
        f.div(f.pow(self.c4(), 3), self.discriminant()).expect("nonsingular curve")
    }

    fn lhs_linear(&self, x: u32) -> u32 {
        let f = &self.field;
        f.add(f.mul(self.a[0], x), self.a[2])
    }

    fn rhs(&self, x: u32) -> u32 {
        let f = &self.field;
        let [_, a2, _, a4, a6] = self.a;
        let x2 = f.mul(x, x);
        f.add(f.add(f.mul(x2, x), f.mul(a2, x2)), f.add(f.mul(a4, x), a6))
    }

    pub fn contains(&self, point: Point) -> bool {
        match point {
            Point::Infinity => true,
            Point::Affine(x, y) => {
                let f = &self.field;
                f.add(f.mul(y, y), f.mul(self.lhs_linear(x), y)) == self.rhs(x)
            }
        }
    }

    /// All rational points, infinity first.
    pub fn points(&self) -> Vec<Point> {
        let f = &self.field;
        let mut out = vec![Point::Infinity];
        for x in f.elements() {
            let lin = self.lhs_linear(x);
            let rhs = self.rhs(x);
            for y in f.elements() {
                if f.add(f.mul(y, y), f.mul(lin, y)) == rhs {
                    out.push(Point::Affine(x, y));
                }
            }
        }
        out
    }

    /// Number of rational points including the point at infinity.
    pub fn count_points(&self) -> u64 {
        let f = &self.field;
        let squares: Vec<u32> = f.elements().map(|y| f.mul(y, y)).collect();
        let mut count = 1;
        for x in f.elements() {
            let lin = self.lhs_linear(x);
            let rhs = self.rhs(x);
            count += f.elements().filter(|&y| f.add(squares[y as usize], f.mul(lin, y)) == rhs).count() as u64;
        }
        count
    }

    pub fn trace(&self) -> i64 {
        self.field.size() as i64 + 1 - self.count_points() as i64
    }

    /// p divides the trace of Frobenius.
    pub fn is_supersingular(&self) -> bool {
        self.trace().rem_euclid(self.field.characteristic() as i64) == 0
    }

    /// In characteristic 2 and 3 the supersingular curves are exactly those with j = 0.
    pub fn supersingular_by_j(&self) -> Option<bool> {
        matches!(self.field.characteristic(), 2 | 3).then(|| self.j_invariant() == 0)
    }

    pub fn stats(&self) -> CurveStats {
        let count = self.count_points();
        let trace = self.field.size() as i64 + 1 - count as i64;
        CurveStats {
            count,
            trace,
            j: self.j_invariant(),
            supersingular: trace.rem_euclid(self.field.characteristic() as i64) == 0,
        }
    }

    pub fn neg(&self, point: Point) -> Point {
        match point {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                let f = &self.field;
                Point::Affine(x, f.sub(f.neg(y), self.lhs_linear(x)))
            }
        }
    }

    /// Chord-tangent addition.
    pub fn add(&self, p1: Point, p2: Point) -> Point {
        let f = &self.field;
        let (x1, y1, x2, y2) = match (p1, p2) {
            (Point::Infinity, q) | (q, Point::Infinity) => return q,
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, _] = self.a;
        let slope = if x1 != x2 {
            f.div(f.sub(y2, y1), f.sub(x2, x1)).expect("distinct x")
        } else {
            if self.neg(p1) == p2 {
                return Point::Infinity;
            }
            // tangent: (3x² + 2a2x + a4 - a1y) / (2y + a1x + a3)
            let num = f.sub(
                f.add(f.add(f.mul(f.from_int(3), f.mul(x1, x1)), f.mul(f.from_int(2), f.mul(a2, x1))), a4),
                f.mul(a1, y1),
            );
            let den = f.add(f.mul(f.from_int(2), y1), self.lhs_linear(x1));
            f.div(num, den).expect("non-2-torsion point has nonzero denominator")
        };
        let intercept = f.sub(y1, f.mul(slope, x1));
        let x3 = f.sub(f.sub(f.sub(f.add(f.mul(slope, slope), f.mul(a1, slope)), a2), x1), x2);
        let y3 = f.sub(f.sub(f.neg(f.mul(f.add(slope, a1), x3)), intercept), a3);
        Point::Affine(x3, y3)
    }

    pub fn scalar_mul(&self, point: Point, mut k: u64) -> Point {
        let mut acc = Point::Infinity;
        let mut base = point;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least t >= 1 with t·P = ∞.
    pub fn point_order(&self, point: Point) -> Result<u64, CurveError> {
        if !self.contains(point) {
            return Err(CurveError::NotOnCurve);
        }
        let mut acc = point;
        let mut t = 1;
        while acc != Point::Infinity {
            acc = self.add(acc, point);
            t += 1;
        }
        Ok(t)
    }
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Maximal number of rational points on an elliptic curve over GF(q):
/// q + ⌊2√q⌋ when q is not a square, p < q and p | ⌊2√q⌋; otherwise q + ⌊2√q⌋ + 1.
pub fn nq1(q: u64) -> Result<u64, CurveError> {
    let (p, _) = prime_power(q).ok_or(CurveError::NotPrimePower(q))?;
    let m = isqrt(4 * q);
    let is_square = isqrt(q).pow(2) == q;
    let p = p as u64;
    if !is_square && p < q && m.is_multiple_of(p) {
        Ok(q + m)
    } else {
        Ok(q + m + 1)
    }
}

#[derive(Clone, Debug)]
pub struct OptimalSearch {
    pub q: u64,
    pub max_count: u64,
    pub maximizers: Vec<WeierstrassCurve>,
    pub j_invariants: BTreeSet<u32>,
    /// Nonsingular coefficient tuples examined.
    pub curves: u64,
}

impl OptimalSearch {
    pub fn unique_j(&self) -> bool {
        self.j_invariants.len() == 1
    }
}

/// Brute force over every coefficient tuple (a1, a2, a3, a4, a6) ∈ GF(q)^5.
pub fn optimal_search(q: u64) -> Result<OptimalSearch, CurveError> {
    if q > OPTIMAL_SEARCH_LIMIT {
        return Err(CurveError::TooLarge(q));
    }
    let field = field_of_order(q)?;
    let size = field.size();
    let per_block: Vec<(u64, u64, Vec<WeierstrassCurve>)> = (0..size * size)
        .into_par_iter()
        .map(|block| {
            let (a1, a2) = (block / size, block % size);
            let mut best = 0;
            let mut curves = 0;
            let mut maximizers = Vec::new();
            for a3 in 0..size {
                for a4 in 0..size {
                    for a6 in 0..size {
                        let Ok(curve) = WeierstrassCurve::new(&field, [a1, a2, a3, a4, a6]) else {
                            continue;
                        };
                        curves += 1;
                        let count = curve.count_points();
                        if count > best {
                            best = count;
                            maximizers.clear();
                        }
                        if count == best {
                            maximizers.push(curve);
                        }
                    }
                }
            }
            (best, curves, maximizers)
        })
        .collect();
    let max_count = per_block.iter().map(|b| b.0).max().unwrap_or(0);
    let curves = per_block.iter().map(|b| b.1).sum();
    let maximizers: Vec<WeierstrassCurve> =
        per_block.into_iter().filter(|b| b.0 == max_count).flat_map(|b| b.2).collect();
    let j_invariants = maximizers.iter().map(WeierstrassCurve::j_invariant).collect();
    Ok(OptimalSearch { q, max_count, maximizers, j_invariants, curves })
}
