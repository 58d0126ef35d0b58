//! Exact affine hulls and low-dimensional half-space descriptions.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

type Q = Ratio<i128>;

/// Largest affine dimension with a half-space description.
pub const MAX_FACET_DIM: usize = 3;

/// Affine span of a point set: `base + span(directions)`, with `directions`
/// in reduced row echelon form over the rationals.
#[derive(Debug, Clone)]
pub struct AffineHull {
    base: Vec<i64>,
    pivots: Vec<usize>,
    directions: Vec<Vec<Q>>,
}

impl AffineHull {
    pub fn of(points: &[Vec<i64>]) -> Result<Self> {
        let base = points
            .first()
            .ok_or_else(|| Error::InvalidArgument("affine hull of no points".into()))?
            .clone();
        if points.iter().any(|p| p.len() != base.len()) {
            return Err(Error::SizeMismatch {
                left: base.len(),
                right: points
                    .iter()
                    .map(Vec::len)
                    .find(|&l| l != base.len())
                    .unwrap_or(0),
            });
        }
        let diffs: Vec<Vec<Q>> = points[1..]
            .iter()
            .map(|p| {
                p.iter()
                    .zip(&base)
                    .map(|(a, b)| Q::from_integer((a - b) as i128))
                    .collect()
            })
            .collect();
        let (pivots, directions) = rref(diffs, base.len());
        Ok(Self {
            base,
            pivots,
            directions,
        })
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates on which projection is injective on the hull.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn project(&self, x: &[i64]) -> Vec<i64> {
        self.pivots.iter().map(|&p| x[p]).collect()
    }

    /// The point of the hull with the given pivot coordinates.
    pub fn lift(&self, y: &[i64]) -> Vec<Q> {
        let mut x: Vec<Q> = self
            .base
            .iter()
            .map(|&b| Q::from_integer(b as i128))
            .collect();
        for ((&p, dir), &yi) in self.pivots.iter().zip(&self.directions).zip(y) {
            let c = Q::from_integer((yi - self.base[p]) as i128);
            for (xk, dk) in x.iter_mut().zip(dir) {
                *xk += c * dk;
            }
        }
        x
    }

    /// Integral lift, if there is one.
    pub fn lift_integral(&self, y: &[i64]) -> Option<Vec<i64>> {
        self.lift(y)
            .into_iter()
            .map(|q| q.is_integer().then(|| q.to_integer() as i64))
            .collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.base.len()
            && self
                .lift(&self.project(x))
                .iter()
                .zip(x)
                .all(|(q, &xi)| *q == Q::from_integer(xi as i128))
    }
}

fn rref(mut rows: Vec<Vec<Q>>, width: usize) -> (Vec<usize>, Vec<Vec<Q>>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != Q::from_integer(0)) else {
            continue;
        };
        rows.swap(r, found);
        let lead = rows[r][col];
        for x in rows[r].iter_mut() {
            *x /= lead;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != Q::from_integer(0) {
                let f = rows[i][col];
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (pivots, rows)
}

/// Affine dimension of a nonempty point set.
pub fn affine_dimension(points: &[Vec<i64>]) -> Result<usize> {
    Ok(AffineHull::of(points)?.dim())
}

/// `normal . y <= offset` in pivot coordinates, primitive normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Inequality {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Inequality {
    fn primitive(normal: Vec<i64>, offset: i64) -> Self {
        let g = normal
            .iter()
            .fold(offset.unsigned_abs(), |g, &a| gcd(g, a.unsigned_abs()));
        let g = g.max(1) as i64;
        Self {
            normal: normal.iter().map(|a| a / g).collect(),
            offset: offset / g,
        }
    }

    pub fn value(&self, y: &[i64]) -> i64 {
        self.normal.iter().zip(y).map(|(a, b)| a * b).sum()
    }

    pub fn holds(&self, y: &[i64]) -> bool {
        self.value(y) <= self.offset
    }

    pub fn is_tight(&self, y: &[i64]) -> bool {
        self.value(y) == self.offset
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Facet inequalities of the convex hull of full-dimensional points in
/// `R^d`, `d <= 3`.
pub(crate) fn facets(points: &[Vec<i64>], d: usize) -> Vec<Inequality> {
    let mut out = match d {
        0 => Vec::new(),
        1 => {
            let lo = points.iter().map(|p| p[0]).min().unwrap_or(0);
            let hi = points.iter().map(|p| p[0]).max().unwrap_or(0);
            vec![
                Inequality::primitive(vec![-1], -lo),
                Inequality::primitive(vec![1], hi),
            ]
        }
        2 => {
            let hull = hull_2d(points);
            (0..hull.len())
                .map(|i| {
                    let (a, b) = (&hull[i], &hull[(i + 1) % hull.len()]);
                    let normal = vec![b[1] - a[1], a[0] - b[0]];
                    let offset = normal[0] * a[0] + normal[1] * a[1];
                    Inequality::primitive(normal, offset)
                })
                .collect()
        }
        3 => facets_3d(points),
        _ => unreachable!("facets above dimension {MAX_FACET_DIM}"),
    };
    out.sort();
    out.dedup();
    out
}

/// Counter-clockwise hull vertices without collinear points.
fn hull_2d(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = points.to_vec();
    pts.sort();
    pts.dedup();
    let cross = |o: &[i64], a: &[i64], b: &[i64]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut hull: Vec<Vec<i64>> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Vec<i64>>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for p in iter {
            while hull.len() >= start + 2
                && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();
    }
    hull
}

fn facets_3d(points: &[Vec<i64>]) -> Vec<Inequality> {
    let mut pts: Vec<Vec<i64>> = points.to_vec();
    pts.sort();
    pts.dedup();
    let sub = |a: &[i64], b: &[i64]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                let (u, v) = (sub(&pts[j], &pts[i]), sub(&pts[k], &pts[i]));
                let n = vec![
                    u[1] * v[2] - u[2] * v[1],
                    u[2] * v[0] - u[0] * v[2],
                    u[0] * v[1] - u[1] * v[0],
                ];
                if n.iter().all(|&c| c == 0) {
                    continue;
                }
                let off: i64 = n.iter().zip(&pts[i]).map(|(a, b)| a * b).sum();
                let vals = pts
                    .iter()
                    .map(|p| n.iter().zip(p).map(|(a, b)| a * b).sum::<i64>());
                let (mut below, mut above) = (false, false);
                for val in vals {
                    below |= val < off;
                    above |= val > off;
                }
                match (below, above) {
                    (true, false) => out.push(Inequality::primitive(n, off)),
                    (false, true) => {
                        out.push(Inequality::primitive(n.iter().map(|c| -c).collect(), -off))
                    }
                    _ => {}
                }
            }
        }
    }
    out
}

/// Points among `points` that are vertices of their convex hull in `R^d`.
pub(crate) fn vertices(points: &[Vec<i64>], d: usize, facets: &[Inequality]) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = points.to_vec();
    pts.sort();
    pts.dedup();
    if d == 0 {
        return pts;
    }
    pts.into_iter()
        .filter(|p| {
            let tight: Vec<Vec<Q>> = facets
                .iter()
                .filter(|f| f.is_tight(p))
                .map(|f| {
                    f.normal
                        .iter()
                        .map(|&c| Q::from_integer(c as i128))
                        .collect()
                })
                .collect();
            rref(tight, d).0.len() == d
        })
        .collect()
}
