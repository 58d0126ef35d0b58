//! Toric polytopes of monomial-free restricted degenerations: the monomial
//! map matrix `A`, the Segre incidence matrix `S`, and the convex hull of the
//! columns of `AS`.

mod geometry;
mod matrix;

pub use geometry::{affine_dimension, AffineHull, Inequality, MAX_FACET_DIM};
pub use matrix::IntMatrix;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{term_cells, TermOrderKind};
use crate::limits::Limits;
use crate::order::{enumerate_t, ColumnSubset, Permutation};

fn variable_label(j: &ColumnSubset) -> String {
    if j.n() > 9 {
        format!("P{{{j}}}")
    } else {
        format!("P{j}")
    }
}

/// Grid cell label. Up to three rows use `x, y, z` with the column as
/// subscript; larger grids use `x{row},{col}`.
fn cell_label(n: usize, row: usize, col: usize) -> String {
    if n <= 4 {
        format!("{}{col}", ['x', 'y', 'z'][row - 1])
    } else {
        format!("x{row},{col}")
    }
}

/// Columns are the surviving variables in canonical order, rows the grid
/// cells used by some initial term, row-major.
pub fn restricted_map_matrix(
    v: &Permutation,
    w: &Permutation,
    order: TermOrderKind,
) -> Result<IntMatrix> {
    let vars = enumerate_t(v, w)?;
    let n = v.n();
    let mut rows: BTreeMap<(usize, usize), Vec<i64>> = BTreeMap::new();
    for (c, j) in vars.iter().enumerate() {
        for cell in term_cells(j.bits(), order) {
            rows.entry(cell).or_insert_with(|| vec![0; vars.len()])[c] += 1;
        }
    }
    let row_labels = rows.keys().map(|&(r, c)| cell_label(n, r, c)).collect();
    IntMatrix::new(
        row_labels,
        vars.iter().map(variable_label).collect(),
        rows.into_values().collect(),
    )
}

/// Surviving variables grouped by size, smallest size first.
fn factors(v: &Permutation, w: &Permutation) -> Result<Vec<Vec<ColumnSubset>>> {
    let mut groups: BTreeMap<usize, Vec<ColumnSubset>> = BTreeMap::new();
    for j in enumerate_t(v, w)? {
        groups.entry(j.len()).or_default().push(j);
    }
    Ok(groups.into_values().collect())
}

/// All ways to pick one variable per factor, first factor outermost.
fn segre_tuples(factors: &[Vec<ColumnSubset>]) -> Vec<Vec<ColumnSubset>> {
    factors.iter().fold(vec![Vec::new()], |acc, factor| {
        acc.iter()
            .flat_map(|prefix| {
                factor.iter().map(move |j| {
                    let mut t = prefix.clone();
                    t.push(*j);
                    t
                })
            })
            .collect()
    })
}

/// Incidence matrix of the Segre embedding of the product of one projective
/// space per occurring subset size.
pub fn segre_matrix(v: &Permutation, w: &Permutation) -> Result<IntMatrix> {
    let factors = factors(v, w)?;
    let vars: Vec<ColumnSubset> = factors.iter().flatten().copied().collect();
    let tuples = segre_tuples(&factors);
    let entries = vars
        .iter()
        .map(|j| tuples.iter().map(|t| t.contains(j) as i64).collect())
        .collect();
    IntMatrix::new(
        vars.iter().map(variable_label).collect(),
        tuples
            .iter()
            .map(|t| t.iter().map(variable_label).collect::<String>())
            .collect(),
        entries,
    )
}

/// Convex hull of finitely many lattice points, duplicates merged.
#[derive(Debug, Clone, Serialize)]
pub struct LatticePolytope {
    coordinates: Vec<String>,
    points: Vec<Vec<i64>>,
    /// Labels of the generating columns that land on each point.
    point_labels: Vec<Vec<String>>,
    affine_dim: usize,
    #[serde(skip)]
    hull: AffineHull,
}

impl LatticePolytope {
    /// Points keep their first-occurrence order.
    pub fn from_labelled(
        coordinates: Vec<String>,
        labelled: impl IntoIterator<Item = (String, Vec<i64>)>,
    ) -> Result<Self> {
        let mut points: Vec<Vec<i64>> = Vec::new();
        let mut point_labels: Vec<Vec<String>> = Vec::new();
        let mut index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for (label, p) in labelled {
            if p.len() != coordinates.len() {
                return Err(Error::SizeMismatch {
                    left: coordinates.len(),
                    right: p.len(),
                });
            }
            match index.get(&p) {
                Some(&i) => point_labels[i].push(label),
                None => {
                    index.insert(p.clone(), points.len());
                    points.push(p);
                    point_labels.push(vec![label]);
                }
            }
        }
        let hull = AffineHull::of(&points)?;
        Ok(Self {
            coordinates,
            affine_dim: hull.dim(),
            points,
            point_labels,
            hull,
        })
    }

    pub fn from_points(points: Vec<Vec<i64>>) -> Result<Self> {
        let dim = points.first().map_or(0, Vec::len);
        Self::from_labelled(
            (1..=dim).map(|i| format!("e{i}")).collect(),
            points
                .into_iter()
                .enumerate()
                .map(|(i, p)| (format!("p{}", i + 1), p)),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.coordinates.len()
    }

    pub fn coordinates(&self) -> &[String] {
        &self.coordinates
    }

    /// Distinct generating points.
    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn point_labels(&self) -> &[Vec<String>] {
        &self.point_labels
    }

    /// Points hit by more than one generating column.
    pub fn duplicates(&self) -> Vec<(&[i64], &[String])> {
        self.points
            .iter()
            .zip(&self.point_labels)
            .filter(|(_, l)| l.len() > 1)
            .map(|(p, l)| (p.as_slice(), l.as_slice()))
            .collect()
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn affine_hull(&self) -> &AffineHull {
        &self.hull
    }

    fn guard(&self) -> Result<()> {
        if self.affine_dim > MAX_FACET_DIM {
            return Err(Error::Unsupported(format!(
                "half-space description of a {}-dimensional polytope (at most {MAX_FACET_DIM} supported)",
                self.affine_dim
            )));
        }
        Ok(())
    }

    fn projected(&self) -> Vec<Vec<i64>> {
        self.points.iter().map(|p| self.hull.project(p)).collect()
    }

    /// Facets as inequalities in the coordinates `affine_hull().pivots()`.
    pub fn facets(&self) -> Result<Vec<Inequality>> {
        self.guard()?;
        Ok(geometry::facets(&self.projected(), self.affine_dim))
    }

    pub fn vertices(&self) -> Result<Vec<Vec<i64>>> {
        let facets = self.facets()?;
        let projected = geometry::vertices(&self.projected(), self.affine_dim, &facets);
        let mut out: Vec<Vec<i64>> = self
            .points
            .iter()
            .filter(|p| projected.contains(&self.hull.project(p)))
            .cloned()
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        let facets = self.facets()?;
        if !self.hull.contains(x) {
            return Ok(false);
        }
        let y = self.hull.project(x);
        Ok(facets.iter().all(|f| f.holds(&y)))
    }

    /// All integer points of the polytope, sorted.
    pub fn lattice_points(&self, limits: &Limits) -> Result<Vec<Vec<i64>>> {
        let facets = self.facets()?;
        let projected = self.projected();
        let d = self.affine_dim;
        let lo: Vec<i64> = (0..d)
            .map(|k| projected.iter().map(|p| p[k]).min().unwrap_or(0))
            .collect();
        let hi: Vec<i64> = (0..d)
            .map(|k| projected.iter().map(|p| p[k]).max().unwrap_or(0))
            .collect();
        let size = lo
            .iter()
            .zip(&hi)
            .fold(1u64, |acc, (l, h)| acc.saturating_mul((h - l + 1) as u64));
        if size > limits.lattice_box_budget && !limits.force {
            return Err(Error::Budget(format!(
                "bounding box of {size} points exceeds the budget {}",
                limits.lattice_box_budget
            )));
        }
        let mut out = Vec::new();
        let mut y = lo.clone();
        loop {
            if facets.iter().all(|f| f.holds(&y)) {
                if let Some(x) = self.hull.lift_integral(&y) {
                    out.push(x);
                }
            }
            let Some(k) = (0..d).rev().find(|&k| y[k] < hi[k]) else {
                break;
            };
            y[k] += 1;
            y[k + 1..].copy_from_slice(&lo[k + 1..]);
        }
        out.sort();
        Ok(out)
    }
}

/// The toric polytope of `X_w^v`: columns of `AS` labelled by their variable
/// products.
pub fn polytope(v: &Permutation, w: &Permutation, order: TermOrderKind) -> Result<LatticePolytope> {
    let a = restricted_map_matrix(v, w, order)?;
    let s = segre_matrix(v, w)?;
    let as_ = a.mul(&s)?;
    LatticePolytope::from_labelled(
        as_.row_labels().to_vec(),
        (0..as_.ncols()).map(|c| (as_.col_labels()[c].clone(), as_.column(c))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    const ANTI: TermOrderKind = TermOrderKind::Antidiagonal;

    #[test]
    fn worked_example_a() {
        let a = restricted_map_matrix(&p("2341"), &p("4231"), ANTI).unwrap();
        assert_eq!(
            a.col_labels(),
            strings(&["P2", "P3", "P4", "P23", "P24", "P234"])
        );
        assert_eq!(
            a.row_labels(),
            strings(&["x2", "x3", "x4", "y2", "y3", "z2"])
        );
        let rows: Vec<&[i64]> = (0..6).map(|r| a.row(r)).collect();
        assert_eq!(
            rows,
            vec![
                &[1, 0, 0, 0, 0, 0][..],
                &[0, 1, 0, 1, 0, 0],
                &[0, 0, 1, 0, 1, 1],
                &[0, 0, 0, 1, 1, 0],
                &[0, 0, 0, 0, 0, 1],
                &[0, 0, 0, 0, 0, 1],
            ]
        );
    }

    #[test]
    fn worked_example_s_and_as() {
        let s = segre_matrix(&p("2341"), &p("4231")).unwrap();
        assert_eq!(
            s.col_labels(),
            strings(&[
                "P2P23P234",
                "P2P24P234",
                "P3P23P234",
                "P3P24P234",
                "P4P23P234",
                "P4P24P234"
            ])
        );
        assert_eq!(s.row(3), &[1, 0, 1, 0, 1, 0]);
        assert_eq!(s.row(5), &[1; 6]);
        let a = restricted_map_matrix(&p("2341"), &p("4231"), ANTI).unwrap();
        let as_ = a.mul(&s).unwrap();
        assert_eq!(as_.row(1), &[1, 0, 2, 1, 1, 0]);
        assert_eq!(as_.row(2), &[1, 2, 1, 2, 2, 3]);
        assert_eq!(as_.column(3), vec![0, 1, 2, 1, 1, 1]);
        assert_eq!(as_.column(3), as_.column(4));
    }

    #[test]
    fn worked_example_polytope() {
        let poly = polytope(&p("2341"), &p("4231"), ANTI).unwrap();
        assert_eq!(poly.points().len(), 5);
        assert_eq!(poly.affine_dim(), 2);
        let dups = poly.duplicates();
        assert_eq!(dups.len(), 1);
        assert_eq!(dups[0].1, strings(&["P3P24P234", "P4P23P234"]));
        assert!(poly.points().iter().all(|x| x[0] + x[1] + x[2] == 3));
        let lattice = poly.lattice_points(&Limits::default()).unwrap();
        assert_eq!(lattice.len(), 5);
        assert!(poly.points().iter().all(|x| lattice.contains(x)));
        assert_eq!(poly.vertices().unwrap().len(), 4);
    }

    #[test]
    fn equal_permutations_give_a_point() {
        let w = p("3142");
        let poly = polytope(&w, &w, TermOrderKind::Diagonal).unwrap();
        assert_eq!(poly.points().len(), 1);
        assert_eq!(poly.affine_dim(), 0);
        assert_eq!(
            poly.lattice_points(&Limits::default()).unwrap(),
            poly.points()
        );
    }

    #[test]
    fn segment_lattice_points() {
        let seg = LatticePolytope::from_points(vec![vec![0, 0, 1], vec![6, 4, 1]]).unwrap();
        assert_eq!(seg.lattice_points(&Limits::default()).unwrap().len(), 3);
    }

    #[test]
    fn dimension_guard() {
        let mut pts = vec![vec![0; 4]];
        for i in 0..4 {
            let mut e = vec![0; 4];
            e[i] = 1;
            pts.push(e);
        }
        let simplex = LatticePolytope::from_points(pts).unwrap();
        assert_eq!(simplex.affine_dim(), 4);
        assert!(matches!(
            simplex.lattice_points(&Limits::default()),
            Err(Error::Unsupported(_))
        ));
    }
}
