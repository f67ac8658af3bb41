use std::collections::HashMap;
use std::fmt;

use crate::groups::FiniteGroup;
use crate::polytopes::{Graph, VertexLabel};

use super::SpectraError;

/// Dense integer matrix. All the group-algebra identities in this crate
/// are exact statements about such matrices; no rounding is involved.
#[derive(Clone, PartialEq, Eq)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl IMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_assign(&mut self, other: &IMat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn scale(&self, s: i64) -> IMat {
        IMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &IMat) -> IMat {
        let mut m = self.clone();
        m.add_assign(other);
        m
    }

    /// Matrix product, skipping zero entries of the left factor; the
    /// operator matrices here are sparse permutation sums, so this is fast
    /// while staying exact.
    pub fn mul(&self, other: &IMat) -> Result<IMat, SpectraError> {
        if self.cols != other.rows {
            return Err(SpectraError::DimensionMismatch {
                lhs: (self.rows, self.cols),
                rhs: (other.rows, other.cols),
            });
        }
        let mut out = IMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let row = &self.data[r * self.cols..(r + 1) * self.cols];
            for (k, &a) in row.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                let orow = &mut out.data[r * other.cols..(r + 1) * other.cols];
                if a == 1 {
                    for (o, &b) in orow.iter_mut().zip(brow) {
                        *o += b;
                    }
                } else {
                    for (o, &b) in orow.iter_mut().zip(brow) {
                        *o += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> IMat {
        let mut t = IMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// First differing entry against `other`, if any.
    pub fn first_difference(&self, other: &IMat) -> Option<(usize, usize, i64, i64)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((usize::MAX, usize::MAX, 0, 0));
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let (a, b) = (self.get(r, c), other.get(r, c));
                if a != b {
                    return Some((r, c, a, b));
                }
            }
        }
        None
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&x| x as f64).collect()
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

impl fmt::Debug for IMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IMat({}x{})", self.rows, self.cols)
    }
}

/// Adjacency matrix of a graph in its vertex order.
pub fn adjacency_matrix(g: &Graph) -> IMat {
    let n = g.vertex_count();
    let mut m = IMat::zeros(n, n);
    for &(a, b) in g.edges() {
        m.set(a as usize, b as usize, 1);
        m.set(b as usize, a as usize, 1);
    }
    m
}

/// Right translation operator R_h: the 0/1 matrix with a 1 at (g, g·h).
/// R is a homomorphism (R_g·R_h = R_{gh}) and Σ_{h∈H} R_h is the adjacency
/// matrix of the Cayley graph over H.
pub fn right_translation(group: &FiniteGroup, h: u32) -> IMat {
    let n = group.order();
    let mut m = IMat::zeros(n, n);
    for g in 0..n as u32 {
        m.set(g as usize, group.mul(g, h) as usize, 1);
    }
    m
}

/// Sum Σ_{h ∈ hs} R_h.
pub fn translation_sum(group: &FiniteGroup, hs: &[u32]) -> IMat {
    let mut m = IMat::zeros(group.order(), group.order());
    for &h in hs {
        for g in 0..group.order() as u32 {
            let c = group.mul(g, h) as usize;
            m.set(g as usize, c, m.get(g as usize, c) + 1);
        }
    }
    m
}

/// The lift/average pair between the function spaces of an edge-midpoint
/// graph and of the corresponding dart graph.
///
/// `A1` (dart-rows × edge-cols) carries a midpoint function to the dart
/// function that is constant on the two darts of each edge; row p has a
/// single 1 at the underlying edge of dart p. `A2` (edge-rows × dart-cols)
/// sums a dart function over the two darts of each edge. Both indexings can
/// be permuted into a group basis via a dart bijection.
pub struct LiftAverage {
    pub a1: IMat,
    pub a2: IMat,
}

/// Construct A1/A2 from a dart graph and the rectified graph of the same
/// base graph. `dart_to_row` translates dart-graph vertex indices into the
/// row basis (pass the identity to stay in dart order, or a Cayley
/// bijection to work in the group basis).
pub fn lift_average(
    darts: &Graph,
    midpoints: &Graph,
    dart_to_row: impl Fn(u32) -> u32,
) -> Result<LiftAverage, SpectraError> {
    let edge_of: HashMap<(u32, u32), u32> = midpoints
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| match l {
            VertexLabel::Edge(a, b) => ((*a, *b), i as u32),
            _ => panic!("midpoint graph must be edge-labelled"),
        })
        .collect();
    let nd = darts.vertex_count();
    let ne = midpoints.vertex_count();
    let mut a1 = IMat::zeros(nd, ne);
    let mut a2 = IMat::zeros(ne, nd);
    for (d, lab) in darts.labels().iter().enumerate() {
        let &VertexLabel::Dart(u, v) = lab else {
            panic!("dart graph must be dart-labelled")
        };
        let key = (u.min(v), u.max(v));
        let e = *edge_of
            .get(&key)
            .ok_or(SpectraError::DartWithoutEdge(u, v))?;
        let row = dart_to_row(d as u32) as usize;
        a1.set(row, e as usize, 1);
        a2.set(e as usize, row, 1);
    }
    Ok(LiftAverage { a1, a2 })
}

/// Exact check that the adjacency X of the midpoint graph factors as
/// A2·B·A1, with B a sum of right translations. Returns the first
/// counterexample entry on failure.
pub fn verify_factorization(
    x: &IMat,
    a2: &IMat,
    b: &IMat,
    a1: &IMat,
) -> Result<(), SpectraError> {
    let prod = a2.mul(b)?.mul(a1)?;
    match prod.first_difference(x) {
        None => Ok(()),
        Some((r, c, got, want)) => Err(SpectraError::FactorizationMismatch {
            row: r,
            col: c,
            got,
            want,
        }),
    }
}
