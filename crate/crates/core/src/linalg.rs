//! Exact sparse row reduction over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::Rational;

/// A sparse vector: strictly increasing column indices, no zero entries.
pub type SparseVec = Vec<(usize, Rational)>;

/// Rows kept in reduced row echelon form once [`Rref::finish`] has run.
#[derive(Clone, Debug, Default)]
pub struct Rref {
    cols: usize,
    /// Pivot column to its row; every row has leading entry 1 at its pivot.
    rows: BTreeMap<usize, SparseVec>,
    reduced: bool,
}

fn axpy(target: &mut BTreeMap<usize, Rational>, coeff: &Rational, row: &SparseVec) {
    for (c, v) in row {
        let e = target.entry(*c).or_insert_with(Rational::zero);
        *e -= coeff * v;
        if e.is_zero() {
            target.remove(c);
        }
    }
}

impl Rref {
    pub fn new(cols: usize) -> Self {
        Rref { cols, rows: BTreeMap::new(), reduced: true }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a row to the span; returns whether the rank grew.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, Rational)>) -> bool {
        let mut work: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in row {
            assert!(c < self.cols, "column out of range");
            let e = work.entry(c).or_insert_with(Rational::zero);
            *e += v;
            if e.is_zero() {
                work.remove(&c);
            }
        }
        let mut from = 0;
        loop {
            let Some((&c, v)) = work.range(from..).next() else {
                return false;
            };
            match self.rows.get(&c) {
                Some(prow) => {
                    let coeff = v.clone();
                    axpy(&mut work, &coeff, prow);
                    from = c + 1;
                }
                None => {
                    let inv = Rational::one() / v;
                    let row: SparseVec = work.into_iter().map(|(k, x)| (k, x * &inv)).collect();
                    // columns before c are zero here: the first pass cleared them
                    let row = row.into_iter().filter(|(k, _)| *k >= c).collect();
                    self.rows.insert(c, row);
                    self.reduced = false;
                    return true;
                }
            }
        }
    }

    /// Back-substitutes so every pivot column is zero outside its own row.
    pub fn finish(&mut self) {
        if self.reduced {
            return;
        }
        let pivots: Vec<usize> = self.rows.keys().rev().copied().collect();
        for p in pivots {
            let row = self.rows.remove(&p).unwrap();
            let mut work: BTreeMap<usize, Rational> = row.into_iter().collect();
            let targets: Vec<usize> = work.keys().filter(|&&c| c != p && self.rows.contains_key(&c)).copied().collect();
            for c in targets {
                if let Some(v) = work.get(&c).cloned() {
                    axpy(&mut work, &v, &self.rows[&c]);
                }
            }
            self.rows.insert(p, work.into_iter().collect());
        }
        self.reduced = true;
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// The row whose pivot is `col`.
    pub fn row(&self, col: usize) -> Option<&SparseVec> {
        self.rows.get(&col)
    }

    /// Normal form of `v` modulo the row span: the unique representative
    /// supported on free columns. Requires [`Rref::finish`].
    pub fn reduce(&self, v: impl IntoIterator<Item = (usize, Rational)>) -> SparseVec {
        assert!(self.reduced, "reduce needs a finished echelon form");
        let mut work: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, x) in v {
            let e = work.entry(c).or_insert_with(Rational::zero);
            *e += x;
            if e.is_zero() {
                work.remove(&c);
            }
        }
        let targets: Vec<usize> = work.keys().filter(|c| self.rows.contains_key(c)).copied().collect();
        for c in targets {
            if let Some(x) = work.get(&c).cloned() {
                axpy(&mut work, &x, &self.rows[&c]);
            }
        }
        work.into_iter().collect()
    }

    /// Rebuilds a finished echelon form from its rows.
    pub fn from_rows(cols: usize, rows: BTreeMap<usize, SparseVec>) -> Self {
        Rref { cols, rows, reduced: true }
    }

    pub fn rows(&self) -> &BTreeMap<usize, SparseVec> {
        &self.rows
    }
}

/// Lagrange interpolation through `(x_i, y_i)`; coefficients in ascending
/// powers.
pub fn interpolate(points: &[(Rational, Rational)]) -> Vec<Rational> {
    let n = points.len();
    let mut out = alloc::vec![Rational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = alloc::vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = alloc::vec![Rational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (k, b) in basis.iter().enumerate() {
            out[k] += b * &scale;
        }
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}
