//! The four-term quotient `A_m`, coordinates on it, and weight systems.
//!
//! A four-term relation fixes two chords `s = (x, y)` and `t = (b1, b2)` and
//! moves the endpoint `y` to the four positions flanking `b1` and `b2`:
//!
//! ```text
//! sum over b in {b1, b2} of  D[y just after b] - D[y just before b]  =  0
//! ```

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::diagrams::{enumerate_diagrams, matchings, ChordDiagram};
use crate::error::Error;
use crate::linalg::{Rref, SparseVec};
use crate::partition::Partition;
use crate::sum::DiagramSum;
use crate::{int, Rational};

/// The ordered list of canonical degree-`m` diagrams and its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramIndex {
    degree: usize,
    diagrams: Arc<Vec<ChordDiagram>>,
    lookup: Arc<BTreeMap<ChordDiagram, usize>>,
}

impl DiagramIndex {
    pub fn new(degree: usize) -> Self {
        Self::from_list(degree, enumerate_diagrams(degree))
    }

    fn from_list(degree: usize, list: Vec<ChordDiagram>) -> Self {
        let lookup = list.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        DiagramIndex { degree, diagrams: Arc::new(list), lookup: Arc::new(lookup) }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn diagrams(&self) -> &[ChordDiagram] {
        &self.diagrams
    }

    pub fn position(&self, d: &ChordDiagram) -> Option<usize> {
        self.lookup.get(d).copied()
    }

    /// The sum as a sparse vector over this index.
    pub fn vector(&self, v: &DiagramSum) -> Result<SparseVec, Error> {
        if v.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: v.degree(), right: self.degree });
        }
        let mut out: SparseVec = v
            .iter()
            .map(|(d, c)| {
                self.position(d)
                    .map(|i| (i, c.clone()))
                    .ok_or_else(|| Error::UnknownDiagram(alloc::format!("{d}")))
            })
            .collect::<Result<_, _>>()?;
        out.sort_unstable_by_key(|e| e.0);
        Ok(out)
    }

    pub fn sum(&self, v: &SparseVec) -> DiagramSum {
        let mut out = DiagramSum::zero(self.degree);
        for (i, c) in v {
            out.add_term(self.diagrams[*i].clone(), c.clone());
        }
        out
    }
}

/// Places `y` into the circle `seq` (which lacks it) right after or right
/// before the point at `at`, and canonicalises.
fn place(seq: &[usize], partner: &[usize], y: usize, at: usize, after: bool) -> ChordDiagram {
    let n = seq.len() + 1;
    let mut order = Vec::with_capacity(n);
    for (i, &p) in seq.iter().enumerate() {
        if i == at && !after {
            order.push(y);
        }
        order.push(p);
        if i == at && after {
            order.push(y);
        }
    }
    let mut pos = vec![0; n];
    for (i, &p) in order.iter().enumerate() {
        pos[p] = i;
    }
    let mut out = vec![0; n];
    for (i, &p) in order.iter().enumerate() {
        out[i] = pos[partner[p]];
    }
    ChordDiagram::from_involution(&out)
}

/// The relation moving `y` around the endpoints `b1`, `b2` of the circle
/// `seq`, as index coefficients.
fn relation(
    index: &DiagramIndex,
    seq: &[usize],
    partner: &[usize],
    y: usize,
    b1: usize,
    b2: usize,
) -> BTreeMap<usize, i64> {
    let mut rel: BTreeMap<usize, i64> = BTreeMap::new();
    for b in [b1, b2] {
        let at = seq.iter().position(|&p| p == b).unwrap();
        for (after, sign) in [(true, 1), (false, -1)] {
            let d = place(seq, partner, y, at, after);
            *rel.entry(index.position(&d).unwrap()).or_insert(0) += sign;
        }
    }
    rel.retain(|_, c| *c != 0);
    rel
}

/// Sign-normalised so the first coefficient is positive.
fn normalise(rel: BTreeMap<usize, i64>) -> Option<Vec<(usize, i64)>> {
    let first = *rel.values().next()?;
    let s = first.signum();
    Some(rel.into_iter().map(|(i, c)| (i, c * s)).collect())
}

fn relations_main(index: &DiagramIndex) -> Vec<Vec<(usize, i64)>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for d in index.diagrams() {
        let partner = d.partner();
        let n = partner.len();
        for x in 0..n {
            let y = partner[x];
            let seq: Vec<usize> = (0..n).filter(|&p| p != y).collect();
            for b1 in 0..n {
                let b2 = partner[b1];
                if b1 > b2 || b1 == x || b1 == y {
                    continue;
                }
                if let Some(r) = normalise(relation(index, &seq, &partner, y, b1, b2)) {
                    if seen.insert(r.clone()) {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

/// Independent scheme: starts from every raw matching of `2m - 2` points,
/// inserts the fixed endpoint in every gap, and moves the other endpoint
/// around every chord.
fn relations_raw(index: &DiagramIndex) -> Vec<Vec<(usize, i64)>> {
    let m = index.degree();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    if m < 2 {
        return out;
    }
    let k = 2 * m - 2;
    let mut base = vec![usize::MAX; k];
    matchings(&mut base, &mut |pm: &[usize]| {
        // points 0..k are the matching, k is x, k + 1 is y
        for gap in 0..k {
            let mut partner = pm.to_vec();
            partner.push(k + 1);
            partner.push(k);
            let mut seq: Vec<usize> = (0..k).collect();
            seq.insert(gap, k);
            for b1 in 0..k {
                let b2 = pm[b1];
                if b1 < b2 {
                    if let Some(r) = normalise(relation(index, &seq, &partner, k + 1, b1, b2)) {
                        if seen.insert(r.clone()) {
                            out.push(r);
                        }
                    }
                }
            }
        }
    });
    out
}

fn as_sums(index: &DiagramIndex, rels: Vec<Vec<(usize, i64)>>) -> Vec<DiagramSum> {
    rels.into_iter()
        .map(|r| index.sum(&r.into_iter().map(|(i, c)| (i, int(c))).collect()))
        .collect()
}

/// All distinct nonzero four-term relations of degree `m`, one per diagram,
/// ordered chord pair and choice of moving endpoint, up to sign.
pub fn generate_4t(m: usize) -> Vec<DiagramSum> {
    let index = DiagramIndex::new(m);
    as_sums(&index, relations_main(&index))
}

/// The same relation space generated from raw matchings with the endpoint
/// roles swapped; used to cross-check [`generate_4t`].
pub fn generate_4t_raw(m: usize) -> Vec<DiagramSum> {
    let index = DiagramIndex::new(m);
    as_sums(&index, relations_raw(&index))
}

/// Which relation generator a basis was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    Main,
    Raw,
}

/// `A_m` as the degree-`m` diagrams modulo the row-reduced relations.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    index: DiagramIndex,
    rref: Arc<Rref>,
    free: Vec<usize>,
    /// Diagram index to coordinate position, for free columns.
    free_pos: BTreeMap<usize, usize>,
}

impl QuotientBasis {
    pub fn build(m: usize) -> Self {
        Self::build_with(m, Scheme::Main)
    }

    pub fn build_with(m: usize, scheme: Scheme) -> Self {
        let index = DiagramIndex::new(m);
        let rels = match scheme {
            Scheme::Main => relations_main(&index),
            Scheme::Raw => relations_raw(&index),
        };
        let mut rref = Rref::new(index.len());
        for r in rels {
            rref.insert(r.into_iter().map(|(i, c)| (i, int(c))));
        }
        rref.finish();
        Self::assemble(index, rref)
    }

    fn assemble(index: DiagramIndex, rref: Rref) -> Self {
        let free = rref.free_columns();
        let free_pos = free.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        QuotientBasis { index, rref: Arc::new(rref), free, free_pos }
    }

    /// Rebuilds a basis from stored parts, checking that the rows are in
    /// reduced echelon form over the canonical diagram list.
    pub fn from_parts(
        degree: usize,
        diagrams: Vec<ChordDiagram>,
        rows: Vec<SparseVec>,
    ) -> Result<Self, Error> {
        let expected = enumerate_diagrams(degree);
        if diagrams != expected {
            return Err(Error::InvalidBasis(String::from("diagram list is not the canonical degree list")));
        }
        let n = diagrams.len();
        let mut map = BTreeMap::new();
        for row in rows {
            let Some((p, lead)) = row.first().cloned() else {
                return Err(Error::InvalidBasis(String::from("empty row")));
            };
            if !lead.is_one() {
                return Err(Error::InvalidBasis(alloc::format!("row {p} does not lead with 1")));
            }
            if row.windows(2).any(|w| w[0].0 >= w[1].0) || row.iter().any(|(c, v)| *c >= n || v.is_zero()) {
                return Err(Error::InvalidBasis(alloc::format!("row {p} is not a sorted sparse row")));
            }
            if map.insert(p, row).is_some() {
                return Err(Error::InvalidBasis(alloc::format!("two rows share pivot {p}")));
            }
        }
        for row in map.values() {
            if row.iter().skip(1).any(|(c, _)| map.contains_key(c)) {
                return Err(Error::InvalidBasis(String::from("rows are not fully reduced")));
            }
        }
        Ok(Self::assemble(DiagramIndex::from_list(degree, diagrams), Rref::from_rows(n, map)))
    }

    pub fn degree(&self) -> usize {
        self.index.degree()
    }

    pub fn index(&self) -> &DiagramIndex {
        &self.index
    }

    pub fn diagrams(&self) -> &[ChordDiagram] {
        self.index.diagrams()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn rank(&self) -> usize {
        self.rref.rank()
    }

    /// Diagram indices whose classes form the basis, in coordinate order.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn basis_diagrams(&self) -> Vec<ChordDiagram> {
        self.free.iter().map(|&c| self.index.diagrams()[c].clone()).collect()
    }

    /// Stored rows by pivot, for serialisation.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rref.rows().values()
    }

    /// Coordinates of the class of `v` in the basis of free diagrams.
    pub fn reduce(&self, v: &DiagramSum) -> Result<Vec<Rational>, Error> {
        let sparse = self.rref.reduce(self.index.vector(v)?);
        let mut out = vec![Rational::zero(); self.dim()];
        for (c, x) in sparse {
            out[self.free_pos[&c]] = x;
        }
        Ok(out)
    }

    /// The canonical representative of the class of `v`, supported on basis
    /// diagrams.
    pub fn normal_form(&self, v: &DiagramSum) -> Result<DiagramSum, Error> {
        Ok(self.index.sum(&self.rref.reduce(self.index.vector(v)?)))
    }

    pub fn equal_mod_4t(&self, a: &DiagramSum, b: &DiagramSum) -> Result<bool, Error> {
        a.check_degree(b)?;
        Ok(self.reduce(&a.checked_sub(b)?)?.iter().all(Zero::is_zero))
    }

    /// `sum_k coords[k] * (k-th basis diagram)`.
    pub fn lift(&self, coords: &[Rational]) -> DiagramSum {
        let mut out = DiagramSum::zero(self.degree());
        for (k, c) in coords.iter().enumerate() {
            out.add_term(self.index.diagrams()[self.free[k]].clone(), c.clone());
        }
        out
    }

    /// The weight systems dual to the basis classes.
    pub fn dual_weights(&self) -> Vec<WeightSystem> {
        (0..self.dim())
            .map(|k| {
                let f = self.free[k];
                let mut values = vec![Rational::zero(); self.index.len()];
                values[f] = Rational::one();
                for (&p, row) in self.rref.rows() {
                    if let Some((_, a)) = row.iter().find(|(c, _)| *c == f) {
                        values[p] = -a.clone();
                    }
                }
                WeightSystem::from_values(self.index.clone(), values, WeightLabel::Dual(k))
            })
            .collect()
    }

    /// Whether `w` vanishes on every stored relation row.
    pub fn annihilated_by(&self, w: &WeightSystem) -> bool {
        w.degree() == self.degree()
            && self.rref.rows().values().all(|row| {
                row.iter().fold(Rational::zero(), |acc, (c, a)| acc + a * &w.values[*c]).is_zero()
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightLabel {
    /// Dual to the `k`-th basis class.
    Dual(usize),
    Det,
    Perm,
    Alpha(Partition),
    Named(String),
}

impl fmt::Display for WeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightLabel::Dual(k) => write!(f, "dual:{k}"),
            WeightLabel::Det => write!(f, "det"),
            WeightLabel::Perm => write!(f, "perm"),
            WeightLabel::Alpha(p) => write!(f, "alpha:{p}"),
            WeightLabel::Named(s) => write!(f, "{s}"),
        }
    }
}

/// A linear functional on degree-`m` diagrams, stored by value on every
/// canonical diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    index: DiagramIndex,
    values: Vec<Rational>,
    label: WeightLabel,
}

impl WeightSystem {
    pub fn from_values(index: DiagramIndex, values: Vec<Rational>, label: WeightLabel) -> Self {
        assert_eq!(values.len(), index.len());
        WeightSystem { index, values, label }
    }

    pub fn from_fn(index: &DiagramIndex, label: WeightLabel, f: impl FnMut(&ChordDiagram) -> Rational) -> Self {
        let values = index.diagrams().iter().map(f).collect();
        WeightSystem { index: index.clone(), values, label }
    }

    pub fn degree(&self) -> usize {
        self.index.degree()
    }

    pub fn label(&self) -> &WeightLabel {
        &self.label
    }

    pub fn index(&self) -> &DiagramIndex {
        &self.index
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, d: &ChordDiagram) -> Option<&Rational> {
        self.index.position(d).map(|i| &self.values[i])
    }

    pub fn evaluate(&self, v: &DiagramSum) -> Result<Rational, Error> {
        if v.degree() != self.degree() {
            return Err(Error::DegreeMismatch { left: v.degree(), right: self.degree() });
        }
        Ok(v.iter().fold(Rational::zero(), |acc, (d, c)| acc + c * self.value(d).expect("canonical diagram")))
    }

    /// True when the functional kills every given relation.
    pub fn annihilates(&self, relations: &[DiagramSum]) -> bool {
        relations.iter().all(|r| self.evaluate(r).map(|x| x.is_zero()).unwrap_or(false))
    }

    /// `self + c * other`, relabelled.
    pub fn add_scaled(&self, c: &Rational, other: &WeightSystem, label: WeightLabel) -> Result<WeightSystem, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + c * b).collect();
        Ok(WeightSystem { index: self.index.clone(), values, label })
    }

    pub fn zero(index: &DiagramIndex, label: WeightLabel) -> Self {
        WeightSystem { index: index.clone(), values: vec![Rational::zero(); index.len()], label }
    }
}
