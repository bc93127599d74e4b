//! Intersection matrices and the universal immanent weight system.
//!
//! Chords are labelled `0..m` by the order of their first endpoints. The
//! intersection matrix has `M_ij = sign(i - j)` when chords `i` and `j`
//! interleave, and the immanent is `sum_sigma prod_i M_(i sigma(i)) [sigma]`
//! with `[sigma]` the cycle type.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diagrams::{canonical_form, ChordDiagram};
use crate::error::Error;
use crate::feynman::tau_resolved;
use crate::partition::{even_partitions, Partition};
use crate::quotient::{DiagramIndex, WeightLabel, WeightSystem};
use crate::sum::DiagramSum;
use crate::{factorial, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionMatrix {
    m: usize,
    entries: Vec<i8>,
}

impl IntersectionMatrix {
    pub fn of(d: &ChordDiagram) -> Self {
        Self::from_involution(&d.partner())
    }

    /// Matrix of a pairing read at its own basepoint, without canonicalising.
    pub fn from_partner(partner: &[usize]) -> Result<Self, Error> {
        canonical_form(partner)?;
        Ok(Self::from_involution(partner))
    }

    fn from_involution(partner: &[usize]) -> Self {
        // chords sorted by first endpoint
        let chords: Vec<(usize, usize)> = (0..partner.len()).filter(|&a| a < partner[a]).map(|a| (a, partner[a])).collect();
        let m = chords.len();
        let mut entries = vec![0i8; m * m];
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = chords[i];
                let (c, e) = chords[j];
                if a < c && c < b && b < e {
                    entries[i * m + j] = -1;
                    entries[j * m + i] = 1;
                }
            }
        }
        IntersectionMatrix { m, entries }
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self, Error> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::ArityMismatch { expected: m, found: rows.iter().map(Vec::len).find(|&l| l != m).unwrap() });
        }
        Ok(IntersectionMatrix { m, entries: rows.concat() })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.m + j]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.m.max(1)).take(self.m).map(<[i8]>::to_vec).collect()
    }

    pub fn linked(&self, i: usize, j: usize) -> bool {
        self.get(i, j) != 0
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let m = self.m;
        if m == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = self.rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..m - 1 {
            if a[k][k].is_zero() {
                let Some(r) = (k + 1..m).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, r);
                sign = -sign;
            }
            for i in k + 1..m {
                for j in k + 1..m {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[m - 1][m - 1]
    }

    /// Exact permanent by Ryser's inclusion-exclusion formula.
    pub fn permanent(&self) -> BigInt {
        let m = self.m;
        if m == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for mask in 1u32..(1u32 << m) {
            let mut prod = BigInt::one();
            for i in 0..m {
                let s: i64 = (0..m).filter(|j| mask >> j & 1 == 1).map(|j| self.get(i, j) as i64).sum();
                prod *= s;
                if prod.is_zero() {
                    break;
                }
            }
            if (m - mask.count_ones() as usize) % 2 == 1 {
                total -= prod;
            } else {
                total += prod;
            }
        }
        total
    }
}

impl fmt::Display for IntersectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x:>2}")?;
            }
        }
        Ok(())
    }
}

/// A rational combination of conjugacy classes of a symmetric group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionVector {
    terms: BTreeMap<Partition, Rational>,
}

impl PartitionVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, p: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &PartitionVector) {
        for (p, x) in &other.terms {
            self.add_term(p.clone(), c * x);
        }
    }

    pub fn coefficient(&self, p: &Partition) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn neg(&self) -> PartitionVector {
        let mut out = PartitionVector::zero();
        out.add_scaled(&-Rational::one(), self);
        out
    }
}

impl fmt::Display for PartitionVector {
    /// `2[4] + 2[2,2]`, larger partitions first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn cycle_type(sigma: &[usize]) -> Partition {
    let mut seen = vec![false; sigma.len()];
    let mut parts = Vec::new();
    for s in 0..sigma.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = sigma[x];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts).expect("positive cycle lengths")
}

/// Immanent as a sum over permutations supported on nonzero entries.
pub fn imm_perm(m: &IntersectionMatrix) -> PartitionVector {
    let n = m.size();
    let mut out = PartitionVector::zero();
    if n == 0 {
        out.add_term(Partition::new(Vec::new()).unwrap(), Rational::one());
        return out;
    }
    let mut sigma = vec![0usize; n];
    let mut used = vec![false; n];
    fn go(m: &IntersectionMatrix, i: usize, sign: i64, sigma: &mut [usize], used: &mut [bool], out: &mut PartitionVector) {
        if i == sigma.len() {
            out.add_term(cycle_type(sigma), int(sign));
            return;
        }
        for j in 0..sigma.len() {
            let e = m.get(i, j);
            if e != 0 && !used[j] {
                used[j] = true;
                sigma[i] = j;
                go(m, i + 1, sign * e as i64, sigma, used, out);
                used[j] = false;
            }
        }
    }
    go(m, 0, 1, &mut sigma, &mut used, &mut out);
    out
}

/// A decomposition of the labelled intersection graph into directed cycles
/// covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Each cycle starts at its smallest label.
    pub cycles: Vec<Vec<usize>>,
    /// Steps to a smaller label, closing steps included.
    pub descents: usize,
}

impl Decomposition {
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles.iter().map(Vec::len).collect()).expect("nonempty cycles")
    }

    /// Whether some cycle steps directly between `a` and `b`.
    pub fn uses_edge(&self, a: usize, b: usize) -> bool {
        self.cycles.iter().any(|c| {
            (0..c.len()).any(|k| {
                let (x, y) = (c[k], c[(k + 1) % c.len()]);
                (x, y) == (a, b) || (x, y) == (b, a)
            })
        })
    }
}

/// All cycle decompositions: cycles of length at least 3 in both
/// directions, 2-cycles once.
pub fn decompositions(m: &IntersectionMatrix) -> Vec<Decomposition> {
    let n = m.size();
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    fn descents(c: &[usize]) -> usize {
        (0..c.len()).filter(|&k| c[(k + 1) % c.len()] < c[k]).count()
    }
    fn extend(
        m: &IntersectionMatrix,
        used: &mut [bool],
        path: &mut Vec<usize>,
        cycles: &mut Vec<Vec<usize>>,
        out: &mut Vec<Decomposition>,
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() >= 2 && m.linked(last, start) {
            cycles.push(path.clone());
            next_cycle(m, used, cycles, out);
            cycles.pop();
        }
        for w in start + 1..used.len() {
            if !used[w] && m.linked(last, w) {
                used[w] = true;
                path.push(w);
                extend(m, used, path, cycles, out);
                path.pop();
                used[w] = false;
            }
        }
    }
    fn next_cycle(m: &IntersectionMatrix, used: &mut [bool], cycles: &mut Vec<Vec<usize>>, out: &mut Vec<Decomposition>) {
        let Some(s) = used.iter().position(|u| !u) else {
            let d = cycles.iter().map(|c| descents(c)).sum();
            out.push(Decomposition { cycles: cycles.clone(), descents: d });
            return;
        };
        used[s] = true;
        let mut path = vec![s];
        extend(m, used, &mut path, cycles, out);
        used[s] = false;
    }
    if n > 0 {
        next_cycle(m, &mut used, &mut cycles, &mut out);
    }
    out
}

/// Immanent through cycle decompositions weighted by `(-1)^descents`.
pub fn imm_hcd(d: &ChordDiagram) -> PartitionVector {
    let mut out = PartitionVector::zero();
    if d.degree() == 0 {
        out.add_term(Partition::new(Vec::new()).unwrap(), Rational::one());
        return out;
    }
    for dec in decompositions(&IntersectionMatrix::of(d)) {
        let s = if dec.descents % 2 == 0 { 1 } else { -1 };
        out.add_term(dec.cycle_type(), int(s));
    }
    out
}

/// The universal immanent, extended linearly.
pub fn immanent(v: &DiagramSum) -> PartitionVector {
    let mut out = PartitionVector::zero();
    for (d, c) in v.iter() {
        out.add_scaled(c, &imm_perm(&IntersectionMatrix::of(d)));
    }
    out
}

fn check_partition(p: &Partition, degree: usize) -> Result<(), Error> {
    if let Some(&small) = p.parts().iter().find(|&&x| x < 2) {
        return Err(Error::PartTooSmall { part: small, min: 2 });
    }
    if p.weight() != degree {
        return Err(Error::WeightMismatch { partition: p.weight(), degree });
    }
    Ok(())
}

/// Coefficient of `[p]` in the immanent of `v`.
pub fn alpha(p: &Partition, v: &DiagramSum) -> Result<Rational, Error> {
    check_partition(p, v.degree())?;
    Ok(immanent(v).coefficient(p))
}

pub fn det_weight(d: &ChordDiagram) -> BigInt {
    IntersectionMatrix::of(d).determinant()
}

pub fn perm_weight(d: &ChordDiagram) -> BigInt {
    IntersectionMatrix::of(d).permanent()
}

fn big(x: BigInt) -> Rational {
    Rational::from_integer(x)
}

pub fn det_weight_system(index: &DiagramIndex) -> WeightSystem {
    WeightSystem::from_fn(index, WeightLabel::Det, |d| big(det_weight(d)))
}

pub fn perm_weight_system(index: &DiagramIndex) -> WeightSystem {
    WeightSystem::from_fn(index, WeightLabel::Perm, |d| big(perm_weight(d)))
}

pub fn alpha_weight_system(p: &Partition, index: &DiagramIndex) -> Result<WeightSystem, Error> {
    check_partition(p, index.degree())?;
    Ok(WeightSystem::from_fn(index, WeightLabel::Alpha(p.clone()), |d| {
        imm_perm(&IntersectionMatrix::of(d)).coefficient(p)
    }))
}

/// `k_sigma = W(tau_sigma) / (2^#sigma m!)` over even partitions `sigma`.
pub fn k_coefficients(w: &WeightSystem) -> Result<BTreeMap<Partition, Rational>, Error> {
    let m = w.degree();
    let mut out = BTreeMap::new();
    for p in even_partitions(m) {
        let t = tau_resolved(&p)?;
        let denom = factorial(m) * int(1i64 << p.len());
        out.insert(p, w.evaluate(&t)? / denom);
    }
    Ok(out)
}

/// `sum_sigma k_sigma alpha_sigma` as a weight system.
pub fn leading_functional(w: &WeightSystem) -> Result<WeightSystem, Error> {
    let index = w.index().clone();
    let mut acc = WeightSystem::zero(&index, WeightLabel::Named(alloc::format!("lead({})", w.label())));
    for (p, k) in k_coefficients(w)? {
        let a = alpha_weight_system(&p, &index)?;
        let label = acc.label().clone();
        acc = acc.add_scaled(&k, &a, label)?;
    }
    Ok(acc)
}

/// Bilinear product of class combinations by juxtaposing partitions.
pub fn partition_mult(a: &PartitionVector, b: &PartitionVector) -> PartitionVector {
    let mut out = PartitionVector::zero();
    for (p, x) in a.iter() {
        for (q, y) in b.iter() {
            out.add_term(p.join(q), x * y);
        }
    }
    out
}

/// Value of the sign character on each class, summed against `v`.
pub fn sign_pairing(v: &PartitionVector) -> Rational {
    v.iter().fold(Rational::zero(), |acc, (p, c)| acc + c * int(p.sign()))
}

/// Value of the trivial character summed against `v`.
pub fn trivial_pairing(v: &PartitionVector) -> Rational {
    v.iter().fold(Rational::zero(), |acc, (_, c)| acc + c)
}
