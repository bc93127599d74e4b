//! Linear operators on chord diagrams: cabling, chord deletion `s`, chord
//! insertion `theta`, the deframing projector, the doubling operator `d`,
//! the connect-sum product, and cabling polynomials.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::diagrams::{connect_sum, ChordDiagram};
use crate::error::Error;
use crate::linalg::{interpolate, Rref};
use crate::quotient::{QuotientBasis, WeightSystem};
use crate::sum::DiagramSum;
use crate::{binomial, factorial, int, Rational};

/// Lifted diagrams of one diagram grouped by the number of occupied sheets.
type Layers = Vec<BTreeMap<ChordDiagram, i64>>;

/// Cabling with per-diagram memoisation.
///
/// A sheet assignment only matters through the ordered set partition of the
/// endpoints it induces, so `psi^n(D) = sum_j C(n, j) S_j(D)` where `S_j`
/// sums the lifts over ordered partitions into `j` blocks. Rotating the
/// block order rotates the lifted diagram, so only orders with the block of
/// endpoint 0 first are visited and weighted by `j`.
#[derive(Default, Debug, Clone)]
pub struct Cabler {
    cache: BTreeMap<ChordDiagram, Arc<Layers>>,
}

impl Cabler {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cable(&mut self, v: &DiagramSum, n: u64) -> Result<DiagramSum, Error> {
        if n == 0 {
            return Err(Error::ZeroCableOrder);
        }
        let mut out = DiagramSum::zero(v.degree());
        for (d, c) in v.iter() {
            if d.degree() == 0 {
                out.add_term(d.clone(), c.clone());
                continue;
            }
            let layers = self.layers(d);
            for (j, layer) in layers.iter().enumerate() {
                let w = binomial(n, j as u64 + 1) * c;
                if w.is_zero() {
                    continue;
                }
                for (e, k) in layer {
                    out.add_term(e.clone(), &w * int(*k));
                }
            }
        }
        Ok(out)
    }

    pub fn cable_diagram(&mut self, d: &ChordDiagram, n: u64) -> Result<DiagramSum, Error> {
        self.cable(&DiagramSum::from_diagram(d.clone()), n)
    }

    fn layers(&mut self, d: &ChordDiagram) -> Arc<Layers> {
        if let Some(l) = self.cache.get(d) {
            return l.clone();
        }
        let l = Arc::new(compute_layers(d));
        self.cache.insert(d.clone(), l.clone());
        l
    }
}

fn compute_layers(d: &ChordDiagram) -> Layers {
    let partner = d.partner();
    let n = partner.len();
    let mut layers: Layers = vec![BTreeMap::new(); n];
    let mut rgs = vec![0usize; n];
    let mut pos = vec![0usize; n];
    let mut lifted = vec![0usize; n];
    // restricted growth strings enumerate set partitions, block 0 holds point 0
    fn each_rgs(rgs: &mut [usize], i: usize, blocks: usize, visit: &mut impl FnMut(&[usize], usize)) {
        if i == rgs.len() {
            visit(rgs, blocks);
            return;
        }
        for b in 0..=blocks {
            rgs[i] = b;
            each_rgs(rgs, i + 1, blocks.max(b + 1), visit);
        }
    }
    each_rgs(&mut rgs, 1, 1, &mut |rgs, j| {
        // order of blocks 1..j after block 0
        let mut order: Vec<usize> = (0..j).collect();
        loop {
            let mut rank = vec![0; j];
            for (r, &b) in order.iter().enumerate() {
                rank[b] = r;
            }
            let mut next = 0;
            for r in 0..j {
                for t in 0..n {
                    if rank[rgs[t]] == r {
                        pos[t] = next;
                        next += 1;
                    }
                }
            }
            for t in 0..n {
                lifted[pos[t]] = pos[partner[t]];
            }
            let e = ChordDiagram::from_involution(&lifted);
            *layers[j - 1].entry(e).or_insert(0) += j as i64;
            if !next_permutation(&mut order[1..]) {
                break;
            }
        }
    });
    layers
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    let Some(i) = (1..n).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..n).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// `psi^n(v)`.
pub fn cable(v: &DiagramSum, n: u64) -> Result<DiagramSum, Error> {
    Cabler::new().cable(v, n)
}

/// Sum over deletions of one chord.
pub fn s_op(v: &DiagramSum) -> DiagramSum {
    if v.degree() == 0 {
        return DiagramSum::zero(0);
    }
    v.map_linear(v.degree() - 1, |d| {
        let mut out = DiagramSum::zero(d.degree() - 1);
        for c in 0..d.degree() {
            out.add_term(d.restrict(|k| k != c), Rational::one());
        }
        out
    })
}

/// Connect-sum with a single chord.
pub fn theta_op(v: &DiagramSum) -> DiagramSum {
    let c = ChordDiagram::single();
    v.map_linear(v.degree() + 1, |d| DiagramSum::from_diagram(connect_sum(d, &c)))
}

/// `phi = sum_k (-1)^k theta^k s^k / k!`.
pub fn deframe(v: &DiagramSum) -> DiagramSum {
    let m = v.degree();
    let mut out = v.clone();
    let mut sk = v.clone();
    for k in 1..=m {
        sk = s_op(&sk);
        if sk.is_zero() {
            break;
        }
        let mut t = sk.clone();
        for _ in 0..k {
            t = theta_op(&t);
        }
        let sign = if k % 2 == 1 { -Rational::one() } else { Rational::one() };
        out.add_scaled(&(sign / factorial(k)), &t);
    }
    out
}

/// Doubling: every chord replaced by two parallel chords, minus two
/// crossing chords; the new endpoints sit just after the first endpoint and
/// just before (parallel) or after (crossing) the second.
pub fn d_op(v: &DiagramSum) -> DiagramSum {
    v.map_linear(v.degree() + 1, |d| {
        let partner = d.partner();
        let n = partner.len();
        let mut out = DiagramSum::zero(d.degree() + 1);
        for (a, b) in d.pairs() {
            for (after_b, sign) in [(false, 1), (true, -1)] {
                // old point t moves to t + shift; new points are a' and b'
                let na = a + 1;
                let nb = if after_b { b + 2 } else { b + 1 };
                let old = |t: usize| -> usize {
                    let mut p = t;
                    if t > a {
                        p += 1;
                    }
                    if t > b || (t == b && !after_b) {
                        p += 1;
                    }
                    p
                };
                let mut q = vec![0; n + 2];
                for t in 0..n {
                    q[old(t)] = old(partner[t]);
                }
                q[na] = nb;
                q[nb] = na;
                out.add_term(ChordDiagram::from_involution(&q), int(sign));
            }
        }
        out
    })
}

/// Bilinear extension of connect-sum.
pub fn product(a: &DiagramSum, b: &DiagramSum) -> DiagramSum {
    let mut out = DiagramSum::zero(a.degree() + b.degree());
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_term(connect_sum(x, y), cx * cy);
        }
    }
    out
}

/// A polynomial in the cabling order `n`, coefficients ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CablingPolynomial {
    coeffs: Vec<Rational>,
}

impl CablingPolynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        CablingPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `n^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, n: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * n + c)
    }

    /// Highest power with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
}

impl fmt::Display for CablingPolynomial {
    /// `c0 + c1*n + c2*n^2`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, false) => {}
                (true, true) => write!(f, "-")?,
                (false, false) => write!(f, " + ")?,
                (false, true) => write!(f, " - ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "n")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Kernel of `s: A_m -> A_(m-1)` as coordinate vectors in the basis of `up`.
pub fn s_kernel(up: &QuotientBasis, down: &QuotientBasis) -> Result<Vec<Vec<Rational>>, Error> {
    if up.degree() != down.degree() + 1 {
        return Err(Error::DegreeMismatch { left: up.degree(), right: down.degree() + 1 });
    }
    let mut cols = Vec::with_capacity(up.dim());
    for d in up.basis_diagrams() {
        cols.push(down.reduce(&s_op(&DiagramSum::from_diagram(d)))?);
    }
    let mut r = Rref::new(up.dim());
    for i in 0..down.dim() {
        r.insert(cols.iter().enumerate().map(|(k, c)| (k, c[i].clone())));
    }
    r.finish();
    Ok(r.free_columns()
        .into_iter()
        .map(|f| {
            let mut v = vec![Rational::zero(); up.dim()];
            v[f] = Rational::one();
            for p in r.pivots() {
                if let Some((_, a)) = r.row(p).into_iter().flatten().find(|(c, _)| *c == f) {
                    v[p] = -a.clone();
                }
            }
            v
        })
        .collect())
}

/// `n -> W(psi^n(phi(v)))`, interpolated on `n = 1..=m+1` and checked at
/// `m+2` and `m+3`.
pub fn cabling_polynomial(w: &WeightSystem, v: &DiagramSum, cabler: &mut Cabler) -> Result<CablingPolynomial, Error> {
    let m = v.degree();
    if w.degree() != m {
        return Err(Error::DegreeMismatch { left: w.degree(), right: m });
    }
    let framed = deframe(v);
    let mut values = Vec::new();
    for n in 1..=(m as u64 + 3) {
        values.push((int(n as i64), w.evaluate(&cabler.cable(&framed, n)?)?));
    }
    let mut coeffs = interpolate(&values[..=m]);
    coeffs.resize(m + 1, Rational::zero());
    let p = CablingPolynomial::new(coeffs);
    for (n, g) in &values[m + 1..] {
        if &p.eval(n) != g {
            return Err(Error::PolynomialityViolated { node: n.to_integer().try_into().unwrap_or(0) });
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests;
