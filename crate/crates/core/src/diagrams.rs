//! Chord diagrams on an oriented Wilson loop, up to rotation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::Rational;

/// A perfect matching on `2m` cyclically ordered points, stored as its
/// rotation-minimal encoding.
///
/// The encoding is the list of pairs `(min, max)` sorted by `min`; the
/// derived ordering compares these lists lexicographically, which is the
/// canonical-form comparison key.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordDiagram {
    pairs: Vec<(u8, u8)>,
}

impl ChordDiagram {
    pub fn empty() -> Self {
        ChordDiagram { pairs: Vec::new() }
    }

    /// The single chord `cd[0-1]`.
    pub fn single() -> Self {
        ChordDiagram { pairs: vec![(0, 1)] }
    }

    /// Canonicalises a list of endpoint pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self, Error> {
        let n = 2 * pairs.len();
        let mut partner = vec![usize::MAX; n];
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::EndpointPairedWithItself(a));
            }
            for p in [a, b] {
                if p >= n {
                    return Err(Error::PointOutOfRange { point: p, points: n });
                }
                if partner[p] != usize::MAX {
                    return Err(Error::DuplicateEndpoint(p));
                }
            }
            partner[a] = b;
            partner[b] = a;
        }
        Ok(Self::from_involution(&partner))
    }

    /// Canonicalises a raw pairing given as `partner[i]`.
    pub fn from_partner(partner: &[usize]) -> Result<Self, Error> {
        let n = partner.len();
        if n % 2 == 1 {
            return Err(Error::OddGroundSet(n));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= n {
                return Err(Error::PointOutOfRange { point: p, points: n });
            }
            if p == i {
                return Err(Error::EndpointPairedWithItself(i));
            }
            if partner[p] != i {
                return Err(Error::NotInvolution(i));
            }
        }
        Ok(Self::from_involution(partner))
    }

    /// Canonicalises a pairing already known to be a fixed-point-free
    /// involution.
    pub(crate) fn from_involution(partner: &[usize]) -> Self {
        let n = partner.len();
        if n == 0 {
            return Self::empty();
        }
        // every rotation puts some chord endpoint at 0; the first pair of the
        // encoding is (0, forward distance of that chord), so only starts
        // with the least forward distance can win
        let dist = |s: usize| (partner[s] + n - s) % n;
        let best_dist = (0..n).map(dist).min().unwrap();
        let mut best: Option<usize> = None;
        for s in (0..n).filter(|&s| dist(s) == best_dist) {
            best = Some(match best {
                None => s,
                Some(b) => {
                    if cmp_rotations(partner, s, b) == core::cmp::Ordering::Less {
                        s
                    } else {
                        b
                    }
                }
            });
        }
        let s = best.unwrap();
        let pairs = RotatedPairs::new(partner, s).map(|(a, b)| (a as u8, b as u8)).collect();
        ChordDiagram { pairs }
    }

    /// Number of chords.
    pub fn degree(&self) -> usize {
        self.pairs.len()
    }

    pub fn points(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().map(|&(a, b)| (a as usize, b as usize))
    }

    pub fn partner(&self) -> Vec<usize> {
        let mut p = vec![0; self.points()];
        for (a, b) in self.pairs() {
            p[a] = b;
            p[b] = a;
        }
        p
    }

    /// The raw pairing obtained by rotating every endpoint `k` to `k + r`.
    pub fn rotated(&self, r: usize) -> Vec<usize> {
        let n = self.points();
        let p = self.partner();
        let mut q = vec![0; n];
        for i in 0..n {
            q[(i + r) % n] = (p[i] + r) % n;
        }
        q
    }

    /// Chord label of each endpoint; chords are numbered by first endpoint.
    pub fn chord_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.points()];
        for (c, (a, b)) in self.pairs().enumerate() {
            labels[a] = c;
            labels[b] = c;
        }
        labels
    }

    /// True when some chord joins two cyclically adjacent endpoints.
    pub fn has_isolated_chord(&self) -> bool {
        let n = self.points();
        self.pairs().any(|(a, b)| b == a + 1 || (a == 0 && b == n - 1))
    }

    /// Restriction to the chords whose index (in encoding order) satisfies
    /// `keep`, with surviving endpoints closed up in cyclic order.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> ChordDiagram {
        let labels = self.chord_labels();
        let kept: Vec<usize> = labels.into_iter().filter(|&c| keep(c)).collect();
        from_label_sequence(&kept)
    }

    /// Canonicalises chords given by arbitrary distinct positions on the
    /// loop; only their relative order matters.
    pub fn from_positions(chords: &[(usize, usize)]) -> Result<Self, Error> {
        let mut pts: Vec<usize> = chords.iter().flat_map(|&(a, b)| [a, b]).collect();
        pts.sort_unstable();
        let rank = |p: usize| pts.binary_search(&p).unwrap();
        let pairs: Vec<(usize, usize)> = chords.iter().map(|&(a, b)| (rank(a), rank(b))).collect();
        Self::from_pairs(&pairs)
    }

    /// Parses the textual form `cd[a-b,c-d,...]` (or `cd[]`).
    pub fn parse(text: &str) -> Result<Self, Error> {
        let body = text
            .trim()
            .strip_prefix("cd[")
            .and_then(|t| t.strip_suffix(']'))
            .ok_or(Error::Syntax(alloc::format!("not a chord diagram literal: {text}")))?;
        if body.trim().is_empty() {
            return Ok(Self::empty());
        }
        let mut pairs = Vec::new();
        for item in body.split(',') {
            let (a, b) = item
                .split_once('-')
                .ok_or(Error::Syntax(alloc::format!("bad pair {item}")))?;
            let a: usize = a.trim().parse().map_err(|_| Error::Syntax(alloc::format!("bad endpoint {a}")))?;
            let b: usize = b.trim().parse().map_err(|_| Error::Syntax(alloc::format!("bad endpoint {b}")))?;
            pairs.push((a, b));
        }
        Self::from_pairs(&pairs)
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cd[")?;
        for (i, (a, b)) in self.pairs().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Encoding pairs of the pairing rotated so that old endpoint `start` sits at 0.
struct RotatedPairs<'a> {
    partner: &'a [usize],
    start: usize,
    i: usize,
}

impl<'a> RotatedPairs<'a> {
    fn new(partner: &'a [usize], start: usize) -> Self {
        RotatedPairs { partner, start, i: 0 }
    }
}

impl Iterator for RotatedPairs<'_> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        let n = self.partner.len();
        while self.i < n {
            let i = self.i;
            self.i += 1;
            let old = (self.start + i) % n;
            let q = (self.partner[old] + n - self.start) % n;
            if q > i {
                return Some((i, q));
            }
        }
        None
    }
}

fn cmp_rotations(partner: &[usize], s: usize, t: usize) -> core::cmp::Ordering {
    RotatedPairs::new(partner, s).cmp(RotatedPairs::new(partner, t))
}

/// Builds the diagram whose endpoints, read in order, carry the given chord
/// labels; each label must occur exactly twice.
pub(crate) fn from_label_sequence(labels: &[usize]) -> ChordDiagram {
    let n = labels.len();
    let mut partner = vec![0; n];
    let mut first: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &c) in labels.iter().enumerate() {
        if let Some(j) = first.remove(&c) {
            partner[i] = j;
            partner[j] = i;
        } else {
            first.insert(c, i);
        }
    }
    debug_assert!(first.is_empty());
    ChordDiagram::from_involution(&partner)
}

/// Rotation-minimal representative of a raw pairing.
pub fn canonical_form(raw_pairing: &[usize]) -> Result<ChordDiagram, Error> {
    ChordDiagram::from_partner(raw_pairing)
}

/// Every degree-`m` chord diagram up to rotation, sorted by encoding.
pub fn enumerate_diagrams(m: usize) -> Vec<ChordDiagram> {
    let n = 2 * m;
    let mut out = BTreeSet::new();
    let mut partner = vec![usize::MAX; n];
    matchings(&mut partner, &mut |p| {
        out.insert(ChordDiagram::from_involution(p));
    });
    out.into_iter().collect()
}

/// Calls `visit` on every perfect matching of `partner.len()` points.
pub(crate) fn matchings(partner: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    let Some(i) = partner.iter().position(|&p| p == usize::MAX) else {
        visit(partner);
        return;
    };
    for j in i + 1..partner.len() {
        if partner[j] == usize::MAX {
            partner[i] = j;
            partner[j] = i;
            matchings(partner, visit);
            partner[i] = usize::MAX;
            partner[j] = usize::MAX;
        }
    }
}

/// Connect-sum cutting both loops between their last endpoint and 0.
pub fn connect_sum(a: &ChordDiagram, b: &ChordDiagram) -> ChordDiagram {
    let shift = a.points();
    let mut partner = a.partner();
    partner.extend(b.partner().into_iter().map(|p| p + shift));
    ChordDiagram::from_involution(&partner)
}

/// A finite rational combination of ordered pairs of chord diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorSum {
    terms: BTreeMap<(ChordDiagram, ChordDiagram), Rational>,
}

impl TensorSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, left: ChordDiagram, right: ChordDiagram, coeff: Rational) {
        let key = (left, right);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, left: &ChordDiagram, right: &ChordDiagram) -> Rational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ChordDiagram, &ChordDiagram, &Rational)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exchanges the two tensor factors of every term.
    pub fn swapped(&self) -> TensorSum {
        let mut out = TensorSum::new();
        for (l, r, c) in self.iter() {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    pub fn total(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }
}

/// Sum over all ways of splitting the chords into two sets.
pub fn coproduct(d: &ChordDiagram) -> TensorSum {
    let m = d.degree();
    let mut out = TensorSum::new();
    for mask in 0u64..(1u64 << m) {
        let left = d.restrict(|c| mask >> c & 1 == 1);
        let right = d.restrict(|c| mask >> c & 1 == 0);
        out.add_term(left, right, Rational::one());
    }
    out
}
