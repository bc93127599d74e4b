//! Feynman diagrams: uni-trivalent graphs whose legs sit on the Wilson loop.
//!
//! Legs are numbered `0..u` in counterclockwise order along the loop. Each
//! internal vertex has three slots `0, 1, 2` whose order is the cyclic
//! (counterclockwise) orientation at that vertex.
//!
//! STU resolution of the vertex joined to leg `k` at slot `j`: let `next` and
//! `prev` be the slots `j + 1` and `j + 2`. The leg is replaced by two
//! adjacent legs; `T` attaches `prev` to the earlier and `next` to the later
//! of the two, `U` swaps them, and the vertex equals `T - U`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagrams::ChordDiagram;
use crate::error::{Error, Violation};
use crate::partition::Partition;
use crate::sum::DiagramSum;
use crate::int;

pub mod graphs;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Anchor {
    Leg(usize),
    /// `Slot(vertex, slot)` with `slot < 3`.
    Slot(usize, u8),
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Anchor::Leg(k) => write!(f, "L{k}"),
            Anchor::Slot(v, s) => write!(f, "v{v}.{s}"),
        }
    }
}

/// Which admissible leg the STU recursion pivots on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    /// The earliest leg joined to an internal vertex.
    EarliestLeg,
    LatestLeg,
    /// A reproducible pseudo-random admissible leg at every step.
    Seeded(u64),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FeynmanDiagram {
    legs: usize,
    vertices: usize,
    /// Involution on anchor indices: legs first, then `legs + 3 * v + slot`.
    partner: Vec<usize>,
}

/// Checks every structural invariant of a raw description and reports all
/// violations at once.
pub fn validate_fd(legs: usize, vertices: usize, edges: &[(Anchor, Anchor)]) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let n = legs + 3 * vertices;
    let mut count = vec![0usize; n];
    let mut seen = BTreeSet::new();
    let in_range = |a: &Anchor, out: &mut Vec<Violation>| match *a {
        Anchor::Leg(k) if k < legs => Some(k),
        Anchor::Slot(v, s) if v < vertices && s < 3 => Some(legs + 3 * v + s as usize),
        _ => {
            out.push(Violation::AnchorOutOfRange(alloc::format!("{a}")));
            None
        }
    };
    let mut links: Vec<(usize, usize)> = Vec::new();
    for (a, b) in edges {
        let ia = in_range(a, &mut out);
        let ib = in_range(b, &mut out);
        if a == b {
            out.push(Violation::SelfEdge(alloc::format!("{a}")));
            continue;
        }
        for (anchor, idx) in [(a, ia), (b, ib)] {
            if let Some(i) = idx {
                count[i] += 1;
                if !seen.insert(i) && count[i] == 2 {
                    out.push(Violation::DuplicateAnchor(alloc::format!("{anchor}")));
                }
            }
        }
        if let (Some(x), Some(y)) = (ia, ib) {
            links.push((x, y));
        }
    }
    for (k, &c) in count.iter().enumerate().take(legs) {
        if c != 1 {
            out.push(Violation::LegArity { leg: k, edges: c });
        }
    }
    for v in 0..vertices {
        let filled = (0..3).filter(|s| count[legs + 3 * v + s] > 0).count();
        if filled != 3 {
            out.push(Violation::SlotArity { vertex: v, filled });
        }
    }
    if (legs + vertices) % 2 == 1 {
        out.push(Violation::DegreeParity { legs, vertices });
    }
    // components: one node per leg and per vertex
    let node = |i: usize| if i < legs { i } else { legs + (i - legs) / 3 };
    let mut uf = UnionFind::new(legs + vertices);
    for v in 0..vertices {
        for s in 0..3 {
            uf.union(legs + v, node(legs + 3 * v + s));
        }
    }
    for &(x, y) in &links {
        uf.union(node(x), node(y));
    }
    let with_leg: BTreeSet<usize> = (0..legs).map(|k| uf.find(k)).collect();
    let mut reported = BTreeSet::new();
    for v in 0..vertices {
        let r = uf.find(legs + v);
        if !with_leg.contains(&r) && reported.insert(r) {
            out.push(Violation::LeglessComponent { vertex: v });
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

impl FeynmanDiagram {
    pub fn new(legs: usize, vertices: usize, edges: &[(Anchor, Anchor)]) -> Result<Self, Error> {
        validate_fd(legs, vertices, edges).map_err(Error::InvalidFeynman)?;
        let mut partner = vec![usize::MAX; legs + 3 * vertices];
        let idx = |a: &Anchor| match *a {
            Anchor::Leg(k) => k,
            Anchor::Slot(v, s) => legs + 3 * v + s as usize,
        };
        for (a, b) in edges {
            partner[idx(a)] = idx(b);
            partner[idx(b)] = idx(a);
        }
        Ok(FeynmanDiagram { legs, vertices, partner })
    }

    fn from_raw(legs: usize, vertices: usize, partner: Vec<usize>) -> Self {
        debug_assert_eq!(partner.len(), legs + 3 * vertices);
        debug_assert!(partner.iter().enumerate().all(|(i, &p)| p != i && partner[p] == i));
        FeynmanDiagram { legs, vertices, partner }
    }

    /// The chord diagram read as a Feynman diagram without internal vertices.
    pub fn from_chord_diagram(d: &ChordDiagram) -> Self {
        FeynmanDiagram::from_raw(d.points(), 0, d.partner())
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn degree(&self) -> usize {
        (self.legs + self.vertices) / 2
    }

    pub fn edge_count(&self) -> usize {
        self.partner.len() / 2
    }

    fn anchor(&self, i: usize) -> Anchor {
        if i < self.legs {
            Anchor::Leg(i)
        } else {
            let j = i - self.legs;
            Anchor::Slot(j / 3, (j % 3) as u8)
        }
    }

    fn index(&self, a: Anchor) -> usize {
        match a {
            Anchor::Leg(k) => k,
            Anchor::Slot(v, s) => self.legs + 3 * v + s as usize,
        }
    }

    pub fn partner_of(&self, a: Anchor) -> Anchor {
        self.anchor(self.partner[self.index(a)])
    }

    /// Every edge once, as `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(Anchor, Anchor)> {
        (0..self.partner.len())
            .filter(|&i| i < self.partner[i])
            .map(|i| (self.anchor(i), self.anchor(self.partner[i])))
            .collect()
    }

    /// Leg pairs joined directly by an edge (chords of the diagram).
    pub fn chords(&self) -> Vec<(usize, usize)> {
        (0..self.legs)
            .filter(|&k| self.partner[k] < self.legs && k < self.partner[k])
            .map(|k| (k, self.partner[k]))
            .collect()
    }

    /// The chord diagram when there are no internal vertices.
    pub fn as_chord_diagram(&self) -> Option<ChordDiagram> {
        (self.vertices == 0).then(|| ChordDiagram::from_involution(&self.partner))
    }

    /// Places `other` after `self` along the Wilson loop.
    pub fn disjoint_union(&self, other: &FeynmanDiagram) -> FeynmanDiagram {
        let (u1, t1, u2) = (self.legs, self.vertices, other.legs);
        let legs = u1 + u2;
        let map_a = |i: usize| if i < u1 { i } else { legs + (i - u1) };
        let map_b = |i: usize| if i < u2 { u1 + i } else { legs + 3 * t1 + (i - u2) };
        let mut partner = vec![0; legs + 3 * (t1 + other.vertices)];
        for (i, &p) in self.partner.iter().enumerate() {
            partner[map_a(i)] = map_a(p);
        }
        for (i, &p) in other.partner.iter().enumerate() {
            partner[map_b(i)] = map_b(p);
        }
        FeynmanDiagram::from_raw(legs, t1 + other.vertices, partner)
    }

    /// Legs whose edge ends at an internal vertex.
    pub fn admissible_legs(&self) -> Vec<usize> {
        (0..self.legs).filter(|&k| self.partner[k] >= self.legs).collect()
    }

    /// One STU step through `leg`: returns `[(T, +1), (U, -1)]`, or `None`
    /// when the leg is a chord end.
    pub fn resolve_step(&self, leg: usize) -> Option<[(FeynmanDiagram, i64); 2]> {
        let (u, t) = (self.legs, self.vertices);
        let Anchor::Slot(v, j) = self.anchor(*self.partner.get(leg)?) else {
            return None;
        };
        let next = self.index(Anchor::Slot(v, (j + 1) % 3));
        let prev = self.index(Anchor::Slot(v, (j + 2) % 3));
        let a = self.partner[next];
        let b = self.partner[prev];
        let removed = |i: usize| i == leg || (i >= u && (i - u) / 3 == v);
        let new_legs = u + 1;
        let map = |i: usize| -> usize {
            if i < u {
                if i < leg {
                    i
                } else {
                    i + 1
                }
            } else {
                let w = (i - u) / 3;
                let s = (i - u) % 3;
                let w = if w > v { w - 1 } else { w };
                new_legs + 3 * w + s
            }
        };
        let mut base = vec![usize::MAX; new_legs + 3 * (t - 1)];
        for (i, &p) in self.partner.iter().enumerate() {
            if !removed(i) && !removed(p) {
                base[map(i)] = map(p);
            }
        }
        let (first, second) = (leg, leg + 1);
        let attach = |earlier: usize, later: usize| {
            let mut p = base.clone();
            if removed(earlier) {
                // next and prev form a loop at the vertex
                p[first] = second;
                p[second] = first;
            } else {
                p[first] = map(earlier);
                p[map(earlier)] = first;
                p[second] = map(later);
                p[map(later)] = second;
            }
            FeynmanDiagram::from_raw(new_legs, t - 1, p)
        };
        Some([(attach(b, a), 1), (attach(a, b), -1)])
    }

    pub fn stu_resolve(&self) -> Result<DiagramSum, Error> {
        self.stu_resolve_with(Pivot::EarliestLeg)
    }

    /// Expands the diagram into chord diagrams by repeated STU steps.
    pub fn stu_resolve_with(&self, pivot: Pivot) -> Result<DiagramSum, Error> {
        let mut acc: BTreeMap<ChordDiagram, i64> = BTreeMap::new();
        let seed = match pivot {
            Pivot::Seeded(s) => s,
            _ => 0,
        };
        resolve_into(self, pivot, seed, 1, &mut acc)?;
        let mut out = DiagramSum::zero(self.degree());
        for (d, c) in acc {
            out.add_term(d, int(c));
        }
        Ok(out)
    }

    /// Moves the leg at position `k` to position `sigma[k]`.
    pub fn permute_legs(&self, sigma: &[usize]) -> Result<FeynmanDiagram, Error> {
        if sigma.len() != self.legs {
            return Err(Error::ArityMismatch { expected: self.legs, found: sigma.len() });
        }
        let mut hit = vec![false; self.legs];
        for &s in sigma {
            if s >= self.legs || core::mem::replace(&mut hit[s], true) {
                return Err(Error::NotPermutation);
            }
        }
        let map = |i: usize| if i < self.legs { sigma[i] } else { i };
        let mut partner = vec![0; self.partner.len()];
        for (i, &p) in self.partner.iter().enumerate() {
            partner[map(i)] = map(p);
        }
        Ok(FeynmanDiagram::from_raw(self.legs, self.vertices, partner))
    }

    /// The `u!` leg orderings whose formal sum is the symmetrised diagram.
    pub fn sym(&self) -> Vec<FeynmanDiagram> {
        permutations(self.legs)
            .into_iter()
            .map(|s| self.permute_legs(&s).expect("generated permutation"))
            .collect()
    }

    /// Resolution of the symmetrised diagram.
    pub fn sym_resolved(&self) -> Result<DiagramSum, Error> {
        let mut out = DiagramSum::zero(self.degree());
        for f in self.sym() {
            out.add_scaled(&int(1), &f.stu_resolve()?);
        }
        Ok(out)
    }

    /// Connected components of the graph (Wilson loop removed).
    pub fn components(&self) -> Vec<Component> {
        let (u, t) = (self.legs, self.vertices);
        let node = |i: usize| if i < u { i } else { u + (i - u) / 3 };
        let mut uf = UnionFind::new(u + t);
        for (i, &p) in self.partner.iter().enumerate() {
            uf.union(node(i), node(p));
        }
        let mut by_root: BTreeMap<usize, Component> = BTreeMap::new();
        for k in 0..u {
            by_root.entry(uf.find(k)).or_default().legs.push(k);
        }
        for v in 0..t {
            by_root.entry(uf.find(u + v)).or_default().vertices.push(v);
        }
        for (i, &p) in self.partner.iter().enumerate() {
            if i < p {
                by_root.get_mut(&uf.find(node(i))).unwrap().edges += 1;
            }
        }
        let mut comps: Vec<Component> = by_root.into_values().collect();
        for c in &mut comps {
            c.radial = c.legs.len() == c.vertices.len()
                && c.vertices.iter().all(|&v| {
                    (0..3u8).filter(|&s| self.partner[self.index(Anchor::Slot(v, s))] < u).count() == 1
                });
        }
        comps
    }

    /// Genus `1 - #vertices + #edges` of every component, sorted.
    pub fn component_genera(&self) -> Vec<i64> {
        let mut g: Vec<i64> = self.components().iter().map(Component::genus).collect();
        g.sort_unstable();
        g
    }

    /// Deletes each chord (leg-to-leg edge) in turn.
    pub fn chord_deletions(&self) -> Vec<FeynmanDiagram> {
        self.chords()
            .into_iter()
            .map(|(k, l)| {
                let u = self.legs;
                let map = |i: usize| -> usize {
                    if i < u {
                        i - (i > k) as usize - (i > l) as usize
                    } else {
                        i - 2
                    }
                };
                let mut partner = vec![0; self.partner.len() - 2];
                for (i, &p) in self.partner.iter().enumerate() {
                    if i != k && i != l {
                        partner[map(i)] = map(p);
                    }
                }
                FeynmanDiagram::from_raw(u - 2, self.vertices, partner)
            })
            .collect()
    }

    /// Reverses the cyclic order at `vertex` by exchanging two of its slots.
    pub fn swap_slots(&self, vertex: usize, s1: u8, s2: u8) -> FeynmanDiagram {
        let a = self.index(Anchor::Slot(vertex, s1));
        let b = self.index(Anchor::Slot(vertex, s2));
        let map = |i: usize| {
            if i == a {
                b
            } else if i == b {
                a
            } else {
                i
            }
        };
        let mut partner = vec![0; self.partner.len()];
        for (i, &p) in self.partner.iter().enumerate() {
            partner[map(i)] = map(p);
        }
        FeynmanDiagram::from_raw(self.legs, self.vertices, partner)
    }
}

fn resolve_into(
    f: &FeynmanDiagram,
    pivot: Pivot,
    seed: u64,
    sign: i64,
    acc: &mut BTreeMap<ChordDiagram, i64>,
) -> Result<(), Error> {
    if let Some(d) = f.as_chord_diagram() {
        let e = acc.entry(d.clone()).or_insert(0);
        *e += sign;
        if *e == 0 {
            acc.remove(&d);
        }
        return Ok(());
    }
    let legs = f.admissible_legs();
    let leg = match pivot {
        Pivot::EarliestLeg => legs.first(),
        Pivot::LatestLeg => legs.last(),
        Pivot::Seeded(_) => legs.get((splitmix(seed) % legs.len().max(1) as u64) as usize),
    }
    .copied()
    .ok_or(Error::Unresolvable)?;
    let [(t, st), (u, su)] = f.resolve_step(leg).expect("admissible leg");
    resolve_into(&t, pivot, splitmix(seed ^ 0x9e37), sign * st, acc)?;
    resolve_into(&u, pivot, splitmix(seed ^ 0x7f4a), sign * su, acc)
}

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl fmt::Display for FeynmanDiagram {
    /// `fd{legs=u; v0=(a,b,c); ...; Lk-Ll}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fd{{legs={}", self.legs)?;
        for v in 0..self.vertices {
            let a = |s: u8| self.partner_of(Anchor::Slot(v, s));
            write!(f, "; v{v}=({},{},{})", a(0), a(1), a(2))?;
        }
        for (k, l) in self.chords() {
            write!(f, "; L{k}-L{l}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for FeynmanDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A connected component of the graph of a Feynman diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Component {
    pub legs: Vec<usize>,
    pub vertices: Vec<usize>,
    pub edges: usize,
    /// True when every vertex carries exactly one leg and there are as many
    /// legs as vertices, i.e. a loop with radial legs.
    pub radial: bool,
}

impl Component {
    pub fn genus(&self) -> i64 {
        1 - (self.legs.len() + self.vertices.len()) as i64 + self.edges as i64
    }

    /// The loop-with-radial-legs graph on `p` vertices.
    pub fn is_radial_loop(&self) -> bool {
        self.radial && self.genus() == 1
    }
}

/// The loop of `p` internal vertices with one radial leg each, drawn planar.
///
/// Vertex `i` has slots `(L_i, edge to i+1, edge to i-1)`; for `p = 1` the
/// two edge slots close into a self-loop.
pub fn radial_loop(p: usize) -> FeynmanDiagram {
    assert!(p >= 1);
    let mut partner = vec![0; p + 3 * p];
    let slot = |v: usize, s: usize| p + 3 * v + s;
    for i in 0..p {
        partner[i] = slot(i, 0);
        partner[slot(i, 0)] = i;
        let j = (i + 1) % p;
        partner[slot(i, 1)] = slot(j, 2);
        partner[slot(j, 2)] = slot(i, 1);
    }
    FeynmanDiagram::from_raw(p, p, partner)
}

/// The planar loop diagram with `p >= 2` radial legs.
pub fn tau_prime(p: usize) -> Result<FeynmanDiagram, Error> {
    if p < 2 {
        return Err(Error::PartTooSmall { part: p, min: 2 });
    }
    Ok(radial_loop(p))
}

/// Disjoint union of the part loops, one leg ordering.
pub fn tau_graph(partition: &Partition) -> Result<FeynmanDiagram, Error> {
    let mut acc: Option<FeynmanDiagram> = None;
    for &p in partition.parts() {
        let loop_p = tau_prime(p)?;
        acc = Some(match acc {
            None => loop_p,
            Some(a) => a.disjoint_union(&loop_p),
        });
    }
    acc.ok_or(Error::PartTooSmall { part: 0, min: 2 })
}

/// The symmetrised loop diagram as its `m!` leg orderings.
pub fn tau(partition: &Partition) -> Result<Vec<FeynmanDiagram>, Error> {
    Ok(tau_graph(partition)?.sym())
}

/// Resolution of the symmetrised loop diagram.
pub fn tau_resolved(partition: &Partition) -> Result<DiagramSum, Error> {
    tau_graph(partition)?.sym_resolved()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
