//! Enumeration of uni-trivalent graphs of small degree, up to isomorphism of
//! the underlying graph. Leg order and vertex orientations are one fixed
//! choice per graph.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{permutations, FeynmanDiagram};

/// `(legs, self-loops)` at one internal vertex.
type VertexType = (usize, usize);

/// Connected graphs of the given degree with at least one leg.
pub fn connected_graphs(degree: usize) -> Vec<FeynmanDiagram> {
    let mut out = Vec::new();
    if degree == 0 {
        return out;
    }
    if degree == 1 {
        out.push(FeynmanDiagram::from_raw(2, 0, vec![1, 0]));
    }
    for t in 1..2 * degree {
        let u = 2 * degree - t;
        for types in type_sequences(t, u) {
            let rem: Vec<usize> = types.iter().map(|&(l, c)| 3 - l - 2 * c).collect();
            if rem.iter().sum::<usize>() % 2 == 1 {
                continue;
            }
            let perms: Vec<Vec<usize>> = permutations(t)
                .into_iter()
                .filter(|p| (0..t).all(|i| types[p[i]] == types[i]))
                .collect();
            let mut seen = BTreeSet::new();
            let mut adj = vec![vec![0usize; t]; t];
            fill(&mut adj, &mut rem.clone(), 0, 1, &mut |adj| {
                if !connected(adj) {
                    return;
                }
                let key = perms
                    .iter()
                    .map(|p| {
                        let mut k = Vec::with_capacity(t * t / 2);
                        for i in 0..t {
                            for j in i + 1..t {
                                k.push(adj[p[i]][p[j]] as u8);
                            }
                        }
                        k
                    })
                    .min()
                    .unwrap();
                if seen.insert(key) {
                    out.push(build(&types, adj));
                }
            });
        }
    }
    out
}

/// All graphs of the given degree whose components each carry a leg, as
/// multisets of connected components placed one after another.
pub fn graphs(degree: usize) -> Vec<FeynmanDiagram> {
    let mut comps: Vec<(usize, FeynmanDiagram)> = Vec::new();
    for d in 1..=degree {
        comps.extend(connected_graphs(d).into_iter().map(|g| (d, g)));
    }
    let mut out = Vec::new();
    fn go(
        comps: &[(usize, FeynmanDiagram)],
        start: usize,
        rest: usize,
        acc: Option<FeynmanDiagram>,
        out: &mut Vec<FeynmanDiagram>,
    ) {
        if rest == 0 {
            if let Some(a) = acc {
                out.push(a);
            }
            return;
        }
        for (i, (d, g)) in comps.iter().enumerate().skip(start) {
            if *d <= rest {
                let next = match &acc {
                    None => g.clone(),
                    Some(a) => a.disjoint_union(g),
                };
                go(comps, i, rest - d, Some(next), out);
            }
        }
    }
    go(&comps, 0, degree, None, &mut out);
    out
}

fn type_sequences(t: usize, u: usize) -> Vec<Vec<VertexType>> {
    let all: Vec<VertexType> = {
        let mut v: Vec<VertexType> = (0..=3usize)
            .flat_map(|l| (0..=1usize).map(move |c| (l, c)))
            .filter(|&(l, c)| l + 2 * c <= 3)
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    fn go(all: &[VertexType], from: usize, t: usize, u: usize, cur: &mut Vec<VertexType>, out: &mut Vec<Vec<VertexType>>) {
        if cur.len() == t {
            if u == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for (i, &ty) in all.iter().enumerate().skip(from) {
            if ty.0 <= u {
                cur.push(ty);
                go(all, i, t, u - ty.0, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&all, 0, t, u, &mut Vec::new(), &mut out);
    out
}

/// Symmetric multiplicities with prescribed row sums, filled pair by pair.
fn fill(adj: &mut Vec<Vec<usize>>, rem: &mut [usize], i: usize, j: usize, visit: &mut impl FnMut(&Vec<Vec<usize>>)) {
    let t = rem.len();
    if i == t {
        visit(adj);
        return;
    }
    if j == t {
        if rem[i] == 0 {
            fill(adj, rem, i + 1, i + 2, visit);
        }
        return;
    }
    let max = rem[i].min(rem[j]);
    for k in 0..=max {
        adj[i][j] = k;
        adj[j][i] = k;
        rem[i] -= k;
        rem[j] -= k;
        fill(adj, rem, i, j + 1, visit);
        rem[i] += k;
        rem[j] += k;
    }
    adj[i][j] = 0;
    adj[j][i] = 0;
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let t = adj.len();
    let mut seen = vec![false; t];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..t {
            if adj[v][w] > 0 && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn build(types: &[VertexType], adj: &[Vec<usize>]) -> FeynmanDiagram {
    let t = types.len();
    let u: usize = types.iter().map(|ty| ty.0).sum();
    let mut partner = vec![usize::MAX; u + 3 * t];
    let mut next_slot = vec![0usize; t];
    let mut take = |v: usize| {
        let s = u + 3 * v + next_slot[v];
        next_slot[v] += 1;
        s
    };
    let mut leg = 0;
    let link = |p: &mut Vec<usize>, a: usize, b: usize| {
        p[a] = b;
        p[b] = a;
    };
    for (v, &(l, c)) in types.iter().enumerate() {
        for _ in 0..l {
            let s = take(v);
            link(&mut partner, leg, s);
            leg += 1;
        }
        for _ in 0..c {
            let (a, b) = (take(v), take(v));
            link(&mut partner, a, b);
        }
    }
    for i in 0..t {
        for j in i + 1..t {
            for _ in 0..adj[i][j] {
                let (a, b) = (take(i), take(j));
                link(&mut partner, a, b);
            }
        }
    }
    FeynmanDiagram::from_raw(u, t, partner)
}
