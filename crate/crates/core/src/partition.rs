use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// An integer partition, parts weakly decreasing.
///
/// Ordered lexicographically on the parts, so `[4] > [2,2]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts into weakly decreasing order; parts must be positive.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if let Some(&p) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::PartTooSmall { part: p, min: 1 });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    pub fn has_odd_part(&self) -> bool {
        !self.is_even()
    }

    /// Juxtaposition of parts.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Value of the sign character on this cycle type.
    pub fn sign(&self) -> i64 {
        let odd_flips = self.parts.iter().filter(|&&p| p % 2 == 0).count();
        if odd_flips % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Parses `[4,2]`, `{4,2}` or `4,2`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let t = text.trim();
        let t = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .or_else(|| t.strip_prefix('{').and_then(|t| t.strip_suffix('}')))
            .unwrap_or(t);
        let mut parts = Vec::new();
        for item in t.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let p = item
                .parse::<usize>()
                .map_err(|_| Error::Syntax(alloc::format!("bad partition part '{item}'")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` with every part at least `min_part`, in
/// descending order.
pub fn partitions(n: usize, min_part: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for p in (min..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, min_part.max(1), &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into even parts.
pub fn even_partitions(n: usize) -> Vec<Partition> {
    partitions(n, 2).into_iter().filter(Partition::is_even).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn enumeration() {
        let p4: Vec<_> = partitions(4, 1).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, vec!["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        assert_eq!(partitions(6, 2).len(), 4);
        let e6: Vec<_> = even_partitions(6).iter().map(|p| p.to_string()).collect();
        assert_eq!(e6, vec!["[6]", "[4,2]", "[2,2,2]"]);
        assert_eq!(partitions(0, 2).len(), 1);
    }

    #[test]
    fn ordering_and_sign() {
        let a = Partition::new(vec![4]).unwrap();
        let b = Partition::new(vec![2, 2]).unwrap();
        assert!(a > b);
        assert_eq!(a.sign(), -1);
        assert_eq!(b.sign(), 1);
        assert_eq!(Partition::parse("{2,4}").unwrap(), Partition::new(vec![4, 2]).unwrap());
        assert_eq!(a.join(&b).to_string(), "[4,2,2]");
    }
}
