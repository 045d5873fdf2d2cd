//! Permutations of `{0, ..., n-1}` and small permutation-group closure.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A permutation stored by its images: `p.apply(i) = images[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation on points `1..=n`, e.g. `(1 2)(3 4)` or `(1,2)`.
    /// The empty string and `()` give the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        let bad = || Error::Parse(format!("malformed cycle notation {text:?}"));
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = inner.find(')').ok_or_else(bad)?;
            let points = inner[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    let p: usize = s.parse().map_err(|_| bad())?;
                    if p == 0 || p > n {
                        return Err(Error::Parse(format!("point {p} outside 1..={n}")));
                    }
                    if std::mem::replace(&mut seen[p - 1], true) {
                        return Err(Error::Parse(format!("point {p} repeated in {text:?}")));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            for (k, &p) in points.iter().enumerate() {
                images[p] = points[(k + 1) % points.len()];
            }
            rest = inner[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `g⁻¹ self g`, acting as: undo `g`, apply `self`, apply `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(self);
            k += 1;
        }
        k
    }

    /// Disjoint cycles of length at least 2, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation with points shifted by `offset` (1 for the usual
    /// 1-based notation, 0 for indices).
    pub fn to_cycle_string(&self, offset: usize) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| (p + offset).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string(1))
    }
}

/// All elements of the group generated by `gens` (breadth-first, identity
/// first), failing once more than `cap` elements are found.
pub fn group_closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.then(s);
            if seen.insert(h.clone()) {
                if seen.len() > cap {
                    return Err(Error::GroupCapExceeded(cap));
                }
                elements.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(elements)
}

/// Orbits of the group generated by `gens` on `0..degree`, each sorted,
/// ordered by least element.
pub fn orbits(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for g in gens {
        for i in 0..degree {
            let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; degree];
    for i in 0..degree {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(Vec::new());
        }
        out[slot[r]].push(i);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Permutation::parse_cycles(4, "(1 2)(3,4)").unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 2]);
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(p.order(), 2);
        assert!(Permutation::parse_cycles(3, "(1 1)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "").unwrap().is_identity());
    }

    #[test]
    fn composition_and_conjugation() {
        let a = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let b = Permutation::parse_cycles(3, "(2 3)").unwrap();
        assert_eq!(a.then(&b).order(), 3);
        assert_eq!(a.conjugate_by(&b), Permutation::parse_cycles(3, "(1 3)").unwrap());
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn symmetric_group_orders() {
        let t = Permutation::parse_cycles(4, "(1 2)").unwrap();
        let c = Permutation::parse_cycles(4, "(1 2 3 4)").unwrap();
        assert_eq!(group_closure(4, &[t.clone(), c.clone()], 100).unwrap().len(), 24);
        assert!(matches!(
            group_closure(4, &[t, c], 10),
            Err(Error::GroupCapExceeded(10))
        ));
    }

    #[test]
    fn orbit_partition() {
        let g = Permutation::parse_cycles(5, "(1 3)(4 5)").unwrap();
        assert_eq!(orbits(5, &[g]), vec![vec![0, 2], vec![1], vec![3, 4]]);
    }
}
