//! Families of subsets, used for independence systems.

use std::collections::HashSet;

use serde::Serialize;

use crate::bitset::VertexSet;

/// A set of subsets of a ground set, sorted by cardinality then bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: VertexSet,
    members: Vec<VertexSet>,
    lookup: HashSet<VertexSet>,
}

impl SetFamily {
    pub fn new(ground: VertexSet, members: impl IntoIterator<Item = VertexSet>) -> SetFamily {
        let mut members: Vec<VertexSet> = members.into_iter().collect();
        members.sort_by_key(|s| s.size_key());
        members.dedup();
        let lookup = members.iter().copied().collect();
        SetFamily { ground, members, lookup }
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.lookup.contains(&s)
    }

    pub fn max_size(&self) -> usize {
        self.members.last().map_or(0, |s| s.len())
    }

    /// Contains the empty set and every subset of every member.
    pub fn is_hereditary(&self) -> bool {
        self.contains(VertexSet::EMPTY)
            && self.members.iter().all(|&s| s.iter().all(|v| self.contains(s.without(v))))
    }

    /// A pair `(I, J)` with `|I| = |J| + 1` such that no `i ∈ I \ J` extends
    /// `J`, if one exists.
    pub fn exchange_violation(&self) -> Option<(VertexSet, VertexSet)> {
        for &i in &self.members {
            for &j in &self.members {
                if i.len() == j.len() + 1 && !(i - j).iter().any(|x| self.contains(j.with(x))) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// A nonempty member `J` and singleton member `{p}` such that no
    /// `(J \ {x}) ∪ {p}` is a member, if one exists.
    pub fn point_replacement_violation(&self) -> Option<(VertexSet, usize)> {
        let points: Vec<usize> = self.members.iter().filter(|s| s.len() == 1).filter_map(|s| VertexSet::min(*s)).collect();
        for &j in &self.members {
            if j.is_empty() {
                continue;
            }
            for &p in &points {
                if !j.iter().any(|x| self.contains(j.without(x).with(p))) {
                    return Some((j, p));
                }
            }
        }
        None
    }

    pub fn by_size(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_size() + 1];
        for s in &self.members {
            counts[s.len()] += 1;
        }
        counts
    }

    pub fn export(&self) -> FamilyExport {
        FamilyExport { count: self.len(), by_size: self.by_size(), members: self.members.clone() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyExport {
    pub count: usize,
    pub by_size: Vec<usize>,
    pub members: Vec<VertexSet>,
}

/// All subsets of `ground` with at most `k` elements.
pub fn subsets_up_to(ground: VertexSet, k: usize) -> Vec<VertexSet> {
    let elems = ground.to_vec();
    let mut out = vec![VertexSet::EMPTY];
    let mut layer = vec![(VertexSet::EMPTY, 0usize)];
    for _ in 0..k {
        let mut next = Vec::new();
        for &(s, start) in &layer {
            for (idx, &v) in elems.iter().enumerate().skip(start) {
                let t = s.with(v);
                out.push(t);
                next.push((t, idx + 1));
            }
        }
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_matroid_properties() {
        let f = SetFamily::new(VertexSet::full(5), subsets_up_to(VertexSet::full(5), 2));
        assert_eq!(f.len(), 1 + 5 + 10);
        assert!(f.is_hereditary());
        assert!(f.exchange_violation().is_none());
        assert!(f.point_replacement_violation().is_none());
        assert_eq!(f.by_size(), vec![1, 5, 10]);
    }

    #[test]
    fn detects_failures() {
        let a = VertexSet::from_iter([0, 1]);
        let f = SetFamily::new(VertexSet::full(4), [VertexSet::EMPTY, VertexSet::singleton(0), a]);
        assert!(!f.is_hereditary());
        let g = SetFamily::new(
            VertexSet::full(4),
            [
                VertexSet::EMPTY,
                VertexSet::singleton(0),
                VertexSet::singleton(1),
                VertexSet::singleton(2),
                VertexSet::from_iter([0, 1]),
            ],
        );
        assert!(g.exchange_violation().is_some());
        assert!(g.point_replacement_violation().is_some());
    }
}
