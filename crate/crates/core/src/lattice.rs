//! Finite lattices of sets ordered by inclusion.

use std::collections::{HashMap, HashSet};
use std::fmt::Write;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{check_limit, Error, Result};
use crate::graph::Graph;
use crate::limits;

/// Which set operation is the lattice operation computed directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Closure {
    /// Closed under intersection; joins are closures of unions.
    Meet,
    /// Closed under union; meets are interiors of intersections.
    Join,
}

/// A family of sets closed under intersection (or under union), with a top
/// and a bottom, sorted by cardinality and then bit pattern.
#[derive(Debug, Clone)]
pub struct SetLattice {
    elements: Vec<VertexSet>,
    index: HashMap<VertexSet, usize>,
    kind: Closure,
    generators: Vec<VertexSet>,
    top: usize,
    bottom: usize,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

impl SetLattice {
    /// Closure of `generators ∪ {top}` under intersection.
    pub fn meet_closure(generators: &[VertexSet], top: VertexSet) -> Result<SetLattice> {
        let limit = limits::get().lattice_elements;
        let gens: Vec<VertexSet> = generators.iter().map(|&g| g & top).collect();
        let mut seen: HashSet<VertexSet> = HashSet::from([top]);
        let mut stack = vec![top];
        while let Some(x) = stack.pop() {
            for &g in &gens {
                let y = x & g;
                if seen.insert(y) {
                    check_limit("lattice elements", seen.len(), limit)?;
                    stack.push(y);
                }
            }
        }
        Ok(SetLattice::build(seen.into_iter().collect(), Closure::Meet, gens))
    }

    /// Closure of `generators ∪ {bottom}` under union.
    pub fn join_closure(generators: &[VertexSet], bottom: VertexSet) -> Result<SetLattice> {
        let limit = limits::get().lattice_elements;
        let gens: Vec<VertexSet> = generators.iter().map(|&g| g | bottom).collect();
        let mut seen: HashSet<VertexSet> = HashSet::from([bottom]);
        let mut stack = vec![bottom];
        while let Some(x) = stack.pop() {
            for &g in &gens {
                let y = x | g;
                if seen.insert(y) {
                    check_limit("lattice elements", seen.len(), limit)?;
                    stack.push(y);
                }
            }
        }
        Ok(SetLattice::build(seen.into_iter().collect(), Closure::Join, gens))
    }

    /// Wraps an explicit family, which must be closed under intersection
    /// with a greatest element, or closed under union with a least one.
    pub fn from_family(family: &[VertexSet]) -> Result<SetLattice> {
        let mut els: Vec<VertexSet> = family.to_vec();
        els.sort_by_key(|s| s.size_key());
        els.dedup();
        if els.is_empty() {
            return Err(Error::Precondition("a lattice needs at least one element".into()));
        }
        check_limit("lattice elements", els.len(), limits::get().lattice_elements)?;
        let set: HashSet<VertexSet> = els.iter().copied().collect();
        let union = els.iter().fold(VertexSet::EMPTY, |a, &b| a | b);
        let inter = els.iter().fold(union, |a, &b| a & b);
        let pairwise = |f: &dyn Fn(VertexSet, VertexSet) -> VertexSet| {
            els.iter().all(|&a| els.iter().all(|&b| set.contains(&f(a, b))))
        };
        if set.contains(&union) && pairwise(&|a, b| a & b) {
            Ok(SetLattice::build(els.clone(), Closure::Meet, els))
        } else if set.contains(&inter) && pairwise(&|a, b| a | b) {
            Ok(SetLattice::build(els.clone(), Closure::Join, els))
        } else {
            Err(Error::Precondition(
                "family is neither intersection-closed with a top nor union-closed with a bottom".into(),
            ))
        }
    }

    fn build(mut elements: Vec<VertexSet>, kind: Closure, generators: Vec<VertexSet>) -> SetLattice {
        elements.sort_by_key(|s| s.size_key());
        let index: HashMap<VertexSet, usize> = elements.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let n = elements.len();
        let mut l = SetLattice {
            elements,
            index,
            kind,
            generators,
            top: n - 1,
            bottom: 0,
            lower: vec![Vec::new(); n],
            upper: vec![Vec::new(); n],
        };
        match kind {
            Closure::Meet => {
                let top = l.elements[l.top];
                for q in 0..n {
                    let x = l.elements[q];
                    let mut cands: Vec<usize> = (top - x).iter().map(|v| l.closure_index(x.with(v))).collect();
                    cands.sort();
                    cands.dedup();
                    let minimal: Vec<usize> = cands
                        .iter()
                        .copied()
                        .filter(|&c| {
                            !cands.iter().any(|&d| d != c && l.elements[d].is_subset(l.elements[c]))
                        })
                        .collect();
                    for p in minimal {
                        l.upper[q].push(p);
                        l.lower[p].push(q);
                    }
                }
            }
            Closure::Join => {
                let bottom = l.elements[l.bottom];
                for p in 0..n {
                    let x = l.elements[p];
                    let mut cands: Vec<usize> = (x - bottom).iter().map(|v| l.interior_index(x.without(v))).collect();
                    cands.sort();
                    cands.dedup();
                    let maximal: Vec<usize> = cands
                        .iter()
                        .copied()
                        .filter(|&c| {
                            !cands.iter().any(|&d| d != c && l.elements[c].is_subset(l.elements[d]))
                        })
                        .collect();
                    for q in maximal {
                        l.lower[p].push(q);
                        l.upper[q].push(p);
                    }
                }
            }
        }
        for v in l.lower.iter_mut().chain(l.upper.iter_mut()) {
            v.sort();
        }
        l
    }

    fn closure_index(&self, x: VertexSet) -> usize {
        let c = self
            .generators
            .iter()
            .filter(|g| x.is_subset(**g))
            .fold(self.elements[self.top], |a, &g| a & g);
        self.index[&c]
    }

    fn interior_index(&self, x: VertexSet) -> usize {
        let c = self
            .generators
            .iter()
            .filter(|g| g.is_subset(x))
            .fold(self.elements[self.bottom], |a, &g| a | g);
        self.index[&c]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> VertexSet {
        self.elements[i]
    }

    pub fn index_of(&self, s: VertexSet) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.index.contains_key(&s)
    }

    pub fn kind(&self) -> Closure {
        self.kind
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].is_subset(self.elements[j])
    }

    /// `i` covers `j`.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.lower[i].binary_search(&j).is_ok()
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        let x = self.elements[i] & self.elements[j];
        match self.kind {
            Closure::Meet => self.index[&x],
            Closure::Join => self.interior_index(x),
        }
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        let x = self.elements[i] | self.elements[j];
        match self.kind {
            Closure::Meet => self.closure_index(x),
            Closure::Join => self.index[&x],
        }
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.upper[self.bottom].clone()
    }

    /// Number of covering steps on the longest and shortest paths from the
    /// bottom to each element.
    fn depths(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        let mut longest = vec![0usize; n];
        let mut shortest = vec![usize::MAX; n];
        shortest[self.bottom] = 0;
        // elements are sorted by cardinality, a linear extension of inclusion
        for i in 0..n {
            for &j in &self.lower[i] {
                longest[i] = longest[i].max(longest[j] + 1);
                shortest[i] = shortest[i].min(shortest[j].saturating_add(1));
            }
        }
        (longest, shortest)
    }

    /// Length of a longest chain.
    pub fn height(&self) -> usize {
        self.depths().0[self.top]
    }

    /// Length of a shortest maximal chain.
    pub fn shortest_maximal_chain_length(&self) -> usize {
        self.depths().1[self.top]
    }

    /// All maximal chains are equally long.
    pub fn is_jordan_dedekind(&self) -> bool {
        let (l, s) = self.depths();
        l[self.top] == s[self.top]
    }

    /// A maximal chain from the top down with the greatest (or least) length.
    pub fn extremal_chain(&self, longest: bool) -> Vec<usize> {
        let (l, s) = self.depths();
        let d = if longest { l } else { s };
        let mut chain = vec![self.top];
        let mut cur = self.top;
        while cur != self.bottom {
            let next = *self.lower[cur]
                .iter()
                .find(|&&j| d[j] + 1 == d[cur])
                .expect("depth decreases along some cover");
            chain.push(next);
            cur = next;
        }
        chain
    }

    /// Every maximal chain, listed from the top down.
    pub fn maximal_chains(&self) -> Result<Vec<Vec<usize>>> {
        let limit = limits::get().max_chains;
        let mut out = Vec::new();
        let mut path = vec![self.top];
        fn go(l: &SetLattice, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) -> Result<()> {
            let cur = *path.last().unwrap();
            if cur == l.bottom {
                out.push(path.clone());
                return check_limit("maximal chains", out.len(), limit);
            }
            for &j in &l.lower[cur] {
                path.push(j);
                go(l, path, out, limit)?;
                path.pop();
            }
            Ok(())
        }
        go(self, &mut path, &mut out, limit)?;
        Ok(out)
    }

    pub fn chain_sets(&self, chain: &[usize]) -> Vec<VertexSet> {
        chain.iter().map(|&i| self.elements[i]).collect()
    }

    /// The subset is closed under this lattice's meet and join.
    pub fn is_sublattice(&self, subset: &[usize]) -> bool {
        let s: HashSet<usize> = subset.iter().copied().collect();
        subset
            .iter()
            .all(|&a| subset.iter().all(|&b| s.contains(&self.meet(a, b)) && s.contains(&self.join(a, b))))
    }

    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, lo) in self.lower.iter().enumerate() {
            for &j in lo {
                out.push((i, j));
            }
        }
        out
    }

    /// Hasse diagram without top and bottom, as an undirected graph whose
    /// vertices follow the lattice order of the remaining elements.
    pub fn restricted_hasse_graph(&self) -> Result<Graph> {
        let middle: Vec<usize> = (0..self.len()).filter(|&i| i != self.top && i != self.bottom).collect();
        let pos: HashMap<usize, usize> = middle.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut g = Graph::new(middle.len())?;
        for (i, j) in self.hasse_edges() {
            if let (Some(&a), Some(&b)) = (pos.get(&i), pos.get(&j)) {
                g.add_edge(a, b)?;
            }
        }
        let labels = middle.iter().map(|&i| self.elements[i].to_string()).collect();
        Ok(g.with_labels(labels))
    }

    pub fn to_dot(&self, name: &str, label: impl Fn(VertexSet) -> String) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (i, &e) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  {i} [label=\"{}\"];", label(e));
        }
        for (i, j) in self.hasse_edges() {
            let _ = writeln!(s, "  {j} -> {i};");
        }
        s.push_str("}\n");
        s
    }

    pub fn export(&self) -> LatticeExport {
        LatticeExport {
            elements: self.elements.clone(),
            covers: self.hasse_edges(),
            height: self.height(),
            top: self.top,
            bottom: self.bottom,
        }
    }
}

/// Serializable view of a lattice; `covers` holds `(upper, lower)` pairs.
#[derive(Debug, Clone, Serialize)]
pub struct LatticeExport {
    pub elements: Vec<VertexSet>,
    pub covers: Vec<(usize, usize)>,
    pub height: usize,
    pub top: usize,
    pub bottom: usize,
}

/// Elements `[a, b, c, d, e]` of a pentagon sublattice: `e < c < b < a`
/// and `e < d < a` with `d` incomparable to `b` and `c`.
pub type Pentagon = [usize; 5];

pub fn find_pentagon(l: &SetLattice, d_covers_e: bool) -> Option<Pentagon> {
    let n = l.len();
    for b in 0..n {
        for c in 0..n {
            if c == b || !l.leq(c, b) {
                continue;
            }
            for d in 0..n {
                if l.leq(d, b) || l.leq(b, d) || l.leq(d, c) || l.leq(c, d) {
                    continue;
                }
                let e = l.meet(b, d);
                if l.meet(c, d) != e {
                    continue;
                }
                let a = l.join(c, d);
                if l.join(b, d) != a {
                    continue;
                }
                if d_covers_e && !l.covers(d, e) {
                    continue;
                }
                return Some([a, b, c, d, e]);
            }
        }
    }
    None
}

pub fn is_distributive(l: &SetLattice) -> bool {
    let n = l.len();
    (0..n).all(|p| {
        (0..n).all(|q| {
            (0..n).all(|r| l.meet(p, l.join(q, r)) == l.join(l.meet(p, q), l.meet(p, r)))
        })
    })
}

/// No pentagon sublattice.
pub fn is_modular(l: &SetLattice) -> bool {
    find_pentagon(l, false).is_none()
}

/// The modular law `x ≤ z ⇒ x ∨ (y ∧ z) = (x ∨ y) ∧ z`.
pub fn satisfies_modular_law(l: &SetLattice) -> bool {
    let n = l.len();
    (0..n).all(|x| {
        (0..n).all(|z| {
            !l.leq(x, z) || (0..n).all(|y| l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), z))
        })
    })
}

/// No pentagon sublattice whose short side covers its bottom.
pub fn is_semimodular(l: &SetLattice) -> bool {
    find_pentagon(l, true).is_none()
}

/// Upper cover law: `a ∧ b ≺ a` implies `b ≺ a ∨ b`.
pub fn satisfies_cover_law(l: &SetLattice) -> bool {
    let n = l.len();
    (0..n).all(|a| (0..n).all(|b| !l.covers(a, l.meet(a, b)) || l.covers(l.join(a, b), b)))
}

/// Every element is the join of the atoms below it.
pub fn is_atomistic(l: &SetLattice) -> bool {
    let atoms = l.atoms();
    (0..l.len()).all(|x| {
        atoms
            .iter()
            .filter(|&&a| l.leq(a, x))
            .fold(l.bottom(), |acc, &a| l.join(acc, a))
            == x
    })
}

pub fn is_geometric(l: &SetLattice) -> bool {
    is_semimodular(l) && is_atomistic(l)
}

/// Evaluation of the standard lattice predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LatticePredicates {
    pub distributive: bool,
    pub modular: bool,
    pub semimodular: bool,
    pub atomistic: bool,
    pub geometric: bool,
    pub jordan_dedekind: bool,
    pub modular_law: bool,
    pub cover_law: bool,
}

pub fn predicates(l: &SetLattice) -> LatticePredicates {
    let semimodular = is_semimodular(l);
    let atomistic = is_atomistic(l);
    LatticePredicates {
        distributive: is_distributive(l),
        modular: is_modular(l),
        semimodular,
        atomistic,
        geometric: semimodular && atomistic,
        jordan_dedekind: l.is_jordan_dedekind(),
        modular_law: satisfies_modular_law(l),
        cover_law: satisfies_cover_law(l),
    }
}

/// An order isomorphism `a → b`, if one exists.
pub fn lattice_isomorphism(a: &SetLattice, b: &SetLattice) -> Result<Option<Vec<usize>>> {
    let limit = limits::get().lattice_iso_elements;
    check_limit("lattice size", a.len().max(b.len()), limit)?;
    if a.len() != b.len() {
        return Ok(None);
    }
    let sig = |l: &SetLattice| -> Vec<(usize, usize, usize, usize)> {
        let (up, _) = l.depths();
        let mut down = vec![0usize; l.len()];
        for i in (0..l.len()).rev() {
            for &j in &l.upper[i] {
                down[i] = down[i].max(down[j] + 1);
            }
        }
        (0..l.len()).map(|i| (up[i], down[i], l.lower[i].len(), l.upper[i].len())).collect()
    };
    let sa = sig(a);
    let sb = sig(b);
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort();
    kb.sort();
    if ka != kb {
        return Ok(None);
    }
    let n = a.len();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        a: &SetLattice,
        b: &SetLattice,
        sa: &[(usize, usize, usize, usize)],
        sb: &[(usize, usize, usize, usize)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == a.len() {
            return true;
        }
        for x in 0..b.len() {
            if used[x] || sa[i] != sb[x] {
                continue;
            }
            let ok = (0..i).all(|j| a.leq(j, i) == b.leq(map[j], x) && a.leq(i, j) == b.leq(x, map[j]));
            if ok {
                map[i] = x;
                used[x] = true;
                if go(i + 1, a, b, sa, sb, map, used) {
                    return true;
                }
                used[x] = false;
            }
        }
        false
    }
    Ok(go(0, a, b, &sa, &sb, &mut map, &mut used).then_some(map))
}

pub fn lattice_isomorphic(a: &SetLattice, b: &SetLattice) -> Result<bool> {
    Ok(lattice_isomorphism(a, b)?.is_some())
}

/// Splits a lattice into coproduct components.
///
/// Two middle elements are linked when their meet is not the bottom or
/// their join is not the top; each class of the generated equivalence,
/// together with top and bottom, is one component.  An indecomposable
/// lattice comes back as a single component.
pub fn coproduct_decompose(l: &SetLattice) -> Result<Vec<SetLattice>> {
    let middle: Vec<usize> = (0..l.len()).filter(|&i| i != l.top && i != l.bottom).collect();
    let mut comp: Vec<usize> = (0..l.len()).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        c[x] = r;
        r
    }
    for (k, &p) in middle.iter().enumerate() {
        for &q in &middle[k + 1..] {
            if l.meet(p, q) != l.bottom || l.join(p, q) != l.top {
                let a = find(&mut comp, p);
                let b = find(&mut comp, q);
                comp[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: Vec<(usize, Vec<usize>)> = Vec::new();
    for &p in &middle {
        let r = find(&mut comp, p);
        match classes.iter_mut().find(|c| c.0 == r) {
            Some(c) => c.1.push(p),
            None => classes.push((r, vec![p])),
        }
    }
    if classes.len() <= 1 {
        return Ok(vec![l.clone()]);
    }
    classes
        .into_iter()
        .map(|(_, members)| {
            let mut fam: Vec<VertexSet> = members.iter().map(|&i| l.elements[i]).collect();
            fam.push(l.elements[l.top]);
            fam.push(l.elements[l.bottom]);
            SetLattice::from_family(&fam)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(sets: &[&[usize]]) -> SetLattice {
        SetLattice::from_family(&sets.iter().map(|s| VertexSet::from_iter(s.iter().copied())).collect::<Vec<_>>())
            .unwrap()
    }

    fn pentagon() -> SetLattice {
        fam(&[&[], &[1], &[1, 2], &[3], &[1, 2, 3]])
    }

    fn diamond() -> SetLattice {
        fam(&[&[], &[1], &[2], &[3], &[1, 2, 3]])
    }

    fn boolean(k: usize) -> SetLattice {
        let sets: Vec<VertexSet> = (0u64..1 << k).map(VertexSet).collect();
        SetLattice::from_family(&sets).unwrap()
    }

    #[test]
    fn pentagon_predicates() {
        let n5 = pentagon();
        assert!(!is_distributive(&n5));
        assert!(!is_modular(&n5));
        assert!(!satisfies_modular_law(&n5));
        assert!(!is_semimodular(&n5));
        assert!(!n5.is_jordan_dedekind());
        assert_eq!(n5.height(), 3);
        assert_eq!(n5.shortest_maximal_chain_length(), 2);
    }

    #[test]
    fn diamond_predicates() {
        let m3 = diamond();
        assert!(!is_distributive(&m3));
        assert!(is_modular(&m3));
        assert!(satisfies_modular_law(&m3));
        assert!(is_semimodular(&m3));
        assert!(is_geometric(&m3));
        assert!(satisfies_cover_law(&m3));
    }

    #[test]
    fn boolean_lattice_is_everything() {
        let b4 = boolean(4);
        assert_eq!(b4.len(), 16);
        let p = predicates(&b4);
        assert!(p.distributive && p.modular && p.semimodular && p.geometric && p.jordan_dedekind);
        assert_eq!(b4.height(), 4);
        assert_eq!(b4.maximal_chains().unwrap().len(), 24);
    }

    #[test]
    fn covers_from_closures_match_brute_force() {
        let gens: Vec<VertexSet> = [0b0111u64, 0b1110, 0b1011, 0b0101].map(VertexSet).to_vec();
        let l = SetLattice::meet_closure(&gens, VertexSet::full(4)).unwrap();
        for i in 0..l.len() {
            for j in 0..l.len() {
                let brute = i != j
                    && l.leq(j, i)
                    && !(0..l.len()).any(|k| k != i && k != j && l.leq(j, k) && l.leq(k, i));
                assert_eq!(l.covers(i, j), brute);
            }
        }
        let u = SetLattice::join_closure(&gens, VertexSet::EMPTY).unwrap();
        for i in 0..u.len() {
            for j in 0..u.len() {
                let brute = i != j
                    && u.leq(j, i)
                    && !(0..u.len()).any(|k| k != i && k != j && u.leq(j, k) && u.leq(k, i));
                assert_eq!(u.covers(i, j), brute);
            }
        }
    }

    #[test]
    fn isomorphism_and_coproduct() {
        let a = diamond();
        let b = fam(&[&[], &[4], &[5], &[6], &[4, 5, 6, 7]]);
        assert!(lattice_isomorphic(&a, &b).unwrap());
        assert!(!lattice_isomorphic(&a, &pentagon()).unwrap());
        let parts = coproduct_decompose(&a).unwrap();
        assert_eq!(parts.len(), 3);
        let chain = fam(&[&[], &[1], &[1, 2]]);
        assert_eq!(coproduct_decompose(&chain).unwrap().len(), 1);
        assert_eq!(coproduct_decompose(&boolean(2)).unwrap().len(), 2);
    }

    #[test]
    fn rejects_non_lattice_families() {
        let bad: Vec<VertexSet> = [0b01u64, 0b10].map(VertexSet).to_vec();
        assert!(SetLattice::from_family(&bad).is_err());
    }
}
