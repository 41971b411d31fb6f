//! Canonical labelling and isomorphism by individualisation and refinement.

use std::cmp::Ordering;

use crate::bitset::VertexSet;
use crate::error::{check_limit, Result};
use crate::graph::Graph;
use crate::limits;

/// A relabelling-invariant description of a (vertex-coloured) graph.
/// Two graphs are isomorphic exactly when their forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub colours: Vec<u32>,
    pub rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(self.rows.iter().map(|&r| VertexSet(r)).collect())
            .expect("canonical rows form a simple graph")
    }

    pub fn graph6(&self) -> String {
        crate::graph::io::to_graph6(&self.to_graph())
    }
}

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| VertexSet::from_iter(c.iter().copied())).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.star(v);
                    (masks.iter().map(|m| (row & *m).len() as u8).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn initial_cells(g: &Graph, colours: &[u32]) -> Cells {
    let mut vs: Vec<usize> = (0..g.n()).collect();
    vs.sort_by_key(|&v| (colours[v], v));
    let mut cells: Cells = Vec::new();
    for v in vs {
        match cells.last_mut() {
            Some(c) if colours[c[0]] == colours[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    refine(g, cells)
}

fn leaf_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| g.star(v).iter().fold(0u64, |acc, w| acc | 1 << pos[w]))
        .collect()
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn record_auto(&mut self, a: &[usize], b: &[usize]) {
        let mut sigma = vec![0; a.len()];
        for i in 0..a.len() {
            sigma[a[i]] = b[i];
        }
        if sigma.iter().enumerate().any(|(i, &x)| i != x) {
            self.autos.push(sigma);
        }
    }

    fn orbit_roots(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for sigma in &self.autos {
            if prefix.iter().all(|&v| sigma[v] == v) {
                for v in 0..n {
                    let a = find(&mut parent, v);
                    let b = find(&mut parent, sigma[v]);
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn run(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        if cells.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let rows = leaf_rows(self.g, &order);
            match &self.first {
                None => self.first = Some((rows.clone(), order.clone())),
                Some((fr, fo)) if *fr == rows => {
                    let fo = fo.clone();
                    self.record_auto(&fo, &order);
                }
                _ => {}
            }
            match &self.best {
                None => self.best = Some((rows, order)),
                Some((br, bo)) => match rows.cmp(br) {
                    Ordering::Less => self.best = Some((rows, order)),
                    Ordering::Equal => {
                        let bo = bo.clone();
                        self.record_auto(&bo, &order);
                    }
                    Ordering::Greater => {}
                },
            }
            return;
        }
        let (ti, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .unwrap();
        let target = cells[ti].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            let twin = explored.iter().any(|&u| {
                self.g.star(u).without(v) == self.g.star(v).without(u)
            });
            if twin {
                continue;
            }
            let roots = self.orbit_roots(prefix);
            if explored.iter().any(|&u| roots[u] == roots[v]) {
                continue;
            }
            let mut next = cells.clone();
            let rest: Vec<usize> = target.iter().copied().filter(|&x| x != v).collect();
            next.splice(ti..=ti, [vec![v], rest]);
            let next = refine(self.g, next);
            prefix.push(v);
            self.run(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

/// Canonical form together with the canonical order: `order[i]` is the
/// vertex placed at position `i`.
pub fn canonical_labelling(g: &Graph, colours: Option<&[u32]>) -> Result<(CanonicalForm, Vec<usize>)> {
    check_limit("canonical form vertices", g.n(), limits::get().canonical_vertices)?;
    let default = vec![0u32; g.n()];
    let colours = colours.unwrap_or(&default);
    if colours.len() != g.n() {
        return Err(crate::Error::Shape(format!(
            "{} colours for {} vertices",
            colours.len(),
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok((CanonicalForm { n: 0, colours: vec![], rows: vec![] }, vec![]));
    }
    let mut s = Search { g, first: None, best: None, autos: Vec::new() };
    s.run(initial_cells(g, colours), &mut Vec::new());
    let (rows, order) = s.best.unwrap();
    let cs = order.iter().map(|&v| colours[v]).collect();
    Ok((CanonicalForm { n: g.n(), colours: cs, rows }, order))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_labelling(g, None)?.0)
}

pub fn canonical_form_coloured(g: &Graph, colours: &[u32]) -> Result<CanonicalForm> {
    Ok(canonical_labelling(g, Some(colours))?.0)
}

pub fn graphs_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort();
    db.sort();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// An isomorphism `a → b` as a vertex map, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let (fa, oa) = canonical_labelling(a, None)?;
    let (fb, ob) = canonical_labelling(b, None)?;
    if fa != fb {
        return Ok(None);
    }
    let mut map = vec![0; a.n()];
    for i in 0..a.n() {
        map[oa[i]] = ob[i];
    }
    Ok(Some(map))
}

/// Cheap isomorphism invariant: cell sizes and inter-cell degrees of the
/// coarsest equitable partition.
pub fn refinement_invariant(g: &Graph) -> Vec<u32> {
    let cells = initial_cells(g, &vec![0; g.n()]);
    let mut out = vec![g.n() as u32, cells.len() as u32];
    for c in &cells {
        out.push(c.len() as u32);
        for d in &cells {
            let m = VertexSet::from_iter(d.iter().copied());
            out.push((g.star(c[0]) & m).len() as u32);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, edgeless, path};

    fn brute_min(g: &Graph) -> Vec<u64> {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u64>> = None;
        fn heap(k: usize, perm: &mut Vec<usize>, g: &Graph, best: &mut Option<Vec<u64>>) {
            if k <= 1 {
                let rows = leaf_rows(g, perm);
                if best.as_ref().is_none_or(|b| rows < *b) {
                    *best = Some(rows);
                }
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, g, best);
                if k % 2 == 0 {
                    perm.swap(i, k - 1);
                } else {
                    perm.swap(0, k - 1);
                }
            }
        }
        heap(n, &mut perm, g, &mut best);
        best.unwrap_or_default()
    }

    #[test]
    fn relabelling_invariance() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let h = g.permuted(&[5, 3, 1, 0, 2, 4]).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let map = find_isomorphism(&g, &h).unwrap().unwrap();
        for (u, v) in g.edges() {
            assert!(h.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c6 = cycle(6).unwrap();
        let two_triangles = complete(3).unwrap().disjoint_union(&complete(3).unwrap()).unwrap();
        assert!(!graphs_isomorphic(&c6, &two_triangles).unwrap());
        assert!(graphs_isomorphic(&path(1).unwrap(), &edgeless(1).unwrap()).unwrap());
    }

    #[test]
    fn agrees_with_brute_force_classes() {
        // every labelled graph on 5 vertices: equal forms iff equal brute minima
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut seen = std::collections::HashMap::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            let f = canonical_form(&g).unwrap();
            let b = brute_min(&g);
            if let Some(prev) = seen.insert(f.clone(), b.clone()) {
                assert_eq!(prev, b);
            }
        }
        assert_eq!(seen.len(), 34);
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        let pet = crate::catalog::petersen();
        let f = canonical_form(&pet).unwrap();
        assert_eq!(f.to_graph().edge_count(), 15);
        let e = edgeless(20).unwrap();
        assert_eq!(canonical_form(&e).unwrap().rows, vec![0; 20]);
        assert!(canonical_form(&complete(30).unwrap()).is_ok());
    }
}
