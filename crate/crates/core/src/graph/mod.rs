//! Finite simple graphs on at most 64 vertices.

pub mod io;

use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{check_limit, Error, Result};
use crate::limits;
use crate::sb::{SBMatrix, SBValue};

pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph with vertices `0..n` and bit-set adjacency rows.
#[derive(Debug, Clone, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, o: &Graph) -> bool {
        self.n == o.n && self.adj == o.adj
    }
}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.n.hash(h);
        self.adj.hash(h);
    }
}

impl Graph {
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n], labels: None })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        let full = VertexSet::full(n);
        for (v, &row) in adj.iter().enumerate() {
            if row.contains(v) {
                return Err(Error::Loop(v));
            }
            if !row.is_subset(full) {
                return Err(Error::InvalidVertex { vertex: (row - full).min().unwrap_or(n), n });
            }
            for w in row {
                if !adj[w].contains(v) {
                    return Err(Error::Precondition(format!("adjacency is not symmetric at ({v},{w})")));
                }
            }
        }
        Ok(Graph { n, adj, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        if labels.len() == self.n {
            self.labels = Some(labels);
        }
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, w: VertexSet) -> Result<()> {
        if let Some(v) = (w - self.vertices()).min() {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.len()).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|r| r.len()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(|r| r.len()).max()
    }

    pub fn adjacency_rows(&self) -> &[VertexSet] {
        &self.adj
    }

    /// `St(v)`: the neighbourhood of `v`.
    pub fn star(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `St(W)`: vertices adjacent to every vertex of `W`; `St(∅) = V`.
    pub fn star_of_set(&self, w: VertexSet) -> VertexSet {
        w.iter().fold(self.vertices(), |acc, v| acc & self.adj[v])
    }

    /// Vertices adjacent to some vertex of `W`.
    pub fn star_of_union(&self, w: VertexSet) -> VertexSet {
        w.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    pub fn closed_star(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn adjacency_matrix(&self) -> SBMatrix {
        SBMatrix::from_fn(self.n, self.n, |i, j| SBValue::from_bool(self.adj[i].contains(j)))
    }

    /// `A^c`: `0` exactly at adjacent pairs, so the diagonal is all `1`.
    pub fn complemented_adjacency(&self) -> SBMatrix {
        SBMatrix::from_fn(self.n, self.n, |i, j| SBValue::from_bool(!self.adj[i].contains(j)))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n).map(|v| (full - self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj, labels: self.labels.clone() }
    }

    /// Induced subgraph on `w`, with vertices renumbered in increasing order.
    /// The second component maps new indices to old ones.
    pub fn restriction(&self, w: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(w)?;
        let old: Vec<usize> = w.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| VertexSet::from_iter((self.adj[v] & w).iter().map(|x| pos[x])))
            .collect();
        let labels = self.labels.as_ref().map(|l| old.iter().map(|&v| l[v].clone()).collect());
        Ok((Graph { n: old.len(), adj, labels }, old))
    }

    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.restriction(self.vertices().without(v))?.0)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::new(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Shape(format!("permutation of length {} for {} vertices", perm.len(), self.n)));
        }
        let mut g = Graph::new(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    pub fn bfs_distances(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let d = dist[u].unwrap();
            for w in self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    q.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs_distances(u)[v]
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.adj[v];
                }
                frontier = next - comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Connectedness of the induced subgraph on `w`; the empty set counts as
    /// connected.
    pub fn is_connected_set(&self, w: VertexSet) -> bool {
        let Some(s) = w.min() else { return true };
        let mut comp = VertexSet::singleton(s);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v] & w;
            }
            frontier = next - comp;
            comp |= next;
        }
        comp == w
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// A proper 2-colouring as the set of colour-0 vertices.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                let c = side[u].unwrap();
                for w in self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!c);
                            q.push_back(w);
                        }
                        Some(x) if x == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(VertexSet::from_iter((0..self.n).filter(|&v| side[v] == Some(false))))
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && self.adj.iter().all(|r| r.len() == 3)
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for w in self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        q.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Largest distance between two vertices; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut d = 0;
        for s in 0..self.n {
            for x in self.bfs_distances(s) {
                d = d.max(x?);
            }
        }
        Some(d)
    }

    pub fn metrics(&self) -> Metrics {
        Metrics {
            vertices: self.n,
            edges: self.edge_count(),
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            girth: self.girth(),
            diameter: self.diameter(),
            connected: self.is_connected(),
            bipartite: self.is_bipartite(),
            cubic: self.is_cubic(),
            components: self.components().len(),
        }
    }

    /// The star map `v ↦ St(v)` is injective.
    pub fn is_sober(&self) -> bool {
        let mut stars = self.adj.clone();
        stars.sort();
        stars.windows(2).all(|w| w[0] != w[1])
    }

    /// Keeps the least vertex of every class of vertices sharing a star.
    pub fn sober_quotient(&self) -> SoberQuotient {
        let mut retraction = vec![0; self.n];
        let mut reps = Vec::new();
        for v in 0..self.n {
            match reps.iter().find(|&&r: &&usize| self.adj[r] == self.adj[v]) {
                Some(&r) => retraction[v] = r,
                None => {
                    reps.push(v);
                    retraction[v] = v;
                }
            }
        }
        let (graph, _) = self
            .restriction(VertexSet::from_iter(reps.iter().copied()))
            .expect("representatives are vertices");
        SoberQuotient { graph, representatives: reps, retraction }
    }

    /// For a tree: whether it is sober, and whether two leaves lie at
    /// distance 2.
    pub fn sober_tree_check(&self) -> Result<(bool, bool)> {
        if !self.is_tree() {
            return Err(Error::Precondition("sober_tree_check needs a tree".into()));
        }
        let leaves: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) == 1).collect();
        let mut close = false;
        for (a, &u) in leaves.iter().enumerate() {
            for &v in &leaves[a + 1..] {
                if self.distance(u, v) == Some(2) {
                    close = true;
                }
            }
        }
        Ok((self.is_sober(), close))
    }

    pub fn clique_number(&self) -> usize {
        fn go(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
            if size + cand.len() <= *best {
                return;
            }
            if cand.is_empty() {
                *best = size;
                return;
            }
            let v = cand.min().unwrap();
            go(g, cand & g.adj[v], size + 1, best);
            go(g, cand.without(v), size, best);
        }
        let mut best = 0;
        go(self, self.vertices(), 0, &mut best);
        best
    }

    /// Colours used by a greedy colouring in vertex order.
    pub fn greedy_chromatic_bound(&self) -> usize {
        let mut colour = vec![usize::MAX; self.n];
        let mut used = 0;
        for v in 0..self.n {
            let taken: Vec<usize> = self.adj[v].iter().map(|w| colour[w]).collect();
            let c = (0..).find(|c| !taken.contains(c)).unwrap();
            colour[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    /// Exact chromatic number of a proper vertex colouring.
    pub fn chromatic_number(&self) -> Result<usize> {
        check_limit("chromatic vertices", self.n, limits::get().chromatic_vertices)?;
        if self.n == 0 {
            return Ok(0);
        }
        let upper = self.greedy_chromatic_bound();
        let lower = self.clique_number().max(1);
        for k in lower..upper {
            if self.is_colourable(k) {
                return Ok(k);
            }
        }
        Ok(upper)
    }

    fn is_colourable(&self, k: usize) -> bool {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut colour = vec![usize::MAX; self.n];
        fn go(g: &Graph, order: &[usize], i: usize, k: usize, colour: &mut [usize], max_used: usize) -> bool {
            if i == order.len() {
                return true;
            }
            let v = order[i];
            // a fresh colour is only tried once, which breaks the colour symmetry
            for c in 0..k.min(max_used + 1) {
                if g.adj[v].iter().all(|w| colour[w] != c) {
                    colour[v] = c;
                    if go(g, order, i + 1, k, colour, max_used.max(c + 1)) {
                        return true;
                    }
                    colour[v] = usize::MAX;
                }
            }
            false
        }
        go(self, &order, 0, k, &mut colour, 0)
    }

    pub fn is_independent_set(&self, w: VertexSet) -> bool {
        w.iter().all(|v| self.adj[v].is_disjoint(w))
    }

    pub fn is_clique(&self, w: VertexSet) -> bool {
        w.iter().all(|v| (w.without(v)).is_subset(self.adj[v]))
    }
}

/// Result of [`Graph::sober_quotient`].
#[derive(Debug, Clone)]
pub struct SoberQuotient {
    pub graph: Graph,
    /// Original index of each quotient vertex, increasing.
    pub representatives: Vec<usize>,
    /// Original vertex to the original index of its representative.
    pub retraction: Vec<usize>,
}

/// Summary statistics of a graph; `None` girth or diameter means infinite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub connected: bool,
    pub bipartite: bool,
    pub cubic: bool,
    pub components: usize,
}

/// Searches for an injective map `h → g` preserving edges.
///
/// With `induced` set, non-edges must map to non-edges as well.
pub fn find_embedding(h: &Graph, g: &Graph, induced: bool) -> Option<Vec<usize>> {
    if h.n > g.n {
        return None;
    }
    let mut map = vec![usize::MAX; h.n];
    fn go(h: &Graph, g: &Graph, induced: bool, i: usize, used: VertexSet, map: &mut Vec<usize>) -> bool {
        if i == h.n {
            return true;
        }
        for x in g.vertices() - used {
            if g.degree(x) < h.degree(i) {
                continue;
            }
            let ok = (0..i).all(|j| {
                let he = h.has_edge(i, j);
                let ge = g.has_edge(x, map[j]);
                if induced {
                    he == ge
                } else {
                    !he || ge
                }
            });
            if ok {
                map[i] = x;
                if go(h, g, induced, i + 1, used.with(x), map) {
                    return true;
                }
            }
        }
        map[i] = usize::MAX;
        false
    }
    go(h, g, induced, 0, VertexSet::EMPTY, &mut map).then_some(map)
}

/// `h` is isomorphic to a (not necessarily induced) subgraph of `g`.
pub fn has_subgraph(h: &Graph, g: &Graph) -> bool {
    find_embedding(h, g, false).is_some()
}

/// `h` is isomorphic to an induced subgraph (restriction) of `g`.
pub fn has_restriction(h: &Graph, g: &Graph) -> bool {
    find_embedding(h, g, true).is_some()
}

/// Checks that `map` embeds `h` into `g` as a subgraph.
pub fn is_subgraph_via(h: &Graph, g: &Graph, map: &[usize]) -> bool {
    map.len() == h.n
        && map.iter().all(|&x| x < g.n)
        && VertexSet::from_iter(map.iter().copied()).len() == h.n
        && h.edges().iter().all(|&(a, b)| g.has_edge(map[a], map[b]))
}

/// Checks that `map` embeds `h` into `g` as a restriction.
pub fn is_restriction_via(h: &Graph, g: &Graph, map: &[usize]) -> bool {
    is_subgraph_via(h, g, map)
        && (0..h.n).all(|a| (0..h.n).all(|b| a == b || h.has_edge(a, b) == g.has_edge(map[a], map[b])))
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let mut g = Graph::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = Graph::new(n)?;
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn edgeless(n: usize) -> Result<Graph> {
    Graph::new(n)
}

/// Graph given in LCF notation: a Hamiltonian cycle plus chords.
pub fn lcf(shifts: &[i64], repeats: usize) -> Result<Graph> {
    let n = shifts.len() * repeats;
    let mut g = cycle(n)?;
    for i in 0..n {
        let s = shifts[i % shifts.len()];
        let j = (i as i64 + s).rem_euclid(n as i64) as usize;
        g.add_edge(i, j)?;
    }
    Ok(g)
}

/// Subdivision of every edge: the incidence graph of vertices and edges.
/// Vertex `v` keeps its index; edge `k` of [`Graph::edges`] becomes `n + k`.
pub fn subdivision(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    let mut s = Graph::new(g.n + edges.len())?;
    for (k, &(u, v)) in edges.iter().enumerate() {
        s.add_edge(u, g.n + k)?;
        s.add_edge(v, g.n + k)?;
    }
    Ok(s)
}
