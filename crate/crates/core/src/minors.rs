//! Minor operations, connected partitions, wildcard matrices and cm-rank.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, CanonicalForm};
use crate::enumerate::all_graphs_up_to;
use crate::error::{check_limit, Error, Result};
use crate::flats::c_rank;
use crate::graph::{find_embedding, Graph};
use crate::limits;
use crate::sb::{self, SBMatrix, SBValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MinorOp {
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
    /// Merges the endpoints of an edge into the smaller index.
    Contract(usize, usize),
}

pub fn apply_minor_op(g: &Graph, op: MinorOp) -> Result<Graph> {
    match op {
        MinorOp::DeleteVertex(v) => {
            g.check_vertex(v).map_err(|_| Error::InvalidMinorOp(format!("no vertex {v}")))?;
            g.without_vertex(v)
        }
        MinorOp::DeleteEdge(u, v) => {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return Err(Error::InvalidMinorOp(format!("no edge {u} - {v}")));
            }
            let mut h = g.clone();
            h.remove_edge(u, v);
            Ok(h)
        }
        MinorOp::Contract(u, v) => {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return Err(Error::InvalidMinorOp(format!("cannot contract non-edge {u} - {v}")));
            }
            let (lo, hi) = (u.min(v), u.max(v));
            let map = |x: usize| match x.cmp(&hi) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => lo,
                std::cmp::Ordering::Greater => x - 1,
            };
            let mut h = Graph::new(g.n() - 1)?;
            for (a, b) in g.edges() {
                let (a, b) = (map(a), map(b));
                if a != b {
                    h.add_edge(a, b)?;
                }
            }
            Ok(h)
        }
    }
}

/// Every single-step result of one kind of operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    DeleteVertex,
    DeleteEdge,
    Contract,
}

pub fn single_step(g: &Graph, kind: OpKind) -> Result<Vec<Graph>> {
    let ops: Vec<MinorOp> = match kind {
        OpKind::DeleteVertex => (0..g.n()).map(MinorOp::DeleteVertex).collect(),
        OpKind::DeleteEdge => g.edges().into_iter().map(|(u, v)| MinorOp::DeleteEdge(u, v)).collect(),
        OpKind::Contract => g.edges().into_iter().map(|(u, v)| MinorOp::Contract(u, v)).collect(),
    };
    ops.into_iter().map(|op| apply_minor_op(g, op)).collect()
}

/// Isomorphism classes reached by applying `word` right to left: the last
/// kind is applied first.
pub fn apply_word(g: &Graph, word: &[OpKind]) -> Result<BTreeSet<CanonicalForm>> {
    let mut current = vec![g.clone()];
    for &kind in word.iter().rev() {
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for h in &current {
            for r in single_step(h, kind)? {
                if seen.insert(canonical_form(&r)?) {
                    next.push(r);
                }
            }
        }
        current = next;
    }
    current.iter().map(canonical_form).collect()
}

/// The commutation containments `lhs(G) ⊆ ∪ rhs(G)`, as words read right to
/// left.
pub fn commutation_identities() -> Vec<(Vec<OpKind>, Vec<Vec<OpKind>>)> {
    use OpKind::*;
    vec![
        (vec![DeleteVertex, DeleteEdge], vec![vec![DeleteEdge, DeleteVertex], vec![DeleteVertex]]),
        (vec![DeleteEdge, DeleteVertex], vec![vec![DeleteVertex, DeleteEdge]]),
        (vec![Contract, DeleteVertex], vec![vec![DeleteVertex, Contract]]),
        (vec![DeleteVertex, Contract], vec![vec![Contract, DeleteVertex], vec![DeleteVertex, DeleteVertex]]),
        (vec![Contract, DeleteEdge], vec![vec![DeleteEdge, Contract], vec![Contract]]),
        (vec![DeleteEdge, Contract], vec![vec![Contract, DeleteEdge], vec![Contract, DeleteEdge, DeleteEdge]]),
    ]
}

/// Checks one containment on `g`, returning a class on the left that is
/// missing on the right.
pub fn commutation_violation(g: &Graph, lhs: &[OpKind], rhs: &[Vec<OpKind>]) -> Result<Option<CanonicalForm>> {
    let left = apply_word(g, lhs)?;
    let mut right = BTreeSet::new();
    for w in rhs {
        right.extend(apply_word(g, w)?);
    }
    Ok(left.difference(&right).next().cloned())
}

/// Disjoint blocks whose union is the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ConnectedPartition {
    pub blocks: Vec<VertexSet>,
}

impl ConnectedPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl fmt::Display for ConnectedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Partitions of `ground` into `g`-connected blocks, each block listed with
/// its smallest vertex first in the block order.
pub fn partitions_into_connected(g: &Graph, ground: VertexSet) -> Vec<Vec<VertexSet>> {
    let mut out = Vec::new();
    fn rec(g: &Graph, rest: VertexSet, acc: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        let Some(v) = rest.min() else {
            out.push(acc.clone());
            return;
        };
        // every connected block containing v inside rest
        let others = rest.without(v).to_vec();
        for mask in 0u64..1 << others.len() {
            let block = VertexSet::from_iter(
                others.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x),
            )
            .with(v);
            if g.is_connected_set(block) {
                acc.push(block);
                rec(g, rest - block, acc, out);
                acc.pop();
            }
        }
    }
    rec(g, ground, &mut Vec::new(), &mut out);
    out
}

pub fn connected_partitions(g: &Graph) -> Result<Vec<ConnectedPartition>> {
    check_limit("partition vertices", g.n(), limits::get().partition_vertices)?;
    Ok(partitions_into_connected(g, g.vertices())
        .into_iter()
        .map(|blocks| ConnectedPartition { blocks })
        .collect())
}

/// Connectivity of `w` as: no split `w = I ∪ J` has every entry of
/// `A^c[I, J]` equal to 1.
pub fn connected_by_matrix(g: &Graph, w: VertexSet) -> bool {
    let Some(first) = w.min() else { return false };
    let others = w.without(first).to_vec();
    let ac = g.complemented_adjacency();
    for mask in 0u64..(1 << others.len()) - 1 {
        let i = VertexSet::from_iter(others.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x))
            .with(first);
        let j = w - i;
        if i.iter().all(|a| j.iter().all(|b| ac.get(a, b) == SBValue::One)) {
            return false;
        }
    }
    true
}

/// Entry of a matrix whose stars may be resolved to 0 or 1 independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Wildcard {
    Zero,
    One,
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WildcardMatrix {
    n: usize,
    entries: Vec<Wildcard>,
}

impl WildcardMatrix {
    pub fn new(n: usize, entries: Vec<Wildcard>) -> Result<WildcardMatrix> {
        if entries.len() != n * n {
            return Err(Error::Shape(format!("{} entries for side {n}", entries.len())));
        }
        Ok(WildcardMatrix { n, entries })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Wildcard) -> WildcardMatrix {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        WildcardMatrix { n, entries }
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Wildcard {
        self.entries[i * self.n + j]
    }

    pub fn stars(&self) -> Vec<(usize, usize)> {
        (0..self.n * self.n)
            .filter(|&k| self.entries[k] == Wildcard::Star)
            .map(|k| (k / self.n, k % self.n))
            .collect()
    }

    /// Replaces the stars, in [`stars`](Self::stars) order, by the given
    /// values.
    pub fn resolve(&self, values: impl Fn(usize) -> bool) -> SBMatrix {
        let mut k = 0;
        let mut m = SBMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let v = match self.get(i, j) {
                    Wildcard::Zero => SBValue::Zero,
                    Wildcard::One => SBValue::One,
                    Wildcard::Star => {
                        k += 1;
                        SBValue::from_bool(values(k - 1))
                    }
                };
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn from_sb(m: &SBMatrix) -> Result<WildcardMatrix> {
        if !m.is_square() {
            return Err(Error::Shape("wildcard matrices are square".into()));
        }
        Ok(WildcardMatrix::from_fn(m.rows(), |i, j| match m.get(i, j) {
            SBValue::Zero => Wildcard::Zero,
            _ => Wildcard::One,
        }))
    }
}

/// Diagonal 1; star between blocks joined by some edge; 1 otherwise.
pub fn contracted_wildcard_matrix(g: &Graph, p: &ConnectedPartition) -> Result<WildcardMatrix> {
    let union = p.blocks.iter().fold(VertexSet::EMPTY, |a, &b| {
        if a.is_disjoint(b) {
            a | b
        } else {
            VertexSet::full(64)
        }
    });
    if union != g.vertices() {
        return Err(Error::Precondition(format!("{p} is not a partition of the vertices")));
    }
    let k = p.blocks.len();
    Ok(WildcardMatrix::from_fn(k, |i, j| {
        if i == j {
            Wildcard::One
        } else if !g.star_of_union(p.blocks[i]).is_disjoint(p.blocks[j]) {
            Wildcard::Star
        } else {
            Wildcard::One
        }
    }))
}

/// Largest `k` with `k` rows and columns orderable so that diagonal entries
/// are 1 or star and entries above the diagonal are 0 or star.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WildcardWitness {
    pub rank: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

pub fn wildcard_rank(m: &WildcardMatrix) -> Result<WildcardWitness> {
    check_limit("wildcard matrix side", m.n, limits::get().wildcard_side)?;
    let n = m.n;
    let one_ok: Vec<VertexSet> = (0..n)
        .map(|i| VertexSet::from_iter((0..n).filter(|&j| m.get(i, j) != Wildcard::Zero)))
        .collect();
    let zero_ok: Vec<VertexSet> = (0..n)
        .map(|i| VertexSet::from_iter((0..n).filter(|&j| m.get(i, j) != Wildcard::One)))
        .collect();
    struct S<'a> {
        n: usize,
        one_ok: &'a [VertexSet],
        zero_ok: &'a [VertexSet],
        seen: HashSet<(VertexSet, VertexSet)>,
        best: Vec<(usize, usize)>,
        path: Vec<(usize, usize)>,
    }
    fn go(s: &mut S, c: VertexSet, r: VertexSet) {
        if s.path.len() > s.best.len() {
            s.best = s.path.clone();
        }
        if s.best.len() == s.n || !s.seen.insert((c, r)) {
            return;
        }
        let rows: Vec<usize> = (0..s.n).filter(|&i| !r.contains(i) && c.is_subset(s.zero_ok[i])).collect();
        let cols_left = s.n - c.len();
        if c.len() + rows.len().min(cols_left) <= s.best.len() {
            return;
        }
        for i in rows {
            for j in s.one_ok[i] - c {
                s.path.push((i, j));
                go(s, c.with(j), r.with(i));
                s.path.pop();
            }
        }
    }
    let mut s = S { n, one_ok: &one_ok, zero_ok: &zero_ok, seen: HashSet::new(), best: Vec::new(), path: Vec::new() };
    go(&mut s, VertexSet::EMPTY, VertexSet::EMPTY);
    // the search places the last diagonal position first
    let best: Vec<(usize, usize)> = s.best.into_iter().rev().collect();
    Ok(WildcardWitness {
        rank: best.len(),
        rows: best.iter().map(|x| x.0).collect(),
        cols: best.iter().map(|x| x.1).collect(),
    })
}

/// Maximum superboolean rank over every resolution of the stars.
pub fn wildcard_rank_by_resolution(m: &WildcardMatrix) -> Result<usize> {
    let stars = m.stars().len();
    check_limit("wildcard stars", stars, limits::get().resolution_stars)?;
    let mut best = 0;
    for mask in 0u64..1 << stars {
        best = best.max(sb::sb_rank(&m.resolve(|k| mask >> k & 1 == 1))?);
        if best == m.n {
            break;
        }
    }
    Ok(best)
}

/// cm-rank with a certificate: a connected partition and a witness in its
/// contracted matrix.
#[derive(Debug, Clone, Serialize)]
pub struct CmRank {
    pub cm_rank: usize,
    pub partition: ConnectedPartition,
    pub witness: WildcardWitness,
}

pub fn cm_rank(g: &Graph) -> Result<CmRank> {
    check_limit("cm-rank vertices", g.n(), limits::get().cm_vertices)?;
    let mut parts = connected_partitions(g)?;
    parts.sort_by_key(|p| std::cmp::Reverse(p.len()));
    let mut best: Option<CmRank> = None;
    for p in parts {
        if best.as_ref().is_some_and(|b| b.cm_rank >= p.len()) {
            break;
        }
        let w = wildcard_rank(&contracted_wildcard_matrix(g, &p)?)?;
        if best.as_ref().is_none_or(|b| w.rank > b.cm_rank) {
            best = Some(CmRank { cm_rank: w.rank, partition: p, witness: w });
        }
    }
    Ok(best.unwrap_or(CmRank {
        cm_rank: 0,
        partition: ConnectedPartition { blocks: vec![] },
        witness: WildcardWitness { rank: 0, rows: vec![], cols: vec![] },
    }))
}

/// cm-rank certificate restricted to one connected partition.
pub fn cm_rank_for_partition(g: &Graph, p: &ConnectedPartition) -> Result<CmRank> {
    let witness = wildcard_rank(&contracted_wildcard_matrix(g, p)?)?;
    Ok(CmRank { cm_rank: witness.rank, partition: p.clone(), witness })
}

/// The contracted graph of a partition with an edge kept exactly where the
/// witness needs a 0; other joined block pairs keep their edge too.
/// Fails if the witness needs an edge both kept and deleted.
pub fn certificate_minor(g: &Graph, c: &CmRank) -> Result<Graph> {
    let p = &c.partition;
    let k = p.len();
    let mut h = Graph::new(k)?;
    for i in 0..k {
        for j in i + 1..k {
            if !g.star_of_union(p.blocks[i]).is_disjoint(p.blocks[j]) {
                h.add_edge(i, j)?;
            }
        }
    }
    let w = &c.witness;
    let mut keep = HashSet::new();
    let mut drop = HashSet::new();
    for a in 0..w.rank {
        let (i, j) = (w.rows[a], w.cols[a]);
        if i != j {
            drop.insert((i.min(j), i.max(j)));
        }
        for b in a + 1..w.rank {
            let (i, j) = (w.rows[a], w.cols[b]);
            keep.insert((i.min(j), i.max(j)));
        }
    }
    if let Some(&(i, j)) = keep.intersection(&drop).next() {
        return Err(Error::TheoremViolation(format!(
            "witness needs blocks {i} and {j} both adjacent and non-adjacent"
        )));
    }
    for (i, j) in drop {
        h.remove_edge(i, j);
    }
    Ok(h)
}

/// Exact minor test by branch sets: `h ≤_m g` iff some family of
/// `|V(h)|` disjoint connected vertex sets of `g` has `h` as a spanning
/// subgraph of its contraction.
pub fn is_minor(h: &Graph, g: &Graph) -> Result<bool> {
    check_limit("minor test vertices", g.n(), limits::get().minor_vertices)?;
    let k = h.n();
    if k > g.n() {
        return Ok(false);
    }
    if k == 0 {
        return Ok(true);
    }
    if h.edge_count() > g.edge_count() {
        return Ok(false);
    }
    let mut found = false;
    let mut acc: Vec<VertexSet> = Vec::new();
    branch_sets(g, h, g.vertices(), k, &mut acc, &mut found)?;
    Ok(found)
}

fn branch_sets(
    g: &Graph,
    h: &Graph,
    rest: VertexSet,
    k: usize,
    acc: &mut Vec<VertexSet>,
    found: &mut bool,
) -> Result<()> {
    if *found {
        return Ok(());
    }
    if acc.len() == k {
        let mut q = Graph::new(k)?;
        for i in 0..k {
            for j in i + 1..k {
                if !g.star_of_union(acc[i]).is_disjoint(acc[j]) {
                    q.add_edge(i, j)?;
                }
            }
        }
        if q.edge_count() >= h.edge_count() && find_embedding(h, &q, false).is_some() {
            *found = true;
        }
        return Ok(());
    }
    let Some(v) = rest.min() else { return Ok(()) };
    // v is either unused or the smallest vertex of the next block
    if rest.len() > k - acc.len() {
        branch_sets(g, h, rest.without(v), k, acc, found)?;
    }
    let others = rest.without(v).to_vec();
    for mask in 0u64..1 << others.len() {
        let block =
            VertexSet::from_iter(others.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &x)| x))
                .with(v);
        if g.is_connected_set(block) {
            acc.push(block);
            branch_sets(g, h, rest - block, k, acc, found)?;
            acc.pop();
            if *found {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// Representatives of graphs with at most `2m` vertices and c-rank `m+1`;
/// for `m = 0`, a single vertex.  Sorted by graph6.
pub fn forbidden_family(m: usize, allow_long: bool) -> Result<Vec<Graph>> {
    let cap = if allow_long { 4 } else { 3 };
    check_limit("forbidden family rank bound", m, cap)?;
    if m == 0 {
        return Ok(vec![Graph::new(1)?]);
    }
    forbidden_family_from(m, all_graphs_up_to(2 * m)?)
}

/// As [`forbidden_family`] but drawing candidates from a supplied list, such
/// as a graph6 stream from an external generator.
pub fn forbidden_family_from(m: usize, candidates: Vec<Graph>) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in candidates {
        if g.n() <= 2 * m && c_rank(&g)? == m + 1 {
            let f = canonical_form(&g)?;
            if seen.insert(f.clone()) {
                out.push(f.to_graph());
            }
        }
    }
    out.sort_by_key(crate::graph::io::to_graph6);
    Ok(out)
}

/// Whether `cm-rk G ≤ m` agrees with avoiding every forbidden minor.
pub fn avoids_forbidden(g: &Graph, family: &[Graph]) -> Result<bool> {
    for f in family {
        if is_minor(f, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}
