//! Exhaustive and random graph generation.

use std::collections::BTreeMap;

use rand::Rng;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{check_limit, Result};
use crate::graph::Graph;

/// Largest order for which [`all_graphs`] is allowed.
pub const MAX_EXHAUSTIVE: usize = 9;

/// Representatives of every isomorphism class on `n` vertices, in
/// canonical-form order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check_limit("exhaustive enumeration vertices", n, MAX_EXHAUSTIVE)?;
    let mut reps = vec![Graph::new(0)?];
    for k in 1..=n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &reps {
            for mask in 0u64..1 << (k - 1) {
                let mut adj: Vec<VertexSet> = g.adjacency_rows().to_vec();
                for v in VertexSet(mask) {
                    adj[v].insert(k - 1);
                }
                adj.push(VertexSet(mask));
                let h = Graph::from_adjacency(adj)?;
                let f = canonical_form(&h)?;
                next.entry(f).or_insert_with_key(|f| f.to_graph());
            }
        }
        reps = next.into_values().collect();
    }
    Ok(reps)
}

/// Representatives of every isomorphism class on at most `n` vertices,
/// smallest orders first.
pub fn all_graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(all_graphs(k)?);
    }
    Ok(out)
}

/// Connected representatives on `1..=n` vertices.
pub fn connected_graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs_up_to(n)?.into_iter().filter(|g| g.n() > 0 && g.is_connected()).collect())
}

/// Representatives of the connected cubic graphs on `n` vertices.
///
/// Vertices are introduced in breadth-first order: the neighbours a vertex
/// still needs are either already introduced vertices after it, or the next
/// unused labels in increasing order.
pub fn connected_cubic_graphs(n: usize) -> Result<Vec<Graph>> {
    check_limit("cubic enumeration vertices", n, 14)?;
    if n < 4 || n % 2 == 1 {
        return Ok(Vec::new());
    }
    let mut found: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let mut adj = vec![VertexSet::EMPTY; n];
    cubic_rec(n, &mut adj, 0, 1, &mut found)?;
    Ok(found.into_values().collect())
}

fn cubic_rec(
    n: usize,
    adj: &mut Vec<VertexSet>,
    v: usize,
    introduced: usize,
    found: &mut BTreeMap<CanonicalForm, Graph>,
) -> Result<()> {
    if v == n {
        let g = Graph::from_adjacency(adj.clone())?;
        let f = canonical_form(&g)?;
        found.entry(f).or_insert_with_key(|f| f.to_graph());
        return Ok(());
    }
    if adj[v].len() == 3 {
        return cubic_rec(n, adj, v + 1, introduced, found);
    }
    if introduced <= v {
        // the breadth-first frontier ran dry: disconnected
        return Ok(());
    }
    let lo = adj[v].max().map_or(v + 1, |m| m.max(v) + 1).max(v + 1);
    // neighbours are added in increasing order so each set is built once
    for w in lo..introduced.min(n) {
        if adj[w].len() < 3 {
            adj[v].insert(w);
            adj[w].insert(v);
            cubic_rec(n, adj, v, introduced, found)?;
            adj[v].remove(w);
            adj[w].remove(v);
        }
    }
    if introduced < n && introduced >= lo {
        let w = introduced;
        adj[v].insert(w);
        adj[w].insert(v);
        cubic_rec(n, adj, v, introduced + 1, found)?;
        adj[v].remove(w);
        adj[w].remove(v);
    }
    Ok(())
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// Random connected graph: a random spanning tree plus extra edges with
/// probability `p`.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut g = random_graph(n, p, rng)?;
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn isomorphism_class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> =
            (1..=6).map(|n| all_graphs(n).unwrap().iter().filter(|g| g.is_connected()).count()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn cubic_counts() {
        let counts: Vec<usize> = [4, 6, 8, 10].iter().map(|&n| connected_cubic_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19]);
        assert!(connected_cubic_graphs(10).unwrap().iter().all(|g| g.is_cubic() && g.is_connected()));
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..10 {
            assert!(random_connected_graph(n, 0.2, &mut rng).unwrap().is_connected());
        }
    }
}
