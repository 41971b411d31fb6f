//! Lattices of flats, c-rank and c-independence.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::canon::graphs_isomorphic;
use crate::error::{check_limit, Error, Result};
use crate::family::{subsets_up_to, SetFamily};
use crate::graph::{self, Graph};
use crate::lattice::{self, SetLattice};
use crate::limits;
use crate::sb;

/// `Fl G`: intersections of stars, with `V` on top.
pub fn flats(g: &Graph) -> Result<SetLattice> {
    let stars: Vec<VertexSet> = (0..g.n()).map(|v| g.star(v)).collect();
    SetLattice::meet_closure(&stars, g.vertices())
}

/// c-rank as the height of the lattice of flats.
pub fn c_rank(g: &Graph) -> Result<usize> {
    Ok(flats(g)?.height())
}

/// c-rank as the superboolean rank of the complemented adjacency matrix.
pub fn c_rank_by_matrix(g: &Graph) -> Result<usize> {
    sb::sb_rank(&g.complemented_adjacency())
}

/// c-rank by the two-rows-at-a-time recursion.
///
/// `f(W, J)`, the rank of the columns `J` of `A^c` restricted to the
/// vertices `W`, is at least `m ≥ 2` exactly when there are rows `i1 ≠ i2`
/// and columns `j1, j2 ∈ J` with `j1 ∉ St(i1)` and `j2 ∈ St(i1) \ St(i2)`
/// such that `f(W \ {i1, i2}, J ∩ St(i1) ∩ St(i2)) ≥ m - 2`.
pub fn c_rank_recursive(g: &Graph) -> Result<usize> {
    check_limit("recursive c-rank vertices", g.n(), limits::get().rank_side)?;
    let mut memo = HashMap::new();
    Ok(column_rank_rec(g, g.vertices(), g.vertices(), &mut memo))
}

fn column_rank_rec(g: &Graph, w: VertexSet, j: VertexSet, memo: &mut HashMap<(VertexSet, VertexSet), usize>) -> usize {
    if j.is_empty() {
        return 0;
    }
    if let Some(&r) = memo.get(&(w, j)) {
        return r;
    }
    let mut best = 1;
    'outer: for i1 in w {
        let s1 = g.star(i1) & w;
        if (j - s1).is_empty() {
            continue;
        }
        for i2 in w.without(i1) {
            let s2 = g.star(i2) & w;
            if ((j & s1) - s2).is_empty() {
                continue;
            }
            let sub = j & s1 & s2;
            let r = 2 + column_rank_rec(g, w.without(i1).without(i2), sub, memo);
            best = best.max(r);
            if best == j.len() {
                break 'outer;
            }
        }
    }
    memo.insert((w, j), best);
    best
}

/// c-rank as the longest maximal chain of `Fl G` admitting a transversal
/// that is independent in `A^c`.
pub fn c_rank_by_transversals(g: &Graph) -> Result<usize> {
    let l = flats(g)?;
    let ac = g.complemented_adjacency();
    let mut best = 0;
    for chain in l.maximal_chains()? {
        let sets = l.chain_sets(&chain);
        let t: Vec<usize> = sets.windows(2).map(|w| (w[0] - w[1]).min().unwrap()).collect();
        if t.len() > best && sb::find_witness_rows(&ac, &t)?.is_some() {
            best = t.len();
        }
    }
    Ok(best)
}

/// Certificate of c-independence of `J`.
///
/// `chain` descends from `V` through `St(i1) ⊃ St(i1,i2) ⊃ ...` and
/// `transversal[r]` lies in `chain[r] \ chain[r+1]`.  The rows `rows` and
/// columns `transversal` index a nonsingular submatrix of `A^c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainWitness {
    pub chain: Vec<VertexSet>,
    pub transversal: Vec<usize>,
    pub rows: Vec<usize>,
}

impl ChainWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.transversal.len();
        if self.chain.len() != k + 1 || self.rows.len() != k || self.chain[0] != g.vertices() {
            return false;
        }
        let mut acc = g.vertices();
        for r in 0..k {
            acc &= g.star(self.rows[r]);
            if self.chain[r + 1] != acc {
                return false;
            }
            let t = self.transversal[r];
            if !self.chain[r].contains(t) || self.chain[r + 1].contains(t) {
                return false;
            }
        }
        sb::is_witness(&g.complemented_adjacency(), &self.rows, &self.transversal).unwrap_or(false)
    }
}

/// An ordering `p_1, ..., p_k` of `J` whose successive star intersections
/// strictly decrease, if one exists.
fn strict_star_order(g: &Graph, j: VertexSet) -> Option<Vec<usize>> {
    fn go(g: &Graph, cur: VertexSet, rest: VertexSet, out: &mut Vec<usize>, dead: &mut HashSet<VertexSet>) -> bool {
        if rest.is_empty() {
            return true;
        }
        if dead.contains(&rest) {
            return false;
        }
        for v in rest {
            let next = cur & g.star(v);
            if next != cur {
                out.push(v);
                if go(g, next, rest.without(v), out, dead) {
                    return true;
                }
                out.pop();
            }
        }
        dead.insert(rest);
        false
    }
    let mut out = Vec::new();
    go(g, g.vertices(), j, &mut out, &mut HashSet::new()).then_some(out)
}

/// Decides c-independence of `J`, returning a certificate when it holds.
pub fn is_c_independent(g: &Graph, j: VertexSet) -> Result<Option<ChainWitness>> {
    g.check_set(j)?;
    let Some(order) = strict_star_order(g, j) else { return Ok(None) };
    // order = j_k, j_{k-1}, ..., j_1
    let k = order.len();
    let js: Vec<usize> = order.iter().rev().copied().collect();
    let mut rows = Vec::with_capacity(k);
    for r in 0..k {
        let later = g.star_of_set(VertexSet::from_iter(js[r + 1..].iter().copied()));
        let i = (later - g.star(js[r])).min().expect("strict decrease leaves a row");
        rows.push(i);
    }
    let mut chain = vec![g.vertices()];
    let mut acc = g.vertices();
    for &i in &rows {
        acc &= g.star(i);
        chain.push(acc);
    }
    Ok(Some(ChainWitness { chain, transversal: js, rows }))
}

/// c-independence by a witness search in `A^c`.
pub fn independent_by_witness(g: &Graph, j: VertexSet) -> Result<bool> {
    Ok(sb::find_witness_rows(&g.complemented_adjacency(), &j.to_vec())?.is_some())
}

/// c-independence as `ht(closure of {St(j)}) = |J|`.
pub fn independent_by_height(g: &Graph, j: VertexSet) -> Result<bool> {
    let stars: Vec<VertexSet> = j.iter().map(|v| g.star(v)).collect();
    Ok(SetLattice::meet_closure(&stars, g.vertices())?.height() == j.len())
}

/// c-independence as being a partial transversal of successive differences
/// of some maximal chain of `Fl G`.
pub fn independent_by_transversal(g: &Graph, j: VertexSet) -> Result<bool> {
    let l = flats(g)?;
    for chain in l.maximal_chains()? {
        let sets = l.chain_sets(&chain);
        let mut used = HashSet::new();
        let ok = j.iter().all(|v| {
            sets.windows(2)
                .position(|w| w[0].contains(v) && !w[1].contains(v))
                .is_some_and(|step| used.insert(step))
        });
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every c-independent subset, smallest first.
pub fn all_c_independent_sets(g: &Graph) -> Result<SetFamily> {
    check_limit("independence vertices", g.n(), limits::get().independents_vertices)?;
    let mut out = vec![VertexSet::EMPTY];
    let mut seen: HashSet<VertexSet> = out.iter().copied().collect();
    let mut layer = vec![VertexSet::EMPTY];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &s in &layer {
            let start = s.max().map_or(0, |m| m + 1);
            for v in start..g.n() {
                let t = s.with(v);
                // every independent set has all its subsets independent
                if t.iter().all(|x| x == v || seen.contains(&t.without(x))) && strict_star_order(g, t).is_some() {
                    next.push(t);
                }
            }
        }
        out.extend(next.iter().copied());
        seen.extend(next.iter().copied());
        layer = next;
    }
    Ok(SetFamily::new(g.vertices(), out))
}

/// Structural classification of c-rank up to "at least 5".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LowRankClass {
    /// No vertices.
    Empty,
    /// Vertices but no edges.
    Edgeless,
    /// Disjoint union of complete bipartite graphs (isolated vertices
    /// allowed), given as the two sides of every component.
    CompleteBipartiteUnion { parts: Vec<(VertexSet, VertexSet)> },
    /// A path `v1 - v2 - v3` with `St(v1) ≠ St(v3)`, but no square as below.
    Three { path: [usize; 3] },
    /// A square `v1 - v2 - v3 - v4 - v1` with `St(v1) ≠ St(v3)` and
    /// `St(v2) ≠ St(v4)`, but no configuration as below.
    Four { square: [usize; 4] },
    /// `v1` and `v5` both adjacent to `v2, v3, v4`, with `St(v1) ≠ St(v5)`,
    /// `St(v2) ≠ St(v3)` and `St(v2) ∩ St(v3) ⊄ St(v4)`.
    AtLeastFive { five: [usize; 5] },
}

impl LowRankClass {
    pub fn rank_bound(&self) -> (usize, bool) {
        match self {
            LowRankClass::Empty => (0, true),
            LowRankClass::Edgeless => (1, true),
            LowRankClass::CompleteBipartiteUnion { .. } => (2, true),
            LowRankClass::Three { .. } => (3, true),
            LowRankClass::Four { .. } => (4, true),
            LowRankClass::AtLeastFive { .. } => (5, false),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LowRankReport {
    pub c_rank: usize,
    pub class: LowRankClass,
}

pub fn complete_bipartite_parts(g: &Graph) -> Option<Vec<(VertexSet, VertexSet)>> {
    let mut parts = Vec::new();
    for comp in g.components() {
        let v = comp.min().unwrap();
        let a = (g.star_of_set(g.star(v)) & comp).with(v);
        let b = g.star(v);
        if a | b != comp {
            return None;
        }
        let ok = a.iter().all(|x| g.star(x) == b) && b.iter().all(|y| g.star(y) == a);
        if !ok {
            return None;
        }
        parts.push((a, b));
    }
    Some(parts)
}

pub fn find_rank3_path(g: &Graph) -> Option<[usize; 3]> {
    for v2 in 0..g.n() {
        for v1 in g.star(v2) {
            for v3 in g.star(v2) {
                if v1 != v3 && g.star(v1) != g.star(v3) {
                    return Some([v1, v2, v3]);
                }
            }
        }
    }
    None
}

pub fn find_rank4_square(g: &Graph) -> Option<[usize; 4]> {
    for v1 in 0..g.n() {
        for v2 in g.star(v1) {
            for v3 in g.star(v2).without(v1) {
                if g.star(v1) == g.star(v3) {
                    continue;
                }
                for v4 in (g.star(v3) & g.star(v1)).without(v2) {
                    if g.star(v2) != g.star(v4) {
                        return Some([v1, v2, v3, v4]);
                    }
                }
            }
        }
    }
    None
}

pub fn find_rank5_configuration(g: &Graph) -> Option<[usize; 5]> {
    for v1 in 0..g.n() {
        for v5 in 0..g.n() {
            if v5 == v1 || g.star(v1) == g.star(v5) {
                continue;
            }
            let common = (g.star(v1) & g.star(v5)).without(v1).without(v5);
            for v2 in common {
                for v3 in common.without(v2) {
                    if g.star(v2) == g.star(v3) {
                        continue;
                    }
                    let s23 = g.star(v2) & g.star(v3);
                    for v4 in common.without(v2).without(v3) {
                        if !s23.is_subset(g.star(v4)) {
                            return Some([v1, v2, v3, v4, v5]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Classifies by forbidden configurations and checks the result against
/// [`c_rank`].
pub fn classify_low_rank(g: &Graph) -> Result<LowRankReport> {
    let class = if g.n() == 0 {
        LowRankClass::Empty
    } else if g.edge_count() == 0 {
        LowRankClass::Edgeless
    } else if let Some(five) = find_rank5_configuration(g) {
        LowRankClass::AtLeastFive { five }
    } else if let Some(square) = find_rank4_square(g) {
        LowRankClass::Four { square }
    } else if let Some(path) = find_rank3_path(g) {
        LowRankClass::Three { path }
    } else {
        match complete_bipartite_parts(g) {
            Some(parts) => LowRankClass::CompleteBipartiteUnion { parts },
            None => {
                return Err(Error::TheoremViolation(
                    "no path with distinct end stars, yet not a union of complete bipartite graphs".into(),
                ))
            }
        }
    };
    let c = c_rank(g)?;
    let (bound, exact) = class.rank_bound();
    if (exact && c != bound) || (!exact && c < bound) {
        return Err(Error::TheoremViolation(format!(
            "structural class {class:?} disagrees with c-rank {c}"
        )));
    }
    Ok(LowRankReport { c_rank: c, class })
}

/// Sober, connected and of c-rank 3.
pub fn is_sc3(g: &Graph) -> Result<bool> {
    Ok(g.is_sober() && g.is_connected() && g.n() > 0 && c_rank(g)? == 3)
}

fn require_sc3(g: &Graph, op: &str) -> Result<()> {
    if !is_sc3(g)? {
        return Err(Error::Precondition(format!(
            "{op} needs a sober connected graph of c-rank 3"
        )));
    }
    Ok(())
}

/// 3-subsets meeting every star in at most one vertex.
pub fn potential_lines(g: &Graph) -> Result<Vec<VertexSet>> {
    require_sc3(g, "potential_lines")?;
    Ok(potential_lines_unchecked(g))
}

fn potential_lines_unchecked(g: &Graph) -> Vec<VertexSet> {
    subsets_up_to(g.vertices(), 3)
        .into_iter()
        .filter(|p| p.len() == 3 && (0..g.n()).all(|v| (*p & g.star(v)).len() <= 1))
        .collect()
}

/// Subsets of size at most 2 together with 3-subsets whose star is empty.
pub fn mat_g(g: &Graph) -> Result<SetFamily> {
    require_sc3(g, "mat_g")?;
    let members = subsets_up_to(g.vertices(), 3)
        .into_iter()
        .filter(|w| w.len() <= 2 || g.star_of_set(*w).is_empty());
    Ok(SetFamily::new(g.vertices(), members))
}

/// c-independent sets of an SC3 graph from the closed-form description.
pub fn sc3_independents(g: &Graph) -> Result<SetFamily> {
    require_sc3(g, "sc3_independents")?;
    let lines: HashSet<VertexSet> = potential_lines_unchecked(g).into_iter().collect();
    let members = subsets_up_to(g.vertices(), 3)
        .into_iter()
        .filter(|w| w.len() <= 2 || (g.star_of_set(*w).is_empty() && !lines.contains(w)));
    Ok(SetFamily::new(g.vertices(), members))
}

/// Vertices `v` with `St(St(v)) = {v}`.
pub fn closed_vertices(g: &Graph) -> VertexSet {
    VertexSet::from_iter((0..g.n()).filter(|&v| g.star_of_set(g.star(v)) == VertexSet::singleton(v)))
}

/// Every vertex is closed.
pub fn is_closed_graph(g: &Graph) -> bool {
    closed_vertices(g) == g.vertices()
}

/// c-rank of the complement as the height of [`dual_star_lattice`].
pub fn complement_c_rank_via_duality(g: &Graph) -> Result<usize> {
    Ok(dual_star_lattice(g)?.height())
}

/// Union-closure of the closed stars, with `∅` at the bottom.
pub fn dual_star_lattice(g: &Graph) -> Result<SetLattice> {
    let cs: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_star(v)).collect();
    SetLattice::join_closure(&cs, VertexSet::EMPTY)
}

/// Cylindrical strip `H_n`: two `n`-cycles `v_i` (index `i`) and `w_i`
/// (index `n + i`) joined by rungs.
pub fn cylinder(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!("H_n needs n >= 3, got {n}")));
    }
    let mut g = Graph::new(2 * n)?;
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
        g.add_edge(n + i, n + (i + 1) % n)?;
        g.add_edge(i, n + i)?;
    }
    Ok(g)
}

/// Möbius strip: paths `v_1..v_n`, `w_1..w_n`, rungs, and the crossed
/// closing edges `v_n - w_1`, `w_n - v_1`.
pub fn moebius(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!("the Möbius strip needs n >= 3, got {n}")));
    }
    let mut g = Graph::new(2 * n)?;
    for i in 0..n {
        if i + 1 < n {
            g.add_edge(i, i + 1)?;
            g.add_edge(n + i, n + i + 1)?;
        }
        g.add_edge(i, n + i)?;
    }
    g.add_edge(n - 1, n)?;
    g.add_edge(2 * n - 1, 0)?;
    Ok(g)
}

/// Lattice predicates of `Fl G` for a connected cubic graph beside their
/// structural characterisations.
#[derive(Debug, Clone, Serialize)]
pub struct CubicLatticeReport {
    pub c_rank: usize,
    pub sober: bool,
    pub distributive: bool,
    pub modular: bool,
    pub semimodular: bool,
    pub geometric: bool,
    pub cover_law: bool,
    pub jordan_dedekind: bool,
    pub is_k4: bool,
    pub is_k33: bool,
    pub every_edge_in_square: bool,
    pub strip: Option<String>,
    pub longest_chain: usize,
    pub shortest_chain: usize,
}

pub fn every_edge_in_square(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| {
        // u - v - x - y - u with all four distinct
        g.star(v).without(u).iter().any(|x| !(g.star(x) & g.star(u)).without(v).is_empty())
    })
}

/// Evaluates both cubic-graph theorems and fails if either equivalence
/// breaks.
pub fn cubic_lattice_theorems(g: &Graph) -> Result<CubicLatticeReport> {
    if !g.is_cubic() || !g.is_connected() {
        return Err(Error::Precondition("cubic_lattice_theorems needs a connected cubic graph".into()));
    }
    let l = flats(g)?;
    let p = lattice::predicates(&l);
    let is_k4 = graphs_isomorphic(g, &graph::complete(4)?)?;
    let is_k33 = graphs_isomorphic(g, &graph::complete_bipartite(3, 3)?)?;
    let half = g.n() / 2;
    let mut strip = None;
    if half >= 3 && graphs_isomorphic(g, &cylinder(half)?)? {
        strip = Some(format!("H_{half}"));
    } else if half >= 4 && graphs_isomorphic(g, &moebius(half)?)? {
        strip = Some(format!("H~_{half}"));
    }
    let c = l.height();
    let r = CubicLatticeReport {
        c_rank: c,
        sober: g.is_sober(),
        distributive: p.distributive,
        modular: p.modular,
        semimodular: p.semimodular,
        geometric: p.geometric,
        cover_law: p.cover_law,
        jordan_dedekind: p.jordan_dedekind,
        is_k4,
        is_k33,
        every_edge_in_square: every_edge_in_square(g),
        strip,
        longest_chain: c,
        shortest_chain: l.shortest_maximal_chain_length(),
    };
    let structural = r.is_k4 || r.is_k33;
    if [r.distributive, r.modular, r.semimodular, r.geometric].iter().any(|&x| x != structural) {
        return Err(Error::TheoremViolation(format!(
            "lattice predicates {:?} disagree with K4/K33 membership {structural}",
            (r.distributive, r.modular, r.semimodular, r.geometric)
        )));
    }
    let jd2 = c <= 3 || (r.sober && r.every_edge_in_square);
    let jd3 = c <= 3 || r.is_k4 || r.strip.is_some();
    if r.jordan_dedekind != jd2 || jd2 != jd3 {
        return Err(Error::TheoremViolation(format!(
            "Jordan-Dedekind {} vs edge-in-square form {jd2} vs strip form {jd3}",
            r.jordan_dedekind
        )));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, edgeless, path};

    #[test]
    fn c_rank_examples() {
        assert_eq!(c_rank(&crate::catalog::petersen()).unwrap(), 3);
        assert_eq!(c_rank(&complete(4).unwrap()).unwrap(), 4);
        assert_eq!(c_rank(&complete_bipartite(3, 3).unwrap()).unwrap(), 2);
        assert_eq!(c_rank(&cycle(4).unwrap()).unwrap(), 2);
        assert_eq!(c_rank(&Graph::new(0).unwrap()).unwrap(), 0);
        assert_eq!(c_rank(&edgeless(3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn path_flats_and_closed_vertices() {
        let p = path(4).unwrap();
        let l = flats(&p).unwrap();
        let got: Vec<Vec<usize>> = l.elements().iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![], vec![1], vec![2], vec![0, 2], vec![1, 3], vec![0, 1, 2, 3]]);
        assert_eq!(closed_vertices(&p).to_vec(), vec![1, 2]);
        assert_eq!(closed_vertices(&path(2).unwrap()).to_vec(), vec![0, 1]);
    }

    #[test]
    fn routes_agree_on_small_examples() {
        for g in [crate::catalog::petersen(), complete(5).unwrap(), path(5).unwrap(), cycle(6).unwrap()] {
            let c = c_rank(&g).unwrap();
            assert_eq!(c_rank_by_matrix(&g).unwrap(), c);
            assert_eq!(c_rank_recursive(&g).unwrap(), c);
            assert_eq!(c_rank_by_transversals(&g).unwrap(), c);
        }
    }

    #[test]
    fn independence_witnesses_verify() {
        let g = crate::catalog::petersen();
        let fam = all_c_independent_sets(&g).unwrap();
        for &j in fam.members() {
            let w = is_c_independent(&g, j).unwrap().unwrap();
            assert!(w.verify(&g), "{j:?}");
        }
        let star = g.star(0);
        assert!(is_c_independent(&g, star).unwrap().is_none());
    }

    #[test]
    fn classification_examples() {
        assert!(matches!(classify_low_rank(&complete_bipartite(2, 3).unwrap()).unwrap().class, LowRankClass::CompleteBipartiteUnion { .. }));
        assert!(matches!(classify_low_rank(&complete(4).unwrap()).unwrap().class, LowRankClass::Four { .. }));
        assert!(matches!(classify_low_rank(&complete(5).unwrap()).unwrap().class, LowRankClass::AtLeastFive { .. }));
        assert!(matches!(classify_low_rank(&path(4).unwrap()).unwrap().class, LowRankClass::Three { .. }));
    }

    #[test]
    fn sc3_examples() {
        let pet = crate::catalog::petersen();
        assert!(is_sc3(&pet).unwrap());
        assert!(potential_lines(&pet).unwrap().is_empty());
        let m = mat_g(&pet).unwrap();
        assert!(m.exchange_violation().is_none());
        assert_eq!(sc3_independents(&pet).unwrap(), all_c_independent_sets(&pet).unwrap());
        assert!(matches!(potential_lines(&complete(4).unwrap()), Err(Error::Precondition(_))));
        let p7 = path(7).unwrap();
        assert!(potential_lines(&p7).unwrap().contains(&VertexSet::from_iter([0, 3, 6])));
    }

    #[test]
    fn dual_stars_of_petersen_complement() {
        let pet = crate::catalog::petersen();
        assert_eq!(dual_star_lattice(&pet).unwrap().height(), 5);
        assert_eq!(c_rank(&pet.complement()).unwrap(), 5);
    }

    #[test]
    fn cubic_theorem_examples() {
        let r = cubic_lattice_theorems(&complete(4).unwrap()).unwrap();
        assert!(r.distributive && r.jordan_dedekind);
        let r = cubic_lattice_theorems(&complete_bipartite(3, 3).unwrap()).unwrap();
        assert!(r.geometric);
        let r = cubic_lattice_theorems(&crate::catalog::petersen()).unwrap();
        assert!(!r.modular && r.jordan_dedekind);
        let r = cubic_lattice_theorems(&cylinder(4).unwrap()).unwrap();
        assert_eq!(r.strip.as_deref(), Some("H_4"));
    }
}
