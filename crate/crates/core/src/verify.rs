//! Invariant suite over the catalog and exhaustive small-graph sweeps.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::catalog::{self, catalog, FIXED_NAMES, SAMPLE_FAMILIES};
use crate::complement::{classical_independence_violation, rank_sum_report};
use crate::enumerate::{all_graphs_up_to, connected_cubic_graphs, random_graph};
use crate::error::{Error, Result};
use crate::flats::{self, c_rank};
use crate::geometry::{self, Peg};
use crate::graph::{io, Graph};
use crate::lattice::lattice_isomorphic;
use crate::minors::{avoids_forbidden, cm_rank, forbidden_family};

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Largest order for exhaustive sweeps.
    pub max_n: usize,
    pub seed: u64,
    /// Random graphs per order in the randomized sweep.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: 6, seed: 1, samples: 20 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip)]
    pub millis: u128,
    pub detail: String,
}

fn fail(what: impl Into<String>) -> Error {
    Error::TheoremViolation(what.into())
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(fail(what()))
    }
}

fn g6(g: &Graph) -> String {
    io::to_graph6(g)
}

pub fn check_catalog() -> Result<usize> {
    let mut cases = 0;
    for name in FIXED_NAMES.iter().chain(SAMPLE_FAMILIES) {
        let g = catalog(name)?;
        ensure(io::parse_graph6(&io::to_graph6(&g))? == g, || format!("{name}: graph6 round trip"))?;
        ensure(io::parse_edge_list(&io::to_edge_list(&g))? == g, || format!("{name}: edge list round trip"))?;
        cases += 1;
    }
    ensure(matches!(catalog("g3"), Err(Error::Quarantined { .. })), || "g3 should be quarantined".into())?;
    Ok(cases)
}

pub fn check_rank_routes(graphs: &[Graph], with_transversals: usize) -> Result<usize> {
    for g in graphs {
        let c = c_rank(g)?;
        let m = flats::c_rank_by_matrix(g)?;
        let r = flats::c_rank_recursive(g)?;
        ensure(c == m && m == r, || format!("{}: height {c}, matrix {m}, recursion {r}", g6(g)))?;
        if g.n() <= with_transversals {
            let t = flats::c_rank_by_transversals(g)?;
            ensure(t == c, || format!("{}: transversal route {t} vs {c}", g6(g)))?;
        }
    }
    Ok(graphs.len())
}

pub fn check_classification(graphs: &[Graph]) -> Result<usize> {
    for g in graphs {
        flats::classify_low_rank(g)?;
    }
    Ok(graphs.len())
}

/// Every criterion for c-independence agrees on every subset.
pub fn check_independence_criteria(graphs: &[Graph]) -> Result<usize> {
    let mut cases = 0;
    for g in graphs {
        for bits in 0u64..1 << g.n() {
            let j = VertexSet(bits);
            let a = flats::is_c_independent(g, j)?;
            if let Some(w) = &a {
                ensure(w.verify(g), || format!("{}: bad certificate for {j}", g6(g)))?;
            }
            let a = a.is_some();
            let b = flats::independent_by_witness(g, j)?;
            let c = flats::independent_by_height(g, j)?;
            let d = flats::independent_by_transversal(g, j)?;
            ensure(a == b && b == c && c == d, || format!("{}: {j} gives {a} {b} {c} {d}", g6(g)))?;
            cases += 1;
        }
    }
    Ok(cases)
}

/// Hereditary and point-replacement properties of the independent sets,
/// and agreement of the largest size with c-rank.
pub fn check_independence_axioms(graphs: &[Graph]) -> Result<usize> {
    for g in graphs {
        let fam = flats::all_c_independent_sets(g)?;
        ensure(fam.is_hereditary(), || format!("{}: not hereditary", g6(g)))?;
        if let Some((j, p)) = fam.point_replacement_violation() {
            return Err(fail(format!("{}: point replacement fails for {j} and {p}", g6(g))));
        }
        ensure(fam.max_size() == c_rank(g)?, || format!("{}: largest independent set vs c-rank", g6(g)))?;
    }
    Ok(graphs.len())
}

/// Degree bound, components, restriction and cliques.
pub fn check_rank_bounds(graphs: &[Graph]) -> Result<usize> {
    for g in graphs {
        let c = c_rank(g)?;
        ensure(c <= g.max_degree().map_or(0, |d| d + 1), || format!("{}: above maxdeg + 1", g6(g)))?;
        let comps = g.components();
        let mut best = 0;
        for comp in &comps {
            best = best.max(c_rank(&g.restriction(*comp)?.0)?);
        }
        ensure(best == c, || format!("{}: component maximum {best} vs {c}", g6(g)))?;
        for v in 0..g.n() {
            ensure(c_rank(&g.without_vertex(v)?)? <= c, || format!("{}: deleting {v} raised c-rank", g6(g)))?;
        }
        ensure(c >= g.clique_number(), || format!("{}: below clique number", g6(g)))?;
    }
    Ok(graphs.len())
}

pub fn check_sober_quotients(graphs: &[Graph]) -> Result<usize> {
    let mut cases = 0;
    for g in graphs.iter().filter(|g| g.n() > 0 && g.is_connected()) {
        let q = g.sober_quotient();
        ensure(q.graph.is_sober() && q.graph.is_connected(), || format!("{}: quotient not sober and connected", g6(g)))?;
        ensure(
            lattice_isomorphic(&flats::flats(g)?, &flats::flats(&q.graph)?)?,
            || format!("{}: quotient changes the lattice of flats", g6(g)),
        )?;
        if g.is_tree() {
            let (sober, close) = g.sober_tree_check()?;
            ensure(sober != close, || format!("{}: tree sobriety vs leaves at distance 2", g6(g)))?;
        }
        cases += 1;
    }
    Ok(cases)
}

/// Star intersections, matroid and independence descriptions, and
/// potential lines of SC3 graphs.
pub fn check_sc3(graphs: &[Graph]) -> Result<usize> {
    let mut pool: Vec<Graph> = graphs.to_vec();
    for name in ["petersen", "heawood", "coimbra", "g5", "cubic-r3g3"] {
        pool.push(catalog(name)?);
    }
    let mut cases = 0;
    for g in &pool {
        if !flats::is_sc3(g)? {
            continue;
        }
        for v in 0..g.n() {
            for w in v + 1..g.n() {
                ensure((g.star(v) & g.star(w)).len() <= 1, || format!("{}: stars of {v},{w} share two", g6(g)))?;
            }
        }
        let mat = flats::mat_g(g)?;
        ensure(mat.is_hereditary() && mat.exchange_violation().is_none(), || format!("{}: Mat G not a matroid", g6(g)))?;
        if g.n() <= 20 {
            ensure(
                flats::sc3_independents(g)? == flats::all_c_independent_sets(g)?,
                || format!("{}: closed-form independents differ", g6(g)),
            )?;
        }
        let diam = g.diameter().unwrap_or(0);
        let lines = flats::potential_lines(g)?;
        ensure(diam >= 3 || lines.is_empty(), || format!("{}: diameter {diam} with potential lines", g6(g)))?;
        ensure(diam <= 5 || !lines.is_empty(), || format!("{}: diameter {diam} without potential lines", g6(g)))?;
        if g.is_cubic() {
            ensure(diam <= 3 || !lines.is_empty(), || format!("{}: cubic, diameter {diam}, no potential lines", g6(g)))?;
        }
        cases += 1;
    }
    Ok(cases)
}

pub fn check_cubic_theorems() -> Result<usize> {
    let mut cases = 0;
    for n in [4, 6, 8, 10] {
        for g in connected_cubic_graphs(n)? {
            flats::cubic_lattice_theorems(&g)?;
            cases += 1;
        }
    }
    for name in ["petersen", "heawood", "vt16", "cubic-r4g4", "cubic-r3g3", "cubic-r3g4", "desargues-graph"] {
        flats::cubic_lattice_theorems(&catalog(name)?)?;
        cases += 1;
    }
    Ok(cases)
}

pub fn check_geometry(graphs: &[Graph]) -> Result<usize> {
    let mut cases = 0;
    let fixtures: Vec<Peg> = vec![geometry::fano(), geometry::desargues(), geometry::k3_peg()];
    for p in &fixtures {
        geometry::flats_of_levi_structure(p)?;
        let lg = geometry::levi(p)?;
        ensure(flats::is_sc3(&lg)?, || "Levi graph of a fixture is not SC3".into())?;
        ensure(geometry::peg_connected(p) == lg.is_connected(), || "connectivity disagrees with Levi".into())?;
        ensure(geometry::peg_is_sober(p) == lg.is_sober(), || "sobriety disagrees with Levi".into())?;
        let d = geometry::dual_peg(p)?;
        ensure(geometry::peg_isomorphic(&geometry::dual_peg(&d)?, p)?, || "double dual".into())?;
        ensure(
            crate::canon::graphs_isomorphic(&geometry::levi(&d)?, &lg)?,
            || "Levi graph of the dual".into(),
        )?;
        cases += 1;
    }
    for p in [geometry::k3_peg(), geometry::fano()] {
        let fam = geometry::levi_independents(&p)?;
        ensure(fam == flats::all_c_independent_sets(&geometry::levi(&p)?)?, || "Levi independents".into())?;
    }
    let pet = catalog::petersen();
    ensure(geometry::peg_isomorphic(&geometry::geo(&pet)?, &geometry::desargues())?, || "Geo(Petersen)".into())?;
    for name in ["petersen", "coimbra", "heawood"] {
        ensure(geometry::hasse_matches_levi(&catalog(name)?)?, || format!("{name}: Hasse graph vs Levi(Geo)"))?;
    }
    for g in graphs {
        if g.n() == 0 || g.edge_count() == 0 || g.degrees().contains(&0) {
            continue;
        }
        let p = Peg::from_graph(g)?;
        let lg = geometry::levi(&p)?;
        let (gl, gg) = (lg.girth(), g.girth());
        ensure(gl.is_none_or(|x| x >= 6 && x % 2 == 0), || format!("{}: Levi girth {gl:?}", g6(g)))?;
        ensure(gl == gg.map(|x| 2 * x), || format!("{}: Levi girth {gl:?} vs {gg:?}", g6(g)))?;
        ensure(lg.edge_count() == 2 * g.edge_count(), || format!("{}: Levi edge count", g6(g)))?;
        cases += 1;
    }
    Ok(cases)
}

pub fn check_complement(graphs: &[Graph]) -> Result<usize> {
    for g in graphs {
        rank_sum_report(g)?;
        if g.n() <= 6 {
            if let Some(w) = classical_independence_violation(g)? {
                return Err(fail(format!("{}: {w} independent but not c-independent in the complement", g6(g))));
            }
        }
    }
    let pet = catalog::petersen();
    ensure(crate::complement::complement_rank_both_ways(&pet)? == 5, || "Petersen complement".into())?;
    Ok(graphs.len())
}

pub fn check_cm_rank(graphs: &[Graph]) -> Result<usize> {
    let families: Vec<Vec<Graph>> = (0..=2).map(|m| forbidden_family(m, false)).collect::<Result<_>>()?;
    for g in graphs {
        let cm = cm_rank(g)?.cm_rank;
        ensure(cm >= c_rank(g)?, || format!("{}: cm-rank below c-rank", g6(g)))?;
        for (m, fam) in families.iter().enumerate() {
            ensure(
                (cm <= m) == avoids_forbidden(g, fam)?,
                || format!("{}: cm-rank {cm} vs forbidden minors for {m}", g6(g)),
            )?;
        }
    }
    Ok(graphs.len())
}

/// Rank routes, bounds and independence axioms on seeded random graphs.
pub fn check_random(opts: &VerifyOptions) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut graphs = Vec::new();
    for n in 7..=9 {
        for _ in 0..opts.samples {
            let p = rng.gen_range(0.15..0.7);
            graphs.push(random_graph(n, p, &mut rng)?);
        }
    }
    check_rank_routes(&graphs, 0)?;
    check_rank_bounds(&graphs)?;
    check_independence_axioms(&graphs)?;
    check_classification(&graphs)?;
    Ok(graphs.len())
}

fn run(name: &str, f: impl FnOnce() -> Result<usize>) -> CheckResult {
    let t = Instant::now();
    let r = f();
    let millis = t.elapsed().as_millis();
    match r {
        Ok(cases) => CheckResult { name: name.into(), passed: true, cases, millis, detail: String::new() },
        Err(e) => CheckResult { name: name.into(), passed: false, cases: 0, millis, detail: e.to_string() },
    }
}

pub fn run_all(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let all = all_graphs_up_to(opts.max_n.min(7))?;
    let upto = |k: usize| -> Vec<Graph> { all.iter().filter(|g| g.n() <= k).cloned().collect() };
    let small = upto(opts.max_n.min(6));
    let smaller = upto(opts.max_n.min(5));
    Ok(vec![
        run("catalog fixtures", check_catalog),
        run("rank routes", || check_rank_routes(&all, 6)),
        run("low-rank classification", || check_classification(&all)),
        run("independence criteria", || check_independence_criteria(&smaller)),
        run("independence axioms", || check_independence_axioms(&small)),
        run("rank bounds", || check_rank_bounds(&all)),
        run("sober quotients", || check_sober_quotients(&all)),
        run("SC3 structure", || check_sc3(&all)),
        run("cubic lattice theorems", check_cubic_theorems),
        run("geometries and Levi graphs", || check_geometry(&small)),
        run("complement bounds", || check_complement(&all)),
        run("cm-rank and forbidden minors", || check_cm_rank(&small)),
        run("randomized sweep", || check_random(opts)),
    ])
}

/// A graph from a catalog name, a graph6 string, or an edge-list text.
pub fn resolve_graph(input: &str) -> Result<Graph> {
    match catalog(input) {
        Err(Error::UnknownGraph(name)) => io::parse_any(input).map_err(|_| Error::UnknownGraph(name)),
        other => other,
    }
}
