//! Acceptance suite: ten criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so every line reaches stdout; the
//! process exits nonzero if any criterion fails.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superflats::canon::graphs_isomorphic;
use superflats::catalog::{self, catalog};
use superflats::complement::{below_sqrt2_bound, complement_rank_both_ways};
use superflats::enumerate::{all_graphs_up_to, connected_cubic_graphs, connected_graphs_up_to, random_graph};
use superflats::flats::{self, c_rank};
use superflats::geometry::{self, Peg};
use superflats::graph::{self as gr, Graph};
use superflats::lattice::{coproduct_decompose, lattice_isomorphic};
use superflats::minors::{self, ConnectedPartition, Wildcard, WildcardMatrix};
use superflats::VertexSet;

type Outcome = Result<String, String>;

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn set(v: &[usize]) -> VertexSet {
    VertexSet::from_iter(v.iter().copied())
}

fn set1(v: &[usize]) -> VertexSet {
    VertexSet::from_iter(v.iter().map(|x| x - 1))
}

fn g6(g: &Graph) -> String {
    superflats::graph::io::to_graph6(g)
}

// ---------------------------------------------------------------------------
// Oracles written against the definitions, sharing no code with the library.

/// Number of bijections `rows -> cols` using only nonadjacent pairs (the 1
/// entries of the complemented adjacency matrix), capped at 2.
fn unique_ones_matchings(g: &Graph, rows: &[usize], cols: &[usize]) -> usize {
    fn go(g: &Graph, rows: &[usize], cols: &[usize], used: &mut Vec<bool>, k: usize) -> usize {
        if k == rows.len() {
            return 1;
        }
        let mut total = 0;
        for (c, &col) in cols.iter().enumerate() {
            if !used[c] && !g.has_edge(rows[k], col) {
                used[c] = true;
                total += go(g, rows, cols, used, k + 1);
                used[c] = false;
                if total >= 2 {
                    return 2;
                }
            }
        }
        total
    }
    go(g, rows, cols, &mut vec![false; cols.len()], 0)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// A square superboolean matrix is nonsingular exactly when its permanent is
/// 1, that is when exactly one permutation picks only 1 entries.
fn oracle_independent(g: &Graph, cols: &[usize]) -> bool {
    k_subsets(g.n(), cols.len()).iter().any(|rows| unique_ones_matchings(g, rows, cols) == 1)
}

fn oracle_c_rank(g: &Graph) -> usize {
    (0..=g.n()).rev().find(|&k| k_subsets(g.n(), k).iter().any(|c| oracle_independent(g, c))).unwrap_or(0)
}

fn oracle_chromatic(g: &Graph) -> usize {
    fn colourable(g: &Graph, k: usize, v: usize, col: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !(g.has_edge(u, v) && col[u] == c)) {
                col[v] = c;
                if colourable(g, k, v + 1, col) {
                    return true;
                }
            }
        }
        false
    }
    (0..=g.n()).find(|&k| colourable(g, k, 0, &mut vec![0; g.n()])).unwrap()
}

fn oracle_girth(g: &Graph) -> Option<usize> {
    // shortest cycle through each edge: distance between its ends without it
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        let mut h = g.clone();
        h.remove_edge(u, v);
        if let Some(d) = h.distance(u, v) {
            best = Some(best.map_or(d + 1, |b: usize| b.min(d + 1)));
        }
    }
    best
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Outcome {
    let cases: Vec<(&str, Graph, usize)> = vec![
        ("Petersen", catalog::petersen(), 3),
        ("K4", gr::complete(4).unwrap(), 4),
        ("K3,3", gr::complete_bipartite(3, 3).unwrap(), 2),
        ("C4", gr::cycle(4).unwrap(), 2),
        ("empty", Graph::new(0).unwrap(), 0),
        ("edgeless", gr::edgeless(5).unwrap(), 1),
    ];
    let mut shown = Vec::new();
    for (name, g, want) in &cases {
        let got = c_rank(g).map_err(|e| e.to_string())?;
        check(got == *want, || format!("{name}: c-rank {got}, expected {want}"))?;
        if g.n() <= 6 {
            let o = oracle_c_rank(g);
            check(o == *want, || format!("{name}: oracle {o}, expected {want}"))?;
        }
        shown.push(format!("{name}={got}"));
    }
    Ok(shown.join(" "))
}

fn criterion_2() -> Outcome {
    let graphs = connected_graphs_up_to(6).map_err(|e| e.to_string())?;
    let six = graphs.iter().filter(|g| g.n() == 6).count();
    check(six == 112, || format!("{six} connected graphs on 6 vertices, expected 112"))?;
    for g in &graphs {
        let routes = [
            superflats::sb::sb_rank(&g.complemented_adjacency()).map_err(|e| e.to_string())?,
            flats::flats(g).map_err(|e| e.to_string())?.height(),
            flats::c_rank_recursive(g).map_err(|e| e.to_string())?,
            flats::c_rank_by_transversals(g).map_err(|e| e.to_string())?,
            oracle_c_rank(g),
        ];
        check(routes.iter().all(|&r| r == routes[0]), || format!("{}: routes {routes:?}", g6(g)))?;
    }
    Ok(format!("{} connected graphs (112 on six vertices), four routes and oracle agree", graphs.len()))
}

fn criterion_3() -> Outcome {
    let g = catalog("coimbra").map_err(|e| e.to_string())?;
    let mut printed: BTreeSet<VertexSet> = BTreeSet::new();
    printed.insert(VertexSet::full(7));
    printed.insert(VertexSet::EMPTY);
    for s in [&[4, 5, 6][..], &[2, 3, 4], &[1, 2, 5], &[1, 3, 6], &[2, 7], &[3, 7], &[1, 7]] {
        printed.insert(set1(s));
    }
    for v in 1..=7 {
        printed.insert(set1(&[v]));
    }
    let got: BTreeSet<VertexSet> = flats::flats(&g).map_err(|e| e.to_string())?.elements().iter().copied().collect();
    check(printed.len() == 16 && got == printed, || format!("flats {got:?}"))?;

    let excluded: Vec<VertexSet> = [[1, 2, 5], [1, 3, 6], [2, 3, 4], [4, 5, 6]].iter().map(|s| set1(s)).collect();
    let mut expected: BTreeSet<VertexSet> = BTreeSet::new();
    for bits in 0u64..1 << 7 {
        let w = VertexSet(bits);
        if w.len() <= 3 && !excluded.contains(&w) {
            expected.insert(w);
        }
    }
    let fam = flats::all_c_independent_sets(&g).map_err(|e| e.to_string())?;
    let got: BTreeSet<VertexSet> = fam.members().iter().copied().collect();
    check(got == expected, || format!("independent sets differ: {} vs {}", got.len(), expected.len()))?;
    for w in &expected {
        check(oracle_independent(&g, &w.to_vec()), || format!("oracle rejects {w}"))?;
    }
    for w in &excluded {
        check(!oracle_independent(&g, &w.to_vec()), || format!("oracle accepts {w}"))?;
    }
    Ok(format!("16 flats as printed, {} independent sets", got.len()))
}

fn criterion_4() -> Outcome {
    let h = catalog("heawood").map_err(|e| e.to_string())?;
    let (girth, diam) = (h.girth(), h.diameter());
    let lines = flats::potential_lines(&h).map_err(|e| e.to_string())?;
    let fam = flats::all_c_independent_sets(&h).map_err(|e| e.to_string())?;
    let mut oracle = 0;
    for k in 0..=4 {
        oracle += k_subsets(14, k).iter().filter(|c| oracle_independent(&h, c)).count();
    }
    let from_fano = geometry::levi_independents(&geometry::fano()).map_err(|e| e.to_string())?;
    let levi = geometry::levi(&geometry::fano()).map_err(|e| e.to_string())?;
    let levi_matches = graphs_isomorphic(&levi, &h).map_err(|e| e.to_string())?;
    // relabel the Fano family onto the Heawood graph before comparing
    let map = superflats::canon::find_isomorphism(&levi, &h).map_err(|e| e.to_string())?.ok_or("no isomorphism")?;
    let moved: BTreeSet<VertexSet> =
        from_fano.members().iter().map(|w| VertexSet::from_iter(w.iter().map(|x| map[x]))).collect();
    let ours: BTreeSet<VertexSet> = fam.members().iter().copied().collect();
    let detail = format!(
        "girth {girth:?}, diameter {diam:?}, {} potential lines, {} independent sets (oracle {oracle}, Fano family {}), expected 463",
        lines.len(),
        fam.len(),
        from_fano.len()
    );
    check(girth == Some(6) && diam == Some(3) && lines.is_empty(), || detail.clone())?;
    check(levi_matches && moved == ours, || format!("Fano family differs; {detail}"))?;
    check(oracle == fam.len(), || format!("oracle disagrees; {detail}"))?;
    check(fam.len() == 463, || detail.clone())?;
    Ok(detail)
}

fn criterion_5() -> Outcome {
    let pet = catalog::petersen();
    let geo = geometry::geo(&pet).map_err(|e| e.to_string())?;
    let sig = geometry::configuration_signature(&geo).ok_or("not a configuration")?;
    check((sig.m, sig.c, sig.n, sig.d) == (10, 3, 10, 3), || format!("signature {sig:?}"))?;
    // points: 2-subsets of {0..4}; lines: 3-subsets, incidence by inclusion
    let pairs = k_subsets(5, 2);
    let triples = k_subsets(5, 3);
    let model_lines: Vec<VertexSet> = triples
        .iter()
        .map(|t| VertexSet::from_iter((0..pairs.len()).filter(|&i| pairs[i].iter().all(|x| t.contains(x)))))
        .collect();
    let model = geometry::validate_peg(10, &model_lines).map_err(|e| e.to_string())?;
    check(geometry::peg_isomorphic(&geo, &model).map_err(|e| e.to_string())?, || "not the Desargues model".into())?;
    let lg = geometry::levi(&geo).map_err(|e| e.to_string())?;
    check(lg.n() == 20 && lg.edge_count() == 30, || format!("Levi {} vertices {} edges", lg.n(), lg.edge_count()))?;
    let hasse = flats::flats(&pet).map_err(|e| e.to_string())?.restricted_hasse_graph().map_err(|e| e.to_string())?;
    check(graphs_isomorphic(&hasse, &lg).map_err(|e| e.to_string())?, || "Hasse graph differs from Levi".into())?;
    Ok("Geo(Petersen) is (10_3,10_3) Desargues; Levi 20/30; Hasse graph isomorphic".into())
}

fn criterion_6() -> Outcome {
    let mut shown = Vec::new();
    for (name, p) in [("Fano", geometry::fano()), ("Desargues", geometry::desargues())] {
        let lg = geometry::levi(&p).map_err(|e| e.to_string())?;
        let fl = flats::flats(&lg).map_err(|e| e.to_string())?;
        let m = p.n_points();
        let mut expected: HashSet<VertexSet> = HashSet::new();
        expected.insert(VertexSet::EMPTY);
        expected.insert(VertexSet::full(lg.n()));
        for x in 0..lg.n() {
            expected.insert(VertexSet::singleton(x));
        }
        expected.extend(p.lines().iter().copied());
        // pencils, as sets of line vertices
        for x in 0..m {
            let pencil = (0..p.n_lines()).filter(|&i| p.lines()[i].contains(x)).map(|i| m + i);
            expected.insert(VertexSet::from_iter(pencil));
        }
        let got: HashSet<VertexSet> = fl.elements().iter().copied().collect();
        check(got == expected, || format!("{name}: {} flats, expected {}", got.len(), expected.len()))?;
        check(fl.is_jordan_dedekind(), || format!("{name}: chains of different lengths"))?;
        let parts = coproduct_decompose(&fl).map_err(|e| e.to_string())?;
        let lat = geometry::lat_peg(&p).map_err(|e| e.to_string())?;
        let dual = geometry::lat_peg(&geometry::dual_peg(&p).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let iso = |a, b| lattice_isomorphic(a, b).map_err(|e| e.to_string());
        let split = parts.len() == 2
            && ((iso(&parts[0], &lat)? && iso(&parts[1], &dual)?) || (iso(&parts[0], &dual)? && iso(&parts[1], &lat)?));
        check(split, || format!("{name}: coproduct components {:?}", parts.iter().map(|c| c.len()).collect::<Vec<_>>()))?;
        let report = geometry::flats_of_levi_structure(&p).map_err(|e| e.to_string())?;
        shown.push(format!("{name} {} flats {:?}", report.flats, report.components));
    }
    Ok(shown.join("; "))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    let mut jd_fail = 0;
    for n in [4, 6, 8, 10] {
        for g in connected_cubic_graphs(n).map_err(|e| e.to_string())? {
            let r = flats::cubic_lattice_theorems(&g).map_err(|e| format!("{}: {e}", g6(&g)))?;
            let structural = r.is_k4 || r.is_k33;
            check(
                [r.distributive, r.modular, r.semimodular, r.geometric].iter().all(|&x| x == structural),
                || format!("{}: predicates vs K4/K33", g6(&g)),
            )?;
            let by_squares = r.c_rank <= 3 || (r.sober && r.every_edge_in_square);
            let by_strips = r.c_rank <= 3 || r.is_k4 || r.strip.is_some();
            check(r.jordan_dedekind == by_squares && by_squares == by_strips, || format!("{}: chain condition", g6(&g)))?;
            jd_fail += usize::from(!r.jordan_dedekind);
            count += 1;
        }
    }
    check(count == 27, || format!("{count} connected cubic graphs on at most 10 vertices"))?;
    let vt = catalog("vt16").map_err(|e| e.to_string())?;
    let fl = flats::flats(&vt).map_err(|e| e.to_string())?;
    let (long, short) = (fl.height(), fl.shortest_maximal_chain_length());
    check((long, short) == (4, 3), || format!("vt16 chain lengths {long} and {short}"))?;
    Ok(format!("{count} connected cubic graphs ({jd_fail} without the chain condition); vt16 chains 4 and 3"))
}

fn criterion_8() -> Outcome {
    let pet = catalog::petersen();
    let direct = c_rank(&pet.complement()).map_err(|e| e.to_string())?;
    let both = complement_rank_both_ways(&pet).map_err(|e| e.to_string())?;
    check(direct == 5 && both == 5, || format!("Petersen complement {direct} / {both}"))?;
    let graphs = all_graphs_up_to(7).map_err(|e| e.to_string())?;
    for g in &graphs {
        let n = g.n();
        let a = c_rank(g).map_err(|e| e.to_string())?;
        let b = complement_rank_both_ways(g).map_err(|e| e.to_string())?;
        // (a + b - 1)^2 < 2 n^2, in integers
        let exact = a + b == 0 || ((a + b - 1) * (a + b - 1)) < 2 * n * n;
        check(exact && below_sqrt2_bound(a + b, n), || format!("{}: sum {}", g6(g), a + b))?;
        let chi = oracle_chromatic(g);
        check(chi == g.chromatic_number().map_err(|e| e.to_string())?, || format!("{}: chromatic number", g6(g)))?;
        check(b * chi >= n, || format!("{}: complement rank {b} with chromatic number {chi}", g6(g)))?;
    }
    Ok(format!("Petersen complement 5 both ways; bounds on {} graphs", graphs.len()))
}

fn criterion_9() -> Outcome {
    let c4 = gr::cycle(4).unwrap();
    let part = ConnectedPartition { blocks: vec![set(&[0, 1]), set(&[2]), set(&[3])] };
    let cert = minors::cm_rank_for_partition(&c4, &part).map_err(|e| e.to_string())?;
    let minor = minors::certificate_minor(&c4, &cert).map_err(|e| e.to_string())?;
    let k3 = gr::complete(3).unwrap();
    check(cert.cm_rank >= 3, || format!("K3 partition gives {}", cert.cm_rank))?;
    check(graphs_isomorphic(&minor, &k3).map_err(|e| e.to_string())?, || format!("certificate {}", g6(&minor)))?;
    check(c_rank(&minor).map_err(|e| e.to_string())? == 3, || "K3 c-rank".into())?;
    check(minors::is_minor(&k3, &c4).map_err(|e| e.to_string())?, || "K3 not a minor of C4".into())?;
    let cm = minors::cm_rank(&c4).map_err(|e| e.to_string())?.cm_rank;
    check(cm >= 3, || format!("C4 cm-rank {cm}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let samples = 10_000;
    let mut by_stars = [0usize; 11];
    for _ in 0..samples {
        let stars = rng.gen_range(0..=10usize);
        let mut cells: Vec<Wildcard> =
            (0..25).map(|_| if rng.gen_bool(0.5) { Wildcard::One } else { Wildcard::Zero }).collect();
        let mut placed = 0;
        while placed < stars {
            let k = rng.gen_range(0..25);
            if cells[k] != Wildcard::Star {
                cells[k] = Wildcard::Star;
                placed += 1;
            }
        }
        let m = WildcardMatrix::new(5, cells).map_err(|e| e.to_string())?;
        let fast = minors::wildcard_rank(&m).map_err(|e| e.to_string())?.rank;
        let slow = minors::wildcard_rank_by_resolution(&m).map_err(|e| e.to_string())?;
        check(fast == slow, || format!("wildcard rank {fast} vs resolution {slow} on {m:?}"))?;
        by_stars[stars] += 1;
    }
    check(by_stars.iter().all(|&c| c > 0), || format!("star counts {by_stars:?}"))?;

    let graphs = all_graphs_up_to(6).map_err(|e| e.to_string())?;
    let families: Vec<Vec<Graph>> =
        (0..=2).map(|m| minors::forbidden_family(m, false)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    for g in &graphs {
        let cm = minors::cm_rank(g).map_err(|e| e.to_string())?.cm_rank;
        for (m, fam) in families.iter().enumerate() {
            let avoids = minors::avoids_forbidden(g, fam).map_err(|e| e.to_string())?;
            check((cm <= m) == avoids, || format!("{}: cm-rank {cm}, m = {m}", g6(g)))?;
        }
    }
    Ok(format!(
        "C4 cm-rank {cm} via K3 contraction; {samples} wildcard matrices agree; forbidden minors for m <= 2 on {} graphs",
        graphs.len()
    ))
}

fn properties_of(g: &Graph) -> Result<(), String> {
    let e = |x: superflats::Error| format!("{}: {x}", g6(g));
    let c = c_rank(g).map_err(e)?;
    let fam = flats::all_c_independent_sets(g).map_err(e)?;
    check(fam.is_hereditary(), || format!("{}: not hereditary", g6(g)))?;
    check(fam.point_replacement_violation().is_none(), || format!("{}: point replacement", g6(g)))?;
    check(fam.max_size() == c, || format!("{}: largest independent set", g6(g)))?;
    check(c <= g.max_degree().map_or(0, |d| d + 1), || format!("{}: degree bound", g6(g)))?;
    let comp_max = g
        .components()
        .iter()
        .map(|w| c_rank(&g.restriction(*w).unwrap().0).unwrap())
        .max()
        .unwrap_or(0);
    check(comp_max == c, || format!("{}: components", g6(g)))?;
    for v in 0..g.n() {
        check(c_rank(&g.without_vertex(v).map_err(e)?).map_err(e)? <= c, || format!("{}: restriction", g6(g)))?;
    }
    check(c >= g.clique_number(), || format!("{}: clique", g6(g)))?;
    if g.edge_count() > 0 && !g.degrees().contains(&0) {
        let p = Peg::from_graph(g).map_err(e)?;
        let lg = geometry::levi(&p).map_err(e)?;
        let (gl, gg) = (oracle_girth(&lg), oracle_girth(g));
        check(gl == gg.map(|x| 2 * x), || format!("{}: Levi girth {gl:?} vs {gg:?}", g6(g)))?;
        check(gl.is_none_or(|x| x >= 6 && x % 2 == 0), || format!("{}: Levi girth {gl:?}", g6(g)))?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let exhaustive = all_graphs_up_to(6).map_err(|e| e.to_string())?;
    for g in &exhaustive {
        properties_of(g)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut random = 0;
    for n in 7..=9 {
        for _ in 0..15 {
            let g = random_graph(n, rng.gen_range(0.15..0.7), &mut rng).map_err(|e| e.to_string())?;
            properties_of(&g)?;
            random += 1;
        }
    }
    // disjoint unions exercise the component maximum directly
    for _ in 0..20 {
        let a = random_graph(rng.gen_range(1..=4), 0.5, &mut rng).map_err(|e| e.to_string())?;
        let b = random_graph(rng.gen_range(1..=4), 0.5, &mut rng).map_err(|e| e.to_string())?;
        let u = a.disjoint_union(&b).map_err(|e| e.to_string())?;
        let want = c_rank(&a).unwrap().max(c_rank(&b).unwrap());
        check(c_rank(&u).unwrap() == want, || format!("{}: union of components", g6(&u)))?;
    }
    let mut geos = 0;
    for name in ["petersen", "heawood", "coimbra", "cubic-r3g3"] {
        let g = catalog(name).map_err(|e| e.to_string())?;
        let lg = geometry::levi(&geometry::geo(&g).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let girth = oracle_girth(&lg);
        check(girth.is_none_or(|x| x >= 6 && x % 2 == 0), || format!("Levi(Geo {name}) girth {girth:?}"))?;
        geos += 1;
    }
    Ok(format!("{} exhaustive graphs, {random} seeded random graphs, {geos} geometries", exhaustive.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("c-rank exact values", criterion_1),
        ("four-way rank agreement", criterion_2),
        ("seven-vertex example flats and independents", criterion_3),
        ("Heawood graph independents", criterion_4),
        ("geometry of the Petersen graph", criterion_5),
        ("flats of Levi graphs", criterion_6),
        ("cubic lattice theorems", criterion_7),
        ("complement analysis", criterion_8),
        ("cm-rank", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let ms = t.elapsed().as_millis();
        match r {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{ms} ms]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({detail}) [{ms} ms]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
