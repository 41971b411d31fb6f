//! Named graphs, each checked against known consequences when built.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::flats::{c_rank, flats, is_sc3, moebius, cylinder, potential_lines};
use crate::graph::{self, Graph};
use crate::lattice::lattice_isomorphic;

/// Petersen graph on the 2-subsets of `{1,...,5}`, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs = two_subsets(5);
    let mut g = Graph::new(10).unwrap();
    for i in 0..10 {
        for j in i + 1..10 {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    let labels = pairs.iter().map(|(a, b)| format!("{}{}", a + 1, b + 1)).collect();
    g.with_labels(labels)
}

pub fn two_subsets(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect()
}

/// Builds from 1-indexed edges, labelling vertex `i` as `i + 1`.
fn one_indexed(n: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    let g = Graph::from_edges(n, &e).expect("fixture edges");
    g.with_labels((1..=n).map(|i| i.to_string()).collect())
}

fn named(labels: &[&str], edges: &[(&str, &str)]) -> Graph {
    let idx = |s: &str| labels.iter().position(|l| *l == s).expect("fixture label");
    let e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (idx(u), idx(v))).collect();
    Graph::from_edges(labels.len(), &e)
        .expect("fixture edges")
        .with_labels(labels.iter().map(|s| s.to_string()).collect())
}

fn set1(v: &[usize]) -> VertexSet {
    VertexSet::from_iter(v.iter().map(|x| x - 1))
}

pub fn coimbra() -> Graph {
    one_indexed(7, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 6), (3, 5), (4, 7), (5, 7), (6, 7)])
}

/// The sixteen flats of [`coimbra`], 1-indexed.
pub fn coimbra_printed_flats() -> Vec<VertexSet> {
    let mut out = vec![VertexSet::full(7), VertexSet::EMPTY];
    for s in [&[4, 5, 6][..], &[2, 3, 4], &[1, 2, 5], &[1, 3, 6], &[2, 7], &[3, 7], &[1, 7]] {
        out.push(set1(s));
    }
    for v in 1..=7 {
        out.push(set1(&[v]));
    }
    out
}

/// Path `x0 ... x5` with four extra vertices, each on a triangle over one
/// of the edges `x0x1`, `x1x2`, `x3x4`, `x4x5`.
pub fn g5() -> Graph {
    let labels = ["x0", "x1", "x2", "x3", "x4", "x5", "a", "b", "c", "d"];
    named(
        &labels,
        &[
            ("x0", "x1"),
            ("x1", "x2"),
            ("x2", "x3"),
            ("x3", "x4"),
            ("x4", "x5"),
            ("a", "x0"),
            ("a", "x1"),
            ("b", "x1"),
            ("b", "x2"),
            ("c", "x3"),
            ("c", "x4"),
            ("d", "x4"),
            ("d", "x5"),
        ],
    )
}

/// Sober connected cubic vertex-transitive graph on 16 vertices whose
/// lattice of flats has maximal chains of lengths 4 and 3.
pub fn vt16() -> Graph {
    let nbrs: [[usize; 3]; 16] = [
        [2, 3, 7],
        [1, 6, 8],
        [1, 4, 11],
        [3, 5, 7],
        [4, 6, 8],
        [2, 5, 14],
        [1, 4, 9],
        [2, 5, 10],
        [7, 12, 15],
        [8, 13, 16],
        [3, 12, 15],
        [9, 11, 13],
        [10, 12, 14],
        [6, 13, 16],
        [9, 11, 16],
        [10, 14, 15],
    ];
    let mut edges = Vec::new();
    for (i, row) in nbrs.iter().enumerate() {
        for &j in row {
            if i + 1 < j {
                edges.push((i + 1, j));
            }
        }
    }
    one_indexed(16, &edges)
}

/// The cube: cubic, c-rank 4, girth 4.
pub fn cubic_rank4_girth4() -> Graph {
    let l = ["a", "b", "c", "d", "e", "f", "g", "h"];
    named(
        &l,
        &[
            ("a", "g"),
            ("a", "b"),
            ("a", "c"),
            ("b", "h"),
            ("b", "d"),
            ("c", "e"),
            ("c", "d"),
            ("d", "f"),
            ("e", "g"),
            ("e", "f"),
            ("f", "h"),
            ("h", "g"),
        ],
    )
}

pub fn cubic_rank3_girth3() -> Graph {
    let l = ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j"];
    named(
        &l,
        &[
            ("a", "i"),
            ("a", "e"),
            ("a", "b"),
            ("b", "c"),
            ("b", "d"),
            ("c", "h"),
            ("c", "j"),
            ("d", "g"),
            ("d", "f"),
            ("e", "i"),
            ("e", "f"),
            ("f", "g"),
            ("g", "h"),
            ("h", "j"),
            ("i", "j"),
        ],
    )
}

/// Non-sober cubic graph on 18 vertices with c-rank 3 and girth 4.
pub fn cubic_rank3_girth4() -> Graph {
    let mut labels: Vec<String> = ["A", "B", "C"].iter().map(|s| s.to_string()).collect();
    labels.extend((0..9).map(|i| format!("m{i}")));
    labels.extend([0, 2, 3, 5, 6, 8].iter().map(|i| format!("q{i}")));
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut edges: Vec<(String, String)> = Vec::new();
    for (t, top) in ["A", "B", "C"].iter().enumerate() {
        for k in 0..3 {
            edges.push((top.to_string(), format!("m{}", t + 3 * k)));
        }
    }
    for i in 0..9 {
        let base = 3 * (i / 3);
        edges.push((format!("m{i}"), format!("q{base}")));
        edges.push((format!("m{i}"), format!("q{}", base + 2)));
    }
    let e: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    named(&refs, &e)
}

/// Sober graph on six vertices that stays sober after deleting vertex 1,
/// with the same lattice of flats.
pub fn soberrest() -> Graph {
    one_indexed(6, &[(1, 2), (1, 5), (2, 3), (2, 4), (2, 6), (3, 5), (3, 6), (4, 6), (5, 6)])
}

pub fn heawood() -> Graph {
    graph::lcf(&[5, -5], 7).unwrap()
}

pub fn mcgee() -> Graph {
    graph::lcf(&[12, 7, -7], 8).unwrap()
}

pub fn tutte_coxeter() -> Graph {
    graph::lcf(&[-13, -9, 7, -7, 9, 13], 5).unwrap()
}

pub fn desargues_graph() -> Graph {
    graph::lcf(&[5, -5, 9, -9], 5).unwrap()
}

fn check(name: &str, ok: bool, detail: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Fixture { name: name.to_string(), detail: detail.to_string() })
    }
}

fn validate(name: &str, g: &Graph) -> Result<()> {
    match name {
        "petersen" => check(name, g.n() == 10 && g.edge_count() == 15 && g.girth() == Some(5), "10 vertices, 15 edges, girth 5"),
        "heawood" => check(name, g.n() == 14 && g.is_cubic() && g.girth() == Some(6) && g.diameter() == Some(3), "cubic, girth 6, diameter 3"),
        "mcgee" => check(name, g.n() == 24 && g.is_cubic() && g.girth() == Some(7), "cubic, 24 vertices, girth 7"),
        "tutte-coxeter" => check(name, g.n() == 30 && g.is_cubic() && g.girth() == Some(8), "cubic, 30 vertices, girth 8"),
        "desargues-graph" => check(name, g.n() == 20 && g.is_cubic() && g.girth() == Some(6), "cubic, 20 vertices, girth 6"),
        "coimbra" => {
            let mut got: Vec<VertexSet> = flats(g)?.elements().to_vec();
            let mut want = coimbra_printed_flats();
            got.sort();
            want.sort();
            check(name, got == want, "flats reproduce the sixteen printed ones")
        }
        "g5" => check(
            name,
            g.diameter() == Some(5) && is_sc3(g)? && potential_lines(g)?.is_empty(),
            "SC3, diameter 5, no potential lines",
        ),
        "vt16" => {
            let l = flats(g)?;
            let chain = |sets: &[&[usize]]| -> bool {
                let idx: Option<Vec<usize>> = sets.iter().map(|s| l.index_of(set1(s))).collect();
                idx.is_some_and(|ix| {
                    l.index_of(VertexSet::full(16)).is_some_and(|top| l.covers(top, ix[0]))
                        && ix.windows(2).all(|w| l.covers(w[0], w[1]))
                        && l.index_of(VertexSet::EMPTY).is_some_and(|b| l.covers(*ix.last().unwrap(), b))
                })
            };
            check(
                name,
                g.is_cubic()
                    && g.is_sober()
                    && g.is_connected()
                    && l.height() == 4
                    && chain(&[&[2, 3, 7], &[3, 7], &[3]])
                    && chain(&[&[1, 4, 11], &[11]]),
                "sober cubic, c-rank 4, maximal chains of lengths 4 and 3",
            )
        }
        "cubic-r4g4" => check(name, g.is_cubic() && g.girth() == Some(4) && c_rank(g)? == 4, "cubic, c-rank 4, girth 4"),
        "cubic-r3g3" => check(name, g.is_cubic() && g.girth() == Some(3) && c_rank(g)? == 3, "cubic, c-rank 3, girth 3"),
        "cubic-r3g4" => check(name, g.is_cubic() && g.girth() == Some(4) && c_rank(g)? == 3, "cubic, c-rank 3, girth 4"),
        "soberrest" => {
            let h = g.without_vertex(0)?;
            check(
                name,
                g.is_sober() && h.is_sober() && flats(g)?.len() == 12 && lattice_isomorphic(&flats(g)?, &flats(&h)?)?,
                "sober, still sober without vertex 1, isomorphic lattices of flats",
            )
        }
        _ => Ok(()),
    }
}

fn param(name: &str, arg: Option<&str>) -> Result<Vec<usize>> {
    let arg = arg.ok_or_else(|| Error::UnknownGraph(format!("{name} needs a size, as in {name}:4")))?;
    arg.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad size `{t}` in {name}"))))
        .collect()
}

fn one_param(name: &str, arg: Option<&str>) -> Result<usize> {
    match param(name, arg)?.as_slice() {
        [n] => Ok(*n),
        _ => Err(Error::Parse(format!("{name} takes one size"))),
    }
}

/// Looks up a graph such as `petersen`, `k:5`, `kmn:3,3`, `hn:4`.
pub fn catalog(query: &str) -> Result<Graph> {
    let (name, arg) = match query.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (query, None),
    };
    let g = match name {
        "k" => graph::complete(one_param(name, arg)?)?,
        "kmn" => match param(name, arg)?.as_slice() {
            [a, b] => graph::complete_bipartite(*a, *b)?,
            _ => return Err(Error::Parse("kmn takes two sizes, as in kmn:3,3".into())),
        },
        "cycle" => graph::cycle(one_param(name, arg)?)?,
        "path" => graph::path(one_param(name, arg)?)?,
        "empty" => graph::edgeless(one_param(name, arg)?)?,
        "hn" => cylinder(one_param(name, arg)?)?,
        "thn" => {
            let n = one_param(name, arg)?;
            if n < 4 {
                return Err(Error::Precondition(format!("the Möbius strip family starts at n = 4, got {n}")));
            }
            moebius(n)?
        }
        "petersen" => petersen(),
        "heawood" => heawood(),
        "mcgee" => mcgee(),
        "tutte-coxeter" => tutte_coxeter(),
        "desargues-graph" => desargues_graph(),
        "coimbra" => coimbra(),
        "g5" => g5(),
        "vt16" => vt16(),
        "cubic-r4g4" => cubic_rank4_girth4(),
        "cubic-r3g3" => cubic_rank3_girth3(),
        "cubic-r3g4" => cubic_rank3_girth4(),
        "soberrest" => soberrest(),
        "g3" => {
            return Err(Error::Quarantined {
                name: "g3".into(),
                detail: "the drawing does not transcribe to a cubic graph of diameter 3 with potential lines".into(),
            })
        }
        _ => return Err(Error::UnknownGraph(query.to_string())),
    };
    if arg.is_none() {
        validate(name, &g)?;
    }
    Ok(g)
}

/// Names accepted by [`catalog`] without parameters, excluding quarantined
/// entries.
pub const FIXED_NAMES: &[&str] = &[
    "petersen",
    "heawood",
    "mcgee",
    "tutte-coxeter",
    "desargues-graph",
    "coimbra",
    "g5",
    "vt16",
    "cubic-r4g4",
    "cubic-r3g3",
    "cubic-r3g4",
    "soberrest",
];

/// A representative of each parametrised family.
pub const SAMPLE_FAMILIES: &[&str] =
    &["k:4", "kmn:3,3", "cycle:6", "path:5", "empty:3", "hn:3", "hn:5", "thn:4", "thn:5"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_validates() {
        for name in FIXED_NAMES.iter().chain(SAMPLE_FAMILIES) {
            catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn family_sizes() {
        let h3 = catalog("hn:3").unwrap();
        assert_eq!((h3.n(), h3.edge_count()), (6, 9));
        assert!(catalog("thn:3").is_err());
        assert!(matches!(catalog("g3"), Err(Error::Quarantined { .. })));
        assert!(matches!(catalog("nope"), Err(Error::UnknownGraph(_))));
    }

    #[test]
    fn the_cube_is_the_smallest_cylinder() {
        assert!(crate::canon::graphs_isomorphic(&cubic_rank4_girth4(), &cylinder(4).unwrap()).unwrap());
    }
}
