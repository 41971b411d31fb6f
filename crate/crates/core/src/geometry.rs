//! Partial euclidean geometries, their Levi graphs and the geometry of an
//! SC3 graph.

use std::collections::HashSet;
use std::fmt::Write;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form_coloured, graphs_isomorphic};
use crate::catalog::two_subsets;
use crate::error::{Error, Result};
use crate::family::{subsets_up_to, SetFamily};
use crate::flats::{closed_vertices, flats, is_sc3};
use crate::graph::Graph;
use crate::lattice::{coproduct_decompose, lattice_isomorphic, SetLattice};

/// Points `0..n_points` and lines given as point sets, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Peg {
    n_points: usize,
    lines: Vec<VertexSet>,
}

/// Each of `m` points lies on `c` lines and each of `n` lines has `d`
/// points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConfigurationSignature {
    pub m: usize,
    pub c: usize,
    pub n: usize,
    pub d: usize,
}

/// Checks coverage, meeting in at most one point, and at least two points
/// per line, in that order.
pub fn validate_peg(n_points: usize, lines: &[VertexSet]) -> Result<Peg> {
    if n_points > 64 {
        return Err(Error::Capacity(n_points));
    }
    let full = VertexSet::full(n_points);
    for l in lines {
        if let Some(v) = (*l - full).min() {
            return Err(Error::InvalidVertex { vertex: v, n: n_points });
        }
    }
    let covered = lines.iter().fold(VertexSet::EMPTY, |a, &l| a | l);
    if let Some(p) = (full - covered).min() {
        return Err(Error::Axiom { axiom: "G1", detail: format!("point {p} lies on no line") });
    }
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if (*a & *b).len() >= 2 {
                return Err(Error::Axiom { axiom: "G2", detail: format!("lines {a} and {b} share {}", *a & *b) });
            }
        }
    }
    if let Some(l) = lines.iter().find(|l| l.len() < 2) {
        return Err(Error::Axiom { axiom: "G3", detail: format!("line {l} has fewer than two points") });
    }
    let mut lines = lines.to_vec();
    lines.sort_by_key(|s| s.size_key());
    Ok(Peg { n_points, lines })
}

impl Peg {
    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn lines(&self) -> &[VertexSet] {
        &self.lines
    }

    pub fn n_lines(&self) -> usize {
        self.lines.len()
    }

    /// Indices of the lines through `p`.
    pub fn pencil(&self, p: usize) -> Vec<usize> {
        (0..self.lines.len()).filter(|&i| self.lines[i].contains(p)).collect()
    }

    /// A graph as a geometry whose lines are its edges.
    pub fn from_graph(g: &Graph) -> Result<Peg> {
        let lines: Vec<VertexSet> = g.edges().iter().map(|&(u, v)| VertexSet::from_iter([u, v])).collect();
        validate_peg(g.n(), &lines)
    }

    /// Minimum degree of the Levi graph.
    pub fn min_degree(&self) -> usize {
        let pencils = (0..self.n_points).map(|p| self.pencil(p).len());
        let sizes = self.lines.iter().map(|l| l.len());
        pencils.chain(sizes).min().unwrap_or(0)
    }

    pub fn parse(text: &str) -> Result<Peg> {
        let mut rows = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head = rows.next().ok_or_else(|| Error::Parse("empty geometry".into()))?;
        let n = head
            .strip_prefix("points")
            .and_then(|r| r.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("expected `points N`, got `{head}`")))?;
        let mut lines = Vec::new();
        for row in rows {
            let mut l = VertexSet::EMPTY;
            for tok in row.split_whitespace() {
                let p: usize = tok.parse().map_err(|_| Error::Parse(format!("bad point `{tok}`")))?;
                if p >= 64 {
                    return Err(Error::InvalidVertex { vertex: p, n });
                }
                l.insert(p);
            }
            lines.push(l);
        }
        validate_peg(n, &lines)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("points {}\n", self.n_points);
        for l in &self.lines {
            let pts: Vec<String> = l.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(s, "{}", pts.join(" "));
        }
        s
    }
}

pub fn configuration_signature(p: &Peg) -> Option<ConfigurationSignature> {
    let c = p.pencil(0).len();
    let d = p.lines.first()?.len();
    if (0..p.n_points).any(|x| p.pencil(x).len() != c) || p.lines.iter().any(|l| l.len() != d) {
        return None;
    }
    let sig = ConfigurationSignature { m: p.n_points, c, n: p.lines.len(), d };
    assert_eq!(sig.c * sig.m, sig.d * sig.n, "incidence count");
    Some(sig)
}

/// Point `p` becomes vertex `p`; line `i` becomes vertex `n_points + i`.
pub fn levi(p: &Peg) -> Result<Graph> {
    let total = p.n_points + p.lines.len();
    let mut g = Graph::new(total)?;
    for (i, l) in p.lines.iter().enumerate() {
        for x in *l {
            g.add_edge(x, p.n_points + i)?;
        }
    }
    let labels = (0..p.n_points)
        .map(|x| format!("p{x}"))
        .chain(p.lines.iter().map(|l| format!("L{l}")))
        .collect();
    Ok(g.with_labels(labels))
}

/// Point/line colouring of [`levi`], for isomorphism tests that must not
/// swap the two sides.
pub fn levi_colours(p: &Peg) -> Vec<u32> {
    (0..p.n_points).map(|_| 0).chain(p.lines.iter().map(|_| 1)).collect()
}

pub fn peg_connected(p: &Peg) -> bool {
    if p.n_points == 0 {
        return true;
    }
    let mut reach = p.lines.first().copied().unwrap_or(VertexSet::singleton(0));
    loop {
        let next = p.lines.iter().filter(|l| !l.is_disjoint(reach)).fold(reach, |a, &l| a | l);
        if next == reach {
            return reach == VertexSet::full(p.n_points);
        }
        reach = next;
    }
}

/// Distinct points lie on distinct sets of lines.
pub fn peg_is_sober(p: &Peg) -> bool {
    let mut seen = HashSet::new();
    (0..p.n_points).all(|x| seen.insert(p.pencil(x)))
}

/// Lines become points, and the pencil of each point becomes a line.
pub fn dual_peg(p: &Peg) -> Result<Peg> {
    if p.min_degree() < 2 {
        return Err(Error::Precondition("dual_peg needs minimum degree at least 2".into()));
    }
    let lines: Vec<VertexSet> = (0..p.n_points).map(|x| VertexSet::from_iter(p.pencil(x))).collect();
    validate_peg(p.lines.len(), &lines)
}

/// Intersection-closure of the lines, with all points on top and the empty
/// set at the bottom.
pub fn lat_peg(p: &Peg) -> Result<SetLattice> {
    let mut gens = p.lines.clone();
    gens.push(VertexSet::EMPTY);
    SetLattice::meet_closure(&gens, VertexSet::full(p.n_points))
}

/// Isomorphism of geometries, as point/line-coloured isomorphism of their
/// Levi graphs.
pub fn peg_isomorphic(a: &Peg, b: &Peg) -> Result<bool> {
    if a.n_points != b.n_points || a.lines.len() != b.lines.len() {
        return Ok(false);
    }
    let fa = canonical_form_coloured(&levi(a)?, &levi_colours(a))?;
    let fb = canonical_form_coloured(&levi(b)?, &levi_colours(b))?;
    Ok(fa == fb)
}

/// The geometry whose lines are the flats with at least two vertices, other
/// than `V`.
pub fn geo(g: &Graph) -> Result<Peg> {
    if !is_sc3(g)? {
        return Err(Error::Precondition("geo needs a sober connected graph of c-rank 3".into()));
    }
    let fl = flats(g)?;
    let lines: Vec<VertexSet> =
        fl.elements().iter().copied().filter(|w| w.len() >= 2 && *w != g.vertices()).collect();
    validate_peg(g.n(), &lines).map_err(|e| Error::TheoremViolation(format!("flats of an SC3 graph fail the axioms: {e}")))
}

/// Structure of the flats of a Levi graph.
#[derive(Debug, Clone, Serialize)]
pub struct LeviFlatsReport {
    pub levi_vertices: usize,
    pub flats: usize,
    pub height: usize,
    pub four_part_union: bool,
    pub jordan_dedekind: bool,
    pub levi_closed: bool,
    pub components: Vec<usize>,
    pub coproduct_matches: bool,
}

fn require_nice(p: &Peg, op: &str) -> Result<()> {
    if !peg_is_sober(p) || !peg_connected(p) || p.min_degree() < 2 {
        return Err(Error::Precondition(format!(
            "{op} needs a sober connected geometry of minimum degree at least 2"
        )));
    }
    Ok(())
}

/// Computes the flats of the Levi graph and checks them against the
/// predicted description: everything, nothing, singletons, lines and
/// pencils.  Also checks the chain condition, that every Levi vertex is
/// closed, and that the lattice splits into the lattice of the geometry and
/// that of its dual.
pub fn flats_of_levi_structure(p: &Peg) -> Result<LeviFlatsReport> {
    require_nice(p, "flats_of_levi_structure")?;
    let lg = levi(p)?;
    let fl = flats(&lg)?;
    let m = p.n_points;
    let mut expected: HashSet<VertexSet> = HashSet::new();
    expected.insert(lg.vertices());
    expected.insert(VertexSet::EMPTY);
    for x in 0..lg.n() {
        expected.insert(VertexSet::singleton(x));
    }
    expected.extend(p.lines.iter().copied());
    for x in 0..m {
        expected.insert(VertexSet::from_iter(p.pencil(x).into_iter().map(|i| m + i)));
    }
    let got: HashSet<VertexSet> = fl.elements().iter().copied().collect();
    let four_part_union = got == expected;
    let jordan_dedekind = fl.is_jordan_dedekind();
    let levi_closed = closed_vertices(&lg) == lg.vertices();
    let parts = coproduct_decompose(&fl)?;
    let lat = lat_peg(p)?;
    let dual = lat_peg(&dual_peg(p)?)?;
    let coproduct_matches = parts.len() == 2
        && ((lattice_isomorphic(&parts[0], &lat)? && lattice_isomorphic(&parts[1], &dual)?)
            || (lattice_isomorphic(&parts[0], &dual)? && lattice_isomorphic(&parts[1], &lat)?));
    let report = LeviFlatsReport {
        levi_vertices: lg.n(),
        flats: fl.len(),
        height: fl.height(),
        four_part_union,
        jordan_dedekind,
        levi_closed,
        components: parts.iter().map(|c| c.len()).collect(),
        coproduct_matches,
    };
    if !(four_part_union && jordan_dedekind && levi_closed && coproduct_matches) {
        return Err(Error::TheoremViolation(format!("Levi flats structure fails: {report:?}")));
    }
    Ok(report)
}

/// c-independent sets of the Levi graph from the geometry alone: every set
/// of at most two vertices, and the triples meeting some line (as points)
/// or some pencil (as lines) in exactly two elements.
pub fn levi_independents(p: &Peg) -> Result<SetFamily> {
    require_nice(p, "levi_independents")?;
    let m = p.n_points;
    let total = m + p.lines.len();
    if total > 64 {
        return Err(Error::Capacity(total));
    }
    let pencils: Vec<VertexSet> =
        (0..m).map(|x| VertexSet::from_iter(p.pencil(x).into_iter().map(|i| m + i))).collect();
    let members = subsets_up_to(VertexSet::full(total), 3).into_iter().filter(|w| {
        w.len() <= 2
            || p.lines.iter().any(|l| (*w & *l).len() == 2)
            || pencils.iter().any(|q| (*w & *q).len() == 2)
    });
    Ok(SetFamily::new(VertexSet::full(total), members))
}

/// Restricted Hasse graph of `Fl G` against `Levi(Geo G)`, for SC3 graphs
/// of minimum degree at least 2.
pub fn hasse_matches_levi(g: &Graph) -> Result<bool> {
    if g.min_degree().unwrap_or(0) < 2 {
        return Err(Error::Precondition("needs minimum degree at least 2".into()));
    }
    let geo = geo(g)?;
    graphs_isomorphic(&flats(g)?.restricted_hasse_graph()?, &levi(&geo)?)
}

pub fn fano() -> Peg {
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    validate_peg(7, &lines.map(VertexSet::from_iter)).expect("Fano plane")
}

/// Points are the 2-subsets of a 5-set and lines the 3-subsets, a point
/// lying on a line when contained in it.
pub fn desargues() -> Peg {
    let pairs = two_subsets(5);
    let mut lines = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                let t = [a, b, c];
                lines.push(VertexSet::from_iter(
                    (0..pairs.len()).filter(|&i| t.contains(&pairs[i].0) && t.contains(&pairs[i].1)),
                ));
            }
        }
    }
    validate_peg(10, &lines).expect("Desargues configuration")
}

pub fn k3_peg() -> Peg {
    Peg::from_graph(&crate::graph::complete(3).unwrap()).unwrap()
}

/// Fixture lookup by name.
pub fn peg_fixture(name: &str) -> Result<Peg> {
    match name {
        "fano" => Ok(fano()),
        "desargues" => Ok(desargues()),
        "k3" => Ok(k3_peg()),
        _ => Err(Error::UnknownGraph(name.to_string())),
    }
}
