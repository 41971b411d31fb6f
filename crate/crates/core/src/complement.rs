//! c-rank of a graph against c-rank of its complement.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{check_limit, Error, Result};
use crate::flats::{c_rank, dual_star_lattice, is_c_independent};
use crate::graph::Graph;
use crate::limits;

#[derive(Debug, Clone, Serialize)]
pub struct RankSumReport {
    pub n: usize,
    pub c_rank: usize,
    pub c_rank_complement: usize,
    pub sum: usize,
    /// `√2·n + 1`, for display only; the check itself is exact.
    pub sqrt2_bound: f64,
    pub chromatic_number: usize,
    /// `⌈n / χ⌉`, the least integer the complement's c-rank must reach.
    pub chromatic_bound: usize,
}

/// `sum < √2·n + 1`, decided as `(sum − 1)² < 2n²`.
pub fn below_sqrt2_bound(sum: usize, n: usize) -> bool {
    sum == 0 || (sum - 1).pow(2) < 2 * n * n
}

pub fn rank_sum_report(g: &Graph) -> Result<RankSumReport> {
    check_limit("complement analysis vertices", g.n(), limits::get().complement_vertices)?;
    let n = g.n();
    let a = c_rank(g)?;
    let b = complement_rank_both_ways(g)?;
    let chi = g.chromatic_number()?;
    let r = RankSumReport {
        n,
        c_rank: a,
        c_rank_complement: b,
        sum: a + b,
        sqrt2_bound: std::f64::consts::SQRT_2 * n as f64 + 1.0,
        chromatic_number: chi,
        chromatic_bound: if chi == 0 { 0 } else { n.div_ceil(chi) },
    };
    if !below_sqrt2_bound(r.sum, n) {
        return Err(Error::TheoremViolation(format!("rank sum {} reaches sqrt(2)*{n}+1", r.sum)));
    }
    // b ≥ n/χ  ⟺  b·χ ≥ n
    if b * chi < n {
        return Err(Error::TheoremViolation(format!("complement c-rank {b} below {n}/{chi}")));
    }
    Ok(r)
}

/// c-rank of the complement, from the closed stars and directly.
pub fn complement_rank_both_ways(g: &Graph) -> Result<usize> {
    let via_stars = dual_star_lattice(g)?.height();
    let direct = c_rank(&g.complement())?;
    if via_stars != direct {
        return Err(Error::TheoremViolation(format!(
            "closed-star lattice height {via_stars} but complement c-rank {direct}"
        )));
    }
    Ok(direct)
}

/// A set without internal edges in `g` that is not c-independent in the
/// complement, if any.
pub fn classical_independence_violation(g: &Graph) -> Result<Option<VertexSet>> {
    let h = g.complement();
    for bits in 0u64..1 << g.n() {
        let w = VertexSet(bits);
        if g.is_independent_set(w) && is_c_independent(&h, w)?.is_none() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// A set c-independent in the complement that has an internal edge in `g`.
pub fn converse_counterexample(g: &Graph) -> Result<Option<VertexSet>> {
    let h = g.complement();
    for bits in 0u64..1 << g.n() {
        let w = VertexSet(bits);
        if !g.is_independent_set(w) && is_c_independent(&h, w)?.is_some() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Extremes of the rank sum among the given graphs of each order.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub graphs: usize,
    pub min_sum: usize,
    pub max_sum: usize,
    /// Fewest edges of a graph reaching `max_sum`.
    pub min_edges_at_max: usize,
}

pub fn rank_sum_sweep(graphs: &[Graph]) -> Result<Vec<SweepRow>> {
    let mut rows: Vec<SweepRow> = Vec::new();
    for g in graphs {
        let s = c_rank(g)? + c_rank(&g.complement())?;
        let e = g.edge_count();
        match rows.iter_mut().find(|r| r.n == g.n()) {
            Some(r) => {
                r.graphs += 1;
                r.min_sum = r.min_sum.min(s);
                if s > r.max_sum {
                    r.max_sum = s;
                    r.min_edges_at_max = e;
                } else if s == r.max_sum {
                    r.min_edges_at_max = r.min_edges_at_max.min(e);
                }
            }
            None => rows.push(SweepRow { n: g.n(), graphs: 1, min_sum: s, max_sum: s, min_edges_at_max: e }),
        }
    }
    rows.sort_by_key(|r| r.n);
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, path};

    #[test]
    fn petersen_complement() {
        let r = rank_sum_report(&crate::catalog::petersen()).unwrap();
        assert_eq!((r.c_rank, r.c_rank_complement, r.sum), (3, 5, 8));
        assert!((r.sqrt2_bound - 15.142).abs() < 1e-3);
    }

    #[test]
    fn extreme_sums() {
        for n in 4..9 {
            assert_eq!(rank_sum_report(&path(n).unwrap()).unwrap().sum, n + 2);
        }
        for h in 2..5 {
            assert_eq!(rank_sum_report(&complete_bipartite(h, h).unwrap()).unwrap().sum, h + 2);
        }
        assert_eq!(complement_rank_both_ways(&complete(5).unwrap()).unwrap(), 1);
    }

    #[test]
    fn exact_bound() {
        assert!(below_sqrt2_bound(15, 10));
        assert!(!below_sqrt2_bound(16, 10));
        assert!(below_sqrt2_bound(0, 0));
    }

    #[test]
    fn converse_fails_on_a_path() {
        let g = path(3).unwrap();
        assert_eq!(classical_independence_violation(&g).unwrap(), None);
        let w = converse_counterexample(&g).unwrap().unwrap();
        assert!(!g.is_independent_set(w));
    }
}
