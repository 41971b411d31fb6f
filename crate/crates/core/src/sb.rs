//! The superboolean semiring and matrices over it.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

use crate::error::{check_limit, Error, Result};
use crate::limits;

/// An element of `{0, 1, 1ν}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SBValue {
    Zero,
    One,
    OneNu,
}

impl Add for SBValue {
    type Output = SBValue;
    fn add(self, o: SBValue) -> SBValue {
        use SBValue::*;
        match (self, o) {
            (Zero, x) | (x, Zero) => x,
            _ => OneNu,
        }
    }
}

impl Mul for SBValue {
    type Output = SBValue;
    fn mul(self, o: SBValue) -> SBValue {
        use SBValue::*;
        match (self, o) {
            (Zero, _) | (_, Zero) => Zero,
            (One, One) => One,
            _ => OneNu,
        }
    }
}

impl fmt::Display for SBValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SBValue::Zero => "0",
            SBValue::One => "1",
            SBValue::OneNu => "1ν",
        })
    }
}

impl SBValue {
    pub const ALL: [SBValue; 3] = [SBValue::Zero, SBValue::One, SBValue::OneNu];

    pub fn from_bool(b: bool) -> SBValue {
        if b {
            SBValue::One
        } else {
            SBValue::Zero
        }
    }
}

/// Dense row-major matrix over the superboolean semiring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SBMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<SBValue>,
}

impl SBMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<SBValue>) -> Result<SBMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(SBMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> SBMatrix {
        SBMatrix {
            rows,
            cols,
            entries: vec![SBValue::Zero; rows * cols],
        }
    }

    pub fn identity(n: usize) -> SBMatrix {
        SBMatrix::from_fn(n, n, |i, j| SBValue::from_bool(i == j))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> SBValue) -> SBMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        SBMatrix { rows, cols, entries }
    }

    /// Builds a boolean matrix from rows of 0/1 values.
    pub fn from_bool_rows(rows: &[Vec<u8>]) -> Result<SBMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            for &x in r {
                entries.push(match x {
                    0 => SBValue::Zero,
                    1 => SBValue::One,
                    _ => return Err(Error::Shape(format!("entry {x} is not boolean"))),
                });
            }
        }
        Ok(SBMatrix { rows: rows.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> SBValue {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SBValue) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_boolean(&self) -> bool {
        self.entries.iter().all(|&x| x != SBValue::OneNu)
    }

    pub fn transpose(&self) -> SBMatrix {
        SBMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<SBMatrix> {
        for &i in rows {
            if i >= self.rows {
                return Err(Error::Shape(format!("row index {i} out of range {}", self.rows)));
            }
        }
        for &j in cols {
            if j >= self.cols {
                return Err(Error::Shape(format!("column index {j} out of range {}", self.cols)));
            }
        }
        Ok(SBMatrix::from_fn(rows.len(), cols.len(), |a, b| self.get(rows[a], cols[b])))
    }

    /// Bit masks of the `1` entries and of the nonzero entries of row `i`.
    fn row_masks(&self, i: usize) -> (u64, u64) {
        let mut one = 0u64;
        let mut nonzero = 0u64;
        for j in 0..self.cols {
            match self.get(i, j) {
                SBValue::Zero => {}
                SBValue::One => {
                    one |= 1 << j;
                    nonzero |= 1 << j;
                }
                SBValue::OneNu => nonzero |= 1 << j,
            }
        }
        (one, nonzero)
    }
}

impl fmt::Display for SBMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

pub fn permanent(m: &SBMatrix) -> Result<SBValue> {
    permanent_with_limit(m, limits::get().permanent_side)
}

/// Permanent computed by counting permutations with nonzero product.
///
/// Stops as soon as a second one is found, since the sum is then `1ν`.
pub fn permanent_with_limit(m: &SBMatrix, max_side: usize) -> Result<SBValue> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "permanent of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    check_limit("permanent side", m.rows, max_side)?;
    let n = m.rows;
    let mut count = 0usize;
    let mut last = SBValue::Zero;
    fn go(m: &SBMatrix, row: usize, used: u64, acc: SBValue, count: &mut usize, last: &mut SBValue) {
        if *count >= 2 {
            return;
        }
        if row == m.rows {
            *count += 1;
            *last = acc;
            return;
        }
        for j in 0..m.cols {
            if used >> j & 1 == 0 {
                let x = m.get(row, j);
                if x != SBValue::Zero {
                    go(m, row + 1, used | 1 << j, acc * x, count, last);
                }
            }
        }
    }
    go(m, 0, 0, SBValue::One, &mut count, &mut last);
    let _ = n;
    Ok(match count {
        0 => SBValue::Zero,
        1 => last,
        _ => SBValue::OneNu,
    })
}

pub fn is_nonsingular(m: &SBMatrix) -> Result<bool> {
    Ok(permanent(m)? == SBValue::One)
}

/// Nonsingularity by repeatedly removing a marker row and its column.
///
/// Runs in polynomial time and has no size ceiling.
pub fn is_nonsingular_by_markers(m: &SBMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::Shape(format!("{}x{} matrix is not square", m.rows, m.cols)));
    }
    let mut rows: Vec<usize> = (0..m.rows).collect();
    let mut cols: Vec<usize> = (0..m.cols).collect();
    while !rows.is_empty() {
        let mut peeled = false;
        for (ri, &r) in rows.iter().enumerate() {
            let nz: Vec<usize> = (0..cols.len()).filter(|&c| m.get(r, cols[c]) != SBValue::Zero).collect();
            if nz.len() == 1 {
                if m.get(r, cols[nz[0]]) != SBValue::One {
                    return Ok(false);
                }
                rows.remove(ri);
                cols.remove(nz[0]);
                peeled = true;
                break;
            }
            if nz.is_empty() {
                return Ok(false);
            }
        }
        if !peeled {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for row and column orderings that make `m` lower triangular with
/// a diagonal of `1`s.
///
/// Every choice of marker is explored, so a `None` means no such form exists.
pub fn triangular_form(m: &SBMatrix) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if !m.is_square() {
        return Err(Error::Shape(format!("{}x{} matrix is not square", m.rows, m.cols)));
    }
    check_limit("triangular search side", m.rows, limits::get().rank_side)?;
    let n = m.rows;
    let masks: Vec<(u64, u64)> = (0..n).map(|i| m.row_masks(i)).collect();
    let mut row_order = Vec::with_capacity(n);
    let mut col_order = Vec::with_capacity(n);
    fn go(
        masks: &[(u64, u64)],
        rows_left: u64,
        cols_left: u64,
        row_order: &mut Vec<usize>,
        col_order: &mut Vec<usize>,
    ) -> bool {
        if rows_left == 0 {
            return true;
        }
        for r in crate::bitset::VertexSet(rows_left) {
            let (one, nz) = masks[r];
            let live = nz & cols_left;
            if live.count_ones() == 1 && one & live == live {
                let c = live.trailing_zeros() as usize;
                row_order.push(r);
                col_order.push(c);
                if go(masks, rows_left & !(1 << r), cols_left & !(1 << c), row_order, col_order) {
                    return true;
                }
                row_order.pop();
                col_order.pop();
            }
        }
        false
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(go(&masks, all, all, &mut row_order, &mut col_order).then_some((row_order, col_order)))
}

pub fn is_witness(m: &SBMatrix, rows: &[usize], cols: &[usize]) -> Result<bool> {
    if rows.len() != cols.len() {
        return Err(Error::Shape(format!(
            "witness has {} rows for {} columns",
            rows.len(),
            cols.len()
        )));
    }
    is_nonsingular_by_markers(&m.submatrix(rows, cols)?)
}

/// Rank together with a witness: the largest `k` with a nonsingular `k x k`
/// submatrix, and its row and column indices in triangular order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankWitness {
    pub rank: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

pub fn sb_rank(m: &SBMatrix) -> Result<usize> {
    Ok(sb_rank_witness(m)?.rank)
}

/// Branch-and-bound over column subsets.
///
/// A nonsingular submatrix is built from its last row upwards: a new pair
/// `(i, j)` is admissible when `m[i][j] = 1` and row `i` vanishes on the
/// columns already chosen.
pub fn sb_rank_witness(m: &SBMatrix) -> Result<RankWitness> {
    check_limit("rank side", m.rows.min(m.cols), limits::get().rank_side)?;
    if m.rows > 64 || m.cols > 64 {
        if m.rows <= 64 && m.cols > 64 {
            let t = sb_rank_witness(&m.transpose())?;
            return Ok(RankWitness { rank: t.rank, rows: t.cols, cols: t.rows });
        }
        return Err(Error::SizeLimit { what: "matrix dimension", actual: m.rows.max(m.cols), limit: 64 });
    }
    let masks: Vec<(u64, u64)> = (0..m.rows).map(|i| m.row_masks(i)).collect();
    let mut order: Vec<usize> = (0..m.cols).collect();
    let zeros = |j: usize| (0..m.rows).filter(|&i| m.get(i, j) == SBValue::Zero).count();
    order.sort_by_key(|&j| (std::cmp::Reverse(zeros(j)), j));
    let mut s = RankSearch {
        masks: &masks,
        order: &order,
        target: None,
        best: Vec::new(),
        path: Vec::new(),
        seen: HashSet::new(),
        ceiling: m.rows.min(m.cols),
    };
    s.dfs(0);
    let mut pairs = s.best;
    pairs.reverse();
    Ok(RankWitness {
        rank: pairs.len(),
        rows: pairs.iter().map(|p| p.0).collect(),
        cols: pairs.iter().map(|p| p.1).collect(),
    })
}

/// Rows `I` such that `m[I, cols]` is nonsingular, if any exist.
pub fn find_witness_rows(m: &SBMatrix, cols: &[usize]) -> Result<Option<Vec<usize>>> {
    if m.rows > 64 || m.cols > 64 {
        return Err(Error::SizeLimit { what: "matrix dimension", actual: m.rows.max(m.cols), limit: 64 });
    }
    let mut target = 0u64;
    for &j in cols {
        if j >= m.cols {
            return Err(Error::Shape(format!("column index {j} out of range {}", m.cols)));
        }
        target |= 1 << j;
    }
    if target.count_ones() as usize != cols.len() {
        return Err(Error::Shape("repeated column index".into()));
    }
    let masks: Vec<(u64, u64)> = (0..m.rows).map(|i| m.row_masks(i)).collect();
    let order: Vec<usize> = cols.to_vec();
    let mut s = RankSearch {
        masks: &masks,
        order: &order,
        target: Some(target),
        best: Vec::new(),
        path: Vec::new(),
        seen: HashSet::new(),
        ceiling: cols.len(),
    };
    s.dfs(0);
    if s.best.len() == cols.len() {
        let mut pairs = s.best;
        pairs.reverse();
        // report rows aligned with the caller's column order
        let rows = cols
            .iter()
            .map(|j| pairs.iter().find(|p| p.1 == *j).map(|p| p.0).unwrap_or(usize::MAX))
            .collect();
        Ok(Some(rows))
    } else {
        Ok(None)
    }
}

struct RankSearch<'a> {
    masks: &'a [(u64, u64)],
    order: &'a [usize],
    target: Option<u64>,
    best: Vec<(usize, usize)>,
    path: Vec<(usize, usize)>,
    seen: HashSet<u64>,
    ceiling: usize,
}

impl RankSearch<'_> {
    fn dfs(&mut self, chosen: u64) {
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        if self.best.len() >= self.ceiling {
            return;
        }
        let allowed = self.target.unwrap_or(u64::MAX);
        let mut avail = 0u64;
        let mut free_rows = 0usize;
        for &(one, nz) in self.masks {
            if nz & chosen == 0 {
                free_rows += 1;
                avail |= one & allowed;
            }
        }
        let bound = self.path.len() + (avail.count_ones() as usize).min(free_rows);
        if bound <= self.best.len() {
            return;
        }
        for &j in self.order {
            if avail >> j & 1 == 0 {
                continue;
            }
            let next = chosen | 1 << j;
            if !self.seen.insert(next) {
                continue;
            }
            let i = self
                .masks
                .iter()
                .position(|&(one, nz)| nz & chosen == 0 && one >> j & 1 == 1)
                .expect("available column has a row");
            self.path.push((i, j));
            self.dfs(next);
            self.path.pop();
            if self.best.len() >= self.ceiling {
                return;
            }
        }
    }
}

/// Index of the first row of a nonsingular matrix with exactly one nonzero
/// entry, which is then a `1`.
pub fn find_marker_row(m: &SBMatrix) -> Result<usize> {
    if !is_nonsingular_by_markers(m)? {
        return Err(Error::Precondition("find_marker_row needs a nonsingular matrix".into()));
    }
    (0..m.rows)
        .find(|&i| {
            let (one, nz) = m.row_masks(i);
            nz.count_ones() == 1 && one == nz
        })
        .ok_or_else(|| Error::TheoremViolation("nonsingular matrix without a marker row".into()))
}
