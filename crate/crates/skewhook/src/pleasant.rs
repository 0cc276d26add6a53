//! Pleasant diagrams and the reverse-plane-partition q-series.
//!
//! A subset `S` of `[lam]` is pleasant for `lam/mu` when, for every content
//! `k`, the longest strictly south-east chain of `S` inside the largest
//! `i x (i+k)` rectangle anchored at (1,1) is at most the length of the
//! content-`k` diagonal of the skew shape. Equivalently `S` is contained in
//! the complement of some excited diagram; both characterizations are
//! implemented and their agreement is part of the test battery.

use crate::error::{Error, Result};
use crate::excited::excited_diagrams;
use crate::qseries::QSeries;
use crate::shapes::{anchored_rectangle, Cell, SkewShape};
use crate::Int;
use num_traits::One;
use std::collections::BTreeSet;

/// Longest chain `(i_1,j_1) < (i_2,j_2) < ...` (both coordinates strictly
/// increasing) within a cell set.
fn longest_descending_chain(cells: &[Cell]) -> usize {
    let mut sorted = cells.to_vec();
    sorted.sort();
    let mut best = vec![0usize; sorted.len()];
    let mut overall = 0;
    for i in 0..sorted.len() {
        let mut b = 1;
        for j in 0..i {
            if sorted[j].row < sorted[i].row && sorted[j].col < sorted[i].col {
                b = b.max(best[j] + 1);
            }
        }
        best[i] = b;
        overall = overall.max(b);
    }
    overall
}

/// The defining chain-bound test for pleasant diagrams.
pub fn is_pleasant(cells: &BTreeSet<Cell>, shape: &SkewShape) -> Result<bool> {
    let lam = shape.outer();
    for c in cells {
        if !lam.has_cell(*c) {
            return Err(Error::Domain(format!("cell {} outside {}", c, lam)));
        }
    }
    let lo = 1 - lam.len() as i64;
    let hi = lam.part(1) as i64 - 1;
    for k in lo..=hi {
        let Some((rows, cols)) = anchored_rectangle(lam, k) else {
            continue;
        };
        let restricted: Vec<Cell> = cells
            .iter()
            .copied()
            .filter(|c| c.row <= rows && c.col <= cols)
            .collect();
        if longest_descending_chain(&restricted) > shape.content_diagonal_length(k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The excited-diagram characterization: `S` is pleasant iff it avoids some
/// excited diagram entirely.
pub fn is_pleasant_via_excited(cells: &BTreeSet<Cell>, shape: &SkewShape) -> Result<bool> {
    let diagrams = excited_diagrams(shape)?;
    Ok(diagrams
        .iter()
        .any(|d| d.cells().intersection(cells).next().is_none()))
}

/// `p(lam/mu)` by scanning all subsets of `[lam]` with the defining test.
pub fn enumerate_pleasant(shape: &SkewShape, cap: usize) -> Result<Int> {
    let cells = shape.outer().cells();
    let n = cells.len();
    if n > cap {
        return Err(Error::Resource(format!(
            "subset scan over 2^{} cells exceeds the cap 2^{}",
            n, cap
        )));
    }
    let mut count = Int::from(0);
    for mask in 0u64..(1u64 << n) {
        let subset: BTreeSet<Cell> = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &c)| c)
            .collect();
        if is_pleasant(&subset, shape)? {
            count += 1;
        }
    }
    Ok(count)
}

/// `p(lam/mu)` by the excited-peak formula: each non-intersecting tuple
/// (equivalently, excited diagram) contributes `2^(|lam/mu| - expeaks)`.
pub fn count_pleasant(shape: &SkewShape) -> Result<Int> {
    let n = shape.size();
    let mut total = Int::from(0);
    for d in excited_diagrams(shape)? {
        total += Int::one() << (n - d.expeaks());
    }
    Ok(total)
}

/// The reverse-plane-partition series by the hook-weighted pleasant sum and
/// by the excited-peak form, truncated at `order`.
///
/// The excited form is
/// `sum_D q^{a'(D)} prod_{u not in D} 1/(1 - q^{h(u)})` where
/// `a'(D)` adds the hook lengths of the excited peaks. For small shapes
/// (`|lam| <= pleasant_cap`) the definitional sum over pleasant diagrams
/// `sum_S prod_{u in S} q^{h(u)}/(1-q^{h(u)})` is also computed and the two
/// must agree exactly; a mismatch is a consistency error.
pub fn rpp_series_nhlf(shape: &SkewShape, order: usize, pleasant_cap: usize) -> Result<QSeries> {
    let lam = shape.outer();
    let all_cells = lam.cells();
    let diagrams = excited_diagrams(shape)?;

    let mut excited_form = QSeries::zero_with_order(order);
    for d in &diagrams {
        let a_prime: usize = d
            .peaks()
            .iter()
            .map(|&u| lam.hook(u).expect("peak inside shape"))
            .sum();
        let mut term = QSeries::q_power(a_prime).truncated(order);
        for &u in &all_cells {
            if d.cells().contains(&u) {
                continue;
            }
            term = &term * &QSeries::geom(lam.hook(u)?, order)?;
        }
        excited_form = &excited_form + &term;
    }

    if all_cells.len() <= pleasant_cap {
        let pleasant_form = rpp_series_pleasant_sum(shape, order)?;
        if !excited_form.agrees_with(&pleasant_form) {
            return Err(Error::Consistency(format!(
                "pleasant-sum and excited-peak forms disagree for {}",
                shape
            )));
        }
    }
    Ok(excited_form)
}

/// The definitional pleasant-diagram sum, enumerated over subsets of the
/// excited complements (each pleasant diagram counted once).
pub fn rpp_series_pleasant_sum(shape: &SkewShape, order: usize) -> Result<QSeries> {
    let lam = shape.outer();
    let all: BTreeSet<Cell> = lam.cells().into_iter().collect();
    let diagrams = excited_diagrams(shape)?;
    let mut seen: BTreeSet<Vec<Cell>> = BTreeSet::new();
    let mut total = QSeries::zero_with_order(order);
    for d in &diagrams {
        let comp: Vec<Cell> = all.iter().copied().filter(|c| !d.cells().contains(c)).collect();
        let m = comp.len();
        for mask in 0u64..(1u64 << m) {
            let subset: Vec<Cell> = comp
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &c)| c)
                .collect();
            if !seen.insert(subset.clone()) {
                continue;
            }
            let mut term = QSeries::one().truncated(order);
            for &u in &subset {
                let h = lam.hook(u)?;
                term = &term * &QSeries::q_power(h);
                term = &term * &QSeries::geom(h, order)?;
            }
            total = &total + &term;
        }
    }
    Ok(total.truncated(order))
}

// ---------------------------------------------------------------------------
// Dyck paths and their peak statistics
// ---------------------------------------------------------------------------

/// A Dyck path of length `2n` as its `2n+1` lattice points `(a, b)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DyckPath {
    pub points: Vec<(usize, usize)>,
}

impl DyckPath {
    /// Peaks: interior points with both neighbours one lower.
    pub fn peaks(&self) -> Vec<(usize, usize)> {
        (1..self.points.len().saturating_sub(1))
            .filter(|&i| {
                self.points[i - 1].1 + 1 == self.points[i].1
                    && self.points[i + 1].1 + 1 == self.points[i].1
            })
            .map(|i| self.points[i])
            .collect()
    }

    /// Peaks of height greater than one.
    pub fn high_peaks(&self) -> Vec<(usize, usize)> {
        self.peaks().into_iter().filter(|p| p.1 > 1).collect()
    }

    /// `H(p) = sum over high peaks (c,d) of (2d+1)`.
    pub fn high_peak_hook_sum(&self) -> usize {
        self.high_peaks().iter().map(|p| 2 * p.1 + 1).sum()
    }

    /// Number of points that are not high peaks.
    pub fn non_high_peak_count(&self) -> usize {
        self.points.len() - self.high_peaks().len()
    }
}

/// All Dyck paths of length `2n` (from (0,0) to (2n,0), never below 0).
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut pts = vec![(0usize, 0usize)];
    fn rec(n: usize, pts: &mut Vec<(usize, usize)>, out: &mut Vec<DyckPath>) {
        let (x, y) = *pts.last().unwrap();
        if x == 2 * n {
            if y == 0 {
                out.push(DyckPath { points: pts.clone() });
            }
            return;
        }
        if 2 * n - x > y {
            pts.push((x + 1, y + 1));
            rec(n, pts, out);
            pts.pop();
        }
        if y > 0 {
            pts.push((x + 1, y - 1));
            rec(n, pts, out);
            pts.pop();
        }
    }
    rec(n, &mut pts, &mut out);
    out
}

/// Free-ended ballot paths: length `2n`, steps +-1, never below 0, any final
/// height. There are `C(2n, n)` of them.
pub fn ballot_paths(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut pts = vec![(0usize, 0usize)];
    fn rec(n: usize, pts: &mut Vec<(usize, usize)>, out: &mut Vec<DyckPath>) {
        let (x, y) = *pts.last().unwrap();
        if x == 2 * n {
            out.push(DyckPath { points: pts.clone() });
            return;
        }
        pts.push((x + 1, y + 1));
        rec(n, pts, out);
        pts.pop();
        if y > 0 {
            pts.push((x + 1, y - 1));
            rec(n, pts, out);
            pts.pop();
        }
    }
    rec(n, &mut pts, &mut out);
    out
}

/// A path together with its high peaks and its count of non-high-peak points.
pub type PeakStats = (DyckPath, Vec<(usize, usize)>, usize);

/// Per-path peak statistics for all Dyck paths of length `2n`.
pub fn dyck_peak_stats(n: usize) -> Vec<PeakStats> {
    dyck_paths(n)
        .into_iter()
        .map(|p| {
            let hp = p.high_peaks();
            let np = p.non_high_peak_count();
            (p, hp, np)
        })
        .collect()
}

/// Little Schröder numbers via the Narayana sum
/// `s_n = sum_k N(n,k) 2^{k-1}` with `N(n,k) = C(n,k) C(n,k-1) / n`.
pub fn schroeder_number(n: usize) -> Int {
    if n == 0 {
        return Int::one();
    }
    let mut total = Int::from(0);
    for k in 1..=n {
        let nar = crate::binomial(n, k) * crate::binomial(n, k - 1) / Int::from(n);
        total += nar << (k - 1);
    }
    total
}
