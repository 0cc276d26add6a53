//! Border-strip decompositions, non-intersecting path tuples, ladder moves,
//! and the weighted Lindström–Gessel–Viennot determinant.
//!
//! The decomposition peels maximal outer border strips `theta_1, ...,
//! theta_k` off the shape, outermost first; `theta_1` is the cutting strip.
//! Substrips of the cutting strip are addressed by content intervals
//! `phi[p,q]`, with the conventions `phi[p,p] = (1)`, `phi[p+1,p] = empty`,
//! and `phi[p,q]` undefined when `p > q+1`.
//!
//! The path tuple with support exactly the skew diagram (the Kreiman
//! decomposition) has its endpoints on the outer border strip of `lam`, at
//! the same contents as the decomposition strips' endpoints; paths are
//! reconstructed from supports greedily (step right when possible, else up),
//! innermost path first. The reconstruction validates everything it assumes
//! and fails loudly on any counterexample.

use crate::error::{Error, Result};
use crate::qseries::Ring;
use crate::shapes::{Cell, Partition, SkewShape};
use std::collections::{BTreeMap, BTreeSet};

/// A border strip: a connected skew shape with no 2x2 square, stored as
/// cells ordered by content (south-west endpoint first).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BorderStrip {
    // nonempty by construction
    cells: Vec<Cell>,
}

impl BorderStrip {
    /// Builds a strip from cells, verifying the border-strip property:
    /// exactly one cell per content, consecutive contents, adjacent cells.
    pub fn new(mut cells: Vec<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::Domain("border strip cannot be empty".into()));
        }
        cells.sort_by_key(|c| c.content());
        for w in cells.windows(2) {
            let adjacent = (w[1].row == w[0].row && w[1].col == w[0].col + 1)
                || (w[1].row + 1 == w[0].row && w[1].col == w[0].col);
            if w[1].content() != w[0].content() + 1 || !adjacent {
                return Err(Error::Domain(format!(
                    "cells {:?} do not form a border strip",
                    cells
                )));
            }
        }
        Ok(BorderStrip { cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// Content of the south-west endpoint.
    pub fn start_content(&self) -> i64 {
        self.cells.first().unwrap().content()
    }

    /// Content of the north-east endpoint.
    pub fn end_content(&self) -> i64 {
        self.cells.last().unwrap().content()
    }

    pub fn start(&self) -> Cell {
        *self.cells.first().unwrap()
    }

    pub fn end(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    /// Normalize to an anchored skew shape by minimal translation.
    pub fn to_skew_shape(&self) -> SkewShape {
        let rmin = self.cells.iter().map(|c| c.row).min().unwrap();
        let cmin = self.cells.iter().map(|c| c.col).min().unwrap();
        let mut rows: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for c in &self.cells {
            let (r, s) = (c.row - rmin + 1, c.col - cmin + 1);
            let e = rows.entry(r).or_insert((s, s));
            e.0 = e.0.min(s);
            e.1 = e.1.max(s);
        }
        let nrows = *rows.keys().max().unwrap();
        let mut outer = Vec::with_capacity(nrows);
        let mut inner = Vec::with_capacity(nrows);
        for r in 1..=nrows {
            let (lo, hi) = rows[&r];
            outer.push(hi);
            inner.push(lo - 1);
        }
        SkewShape::new(
            Partition::new(outer).expect("strip rows weakly decrease"),
            Partition::new(inner).expect("strip inner rows weakly decrease"),
        )
        .expect("strip normalization is a skew shape")
    }
}

/// The outer border strip of a straight shape: all cells touching the
/// south-east boundary, i.e. `lam/(lam_2 - 1, lam_3 - 1, ...)`.
pub fn outer_border_strip(lam: &Partition) -> Result<BorderStrip> {
    if lam.is_empty() {
        return Err(Error::Domain("empty shape has no border strip".into()));
    }
    let inner: Vec<usize> = (2..=lam.len()).map(|i| lam.part(i).saturating_sub(1)).collect();
    let shape = SkewShape::new(lam.clone(), Partition::new(inner)?)?;
    BorderStrip::new(shape.cells())
}

/// The Lascoux–Pragacz decomposition of a connected skew shape into maximal
/// outer border strips, ordered by north-east endpoint content, descending.
pub fn lp_decomposition(shape: &SkewShape) -> Result<Vec<BorderStrip>> {
    if shape.size() == 0 {
        return Err(Error::Domain(format!("empty shape {} has no decomposition", shape)));
    }
    if !shape.connected() {
        return Err(Error::Domain(format!("shape {} is not connected", shape)));
    }
    let mu_cells: BTreeSet<Cell> = shape.inner().cells().into_iter().collect();
    let mut cur = shape.outer().clone();
    let mut strips: Vec<BorderStrip> = Vec::new();
    let mut remaining = shape.size();
    while remaining > 0 {
        let rim = outer_border_strip(&cur)?;
        let free: Vec<Cell> = rim
            .cells()
            .iter()
            .copied()
            .filter(|c| !mu_cells.contains(c))
            .collect();
        for comp in components(&free) {
            remaining -= comp.len();
            strips.push(BorderStrip::new(comp)?);
        }
        // remove the rim, but never cut into the inner shape
        let next: Vec<usize> = (2..=cur.len())
            .map(|i| cur.part(i).saturating_sub(1).max(shape.inner().part(i - 1)))
            .collect();
        cur = Partition::new(next)?;
    }
    strips.sort_by_key(|s| -s.end_content());
    for w in strips.windows(2) {
        if w[0].end_content() == w[1].end_content() {
            return Err(Error::Consistency(format!(
                "ambiguous strip order in {}: two strips end at content {}",
                shape,
                w[0].end_content()
            )));
        }
    }
    Ok(strips)
}

fn components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    let mut left: BTreeSet<Cell> = set.clone();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        let mut comp = vec![start];
        let mut stack = vec![start];
        left.remove(&start);
        while let Some(c) = stack.pop() {
            let mut nbrs = vec![
                Cell::new(c.row + 1, c.col),
                Cell::new(c.row, c.col + 1),
            ];
            if c.row > 1 {
                nbrs.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                nbrs.push(Cell::new(c.row, c.col - 1));
            }
            for n in nbrs {
                if left.remove(&n) {
                    comp.push(n);
                    stack.push(n);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// A substrip of the cutting strip selected by a content interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Substrip {
    Strip(BorderStrip),
    Empty,
    Undefined,
}

/// The substrip `phi[p,q]` of `tau`: its cells with contents in `p..=q`.
/// `phi[p+1,p]` is the empty strip and `phi[p,q]` with `p > q+1` is the
/// distinguished undefined value.
pub fn substrip(tau: &BorderStrip, p: i64, q: i64) -> Result<Substrip> {
    if p > q + 1 {
        return Ok(Substrip::Undefined);
    }
    if p == q + 1 {
        return Ok(Substrip::Empty);
    }
    let by_content: BTreeMap<i64, Cell> =
        tau.cells().iter().map(|&c| (c.content(), c)).collect();
    let cells: Vec<Cell> = (p..=q)
        .map(|c| {
            by_content.get(&c).copied().ok_or_else(|| {
                Error::Domain(format!("cutting strip has no cell of content {}", c))
            })
        })
        .collect::<Result<_>>()?;
    Ok(Substrip::Strip(BorderStrip::new(cells)?))
}

/// `theta_i # theta_j = phi[p(theta_j), q(theta_i)]` inside the cutting
/// strip `dec[0]`; indices are 0-based into the decomposition.
pub fn theta_hash(dec: &[BorderStrip], i: usize, j: usize) -> Result<Substrip> {
    if dec.is_empty() || i >= dec.len() || j >= dec.len() {
        return Err(Error::Domain("theta_hash index out of range".into()));
    }
    substrip(&dec[0], dec[j].start_content(), dec[i].end_content())
}

// ---------------------------------------------------------------------------
// Path tuples
// ---------------------------------------------------------------------------

/// An ordered tuple of pairwise-disjoint up/right lattice paths in a Young
/// diagram, with fixed endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathTuple {
    paths: Vec<Vec<Cell>>,
    endpoints: Vec<(Cell, Cell)>,
}

impl PathTuple {
    pub fn paths(&self) -> &[Vec<Cell>] {
        &self.paths
    }

    pub fn endpoints(&self) -> &[(Cell, Cell)] {
        &self.endpoints
    }

    /// Union of the paths' cells.
    pub fn support(&self) -> BTreeSet<Cell> {
        self.paths.iter().flatten().copied().collect()
    }
}

/// Endpoints for the non-intersecting path tuples of a connected skew shape:
/// the cells of `lam`'s outer border strip whose contents are the start and
/// end contents of the decomposition strips.
pub fn kreiman_endpoints(shape: &SkewShape) -> Result<Vec<(Cell, Cell)>> {
    let dec = lp_decomposition(shape)?;
    let rim = outer_border_strip(shape.outer())?;
    let by_content: BTreeMap<i64, Cell> =
        rim.cells().iter().map(|&c| (c.content(), c)).collect();
    dec.iter()
        .map(|s| {
            let a = by_content.get(&s.start_content()).copied().ok_or_else(|| {
                Error::Consistency(format!(
                    "no rim cell of content {} in {}",
                    s.start_content(),
                    shape
                ))
            })?;
            let b = by_content.get(&s.end_content()).copied().ok_or_else(|| {
                Error::Consistency(format!(
                    "no rim cell of content {} in {}",
                    s.end_content(),
                    shape
                ))
            })?;
            Ok((a, b))
        })
        .collect()
}

/// Reconstruct the unique non-intersecting tuple with the given support and
/// endpoints: paths are recovered innermost (last endpoint pair) first, each
/// by the greedy rule "step right when the right cell is unused support,
/// else up". The output is validated: disjoint, support covered exactly,
/// declared endpoints hit. Any violation is a domain error.
pub fn recover_paths(
    support: &BTreeSet<Cell>,
    endpoints: &[(Cell, Cell)],
) -> Result<PathTuple> {
    let mut used: BTreeSet<Cell> = BTreeSet::new();
    let mut paths: Vec<Vec<Cell>> = vec![Vec::new(); endpoints.len()];
    for (idx, &(start, end)) in endpoints.iter().enumerate().rev() {
        if !support.contains(&start) || used.contains(&start) {
            return Err(Error::Domain(format!(
                "support admits no tuple: start {} unavailable",
                start
            )));
        }
        let mut path = vec![start];
        let mut cur = start;
        while cur != end {
            let right = Cell::new(cur.row, cur.col + 1);
            let up = Cell::new(cur.row.wrapping_sub(1), cur.col);
            let free = |c: Cell| support.contains(&c) && !used.contains(&c) && !path.contains(&c);
            cur = if free(right) {
                right
            } else if cur.row > 1 && free(up) {
                up
            } else {
                return Err(Error::Domain(format!(
                    "support admits no tuple: stuck at {} before reaching {}",
                    cur, end
                )));
            };
            path.push(cur);
        }
        used.extend(path.iter().copied());
        paths[idx] = path;
    }
    if used != *support {
        return Err(Error::Domain(
            "support admits no tuple: leftover cells after recovery".into(),
        ));
    }
    Ok(PathTuple {
        paths,
        endpoints: endpoints.to_vec(),
    })
}

/// The unique non-intersecting tuple supported on the whole skew diagram.
pub fn kreiman_decomposition(shape: &SkewShape) -> Result<PathTuple> {
    let endpoints = kreiman_endpoints(shape)?;
    let support: BTreeSet<Cell> = shape.cells().into_iter().collect();
    recover_paths(&support, &endpoints).map_err(|e| {
        Error::Consistency(format!("Kreiman recovery failed for {}: {}", shape, e))
    })
}

/// The ladder move at `u`: the complement-of-support diagram evolves by the
/// excited move at `u`, i.e. the support swaps the corner cell
/// `(u.row+1, u.col+1)` for `u`. Endpoints are preserved; `u` must be an
/// active cell of the complement.
pub fn ladder_move(shape: &SkewShape, tuple: &PathTuple, u: Cell) -> Result<PathTuple> {
    let lam = shape.outer();
    let support = tuple.support();
    let complement: BTreeSet<Cell> = lam
        .cells()
        .into_iter()
        .filter(|c| !support.contains(c))
        .collect();
    if !crate::excited::active_cells(lam, &complement).contains(&u) {
        return Err(Error::Domain(format!(
            "{} is not an active cell of the complement diagram",
            u
        )));
    }
    let mut next = support;
    next.remove(&Cell::new(u.row + 1, u.col + 1));
    next.insert(u);
    let moved = recover_paths(&next, tuple.endpoints())?;
    Ok(moved)
}

// ---------------------------------------------------------------------------
// Weighted Lindström–Gessel–Viennot determinant
// ---------------------------------------------------------------------------

/// Weighted sum over single up/right paths `start -> end` inside `[lam]`:
/// each path contributes the product of `weight` over all its cells.
pub fn path_sum<R: Ring>(
    lam: &Partition,
    start: Cell,
    end: Cell,
    weight: &impl Fn(Cell) -> R,
) -> R {
    if !lam.has_cell(start) || !lam.has_cell(end) {
        return R::zero();
    }
    let rows = lam.len();
    let width = lam.part(1);
    let idx = |c: Cell| (c.row - 1) * width + (c.col - 1);
    let mut table: Vec<R> = vec![R::zero(); rows * width];
    for r in (1..=rows).rev() {
        for s in 1..=lam.part(r) {
            let cell = Cell::new(r, s);
            let mut acc = if cell == start { R::one() } else { R::zero() };
            if s > 1 && lam.has_cell(Cell::new(r, s - 1)) {
                acc = acc + table[idx(Cell::new(r, s - 1))].clone();
            }
            if r < rows && lam.has_cell(Cell::new(r + 1, s)) {
                acc = acc + table[idx(Cell::new(r + 1, s))].clone();
            }
            table[idx(cell)] = weight(cell) * acc;
        }
    }
    table[idx(end)].clone()
}

/// Determinant over any exact commutative ring by Leibniz expansion with the
/// even and odd permutation sums accumulated separately (no negation needed).
/// Intended for the small matrices of strip decompositions.
pub fn ring_det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut even = R::zero();
    let mut odd = R::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    // iterative Heap's algorithm, tracking parity by transposition count
    let mut c = vec![0usize; n];
    let mut parity_even = true;
    let term = |perm: &[usize]| {
        let mut p = R::one();
        for (i, &j) in perm.iter().enumerate() {
            p = p * m[i][j].clone();
        }
        p
    };
    even = even + term(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            parity_even = !parity_even;
            let t = term(&perm);
            if parity_even {
                even = even + t;
            } else {
                odd = odd + t;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    even - odd
}

/// The Lindström–Gessel–Viennot determinant
/// `det[ path_sum(start_j -> end_i) ]` over the given ring. With the
/// endpoints of a skew shape's decomposition this equals the weighted sum
/// over non-intersecting path tuples, i.e. over complements of excited
/// diagrams.
pub fn lgv_determinant<R: Ring>(
    lam: &Partition,
    endpoints: &[(Cell, Cell)],
    weight: &impl Fn(Cell) -> R,
) -> R {
    let k = endpoints.len();
    let mut m = vec![vec![R::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            m[i][j] = path_sum(lam, endpoints[j].0, endpoints[i].1, weight);
        }
    }
    ring_det(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::excited::excited_diagrams;
    use crate::shapes::{partitions_up_to, sub_partitions};
    use crate::{factorial, rat, Int, Rat};
    use num_traits::{One, Zero};

    fn shape(s: &str) -> SkewShape {
        SkewShape::parse(s).unwrap()
    }

    #[test]
    fn lp_decomposition_5441_21() {
        let dec = lp_decomposition(&shape("5441/21")).unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0].to_skew_shape(), shape("5441/33"));
        // theta_2 sits at columns 2..3 of the outer shape; minimal
        // translation anchors it as 22/1 (congruent to 33/21)
        assert_eq!(dec[1].to_skew_shape(), shape("22/1"));
        assert_eq!((dec[0].start_content(), dec[0].end_content()), (-3, 4));
        assert_eq!((dec[1].start_content(), dec[1].end_content()), (0, 2));
    }

    #[test]
    fn lp_decomposition_thick_strips() {
        // staircase differences decompose into nested zigzags
        let dec = lp_decomposition(&shape("d9/d3")).unwrap();
        assert_eq!(dec.len(), 3);
        assert_eq!(
            dec.iter().map(BorderStrip::len).collect::<Vec<_>>(),
            vec![15, 11, 7]
        );
        for s in &dec {
            assert!(s.to_skew_shape().is_border_strip());
        }
        let single = lp_decomposition(&shape("22/1")).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].to_skew_shape(), shape("22/1"));
        assert!(lp_decomposition(&shape("331/22")).is_err());
    }

    #[test]
    fn substrip_conventions() {
        let dec = lp_decomposition(&shape("5441/21")).unwrap();
        let tau = &dec[0];
        match substrip(tau, 0, 4).unwrap() {
            Substrip::Strip(s) => assert_eq!(s.to_skew_shape(), shape("322/11")),
            other => panic!("unexpected {:?}", other),
        }
        match substrip(tau, -3, 2).unwrap() {
            Substrip::Strip(s) => assert_eq!(s.to_skew_shape(), shape("441/3")),
            other => panic!("unexpected {:?}", other),
        }
        match substrip(tau, 2, 2).unwrap() {
            Substrip::Strip(s) => assert_eq!(s.len(), 1),
            other => panic!("unexpected {:?}", other),
        }
        assert_eq!(substrip(tau, 3, 2).unwrap(), Substrip::Empty);
        assert_eq!(substrip(tau, 5, 2).unwrap(), Substrip::Undefined);
    }

    #[test]
    fn theta_hash_matches_examples() {
        let dec = lp_decomposition(&shape("5441/21")).unwrap();
        match theta_hash(&dec, 0, 1).unwrap() {
            Substrip::Strip(s) => assert_eq!(s.to_skew_shape(), shape("322/11")),
            other => panic!("unexpected {:?}", other),
        }
        match theta_hash(&dec, 1, 0).unwrap() {
            Substrip::Strip(s) => assert_eq!(s.to_skew_shape(), shape("441/3")),
            other => panic!("unexpected {:?}", other),
        }
        // theta_i # theta_i has the strip's own size and content span
        for i in 0..dec.len() {
            match theta_hash(&dec, i, i).unwrap() {
                Substrip::Strip(s) => {
                    assert_eq!(s.len(), dec[i].len());
                    assert_eq!(s.start_content(), dec[i].start_content());
                    assert_eq!(s.end_content(), dec[i].end_content());
                }
                other => panic!("unexpected {:?}", other),
            }
        }
    }

    #[test]
    fn kreiman_decomposition_examples() {
        let t = kreiman_decomposition(&shape("5441/21")).unwrap();
        assert_eq!(t.paths().len(), 2);
        assert_eq!(t.support().len(), 11);
        // a border strip is its own single path
        let b = kreiman_decomposition(&shape("22/1")).unwrap();
        assert_eq!(b.paths().len(), 1);
        assert_eq!(b.paths()[0].len(), 3);
        // three nested zigzag paths for the thick staircase difference
        let z = kreiman_decomposition(&shape("d9/d3")).unwrap();
        assert_eq!(
            z.paths().iter().map(Vec::len).collect::<Vec<_>>(),
            vec![15, 11, 7]
        );
    }

    #[test]
    fn strip_and_path_contents_agree() {
        // strip lengths and endpoint contents match the path tuple's
        for lam in partitions_up_to(8) {
            for mu in sub_partitions(&lam) {
                let s = SkewShape::new(lam.clone(), mu).unwrap();
                if s.size() == 0 || !s.connected() {
                    continue;
                }
                let dec = lp_decomposition(&s).unwrap();
                let tup = kreiman_decomposition(&s).unwrap();
                assert_eq!(dec.len(), tup.paths().len(), "{}", s);
                for (strip, path) in dec.iter().zip(tup.paths()) {
                    assert_eq!(strip.len(), path.len(), "{}", s);
                    assert_eq!(
                        strip.start_content(),
                        path.first().unwrap().content(),
                        "{}",
                        s
                    );
                    assert_eq!(strip.end_content(), path.last().unwrap().content(), "{}", s);
                }
            }
        }
    }

    #[test]
    fn ladder_moves_reach_all_excited_complements() {
        let mut shapes: Vec<SkewShape> = vec![shape("5441/21"), shape("d6/d2")];
        for lam in partitions_up_to(7) {
            for mu in sub_partitions(&lam) {
                let s = SkewShape::new(lam.clone(), mu).unwrap();
                if s.size() > 0 && s.connected() {
                    shapes.push(s);
                }
            }
        }
        for s in shapes {
            let lam = s.outer();
            let all: BTreeSet<Cell> = lam.cells().into_iter().collect();
            let start = kreiman_decomposition(&s).unwrap();
            let mut seen: BTreeSet<BTreeSet<Cell>> = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                let sup = t.support();
                if !seen.insert(sup.clone()) {
                    continue;
                }
                let complement: BTreeSet<Cell> =
                    all.iter().copied().filter(|c| !sup.contains(c)).collect();
                for u in crate::excited::active_cells(lam, &complement) {
                    stack.push(ladder_move(&s, &t, u).unwrap());
                }
            }
            let eds = excited_diagrams(&s).unwrap();
            let complements: BTreeSet<BTreeSet<Cell>> = eds
                .iter()
                .map(|d| all.iter().copied().filter(|c| !d.cells().contains(c)).collect())
                .collect();
            assert_eq!(seen, complements, "{}", s);
        }
    }

    #[test]
    fn ladder_move_is_local() {
        let s = shape("22/1");
        let t = kreiman_decomposition(&s).unwrap();
        assert_eq!(
            t.support().into_iter().collect::<Vec<_>>(),
            vec![Cell::new(1, 2), Cell::new(2, 1), Cell::new(2, 2)]
        );
        let moved = ladder_move(&s, &t, Cell::new(1, 1)).unwrap();
        assert_eq!(
            moved.support().into_iter().collect::<Vec<_>>(),
            vec![Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1)]
        );
        assert!(ladder_move(&s, &moved, Cell::new(1, 1)).is_err());
    }

    #[test]
    fn recover_rejects_bad_supports() {
        let s = shape("5441/21");
        let endpoints = kreiman_endpoints(&s).unwrap();
        // remove one cell: no tuple exists
        let mut support: BTreeSet<Cell> = s.cells().into_iter().collect();
        support.remove(&Cell::new(3, 2));
        assert!(recover_paths(&support, &endpoints).is_err());
    }

    #[test]
    fn lgv_unit_weight_counts_excited_diagrams() {
        let s = shape("5441/21");
        let endpoints = kreiman_endpoints(&s).unwrap();
        let count: Rat = lgv_determinant(s.outer(), &endpoints, &|_| Rat::one());
        assert_eq!(count, Rat::from(Int::from(8)));
        // single endpoint pair: a plain path count
        let single = shape("22/1");
        let e1 = kreiman_endpoints(&single).unwrap();
        assert_eq!(
            lgv_determinant(single.outer(), &e1, &|_| Rat::one()),
            Rat::from(Int::from(2))
        );
    }

    #[test]
    fn lgv_hook_weight_gives_syt_ratio() {
        let s = shape("d4/d2");
        let endpoints = kreiman_endpoints(&s).unwrap();
        let lam = s.outer().clone();
        let f: Rat = lgv_determinant(&lam, &endpoints, &|c| {
            rat(1, lam.hook(c).unwrap() as i64)
        });
        assert_eq!(f * Rat::from(factorial(5)), Rat::from(Int::from(16)));
    }

    #[test]
    fn ring_det_small_cases() {
        let m = vec![
            vec![rat(1, 1), rat(2, 1)],
            vec![rat(3, 1), rat(4, 1)],
        ];
        assert_eq!(ring_det(&m), rat(-2, 1));
        let id3: Vec<Vec<Rat>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        assert_eq!(ring_det(&id3), Rat::one());
        let empty: Vec<Vec<Rat>> = vec![];
        assert_eq!(ring_det(&empty), Rat::one());
        // cross-check against Gaussian elimination on random-ish entries
        let m4: Vec<Vec<Rat>> = (0..4)
            .map(|i| (0..4).map(|j| rat((i * j + i + 1) as i64, (j + 1) as i64)).collect())
            .collect();
        assert_eq!(ring_det(&m4), crate::tableaux::det_rat(m4.clone()));
    }
}
