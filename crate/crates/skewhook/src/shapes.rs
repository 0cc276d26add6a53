//! Partitions, skew shapes, shifted shapes, cells and hook lengths.
//!
//! Cells are 1-based `(row, col)` in matrix orientation (row 1 on top). A cell
//! exposes both `content = col - row` and `diag_index = row - col`; the two
//! sign conventions coexist in the literature and mixing them silently is the
//! classic source of bugs, so both are named explicitly.
//!
//! The shape grammar accepted by [`Partition::parse`] and [`SkewShape::parse`]:
//! compact digits `5441` when all parts are <= 9, comma form `10,9,1`,
//! `d5` for the staircase (4,3,2,1), `t3` for the shifted triangle (5,3,1),
//! and `OUTER/INNER` for skew shapes. Printing round-trips through parsing.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A cell of a Young diagram, 1-based `(row, col)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `col - row`, the content of the cell.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// `row - col`, the diagonal index (the content with opposite sign).
    pub fn diag_index(&self) -> i64 {
        self.row as i64 - self.col as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An integer partition: weakly decreasing positive parts, stored trimmed
/// (no trailing zeros). The empty partition is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros. Errors if parts increase.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut p = parts;
        while p.last() == Some(&0) {
            p.pop();
        }
        if p.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "parts must be weakly decreasing, got {:?}",
                p
            )));
        }
        Ok(Partition { parts: p })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// The staircase (n-1, n-2, ..., 1); empty for n <= 1.
    pub fn staircase(n: usize) -> Self {
        Partition {
            parts: (1..n).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition: part j counts the rows of length >= j.
    pub fn conjugate(&self) -> Partition {
        let w = self.part(1);
        let parts = (1..=w)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `other` fits inside `self` row by row (zero-padded comparison).
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Whether `cell` lies in the Young diagram.
    pub fn has_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// All cells of the Young diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push(Cell::new(i + 1, j));
            }
        }
        out
    }

    /// Hook length of `cell`: arm + leg + 1 inside this straight shape.
    pub fn hook(&self, cell: Cell) -> Result<usize> {
        if !self.has_cell(cell) {
            return Err(Error::Domain(format!(
                "cell {} outside diagram of {}",
                cell, self
            )));
        }
        let conj = self.conjugate();
        let h = self.part(cell.row) as i64 - cell.row as i64 + conj.part(cell.col) as i64
            - cell.col as i64
            + 1;
        Ok(h as usize)
    }

    /// True when the parts are strictly decreasing.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Parse one partition token of the shape grammar (no `/`).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "-" {
            return Ok(Partition::empty());
        }
        if let Some(n) = s.strip_prefix('d') {
            let n: usize = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad staircase index in `{}`", s)))?;
            return Ok(Partition::staircase(n));
        }
        if let Some(n) = s.strip_prefix('t') {
            let n: usize = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad triangle index in `{}`", s)))?;
            return Ok(ShiftedShape::triangle(n).into_partition());
        }
        let parts: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad part `{}` in `{}`", t, s)))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit `{}` in `{}`", c, s)))
                })
                .collect::<Result<_>>()?
        };
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    /// Compact digits when every part is <= 9, comma form otherwise, `-` if empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        if self.parts.iter().all(|&p| p <= 9) {
            for p in &self.parts {
                write!(f, "{}", p)?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", strs.join(","))
        }
    }
}

/// A skew shape: a pair of nested partitions `outer/inner`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Domain(format!(
                "inner shape {} not contained in outer shape {}",
                inner, outer
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells of the skew diagram.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn has_cell(&self, cell: Cell) -> bool {
        self.outer.has_cell(cell) && !self.inner.has_cell(cell)
    }

    /// Cells of the skew diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.outer.len() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push(Cell::new(i, j));
            }
        }
        out
    }

    /// Size of the diagonal `{row - col = k}` of the skew diagram.
    pub fn diagonal_length(&self, k: i64) -> usize {
        self.cells()
            .into_iter()
            .filter(|c| c.diag_index() == k)
            .count()
    }

    /// Size of the content diagonal `{col - row = c}` of the skew diagram.
    pub fn content_diagonal_length(&self, c: i64) -> usize {
        self.diagonal_length(-c)
    }

    /// Edge-connectivity of the skew diagram (empty shapes count as connected).
    pub fn connected(&self) -> bool {
        let cells: BTreeSet<Cell> = self.cells().into_iter().collect();
        if cells.is_empty() {
            return true;
        }
        let start = *cells.iter().next().unwrap();
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(c) = stack.pop() {
            let mut push = |r: usize, s: usize| {
                let n = Cell::new(r, s);
                if cells.contains(&n) && seen.insert(n) {
                    stack.push(n);
                }
            };
            push(c.row + 1, c.col);
            push(c.row, c.col + 1);
            if c.row > 1 {
                push(c.row - 1, c.col);
            }
            if c.col > 1 {
                push(c.row, c.col - 1);
            }
        }
        seen.len() == cells.len()
    }

    /// Connected with no 2x2 sub-square.
    pub fn is_border_strip(&self) -> bool {
        if self.size() == 0 || !self.connected() {
            return false;
        }
        let cells: BTreeSet<Cell> = self.cells().into_iter().collect();
        !cells.iter().any(|c| {
            cells.contains(&Cell::new(c.row + 1, c.col))
                && cells.contains(&Cell::new(c.row, c.col + 1))
                && cells.contains(&Cell::new(c.row + 1, c.col + 1))
        })
    }

    /// Parse `OUTER` or `OUTER/INNER` in the shape grammar.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(Partition::parse(o)?, Partition::parse(i)?),
            None => Ok(SkewShape::straight(Partition::parse(s)?)),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Which shifted hook-length convention to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShiftedKind {
    B,
    D,
}

impl fmt::Display for ShiftedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShiftedKind::B => write!(f, "B"),
            ShiftedKind::D => write!(f, "D"),
        }
    }
}

/// A shifted shape: strictly decreasing parts; row `i` occupies columns
/// `i ..= parts[i-1] + i - 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ShiftedShape {
    parts: Vec<usize>,
}

impl ShiftedShape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut p = parts;
        while p.last() == Some(&0) {
            p.pop();
        }
        if p.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Domain(format!(
                "shifted shape needs strictly decreasing parts, got {:?}",
                p
            )));
        }
        Ok(ShiftedShape { parts: p })
    }

    pub fn empty() -> Self {
        ShiftedShape { parts: vec![] }
    }

    /// The triangle (2n-1, 2n-3, ..., 1), the shifted staircase analogue.
    pub fn triangle(n: usize) -> Self {
        ShiftedShape {
            parts: (1..=n).map(|i| 2 * (n - i) + 1).collect(),
        }
    }

    pub fn from_partition(p: &Partition) -> Result<Self> {
        if !p.is_strict() {
            return Err(Error::Domain(format!(
                "{} is not a strict partition",
                p
            )));
        }
        Ok(ShiftedShape {
            parts: p.parts().to_vec(),
        })
    }

    pub fn into_partition(self) -> Partition {
        Partition { parts: self.parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn has_cell(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.row <= self.parts.len()
            && cell.col >= cell.row
            && cell.col < self.part(cell.row) + cell.row
    }

    /// Cells of the shifted diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            let r = i + 1;
            for j in r..r + p {
                out.push(Cell::new(r, j));
            }
        }
        out
    }

    pub fn contains(&self, other: &ShiftedShape) -> bool {
        (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Cells of the shifted skew diagram `self / inner`.
    pub fn skew_cells(&self, inner: &ShiftedShape) -> Vec<Cell> {
        let inner_cells: BTreeSet<Cell> = inner.cells().into_iter().collect();
        self.cells()
            .into_iter()
            .filter(|c| !inner_cells.contains(c))
            .collect()
    }

    /// Shifted hook length of type B or D.
    ///
    /// Type B: the hook of a diagonal cell `(i,i)` is row `i` itself, so its
    /// length is `parts[i-1]`. Off the diagonal the hook is the arm, the leg,
    /// and, when column `j` reaches the diagonal cell `(j,j)`, all of row `j`
    /// with `(j,j)` counted twice.
    ///
    /// Type D is the usual shifted hook: arm, leg, and when the column reaches
    /// the diagonal (including for the diagonal cell itself), row `j+1` is
    /// appended.
    pub fn hook(&self, cell: Cell, kind: ShiftedKind) -> Result<usize> {
        if !self.has_cell(cell) {
            return Err(Error::Domain(format!(
                "cell {} outside shifted diagram of {:?}",
                cell, self.parts
            )));
        }
        let (i, j) = (cell.row, cell.col);
        let ell = self.parts.len();
        if kind == ShiftedKind::B && i == j {
            return Ok(self.part(i));
        }
        let arm = self.part(i) + i - 1 - j;
        let leg = (i + 1..=ell)
            .filter(|&k| self.has_cell(Cell::new(k, j)))
            .count();
        let reaches_diagonal = j <= ell;
        let extra = match kind {
            // row j, with (j,j) double-counted
            ShiftedKind::B => {
                if reaches_diagonal {
                    self.part(j)
                } else {
                    0
                }
            }
            // row j+1
            ShiftedKind::D => {
                if reaches_diagonal {
                    self.part(j + 1)
                } else {
                    0
                }
            }
        };
        Ok(1 + arm + leg + extra)
    }

    /// Parse a shifted shape token: `t3`, compact digits, or comma form.
    pub fn parse(s: &str) -> Result<Self> {
        ShiftedShape::from_partition(&Partition::parse(s)?)
    }

    /// Parse `OUTER` or `OUTER/INNER` as a pair of shifted shapes.
    pub fn parse_skew(s: &str) -> Result<(Self, Self)> {
        let s = s.trim();
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (ShiftedShape::parse(o)?, ShiftedShape::parse(i)?),
            None => (ShiftedShape::parse(s)?, ShiftedShape::empty()),
        };
        if !outer.contains(&inner) {
            return Err(Error::Domain(format!(
                "inner shifted shape {:?} not contained in {:?}",
                inner.parts, outer.parts
            )));
        }
        Ok((outer, inner))
    }
}

impl fmt::Display for ShiftedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.clone().into_partition())
    }
}

/// The largest `i x (i+k)` rectangle anchored at (1,1) that fits inside the
/// diagram of `lam`, as `(rows, cols)`; `None` when no such rectangle fits.
pub fn anchored_rectangle(lam: &Partition, k: i64) -> Option<(usize, usize)> {
    let mut best = None;
    for i in 1..=lam.len() {
        let cols = i as i64 + k;
        if cols < 1 {
            continue;
        }
        if lam.part(i) >= cols as usize {
            best = Some((i, cols as usize));
        }
    }
    best
}

/// Enumerate all partitions of size at most `max`, the empty one included.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut cur: Vec<usize> = Vec::new();
    fn rec(rem: usize, maxp: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        for p in (1..=maxp.min(rem)).rev() {
            cur.push(p);
            out.push(Partition {
                parts: cur.clone(),
            });
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(max, max, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Enumerate all sub-partitions of `lam` (inner shapes of valid skew shapes).
pub fn sub_partitions(lam: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(lam: &Partition, row: usize, maxp: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > lam.len() {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        for p in (0..=maxp.min(lam.part(row))).rev() {
            cur.push(p);
            rec(lam, row + 1, p, cur, out);
            cur.pop();
        }
    }
    rec(lam, 1, usize::MAX, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Enumerate strict partitions of size at most `max`, the empty one included.
pub fn strict_partitions_up_to(max: usize) -> Vec<ShiftedShape> {
    let mut out = vec![ShiftedShape::empty()];
    let mut cur: Vec<usize> = Vec::new();
    fn rec(rem: usize, maxp: usize, cur: &mut Vec<usize>, out: &mut Vec<ShiftedShape>) {
        for p in (1..=maxp.min(rem)).rev() {
            cur.push(p);
            out.push(ShiftedShape { parts: cur.clone() });
            if p >= 2 {
                rec(rem - p, p - 1, cur, out);
            }
            cur.pop();
        }
    }
    rec(max, max, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}
