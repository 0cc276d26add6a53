//! The identity test battery: exact verification of the hook-length formulas
//! and their q-analogues, the strip determinants, the thick-strip Euler and
//! Catalan identities, the shifted type B/D variants, the Schröder count,
//! and report-only runners for the open conjectures.
//!
//! Theorem-backed checks are hard assertions: a failure fails the report.
//! Conjecture-backed checks are executed and their verdicts recorded, but a
//! conjecture failure never escalates (`conjecture: true` in the report).

use crate::error::Result;
use crate::excited::{
    count_excited, count_excited_lp, count_excited_wachs, excited_diagrams,
    excited_diagrams_shifted, macmahon_box_product,
};
use crate::pleasant::{
    ballot_paths, count_pleasant, dyck_paths, dyck_peak_stats, enumerate_pleasant,
    rpp_series_nhlf, schroeder_number, DyckPath,
};
use crate::qseries::{inv_q_factorial, ssyt_series_nhlf, QSeries};
use crate::schur::{check_lp_factorial, check_multivariate_nhlf, LpFactorialMode};
use crate::shapes::{
    partitions_up_to, sub_partitions, Cell, Partition, ShiftedKind, ShiftedShape, SkewShape,
};
use crate::strips::{
    kreiman_endpoints, lgv_determinant, lp_decomposition, theta_hash, Substrip,
};
use crate::tableaux::{
    count_shifted_standard, count_syt_aitken, count_syt_brute, count_syt_hlf, euler_numbers,
    euler_q, euler_q_star, rpp_series, ssyt_series,
};
use crate::{binomial, factorial, Int, Rat};
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt::Display;
use std::time::Instant;

/// Outcome of one verification instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One checked instance: a label plus the outcome; failures carry the exact
/// left- and right-hand values as witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub label: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// A suite report. `conjecture: true` marks report-only semantics.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub conjecture: bool,
    pub seed: u64,
    pub instances: Vec<Instance>,
    pub runtime_ms: u128,
}

impl VerificationReport {
    fn new(id: &str, conjecture: bool, seed: u64) -> Self {
        VerificationReport {
            id: id.into(),
            conjecture,
            seed,
            instances: vec![],
            runtime_ms: 0,
        }
    }

    fn check<L: Display, R: Display>(&mut self, label: impl Into<String>, lhs: L, rhs: R, ok: bool) {
        self.instances.push(Instance {
            label: label.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: if ok {
                None
            } else {
                Some(format!("lhs = {}, rhs = {}", lhs, rhs))
            },
        });
    }

    fn check_eq<T: PartialEq + Display>(&mut self, label: impl Into<String>, lhs: T, rhs: T) {
        let ok = lhs == rhs;
        self.check(label, lhs, rhs, ok);
    }

    /// True when no instance failed (conjecture reports are always "passed"
    /// for exit-code purposes; their verdicts live in the instances).
    pub fn passed(&self) -> bool {
        self.conjecture || self.instances.iter().all(|i| i.status != Status::Fail)
    }

    pub fn failures(&self) -> usize {
        self.instances.iter().filter(|i| i.status == Status::Fail).count()
    }
}

fn catalan(n: usize) -> Int {
    binomial(2 * n, n) / Int::from(n + 1)
}

fn double_factorial(m: i64) -> Int {
    let mut r = Int::one();
    let mut k = m;
    while k > 1 {
        r *= Int::from(k);
        k -= 2;
    }
    r
}

fn staircase_skew(outer: usize, inner: usize) -> SkewShape {
    SkewShape::new(Partition::staircase(outer), Partition::staircase(inner))
        .expect("staircases nest")
}

/// Exact rational determinant from a closure.
fn det_from(n: usize, entry: impl Fn(usize, usize) -> Rat) -> Rat {
    let m: Vec<Vec<Rat>> = (1..=n)
        .map(|i| (1..=n).map(|j| entry(i, j)).collect())
        .collect();
    crate::tableaux::det_rat(m)
}

// ---------------------------------------------------------------------------
// Suite 1: the hook-length formula for skew shapes
// ---------------------------------------------------------------------------

/// The hook-sum over excited diagrams: `sum_D prod_{u not in D} 1/h(u)`.
pub fn nhlf_hook_sum(shape: &SkewShape) -> Result<Rat> {
    let lam = shape.outer();
    let all = lam.cells();
    let mut total = Rat::zero();
    for d in excited_diagrams(shape)? {
        let mut term = Rat::one();
        for &u in &all {
            if !d.cells().contains(&u) {
                term /= Rat::from(Int::from(lam.hook(u)?));
            }
        }
        total += term;
    }
    Ok(total)
}

/// For every skew shape with `|lam| <= max_size`: the brute-force tableau
/// count equals `n!` times the excited hook sum, and the Aitken determinant
/// agrees.
pub fn verify_nhlf(max_size: usize, seed: u64) -> Result<VerificationReport> {
    let t0 = Instant::now();
    let mut rep = VerificationReport::new("nhlf", false, seed);
    for lam in partitions_up_to(max_size) {
        if lam.is_empty() {
            continue;
        }
        let mut ok = true;
        let mut witness = String::new();
        let mut count = 0usize;
        for mu in sub_partitions(&lam) {
            let s = SkewShape::new(lam.clone(), mu)?;
            let brute = count_syt_brute(&s)?;
            let nhlf = Rat::from(factorial(s.size())) * nhlf_hook_sum(&s)?;
            let aitken = count_syt_aitken(&s);
            let expect = Rat::from(brute.clone());
            if nhlf != expect || aitken != brute {
                ok = false;
                witness = format!(
                    "{}: brute {}, nhlf {}, aitken {}",
                    s, brute, nhlf, aitken
                );
                break;
            }
            count += 1;
        }
        rep.check(
            format!("lam={} ({} inner shapes)", lam, count),
            witness.clone(),
            "",
            ok,
        );
    }
    rep.runtime_ms = t0.elapsed().as_millis();
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Suite 2: the two q-analogues
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QNhlf {
    First,
    Second,
}

/// First form: excited hook series vs brute semistandard series.
/// Second form: pleasant/excited-peak series vs brute reverse-plane series.
pub fn verify_qnhlf(
    which: QNhlf,
    max_size: usize,
    order: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let t0 = Instant::now();
    let id = match which {
        QNhlf::First => "qnhlf1",
        QNhlf::Second => "qnhlf2",
    };
    let mut rep = VerificationReport::new(id, false, seed);
    for lam in partitions_up_to(max_size) {
        if lam.is_empty() {
            continue;
        }
        let mut ok = true;
        let mut witness = String::new();
        let mut count = 0usize;
        for mu in sub_partitions(&lam) {
            let s = SkewShape::new(lam.clone(), mu)?;
            let (lhs, rhs) = match which {
                QNhlf::First => (ssyt_series_nhlf(&s, order)?, ssyt_series(&s, order)?),
                QNhlf::Second => (rpp_series_nhlf(&s, order, 16)?, rpp_series(&s, order)?),
            };
            if !lhs.agrees_with(&rhs) {
                ok = false;
                witness = format!("{}: {} vs {}", s, lhs, rhs);
                break;
            }
            count += 1;
        }
        rep.check(
            format!("lam={} ({} inner shapes, order {})", lam, count, order),
            witness.clone(),
            "",
            ok,
        );
    }
    rep.runtime_ms = t0.elapsed().as_millis();
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Suite 3: strip determinant for tableau counts
// ---------------------------------------------------------------------------

/// `f^{lam/mu}/n! = det[ f^{theta_i # theta_j} / |theta_i # theta_j|! ]`
/// over all connected shapes with `|lam| <= max_size`.
pub fn verify_lp_syt(max_size: usize, seed: u64) -> Result<VerificationReport> {
    let t0 = Instant::now();
    let mut rep = VerificationReport::new("lp", false, seed);
    for lam in partitions_up_to(max_size) {
        if lam.is_empty() {
            continue;
        }
        let mut ok = true;
        let mut witness = String::new();
        let mut count = 0usize;
        for mu in sub_partitions(&lam) {
            let s = SkewShape::new(lam.clone(), mu)?;
            if s.size() == 0 || !s.connected() {
                continue;
            }
            let dec = lp_decomposition(&s)?;
            let k = dec.len();
            let mut entries = vec![vec![Rat::zero(); k]; k];
            for i in 0..k {
                for j in 0..k {
                    entries[i][j] = match theta_hash(&dec, i, j)? {
                        Substrip::Undefined => Rat::zero(),
                        Substrip::Empty => Rat::one(),
                        Substrip::Strip(st) => {
                            let sub = st.to_skew_shape();
                            Rat::new(count_syt_aitken(&sub), factorial(sub.size()))
                        }
                    };
                }
            }
            let det = crate::tableaux::det_rat(entries);
            let expect = Rat::new(count_syt_brute(&s)?, factorial(s.size()));
            if det != expect {
                ok = false;
                witness = format!("{}: det {} vs f/n! {}", s, det, expect);
                break;
            }
            count += 1;
        }
        rep.check(
            format!("lam={} ({} connected skew shapes)", lam, count),
            witness.clone(),
            "",
            ok,
        );
    }
    rep.runtime_ms = t0.elapsed().as_millis();
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Suite 4: thick strips
// ---------------------------------------------------------------------------

/// Extract the fan of Dyck paths from a non-intersecting tuple over the
/// thick strip `delta_{n+2k}/delta_n`: path `i` (outermost first, 0-based)
/// drops `2*(k-1-i)` bookend cells at each end; heights follow the step
/// pattern (up-step +1, right-step -1).
fn fan_from_tuple(paths: &[Vec<Cell>], k: usize) -> Option<Vec<DyckPath>> {
    let mut fan = Vec::with_capacity(k);
    for (idx, path) in paths.iter().enumerate() {
        let trim = 2 * (k - 1 - idx);
        if path.len() < 2 * trim + 1 {
            return None;
        }
        let mid = &path[trim..path.len() - trim];
        let mut points = vec![(0usize, 0usize)];
        let mut h: i64 = 0;
        for w in mid.windows(2) {
            h += if w[1].row + 1 == w[0].row { 1 } else { -1 };
            if h < 0 {
                return None;
            }
            points.push((points.len() - 1 + 1, h as usize));
        }
        if h != 0 {
            return None;
        }
        fan.push(DyckPath { points });
    }
    Some(fan)
}

/// Enumerate noncrossing `k`-tuples of Dyck paths `(p_1, ..., p_k)` with
/// `p_r` weakly below `p_{r+1}` pointwise (`p_1` innermost/lowest).
fn noncrossing_fans(n: usize, k: usize) -> Vec<Vec<DyckPath>> {
    let all = dyck_paths(n);
    let below = |a: &DyckPath, b: &DyckPath| {
        a.points.iter().zip(&b.points).all(|(x, y)| x.1 <= y.1)
    };
    let mut out = Vec::new();
    let mut cur: Vec<DyckPath> = Vec::new();
    fn rec(
        all: &[DyckPath],
        below: &impl Fn(&DyckPath, &DyckPath) -> bool,
        k: usize,
        cur: &mut Vec<DyckPath>,
        out: &mut Vec<Vec<DyckPath>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in all {
            if cur.last().is_none_or(|last| below(last, p)) {
                cur.push(p.clone());
                rec(all, below, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(&all, &below, k, &mut cur, &mut out);
    out
}

/// Catalan determinant, Proctor product, fan bijection, and the Euler-number
/// determinant for thick strips `delta_{n+2k}/delta_n`.
pub fn thick_strip_census(n_max: usize, k_max: usize, order: usize, seed: u64) -> Result<VerificationReport> {
    let t0 = Instant::now();
    let mut rep = VerificationReport::new("thick", false, seed);
    let e_nums = euler_numbers(2 * (n_max + 2 * k_max) + 3);
    let ehat = |m: usize| Rat::new(e_nums[m].clone(), factorial(m));
    for n in 1..=n_max {
        for k in 0..=k_max {
            if n + 2 * k > 10 {
                continue;
            }
            let s = staircase_skew(n + 2 * k, n);
            if k == 0 {
                rep.check_eq(format!("n={} k=0: e = 1", n), count_excited(&s)?, Int::one());
                continue;
            }
            let bfs = count_excited(&s)?;
            let cat_det = det_from(k, |i, j| Rat::from(catalan(n + i + j - 2)));
            let mut product = Rat::one();
            for i in 1..=n {
                for j in i + 1..=n {
                    product *= Rat::new(Int::from(2 * k + i + j - 1), Int::from(i + j - 1));
                }
            }
            rep.check_eq(
                format!("n={} k={}: e = Catalan determinant", n, k),
                Rat::from(bfs.clone()),
                cat_det,
            );
            rep.check_eq(
                format!("n={} k={}: e = boxed product", n, k),
                Rat::from(bfs.clone()),
                product,
            );

            // fan-of-Dyck-paths bijection with noncrossing validation
            let endpoints = kreiman_endpoints(&s)?;
            let all_cells = s.outer().cells();
            let mut fans: Vec<Vec<DyckPath>> = Vec::new();
            let mut fan_ok = true;
            for d in excited_diagrams(&s)? {
                let support: std::collections::BTreeSet<Cell> = all_cells
                    .iter()
                    .copied()
                    .filter(|c| !d.cells().contains(c))
                    .collect();
                let tuple = crate::strips::recover_paths(&support, &endpoints)?;
                let Some(fan) = fan_from_tuple(tuple.paths(), k) else {
                    fan_ok = false;
                    break;
                };
                // outermost path first: heights weakly decrease along the list
                let noncrossing = fan.windows(2).all(|w| {
                    w[0].points
                        .iter()
                        .zip(&w[1].points)
                        .all(|(hi, lo)| hi.1 >= lo.1)
                });
                if !noncrossing {
                    fan_ok = false;
                    break;
                }
                fans.push(fan);
            }
            fans.sort_by(|a, b| format!("{:?}", a).cmp(&format!("{:?}", b)));
            fans.dedup();
            let enumerated = noncrossing_fans(n, k).len();
            rep.check(
                format!("n={} k={}: complements are noncrossing fans", n, k),
                fans.len(),
                enumerated,
                fan_ok && fans.len() == enumerated && Int::from(enumerated) == bfs,
            );

            // Euler determinant for f
            if n + 2 * k <= 9 {
                let f = Rat::new(count_syt_aitken(&s), factorial(s.size()));
                let e_det = det_from(k, |i, j| ehat(2 * (n + i + j) - 3));
                rep.check_eq(format!("n={} k={}: f/n! = Euler determinant", n, k), f, e_det);
            }

            // q-analogue of the Euler determinant. The minimal semistandard
            // weight of the shape can exceed the requested order, which
            // would make both sides vanish identically; extend the order
            // (within the brute cap) so the comparison has content.
            if n + 2 * k <= 7 {
                let min_weight: usize = (1..=s.outer().part(1))
                    .map(|j| {
                        let h = (1..=s.outer().len())
                            .filter(|&i| s.has_cell(Cell::new(i, j)))
                            .count();
                        h * h.saturating_sub(1) / 2
                    })
                    .sum();
                let q_order = order.max(min_weight + 5).min(40);
                if min_weight + 3 > q_order {
                    rep.instances.push(Instance {
                        label: format!("n={} k={}: q-Euler determinant", n, k),
                        status: Status::Skip,
                        witness: Some(format!(
                            "minimal weight {} beyond the series cap",
                            min_weight
                        )),
                    });
                } else {
                    let lhs = ssyt_series(&s, q_order)?;
                    let etilde = |m: usize| -> Result<QSeries> {
                        Ok(&euler_q(m, 12)?.to_series(q_order) * &inv_q_factorial(m, q_order)?)
                    };
                    let mut m = Vec::new();
                    for i in 1..=k {
                        let mut row = Vec::new();
                        for j in 1..=k {
                            row.push(etilde(2 * (n + i + j) - 3)?);
                        }
                        m.push(row);
                    }
                    let rhs = crate::strips::ring_det(&m);
                    rep.check(
                        format!(
                            "n={} k={}: q-series = q-Euler determinant (order {})",
                            n, k, q_order
                        ),
                        &lhs,
                        &rhs,
                        !lhs.is_zero() && lhs.agrees_with(&rhs),
                    );
                }
            }
        }
    }

    // low-staircase specializations: the Euler determinants against plain
    // hook-length counts of staircases
    for k in 1..=3usize {
        let d1 = det_from(k, |i, j| ehat(2 * (i + j) - 1));
        let m1 = 2 * k + 1;
        let r1 = Rat::new(
            count_syt_hlf(&Partition::staircase(m1))?,
            factorial(m1 * (m1 - 1) / 2),
        );
        rep.check_eq(format!("k={}: odd Euler det = f^(staircase {})", k, m1), d1, r1);
        let d2 = det_from(k, |i, j| ehat(2 * (i + j) + 1));
        let m2 = 2 * k + 2;
        let r2 = Rat::new(
            count_syt_hlf(&Partition::staircase(m2))?,
            factorial(m2 * (m2 - 1) / 2 - 1),
        );
        rep.check_eq(format!("k={}: even Euler det = f^(staircase {})", k, m2), d2, r2);
    }
    rep.runtime_ms = t0.elapsed().as_millis();
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Suite 5: Euler–Catalan summations
// ---------------------------------------------------------------------------

/// Dyck-path summations for Euler numbers: the plain form, the thick-strip
/// fan form with its odd-double-factorial normalization, and the q-versions.
pub fn euler_catalan_identities(n_max: usize, order: usize, seed: u64) -> Result<VerificationReport> {
    let t0 = Instant::now();
    let mut rep = VerificationReport::new("ec", false, seed);
    let e_nums = euler_numbers(2 * n_max + 1 + 16);
    for n in 1..=n_max {
        let sum: Rat = dyck_paths(n)
            .iter()
            .map(|p| {
                p.points
                    .iter()
                    .fold(Rat::one(), |acc, &(_, b)| acc / Rat::from(Int::from(2 * b + 1)))
            })
            .fold(Rat::zero(), |acc, t| acc + t);
        let expect = Rat::new(e_nums[2 * n + 1].clone(), factorial(2 * n + 1));
        rep.check_eq(format!("n={}: Dyck hook sum = E/(2n+1)!", n), sum, expect);
    }

    // thick version over noncrossing fans
    for k in 2..=3usize {
        for n in 1..=n_max {
            if n + 2 * k > 8 {
                continue;
            }
            let mut sum = Rat::zero();
            for fan in noncrossing_fans(n, k) {
                let mut term = Rat::one();
                for (r, p) in fan.iter().enumerate() {
                    for &(_, b) in &p.points {
                        term /= Rat::from(Int::from(2 * b + 4 * (r + 1) - 3));
                    }
                }
                sum += term;
            }
            let mut norm = Rat::one();
            for r in 1..k {
                let df = double_factorial(4 * r as i64 - 1);
                norm *= Rat::from(df.clone() * df);
            }
            let det = det_from(k, |i, j| {
                Rat::new(e_nums[2 * (n + i + j) - 3].clone(), factorial(2 * (n + i + j) - 3))
            });
            rep.check_eq(
                format!("n={} k={}: fan hook sum = (!!)^2 * Euler det", n, k),
                sum,
                norm * det,
            );
        }
    }

    // the curious Catalan determinant of binomials: flags of the zigzag
    for n in 2..=n_max {
        let det = det_from(n - 1, |i, j| {
            let top = n as i64 - i as i64 + j as i64;
            if top < 0 {
                Rat::zero()
            } else {
                Rat::from(binomial(top as usize, i))
            }
        });
        rep.check_eq(
            format!("n={}: binomial determinant = Catalan", n),
            det,
            Rat::from(catalan(n)),
        );
    }

    // q-analogue over single Dyck paths (semistandard side)
    for n in 1..=n_max.min(3) {
        let mut lhs = QSeries::zero_with_order(order);
        for p in dyck_paths(n) {
            let mut term = QSeries::one().truncated(order);
            for &(_, b) in &p.points {
                term = &term * &QSeries::q_power(b);
                term = &term * &QSeries::geom(2 * b + 1, order)?;
            }
            lhs = &lhs + &term;
        }
        let rhs = &euler_q(2 * n + 1, 12)?.to_series(order) * &inv_q_factorial(2 * n + 1, order)?;
        rep.check(
            format!("n={}: q-Dyck sum = qEuler/(q)_{} (order {})", n, 2 * n + 1, order),
            &lhs,
            &rhs,
            lhs.agrees_with(&rhs),
        );
    }

    // q-analogue over single Dyck paths (reverse-plane side): each path is
    // weighted by q to the sum of 2d+1 over its high peaks
    for n in 1..=n_max.min(3) {
        let mut lhs = QSeries::zero_with_order(order);
        for p in dyck_paths(n) {
            let mut term = QSeries::q_power(p.high_peak_hook_sum()).truncated(order);
            for &(_, b) in &p.points {
                term = &term * &QSeries::geom(2 * b + 1, order)?;
            }
            lhs = &lhs + &term;
        }
        let rhs =
            &euler_q_star(2 * n + 1, 12)?.to_series(order) * &inv_q_factorial(2 * n + 1, order)?;
        rep.check(
            format!(
                "n={}: high-peak q-Dyck sum = qEuler*/(q)_{} (order {})",
                n,
                2 * n + 1,
                order
            ),
            &lhs,
            &rhs,
            lhs.agrees_with(&rhs),
        );
    }

    // excited peaks of a zigzag complement are exactly the high peaks: the
    // multiset of excited-peak hook sums matches the high-peak statistics
    for n in 1..=n_max.min(5) {
        let s = staircase_skew(n + 2, n);
        let lam = s.outer();
        let mut from_diagrams: Vec<(usize, usize)> = excited_diagrams(&s)?
            .iter()
            .map(|d| {
                let hook_sum = d
                    .peaks()
                    .iter()
                    .map(|&u| lam.hook(u).expect("peak in shape"))
                    .sum();
                (d.expeaks(), hook_sum)
            })
            .collect();
        from_diagrams.sort();
        let mut from_paths: Vec<(usize, usize)> = dyck_paths(n)
            .iter()
            .map(|p| (p.high_peaks().len(), p.high_peak_hook_sum()))
            .collect();
        from_paths.sort();
        rep.check(
            format!("n={}: excited peaks are the high peaks", n),
            format!("{:?}", from_diagrams),
            format!("{:?}", from_paths),
            from_diagrams == from_paths,
        );
    }

    // q-analogue over fans
    for (n, k) in [(1usize, 2usize), (2, 2)] {
        if 2 * (n + 2 * k) - 3 > 11 {
            continue;
        }
        let mut lhs = QSeries::zero_with_order(order);
        for fan in noncrossing_fans(n, k) {
            let mut term = QSeries::one().truncated(order);
            for (r0, p) in fan.iter().enumerate() {
                let r = r0 + 1;
                for &(_, b) in &p.points {
                    term = &term * &QSeries::q_power(b + 2 * r - 2);
                    term = &term * &QSeries::geom(2 * b + 4 * r - 3, order)?;
                }
            }
            lhs = &lhs + &term;
        }
        let mut norm = QSeries::one().truncated(order);
        for r in 1..k {
            let df = QSeries::q_odd_double_factorial(2 * r).truncated(order);
            norm = &(&norm * &df) * &df;
        }
        let mut m = Vec::new();
        for i in 1..=k {
            let mut row = Vec::new();
            for j in 1..=k {
                let deg = 2 * (n + i + j) - 3;
                row.push(&euler_q(deg, 12)?.to_series(order) * &inv_q_factorial(deg, order)?);
            }
            m.push(row);
        }
        // bookend cells of the strip paths contribute a fixed monomial:
        // q^B with B = 2 * sum_{r<k} C(2r, 2)
        let bookend: usize = (1..k).map(|r| 2 * r * (2 * r - 1)).sum();
        let rhs = &norm * &crate::strips::ring_det(&m);
        let shifted = &QSeries::q_power(bookend) * &lhs;
        rep.check(
            format!("n={} k={}: q^B * q-fan sum = ([!!])^2 * q-Euler det (order {})", n, k, order),
            &shifted,
            &rhs,
            shifted.agrees_with(&rhs),
        );
    }
    rep.runtime_ms = t0.elapsed().as_millis();
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Suite 6: plane full binary trees
// ---------------------------------------------------------------------------

/// Hook products (product of subtree sizes) of all plane full binary trees
/// with `v` vertices (`v` odd).
fn full_binary_hook_products(v: usize) -> Vec<Int> {
    if v == 1 {
        return vec![Int::one()];
    }
    let mut out = Vec::new();
    let mut left = 1;
    while left <= v - 2 {
        let right = v - 1 - left;
        for l in full_binary_hook_products(left) {
            for r in full_binary_hook_products(right) {
                out.push(l.clone() * r * Int::from(v));
            }
        }
        left += 2;
    }
    out
}

/// `sum over plane full binary trees of prod 1/h(v) = E_{2n+1}/(2n+1)!`,
/// with the Catalan count of trees asserted along the way.
pub fn binary_tree_identity(n_max: usize, seed: u64) -> Result<VerificationReport> {
    let t0 = Instant::now();
    let mut rep = VerificationReport::new("tree", false, seed);
    let e_nums = euler_numbers(2 * n_max + 1);
    for n in 0..=n_max {
        let hooks = full_binary_hook_products(2 * n + 1);
        rep.check_eq(
            format!("n={}: tree count is Catalan", n),
            Int::from(hooks.len()),
            catalan(n),
        );
        let sum: Rat = hooks
            .iter()
            .fold(Rat::zero(), |acc, h| acc + Rat::new(Int::one(), h.clone()));
        let expect = Rat::new(e_nums[2 * n + 1].clone(), factorial(2 * n + 1));
        rep.check_eq(format!("n={}: tree hook sum = E/(2n+1)!", n), sum, expect);
    }
    rep.runtime_ms = t0.elapsed().as_millis();
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Suite 7: shifted type B and D
// ---------------------------------------------------------------------------

fn shifted_nhlf_sum(outer: &ShiftedShape, inner: &ShiftedShape, kind: ShiftedKind) -> Result<Rat> {
    let all = outer.cells();
    let mut total = Rat::zero();
    for d in excited_diagrams_shifted(outer, inner, kind)? {
        let mut term = Rat::one();
        for &u in &all {
            if !d.contains(&u) {
                term /= Rat::from(Int::from(outer.hook(u, kind)?));
            }
        }
        total += term;
    }
    Ok(total)
}

/// Shifted hook-length identities of both kinds against brute counts, the
/// binomial and Catalan zigzag counts, the boxed-product census, and the
/// ballot-path Euler summation.
pub fn type_bd_identities(max_size: usize, seed: u64) -> Result<VerificationReport> {
    let t0 = Instant::now();
    let mut rep = VerificationReport::new("typebd", false, seed);
    let strict = crate::shapes::strict_partitions_up_to(max_size);
    for lam in &strict {
        if lam.is_empty() {
            continue;
        }
        let mut ok = true;
        let mut witness = String::new();
        let mut count = 0usize;
        for mu in &strict {
            if !lam.contains(mu) || lam == mu {
                continue;
            }
            let g = count_shifted_standard(lam, mu, 16)?;
            let size = lam.size() - mu.size();
            let b = Rat::from(factorial(size)) * shifted_nhlf_sum(lam, mu, ShiftedKind::B)?;
            let d = Rat::from(factorial(size)) * shifted_nhlf_sum(lam, mu, ShiftedKind::D)?;
            let expect = Rat::from(g.clone());
            if b != expect || d != expect {
                ok = false;
                witness = format!("{}/{}: g {}, B {}, D {}", lam, mu, g, b, d);
                break;
            }
            count += 1;
        }
        rep.check(
            format!("lam={} ({} shifted inner shapes)", lam, count),
            witness.clone(),
            "",
            ok,
        );
    }

    // zigzag counts and the boxed-plane-partition census
    let tri = ShiftedShape::triangle;
    rep.check_eq(
        "triangle(3)/triangle(2): type B count".to_string(),
        Int::from(excited_diagrams_shifted(&tri(3), &tri(2), ShiftedKind::B)?.len()),
        Int::from(6),
    );
    for n in 1..=4usize {
        let b = excited_diagrams_shifted(&tri(n + 1), &tri(n), ShiftedKind::B)?.len();
        rep.check_eq(
            format!("type B zigzag n={}: central binomial", n),
            Int::from(b),
            binomial(2 * n, n),
        );
        let d = excited_diagrams_shifted(&tri(n + 1), &tri(n), ShiftedKind::D)?.len();
        rep.check_eq(
            format!("type D zigzag n={}: Catalan", n),
            Int::from(d),
            catalan(n),
        );
    }
    for n in 1..=4usize {
        for k in 1..=3usize {
            if (n + k) * (n + k) > 36 {
                continue;
            }
            let b = excited_diagrams_shifted(&tri(n + k), &tri(n), ShiftedKind::B)?.len();
            rep.check_eq(
                format!("type B count n={} k={}: boxed product", n, k),
                Int::from(b),
                macmahon_box_product(n, k),
            );
        }
    }

    // ballot-path Euler summation (type B analogue of the Dyck sum); the
    // weight is b+1 at the free end, 2b+2 when a+b >= 2n, else 2b+1
    let e_nums = euler_numbers(2 * 5 + 1);
    for n in 1..=5usize {
        let paths = ballot_paths(n);
        rep.check_eq(
            format!("ballot path count n={}", n),
            Int::from(paths.len()),
            binomial(2 * n, n),
        );
        let mut sum = Rat::zero();
        for p in &paths {
            let mut term = Rat::one();
            for &(a, b) in &p.points {
                let w = if a == 2 * n {
                    b + 1
                } else if a + b >= 2 * n {
                    2 * b + 2
                } else {
                    2 * b + 1
                };
                term /= Rat::from(Int::from(w));
            }
            sum += term;
        }
        let expect = Rat::new(e_nums[2 * n + 1].clone(), factorial(2 * n + 1));
        rep.check_eq(format!("ballot hook sum n={}", n), sum, expect);
    }

    // the paper's six-term display for n=2: weights from the shifted hooks
    {
        let s = tri(3);
        let mut products: Vec<Int> = excited_diagrams_shifted(&s, &tri(2), ShiftedKind::B)?
            .iter()
            .map(|d| {
                s.cells()
                    .iter()
                    .filter(|c| !d.contains(c))
                    .map(|&c| Int::from(s.hook(c, ShiftedKind::B).unwrap()))
                    .product()
            })
            .collect();
        products.sort();
        let mut expect: Vec<Int> = [12, 36, 72, 216, 432, 720].map(Int::from).to_vec();
        expect.sort();
        rep.check_eq(
            "n=2: six-term hook products".to_string(),
            format!("{:?}", products),
            format!("{:?}", expect),
        );
    }

    // the type D zigzag sum reproduces the Dyck-path sum exactly
    for n in 1..=4usize {
        let d_sum = shifted_nhlf_sum(&tri(n + 1), &tri(n), ShiftedKind::D)?;
        let dyck_sum: Rat = dyck_paths(n)
            .iter()
            .map(|p| {
                p.points
                    .iter()
                    .fold(Rat::one(), |acc, &(_, b)| acc / Rat::from(Int::from(2 * b + 1)))
            })
            .fold(Rat::zero(), |acc, t| acc + t);
        rep.check_eq(format!("type D zigzag sum n={} = Dyck sum", n), d_sum, dyck_sum);
    }
    rep.runtime_ms = t0.elapsed().as_millis();
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Suite 8: Schröder theorem and the two enumerative conjectures
// ---------------------------------------------------------------------------

/// Hard assertion: `p(delta_{n+2}/delta_n) = 2^{n+2} s_n` for `n <=
/// n_max`; plus a brute cross-check where the subset scan is feasible.
///
/// For n = 3 there are five excited diagrams (the third Catalan number) and
/// `2^5 * s_3 = 352` pleasant diagrams; both values are pinned here.
pub fn verify_schroeder(n_max: usize, seed: u64) -> Result<VerificationReport> {
    let t0 = Instant::now();
    let mut rep = VerificationReport::new("schroeder", false, seed);
    for n in 1..=n_max {
        let s = staircase_skew(n + 2, n);
        let p = count_pleasant(&s)?;
        rep.check_eq(
            format!("n={}: p = 2^(n+2) * schroeder", n),
            p.clone(),
            schroeder_number(n) << (n + 2),
        );
        if s.outer().size() <= 12 {
            rep.check_eq(format!("n={}: subset scan agrees", n), enumerate_pleasant(&s, 16)?, p);
        }
    }
    // aggregated Dyck-path statistics route
    for n in 1..=n_max.min(6) {
        let total: Int = dyck_peak_stats(n)
            .iter()
            .map(|(_, _, np)| Int::one() << *np)
            .sum();
        rep.check_eq(
            format!("n={}: peak statistics aggregate", n),
            total,
            schroeder_number(n) << (n + 2),
        );
    }
    rep.runtime_ms = t0.elapsed().as_millis();
    Ok(rep)
}

/// Report-only runner for the strip-determinant conjectures on pleasant
/// counts and reverse-plane series, and the generic-parameter factorial
/// Schur determinant.
pub fn conjecture_suite(
    shape_max: usize,
    trials: usize,
    n_max: usize,
    order: usize,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();

    // generic-parameter strip determinant for factorial Schur functions
    {
        let t0 = Instant::now();
        let mut rep = VerificationReport::new("conj-lp-factorial", true, seed);
        for lam in partitions_up_to(shape_max) {
            if lam.is_empty() {
                continue;
            }
            for mu in sub_partitions(&lam) {
                let s = SkewShape::new(lam.clone(), mu)?;
                if s.size() == 0 || !s.connected() {
                    continue;
                }
                let r = check_lp_factorial(&s, LpFactorialMode::Conjecture, trials, seed)?;
                rep.check(
                    format!("shape {} ({} trials)", s, trials),
                    r.passes,
                    trials,
                    r.all_passed(),
                );
            }
        }
        rep.runtime_ms = t0.elapsed().as_millis();
        out.push(rep);
    }

    // pleasant counts vs the Schröder-number determinant
    {
        let t0 = Instant::now();
        let mut rep = VerificationReport::new("conj-pleasant-det", true, seed);
        let k = 2usize;
        for n in 1..=n_max {
            let s = staircase_skew(n + 2 * k, n);
            let p = count_pleasant(&s)?;
            // as printed for k=2
            let printed = (schroeder_number(n) * schroeder_number(n + 2)
                - schroeder_number(n + 1) * schroeder_number(n + 1))
                << (2 * n + 5);
            rep.check_eq(format!("n={} k=2: printed form 2^(2n+5)(...)", n), p.clone(), printed);
            // determinant form with the 2^(k choose 2) normalization
            let frak = |m: usize| schroeder_number(m) << (m + 2);
            let det = det_from(k, |i, j| Rat::from(frak(n + i + j - 2)));
            let rhs = det * Rat::from(Int::one() << (k * (k - 1) / 2));
            rep.check_eq(
                format!("n={} k=2: 2^C(k,2) * Schroeder determinant", n),
                Rat::from(p),
                rhs,
            );
        }
        rep.runtime_ms = t0.elapsed().as_millis();
        out.push(rep);
    }

    // reverse-plane series vs the q-Euler-star determinant
    {
        let t0 = Instant::now();
        let mut rep = VerificationReport::new("conj-rpp-det", true, seed);
        let k = 2usize;
        for n in 1..=n_max.min(3) {
            let s = staircase_skew(n + 2 * k, n);
            let lhs = if s.size() <= 14 {
                rpp_series(&s, order)?
            } else {
                rpp_series_nhlf(&s, order, 12)?
            };
            let shift = k * (k - 1) * (6 * n + 8 * k - 1) / 6;
            if shift >= order {
                rep.instances.push(Instance {
                    label: format!("n={} k=2: needs order > {}", n, shift),
                    status: Status::Skip,
                    witness: Some(format!("truncation order {} too small", order)),
                });
                continue;
            }
            let etilde_star = |m: usize| -> Result<QSeries> {
                Ok(&euler_q_star(m, 12)?.to_series(order) * &inv_q_factorial(m, order)?)
            };
            let mut m = Vec::new();
            for i in 1..=k {
                let mut row = Vec::new();
                for j in 1..=k {
                    row.push(etilde_star(2 * (n + i + j) - 3)?);
                }
                m.push(row);
            }
            let det = crate::strips::ring_det(&m);
            // q^{-shift} det: compare coefficient m of lhs to m+shift of det
            let upto = order - shift;
            let ok = (0..=upto).all(|e| lhs.coeff(e) == det.coeff(e + shift))
                && (0..shift).all(|e| det.coeff(e).is_zero());
            rep.check(
                format!("n={} k=2: rpp series = q^-{} * qEuler* det (order {})", n, shift, order),
                &lhs,
                &det,
                ok,
            );
        }
        rep.runtime_ms = t0.elapsed().as_millis();
        out.push(rep);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Suite 9: the multivariate identities (random-point battery)
// ---------------------------------------------------------------------------

/// Random-point checks of the multivariate hook identity and the evaluated
/// strip determinant for factorial Schur functions.
pub fn multivariate_suite(max_size: usize, trials: usize, seed: u64) -> Result<VerificationReport> {
    let t0 = Instant::now();
    let mut rep = VerificationReport::new("multivariate", false, seed);
    // the worked two-strip example always runs, whatever the size bound
    let worked = SkewShape::parse("5441/21")?;
    let r = check_lp_factorial(&worked, LpFactorialMode::Evaluated, trials, seed)?;
    rep.check(
        format!("evaluated strip determinant at {} ({} trials)", worked, trials),
        r.passes,
        trials,
        r.all_passed(),
    );
    for lam in partitions_up_to(max_size) {
        if lam.is_empty() {
            continue;
        }
        for mu in sub_partitions(&lam) {
            let s = SkewShape::new(lam.clone(), mu)?;
            if s.size() == 0 || !s.connected() {
                continue;
            }
            let r = check_multivariate_nhlf(&s, trials, seed)?;
            rep.check(
                format!("hook identity at {} ({} trials)", s, trials),
                r.passes,
                trials,
                r.all_passed(),
            );
            if lam.size() <= max_size.min(5) {
                let r2 = check_lp_factorial(&s, LpFactorialMode::Evaluated, trials, seed)?;
                rep.check(
                    format!("evaluated strip determinant at {} ({} trials)", s, trials),
                    r2.passes,
                    trials,
                    r2.all_passed(),
                );
            }
        }
    }
    rep.runtime_ms = t0.elapsed().as_millis();
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Cross-route checks used by the golden acceptance battery
// ---------------------------------------------------------------------------

/// The four independent computations of `e(lam/mu)` for a connected shape:
/// breadth-first closure, flagged-tableau determinant, strip determinant,
/// and the unit-weight path determinant.
pub fn excited_count_four_routes(shape: &SkewShape) -> Result<[Int; 4]> {
    let bfs = count_excited(shape)?;
    let wachs = count_excited_wachs(shape)?;
    let lp = count_excited_lp(shape)?;
    let endpoints = kreiman_endpoints(shape)?;
    let lgv: Rat = lgv_determinant(shape.outer(), &endpoints, &|_| Rat::one());
    debug_assert!(lgv.is_integer());
    Ok([bfs, wachs, lp, lgv.to_integer()])
}

/// `f^{lam/mu}` via the weighted path determinant.
pub fn syt_count_lgv(shape: &SkewShape) -> Result<Int> {
    let endpoints = kreiman_endpoints(shape)?;
    let lam = shape.outer().clone();
    let det: Rat = lgv_determinant(&lam, &endpoints, &|c| {
        Rat::new(Int::one(), Int::from(lam.hook(c).expect("cell in shape")))
    });
    let f = det * Rat::from(factorial(shape.size()));
    debug_assert!(f.is_integer());
    Ok(f.to_integer())
}

/// Which suites to run, mirroring the command-line suite names.
pub const SUITE_NAMES: &[&str] = &[
    "nhlf", "qnhlf1", "qnhlf2", "lp", "thick", "ec", "ec-b", "tree", "typebd", "schroeder",
];

/// Run one named suite with desk-scale parameters.
pub fn run_suite(
    name: &str,
    max: usize,
    order: usize,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    match name {
        "nhlf" => Ok(vec![verify_nhlf(max.min(7), seed)?]),
        "qnhlf1" => Ok(vec![verify_qnhlf(QNhlf::First, max.min(6), order, seed)?]),
        "qnhlf2" => Ok(vec![verify_qnhlf(QNhlf::Second, max.min(6), order, seed)?]),
        "lp" => Ok(vec![verify_lp_syt(max.min(7), seed)?]),
        "thick" => Ok(vec![thick_strip_census(max.min(8), 4, order, seed)?]),
        "ec" => Ok(vec![euler_catalan_identities(max.min(8), order, seed)?]),
        "ec-b" | "typebd" => Ok(vec![type_bd_identities(max.min(6), seed)?]),
        "tree" => Ok(vec![binary_tree_identity(max.min(7), seed)?]),
        "schroeder" => Ok(vec![verify_schroeder(max.min(6), seed)?]),
        "all" => {
            let mut out = Vec::new();
            for n in SUITE_NAMES {
                if *n == "ec-b" {
                    continue; // ec-b and typebd share a report
                }
                out.extend(run_suite(n, max, order, seed)?);
            }
            Ok(out)
        }
        other => Err(crate::error::Error::Parse(format!(
            "unknown suite `{}` (expected all|{})",
            other,
            SUITE_NAMES.join("|")
        ))),
    }
}
