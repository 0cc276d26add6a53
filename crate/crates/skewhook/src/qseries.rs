//! Polynomials and truncated power series in `q` over exact rationals.
//!
//! - [`QPoly`]: dense integer-coefficient polynomial, printed in descending
//!   order (`q^8+2*q^7+...`).
//! - [`QSeries`]: rational-coefficient series truncated at an order `N`,
//!   printed in ascending order with an explicit `+O(q^{N+1})` marker.
//!
//! Series arithmetic propagates the truncation order as the minimum of the
//! operands; exact polynomials (and the scalar constants produced by
//! [`QSeries::one`]/`zero`) carry an "unbounded" order that never constrains
//! the result. Inversion of units uses Newton iteration, which stays exact
//! because the coefficients are rationals.

use crate::error::{Error, Result};
use crate::shapes::SkewShape;
use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Marker trait for exact commutative rings used in generic determinants and
/// weighted path sums.
pub trait Ring: Clone + Zero + One + Sub<Output = Self> + PartialEq {}
impl<T: Clone + Zero + One + Sub<Output = T> + PartialEq> Ring for T {}

/// Order value meaning "not truncated": an exact polynomial.
pub const UNBOUNDED: usize = usize::MAX;

// ---------------------------------------------------------------------------
// QPoly
// ---------------------------------------------------------------------------

/// Dense integer-coefficient polynomial in `q`; index = exponent.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<Int>,
}

impl QPoly {
    /// Build from coefficients (index = exponent), trimming trailing zeros.
    pub fn new(coeffs: Vec<Int>) -> Self {
        let mut c = coeffs;
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly { coeffs: c }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly {
            coeffs: vec![Int::one()],
        }
    }

    /// The monomial `q^e`.
    pub fn q_power(e: usize) -> Self {
        let mut c = vec![Int::zero(); e + 1];
        c[e] = Int::one();
        QPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> Int {
        self.coeffs.get(e).cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Increment the coefficient of `q^e` by one (used by statistics counters).
    pub fn bump(&mut self, e: usize) {
        if self.coeffs.len() <= e {
            self.coeffs.resize(e + 1, Int::zero());
        }
        self.coeffs[e] += 1;
    }

    /// Value at `q = 1`: the sum of the coefficients.
    pub fn eval_at_one(&self) -> Int {
        self.coeffs.iter().sum()
    }

    /// View as a truncated series of the given order.
    pub fn to_series(&self, order: usize) -> QSeries {
        let mut s = QSeries::zero_with_order(order);
        for (e, c) in self.coeffs.iter().enumerate() {
            if e > order {
                break;
            }
            s.coeffs[e] = Rat::from(c.clone());
        }
        s
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl fmt::Display for QPoly {
    /// Canonical descending form, e.g. `q^8+2*q^7+3*q^6`, `q+1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for e in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[e];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            write!(f, "{}", monomial_str(&mag.to_string(), e))?;
        }
        Ok(())
    }
}

fn monomial_str(mag: &str, e: usize) -> String {
    match (mag, e) {
        (_, 0) => mag.to_string(),
        ("1", 1) => "q".to_string(),
        ("1", _) => format!("q^{}", e),
        (_, 1) => format!("{}*q", mag),
        (_, _) => format!("{}*q^{}", mag, e),
    }
}

// ---------------------------------------------------------------------------
// QSeries
// ---------------------------------------------------------------------------

/// Rational-coefficient power series truncated at `order`: the coefficients
/// of `q^0 ..= q^order` are exact; everything above is unknown.
#[derive(Clone, Debug)]
pub struct QSeries {
    coeffs: Vec<Rat>,
    order: usize,
}

impl QSeries {
    pub fn zero_with_order(order: usize) -> Self {
        let len = if order == UNBOUNDED { 1 } else { order + 1 };
        QSeries {
            coeffs: vec![Rat::zero(); len],
            order,
        }
    }

    pub fn constant(c: Rat) -> Self {
        QSeries {
            coeffs: vec![c],
            order: UNBOUNDED,
        }
    }

    /// The monomial `q^e`, exact (unbounded order).
    pub fn q_power(e: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); e + 1];
        coeffs[e] = Rat::one();
        QSeries {
            coeffs,
            order: UNBOUNDED,
        }
    }

    /// `1 + q^h + q^{2h} + ...` through the given order; errors when `h <= 0`.
    pub fn geom(h: usize, order: usize) -> Result<Self> {
        if h == 0 {
            return Err(Error::Domain("geometric series needs exponent h >= 1".into()));
        }
        let mut s = QSeries::zero_with_order(order);
        let mut e = 0;
        while e <= order {
            s.coeffs[e] = Rat::one();
            e += h;
        }
        Ok(s)
    }

    /// The q-odd double factorial `[2m-1]!! = (1-q)(1-q^3)...(1-q^{2m-1})`,
    /// exact (order unbounded); the empty product for `m = 0`.
    pub fn q_odd_double_factorial(m: usize) -> Self {
        let mut acc = QSeries::constant(Rat::one());
        for i in 1..=m {
            acc = &acc * &QSeries::one_minus_q_power(2 * i - 1);
        }
        acc
    }

    /// `1 - q^e`, exact.
    pub fn one_minus_q_power(e: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); e + 1];
        coeffs[0] = Rat::one();
        coeffs[e] = -Rat::one();
        QSeries {
            coeffs,
            order: UNBOUNDED,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, e: usize) -> Rat {
        self.coeffs.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficients up to `min(order, upto)` inclusive.
    pub fn coeffs_upto(&self, upto: usize) -> Vec<Rat> {
        (0..=upto.min(self.order)).map(|e| self.coeff(e)).collect()
    }

    fn trim_to(&mut self, order: usize) {
        if order != UNBOUNDED && self.coeffs.len() > order + 1 {
            self.coeffs.truncate(order + 1);
        }
        self.order = order;
    }

    /// True when all known coefficients agree through `min` of the two orders.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        let upto = self.order.min(other.order);
        if upto == UNBOUNDED {
            let len = self.coeffs.len().max(other.coeffs.len());
            return (0..len).all(|e| self.coeff(e) == other.coeff(e));
        }
        (0..=upto).all(|e| self.coeff(e) == other.coeff(e))
    }

    /// Multiplicative inverse by Newton iteration; errors when the constant
    /// term vanishes. Exact at every step thanks to rational arithmetic.
    pub fn inverse(&self) -> Result<QSeries> {
        if self.coeff(0).is_zero() {
            return Err(Error::Domain(
                "series with zero constant term has no inverse".into(),
            ));
        }
        if self.order == UNBOUNDED && self.coeffs.len() == 1 {
            return Ok(QSeries::constant(self.coeff(0).recip()));
        }
        let order = if self.order == UNBOUNDED {
            // An exact polynomial still needs a truncation to invert; callers
            // should multiply into a truncated series first.
            return Err(Error::Domain(
                "cannot invert an untruncated polynomial; fix an order first".into(),
            ));
        } else {
            self.order
        };
        let mut g = QSeries {
            coeffs: vec![self.coeff(0).recip()],
            order: 0,
        };
        let mut prec = 0usize;
        while prec < order {
            prec = (2 * prec + 1).min(order);
            // g <- g * (2 - f * g) at precision `prec`
            let mut f = self.clone();
            f.trim_to(prec);
            g.order = prec;
            g.coeffs.resize(prec + 1, Rat::zero());
            let fg = &f * &g;
            let mut two_minus = QSeries::zero_with_order(prec);
            two_minus.coeffs[0] = Rat::from(Int::from(2));
            let corr = &two_minus - &fg;
            g = &g * &corr;
        }
        Ok(g)
    }

    /// `self / rhs` at the truncation order of the operands.
    pub fn div(&self, rhs: &QSeries) -> Result<QSeries> {
        let mut r = rhs.clone();
        if r.order == UNBOUNDED {
            if self.order == UNBOUNDED {
                return Err(Error::Domain(
                    "division needs at least one truncated operand".into(),
                ));
            }
            r.trim_to(self.order);
        }
        Ok(self * &r.inverse()?)
    }

    /// Re-truncate to a (smaller or equal) order.
    pub fn truncated(&self, order: usize) -> QSeries {
        let mut s = self.clone();
        s.trim_to(order.min(self.order));
        s
    }
}

impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && {
            let upto = self.coeffs.len().max(other.coeffs.len());
            (0..upto).all(|e| self.coeff(e) == other.coeff(e))
        }
    }
}
impl Eq for QSeries {}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        let len = if order == UNBOUNDED {
            self.coeffs.len().max(rhs.coeffs.len())
        } else {
            (order + 1).min(self.coeffs.len().max(rhs.coeffs.len()).max(1))
        };
        let mut coeffs = vec![Rat::zero(); len];
        for (e, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(e) + rhs.coeff(e);
        }
        QSeries { coeffs, order }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self + &(-rhs.clone())
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(mut self) -> QSeries {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        if self.coeffs.iter().all(Zero::is_zero) || rhs.coeffs.iter().all(Zero::is_zero) {
            let mut z = QSeries::zero_with_order(UNBOUNDED);
            z.trim_to(order);
            return z;
        }
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let len = if order == UNBOUNDED {
            full
        } else {
            full.min(order + 1)
        };
        let mut coeffs = vec![Rat::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs, order }
    }
}

// Owned-value forms so QSeries satisfies the Zero/One traits.
impl Add for QSeries {
    type Output = QSeries;
    fn add(self, rhs: QSeries) -> QSeries {
        &self + &rhs
    }
}
impl Sub for QSeries {
    type Output = QSeries;
    fn sub(self, rhs: QSeries) -> QSeries {
        &self - &rhs
    }
}
impl Mul for QSeries {
    type Output = QSeries;
    fn mul(self, rhs: QSeries) -> QSeries {
        &self * &rhs
    }
}

impl Zero for QSeries {
    fn zero() -> Self {
        QSeries::constant(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for QSeries {
    fn one() -> Self {
        QSeries::constant(Rat::one())
    }
}

impl fmt::Display for QSeries {
    /// Canonical ascending form with a tail marker, e.g. `1+q+2*q^2+O(q^4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let mag_str = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            if wrote {
                write!(f, "{}", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{}", monomial_str(&mag_str, e))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        if self.order != UNBOUNDED {
            write!(f, "+O(q^{})", self.order + 1)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// The skew Schur principal specialization via excited diagrams
// ---------------------------------------------------------------------------

/// The stable principal specialization `s_{lam/mu}(1, q, q^2, ...)` truncated
/// at `order`, computed as a sum over excited diagrams: each diagram `D`
/// contributes `prod_{(i,j) not in D} q^{lam'_j - i} / (1 - q^{h(i,j)})`,
/// the hooks being those of the straight shape `lam`.
pub fn ssyt_series_nhlf(shape: &SkewShape, order: usize) -> Result<QSeries> {
    let lam = shape.outer();
    let conj = lam.conjugate();
    let diagrams = crate::excited::excited_diagrams(shape)?;
    let all_cells = lam.cells();
    let mut total = QSeries::zero_with_order(order);
    for d in &diagrams {
        let mut term: QSeries = QSeries::one().truncated(order);
        for &cell in &all_cells {
            if d.cells().contains(&cell) {
                continue;
            }
            let h = lam.hook(cell)?;
            let shift = conj.part(cell.col) - cell.row;
            term = &term * &QSeries::q_power(shift);
            term = &term * &QSeries::geom(h, order)?;
        }
        total = &total + &term;
    }
    Ok(total.truncated(order))
}

/// `prod_{i=1}^{m} 1/(1 - q^i)` truncated at `order`.
pub fn inv_q_factorial(m: usize, order: usize) -> Result<QSeries> {
    let mut acc = QSeries::one().truncated(order);
    for i in 1..=m {
        acc = &acc * &QSeries::geom(i, order)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use proptest::prelude::*;

    #[test]
    fn qpoly_display() {
        let p = QPoly::new(vec![Int::from(0), Int::from(1), Int::from(1)]);
        assert_eq!(p.to_string(), "q^2+q");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::one().to_string(), "1");
        let m = QPoly::new(vec![Int::from(2), Int::from(-3)]);
        assert_eq!(m.to_string(), "-3*q+2");
    }

    #[test]
    fn geom_examples() {
        assert_eq!(
            QSeries::geom(1, 3).unwrap().to_string(),
            "1+q+q^2+q^3+O(q^4)"
        );
        assert_eq!(
            QSeries::geom(3, 7).unwrap().to_string(),
            "1+q^3+q^6+O(q^8)"
        );
        assert!(QSeries::geom(0, 5).is_err());
    }

    #[test]
    fn q_odd_double_factorial_examples() {
        assert_eq!(QSeries::q_odd_double_factorial(0).to_string(), "1");
        assert_eq!(QSeries::q_odd_double_factorial(1).to_string(), "1-q");
        // (1-q)(1-q^3) = 1 - q - q^3 + q^4
        let m2 = QSeries::q_odd_double_factorial(2);
        assert_eq!(m2.coeff(0), rat(1, 1));
        assert_eq!(m2.coeff(1), rat(-1, 1));
        assert_eq!(m2.coeff(2), rat(0, 1));
        assert_eq!(m2.coeff(3), rat(-1, 1));
        assert_eq!(m2.coeff(4), rat(1, 1));
    }

    #[test]
    fn inverse_round_trip() {
        let f = QSeries::one_minus_q_power(1).truncated(12);
        let g = f.inverse().unwrap();
        assert!(g.agrees_with(&QSeries::geom(1, 12).unwrap()));
        let prod = &f * &g;
        assert!(prod.agrees_with(&QSeries::one()));
    }

    #[test]
    fn zigzag_hook_product_matches_brute_series() {
        // the single-path shape (2,1): hooks along the path are {1,3,1} and
        // the excited series equals q * geom(1)^2 * geom(3)
        let z = SkewShape::parse("d3/d1").unwrap();
        let nhlf = ssyt_series_nhlf(&z, 10).unwrap();
        let mut direct = QSeries::q_power(1).truncated(10);
        direct = &direct * &QSeries::geom(1, 10).unwrap();
        direct = &direct * &QSeries::geom(1, 10).unwrap();
        direct = &direct * &QSeries::geom(3, 10).unwrap();
        assert!(nhlf.agrees_with(&direct));
        let brute = crate::tableaux::ssyt_series(&z, 10).unwrap();
        assert!(nhlf.agrees_with(&brute));
        // the empty skew shape has the constant series
        let empty = ssyt_series_nhlf(&SkewShape::parse("22/22").unwrap(), 10).unwrap();
        assert!(empty.agrees_with(&QSeries::one()));
    }

    fn arb_series(order: usize) -> impl Strategy<Value = QSeries> {
        proptest::collection::vec((-20i64..=20, 1i64..=10), order + 1).prop_map(move |cs| {
            let mut s = QSeries::zero_with_order(order);
            for (e, (n, d)) in cs.into_iter().enumerate() {
                s.coeffs[e] = rat(n, d);
            }
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms_at_order_20(a in arb_series(20), b in arb_series(20), c in arb_series(20)) {
            let ab_c = &(&a * &b) * &c;
            let a_bc = &a * &(&b * &c);
            prop_assert!(ab_c.agrees_with(&a_bc));
            let lhs = &a * &(&b + &c);
            let rhs = &(&a * &b) + &(&a * &c);
            prop_assert!(lhs.agrees_with(&rhs));
        }

    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn unit_inverse(mut a in arb_series(20)) {
            if a.coeff(0).is_zero() {
                a.coeffs[0] = rat(1, 1);
            }
            let inv = a.inverse().unwrap();
            let prod = &a * &inv;
            prop_assert!(prod.agrees_with(&QSeries::one()));
        }
    }
}
