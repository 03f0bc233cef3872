//! Truncated Laurent series over a finite field, with explicit precision
//! accounting.
//!
//! An element represents full knowledge of a Laurent series on an exponent
//! window `(-infinity, P)`: every coefficient below the precision bound `P`
//! is known (most of them zero), and nothing is claimed at or beyond `P`.
//! Exact elements (Laurent polynomials) have `P = infinity`. Arithmetic
//! computes the largest sound precision for each result, and coefficient
//! queries beyond the known window fail with a precision error instead of
//! silently answering.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::gf::Gf;
use crate::{Error, Result};

/// Cap on the number of stored coefficients of one element.
pub const MAX_SERIES_WIDTH: usize = 8192;

/// Cap on exponent and precision magnitudes.
pub const MAX_SERIES_EXPONENT: i64 = 1 << 32;

/// Cap on exponents accepted by [`TruncatedLaurent::pow`].
pub const MAX_SERIES_POW: u32 = 4096;

/// Precision of a truncated element: coefficients are known for every
/// exponent strictly below the bound (all of them, when `Exact`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prec {
    Exact,
    UpTo(i64),
}

fn min_prec(a: Prec, b: Prec) -> Prec {
    match (a, b) {
        (Prec::Exact, x) => x,
        (x, Prec::Exact) => x,
        (Prec::UpTo(p), Prec::UpTo(q)) => Prec::UpTo(p.min(q)),
    }
}

/// What is known about the order (least nonzero exponent) of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrdInfo {
    /// The element is exactly zero.
    ExactZero,
    /// The least nonzero exponent, known exactly.
    At(i64),
    /// Every known coefficient vanishes: the order is at least the
    /// precision bound (the element may still be nonzero beyond it).
    ZeroBelow(i64),
}

/// A truncated Laurent series over `F_q`.
///
/// Stored as the exponent of the first nonzero coefficient plus the dense
/// coefficient run from there; the run is trimmed of leading and trailing
/// zeros (implicit zeros fill the rest of the known window).
#[derive(Clone, Debug)]
pub struct TruncatedLaurent {
    gf: Rc<Gf>,
    order: i64,
    coeffs: Vec<u32>,
    prec: Prec,
}

impl PartialEq for TruncatedLaurent {
    fn eq(&self, other: &Self) -> bool {
        self.gf.q() == other.gf.q()
            && self.prec == other.prec
            && self.coeffs == other.coeffs
            && (self.coeffs.is_empty() || self.order == other.order)
    }
}

impl Eq for TruncatedLaurent {}

fn normalize(gf: Rc<Gf>, mut order: i64, mut coeffs: Vec<u32>, prec: Prec) -> Result<TruncatedLaurent> {
    if let Prec::UpTo(p) = prec {
        if p.abs() > MAX_SERIES_EXPONENT {
            return Err(Error::TooLarge(format!(
                "series precision bound {p} exceeds the exponent cap"
            )));
        }
        if order >= p {
            coeffs.clear();
        } else if order.saturating_add(coeffs.len() as i64) > p {
            coeffs.truncate((p - order) as usize);
        }
    }
    let lead = coeffs.iter().position(|&c| c != 0).unwrap_or(coeffs.len());
    if lead > 0 {
        coeffs.drain(..lead);
        order += lead as i64;
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        order = 0;
    }
    if coeffs.len() > MAX_SERIES_WIDTH {
        return Err(Error::TooLarge(format!(
            "series with {} stored coefficients exceeds the width cap {MAX_SERIES_WIDTH}",
            coeffs.len()
        )));
    }
    if order.abs() > MAX_SERIES_EXPONENT || order.saturating_add(coeffs.len() as i64) > MAX_SERIES_EXPONENT {
        return Err(Error::TooLarge(format!(
            "series order {order} exceeds the exponent cap"
        )));
    }
    Ok(TruncatedLaurent { gf, order, coeffs, prec })
}

impl TruncatedLaurent {
    /// The exact zero series.
    pub fn zero(gf: &Rc<Gf>) -> Self {
        TruncatedLaurent { gf: gf.clone(), order: 0, coeffs: Vec::new(), prec: Prec::Exact }
    }

    /// The exact constant one.
    pub fn one(gf: &Rc<Gf>) -> Self {
        TruncatedLaurent { gf: gf.clone(), order: 0, coeffs: alloc::vec![1], prec: Prec::Exact }
    }

    /// Exact Laurent polynomial with the given coefficient run starting at
    /// exponent `order` (ascending). Coefficients are field element indices.
    pub fn from_coeffs(gf: &Rc<Gf>, order: i64, coeffs: &[u32]) -> Result<Self> {
        for &c in coeffs {
            if c >= gf.q() {
                return Err(Error::Invalid(format!(
                    "coefficient index {c} out of range for F_{}",
                    gf.q()
                )));
            }
        }
        normalize(gf.clone(), order, coeffs.to_vec(), Prec::Exact)
    }

    /// Exact monomial `c * X^e`.
    pub fn monomial(gf: &Rc<Gf>, c: u32, e: i64) -> Result<Self> {
        Self::from_coeffs(gf, e, &[c])
    }

    /// The coefficient field.
    pub fn gf(&self) -> &Rc<Gf> {
        &self.gf
    }

    /// Precision of this element.
    pub fn prec(&self) -> Prec {
        self.prec
    }

    /// What is known about the order.
    pub fn ord_info(&self) -> OrdInfo {
        if !self.coeffs.is_empty() {
            OrdInfo::At(self.order)
        } else {
            match self.prec {
                Prec::Exact => OrdInfo::ExactZero,
                Prec::UpTo(p) => OrdInfo::ZeroBelow(p),
            }
        }
    }

    /// Whether this is the exact zero series.
    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.prec == Prec::Exact
    }

    /// The coefficient of `X^e`, or a precision error if `e` is not inside
    /// the known window.
    pub fn coeff_at(&self, e: i64) -> Result<u32> {
        if let Prec::UpTo(p) = self.prec {
            if e >= p {
                return Err(Error::Precision(format!(
                    "coefficient of X^{e} requested but the series is only known below X^{p}"
                )));
            }
        }
        if self.coeffs.is_empty() || e < self.order {
            return Ok(0);
        }
        let idx = e - self.order;
        Ok(self.coeffs.get(idx as usize).copied().unwrap_or(0))
    }

    /// Forgets knowledge at and beyond exponent `p`.
    pub fn truncated(&self, p: i64) -> Result<Self> {
        let prec = min_prec(self.prec, Prec::UpTo(p));
        normalize(self.gf.clone(), self.order, self.coeffs.clone(), prec)
    }

    /// Multiplies by the monomial `X^d`.
    pub fn shift(&self, d: i64) -> Result<Self> {
        let prec = match self.prec {
            Prec::Exact => Prec::Exact,
            Prec::UpTo(p) => Prec::UpTo(p.saturating_add(d)),
        };
        normalize(self.gf.clone(), self.order.saturating_add(d), self.coeffs.clone(), prec)
    }

    /// Multiplies every coefficient by the field element `c`.
    pub fn scale(&self, c: u32) -> Result<Self> {
        if c >= self.gf.q() {
            return Err(Error::Invalid(format!(
                "coefficient index {c} out of range for F_{}",
                self.gf.q()
            )));
        }
        let coeffs: Vec<u32> = self.coeffs.iter().map(|&a| self.gf.mul(a, c)).collect();
        normalize(self.gf.clone(), self.order, coeffs, self.prec)
    }

    fn check_field(&self, rhs: &Self) -> Result<()> {
        if self.gf.q() != rhs.gf.q() {
            return Err(Error::Invalid(format!(
                "mixed coefficient fields F_{} and F_{}",
                self.gf.q(),
                rhs.gf.q()
            )));
        }
        Ok(())
    }

    /// Sum, at the largest sound precision.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        let prec = min_prec(self.prec, rhs.prec);
        if self.coeffs.is_empty() {
            return normalize(self.gf.clone(), rhs.order, rhs.coeffs.clone(), prec);
        }
        if rhs.coeffs.is_empty() {
            return normalize(self.gf.clone(), self.order, self.coeffs.clone(), prec);
        }
        let lo = self.order.min(rhs.order);
        let hi = (self.order + self.coeffs.len() as i64).max(rhs.order + rhs.coeffs.len() as i64);
        let width = (hi - lo) as usize;
        if width > 4 * MAX_SERIES_WIDTH {
            return Err(Error::TooLarge("sum window exceeds the width cap".into()));
        }
        let mut out = alloc::vec![0u32; width];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(self.order - lo) as usize + i] = c;
        }
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            let idx = (rhs.order - lo) as usize + i;
            out[idx] = self.gf.add(out[idx], c);
        }
        normalize(self.gf.clone(), lo, out, prec)
    }

    /// Additive inverse.
    pub fn neg(&self) -> Self {
        let coeffs: Vec<u32> = self.coeffs.iter().map(|&a| self.gf.neg(a)).collect();
        TruncatedLaurent { gf: self.gf.clone(), order: self.order, coeffs, prec: self.prec }
    }

    /// Difference, at the largest sound precision.
    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    /// Product, at the largest sound precision.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        if self.is_exact_zero() || rhs.is_exact_zero() {
            return Ok(Self::zero(&self.gf));
        }
        // lower bound for the order of each factor
        let lb = |x: &Self| -> i64 {
            if x.coeffs.is_empty() {
                match x.prec {
                    Prec::UpTo(p) => p,
                    Prec::Exact => unreachable!(),
                }
            } else {
                x.order
            }
        };
        let (la, lr) = (lb(self), lb(rhs));
        let prec = match (self.prec, rhs.prec) {
            (Prec::Exact, Prec::Exact) => Prec::Exact,
            (Prec::Exact, Prec::UpTo(p)) => Prec::UpTo(p.saturating_add(la)),
            (Prec::UpTo(p), Prec::Exact) => Prec::UpTo(p.saturating_add(lr)),
            (Prec::UpTo(p), Prec::UpTo(q)) => {
                Prec::UpTo((p.saturating_add(lr)).min(q.saturating_add(la)))
            }
        };
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return normalize(self.gf.clone(), 0, Vec::new(), prec);
        }
        let width = self.coeffs.len() + rhs.coeffs.len() - 1;
        if width > 2 * MAX_SERIES_WIDTH {
            return Err(Error::TooLarge("product window exceeds the width cap".into()));
        }
        let mut out = alloc::vec![0u32; width];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                out[i + j] = self.gf.add(out[i + j], self.gf.mul(a, b));
            }
        }
        normalize(self.gf.clone(), self.order + rhs.order, out, prec)
    }

    /// `n`-th power by repeated squaring (`pow(x, 0)` is the constant one).
    pub fn pow(&self, n: u32) -> Result<Self> {
        if n > MAX_SERIES_POW {
            return Err(Error::TooLarge(format!(
                "series exponent {n} exceeds the cap {MAX_SERIES_POW}"
            )));
        }
        let mut acc = Self::one(&self.gf);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse.
    ///
    /// The leading coefficient must be known and nonzero. An exact monomial
    /// inverts exactly; an exact multi-term series has an infinite
    /// expansion, so it must be truncated to a finite window first. A
    /// truncated input with window `[o, p)` yields the inverse on the
    /// window `[-o, p - 2o)` (same width).
    pub fn inv(&self) -> Result<Self> {
        if self.coeffs.is_empty() {
            return match self.prec {
                Prec::Exact => Err(Error::Invalid("the zero series has no inverse".into())),
                Prec::UpTo(p) => Err(Error::Precision(format!(
                    "cannot invert: every coefficient below X^{p} vanishes, so the \
                     leading coefficient is unknown"
                ))),
            };
        }
        let inv0 = self.gf.inv(self.coeffs[0])?;
        let width = match self.prec {
            Prec::Exact => {
                if self.coeffs.len() == 1 {
                    return Self::monomial(&self.gf, inv0, -self.order);
                }
                return Err(Error::Precision(
                    "the inverse of a multi-term exact series is an infinite expansion; \
                     truncate to a finite window first"
                        .into(),
                ));
            }
            Prec::UpTo(p) => (p - self.order) as usize,
        };
        if width > MAX_SERIES_WIDTH {
            return Err(Error::TooLarge("inverse window exceeds the width cap".into()));
        }
        let mut b = alloc::vec![0u32; width];
        b[0] = inv0;
        for k in 1..width {
            let mut s = 0u32;
            let jmax = k.min(self.coeffs.len() - 1);
            for j in 1..=jmax {
                s = self.gf.add(s, self.gf.mul(self.coeffs[j], b[k - j]));
            }
            b[k] = self.gf.mul(inv0, self.gf.neg(s));
        }
        let prec = Prec::UpTo(-self.order + width as i64);
        normalize(self.gf.clone(), -self.order, b, prec)
    }
}

impl fmt::Display for TruncatedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn xpow(e: i64) -> String {
            match e {
                0 => String::new(),
                1 => String::from("X"),
                _ => format!("X^{e}"),
            }
        }
        if self.coeffs.is_empty() {
            return match self.prec {
                Prec::Exact => f.write_str("0"),
                Prec::UpTo(p) => write!(f, "O(X^{p})"),
            };
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let e = self.order + i as i64;
            let name = self.gf.elem_name(c);
            if e == 0 {
                f.write_str(&name)?;
            } else if c == 1 {
                f.write_str(&xpow(e))?;
            } else if name.contains('+') {
                write!(f, "({name})*{}", xpow(e))?;
            } else {
                write!(f, "{name}*{}", xpow(e))?;
            }
        }
        if let Prec::UpTo(p) = self.prec {
            write!(f, " + O(X^{p})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::mk_gf;
    use alloc::string::ToString;

    fn f(q: u32) -> Rc<Gf> {
        Rc::new(mk_gf(q).unwrap())
    }

    #[test]
    fn monomial_inverses_are_exact() {
        let g2 = f(2);
        let x = TruncatedLaurent::monomial(&g2, 1, 1).unwrap();
        let xi = x.inv().unwrap();
        assert_eq!(xi, TruncatedLaurent::monomial(&g2, 1, -1).unwrap());
        assert_eq!(xi.to_string(), "X^-1");
        assert_eq!(x.mul(&xi).unwrap(), TruncatedLaurent::one(&g2));
        // c * X^e over F5
        let g5 = f(5);
        let m = TruncatedLaurent::monomial(&g5, 2, 3).unwrap();
        let mi = m.inv().unwrap();
        assert_eq!(mi, TruncatedLaurent::monomial(&g5, 3, -3).unwrap());
        assert_eq!(m.mul(&mi).unwrap(), TruncatedLaurent::one(&g5));
    }

    #[test]
    fn characteristic_two_squaring() {
        let g2 = f(2);
        let one_plus_x = TruncatedLaurent::from_coeffs(&g2, 0, &[1, 1]).unwrap();
        let sq = one_plus_x.mul(&one_plus_x).unwrap();
        assert_eq!(sq, TruncatedLaurent::from_coeffs(&g2, 0, &[1, 0, 1]).unwrap());
        assert_eq!(sq.to_string(), "1 + X^2");
        let x3 = TruncatedLaurent::monomial(&g2, 1, 3).unwrap();
        assert_eq!(x3.pow(2).unwrap(), TruncatedLaurent::monomial(&g2, 1, 6).unwrap());
    }

    #[test]
    fn quartic_field_products() {
        let g4 = f(4);
        let t = g4.gen().unwrap();
        let t1 = g4.add(t, 1);
        // (t + X)(t+1 + X) = 1 + X + X^2 since t(t+1) = t^2 + t = 1
        let a = TruncatedLaurent::from_coeffs(&g4, 0, &[t, 1]).unwrap();
        let b = TruncatedLaurent::from_coeffs(&g4, 0, &[t1, 1]).unwrap();
        assert_eq!(
            a.mul(&b).unwrap(),
            TruncatedLaurent::from_coeffs(&g4, 0, &[1, 1, 1]).unwrap()
        );
    }

    #[test]
    fn geometric_series_inverse() {
        // 1/(1 + 2X) over F3 is 1 + X + X^2 + ... (all coefficients one)
        let g3 = f(3);
        let d = TruncatedLaurent::from_coeffs(&g3, 0, &[1, 2]).unwrap();
        assert!(matches!(d.inv(), Err(Error::Precision(_))));
        let inv = d.truncated(6).unwrap().inv().unwrap();
        assert_eq!(inv.prec(), Prec::UpTo(6));
        for e in 0..6 {
            assert_eq!(inv.coeff_at(e).unwrap(), 1, "coefficient of X^{e}");
        }
        assert!(inv.coeff_at(6).is_err());
        // check d * inv = 1 within the window
        let prod = d.mul(&inv).unwrap();
        assert_eq!(prod.prec(), Prec::UpTo(6));
        assert_eq!(prod.coeff_at(0).unwrap(), 1);
        for e in 1..6 {
            assert_eq!(prod.coeff_at(e).unwrap(), 0);
        }
    }

    #[test]
    fn negative_order_inverses() {
        // inv of (X^-2 + X^-1) over F2, truncated at X^2: window width 4,
        // result known on [2, 6)
        let g2 = f(2);
        let d = TruncatedLaurent::from_coeffs(&g2, -2, &[1, 1]).unwrap();
        let inv = d.truncated(2).unwrap().inv().unwrap();
        assert_eq!(inv.ord_info(), OrdInfo::At(2));
        assert_eq!(inv.prec(), Prec::UpTo(6));
        // 1/(X^-2(1+X)) = X^2(1 + X + X^2 + ...) over F2
        for e in 2..6 {
            assert_eq!(inv.coeff_at(e).unwrap(), 1);
        }
    }

    #[test]
    fn precision_flows_through_arithmetic() {
        let g3 = f(3);
        let a = TruncatedLaurent::from_coeffs(&g3, 0, &[1, 1, 1, 1, 1]).unwrap();
        let t = a.truncated(3).unwrap();
        assert_eq!(t.prec(), Prec::UpTo(3));
        // exact * truncated: precision shifts by the exact factor's order
        let x2 = TruncatedLaurent::monomial(&g3, 1, 2).unwrap();
        let prod = x2.mul(&t).unwrap();
        assert_eq!(prod.prec(), Prec::UpTo(5));
        assert_eq!(prod.ord_info(), OrdInfo::At(2));
        // cancellation leaves a window-zero, not an exact zero
        let diff = t.sub(&t).unwrap();
        assert_eq!(diff.ord_info(), OrdInfo::ZeroBelow(3));
        assert!(!diff.is_exact_zero());
        let exact_diff = a.sub(&a).unwrap();
        assert_eq!(exact_diff.ord_info(), OrdInfo::ExactZero);
        // window-zero times exact monomial keeps track of the zero window
        let z = diff.mul(&x2).unwrap();
        assert_eq!(z.ord_info(), OrdInfo::ZeroBelow(5));
    }

    #[test]
    fn rejects_bad_inputs() {
        let g2 = f(2);
        let g3 = f(3);
        assert!(TruncatedLaurent::from_coeffs(&g2, 0, &[2]).is_err());
        let a = TruncatedLaurent::one(&g2);
        let b = TruncatedLaurent::one(&g3);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
        assert!(TruncatedLaurent::zero(&g2).inv().is_err());
        let big = TruncatedLaurent::monomial(&g2, 1, 1).unwrap();
        assert!(big.pow(MAX_SERIES_POW + 1).is_err());
        // multi-term exact inverse demands an explicit truncation
        let d = TruncatedLaurent::from_coeffs(&g2, 0, &[1, 1]).unwrap();
        assert!(matches!(d.inv(), Err(Error::Precision(_))));
    }

    #[test]
    fn rendering() {
        let g4 = f(4);
        let t = g4.gen().unwrap();
        let t1 = g4.add(t, 1);
        let e = TruncatedLaurent::from_coeffs(&g4, -1, &[1, 0, t, t1]).unwrap();
        assert_eq!(e.to_string(), "X^-1 + t*X + (t+1)*X^2");
        let z = TruncatedLaurent::zero(&g4);
        assert_eq!(z.to_string(), "0");
        let zt = z.truncated(4).unwrap();
        assert_eq!(zt.to_string(), "O(X^4)");
        let w = TruncatedLaurent::from_coeffs(&g4, 0, &[1, 1]).unwrap().truncated(3).unwrap();
        assert_eq!(w.to_string(), "1 + X + O(X^3)");
    }
}
