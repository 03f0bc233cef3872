//! Minimal-exponent computation for nonzero proper ideals of the two
//! workhorse principal ideal domains: the integers and `F_q[t]`.
//!
//! In a Dedekind domain the minimal exponent of `(g)` is `k` exactly when
//! `(g) = P^k` for a prime `P`, and no exponent works otherwise. Detecting
//! that needs no full factorization: write `g = b^e` with `e` maximal (a
//! perfect-power check), then `g` is a prime power exactly when `b` is
//! prime. The integer side uses exact 64-bit arithmetic with a
//! deterministic Miller-Rabin test; the polynomial side works over the
//! exact field tables of [`crate::gf`] with squarefree decomposition in
//! characteristic `p` and Rabin irreducibility.
//!
//! The polynomial variable renders as `T`; for prime coefficient fields the
//! lowercase `t` is accepted as the variable too, while for extension
//! fields `t` names the field generator and appears inside coefficients.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{mk_gf, Gf};
use crate::{Error, Result};

/// Largest supported polynomial generator degree.
pub const MAX_POLY_DEGREE: usize = 512;

/// A nonzero proper ideal of one of the supported principal ideal domains,
/// by a generator.
#[derive(Clone, Debug)]
pub enum PidIdeal {
    /// `(m)` in the integers, `m >= 2`.
    Int(u64),
    /// `(f)` in `F_q[t]` with `f` monic of degree at least 1 (ascending
    /// coefficients, element indices of `field`).
    Poly { field: Gf, coeffs: Vec<u32> },
}

/// The prime whose power the ideal is, when it is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PidBase {
    Int(u64),
    /// Monic irreducible, ascending coefficients.
    Poly(Vec<u32>),
}

/// Outcome of the minimal-exponent computation: `delta = Some(k)` with the
/// prime base when the generator is (an associate of) the k-th power of a
/// prime, `None` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PidDelta {
    pub delta: Option<u32>,
    pub base: Option<PidBase>,
}

/// The ideal `(m)` of the integers; `m >= 2` so the ideal is nonzero and
/// proper.
pub fn int_ideal(m: u64) -> Result<PidIdeal> {
    if m < 2 {
        return Err(Error::Invalid(format!(
            "({m}) is not a nonzero proper ideal of the integers"
        )));
    }
    Ok(PidIdeal::Int(m))
}

/// The ideal `(f)` of `F_q[t]` from ascending coefficients. The generator
/// is normalized to its monic associate (same ideal); degree must be at
/// least 1.
pub fn poly_ideal(q: u32, coeffs: &[u32]) -> Result<PidIdeal> {
    let field = mk_gf(q)?;
    let mut c: Vec<u32> = coeffs.to_vec();
    for &x in &c {
        if x >= q {
            return Err(Error::Invalid(format!(
                "coefficient index {x} out of range for F_{q}"
            )));
        }
    }
    while c.last() == Some(&0) {
        c.pop();
    }
    if c.len() < 2 {
        return Err(Error::Invalid(
            "the generator must have degree at least 1 (nonzero, nonunit)".into(),
        ));
    }
    if c.len() - 1 > MAX_POLY_DEGREE {
        return Err(Error::TooLarge(format!(
            "generator degree {} exceeds the cap {MAX_POLY_DEGREE}",
            c.len() - 1
        )));
    }
    let lead_inv = field.inv(*c.last().unwrap())?;
    if lead_inv != 1 {
        for x in c.iter_mut() {
            *x = field.mul(*x, lead_inv);
        }
    }
    Ok(PidIdeal::Poly { field, coeffs: c })
}

/// Parses a polynomial generator string over `F_q` and builds its ideal.
pub fn poly_ideal_str(q: u32, s: &str) -> Result<PidIdeal> {
    let field = mk_gf(q)?;
    let coeffs = parse_poly(&field, s)?;
    poly_ideal(q, &coeffs)
}

/// Minimal exponent of the ideal, with the prime base when one exists.
pub fn pid_delta(i: &PidIdeal) -> PidDelta {
    match i {
        PidIdeal::Int(m) => {
            let (b, e) = max_perfect_power(*m);
            if is_prime_u64(b) {
                PidDelta { delta: Some(e), base: Some(PidBase::Int(b)) }
            } else {
                PidDelta { delta: None, base: None }
            }
        }
        PidIdeal::Poly { field, coeffs } => match prime_power(field, coeffs) {
            Some((b, e)) => PidDelta { delta: Some(e), base: Some(PidBase::Poly(b)) },
            None => PidDelta { delta: None, base: None },
        },
    }
}

// ---------------------------------------------------------------------------
// integers

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1u64 % n;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, n);
        }
        a = mulmod(a, a, n);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers: the twelve prime bases
/// up to 37 decide primality for every `n < 3.3 * 10^24`, which covers u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Floor of the e-th root, by binary search in exact integer arithmetic.
fn iroot(m: u64, e: u32) -> u64 {
    if e == 1 {
        return m;
    }
    let pw = |b: u64| -> Option<u64> {
        let mut acc: u128 = 1;
        for _ in 0..e {
            acc = acc.checked_mul(b as u128)?;
            if acc > u64::MAX as u128 {
                return None;
            }
        }
        Some(acc as u64)
    };
    let mut lo = 1u64;
    let mut hi = 1u64 << ((64 / e) + 1).min(63);
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        match pw(mid) {
            Some(v) if v <= m => lo = mid,
            _ => hi = mid - 1,
        }
    }
    lo
}

/// Writes `m = b^e` with `e` maximal (so `b` is not itself a perfect
/// power); `m >= 2`.
fn max_perfect_power(m: u64) -> (u64, u32) {
    for e in (2..=63u32).rev() {
        if m >> e == 0 {
            // b would have to be at least 2, and 2^e > m already
            continue;
        }
        let b = iroot(m, e);
        if b >= 2 {
            let mut acc: u128 = 1;
            for _ in 0..e {
                acc *= b as u128;
            }
            if acc == m as u128 {
                return (b, e);
            }
        }
    }
    (m, 1)
}

// ---------------------------------------------------------------------------
// polynomials over F_q (ascending coefficient vectors; empty = zero)

fn pnorm(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pmul(gf: &Gf, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = gf.add(out[i + j], gf.mul(ai, bj));
        }
    }
    pnorm(out)
}

fn padd(gf: &Gf, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out = vec![0u32; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = gf.add(x, y);
    }
    pnorm(out)
}

fn pneg(gf: &Gf, a: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| gf.neg(x)).collect()
}

fn psub(gf: &Gf, a: &[u32], b: &[u32]) -> Vec<u32> {
    padd(gf, a, &pneg(gf, b))
}

/// Quotient and remainder by a nonzero divisor.
fn pdivrem(gf: &Gf, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let db = b.len() - 1;
    let lead_inv = gf.inv(*b.last().unwrap()).expect("nonzero lead");
    let mut r: Vec<u32> = a.to_vec();
    if r.len() <= db && !(db == 0) {
        return (Vec::new(), pnorm(r));
    }
    let mut q = vec![0u32; r.len().saturating_sub(db)];
    while r.len() > db || (db == 0 && !r.is_empty()) {
        let lead = *r.last().unwrap();
        if lead == 0 {
            r.pop();
            continue;
        }
        let c = gf.mul(lead, lead_inv);
        let shift = r.len() - 1 - db;
        q[shift] = c;
        for i in 0..=db {
            let sub = gf.mul(c, b[i]);
            r[shift + i] = gf.sub(r[shift + i], sub);
        }
        r.pop();
    }
    (pnorm(q), pnorm(r))
}

fn pmonic(gf: &Gf, a: &[u32]) -> Vec<u32> {
    if a.is_empty() {
        return Vec::new();
    }
    let inv = gf.inv(*a.last().unwrap()).expect("nonzero lead");
    if inv == 1 {
        return a.to_vec();
    }
    a.iter().map(|&x| gf.mul(x, inv)).collect()
}

fn pgcd(gf: &Gf, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let (_, r) = pdivrem(gf, &x, &y);
        x = y;
        y = r;
    }
    pmonic(gf, &x)
}

fn pderiv(gf: &Gf, a: &[u32]) -> Vec<u32> {
    if a.len() < 2 {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() - 1];
    for i in 1..a.len() {
        // i * a_i means adding a_i to itself i times; reduce i mod p first
        let mut c = 0u32;
        for _ in 0..(i as u32 % gf.p()) {
            c = gf.add(c, a[i]);
        }
        out[i - 1] = c;
    }
    pnorm(out)
}

/// `base^e mod f` by square and multiply.
fn ppow_mod(gf: &Gf, base: &[u32], e: u32, f: &[u32]) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = pdivrem(gf, base, f).1;
    let mut exp = e;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = pdivrem(gf, &pmul(gf, &acc, &b), f).1;
        }
        b = pdivrem(gf, &pmul(gf, &b, &b), f).1;
        exp >>= 1;
    }
    acc
}

/// Rabin irreducibility: `f` of degree `d` is irreducible over `F_q` iff
/// `t^(q^d) = t (mod f)` and `gcd(t^(q^(d/l)) - t, f) = 1` for every prime
/// `l` dividing `d`.
fn pirreducible(gf: &Gf, f: &[u32]) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    // frob[j] = t^(q^j) mod f, computed by iterating the q-th power map
    let mut frob_j = pdivrem(gf, &x, f).1;
    let mut at: Vec<Option<Vec<u32>>> = vec![None; d + 1];
    for j in 1..=d {
        frob_j = ppow_mod_poly(gf, &frob_j, f);
        at[j] = Some(frob_j.clone());
    }
    if at[d].as_ref().unwrap() != &pdivrem(gf, &x, f).1 {
        return false;
    }
    let mut rem = d;
    let mut l = 2;
    let mut prime_divs = Vec::new();
    while l * l <= rem {
        if rem % l == 0 {
            prime_divs.push(l);
            while rem % l == 0 {
                rem /= l;
            }
        }
        l += 1;
    }
    if rem > 1 {
        prime_divs.push(rem);
    }
    for l in prime_divs {
        let h = at[d / l].as_ref().unwrap();
        let g = pgcd(gf, &psub(gf, h, &pdivrem(gf, &x, f).1), f);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// One application of the q-th power map modulo `f`.
fn ppow_mod_poly(gf: &Gf, h: &[u32], f: &[u32]) -> Vec<u32> {
    ppow_mod(gf, h, gf.q(), f)
}

/// The p-th root of a polynomial whose derivative vanishes: every exponent
/// with a nonzero coefficient is a multiple of `p`, and the perfect field
/// `F_q` supplies unique p-th roots of the coefficients.
fn ppth_root(gf: &Gf, f: &[u32]) -> Vec<u32> {
    let p = gf.p() as usize;
    let mut out = vec![0u32; (f.len() - 1) / p + 1];
    for (j, &c) in f.iter().enumerate() {
        if c == 0 {
            continue;
        }
        debug_assert_eq!(j % p, 0, "vanishing derivative forces p-multiple exponents");
        out[j / p] = gf.frob_inv(c);
    }
    pnorm(out)
}

/// Writes monic `f = g^e` with `g` monic irreducible, when possible.
fn prime_power(gf: &Gf, f: &[u32]) -> Option<(Vec<u32>, u32)> {
    debug_assert!(f.len() >= 2 && *f.last().unwrap() == 1);
    let df = pderiv(gf, f);
    if df.is_empty() {
        // f = h(t^p) = (p-th root of f)^p
        let root = ppth_root(gf, f);
        let (g, e) = prime_power(gf, &root)?;
        return Some((g, e * gf.p()));
    }
    let u = pgcd(gf, f, &df);
    let w = if u.len() == 1 {
        f.to_vec() // squarefree
    } else {
        let (q, r) = pdivrem(gf, f, &u);
        debug_assert!(r.is_empty());
        pmonic(gf, &q)
    };
    if !pirreducible(gf, &w) {
        return None;
    }
    let dw = w.len() - 1;
    let dfull = f.len() - 1;
    if dfull % dw != 0 {
        return None;
    }
    let e = (dfull / dw) as u32;
    // verify exactly: w^e must reproduce f
    let mut acc = vec![1u32];
    for _ in 0..e {
        acc = pmul(gf, &acc, &w);
    }
    if acc == f {
        Some((w, e))
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// polynomial strings

/// Renders an ascending coefficient vector as a polynomial in `T`.
pub fn poly_string(gf: &Gf, coeffs: &[u32]) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut terms: Vec<String> = Vec::new();
    for i in (0..coeffs.len()).rev() {
        let c = coeffs[i];
        if c == 0 {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "T".into(),
            _ => format!("T^{i}"),
        };
        let coef = if c == 1 && i > 0 {
            String::new()
        } else {
            let name = gf.elem_name(c);
            if (name.contains('+') || name.contains('-')) && i > 0 {
                format!("({name})")
            } else {
                name
            }
        };
        let term = match (coef.is_empty(), var.is_empty()) {
            (true, _) => var.clone(),
            (false, true) => coef,
            (false, false) => format!("{coef}*{var}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum PTok {
    Num(u32),
    Gen,
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    LPar,
    RPar,
}

fn plex(gf: &Gf, s: &str) -> Result<Vec<PTok>> {
    let mut toks = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push(PTok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(PTok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(PTok::Star);
                i += 1;
            }
            '^' => {
                toks.push(PTok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(PTok::LPar);
                i += 1;
            }
            ')' => {
                toks.push(PTok::RPar);
                i += 1;
            }
            'T' => {
                toks.push(PTok::Var);
                i += 1;
            }
            't' => {
                // for prime fields there is no generator element, so `t` can
                // only mean the variable
                if gf.k() == 1 {
                    toks.push(PTok::Var);
                } else {
                    toks.push(PTok::Gen);
                }
                i += 1;
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    v = v * 10 + (bytes[i] - b'0') as u64;
                    if v > u32::MAX as u64 {
                        return Err(Error::Parse("numeric literal too large".into()));
                    }
                    i += 1;
                }
                toks.push(PTok::Num(v as u32));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {other:?} in polynomial expression"
                )))
            }
        }
    }
    Ok(toks)
}

/// Parses a polynomial expression over `F_q` into ascending coefficients.
/// The variable is `T` (or `t` over prime fields); over extension fields
/// `t` denotes the field generator inside coefficients.
pub fn parse_poly(gf: &Gf, s: &str) -> Result<Vec<u32>> {
    let toks = plex(gf, s)?;
    let mut pos = 0usize;
    let v = pp_sum(gf, &toks, &mut pos)?;
    if pos != toks.len() {
        return Err(Error::Parse(format!(
            "unexpected trailing input in polynomial expression {s:?}"
        )));
    }
    Ok(v)
}

fn pp_sum(gf: &Gf, toks: &[PTok], pos: &mut usize) -> Result<Vec<u32>> {
    let mut acc = pp_term(gf, toks, pos)?;
    while let Some(t) = toks.get(*pos) {
        match t {
            PTok::Plus => {
                *pos += 1;
                let rhs = pp_term(gf, toks, pos)?;
                acc = padd(gf, &acc, &rhs);
            }
            PTok::Minus => {
                *pos += 1;
                let rhs = pp_term(gf, toks, pos)?;
                acc = psub(gf, &acc, &rhs);
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn pp_term(gf: &Gf, toks: &[PTok], pos: &mut usize) -> Result<Vec<u32>> {
    let mut acc = pp_factor(gf, toks, pos)?;
    loop {
        match toks.get(*pos) {
            Some(PTok::Star) => {
                *pos += 1;
                let rhs = pp_factor(gf, toks, pos)?;
                acc = pmul(gf, &acc, &rhs);
            }
            Some(PTok::Gen) | Some(PTok::Var) | Some(PTok::LPar) | Some(PTok::Num(_)) => {
                let rhs = pp_factor(gf, toks, pos)?;
                acc = pmul(gf, &acc, &rhs);
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn pp_factor(gf: &Gf, toks: &[PTok], pos: &mut usize) -> Result<Vec<u32>> {
    let mut negate = false;
    while let Some(PTok::Minus) = toks.get(*pos) {
        negate = !negate;
        *pos += 1;
    }
    let mut base: Vec<u32> = match toks.get(*pos) {
        Some(PTok::Num(v)) => {
            *pos += 1;
            pnorm(vec![v % gf.p()])
        }
        Some(PTok::Gen) => {
            *pos += 1;
            vec![gf.gen()?]
        }
        Some(PTok::Var) => {
            *pos += 1;
            vec![0, 1]
        }
        Some(PTok::LPar) => {
            *pos += 1;
            let v = pp_sum(gf, toks, pos)?;
            match toks.get(*pos) {
                Some(PTok::RPar) => *pos += 1,
                _ => return Err(Error::Parse("missing closing parenthesis".into())),
            }
            v
        }
        other => {
            return Err(Error::Parse(format!(
                "expected a number, t, T, or a parenthesized expression, found {other:?}"
            )))
        }
    };
    if let Some(PTok::Caret) = toks.get(*pos) {
        *pos += 1;
        match toks.get(*pos) {
            Some(PTok::Num(e)) => {
                *pos += 1;
                if *e as usize * base.len().saturating_sub(1) > 4 * MAX_POLY_DEGREE {
                    return Err(Error::TooLarge("exponent blows past the degree cap".into()));
                }
                let mut acc = vec![1u32];
                for _ in 0..*e {
                    acc = pmul(gf, &acc, &base);
                }
                base = acc;
            }
            _ => return Err(Error::Parse("exponent must be a nonnegative integer".into())),
        }
    }
    if negate {
        base = pneg(gf, &base);
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify;
    use crate::ideal::ideal_from_gens;
    use crate::ring::mk_zn;

    fn int_delta(m: u64) -> PidDelta {
        pid_delta(&int_ideal(m).unwrap())
    }

    fn fq_delta(q: u32, s: &str) -> PidDelta {
        pid_delta(&poly_ideal_str(q, s).unwrap())
    }

    #[test]
    fn integer_prime_powers() {
        assert_eq!(
            int_delta(8),
            PidDelta { delta: Some(3), base: Some(PidBase::Int(2)) }
        );
        assert_eq!(int_delta(6), PidDelta { delta: None, base: None });
        assert_eq!(
            int_delta(97),
            PidDelta { delta: Some(1), base: Some(PidBase::Int(97)) }
        );
        assert_eq!(
            int_delta(1024),
            PidDelta { delta: Some(10), base: Some(PidBase::Int(2)) }
        );
        assert_eq!(int_delta(36), PidDelta { delta: None, base: None });
        // 3^40 fits in u64
        assert_eq!(
            int_delta(12_157_665_459_056_928_801),
            PidDelta { delta: Some(40), base: Some(PidBase::Int(3)) }
        );
        assert_eq!(
            int_delta(1u64 << 63),
            PidDelta { delta: Some(63), base: Some(PidBase::Int(2)) }
        );
        // the largest 64-bit prime
        assert_eq!(
            int_delta(18_446_744_073_709_551_557),
            PidDelta { delta: Some(1), base: Some(PidBase::Int(18_446_744_073_709_551_557)) }
        );
        // a strong pseudoprime to the first nine prime bases; the full base
        // set must still reject it
        assert_eq!(int_delta(3_825_123_056_546_413_051), PidDelta { delta: None, base: None });
        assert_eq!(int_delta(u64::MAX), PidDelta { delta: None, base: None });
        assert!(int_ideal(0).is_err());
        assert!(int_ideal(1).is_err());
    }

    #[test]
    fn binary_polynomials() {
        let t = |s: &str| -> Vec<u32> {
            let f = mk_gf(2).unwrap();
            parse_poly(&f, s).unwrap()
        };
        assert_eq!(
            fq_delta(2, "T^2"),
            PidDelta { delta: Some(2), base: Some(PidBase::Poly(t("T"))) }
        );
        // char-2 p-th-root path: T^2+1 = (T+1)^2
        assert_eq!(
            fq_delta(2, "T^2+1"),
            PidDelta { delta: Some(2), base: Some(PidBase::Poly(t("T+1"))) }
        );
        assert_eq!(
            fq_delta(2, "T^2+T+1"),
            PidDelta { delta: Some(1), base: Some(PidBase::Poly(t("T^2+T+1"))) }
        );
        assert_eq!(fq_delta(2, "T^2+T"), PidDelta { delta: None, base: None });
        // (T^2+T+1)^3 expanded
        assert_eq!(
            fq_delta(2, "T^6+T^5+T^3+T+1"),
            PidDelta { delta: Some(3), base: Some(PidBase::Poly(t("T^2+T+1"))) }
        );
        // (T^3+T+1)^2 via the vanishing-derivative path
        assert_eq!(
            fq_delta(2, "T^6+T^2+1"),
            PidDelta { delta: Some(2), base: Some(PidBase::Poly(t("T^3+T+1"))) }
        );
        // lowercase variable accepted over a prime field
        assert_eq!(fq_delta(2, "t^2").delta, Some(2));
    }

    #[test]
    fn extension_field_polynomials() {
        // (T^2+T+t)^2 = T^4+T^2+t^2 = T^4+T^2+t+1 over F_4
        let f4 = mk_gf(4).unwrap();
        let base = parse_poly(&f4, "T^2+T+t").unwrap();
        assert_eq!(
            fq_delta(4, "T^4+T^2+t+1"),
            PidDelta { delta: Some(2), base: Some(PidBase::Poly(base)) }
        );
        // T^2+1 factors over F_9 (t^2 = -1) but not over F_3
        assert_eq!(fq_delta(9, "T^2+1"), PidDelta { delta: None, base: None });
        assert_eq!(fq_delta(3, "T^2+1").delta, Some(1));
        // non-monic generators normalize to the same ideal
        assert_eq!(fq_delta(3, "2*T^2").delta, Some(2));
        assert_eq!(
            fq_delta(3, "2*T^2").base,
            Some(PidBase::Poly(vec![0, 1]))
        );
    }

    #[test]
    fn rendering_round_trips() {
        for (q, s) in [
            (2u32, "T^2+T+1"),
            (4, "T^2+(t+1)*T+t"),
            (9, "T^3+2*T+t"),
            (5, "T^4+3*T^2+2"),
        ] {
            let f = mk_gf(q).unwrap();
            let c = parse_poly(&f, s).unwrap();
            let rendered = poly_string(&f, &c);
            assert_eq!(parse_poly(&f, &rendered).unwrap(), c, "{q} {s} -> {rendered}");
        }
        assert!(poly_ideal_str(2, "1").is_err());
        assert!(poly_ideal_str(2, "0").is_err());
        assert!(poly_ideal_str(4, "x").is_err());
    }

    #[test]
    fn transport_to_square_modulus_rings() {
        // the generator's minimal exponent in the integers must match the
        // exhaustive computation in Z/(m^2) on the image ideal
        for m in 2u32..=60 {
            let pd = int_delta(m as u64);
            let r = mk_zn(m * m).unwrap();
            let i = ideal_from_gens(&r, &[m]).unwrap();
            let dr = classify::delta(&r, &i).unwrap();
            assert_eq!(pd.delta, dr.delta, "m = {m}");
        }
    }

    #[test]
    fn primality_oracle_matches_trial_division() {
        for n in 0u64..2000 {
            let mut trial = n >= 2;
            let mut d = 2;
            while d * d <= n {
                if n % d == 0 {
                    trial = false;
                    break;
                }
                d += 1;
            }
            assert_eq!(is_prime_u64(n), trial, "n = {n}");
        }
    }
}
