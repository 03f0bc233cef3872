//! Exact arithmetic tables for the finite fields `F_q`, `q = p^k <= 128`,
//! with Frobenius-cut subfields and `F_p`-subspaces as 128-bit masks.
//!
//! Elements are indices `0..q`. For `k >= 2` an index encodes a polynomial
//! in the field generator `t` over `F_p` by its base-`p` digits (digit `i`
//! is the coefficient of `t^i`), reduced modulo the lexicographically least
//! monic irreducible polynomial of degree `k`; for `k = 1` the index is the
//! residue itself and there is no generator. Because `q <= 128`, any subset
//! of the field fits in a `u128` bit mask; `F_p`-subspaces (equivalently,
//! additive subgroups — scaling by `F_p` is repeated addition) are passed
//! around as such masks.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Largest supported field size.
pub const MAX_GF_ORDER: u32 = 128;

/// A finite field `F_q` with exact lookup-table arithmetic.
#[derive(Clone, Debug)]
pub struct Gf {
    p: u32,
    k: u32,
    q: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>, // inv[0] unused (stores 0)
    /// Coefficients of the minimal polynomial of the generator, ascending,
    /// including the leading 1; empty for prime fields.
    min_poly: Vec<u32>,
}

fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplies two polynomials over `F_p` (coefficient vectors, ascending).
fn fp_poly_mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

/// Remainder of `a` modulo monic `m` over `F_p`.
fn fp_poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for i in 0..=dm {
                let idx = shift + i;
                r[idx] = (r[idx] + (p - lead) * m[i] % p + p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// True if the monic polynomial (ascending coefficients, leading 1) has no
/// monic divisor of degree between 1 and half its own.
fn fp_poly_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        // all monic candidates of degree d
        let count = p.pow(d as u32);
        for m in 0..count {
            let mut g: Vec<u32> = Vec::with_capacity(d + 1);
            let mut mm = m;
            for _ in 0..d {
                g.push(mm % p);
                mm /= p;
            }
            g.push(1);
            if fp_poly_rem(p, f, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible polynomial of degree `k` over
/// `F_p`, compared by ascending non-leading coefficient vector.
fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    let count = p.pow(k);
    for m in 0..count {
        let mut f: Vec<u32> = Vec::with_capacity(k as usize + 1);
        let mut mm = m;
        for _ in 0..k {
            f.push(mm % p);
            mm /= p;
        }
        f.push(1);
        if fp_poly_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

/// Builds `F_q` for a prime power `q <= 128`.
pub fn mk_gf(q: u32) -> Result<Gf> {
    if q < 2 || q > MAX_GF_ORDER {
        return Err(Error::TooLarge(format!(
            "field order {q} outside the supported range 2..={MAX_GF_ORDER}"
        )));
    }
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    if !is_prime_u32(p) {
        return Err(Error::Invalid(format!("{q} is not a prime power")));
    }
    let mut k = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(Error::Invalid(format!("{q} is not a prime power")));
    }

    let min_poly = if k == 1 { Vec::new() } else { least_irreducible(p, k) };
    let digits = |x: u32| -> Vec<u32> {
        let mut v = Vec::with_capacity(k as usize);
        let mut xx = x;
        for _ in 0..k {
            v.push(xx % p);
            xx /= p;
        }
        v
    };
    let encode = |v: &[u32]| -> u32 {
        let mut x = 0u32;
        for &c in v.iter().rev() {
            x = x * p + c;
        }
        x
    };

    let n = q as usize;
    let mut add = vec![0u8; n * n];
    let mut mul = vec![0u8; n * n];
    for a in 0..q {
        let da = digits(a);
        for b in 0..=a {
            let db = digits(b);
            let sum: Vec<u32> = da.iter().zip(db.iter()).map(|(x, y)| (x + y) % p).collect();
            let s = encode(&sum) as u8;
            add[a as usize * n + b as usize] = s;
            add[b as usize * n + a as usize] = s;
            let prod = if k == 1 {
                (a * b) % p
            } else {
                let full = fp_poly_mul(p, &da, &db);
                let red = fp_poly_rem(p, &full, &min_poly);
                let mut padded = red;
                padded.resize(k as usize, 0);
                encode(&padded)
            };
            mul[a as usize * n + b as usize] = prod as u8;
            mul[b as usize * n + a as usize] = prod as u8;
        }
    }
    let mut inv = vec![0u8; n];
    for a in 1..q {
        for b in 1..q {
            if mul[a as usize * n + b as usize] == 1 {
                inv[a as usize] = b as u8;
                break;
            }
        }
        if inv[a as usize] == 0 {
            return Err(Error::Invalid(format!(
                "element {a} of F_{q} has no inverse; construction is broken"
            )));
        }
    }
    Ok(Gf { p, k, q, add, mul, inv, min_poly })
}

impl Gf {
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Degree over the prime field.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Minimal polynomial of the generator (ascending, monic); empty for
    /// prime fields.
    pub fn min_poly(&self) -> &[u32] {
        &self.min_poly
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// The field generator `t` (only for `k >= 2`).
    pub fn gen(&self) -> Result<u32> {
        if self.k < 2 {
            return Err(Error::Invalid(format!(
                "F_{} is a prime field and has no generator element t",
                self.q
            )));
        }
        Ok(self.p)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize] as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        // scan-free: (p-1)*a via doubling would still table-walk; the add
        // table row of `a` has exactly one zero
        if a == 0 {
            return 0;
        }
        for b in 0..self.q {
            if self.add(a, b) == 0 {
                return b;
            }
        }
        unreachable!("additive inverse exists")
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize] as u32
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::Invalid("zero has no multiplicative inverse".into()));
        }
        Ok(self.inv[a as usize] as u32)
    }

    /// `a^e` with integer exponent (negative allowed for nonzero `a`).
    pub fn pow(&self, a: u32, e: i64) -> Result<u32> {
        let (mut base, mut exp) = if e < 0 {
            (self.inv(a)?, (-(e as i128)) as u64)
        } else {
            (a, e as u64)
        };
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Frobenius endomorphism `x -> x^p`.
    pub fn frob(&self, a: u32) -> u32 {
        self.pow(a, self.p as i64).expect("positive exponent")
    }

    /// Inverse Frobenius: the unique `y` with `y^p = x`.
    pub fn frob_inv(&self, a: u32) -> u32 {
        // x -> x^(p^(k-1)) inverts x -> x^p on F_{p^k}
        let mut y = a;
        for _ in 0..self.k - 1 {
            y = self.frob(y);
        }
        y
    }

    /// Element rendering: residues for prime fields, polynomials in `t`
    /// (descending powers) otherwise.
    pub fn elem_name(&self, a: u32) -> String {
        if self.k == 1 {
            return format!("{a}");
        }
        let mut terms: Vec<String> = Vec::new();
        let mut x = a;
        let mut digs = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            digs.push(x % self.p);
            x /= self.p;
        }
        for i in (0..digs.len()).rev() {
            let c = digs[i];
            if c == 0 {
                continue;
            }
            let term = match (i, c) {
                (0, _) => format!("{c}"),
                (1, 1) => "t".into(),
                (1, _) => format!("{c}*t"),
                (_, 1) => format!("t^{i}"),
                (_, _) => format!("{c}*t^{i}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Parses an element expression: integers, `t`, `+`, `-`, `*`, `^`, and
    /// parentheses (e.g. `"t^2+2*t+1"`, `"-(t+1)*t"`).
    pub fn parse_elem(&self, s: &str) -> Result<u32> {
        let toks = lex(s)?;
        let mut pos = 0usize;
        let v = parse_sum(self, &toks, &mut pos)?;
        if pos != toks.len() {
            return Err(Error::Parse(format!(
                "unexpected trailing input in element expression {s:?}"
            )));
        }
        Ok(v)
    }
}

#[derive(Debug, PartialEq, Eq, Clone)]
enum Tok {
    Num(u32),
    Gen,
    Plus,
    Minus,
    Star,
    Caret,
    LPar,
    RPar,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LPar);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RPar);
                i += 1;
            }
            't' => {
                toks.push(Tok::Gen);
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
                toks.push(Tok::Num(v as u32));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {other:?} in field element expression"
                )))
            }
        }
    }
    Ok(toks)
}

fn parse_sum(gf: &Gf, toks: &[Tok], pos: &mut usize) -> Result<u32> {
    let mut acc = parse_term(gf, toks, pos)?;
    while let Some(t) = toks.get(*pos) {
        match t {
            Tok::Plus => {
                *pos += 1;
                let rhs = parse_term(gf, toks, pos)?;
                acc = gf.add(acc, rhs);
            }
            Tok::Minus => {
                *pos += 1;
                let rhs = parse_term(gf, toks, pos)?;
                acc = gf.sub(acc, rhs);
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_term(gf: &Gf, toks: &[Tok], pos: &mut usize) -> Result<u32> {
    let mut acc = parse_factor(gf, toks, pos)?;
    loop {
        match toks.get(*pos) {
            Some(Tok::Star) => {
                *pos += 1;
                let rhs = parse_factor(gf, toks, pos)?;
                acc = gf.mul(acc, rhs);
            }
            // implicit multiplication: `2t`, `t(t+1)`
            Some(Tok::Gen) | Some(Tok::LPar) | Some(Tok::Num(_)) => {
                let rhs = parse_factor(gf, toks, pos)?;
                acc = gf.mul(acc, rhs);
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_factor(gf: &Gf, toks: &[Tok], pos: &mut usize) -> Result<u32> {
    let mut negate = false;
    while let Some(Tok::Minus) = toks.get(*pos) {
        negate = !negate;
        *pos += 1;
    }
    let mut base = match toks.get(*pos) {
        Some(Tok::Num(v)) => {
            *pos += 1;
            // an integer literal means v*1, i.e. the residue mod p, which is
            // exactly the element index with digit v mod p
            v % gf.p
        }
        Some(Tok::Gen) => {
            *pos += 1;
            gf.gen()?
        }
        Some(Tok::LPar) => {
            *pos += 1;
            let v = parse_sum(gf, toks, pos)?;
            match toks.get(*pos) {
                Some(Tok::RPar) => *pos += 1,
                _ => return Err(Error::Parse("missing closing parenthesis".into())),
            }
            v
        }
        other => {
            return Err(Error::Parse(format!(
                "expected a number, t, or a parenthesized expression, found {other:?}"
            )))
        }
    };
    if let Some(Tok::Caret) = toks.get(*pos) {
        *pos += 1;
        match toks.get(*pos) {
            Some(Tok::Num(e)) => {
                *pos += 1;
                base = gf.pow(base, *e as i64)?;
            }
            _ => return Err(Error::Parse("exponent must be a nonnegative integer".into())),
        }
    }
    if negate {
        base = gf.neg(base);
    }
    Ok(base)
}

/// `F_p`-span of the given elements (always contains 0), as a bit mask.
///
/// In characteristic `p`, scaling by the prime field is repeated addition,
/// so the additive closure is already the span.
pub fn span(gf: &Gf, gens: &[u32]) -> u128 {
    let mut mask: u128 = 1; // {0}
    let mut queue: Vec<u32> = vec![0];
    let mut qi = 0;
    while qi < queue.len() {
        let a = queue[qi];
        qi += 1;
        for &g in gens {
            let s = gf.add(a, g);
            if mask >> s & 1 == 0 {
                mask |= 1u128 << s;
                queue.push(s);
            }
        }
    }
    mask
}

/// The elements listed in a mask, ascending.
pub fn mask_elems(mask: u128) -> Vec<u32> {
    (0..128).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Span of all pairwise products of two masks.
pub fn mask_product_span(gf: &Gf, a: u128, b: u128) -> u128 {
    let mut prods: Vec<u32> = Vec::new();
    for x in mask_elems(a) {
        for y in mask_elems(b) {
            prods.push(gf.mul(x, y));
        }
    }
    span(gf, &prods)
}

/// True if the mask is an `F_p`-subspace (nonempty additive closure).
pub fn is_subspace(gf: &Gf, mask: u128) -> bool {
    if mask & 1 == 0 {
        return false; // must contain 0
    }
    let elems = mask_elems(mask);
    for &x in &elems {
        if x >= gf.q {
            return false;
        }
        for &y in &elems {
            if mask >> gf.add(x, y) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// The subfield `F_{p^d}` of `F_{p^k}` for `d | k`, as the fixed points of
/// the `d`-fold Frobenius.
pub fn subfield(gf: &Gf, d: u32) -> Result<u128> {
    if d == 0 || gf.k % d != 0 {
        return Err(Error::Invalid(format!(
            "F_{} has no subfield of degree {d} over the prime field (degree {} total)",
            gf.q, gf.k
        )));
    }
    let mut mask: u128 = 0;
    for x in 0..gf.q {
        let mut y = x;
        for _ in 0..d {
            y = gf.frob(y);
        }
        if y == x {
            mask |= 1u128 << x;
        }
    }
    Ok(mask)
}

/// True if the mask is a subfield: a subspace containing 1 and closed under
/// multiplication.
pub fn is_subfield_mask(gf: &Gf, mask: u128) -> bool {
    if mask >> 1 & 1 == 0 || !is_subspace(gf, mask) {
        return false;
    }
    let elems = mask_elems(mask);
    for &x in &elems {
        for &y in &elems {
            if mask >> gf.mul(x, y) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields_have_the_expected_tables() {
        let f4 = mk_gf(4).unwrap();
        assert_eq!((f4.p(), f4.k(), f4.q()), (2, 2, 4));
        // generator satisfies t^2 = t + 1 under the least irreducible
        // t^2 + t + 1
        assert_eq!(f4.min_poly(), &[1, 1, 1]);
        assert_eq!(f4.mul(2, 2), 3);
        assert_eq!(f4.inv(2).unwrap(), 3);
        assert_eq!(f4.elem_name(3), "t+1");
        assert_eq!(f4.parse_elem("t^2").unwrap(), 3);
        assert_eq!(f4.parse_elem("t*(t+1)").unwrap(), 1);

        let f8 = mk_gf(8).unwrap();
        assert_eq!(f8.min_poly(), &[1, 1, 0, 1]); // t^3 + t + 1
        assert_eq!(f8.pow(2, 3).unwrap(), 3); // t^3 = t + 1

        let f9 = mk_gf(9).unwrap();
        assert_eq!(f9.min_poly(), &[1, 0, 1]); // t^2 + 1
        assert_eq!(f9.mul(3, 3), 2); // t^2 = -1 = 2
        assert_eq!(f9.elem_name(5), "t+2");
        assert_eq!(f9.parse_elem("-1").unwrap(), 2);
    }

    #[test]
    fn axioms_exhaustive_on_small_fields() {
        for q in [4u32, 8, 9] {
            let f = mk_gf(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn every_supported_order_builds_and_satisfies_fermat() {
        let mut built = 0;
        for q in 2..=128u32 {
            match mk_gf(q) {
                Ok(f) => {
                    built += 1;
                    for x in 0..q {
                        assert_eq!(f.pow(x, q as i64).unwrap(), x, "x^q = x in F_{q}");
                        if x != 0 {
                            assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
                        }
                    }
                    assert_eq!(f.frob_inv(f.frob(5 % q)), 5 % q);
                }
                Err(_) => {
                    // must be exactly the non-prime-powers
                    let mut p = 2;
                    while q % p != 0 {
                        p += 1;
                    }
                    let mut rest = q;
                    while rest % p == 0 {
                        rest /= p;
                    }
                    assert!(rest != 1, "F_{q} failed to build");
                }
            }
        }
        // primes up to 127 plus 4,8,16,32,64,128, 9,27,81, 25,125, 49, 121
        assert_eq!(built, 31 + 13);
    }

    #[test]
    fn subfields_and_subspaces() {
        let f16 = mk_gf(16).unwrap();
        let sub4 = subfield(&f16, 2).unwrap();
        assert_eq!(sub4.count_ones(), 4);
        assert!(is_subfield_mask(&f16, sub4));
        let sub2 = subfield(&f16, 1).unwrap();
        assert_eq!(sub2, 0b11); // {0, 1}
        assert!(subfield(&f16, 3).is_err());

        let f4 = mk_gf(4).unwrap();
        assert_eq!(span(&f4, &[1]), 0b0011);
        assert_eq!(span(&f4, &[2]), 0b0101);
        assert_eq!(span(&f4, &[1, 2]), 0b1111);
        assert!(is_subspace(&f4, 0b0101));
        assert!(!is_subfield_mask(&f4, 0b0101)); // t*t = t+1 outside
        // products of {0,t} with itself span {0, t^2} = {0, t+1}
        assert_eq!(mask_product_span(&f4, 0b0101, 0b0101), 0b1001);

        let f9 = mk_gf(9).unwrap();
        let pf = subfield(&f9, 1).unwrap();
        assert_eq!(mask_elems(pf), vec![0, 1, 2]);
        assert!(is_subfield_mask(&f9, pf));
    }

    #[test]
    fn parser_round_trips_names() {
        for q in [4u32, 8, 9, 25, 27, 128] {
            let f = mk_gf(q).unwrap();
            for x in 0..q {
                let name = f.elem_name(x);
                assert_eq!(f.parse_elem(&name).unwrap(), x, "round trip in F_{q}");
            }
        }
        let f7 = mk_gf(7).unwrap();
        assert_eq!(f7.parse_elem("3*4").unwrap(), 5);
        assert!(f7.parse_elem("t").is_err());
        assert!(f7.parse_elem("2 +").is_err());
    }
}
