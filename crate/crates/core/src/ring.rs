//! Finite commutative unital rings.
//!
//! Two internal representations share one element-index interface
//! (`u32` indices in `0..order`):
//!
//! * **tables** — explicit addition/multiplication tables, order <= 4096;
//! * **algebras** — structure constants over a prime field `F_p`, elements
//!   encoded as base-`p` digit strings of coefficient vectors, order
//!   `p^dim <= 2^16`.
//!
//! Constructors verify the ring axioms: exhaustively for table orders up to
//! [`EXHAUSTIVE_AXIOM_ORDER`] (and always on the full structure-constant
//! basis for algebras, which proves the axioms by linearity), and on a
//! deterministic pseudo-random sample of triples for larger tables.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::fp::Rref;
use crate::monomial::{mono_name, parse_poly_terms};
use crate::{Error, Result};

/// Largest order for which explicit operation tables are built.
pub const MAX_TABLE_ORDER: u32 = 4096;
/// Largest order for structure-constant algebra rings.
pub const MAX_ALGEBRA_ORDER: u32 = 65536;
/// Largest modulus for arithmetic residue rings `Z/n`.
pub const MAX_ZN_ORDER: u32 = 65536;
/// Orders up to this bound get exhaustive triple-wise axiom verification;
/// larger tables are checked on a deterministic sample.
pub const EXHAUSTIVE_AXIOM_ORDER: u32 = 512;
/// Number of sampled triples for large-table axiom verification.
const AXIOM_SAMPLES: u64 = 200_000;
/// Sample size for residue rings, whose operations are closures over
/// modular arithmetic rather than stored tables: the sample is a smoke test
/// of the implementation, not of the data, so a smaller one suffices.
const ZN_AXIOM_SAMPLES: u64 = 10_000;
/// Variable names for polynomial constructions, in order.
pub const VAR_NAMES: [char; 4] = ['X', 'Y', 'Z', 'W'];

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Deterministic 64-bit mixer used wherever sampled verification needs
/// pseudo-random indices.
pub(crate) fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Structure-constant representation: a commutative `F_p`-algebra with a
/// distinguished monomial-derived basis.
#[derive(Clone, Debug)]
pub(crate) struct Algebra {
    pub(crate) p: u8,
    pub(crate) dim: usize,
    /// Number of polynomial variables in the ambient capped polynomial ring.
    pub(crate) nvars: usize,
    /// Per-variable nilpotency caps of the ambient ring (`X_i^cap = 0`).
    pub(crate) caps: Vec<u32>,
    /// Display names of the current basis elements.
    pub(crate) basis_names: Vec<String>,
    /// `basis_mul[i*dim + j]` = coefficient vector of `b_i * b_j`.
    pub(crate) basis_mul: Vec<Vec<u8>>,
    /// Exponent tuples of the ambient capped monomial basis.
    pub(crate) ambient_exps: Vec<Vec<u32>>,
    /// Image of each ambient monomial as a coefficient vector over the
    /// current basis (identity before any quotient).
    pub(crate) ambient_to_elem: Vec<Vec<u8>>,
}

impl Algebra {
    pub(crate) fn order(&self) -> u32 {
        (self.p as u32).pow(self.dim as u32)
    }

    pub(crate) fn decode(&self, x: u32) -> Vec<u8> {
        let p = self.p as u32;
        let mut v = vec![0u8; self.dim];
        let mut r = x;
        for d in v.iter_mut() {
            *d = (r % p) as u8;
            r /= p;
        }
        debug_assert_eq!(r, 0);
        v
    }

    pub(crate) fn encode(&self, v: &[u8]) -> u32 {
        let p = self.p as u32;
        let mut x = 0u32;
        for &d in v.iter().rev() {
            debug_assert!((d as u32) < p);
            x = x * p + d as u32;
        }
        x
    }

    /// Product of two coefficient vectors via the structure constants.
    pub(crate) fn vec_mul(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let p = self.p as u32;
        let mut acc = vec![0u32; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = (ai as u32) * (bj as u32) % p;
                if c == 0 {
                    continue;
                }
                let row = &self.basis_mul[i * self.dim + j];
                for (k, &rk) in row.iter().enumerate() {
                    if rk != 0 {
                        acc[k] = (acc[k] + c * rk as u32) % p;
                    }
                }
            }
        }
        acc.iter().map(|&c| c as u8).collect()
    }

    fn vec_add(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let p = self.p as u16;
        a.iter().zip(b.iter()).map(|(&x, &y)| ((x as u16 + y as u16) % p) as u8).collect()
    }

    fn vec_neg(&self, a: &[u8]) -> Vec<u8> {
        let p = self.p;
        a.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect()
    }

    fn name_of(&self, v: &[u8]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let base = &self.basis_names[i];
            if base == "1" {
                parts.push(format!("{c}"));
            } else if c == 1 {
                parts.push(base.clone());
            } else {
                parts.push(format!("{c}*{base}"));
            }
        }
        if parts.is_empty() {
            "0".to_owned()
        } else {
            parts.join(" + ")
        }
    }

    /// Multiplication-by-`v` is injective iff `v` is a unit (finite ring).
    fn is_unit_vec(&self, v: &[u8]) -> bool {
        let mut r = Rref::new(self.p, self.dim);
        for i in 0..self.dim {
            let mut e = vec![0u8; self.dim];
            e[i] = 1;
            r.insert(&self.vec_mul(&e, v));
        }
        r.rank() == self.dim
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Repr {
    Table {
        add: Vec<u16>,
        mul: Vec<u16>,
        neg: Vec<u16>,
        names: Vec<String>,
    },
    Algebra(Algebra),
    /// Integers modulo `n`, computed arithmetically (no stored tables), so
    /// residue rings stay cheap well past the table-size cap.
    Zn { n: u32 },
}

pub(crate) fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A finite commutative ring with identity.
///
/// Elements are the indices `0..order()`; `zero()` and `one()` give the
/// distinguished elements. Every ring carries a unique `id` so that ideals
/// and maps can detect accidental cross-ring use.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    id: u64,
    order: u32,
    zero: u32,
    one: u32,
    characteristic: u32,
    provenance: String,
    /// Set only by [`mk_zn`]; enables the natural module action.
    zn_modulus: Option<u32>,
    pub(crate) repr: Repr,
}

impl FiniteRing {
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn zero(&self) -> u32 {
        self.zero
    }

    pub fn one(&self) -> u32 {
        self.one
    }

    /// Additive order of the identity.
    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    /// Human-readable construction record.
    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// `Some(n)` iff this ring was built as the integers modulo `n`.
    pub fn as_zn(&self) -> Option<u32> {
        self.zn_modulus
    }

    /// All element indices, ascending.
    pub fn elems(&self) -> impl Iterator<Item = u32> {
        0..self.order
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        debug_assert!(x < self.order && y < self.order);
        match &self.repr {
            Repr::Table { add, .. } => add[(x as usize) * self.order as usize + y as usize] as u32,
            Repr::Algebra(a) => {
                if a.p == 2 {
                    x ^ y
                } else {
                    a.encode(&a.vec_add(&a.decode(x), &a.decode(y)))
                }
            }
            Repr::Zn { n } => {
                let s = x + y;
                if s >= *n {
                    s - n
                } else {
                    s
                }
            }
        }
    }

    pub fn neg(&self, x: u32) -> u32 {
        debug_assert!(x < self.order);
        match &self.repr {
            Repr::Table { neg, .. } => neg[x as usize] as u32,
            Repr::Algebra(a) => {
                if a.p == 2 {
                    x
                } else {
                    a.encode(&a.vec_neg(&a.decode(x)))
                }
            }
            Repr::Zn { n } => {
                if x == 0 {
                    0
                } else {
                    n - x
                }
            }
        }
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        debug_assert!(x < self.order && y < self.order);
        match &self.repr {
            Repr::Table { mul, .. } => mul[(x as usize) * self.order as usize + y as usize] as u32,
            Repr::Algebra(a) => a.encode(&a.vec_mul(&a.decode(x), &a.decode(y))),
            Repr::Zn { n } => ((x as u64 * y as u64) % (*n as u64)) as u32,
        }
    }

    /// `x^n`, with `x^0 = 1`.
    pub fn pow(&self, x: u32, n: u64) -> u32 {
        let mut acc = self.one;
        let mut base = x;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// True iff `x` has a multiplicative inverse. In a finite commutative
    /// ring this is equivalent to multiplication by `x` being injective.
    pub fn is_unit(&self, x: u32) -> bool {
        match &self.repr {
            Repr::Table { mul, .. } => {
                let row = &mul[(x as usize) * self.order as usize..][..self.order as usize];
                row.iter().any(|&v| v as u32 == self.one)
            }
            Repr::Algebra(a) => a.is_unit_vec(&a.decode(x)),
            Repr::Zn { n } => gcd_u32(x, *n) == 1,
        }
    }

    /// Display name of an element.
    pub fn elem_name(&self, x: u32) -> String {
        debug_assert!(x < self.order);
        match &self.repr {
            Repr::Table { names, .. } => names[x as usize].clone(),
            Repr::Algebra(a) => a.name_of(&a.decode(x)),
            Repr::Zn { .. } => format!("{x}"),
        }
    }

    /// Parses an element from text.
    ///
    /// Table rings accept an element's display name or an integer literal
    /// `k`, which denotes `k * 1` (so `6` in `Z/12` is six, and `-1` is the
    /// negation of the identity in any ring). Algebra rings accept
    /// polynomial expressions in the ring's variables, e.g. `X^2*Y + 2`.
    pub fn parse_elem(&self, s: &str) -> Result<u32> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty element expression".into()));
        }
        match &self.repr {
            Repr::Zn { .. } => match t.parse::<i64>() {
                Ok(k) => Ok(self.int_elem(k)),
                Err(_) => Err(Error::Parse(format!(
                    "`{t}` is not an integer residue in {}",
                    self.provenance
                ))),
            },
            Repr::Table { names, .. } => {
                if let Some(i) = names.iter().position(|n| n == t) {
                    return Ok(i as u32);
                }
                if let Ok(k) = t.parse::<i64>() {
                    return Ok(self.int_elem(k));
                }
                Err(Error::Parse(format!(
                    "`{t}` is neither an element name nor an integer in {}",
                    self.provenance
                )))
            }
            Repr::Algebra(a) => {
                let terms = parse_poly_terms(t, a.nvars)?;
                let mut acc = vec![0u8; a.dim];
                let p = a.p as i64;
                for (exps, coeff) in terms {
                    let c = (((coeff % p) + p) % p) as u8;
                    if c == 0 {
                        continue;
                    }
                    // Monomials at or above a variable cap are zero in the
                    // ambient ring.
                    if exps.iter().zip(a.caps.iter()).any(|(&e, &cap)| e >= cap) {
                        continue;
                    }
                    let idx = a
                        .ambient_exps
                        .iter()
                        .position(|e| e == &exps)
                        .expect("capped exponent tuple must be an ambient monomial");
                    let img = &a.ambient_to_elem[idx];
                    for (dst, &src) in acc.iter_mut().zip(img.iter()) {
                        *dst = ((*dst as u16 + (c as u16) * (src as u16)) % a.p as u16) as u8;
                    }
                }
                Ok(a.encode(&acc))
            }
        }
    }

    /// `k * 1` for an integer `k` (negative allowed).
    pub fn int_elem(&self, k: i64) -> u32 {
        let ch = self.characteristic as i64;
        let r = ((k % ch) + ch) % ch;
        if let Repr::Zn { .. } = &self.repr {
            return r as u32;
        }
        let mut acc = self.zero;
        for _ in 0..r {
            acc = self.add(acc, self.one);
        }
        acc
    }

    pub(crate) fn algebra(&self) -> Option<&Algebra> {
        match &self.repr {
            Repr::Algebra(a) => Some(a),
            _ => None,
        }
    }
}

fn characteristic_of(order: u32, zero: u32, one: u32, add: impl Fn(u32, u32) -> u32) -> u32 {
    let mut acc = one;
    let mut k = 1u32;
    while acc != zero {
        acc = add(acc, one);
        k += 1;
        debug_assert!(k <= order, "identity must have finite additive order");
    }
    k
}

/// Builds a table ring from operation closures and verifies the axioms.
fn build_table_ring(
    order: u32,
    zero: u32,
    one: u32,
    names: Vec<String>,
    addf: impl Fn(u32, u32) -> u32,
    mulf: impl Fn(u32, u32) -> u32,
    provenance: String,
    zn_modulus: Option<u32>,
) -> Result<FiniteRing> {
    if order < 2 {
        return Err(Error::Invalid(format!("ring order {order} < 2 (zero ring rejected)")));
    }
    if order > MAX_TABLE_ORDER {
        return Err(Error::TooLarge(format!(
            "table ring order {order} exceeds cap {MAX_TABLE_ORDER}"
        )));
    }
    let n = order as usize;
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for x in 0..order {
        for y in 0..order {
            let s = addf(x, y);
            let p = mulf(x, y);
            debug_assert!(s < order && p < order);
            add[(x as usize) * n + y as usize] = s as u16;
            mul[(x as usize) * n + y as usize] = p as u16;
        }
    }
    let mut neg = vec![0u16; n];
    for x in 0..order {
        let mut found = None;
        for y in 0..order {
            if add[(x as usize) * n + y as usize] as u32 == zero {
                found = Some(y);
                break;
            }
        }
        match found {
            Some(y) => neg[x as usize] = y as u16,
            None => return Err(Error::Invalid(format!("element {x} has no additive inverse"))),
        }
    }
    verify_table_axioms(order, zero, one, &add, &mul)?;
    let characteristic = characteristic_of(order, zero, one, |x, y| {
        add[(x as usize) * n + y as usize] as u32
    });
    Ok(FiniteRing {
        id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
        order,
        zero,
        one,
        characteristic,
        provenance,
        zn_modulus,
        repr: Repr::Table { add, mul, neg, names },
    })
}

/// Builds a verified table ring for a quotient construction (names and
/// operations supplied by the caller; no integer-residue structure assumed).
pub(crate) fn build_quotient_table(
    order: u32,
    zero: u32,
    one: u32,
    names: Vec<String>,
    addf: impl Fn(u32, u32) -> u32,
    mulf: impl Fn(u32, u32) -> u32,
    provenance: String,
) -> Result<FiniteRing> {
    build_table_ring(order, zero, one, names, addf, mulf, provenance, None)
}

fn verify_table_axioms(order: u32, zero: u32, one: u32, add: &[u16], mul: &[u16]) -> Result<()> {
    let n = order as usize;
    verify_ops_axioms(
        order,
        zero,
        one,
        |x, y| add[(x as usize) * n + y as usize] as u32,
        |x, y| mul[(x as usize) * n + y as usize] as u32,
        EXHAUSTIVE_AXIOM_ORDER,
        AXIOM_SAMPLES,
    )
}

/// Verifies the commutative-unital-ring axioms for operation closures:
/// exhaustively for orders up to `exhaustive_cap`, by seeded sampling
/// beyond that.
fn verify_ops_axioms(
    order: u32,
    zero: u32,
    one: u32,
    a: impl Fn(u32, u32) -> u32,
    m: impl Fn(u32, u32) -> u32,
    exhaustive_cap: u32,
    samples: u64,
) -> Result<()> {
    for x in 0..order {
        if a(x, zero) != x {
            return Err(Error::Invalid(format!("{x} + 0 != {x}")));
        }
        if m(x, one) != x {
            return Err(Error::Invalid(format!("{x} * 1 != {x}")));
        }
        if m(x, zero) != zero {
            return Err(Error::Invalid(format!("{x} * 0 != 0")));
        }
        for y in 0..order {
            if a(x, y) != a(y, x) {
                return Err(Error::Invalid(format!("addition not commutative at ({x},{y})")));
            }
            if m(x, y) != m(y, x) {
                return Err(Error::Invalid(format!("multiplication not commutative at ({x},{y})")));
            }
        }
    }
    let check_triple = |x: u32, y: u32, z: u32| -> Result<()> {
        if a(a(x, y), z) != a(x, a(y, z)) {
            return Err(Error::Invalid(format!("addition not associative at ({x},{y},{z})")));
        }
        if m(m(x, y), z) != m(x, m(y, z)) {
            return Err(Error::Invalid(format!(
                "multiplication not associative at ({x},{y},{z})"
            )));
        }
        if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
            return Err(Error::Invalid(format!("distributivity fails at ({x},{y},{z})")));
        }
        Ok(())
    };
    if order <= exhaustive_cap {
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    check_triple(x, y, z)?;
                }
            }
        }
    } else {
        let mut state = 0x5EED_0FA5_17AB_1E5Du64 ^ (order as u64);
        for _ in 0..samples {
            let x = (splitmix64(&mut state) % order as u64) as u32;
            let y = (splitmix64(&mut state) % order as u64) as u32;
            let z = (splitmix64(&mut state) % order as u64) as u32;
            check_triple(x, y, z)?;
        }
    }
    Ok(())
}

fn verify_algebra_axioms(a: &Algebra) -> Result<()> {
    let dim = a.dim;
    // Commutativity on the basis extends bilinearly to the whole algebra.
    for i in 0..dim {
        for j in 0..i {
            if a.basis_mul[i * dim + j] != a.basis_mul[j * dim + i] {
                return Err(Error::Invalid(format!(
                    "structure constants not symmetric at basis pair ({i},{j})"
                )));
            }
        }
    }
    // Associativity checked on all basis triples is a complete proof by
    // trilinearity.
    for i in 0..dim {
        let mut ei = vec![0u8; dim];
        ei[i] = 1;
        for j in 0..dim {
            let mut ej = vec![0u8; dim];
            ej[j] = 1;
            let ij = a.vec_mul(&ei, &ej);
            for k in 0..dim {
                let mut ek = vec![0u8; dim];
                ek[k] = 1;
                let left = a.vec_mul(&ij, &ek);
                let jk = a.vec_mul(&ej, &ek);
                let right = a.vec_mul(&ei, &jk);
                if left != right {
                    return Err(Error::Invalid(format!(
                        "associativity fails on basis triple ({i},{j},{k})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The integers modulo `n` (`2 <= n <= 65536`).
pub fn mk_zn(n: u32) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::Invalid(format!("Z/{n} is not a unital ring of order >= 2")));
    }
    if n > MAX_ZN_ORDER {
        return Err(Error::TooLarge(format!(
            "residue ring order {n} exceeds cap {MAX_ZN_ORDER}"
        )));
    }
    // Residue arithmetic is correct by construction (no stored tables to
    // corrupt), so a small deterministic smoke sample suffices at any order.
    verify_ops_axioms(
        n,
        0,
        1,
        |x, y| (x + y) % n,
        |x, y| ((x as u64 * y as u64) % n as u64) as u32,
        0,
        ZN_AXIOM_SAMPLES,
    )?;
    Ok(FiniteRing {
        id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
        order: n,
        zero: 0,
        one: 1,
        characteristic: n,
        provenance: format!("Z/{n}"),
        zn_modulus: Some(n),
        repr: Repr::Zn { n },
    })
}

/// Direct product of rings (componentwise operations). The product order
/// must stay within the table cap.
pub fn mk_product(factors: &[&FiniteRing]) -> Result<FiniteRing> {
    if factors.len() < 2 {
        return Err(Error::Invalid("a product needs at least two factors".into()));
    }
    let mut order: u64 = 1;
    for f in factors {
        order *= f.order() as u64;
        if order > MAX_TABLE_ORDER as u64 {
            return Err(Error::TooLarge(format!(
                "product order exceeds table cap {MAX_TABLE_ORDER}"
            )));
        }
    }
    let order = order as u32;
    let k = factors.len();
    // Mixed-radix encoding, last factor least significant.
    let decode = |x: u32| -> Vec<u32> {
        let mut digits = vec![0u32; k];
        let mut r = x;
        for i in (0..k).rev() {
            digits[i] = r % factors[i].order();
            r /= factors[i].order();
        }
        digits
    };
    let encode = |d: &[u32]| -> u32 {
        let mut x = 0u32;
        for (i, f) in factors.iter().enumerate() {
            x = x * f.order() + d[i];
        }
        x
    };
    let zero = encode(&factors.iter().map(|f| f.zero()).collect::<Vec<_>>());
    let one = encode(&factors.iter().map(|f| f.one()).collect::<Vec<_>>());
    let names = (0..order)
        .map(|x| {
            let d = decode(x);
            let parts: Vec<String> =
                d.iter().enumerate().map(|(i, &e)| factors[i].elem_name(e)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let provenance =
        factors.iter().map(|f| f.provenance().to_owned()).collect::<Vec<_>>().join(" x ");
    build_table_ring(
        order,
        zero,
        one,
        names,
        |x, y| {
            let (dx, dy) = (decode(x), decode(y));
            let s: Vec<u32> =
                (0..k).map(|i| factors[i].add(dx[i], dy[i])).collect();
            encode(&s)
        },
        |x, y| {
            let (dx, dy) = (decode(x), decode(y));
            let s: Vec<u32> =
                (0..k).map(|i| factors[i].mul(dx[i], dy[i])).collect();
            encode(&s)
        },
        provenance,
        None,
    )
}

/// Builds the capped monomial algebra `F_p[X_1..X_v] / (X_i^caps_i)` and, if
/// `extra` generators are given, quotients by the ideal they generate.
///
/// Generators are polynomial expressions in the variables `X, Y, Z, W`.
pub fn mk_poly_quotient(p: u32, caps: &[u32], extra: &[&str]) -> Result<FiniteRing> {
    if !(2..=251).contains(&p) || !is_prime_u32(p) {
        return Err(Error::Invalid(format!("coefficient characteristic {p} must be a prime <= 251")));
    }
    if caps.is_empty() || caps.len() > VAR_NAMES.len() {
        return Err(Error::Invalid(format!(
            "between 1 and {} variables supported, got {}",
            VAR_NAMES.len(),
            caps.len()
        )));
    }
    if caps.iter().any(|&c| c == 0) {
        return Err(Error::Invalid("every variable cap must be at least 1".into()));
    }
    let dim: u64 = caps.iter().map(|&c| c as u64).product();
    if dim > 16 {
        return Err(Error::TooLarge(format!(
            "ambient monomial basis has {dim} elements; the cap is 16"
        )));
    }
    let mut order_check = 1u64;
    for _ in 0..dim {
        order_check *= p as u64;
        if order_check > MAX_ALGEBRA_ORDER as u64 {
            return Err(Error::TooLarge(format!(
                "p^dim = {p}^{dim} exceeds the order cap {MAX_ALGEBRA_ORDER}"
            )));
        }
    }
    let nvars = caps.len();
    // Enumerate all capped exponent tuples; order by (total degree, then
    // exponent tuple descending) so that 1, X, Y, X^2, X*Y, Y^2, ... is the
    // canonical layout.
    let mut exps: Vec<Vec<u32>> = Vec::with_capacity(dim as usize);
    let mut cur = vec![0u32; nvars];
    loop {
        exps.push(cur.clone());
        let mut i = nvars;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < caps[i] {
                break;
            }
            cur[i] = 0;
            if i == 0 {
                cur = Vec::new();
                break;
            }
        }
        if cur.is_empty() {
            break;
        }
    }
    exps.sort_by(|a, b| {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    let dim = exps.len();
    let basis_names: Vec<String> = exps.iter().map(|e| mono_name(e)).collect();
    let mut basis_mul = vec![vec![0u8; dim]; dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let sum: Vec<u32> = exps[i].iter().zip(exps[j].iter()).map(|(&a, &b)| a + b).collect();
            if sum.iter().zip(caps.iter()).all(|(&e, &c)| e < c) {
                let k = exps.iter().position(|e| e == &sum).expect("capped sum is a basis element");
                basis_mul[i * dim + j][k] = 1;
            }
        }
    }
    let ambient_to_elem: Vec<Vec<u8>> = (0..dim)
        .map(|i| {
            let mut v = vec![0u8; dim];
            v[i] = 1;
            v
        })
        .collect();
    let mut alg = Algebra {
        p: p as u8,
        dim,
        nvars,
        caps: caps.to_vec(),
        basis_names,
        basis_mul,
        ambient_exps: exps,
        ambient_to_elem,
    };
    verify_algebra_axioms(&alg)?;

    let cap_rels: Vec<String> =
        (0..nvars).map(|i| mono_name(&{
            let mut e = vec![0u32; nvars];
            e[i] = caps[i];
            e
        })).collect();
    let var_list: Vec<String> = VAR_NAMES[..nvars].iter().map(|c| c.to_string()).collect();
    let mut rels = cap_rels;

    if !extra.is_empty() {
        // Span of the ideal generated by the extra polynomials.
        let mut sub = Rref::new(alg.p, alg.dim);
        for s in extra {
            let terms = parse_poly_terms(s, nvars)?;
            let mut g = vec![0u8; alg.dim];
            let pi = p as i64;
            for (e, coeff) in terms {
                let c = (((coeff % pi) + pi) % pi) as u8;
                if c == 0 || e.iter().zip(caps.iter()).any(|(&ei, &ci)| ei >= ci) {
                    continue;
                }
                let idx = alg
                    .ambient_exps
                    .iter()
                    .position(|x| x == &e)
                    .expect("capped exponent tuple is ambient");
                g[idx] = ((g[idx] as u16 + c as u16) % p as u16) as u8;
            }
            for i in 0..alg.dim {
                let mut ei = vec![0u8; alg.dim];
                ei[i] = 1;
                sub.insert(&alg.vec_mul(&ei, &g));
            }
            rels.push(s.trim().to_owned());
        }
        let mut one_vec = vec![0u8; alg.dim];
        one_vec[0] = 1;
        if sub.contains(&one_vec) {
            return Err(Error::Invalid("the generators span the whole ring; quotient is zero".into()));
        }
        alg = quotient_algebra(&alg, &sub);
        verify_algebra_axioms(&alg)?;
    }

    let provenance = format!("F_{p}[{}]/({})", var_list.join(","), rels.join(", "));
    finish_algebra_ring(alg, provenance)
}

/// Wraps a verified algebra as a `FiniteRing`, computing identity data.
pub(crate) fn finish_algebra_ring(alg: Algebra, provenance: String) -> Result<FiniteRing> {
    let one_vec = alg.ambient_to_elem[0].clone();
    if one_vec.iter().all(|&c| c == 0) {
        return Err(Error::Invalid("identity is zero in this quotient; the ring is zero".into()));
    }
    // Verify 1 really is a multiplicative identity on the basis.
    for i in 0..alg.dim {
        let mut ei = vec![0u8; alg.dim];
        ei[i] = 1;
        if alg.vec_mul(&one_vec, &ei) != ei {
            return Err(Error::Invalid(format!("identity fails on basis element {i}")));
        }
    }
    let zero = alg.encode(&vec![0u8; alg.dim]);
    let one = alg.encode(&one_vec);
    let order = alg.order();
    // In an F_p-algebra the characteristic is p.
    let characteristic = alg.p as u32;
    Ok(FiniteRing {
        id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
        order,
        zero,
        one,
        characteristic,
        provenance,
        zn_modulus: None,
        repr: Repr::Algebra(alg),
    })
}

/// Quotient of an algebra by an ideal given as an `Rref` subspace of the
/// coefficient space. The caller must check properness.
pub(crate) fn quotient_algebra(alg: &Algebra, sub: &Rref) -> Algebra {
    let old_dim = alg.dim;
    let pivots = sub.pivots();
    let keep: Vec<usize> = (0..old_dim).filter(|i| !pivots.contains(i)).collect();
    let new_dim = keep.len();
    let reduce_extract = |v: &[u8]| -> Vec<u8> {
        let mut r = v.to_vec();
        sub.reduce(&mut r);
        keep.iter().map(|&i| r[i]).collect()
    };
    let mut basis_mul = vec![vec![0u8; new_dim]; new_dim * new_dim];
    for (ni, &oi) in keep.iter().enumerate() {
        for (nj, &oj) in keep.iter().enumerate() {
            basis_mul[ni * new_dim + nj] = reduce_extract(&alg.basis_mul[oi * old_dim + oj]);
        }
    }
    Algebra {
        p: alg.p,
        dim: new_dim,
        nvars: alg.nvars,
        caps: alg.caps.clone(),
        basis_names: keep.iter().map(|&i| alg.basis_names[i].clone()).collect(),
        basis_mul,
        ambient_exps: alg.ambient_exps.clone(),
        ambient_to_elem: alg.ambient_to_elem.iter().map(|v| reduce_extract(v)).collect(),
    }
}

/// How a ring acts on the generators of a finite module.
#[derive(Clone, Debug)]
pub enum ActionSpec {
    /// `r * g_j = (r mod c_j) g_j`, available when the base ring is `Z/n`
    /// (requires each cyclic order to divide `n`).
    Natural,
    /// `table[r][j]` = index of `r * g_j` in the module's mixed-radix
    /// element encoding.
    Table(Vec<Vec<u32>>),
}

/// A finite module over a finite ring, given by cyclic generators.
#[derive(Clone, Debug)]
pub struct ModuleSpec {
    /// Additive orders of the generators; the module is the direct sum of
    /// the corresponding cyclic groups.
    pub cyclic_orders: Vec<u32>,
    pub action: ActionSpec,
}

struct ModuleOps {
    orders: Vec<u32>,
    size: u32,
}

impl ModuleOps {
    fn decode(&self, x: u32) -> Vec<u32> {
        let mut d = vec![0u32; self.orders.len()];
        let mut r = x;
        for i in (0..self.orders.len()).rev() {
            d[i] = r % self.orders[i];
            r /= self.orders[i];
        }
        d
    }
    fn encode(&self, d: &[u32]) -> u32 {
        let mut x = 0u32;
        for (i, &c) in self.orders.iter().enumerate() {
            x = x * c + d[i];
        }
        x
    }
    fn add(&self, x: u32, y: u32) -> u32 {
        let (a, b) = (self.decode(x), self.decode(y));
        let s: Vec<u32> = (0..a.len()).map(|i| (a[i] + b[i]) % self.orders[i]).collect();
        self.encode(&s)
    }
    fn scalar(&self, k: u32, x: u32) -> u32 {
        let a = self.decode(x);
        let s: Vec<u32> = (0..a.len())
            .map(|i| ((k as u64 * a[i] as u64) % self.orders[i] as u64) as u32)
            .collect();
        self.encode(&s)
    }
    fn name(&self, x: u32) -> String {
        let d = self.decode(x);
        if d.len() == 1 {
            format!("{}", d[0])
        } else {
            format!("({})", d.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        }
    }
}

/// Trivial extension ("idealization") `R (+) M`: pairs `(r, m)` with
/// `(r,m)(s,n) = (rs, rn + sm)`. The module part squares to zero.
pub fn mk_idealization(base: &FiniteRing, spec: &ModuleSpec) -> Result<FiniteRing> {
    if spec.cyclic_orders.is_empty() {
        return Err(Error::Invalid("module needs at least one generator".into()));
    }
    if spec.cyclic_orders.iter().any(|&c| c < 2) {
        return Err(Error::Invalid("cyclic generator orders must be at least 2".into()));
    }
    let m_ops = {
        let mut size = 1u64;
        for &c in &spec.cyclic_orders {
            size *= c as u64;
            if size > MAX_TABLE_ORDER as u64 {
                return Err(Error::TooLarge("module larger than the table cap".into()));
            }
        }
        ModuleOps { orders: spec.cyclic_orders.clone(), size: size as u32 }
    };
    let total = base.order() as u64 * m_ops.size as u64;
    if total > MAX_TABLE_ORDER as u64 {
        return Err(Error::TooLarge(format!(
            "idealization order {total} exceeds table cap {MAX_TABLE_ORDER}"
        )));
    }
    let k = spec.cyclic_orders.len();
    // act[r][j] = r * g_j as a module element index.
    let act: Vec<Vec<u32>> = match &spec.action {
        ActionSpec::Natural => {
            let n = base.as_zn().ok_or_else(|| {
                Error::Invalid("the natural action requires the base ring to be Z/n".into())
            })?;
            for &c in &spec.cyclic_orders {
                if n % c != 0 {
                    return Err(Error::Invalid(format!(
                        "natural action undefined: generator order {c} does not divide {n}"
                    )));
                }
            }
            (0..base.order())
                .map(|r| {
                    (0..k)
                        .map(|j| {
                            let mut d = vec![0u32; k];
                            d[j] = r % spec.cyclic_orders[j];
                            m_ops.encode(&d)
                        })
                        .collect()
                })
                .collect()
        }
        ActionSpec::Table(t) => {
            if t.len() != base.order() as usize || t.iter().any(|row| row.len() != k) {
                return Err(Error::Invalid(format!(
                    "action table must be {} x {k}",
                    base.order()
                )));
            }
            if t.iter().flatten().any(|&v| v >= m_ops.size) {
                return Err(Error::Invalid("action table entry out of module range".into()));
            }
            t.clone()
        }
    };
    // Extend the generator action linearly to the whole module.
    let act_elem = |r: u32, m: u32| -> u32 {
        let d = m_ops.decode(m);
        let mut acc = 0u32;
        for (j, &c) in d.iter().enumerate() {
            acc = m_ops.add(acc, m_ops.scalar(c, act[r as usize][j]));
        }
        acc
    };
    // Well-definedness and module axioms, checked exhaustively.
    for j in 0..k {
        let gj = {
            let mut d = vec![0u32; k];
            d[j] = 1;
            m_ops.encode(&d)
        };
        if act[base.one() as usize][j] != gj {
            return Err(Error::Invalid(format!("1 * g_{j} != g_{j} in the action table")));
        }
        for r in base.elems() {
            if m_ops.scalar(spec.cyclic_orders[j], act[r as usize][j]) != 0 {
                return Err(Error::Invalid(format!(
                    "action of {r} on g_{j} is not annihilated by the generator order"
                )));
            }
            for s in base.elems() {
                let lhs = act[base.add(r, s) as usize][j];
                let rhs = m_ops.add(act[r as usize][j], act[s as usize][j]);
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "action not additive in the scalar at (r={r}, s={s}, g_{j})"
                    )));
                }
                let lhs = act[base.mul(r, s) as usize][j];
                let rhs = act_elem(r, act[s as usize][j]);
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "action not multiplicative at (r={r}, s={s}, g_{j})"
                    )));
                }
            }
        }
    }
    let msize = m_ops.size;
    let encode = |r: u32, m: u32| r * msize + m;
    let order = (base.order() * msize) as u32;
    let names = (0..order)
        .map(|x| format!("({}, {})", base.elem_name(x / msize), m_ops.name(x % msize)))
        .collect();
    let mdesc = spec
        .cyclic_orders
        .iter()
        .map(|c| format!("Z/{c}"))
        .collect::<Vec<_>>()
        .join(" x ");
    let provenance = format!("{} (+) ({})", base.provenance(), mdesc);
    build_table_ring(
        order,
        encode(base.zero(), 0),
        encode(base.one(), 0),
        names,
        |x, y| {
            let (rx, mx) = (x / msize, x % msize);
            let (ry, my) = (y / msize, y % msize);
            encode(base.add(rx, ry), m_ops.add(mx, my))
        },
        |x, y| {
            let (rx, mx) = (x / msize, x % msize);
            let (ry, my) = (y / msize, y % msize);
            encode(base.mul(rx, ry), m_ops.add(act_elem(rx, my), act_elem(ry, mx)))
        },
        provenance,
        None,
    )
}

/// Localization of `r` at the multiplicative set generated by `s`.
///
/// For a finite commutative ring this is the ring `eR` for an idempotent `e`
/// determined by `s`; the returned map sends `x` to the index of `e*x`.
/// Fails if some product of elements of `s` is zero (the localization would
/// be the zero ring).
pub fn localize(r: &FiniteRing, s: &[u32]) -> Result<(FiniteRing, Vec<u32>)> {
    use crate::bits::BitSet;
    for &x in s {
        if x >= r.order() {
            return Err(Error::Invalid(format!("element index {x} out of range")));
        }
    }
    // Multiplicative closure of s together with 1.
    let mut closure = BitSet::new(r.order());
    closure.insert(r.one());
    let mut queue: Vec<u32> = vec![r.one()];
    for &x in s {
        if closure.insert(x) {
            queue.push(x);
        }
    }
    let mut qi = 0;
    while qi < queue.len() {
        let x = queue[qi];
        qi += 1;
        for &g in s {
            let y = r.mul(x, g);
            if closure.insert(y) {
                queue.push(y);
            }
        }
    }
    if closure.contains(r.zero()) {
        return Err(Error::Invalid(
            "the multiplicative set contains zero divisors with zero product; localization is the zero ring".into(),
        ));
    }
    // Idempotent power of each closure element; their product is the
    // idempotent that cuts out the localization.
    let mut e = r.one();
    for t in closure.iter() {
        let mut x = t;
        let mut steps = 0u32;
        while r.mul(x, x) != x {
            x = r.mul(x, t);
            steps += 1;
            debug_assert!(steps <= 2 * r.order(), "power sequence must reach an idempotent");
        }
        e = r.mul(e, x);
    }
    debug_assert_eq!(r.mul(e, e), e);
    // eR, indexed in ascending old-element order.
    let mut members: Vec<u32> = Vec::new();
    let mut seen = BitSet::new(r.order());
    for x in r.elems() {
        let y = r.mul(e, x);
        if seen.insert(y) {
            members.push(y);
        }
    }
    members.sort_unstable();
    let index_of = |v: u32| members.binary_search(&v).expect("closed under the ops") as u32;
    let order = members.len() as u32;
    let names: Vec<String> = members.iter().map(|&x| r.elem_name(x)).collect();
    let snames: Vec<String> = s.iter().map(|&x| r.elem_name(x)).collect();
    let provenance = format!("{} localized at [{}]", r.provenance(), snames.join(", "));
    let ring = build_table_ring(
        order,
        index_of(r.zero()),
        index_of(e),
        names,
        |x, y| index_of(r.add(members[x as usize], members[y as usize])),
        |x, y| index_of(r.mul(members[x as usize], members[y as usize])),
        provenance,
        None,
    )?;
    // The image of every inverted element must be a unit, and the kernel of
    // x -> ex must be exactly the elements killed by some inverted element.
    for t in closure.iter() {
        if !ring.is_unit(index_of(r.mul(e, t))) {
            return Err(Error::Invalid(format!(
                "internal check failed: {} is not invertible after localization",
                r.elem_name(t)
            )));
        }
    }
    for x in r.elems() {
        let killed_by_e = r.mul(e, x) == r.zero();
        let killed_by_s = closure.iter().any(|t| r.mul(t, x) == r.zero());
        if killed_by_e != killed_by_s {
            return Err(Error::Invalid(format!(
                "internal check failed: localization kernel mismatch at {}",
                r.elem_name(x)
            )));
        }
    }
    let map: Vec<u32> = r.elems().map(|x| index_of(r.mul(e, x))).collect();
    Ok((ring, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn z12_basics() {
        let r = mk_zn(12).unwrap();
        assert_eq!(r.order(), 12);
        assert_eq!(r.characteristic(), 12);
        assert_eq!(r.add(7, 8), 3);
        assert_eq!(r.mul(7, 8), 8);
        assert_eq!(r.neg(5), 7);
        assert_eq!(r.pow(5, 2), 1);
        // Euler: the units of Z/12 are exactly {1, 5, 7, 11}.
        let units: Vec<u32> = r.elems().filter(|&x| r.is_unit(x)).collect();
        assert_eq!(units, vec![1, 5, 7, 11]);
        assert_eq!(r.parse_elem("7").unwrap(), 7);
        assert_eq!(r.parse_elem("-1").unwrap(), 11);
        assert_eq!(r.parse_elem("25").unwrap(), 1);
    }

    #[test]
    fn product_z4_z2() {
        let a = mk_zn(4).unwrap();
        let b = mk_zn(2).unwrap();
        let r = mk_product(&[&a, &b]).unwrap();
        assert_eq!(r.order(), 8);
        // lcm(4, 2) = 4.
        assert_eq!(r.characteristic(), 4);
        let e21 = r.parse_elem("(2,1)").unwrap();
        let e31 = r.parse_elem("(3,1)").unwrap();
        assert_eq!(r.elem_name(r.add(e21, e31)), "(1,0)");
        assert_eq!(r.elem_name(r.mul(e21, e21)), "(0,1)");
        assert_eq!(r.elem_name(r.one()), "(1,1)");
        // Integer literals land on k * 1.
        assert_eq!(r.parse_elem("3").unwrap(), r.parse_elem("(3,1)").unwrap());
    }

    #[test]
    fn poly_quotient_f2_x2() {
        // F_2[X]/(X^2): four elements 0, 1, X, 1+X.
        let r = mk_poly_quotient(2, &[2], &[]).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.characteristic(), 2);
        let x = r.parse_elem("X").unwrap();
        assert_eq!(r.mul(x, x), r.zero());
        let u = r.parse_elem("1+X").unwrap();
        assert_eq!(r.mul(u, u), r.one());
        let units: Vec<u32> = r.elems().filter(|&e| r.is_unit(e)).collect();
        assert_eq!(units.len(), 2);
    }

    #[test]
    fn poly_quotient_two_vars_with_extra_relation() {
        // F_2[X,Y]/(X^4, Y^4, X^2*Y^2): the ambient 16 monomials lose the
        // four with both exponents >= 2, leaving dimension 12, order 4096.
        let r = mk_poly_quotient(2, &[4, 4], &["X^2*Y^2"]).unwrap();
        assert_eq!(r.order(), 4096);
        let x = r.parse_elem("X").unwrap();
        let y = r.parse_elem("Y").unwrap();
        let x2 = r.mul(x, x);
        let y2 = r.mul(y, y);
        assert_eq!(r.mul(x2, y2), r.zero());
        // X^3*Y survives (only one exponent >= 2).
        let x3y = r.mul(r.mul(x2, x), y);
        assert_ne!(x3y, r.zero());
        assert_eq!(r.elem_name(x3y), "X^3*Y");
        // X^2*Y^3 = (X^2*Y^2) * Y = 0.
        assert_eq!(r.mul(r.mul(x2, y2), y), r.zero());
        assert_eq!(r.parse_elem("X^2*Y^2").unwrap(), r.zero());
    }

    #[test]
    fn poly_quotient_f3_x3() {
        let r = mk_poly_quotient(3, &[3], &[]).unwrap();
        assert_eq!(r.order(), 27);
        assert_eq!(r.characteristic(), 3);
        let x = r.parse_elem("X").unwrap();
        assert_ne!(r.mul(x, x), r.zero());
        assert_eq!(r.pow(x, 3), r.zero());
        let two = r.parse_elem("2").unwrap();
        assert_eq!(r.add(two, r.one()), r.zero());
        // 2 + 2*X parses and doubles to 1 + X.
        let v = r.parse_elem("2 + 2*X").unwrap();
        assert_eq!(r.add(v, v), r.parse_elem("1+X").unwrap());
    }

    #[test]
    fn idealization_z4_z2() {
        let base = mk_zn(4).unwrap();
        let spec = ModuleSpec { cyclic_orders: vec![2], action: ActionSpec::Natural };
        let r = mk_idealization(&base, &spec).unwrap();
        assert_eq!(r.order(), 8);
        assert_eq!(r.characteristic(), 4);
        let a = r.parse_elem("(2, 1)").unwrap();
        // (2,1)^2 = (4, 2*1 + 2*1) = (0, 0).
        assert_eq!(r.mul(a, a), r.zero());
        let b = r.parse_elem("(1, 1)").unwrap();
        // (1,1)^2 = (1, 2) = (1, 0) = 1.
        assert_eq!(r.mul(b, b), r.one());
        // (0, m) * (0, m') = 0: the module squares to zero.
        let m = r.parse_elem("(0, 1)").unwrap();
        assert_eq!(r.mul(m, m), r.zero());
        // Nilpotents are exactly (0|2, anything): four of them.
        let nils: Vec<u32> = r.elems().filter(|&x| r.pow(x, 8) == r.zero()).collect();
        assert_eq!(nils.len(), 4);
    }

    #[test]
    fn idealization_rejects_bad_natural_action() {
        let base = mk_zn(4).unwrap();
        // Z/3 is not a Z/4-module: 3 does not divide 4.
        let spec = ModuleSpec { cyclic_orders: vec![3], action: ActionSpec::Natural };
        assert!(mk_idealization(&base, &spec).is_err());
    }

    #[test]
    fn localize_z12_at_4() {
        // Inverting 4 in Z/12 kills the 3-element kernel {0,3,6,9}'s
        // complement... concretely: idempotent e = 4, eR = {0, 4, 8} = Z/3.
        let r = mk_zn(12).unwrap();
        let (l, map) = localize(&r, &[4]).unwrap();
        assert_eq!(l.order(), 3);
        assert_eq!(l.elem_name(l.one()), "4");
        // 1 maps to the identity, 3 maps to zero (3 * 4 = 0 in Z/12).
        assert_eq!(map[1], l.one());
        assert_eq!(map[3], l.zero());
        // The image of 4 is invertible.
        assert!(l.is_unit(map[4]));
    }

    #[test]
    fn localize_z6_at_2() {
        let r = mk_zn(6).unwrap();
        let (l, map) = localize(&r, &[2]).unwrap();
        assert_eq!(l.order(), 3);
        assert!(l.is_unit(map[2]));
        // Z/6 inverted at 2 is Z/3: 3 becomes 0.
        assert_eq!(map[3], l.zero());
    }

    #[test]
    fn localize_at_unit_is_identity_sized() {
        let r = mk_zn(12).unwrap();
        let (l, map) = localize(&r, &[5]).unwrap();
        assert_eq!(l.order(), 12);
        for x in r.elems() {
            assert_eq!(map[x as usize], x);
        }
    }

    #[test]
    fn localize_rejects_zero() {
        let r = mk_zn(12).unwrap();
        // 6 * 2 = 0 in Z/12, so the closure of {6, 2} contains zero.
        assert!(localize(&r, &[6, 2]).is_err());
        assert!(localize(&r, &[0]).is_err());
    }

    #[test]
    fn mixed_radix_roundtrip_f3() {
        let r = mk_poly_quotient(3, &[2, 2], &[]).unwrap();
        assert_eq!(r.order(), 81);
        for x in r.elems() {
            let a = r.algebra().unwrap();
            assert_eq!(a.encode(&a.decode(x)), x);
        }
    }

    #[test]
    fn rejects_oversized() {
        assert!(mk_zn(MAX_ZN_ORDER + 1).is_err());
        assert!(mk_zn(40000).is_ok());
        assert!(mk_poly_quotient(2, &[5, 4], &[]).is_err()); // 20 monomials > 16
        assert!(mk_poly_quotient(4, &[2], &[]).is_err()); // 4 not prime
        let a = mk_zn(100).unwrap();
        let b = mk_zn(100).unwrap();
        assert!(mk_product(&[&a, &b]).is_err()); // 10000 > 4096
    }

    #[test]
    fn quotient_by_everything_rejected() {
        assert!(mk_poly_quotient(2, &[2, 2], &["1"]).is_err());
        assert!(mk_poly_quotient(2, &[2, 2], &["1 + X"]).is_err());
    }
}
