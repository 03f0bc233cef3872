//! Graded subrings of a power-series ring over a finite field.
//!
//! A ring spec denotes a subring of `F_q[[X]]` of the form
//! `C_0 + C_1*X + ... + C_{c-1}*X^{c-1} + X^c*F_q[[X]]`, where each
//! coefficient slot `C_e` is an additive subgroup of `F_q` (equivalently an
//! `F_p`-subspace), slot 0 is a subfield, and the slots are closed under
//! multiplication. The exponent `c` past which every coefficient is free is
//! called the conductor. Membership of a truncated Laurent series is
//! decidable from finitely many coefficients: everything below the conductor
//! must satisfy its slot constraint and nothing may appear below order 0.
//!
//! An ideal spec attaches a second slot table to a ring spec, describing an
//! ideal in the same windowed form. Because slot 0 of the ring is a subfield,
//! every element with a nonzero constant term is a unit, so proper ideals
//! always have a zero constant slot; the rings denoted here are local and
//! [`maximal_ideal`] builds the unique maximal ideal.
//!
//! On top of the specs this module provides the conductor-square ring
//! `(I : I)` ([`colon_ring`]), base-change of the residue field
//! ([`pullback`]), and a bounded module-span oracle
//! ([`module_span_contains`]) used to compare ideals given by generating
//! samples against slot descriptions.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{is_subfield_mask, is_subspace, mask_elems, mask_product_span, span, subfield, Gf};
use crate::laurent::{OrdInfo, Prec, TruncatedLaurent};
use crate::{Error, Result};

/// Largest supported conductor for ring and ideal specs.
pub const MAX_CONDUCTOR: usize = 64;

/// Largest window accepted by [`module_span_contains`].
pub const MAX_SPAN_WINDOW: i64 = 128;

// ---------------------------------------------------------------------------
// Ring specs
// ---------------------------------------------------------------------------

/// A graded subring of `F_q[[X]]` described by coefficient slots below a
/// conductor. See the module docs for the denotation.
#[derive(Clone, Debug)]
pub struct SeriesRingSpec {
    gf: Rc<Gf>,
    /// `slots[e]` is the subset mask of allowed coefficients of `X^e` for
    /// `e < slots.len()`; beyond the conductor every coefficient is allowed.
    /// Canonical form: the last slot, if any, is not the full field.
    slots: Vec<u128>,
}

impl PartialEq for SeriesRingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.gf.q() == other.gf.q() && self.slots == other.slots
    }
}
impl Eq for SeriesRingSpec {}

fn full_mask(gf: &Gf) -> u128 {
    if gf.q() == 128 {
        u128::MAX
    } else {
        (1u128 << gf.q()) - 1
    }
}

/// Builds a ring spec from coefficient-slot masks, validating that the slots
/// denote a subring: each slot is an additive subgroup, slot 0 is a subfield
/// containing 1, and `C_e * C_e' ⊆ C_{e+e'}` whenever `e + e'` is still below
/// the conductor. Trailing full slots are trimmed so equal rings compare
/// equal.
pub fn series_ring(gf: &Rc<Gf>, slots: &[u128]) -> Result<SeriesRingSpec> {
    if slots.len() > MAX_CONDUCTOR {
        return Err(Error::TooLarge(format!(
            "conductor {} exceeds the supported maximum {MAX_CONDUCTOR}",
            slots.len()
        )));
    }
    let full = full_mask(gf);
    for (e, &m) in slots.iter().enumerate() {
        if m & !full != 0 {
            return Err(Error::Invalid(format!(
                "slot {e} mentions coefficients outside F_{}",
                gf.q()
            )));
        }
        if !is_subspace(gf, m) {
            return Err(Error::Invalid(format!(
                "slot {e} is not closed under addition"
            )));
        }
    }
    if let Some(&c0) = slots.first() {
        if !is_subfield_mask(gf, c0) {
            return Err(Error::Invalid(String::from(
                "slot 0 must be a subfield containing 1",
            )));
        }
    }
    for e1 in 0..slots.len() {
        for e2 in e1..slots.len() {
            let target = e1 + e2;
            if target >= slots.len() {
                continue;
            }
            let prod = mask_product_span(gf, slots[e1], slots[e2]);
            if prod & !slots[target] != 0 {
                return Err(Error::Invalid(format!(
                    "slots are not multiplicatively closed: slot {e1} times slot {e2} \
                     escapes slot {target}"
                )));
            }
        }
    }
    let mut slots = slots.to_vec();
    while slots.last() == Some(&full) {
        slots.pop();
    }
    Ok(SeriesRingSpec { gf: Rc::clone(gf), slots })
}

impl SeriesRingSpec {
    pub fn gf(&self) -> &Rc<Gf> {
        &self.gf
    }

    /// First exponent from which every coefficient is unconstrained.
    pub fn conductor(&self) -> i64 {
        self.slots.len() as i64
    }

    pub fn slots(&self) -> &[u128] {
        &self.slots
    }

    /// Allowed-coefficient mask at exponent `e` (full beyond the conductor,
    /// zero below order 0 — negative exponents never occur in the ring).
    pub fn slot(&self, e: i64) -> u128 {
        if e < 0 {
            1 // only the zero coefficient
        } else if (e as usize) < self.slots.len() {
            self.slots[e as usize]
        } else {
            full_mask(&self.gf)
        }
    }

    /// True when the spec denotes the full power-series ring `F_q[[X]]`,
    /// which is a discrete valuation ring.
    pub fn is_full_power_series(&self) -> bool {
        self.slots.is_empty()
    }
}

// ---------------------------------------------------------------------------
// Ideal specs
// ---------------------------------------------------------------------------

/// An ideal of a [`SeriesRingSpec`] in the same windowed form: coefficient
/// slots below the ideal's own conductor, all coefficients free beyond it.
#[derive(Clone, Debug)]
pub struct SeriesIdealSpec {
    ring: SeriesRingSpec,
    slots: Vec<u128>,
}

impl PartialEq for SeriesIdealSpec {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.slots == other.slots
    }
}
impl Eq for SeriesIdealSpec {}

/// Builds an ideal spec, validating that the slot table denotes a proper
/// ideal of `ring`: slots sit inside the ring's slots, the constant slot is
/// zero (any nonzero constant term would be a unit), the table extends at
/// least to the ring's conductor, and the slots absorb multiplication by
/// every ring slot. Trailing full slots are trimmed down to the ring's
/// conductor.
pub fn series_ideal(ring: &SeriesRingSpec, slots: &[u128]) -> Result<SeriesIdealSpec> {
    if slots.len() > MAX_CONDUCTOR {
        return Err(Error::TooLarge(format!(
            "ideal conductor {} exceeds the supported maximum {MAX_CONDUCTOR}",
            slots.len()
        )));
    }
    if slots.len() < ring.slots.len() {
        return Err(Error::Invalid(format!(
            "ideal slots stop at exponent {} but the ring constrains \
             coefficients up to exponent {}; the ideal table must cover the \
             ring's constrained range",
            slots.len(),
            ring.slots.len()
        )));
    }
    let gf = &ring.gf;
    let full = full_mask(gf);
    for (e, &m) in slots.iter().enumerate() {
        if m & !full != 0 {
            return Err(Error::Invalid(format!(
                "ideal slot {e} mentions coefficients outside F_{}",
                gf.q()
            )));
        }
        if !is_subspace(gf, m) {
            return Err(Error::Invalid(format!(
                "ideal slot {e} is not closed under addition"
            )));
        }
        if m & !ring.slot(e as i64) != 0 {
            return Err(Error::Invalid(format!(
                "ideal slot {e} allows coefficients the ring forbids"
            )));
        }
    }
    if slots.first().copied().unwrap_or(full) != 1 {
        return Err(Error::Invalid(String::from(
            "a proper ideal has zero constant slot: any element with nonzero \
             constant term is a unit of the ring",
        )));
    }
    // Absorption: multiplying an ideal coefficient by a ring coefficient must
    // land in the ideal's slot wherever the target is still constrained.
    let c_i = slots.len();
    for e_ring in 0..c_i {
        let ring_mask = ring.slot(e_ring as i64);
        if ring_mask == 1 {
            continue;
        }
        for e_ideal in 0..c_i {
            let target = e_ring + e_ideal;
            if target >= c_i {
                continue;
            }
            let prod = mask_product_span(gf, ring_mask, slots[e_ideal]);
            if prod & !slots[target] != 0 {
                return Err(Error::Invalid(format!(
                    "ideal slots are not absorbing: ring slot {e_ring} times \
                     ideal slot {e_ideal} escapes ideal slot {target}"
                )));
            }
        }
    }
    let mut slots = slots.to_vec();
    while slots.len() > ring.slots.len() && slots.last() == Some(&full) {
        slots.pop();
    }
    Ok(SeriesIdealSpec { ring: ring.clone(), slots })
}

impl SeriesIdealSpec {
    pub fn ring(&self) -> &SeriesRingSpec {
        &self.ring
    }

    pub fn gf(&self) -> &Rc<Gf> {
        &self.ring.gf
    }

    /// First exponent from which every coefficient is free.
    pub fn conductor(&self) -> i64 {
        self.slots.len() as i64
    }

    pub fn slots(&self) -> &[u128] {
        &self.slots
    }

    /// Allowed-coefficient mask at exponent `e`.
    pub fn slot(&self, e: i64) -> u128 {
        if e < 0 {
            1
        } else if (e as usize) < self.slots.len() {
            self.slots[e as usize]
        } else {
            full_mask(&self.ring.gf)
        }
    }

    /// Smallest order of a nonzero element: the first exponent whose slot is
    /// not `{0}` (the conductor itself if all listed slots are zero).
    pub fn min_order(&self) -> i64 {
        for (e, &m) in self.slots.iter().enumerate() {
            if m != 1 {
                return e as i64;
            }
        }
        self.slots.len() as i64
    }
}

/// The unique maximal ideal of a ring spec: all elements with zero constant
/// term. (These rings are local because slot 0 is a subfield, so anything
/// with a nonzero constant term is invertible within the ring.)
pub fn maximal_ideal(r: &SeriesRingSpec) -> SeriesIdealSpec {
    let mut slots: Vec<u128> = Vec::new();
    slots.push(1);
    for e in 1..r.slots.len() {
        slots.push(r.slots[e]);
    }
    series_ideal(r, &slots).expect("the zero-constant-term ideal is always valid")
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

fn check_field(gf: &Gf, x: &TruncatedLaurent) -> Result<()> {
    if gf.q() != x.gf().q() {
        return Err(Error::Invalid(format!(
            "element lives over F_{} but the spec is over F_{}",
            x.gf().q(),
            gf.q()
        )));
    }
    Ok(())
}

/// Decides membership of `x` in the set "coefficients below `conductor`
/// restricted by `slot`, free beyond, nothing below order 0".
fn graded_member(
    gf: &Gf,
    conductor: i64,
    slot: &dyn Fn(i64) -> u128,
    x: &TruncatedLaurent,
) -> Result<bool> {
    check_field(gf, x)?;
    match x.ord_info() {
        OrdInfo::ExactZero => Ok(true),
        OrdInfo::At(o) if o < 0 => Ok(false),
        OrdInfo::ZeroBelow(p) if p >= conductor => Ok(true),
        OrdInfo::ZeroBelow(p) => Err(Error::Precision(format!(
            "membership needs coefficients up to X^{conductor} but the \
             element is only known to vanish below X^{p}"
        ))),
        OrdInfo::At(_) => {
            let known_to = match x.prec() {
                Prec::Exact => conductor,
                Prec::UpTo(p) => p.min(conductor),
            };
            for e in 0..known_to {
                let c = x.coeff_at(e)?;
                if slot(e) >> c & 1 == 0 {
                    return Ok(false);
                }
            }
            if known_to < conductor {
                return Err(Error::Precision(format!(
                    "membership needs coefficients up to X^{conductor} but \
                     the element is only known below X^{known_to}"
                )));
            }
            Ok(true)
        }
    }
}

/// Does `x` belong to the subring denoted by `r`?
pub fn ring_member(r: &SeriesRingSpec, x: &TruncatedLaurent) -> Result<bool> {
    graded_member(&r.gf, r.conductor(), &|e| r.slot(e), x)
}

/// Does `x` belong to the ideal denoted by `i`?
pub fn ideal_member(i: &SeriesIdealSpec, x: &TruncatedLaurent) -> Result<bool> {
    graded_member(&i.ring.gf, i.conductor(), &|e| i.slot(e), x)
}

/// A ring or ideal spec used as a membership target.
#[derive(Clone, Copy, Debug)]
pub enum BaseSet<'a> {
    Ring(&'a SeriesRingSpec),
    Ideal(&'a SeriesIdealSpec),
}

impl BaseSet<'_> {
    pub fn gf(&self) -> &Rc<Gf> {
        match self {
            BaseSet::Ring(r) => r.gf(),
            BaseSet::Ideal(i) => i.gf(),
        }
    }

    pub fn member(&self, x: &TruncatedLaurent) -> Result<bool> {
        match self {
            BaseSet::Ring(r) => ring_member(r, x),
            BaseSet::Ideal(i) => ideal_member(i, x),
        }
    }
}

/// Membership query against a spec or one of its power-escape/power-trace
/// sets. `Escape(S, n)` holds for `x` when `x^n ∉ S`; `PowerIn(S, n)` holds
/// when `x^n ∈ S` — i.e. the query element's `n`-th power is an exhibited
/// member of `S`. Both are answered by computing `x^n` and testing it, never
/// by extracting roots.
#[derive(Clone, Copy, Debug)]
pub enum SetQuery<'a> {
    In(BaseSet<'a>),
    Escape(BaseSet<'a>, u32),
    PowerIn(BaseSet<'a>, u32),
}

/// Evaluates a [`SetQuery`] at `x`.
pub fn membership(x: &TruncatedLaurent, q: &SetQuery<'_>) -> Result<bool> {
    match q {
        SetQuery::In(s) => s.member(x),
        SetQuery::Escape(s, n) => Ok(!s.member(&x.pow(*n)?)?),
        SetQuery::PowerIn(s, n) => s.member(&x.pow(*n)?),
    }
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// Human-readable name of a coefficient mask: `0`, a (sub)field name, or an
/// explicit element list.
pub fn mask_name(gf: &Gf, mask: u128) -> String {
    if mask == 1 {
        return String::from("0");
    }
    if is_subfield_mask(gf, mask) {
        return format!("F{}", mask.count_ones());
    }
    let names: Vec<String> =
        mask_basis(gf, mask).iter().map(|&a| gf.elem_name(a)).collect();
    format!("span{{{}}}", names.join(","))
}

impl core::fmt::Display for SeriesRingSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let q = self.gf.q();
        if self.slots.is_empty() {
            return write!(f, "F{q}[[X]]");
        }
        let parts: Vec<String> =
            self.slots.iter().map(|&m| mask_name(&self.gf, m)).collect();
        write!(
            f,
            "ring over F{q}: slots [{}], free tail from X^{}",
            parts.join(", "),
            self.slots.len()
        )
    }
}

impl core::fmt::Display for SeriesIdealSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let parts: Vec<String> =
            self.slots.iter().map(|&m| mask_name(&self.ring.gf, m)).collect();
        write!(
            f,
            "ideal of {}: slots [{}], free tail from X^{}",
            self.ring,
            parts.join(", "),
            self.slots.len()
        )
    }
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Extracts an `F_p`-basis of a coefficient mask (element indices).
pub fn mask_basis(gf: &Gf, mask: u128) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    let mut have = span(gf, &basis);
    for a in mask_elems(mask) {
        if a == 0 {
            continue;
        }
        if have >> a & 1 == 0 {
            basis.push(a);
            have = span(gf, &basis);
        }
    }
    basis
}

/// A finite module generating sample of an ideal: one monomial `a·X^e` per
/// basis element `a` of each constrained slot, followed by the pure powers
/// `X^e` for `conductor ≤ e < conductor + tail`. Every listed element lies in
/// the ideal; together they generate it as a module over the ring up to the
/// listed degree.
pub fn ideal_generators(i: &SeriesIdealSpec, tail: i64) -> Result<Vec<TruncatedLaurent>> {
    if tail < 0 || tail > 8192 {
        return Err(Error::TooLarge(format!("generator tail length {tail} out of range")));
    }
    let gf = &i.ring.gf;
    let mut gens = Vec::new();
    for (e, &m) in i.slots.iter().enumerate() {
        for a in mask_basis(gf, m) {
            gens.push(TruncatedLaurent::monomial(gf, a, e as i64)?);
        }
    }
    let c = i.conductor();
    for e in c..c + tail {
        gens.push(TruncatedLaurent::monomial(gf, 1, e)?);
    }
    Ok(gens)
}

// ---------------------------------------------------------------------------
// Colon ring (I : I)
// ---------------------------------------------------------------------------

/// Computes the conductor-square ring `(I : I) = {x in the quotient field :
/// x·I ⊆ I}` of an ideal spec, itself a graded ring spec.
///
/// For slot-described ideals the answer is again slot-described: the
/// coefficient allowed at exponent `e` is everything that multiplies each
/// ideal slot into the slot `e` places further up. Elements of negative
/// order never qualify — multiplying the ideal's least-order monomial by
/// `X^{-m}` drops its nonzero leading coefficient below every nonzero slot —
/// but this is re-checked explicitly and reported as an error if it ever
/// failed.
pub fn colon_ring(i: &SeriesIdealSpec) -> Result<SeriesRingSpec> {
    let gf = &i.ring.gf;
    let c_i = i.slots.len();

    // Defensive re-check of the "no negative orders" argument: X^{-m} would
    // have to map every generator into the ideal.
    let gens = ideal_generators(i, 1)?;
    for m in 1..=c_i as i64 {
        let mut qualifies = true;
        for g in &gens {
            if !ideal_member(i, &g.shift(-m)?)? {
                qualifies = false;
                break;
            }
        }
        if qualifies {
            return Err(Error::Invalid(format!(
                "an element of negative order -{m} would multiply the ideal \
                 into itself; the slot description cannot express the \
                 resulting ring"
            )));
        }
    }

    let mut slots: Vec<u128> = Vec::new();
    for e in 0..c_i {
        let mut allowed: u128 = 0;
        'coeff: for a in 0..gf.q() {
            for e_ideal in 0..c_i {
                let target = e + e_ideal;
                if target >= c_i {
                    continue;
                }
                let prod = mask_product_span(gf, 1u128 << a | 1, i.slots[e_ideal]);
                if prod & !i.slots[target] != 0 {
                    continue 'coeff;
                }
            }
            allowed |= 1u128 << a;
        }
        slots.push(allowed);
    }
    series_ring(gf, &slots)
}

// ---------------------------------------------------------------------------
// Pullback along the residue map
// ---------------------------------------------------------------------------

/// Replaces the residue field of a spec whose constant slot is the full
/// coefficient field by the subfield of the given degree: the pullback of
/// the subfield along the map sending a series to its constant term. The
/// classic shape `k + X·V` arises this way from `V = F_q[[X]]`.
pub fn pullback(v: &SeriesRingSpec, subfield_degree: u32) -> Result<SeriesRingSpec> {
    let gf = &v.gf;
    let full = full_mask(gf);
    if v.slot(0) != full {
        return Err(Error::Invalid(String::from(
            "pullback needs a spec whose constant slot is the full coefficient field",
        )));
    }
    let k_mask = subfield(gf, subfield_degree)?;
    let mut slots: Vec<u128> = v.slots.clone();
    if slots.is_empty() {
        slots.push(k_mask);
    } else {
        slots[0] = k_mask;
    }
    series_ring(gf, &slots)
}

// ---------------------------------------------------------------------------
// Bounded module spans
// ---------------------------------------------------------------------------

/// Decides whether `target` lies in the module generated by `gens` over the
/// ring, with all products truncated to the coefficient window `[0, window)`.
/// Everything involved must be exact and of nonnegative order. The span is
/// computed as an `F_p`-row space: each generator is multiplied by every
/// basis monomial of the ring up to the window, the resulting coefficient
/// vectors are reduced by Gaussian elimination over `F_p`, and the target is
/// tested against the reduced rows.
///
/// A `true` answer certifies membership modulo terms of exponent `≥ window`;
/// a `false` answer says the target is not reachable even up to such terms.
pub fn module_span_contains(
    ring: &SeriesRingSpec,
    gens: &[TruncatedLaurent],
    target: &TruncatedLaurent,
    window: i64,
) -> Result<bool> {
    if window < 1 || window > MAX_SPAN_WINDOW {
        return Err(Error::TooLarge(format!(
            "span window {window} outside 1..={MAX_SPAN_WINDOW}"
        )));
    }
    let gf = &ring.gf;
    let p = gf.p();
    let k = gf.k() as usize;
    let dim = window as usize * k;

    let to_vec = |x: &TruncatedLaurent| -> Result<Vec<u32>> {
        check_field(gf, x)?;
        if x.prec() != Prec::Exact {
            return Err(Error::Precision(String::from(
                "span computations need exact elements",
            )));
        }
        if let OrdInfo::At(o) = x.ord_info() {
            if o < 0 {
                return Err(Error::Invalid(String::from(
                    "span computations cover nonnegative orders only",
                )));
            }
        }
        let mut v = vec![0u32; dim];
        for e in 0..window {
            let mut c = x.coeff_at(e)?;
            for d in 0..k {
                v[e as usize * k + d] = c % p;
                c /= p;
            }
        }
        Ok(v)
    };

    // Reduced row collection: rows[j] has its pivot at position pivots[j],
    // scaled to 1 there, and is the only row with a nonzero entry there.
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();

    let reduce = |mut v: Vec<u32>, insert: bool, rows: &mut Vec<Vec<u32>>, pivots: &mut Vec<usize>| -> bool {
        for (row, &piv) in rows.iter().zip(pivots.iter()) {
            let coef = v[piv];
            if coef != 0 {
                for (vi, ri) in v.iter_mut().zip(row.iter()) {
                    *vi = (*vi + (p - coef) * ri) % p;
                }
            }
        }
        let piv = match v.iter().position(|&c| c != 0) {
            Some(pos) => pos,
            None => return true, // in span
        };
        if insert {
            // Scale the pivot to 1 (multiply by the inverse mod p).
            let mut inv = 1u32;
            while (inv * v[piv]) % p != 1 {
                inv += 1;
            }
            for vi in v.iter_mut() {
                *vi = (*vi * inv) % p;
            }
            // Eliminate the new pivot from existing rows.
            for row in rows.iter_mut() {
                let coef = row[piv];
                if coef != 0 {
                    for (ri, vi) in row.iter_mut().zip(v.iter()) {
                        *ri = (*ri + (p - coef) * vi) % p;
                    }
                }
            }
            rows.push(v);
            pivots.push(piv);
        }
        false
    };

    for g in gens {
        check_field(gf, g)?;
        if g.prec() != Prec::Exact {
            return Err(Error::Precision(String::from(
                "span generators must be exact elements",
            )));
        }
        if let OrdInfo::At(o) = g.ord_info() {
            if o < 0 {
                return Err(Error::Invalid(String::from(
                    "span generators must have nonnegative order",
                )));
            }
        }
        for e in 0..window {
            for a in mask_basis(gf, ring.slot(e)) {
                let mono = TruncatedLaurent::monomial(gf, a, e)?;
                let prod = mono.mul(g)?.truncated(window)?;
                if prod.is_exact_zero() {
                    continue;
                }
                // The truncated product is known exactly on the window; lift
                // it to an exact vector by reading coefficients directly.
                let mut v = vec![0u32; dim];
                for ee in 0..window {
                    let mut c = match prod.coeff_at(ee) {
                        Ok(c) => c,
                        Err(_) => 0, // beyond the truncation bound: outside the window
                    };
                    for d in 0..k {
                        v[ee as usize * k + d] = c % p;
                        c /= p;
                    }
                }
                reduce(v, true, &mut rows, &mut pivots);
            }
        }
    }

    let tv = to_vec(target)?;
    Ok(reduce(tv, false, &mut rows, &mut pivots))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::mk_gf;
    use alloc::vec;

    fn gf(q: u32) -> Rc<Gf> {
        Rc::new(mk_gf(q).unwrap())
    }

    fn elem(g: &Rc<Gf>, order: i64, coeffs: &[u32]) -> TruncatedLaurent {
        TruncatedLaurent::from_coeffs(g, order, coeffs).unwrap()
    }

    /// `F2 + X^2·F2[[X]]`: the classic conductor-2 numerical-semigroup ring.
    fn cusp(g: &Rc<Gf>) -> SeriesRingSpec {
        series_ring(g, &[0b11, 1]).unwrap()
    }

    #[test]
    fn validation_accepts_and_rejects() {
        let g2 = gf(2);
        // F2 + X^2 F2[[X]] validates.
        let r = series_ring(&g2, &[0b11, 0b01]).unwrap();
        assert_eq!(r.conductor(), 2);

        let g4 = gf(4);
        // F2 + F2 X + X^2 F4[[X]] over F4 validates (prime-subfield slots).
        let f2 = subfield(&g4, 1).unwrap();
        let r = series_ring(&g4, &[f2, f2]).unwrap();
        assert_eq!(r.conductor(), 2);

        // Slot 0 without 1 is rejected.
        let err = series_ring(&g2, &[0b01, 0b11]).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));

        // Multiplicative-closure violation: allow t in slot 1 but forbid
        // t*t = t+1 in slot 2 (over F4, slot 1 * slot 1 lands in slot 2).
        let t_span = span(&g4, &[2]);
        let err = series_ring(&g4, &[f2, t_span, f2]).unwrap_err();
        let msg = format!("{err:?}");
        assert!(msg.contains("slot 1 times slot 1"), "got: {msg}");

        // Trailing full slots are trimmed: F2[[X]] written verbosely.
        let r = series_ring(&g2, &[0b11, 0b11]).unwrap();
        assert!(r.is_full_power_series());
        assert_eq!(r, series_ring(&g2, &[]).unwrap());
    }

    #[test]
    fn ideal_validation() {
        let g2 = gf(2);
        let r = cusp(&g2);
        // The maximal ideal X^2 F2[[X]].
        let m = maximal_ideal(&r);
        assert_eq!(m.conductor(), 2);
        assert_eq!(m.min_order(), 2);

        // A nonzero constant slot is rejected.
        let err = series_ideal(&r, &[0b11, 0b01]).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));

        // Slot table shorter than the ring's constrained range is rejected.
        let err = series_ideal(&r, &[1]).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));

        // Absorption failure: over F4[[X]], an "ideal" allowing only F2 at
        // exponent 1 with free tail from exponent 2 is not absorbing at
        // slot 1... actually F4*F2 at 0+1 -> slot 1 must absorb full F4.
        let g4 = gf(4);
        let v = series_ring(&g4, &[]).unwrap();
        let f2 = subfield(&g4, 1).unwrap();
        let err = series_ideal(&v, &[1, f2]).unwrap_err();
        let msg = format!("{err:?}");
        assert!(msg.contains("absorbing"), "got: {msg}");
    }

    #[test]
    fn membership_matches_slot_semantics() {
        let g2 = gf(2);
        // F2 + F2 X^2 + X^4 F2[[X]] — the conductor-4 ring with gap {1,3}.
        let r = series_ring(&g2, &[0b11, 1, 0b11, 1]).unwrap();
        let m = maximal_ideal(&r);

        // X^3 is not in the maximal ideal (slot 3 is zero).
        assert!(!ideal_member(&m, &elem(&g2, 3, &[1])).unwrap());
        // X^2 is.
        assert!(ideal_member(&m, &elem(&g2, 2, &[1])).unwrap());
        // X^2 + X^3 is not.
        assert!(!ideal_member(&m, &elem(&g2, 2, &[1, 1])).unwrap());
        // Zero belongs to every ideal.
        assert!(ideal_member(&m, &TruncatedLaurent::zero(&g2)).unwrap());
        // 1 + X^4-tail is in the ring but not the ideal.
        assert!(ring_member(&r, &elem(&g2, 0, &[1, 0, 1, 0, 1])).unwrap());
        assert!(!ideal_member(&m, &elem(&g2, 0, &[1])).unwrap());
        // Negative order is never in the ring.
        assert!(!ring_member(&r, &elem(&g2, -1, &[1])).unwrap());

        // Precision: an element known only below X^2 cannot be decided...
        let fuzzy = elem(&g2, 0, &[0, 0, 1, 1]).truncated(2).unwrap();
        assert!(matches!(ring_member(&r, &fuzzy), Err(Error::Precision(_))));
        // ...unless a violation is already visible.
        let bad = elem(&g2, 1, &[1, 1]).truncated(3).unwrap();
        assert!(!ring_member(&r, &bad).unwrap());
        // A window-zero known past the conductor is a member.
        let deep_zero = elem(&g2, 6, &[1]).truncated(5).unwrap();
        assert!(ring_member(&r, &deep_zero).unwrap());
    }

    #[test]
    fn escape_and_power_queries() {
        let g3 = gf(3);
        // F3 + F3 X^9 + X^12 F3[[X]].
        let mut slots = vec![1u128; 12];
        slots[0] = 0b111;
        slots[9] = 0b111;
        let r = series_ring(&g3, &slots).unwrap();
        let m = maximal_ideal(&r);

        // X^2 escapes the ideal at power 3: (X^2)^3 = X^6 has a forbidden slot.
        let x2 = elem(&g3, 2, &[1]);
        assert!(membership(&x2, &SetQuery::Escape(BaseSet::Ideal(&m), 3)).unwrap());
        // X^4 does not: (X^4)^3 = X^12 is past the conductor.
        let x4 = elem(&g3, 4, &[1]);
        assert!(!membership(&x4, &SetQuery::Escape(BaseSet::Ideal(&m), 3)).unwrap());
        assert!(membership(&x4, &SetQuery::PowerIn(BaseSet::Ideal(&m), 3)).unwrap());
        // X^3's cube X^9 hits the allowed slot 9.
        let x3 = elem(&g3, 3, &[1]);
        assert!(membership(&x3, &SetQuery::PowerIn(BaseSet::Ideal(&m), 3)).unwrap());
    }

    #[test]
    fn colon_ring_examples() {
        // (M : M) of the conductor-12 ring above is F3 + X^3 F3[[X]].
        let g3 = gf(3);
        let mut slots = vec![1u128; 12];
        slots[0] = 0b111;
        slots[9] = 0b111;
        let r = series_ring(&g3, &slots).unwrap();
        let m = maximal_ideal(&r);
        let v = colon_ring(&m).unwrap();
        let expected = series_ring(&g3, &[0b111, 1, 1]).unwrap();
        assert_eq!(v, expected);

        // (M : M) of the maximal ideal of F2[[X]] is F2[[X]] itself.
        let g2 = gf(2);
        let dvr = series_ring(&g2, &[]).unwrap();
        let m = maximal_ideal(&dvr);
        assert!(colon_ring(&m).unwrap().is_full_power_series());

        // (M : M) of M_N in F2 + X^N F2[[X]] is the full power-series ring.
        let rn = series_ring(&g2, &[0b11, 1, 1]).unwrap();
        let mn = maximal_ideal(&rn);
        assert!(colon_ring(&mn).unwrap().is_full_power_series());

        // In the cusp ring F2 + X^2 F2[[X]]: the even-power trace ideal
        // F2 X^2 + X^4 F2[[X]] has colon ring equal to the cusp itself,
        // while X^3 F2[[X]] has colon ring F2[[X]].
        let r = cusp(&g2);
        let even = series_ideal(&r, &[1, 1, 0b11, 1]).unwrap();
        assert_eq!(colon_ring(&even).unwrap(), r);
        let odd = series_ideal(&r, &[1, 1, 1]).unwrap();
        assert!(colon_ring(&odd).unwrap().is_full_power_series());
    }

    #[test]
    fn pullback_examples() {
        let g4 = gf(4);
        let v = series_ring(&g4, &[]).unwrap();
        // F2 + X F4[[X]].
        let r = pullback(&v, 1).unwrap();
        let f2 = subfield(&g4, 1).unwrap();
        assert_eq!(r, series_ring(&g4, &[f2]).unwrap());
        // Pulling back along the full field is the identity.
        assert_eq!(pullback(&v, 2).unwrap(), v);
        // A spec whose constant slot is constrained cannot be pulled back.
        assert!(pullback(&r, 1).is_err());
    }

    #[test]
    fn span_distinguishes_characteristics() {
        // Samples of squares landing in the maximal ideal of F + X^2 F[[X]]:
        // over F3 they generate all of M; over F2 the odd exponents below 4
        // stay out of reach.
        for (q, expect_x3) in [(3u32, true), (2u32, false)] {
            let g = gf(q);
            let full = full_mask(&g);
            let r = series_ring(&g, &[full, 1]).unwrap();
            let window = 8i64;
            let mut gens = Vec::new();
            // Sample y^2 for y of order >= 1 and short support.
            for a in 1..q {
                for b in 0..q {
                    for c in 0..q {
                        let y = elem(&g, 1, &[a, b, c]);
                        gens.push(y.pow(2).unwrap());
                    }
                }
            }
            let x2 = elem(&g, 2, &[1]);
            let x3 = elem(&g, 3, &[1]);
            assert!(module_span_contains(&r, &gens, &x2, window).unwrap());
            assert_eq!(
                module_span_contains(&r, &gens, &x3, window).unwrap(),
                expect_x3,
                "characteristic {q}"
            );
        }
    }

    #[test]
    fn generators_and_rendering() {
        let g2 = gf(2);
        let r = series_ring(&g2, &[0b11, 1, 0b11, 1]).unwrap();
        let m = maximal_ideal(&r);
        let gens = ideal_generators(&m, 2).unwrap();
        // Basis monomial X^2 plus tail X^4, X^5.
        let names: Vec<String> = gens.iter().map(|g| format!("{g}")).collect();
        assert_eq!(names, vec!["X^2", "X^4", "X^5"]);
        for g in &gens {
            assert!(ideal_member(&m, g).unwrap());
        }

        assert_eq!(
            format!("{r}"),
            "ring over F2: slots [F2, 0, F2, 0], free tail from X^4"
        );
        let g4 = gf(4);
        let f2 = subfield(&g4, 1).unwrap();
        let rr = series_ring(&g4, &[f2, span(&g4, &[2])]).unwrap();
        assert_eq!(
            format!("{rr}"),
            "ring over F4: slots [F2, span{t}], free tail from X^2"
        );
        assert_eq!(format!("{}", series_ring(&g2, &[]).unwrap()), "F2[[X]]");
    }
}
