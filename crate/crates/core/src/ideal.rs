//! Ideals of finite rings: construction, arithmetic, radicals, exhaustive
//! enumeration, and quotient rings.
//!
//! An [`IdealHandle`] stores the full member set as a bit set plus the id of
//! its parent ring, so accidental cross-ring use is caught. For
//! structure-constant rings the operations additionally exploit the
//! `F_p`-subspace structure (row-reduced bases) instead of elementwise
//! closure, which keeps enumeration feasible for orders in the thousands.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::fp::Rref;
use crate::ring::{gcd_u32, quotient_algebra, finish_algebra_ring, FiniteRing, Repr};
use crate::{Error, Result};

/// Default cap on the number of ideals `enumerate_ideals` will produce.
pub const DEFAULT_IDEAL_BUDGET: usize = 20_000;
/// Internal cap on elementwise closure work (pairwise operations) during a
/// single enumeration.
pub(crate) const WORK_BUDGET: u64 = 4_000_000_000;

/// An ideal of a finite ring, stored by its complete member set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct IdealHandle {
    ring_id: u64,
    elems: BitSet,
}

impl IdealHandle {
    pub fn ring_id(&self) -> u64 {
        self.ring_id
    }

    pub fn members(&self) -> &BitSet {
        &self.elems
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elems.contains(x)
    }

    /// Number of elements.
    pub fn size(&self) -> u32 {
        self.elems.count()
    }
}

pub(crate) fn check_ring<'a>(r: &'a FiniteRing, h: &IdealHandle) -> Result<&'a FiniteRing> {
    if r.id() != h.ring_id {
        return Err(Error::Invalid(format!(
            "ideal belongs to ring #{} but was used with ring #{} ({})",
            h.ring_id,
            r.id(),
            r.provenance()
        )));
    }
    Ok(r)
}

/// Row-reduced basis of an ideal's coefficient subspace (algebra rings).
fn subspace_of(r: &FiniteRing, members: &BitSet) -> Rref {
    let a = r.algebra().expect("subspace_of requires an algebra ring");
    let mut sub = Rref::new(a.p, a.dim);
    let target_rank = {
        // |I| = p^rank.
        let mut n = members.count();
        let mut rank = 0usize;
        while n > 1 {
            n /= a.p as u32;
            rank += 1;
        }
        rank
    };
    for x in members.iter() {
        if sub.rank() == target_rank {
            break;
        }
        sub.insert(&a.decode(x));
    }
    sub
}

fn bitset_of_span(r: &FiniteRing, sub: &Rref) -> BitSet {
    let a = r.algebra().expect("algebra ring required");
    let mut out = BitSet::new(r.order());
    for v in sub.enumerate() {
        out.insert(a.encode(&v));
    }
    out
}

/// Least nonzero member of an ideal of `Z/n` — its canonical generator — or
/// `0` for the zero ideal.
fn zn_generator(i: &IdealHandle) -> u32 {
    i.elems.iter().find(|&x| x != 0).unwrap_or(0)
}

/// Members of the subgroup of `Z/n` generated by `d` (`d = 0` gives `{0}`).
fn zn_subgroup(n: u32, d: u32) -> BitSet {
    let mut out = BitSet::new(n);
    out.insert(0);
    if d != 0 {
        let g = gcd_u32(d, n);
        let mut t = g;
        while t < n {
            out.insert(t);
            t += g;
        }
    }
    out
}

/// The principal ideal `R*x` as a member set. Distributivity makes the set
/// of multiples additively closed, so one pass suffices.
fn principal_members(r: &FiniteRing, x: u32) -> BitSet {
    let mut s = BitSet::new(r.order());
    for t in r.elems() {
        s.insert(r.mul(t, x));
    }
    s
}

/// Additive subgroup generated by a list of elements (table-ring path).
fn additive_closure(r: &FiniteRing, base: &BitSet) -> BitSet {
    let mut s = BitSet::new(r.order());
    s.insert(r.zero());
    let mut queue: Vec<u32> = vec![r.zero()];
    let base_list: Vec<u32> = base.iter().collect();
    let mut qi = 0;
    while qi < queue.len() {
        let a = queue[qi];
        qi += 1;
        for &b in &base_list {
            let c = r.add(a, b);
            if s.insert(c) {
                queue.push(c);
            }
        }
    }
    s
}

/// The zero ideal.
pub fn zero_ideal(r: &FiniteRing) -> IdealHandle {
    let mut elems = BitSet::new(r.order());
    elems.insert(r.zero());
    IdealHandle { ring_id: r.id(), elems }
}

/// The unit ideal (the whole ring).
pub fn unit_ideal(r: &FiniteRing) -> IdealHandle {
    let mut elems = BitSet::new(r.order());
    for x in r.elems() {
        elems.insert(x);
    }
    IdealHandle { ring_id: r.id(), elems }
}

/// The ideal generated by the given elements.
pub fn ideal_from_gens(r: &FiniteRing, gens: &[u32]) -> Result<IdealHandle> {
    for &g in gens {
        if g >= r.order() {
            return Err(Error::Invalid(format!("generator index {g} out of range")));
        }
    }
    let elems = match &r.repr {
        Repr::Algebra(a) => {
            let mut sub = Rref::new(a.p, a.dim);
            for &g in gens {
                let gv = a.decode(g);
                for i in 0..a.dim {
                    let mut e = vec![0u8; a.dim];
                    e[i] = 1;
                    sub.insert(&a.vec_mul(&e, &gv));
                }
            }
            bitset_of_span(r, &sub)
        }
        Repr::Table { .. } | Repr::Zn { .. } => {
            let mut multiples = BitSet::new(r.order());
            multiples.insert(r.zero());
            for &g in gens {
                multiples.union_with(&principal_members(r, g));
            }
            additive_closure(r, &multiples)
        }
    };
    Ok(IdealHandle { ring_id: r.id(), elems })
}

/// Parses a comma-separated generator list (each entry an element
/// expression) and builds the ideal it generates. An empty or `"0"` list
/// gives the zero ideal.
pub fn ideal_from_strs(r: &FiniteRing, gens: &[&str]) -> Result<IdealHandle> {
    let mut idx = Vec::new();
    for s in gens {
        idx.push(r.parse_elem(s)?);
    }
    ideal_from_gens(r, &idx)
}

/// Validates that a member set really is an ideal and wraps it.
pub fn ideal_from_members(r: &FiniteRing, members: BitSet) -> Result<IdealHandle> {
    if members.capacity() != r.order() {
        return Err(Error::Invalid("member set capacity does not match the ring order".into()));
    }
    if !is_ideal_set(r, &members) {
        return Err(Error::Invalid("the given member set is not an ideal".into()));
    }
    Ok(IdealHandle { ring_id: r.id(), elems: members })
}

/// True if `set` is an ideal: contains 0, closed under addition, absorbs
/// ring multiplication.
pub fn is_ideal_set(r: &FiniteRing, set: &BitSet) -> bool {
    if !set.contains(r.zero()) {
        return false;
    }
    match &r.repr {
        Repr::Algebra(a) => {
            let sub = subspace_of(r, set);
            // Subspace: the span must reproduce the set exactly.
            let mut count = 1u64;
            for _ in 0..sub.rank() {
                count *= a.p as u64;
            }
            if count != set.count() as u64 {
                return false;
            }
            for v in sub.rows() {
                if !set.contains(a.encode(v)) {
                    return false;
                }
            }
            // Absorption on the basis suffices by linearity.
            for row in sub.rows() {
                for i in 0..a.dim {
                    let mut e = vec![0u8; a.dim];
                    e[i] = 1;
                    if !sub.contains(&a.vec_mul(&e, row)) {
                        return false;
                    }
                }
            }
            true
        }
        Repr::Table { .. } | Repr::Zn { .. } => {
            let list: Vec<u32> = set.iter().collect();
            for &a in &list {
                for &b in &list {
                    if !set.contains(r.add(a, b)) {
                        return false;
                    }
                }
            }
            for &a in &list {
                for x in r.elems() {
                    if !set.contains(r.mul(x, a)) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// True if the ideal is proper (does not contain 1).
pub fn is_proper(r: &FiniteRing, i: &IdealHandle) -> Result<bool> {
    check_ring(r, i)?;
    Ok(!i.contains(r.one()))
}

/// `I + J`.
pub fn ideal_sum(r: &FiniteRing, i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    check_ring(r, i)?;
    check_ring(r, j)?;
    let elems = match &r.repr {
        Repr::Algebra(_) => {
            let mut sub = subspace_of(r, &i.elems);
            let other = subspace_of(r, &j.elems);
            for row in other.rows() {
                sub.insert(row);
            }
            bitset_of_span(r, &sub)
        }
        Repr::Zn { n } => {
            // Ideals of Z/n are subgroups (d); the sum is the gcd subgroup.
            zn_subgroup(*n, gcd_u32(zn_generator(i), zn_generator(j)))
        }
        Repr::Table { .. } => {
            // The elementwise sumset of two subgroups is already a subgroup.
            let mut out = BitSet::new(r.order());
            for a in i.elems.iter() {
                for b in j.elems.iter() {
                    out.insert(r.add(a, b));
                }
            }
            out
        }
    };
    Ok(IdealHandle { ring_id: r.id(), elems })
}

/// `I * J` (the ideal generated by pairwise products).
pub fn ideal_product(r: &FiniteRing, i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    check_ring(r, i)?;
    check_ring(r, j)?;
    let elems = match &r.repr {
        Repr::Algebra(a) => {
            let bi = subspace_of(r, &i.elems);
            let bj = subspace_of(r, &j.elems);
            let mut sub = Rref::new(a.p, a.dim);
            for u in bi.rows() {
                for v in bj.rows() {
                    // Products of basis vectors span I*J: scaling re-lands in
                    // the span, and r(uv) = (ru)v stays a product.
                    sub.insert(&a.vec_mul(u, v));
                }
            }
            // The span of basis products absorbs multiplication, but close
            // explicitly for safety on the basis.
            let mut grew = true;
            while grew {
                grew = false;
                let rows: Vec<Vec<u8>> = sub.rows().to_vec();
                for row in rows {
                    for k in 0..a.dim {
                        let mut e = vec![0u8; a.dim];
                        e[k] = 1;
                        if sub.insert(&a.vec_mul(&e, &row)) {
                            grew = true;
                        }
                    }
                }
            }
            bitset_of_span(r, &sub)
        }
        Repr::Zn { n } => {
            // (d1)(d2) in Z/n is generated by d1*d2; reduce mod n first so
            // the gcd with n lands on the canonical divisor.
            let d1 = zn_generator(i) as u64;
            let d2 = zn_generator(j) as u64;
            zn_subgroup(*n, ((d1 * d2) % (*n as u64)) as u32)
        }
        Repr::Table { .. } => {
            let mut prods = BitSet::new(r.order());
            prods.insert(r.zero());
            for a in i.elems.iter() {
                for b in j.elems.iter() {
                    prods.insert(r.mul(a, b));
                }
            }
            additive_closure(r, &prods)
        }
    };
    Ok(IdealHandle { ring_id: r.id(), elems })
}

/// `I^n`; `n = 0` gives the unit ideal.
pub fn ideal_power(r: &FiniteRing, i: &IdealHandle, n: u32) -> Result<IdealHandle> {
    check_ring(r, i)?;
    let mut acc = unit_ideal(r);
    for _ in 0..n {
        acc = ideal_product(r, &acc, i)?;
    }
    Ok(acc)
}

/// Intersection of two ideals.
pub fn ideal_intersect(r: &FiniteRing, i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    check_ring(r, i)?;
    check_ring(r, j)?;
    let mut elems = i.elems.clone();
    elems.intersect_with(&j.elems);
    Ok(IdealHandle { ring_id: r.id(), elems })
}

/// Colon ideal `(I : J) = { x : xJ is inside I }`.
pub fn ideal_colon(r: &FiniteRing, i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    check_ring(r, i)?;
    check_ring(r, j)?;
    let mut elems = BitSet::new(r.order());
    match &r.repr {
        Repr::Algebra(a) => {
            // x J inside I iff x b inside I for each basis vector b of J.
            let bj = subspace_of(r, &j.elems);
            for x in r.elems() {
                let xv = a.decode(x);
                if bj.rows().iter().all(|b| i.elems.contains(a.encode(&a.vec_mul(&xv, b)))) {
                    elems.insert(x);
                }
            }
        }
        Repr::Table { .. } | Repr::Zn { .. } => {
            for x in r.elems() {
                let mut ok = true;
                for b in j.elems.iter() {
                    if !i.elems.contains(r.mul(x, b)) {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    elems.insert(x);
                }
            }
        }
    }
    Ok(IdealHandle { ring_id: r.id(), elems })
}

/// Annihilator `(0 : J)`.
pub fn annihilator(r: &FiniteRing, j: &IdealHandle) -> Result<IdealHandle> {
    ideal_colon(r, &zero_ideal(r), j)
}

/// Radical of `I`: all `x` with some power in `I`.
///
/// In a ring of order at most 2^16, `x^k` eventually enters `I` iff
/// `x^(2^16)` lies in `I` (ideals absorb further multiplication, and the
/// power sequence enters within its preperiod plus period, both below the
/// ring order), so sixteen squarings per element decide membership.
pub fn radical(r: &FiniteRing, i: &IdealHandle) -> Result<IdealHandle> {
    check_ring(r, i)?;
    let mut elems = BitSet::new(r.order());
    for x in r.elems() {
        let mut y = x;
        for _ in 0..16 {
            y = r.mul(y, y);
        }
        if i.elems.contains(y) {
            elems.insert(x);
        }
    }
    debug_assert!(is_ideal_set(r, &elems));
    Ok(IdealHandle { ring_id: r.id(), elems })
}

/// Nilradical (radical of the zero ideal).
pub fn nilradical(r: &FiniteRing) -> IdealHandle {
    radical(r, &zero_ideal(r)).expect("zero ideal is never cross-ring")
}

/// True if the whole ring is a field.
///
/// A finite commutative ring is a product of local rings; it is reduced iff
/// that product is a product of fields, and has no idempotents beyond 0 and
/// 1 iff there is exactly one factor. Both conditions together characterize
/// fields and are each linear scans.
pub fn ring_is_field(r: &FiniteRing) -> bool {
    for x in r.elems() {
        if x != r.zero() {
            let mut y = x;
            for _ in 0..16 {
                y = r.mul(y, y);
            }
            if y == r.zero() {
                return false; // nonzero nilpotent
            }
        }
        if r.mul(x, x) == x && x != r.zero() && x != r.one() {
            return false; // nontrivial idempotent
        }
    }
    true
}

/// True if `I` is prime. In a finite commutative ring the quotient is a
/// finite integral domain, hence a field, so prime and maximal coincide.
pub fn is_prime(r: &FiniteRing, i: &IdealHandle) -> Result<bool> {
    check_ring(r, i)?;
    if i.contains(r.one()) {
        return Ok(false);
    }
    match &r.repr {
        Repr::Table { .. } => {
            let outside: Vec<u32> = r.elems().filter(|&x| !i.contains(x)).collect();
            for &a in &outside {
                for &b in &outside {
                    if i.contains(r.mul(a, b)) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        Repr::Algebra(_) | Repr::Zn { .. } => {
            let (q, _) = quotient_ring(r, i)?;
            Ok(ring_is_field(&q))
        }
    }
}

/// True if `I` is maximal (equivalently, the quotient is a field).
pub fn is_maximal(r: &FiniteRing, i: &IdealHandle) -> Result<bool> {
    check_ring(r, i)?;
    if i.contains(r.one()) {
        return Ok(false);
    }
    let (q, _) = quotient_ring(r, i)?;
    Ok(ring_is_field(&q))
}

/// A small deterministic generating set: greedily add the lowest-index
/// element not yet generated.
pub fn generating_set(r: &FiniteRing, i: &IdealHandle) -> Result<Vec<u32>> {
    check_ring(r, i)?;
    let mut gens: Vec<u32> = Vec::new();
    let mut span = zero_ideal(r);
    if span.elems == i.elems {
        return Ok(gens);
    }
    for x in i.elems.iter() {
        if span.contains(x) {
            continue;
        }
        gens.push(x);
        let px = ideal_from_gens(r, &[x])?;
        span = ideal_sum(r, &span, &px)?;
        if span.elems == i.elems {
            break;
        }
    }
    debug_assert_eq!(span.elems, i.elems);
    Ok(gens)
}

/// Display form `(g1, g2, ...)` using element names; the zero ideal is
/// `(0)`.
pub fn ideal_display(r: &FiniteRing, i: &IdealHandle) -> Result<String> {
    let gens = generating_set(r, i)?;
    if gens.is_empty() {
        return Ok("(0)".into());
    }
    let names: Vec<String> = gens.iter().map(|&g| r.elem_name(g)).collect();
    Ok(format!("({})", names.join(", ")))
}

/// Enumerates **all** ideals of the ring, sorted by (size, member set).
///
/// Every ideal is a join of principal ideals, so the principal ideals are
/// closed under pairwise joins until stable. Fails with a budget error if
/// more than `max_ideals` ideals exist (or the elementwise work cap is hit),
/// making the refusal explicit instead of silently truncating.
pub fn enumerate_ideals(r: &FiniteRing, max_ideals: usize) -> Result<Vec<IdealHandle>> {
    let mut work: u64 = 0;
    match &r.repr {
        Repr::Algebra(a) => {
            let mut seen: BTreeSet<Rref> = BTreeSet::new();
            let mut queue: Vec<Rref> = Vec::new();
            for x in r.elems() {
                let xv = a.decode(x);
                let mut sub = Rref::new(a.p, a.dim);
                for i in 0..a.dim {
                    let mut e = vec![0u8; a.dim];
                    e[i] = 1;
                    sub.insert(&a.vec_mul(&e, &xv));
                }
                work += (a.dim * a.dim) as u64;
                if work > WORK_BUDGET {
                    return Err(Error::Budget("ideal enumeration work cap exceeded".into()));
                }
                if seen.insert(sub.clone()) {
                    queue.push(sub);
                    if seen.len() > max_ideals {
                        return Err(Error::Budget(format!(
                            "more than {max_ideals} ideals (cap exceeded)"
                        )));
                    }
                }
            }
            let mut qi = 0;
            while qi < queue.len() {
                let cur = queue[qi].clone();
                qi += 1;
                let snapshot: Vec<Rref> = queue.clone();
                for other in snapshot {
                    let mut join = cur.clone();
                    let mut grew = false;
                    for row in other.rows() {
                        if join.insert(row) {
                            grew = true;
                        }
                    }
                    work += (cur.rank() * other.rank() * a.dim) as u64 + 1;
                    if work > WORK_BUDGET {
                        return Err(Error::Budget("ideal enumeration work cap exceeded".into()));
                    }
                    if grew && seen.insert(join.clone()) {
                        queue.push(join);
                        if seen.len() > max_ideals {
                            return Err(Error::Budget(format!(
                                "more than {max_ideals} ideals (cap exceeded)"
                            )));
                        }
                    }
                }
            }
            let mut out: Vec<IdealHandle> = seen
                .iter()
                .map(|sub| IdealHandle { ring_id: r.id(), elems: bitset_of_span(r, sub) })
                .collect();
            out.sort_by(|x, y| x.size().cmp(&y.size()).then_with(|| x.elems.cmp(&y.elems)));
            Ok(out)
        }
        Repr::Table { .. } | Repr::Zn { .. } => {
            let mut seen: BTreeSet<BitSet> = BTreeSet::new();
            let mut queue: Vec<BitSet> = Vec::new();
            for x in r.elems() {
                let p = principal_members(r, x);
                work += r.order() as u64;
                if seen.insert(p.clone()) {
                    queue.push(p);
                    if seen.len() > max_ideals {
                        return Err(Error::Budget(format!(
                            "more than {max_ideals} ideals (cap exceeded)"
                        )));
                    }
                }
            }
            let mut qi = 0;
            while qi < queue.len() {
                let cur = queue[qi].clone();
                qi += 1;
                let snapshot_len = queue.len();
                for oi in 0..snapshot_len {
                    let other = queue[oi].clone();
                    if cur.is_subset(&other) || other.is_subset(&cur) {
                        continue;
                    }
                    work += (cur.count() as u64) * (other.count() as u64);
                    if work > WORK_BUDGET {
                        return Err(Error::Budget("ideal enumeration work cap exceeded".into()));
                    }
                    let mut sum = BitSet::new(r.order());
                    for a in cur.iter() {
                        for b in other.iter() {
                            sum.insert(r.add(a, b));
                        }
                    }
                    if seen.insert(sum.clone()) {
                        queue.push(sum);
                        if seen.len() > max_ideals {
                            return Err(Error::Budget(format!(
                                "more than {max_ideals} ideals (cap exceeded)"
                            )));
                        }
                    }
                }
            }
            let mut out: Vec<IdealHandle> = seen
                .into_iter()
                .map(|elems| IdealHandle { ring_id: r.id(), elems })
                .collect();
            out.sort_by(|x, y| x.size().cmp(&y.size()).then_with(|| x.elems.cmp(&y.elems)));
            Ok(out)
        }
    }
}

/// Quotient ring `R/I` together with the projection map (element index in
/// `R` to element index in `R/I`). Rejects improper `I`.
pub fn quotient_ring(r: &FiniteRing, i: &IdealHandle) -> Result<(FiniteRing, Vec<u32>)> {
    check_ring(r, i)?;
    if i.contains(r.one()) {
        return Err(Error::Invalid("cannot form the quotient by the unit ideal (zero ring)".into()));
    }
    match &r.repr {
        Repr::Algebra(a) => {
            let sub = subspace_of(r, &i.elems);
            let qalg = quotient_algebra(a, &sub);
            let keep: Vec<usize> =
                (0..a.dim).filter(|k| !sub.pivots().contains(k)).collect();
            let provenance = format!("({}) / {}", r.provenance(), ideal_display(r, i)?);
            let q = finish_algebra_ring(qalg, provenance)?;
            let qa = q.algebra().expect("quotient of an algebra is an algebra");
            let map: Vec<u32> = r
                .elems()
                .map(|x| {
                    let mut v = a.decode(x);
                    sub.reduce(&mut v);
                    let img: Vec<u8> = keep.iter().map(|&k| v[k]).collect();
                    qa.encode(&img)
                })
                .collect();
            Ok((q, map))
        }
        Repr::Zn { n } => {
            // Every ideal of Z/n is (d) for a divisor d, with d the smallest
            // nonzero member; the quotient is canonically Z/d.
            let d = match i.elems.iter().find(|&x| x != 0) {
                Some(d) => d,
                None => *n, // zero ideal: the quotient is the ring itself
            };
            debug_assert_eq!(n % d, 0);
            debug_assert!(i.elems.iter().all(|x| x % d == 0));
            let q = crate::ring::mk_zn(d)?;
            let map: Vec<u32> = (0..*n).map(|x| x % d).collect();
            Ok((q, map))
        }
        Repr::Table { .. } => {
            let n = r.order();
            let mut coset = vec![u32::MAX; n as usize];
            let mut reps: Vec<u32> = Vec::new();
            for x in r.elems() {
                if coset[x as usize] != u32::MAX {
                    continue;
                }
                let id = reps.len() as u32;
                reps.push(x);
                for d in i.elems.iter() {
                    coset[r.add(x, d) as usize] = id;
                }
            }
            let m = reps.len() as u32;
            let names: Vec<String> = reps.iter().map(|&x| r.elem_name(x)).collect();
            let provenance = format!("({}) / {}", r.provenance(), ideal_display(r, i)?);
            let q = crate::ring::build_quotient_table(
                m,
                coset[r.zero() as usize],
                coset[r.one() as usize],
                names,
                |x, y| coset[r.add(reps[x as usize], reps[y as usize]) as usize],
                |x, y| coset[r.mul(reps[x as usize], reps[y as usize]) as usize],
                provenance,
            )?;
            Ok((q, coset))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{mk_poly_quotient, mk_zn};

    #[test]
    fn z12_ideal_lattice() {
        let r = mk_zn(12).unwrap();
        // The ideals of Z/12 are (d) for d dividing 12: six of them.
        let all = enumerate_ideals(&r, DEFAULT_IDEAL_BUDGET).unwrap();
        assert_eq!(all.len(), 6);
        let sizes: Vec<u32> = all.iter().map(|i| i.size()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 4, 6, 12]);
        // Spot checks on the arithmetic.
        let i4 = ideal_from_strs(&r, &["4"]).unwrap();
        let i2 = ideal_from_strs(&r, &["2"]).unwrap();
        let i3 = ideal_from_strs(&r, &["3"]).unwrap();
        let i6 = ideal_from_strs(&r, &["6"]).unwrap();
        assert_eq!(radical(&r, &i4).unwrap(), i2);
        assert_eq!(ideal_product(&r, &i2, &i2).unwrap(), i4);
        assert_eq!(ideal_sum(&r, &i2, &i3).unwrap(), unit_ideal(&r));
        assert_eq!(ideal_intersect(&r, &i4, &i6).unwrap(), zero_ideal(&r));
        assert_eq!(ideal_colon(&r, &i4, &i2).unwrap(), i2);
        assert_eq!(annihilator(&r, &i6).unwrap(), i2);
        assert_eq!(nilradical(&r), i6);
    }

    #[test]
    fn zn_sum_and_product_match_the_generator_path() {
        // The divisor arithmetic must agree with ideals built from explicit
        // generators (which go through elementwise closure).
        let r = mk_zn(24).unwrap();
        let divisors = [1u32, 2, 3, 4, 6, 8, 12, 24];
        for &a in &divisors {
            for &b in &divisors {
                let ia = ideal_from_gens(&r, &[a % 24]).unwrap();
                let ib = ideal_from_gens(&r, &[b % 24]).unwrap();
                let sum_gen = crate::ring::gcd_u32(a, b) % 24;
                assert_eq!(
                    ideal_sum(&r, &ia, &ib).unwrap(),
                    ideal_from_gens(&r, &[sum_gen]).unwrap()
                );
                let prod_gen = ((a as u64 * b as u64) % 24) as u32;
                assert_eq!(
                    ideal_product(&r, &ia, &ib).unwrap(),
                    ideal_from_gens(&r, &[prod_gen]).unwrap()
                );
            }
        }
    }

    #[test]
    fn z12_primes() {
        let r = mk_zn(12).unwrap();
        let i2 = ideal_from_strs(&r, &["2"]).unwrap();
        let i3 = ideal_from_strs(&r, &["3"]).unwrap();
        let i4 = ideal_from_strs(&r, &["4"]).unwrap();
        let i6 = ideal_from_strs(&r, &["6"]).unwrap();
        assert!(is_prime(&r, &i2).unwrap());
        assert!(is_prime(&r, &i3).unwrap());
        assert!(!is_prime(&r, &i4).unwrap());
        assert!(!is_prime(&r, &i6).unwrap());
        assert!(!is_prime(&r, &zero_ideal(&r)).unwrap());
        assert!(!is_prime(&r, &unit_ideal(&r)).unwrap());
        assert!(is_maximal(&r, &i2).unwrap());
        assert!(!is_maximal(&r, &i4).unwrap());
    }

    #[test]
    fn dual_numbers_lattice() {
        // F_2[X,Y]/(X^2,Y^2) has exactly 7 ideals:
        // 0, (XY), (X), (Y), (X+Y), (X,Y), R.
        let r = mk_poly_quotient(2, &[2, 2], &[]).unwrap();
        assert_eq!(r.order(), 16);
        let all = enumerate_ideals(&r, DEFAULT_IDEAL_BUDGET).unwrap();
        assert_eq!(all.len(), 7);
        let sizes: Vec<u32> = all.iter().map(|i| i.size()).collect();
        assert_eq!(sizes, vec![1, 2, 4, 4, 4, 8, 16]);
    }

    #[test]
    fn ideal_membership_and_display() {
        let r = mk_poly_quotient(2, &[2, 2], &[]).unwrap();
        let m = ideal_from_strs(&r, &["X", "Y"]).unwrap();
        assert_eq!(m.size(), 8);
        assert!(is_proper(&r, &m).unwrap());
        let x = r.parse_elem("X").unwrap();
        let xy = r.parse_elem("X*Y").unwrap();
        assert!(m.contains(x) && m.contains(xy));
        assert!(!m.contains(r.one()));
        assert_eq!(ideal_display(&r, &m).unwrap(), "(X, Y)");
        assert_eq!(ideal_display(&r, &zero_ideal(&r)).unwrap(), "(0)");
        // M is maximal here; M^2 = (XY).
        assert!(is_maximal(&r, &m).unwrap());
        let m2 = ideal_power(&r, &m, 2).unwrap();
        assert_eq!(m2, ideal_from_strs(&r, &["X*Y"]).unwrap());
        let m3 = ideal_power(&r, &m, 3).unwrap();
        assert_eq!(m3, zero_ideal(&r));
    }

    #[test]
    fn quotient_z12_by_4() {
        let r = mk_zn(12).unwrap();
        let i4 = ideal_from_strs(&r, &["4"]).unwrap();
        let (q, map) = quotient_ring(&r, &i4).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.characteristic(), 4);
        // 5 = 1 + 4 lands with 1.
        assert_eq!(map[5], map[1]);
        assert_ne!(map[1], map[2]);
        // Quotient by a maximal ideal is a field.
        let i2 = ideal_from_strs(&r, &["2"]).unwrap();
        let (f, _) = quotient_ring(&r, &i2).unwrap();
        assert_eq!(f.order(), 2);
        assert!(ring_is_field(&f));
    }

    #[test]
    fn quotient_algebra_ring() {
        let r = mk_poly_quotient(2, &[2, 2], &[]).unwrap();
        let ixy = ideal_from_strs(&r, &["X*Y"]).unwrap();
        let (q, map) = quotient_ring(&r, &ixy).unwrap();
        assert_eq!(q.order(), 8);
        // X*Y collapses to zero downstairs.
        let xy = r.parse_elem("X*Y").unwrap();
        assert_eq!(map[xy as usize], q.zero());
        // X and Y stay distinct and nonzero.
        let (x, y) = (r.parse_elem("X").unwrap(), r.parse_elem("Y").unwrap());
        assert_ne!(map[x as usize], q.zero());
        assert_ne!(map[x as usize], map[y as usize]);
        // In the quotient X*Y = 0.
        assert_eq!(q.mul(map[x as usize], map[y as usize]), q.zero());
        // The quotient by the maximal ideal is F_2.
        let m = ideal_from_strs(&r, &["X", "Y"]).unwrap();
        let (f, _) = quotient_ring(&r, &m).unwrap();
        assert_eq!(f.order(), 2);
        assert!(ring_is_field(&f));
    }

    #[test]
    fn field_detection() {
        assert!(ring_is_field(&mk_zn(7).unwrap()));
        assert!(ring_is_field(&mk_zn(2).unwrap()));
        assert!(!ring_is_field(&mk_zn(12).unwrap()));
        assert!(!ring_is_field(&mk_zn(4).unwrap()));
        // X is a nonzero nilpotent in F_2[X]/(X^2).
        assert!(!ring_is_field(&mk_poly_quotient(2, &[2], &[]).unwrap()));
    }

    #[test]
    fn validation_and_errors() {
        let r = mk_zn(12).unwrap();
        let other = mk_zn(6).unwrap();
        let i = ideal_from_strs(&r, &["2"]).unwrap();
        assert!(radical(&other, &i).is_err()); // cross-ring use
        // {0, 1} is not an ideal of Z/12.
        let mut s = BitSet::new(12);
        s.insert(0);
        s.insert(1);
        assert!(ideal_from_members(&r, s).is_err());
        // Tiny budget trips the enumeration cap.
        assert!(matches!(enumerate_ideals(&r, 3), Err(Error::Budget(_))));
        // Quotient by the unit ideal is rejected.
        assert!(quotient_ring(&r, &unit_ideal(&r)).is_err());
    }

    #[test]
    fn generating_sets_are_small_and_exact() {
        let r = mk_poly_quotient(2, &[2, 2], &[]).unwrap();
        let m = ideal_from_strs(&r, &["X", "Y"]).unwrap();
        let gens = generating_set(&r, &m).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(ideal_from_gens(&r, &gens).unwrap(), m);
        // Principal ideals come back with one generator.
        let p = ideal_from_strs(&r, &["X"]).unwrap();
        assert_eq!(generating_set(&r, &p).unwrap().len(), 1);
    }
}
