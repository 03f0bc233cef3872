//! Dense linear algebra over prime fields `F_p` (`p <= 251`), with vectors
//! stored as byte slices. Used for structure-constant rings and for ideal
//! subspace bases.

use alloc::vec;
use alloc::vec::Vec;

/// Multiplicative inverse of `a` modulo the prime `p` (`a != 0`).
pub fn inv_mod(a: u8, p: u8) -> u8 {
    debug_assert!(a != 0 && a < p);
    // Fermat: a^(p-2) mod p. p <= 251 keeps everything in u32.
    let mut base = a as u32;
    let mut exp = (p as u32) - 2;
    let m = p as u32;
    let mut acc = 1u32;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u8
}

/// `dst += c * src` componentwise mod p.
pub fn add_scaled(dst: &mut [u8], src: &[u8], c: u8, p: u8) {
    debug_assert_eq!(dst.len(), src.len());
    if c == 0 {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src.iter()) {
        *d = (((*d as u32) + (c as u32) * (s as u32)) % (p as u32)) as u8;
    }
}

/// A row-reduced echelon basis over `F_p`, kept fully reduced at all times.
///
/// Rows are stored sorted by pivot column; each pivot entry is 1 and is the
/// only nonzero entry in its column. Two subspaces are equal iff their
/// `rows()` are equal, so the row list is a canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Rref {
    p: u8,
    width: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Rref {
    /// Empty subspace of `F_p^width`.
    pub fn new(p: u8, width: usize) -> Self {
        Rref { p, width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the current basis (in place), returning the
    /// residue. The residue is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &mut [u8]) {
        debug_assert_eq!(v.len(), self.width);
        let p = self.p;
        for (row, &piv) in self.rows.iter().zip(self.pivots.iter()) {
            let c = v[piv];
            if c != 0 {
                // v -= c * row, i.e. v += (p - c) * row.
                add_scaled(v, row, p - c, p);
            }
        }
    }

    /// Inserts `v` into the span. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let mut r = v.to_vec();
        self.reduce(&mut r);
        let piv = match r.iter().position(|&c| c != 0) {
            None => return false,
            Some(i) => i,
        };
        // Normalize the leading coefficient to 1.
        let inv = inv_mod(r[piv], self.p);
        if inv != 1 {
            for c in r.iter_mut() {
                *c = ((*c as u32) * (inv as u32) % (self.p as u32)) as u8;
            }
        }
        // Eliminate the new pivot column from existing rows.
        let p = self.p;
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                add_scaled(row, &r, p - c, p);
            }
        }
        // Insert keeping rows sorted by pivot column.
        let at = self.pivots.iter().position(|&q| q > piv).unwrap_or(self.pivots.len());
        self.rows.insert(at, r);
        self.pivots.insert(at, piv);
        true
    }

    /// True if `v` lies in the span.
    pub fn contains(&self, v: &[u8]) -> bool {
        let mut r = v.to_vec();
        self.reduce(&mut r);
        r.iter().all(|&c| c == 0)
    }

    /// True if every row of `self` lies in `other`'s span.
    pub fn is_subspace_of(&self, other: &Rref) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Enumerates all `p^rank` vectors of the span, in the lexicographic
    /// order of the coefficient tuples applied to the basis rows.
    pub fn enumerate(&self) -> SpanIter<'_> {
        SpanIter { rref: self, counter: vec![0; self.rank()], current: Some(vec![0; self.width]) }
    }
}

/// Iterator over all vectors of a subspace (see [`Rref::enumerate`]).
pub struct SpanIter<'a> {
    rref: &'a Rref,
    counter: Vec<u8>,
    current: Option<Vec<u8>>,
}

impl<'a> Iterator for SpanIter<'a> {
    type Item = Vec<u8>;
    fn next(&mut self) -> Option<Vec<u8>> {
        let out = self.current.clone()?;
        // Odometer step: add basis row i once per wrap.
        let p = self.rref.p;
        let mut i = 0;
        loop {
            if i == self.counter.len() {
                self.current = None;
                break;
            }
            self.counter[i] += 1;
            let cur = self.current.as_mut().unwrap();
            add_scaled(cur, &self.rref.rows[i], 1, p);
            if self.counter[i] < p {
                break;
            }
            self.counter[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn inverses_mod_small_primes() {
        for p in [2u8, 3, 5, 7, 11, 13, 251] {
            for a in 1..p {
                let b = inv_mod(a, p);
                assert_eq!((a as u32 * b as u32) % p as u32, 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn rref_rank_and_membership_f2() {
        let mut r = Rref::new(2, 4);
        assert!(r.insert(&[1, 1, 0, 0]));
        assert!(r.insert(&[0, 1, 1, 0]));
        assert!(!r.insert(&[1, 0, 1, 0])); // sum of the first two
        assert_eq!(r.rank(), 2);
        assert!(r.contains(&[1, 0, 1, 0]));
        assert!(!r.contains(&[0, 0, 0, 1]));
        // Canonical rows: pivots at columns 0 and 1, fully reduced.
        assert_eq!(r.rows(), &[vec![1, 0, 1, 0], vec![0, 1, 1, 0]]);
    }

    #[test]
    fn rref_canonical_f5() {
        // Two different generating sets of the same plane must reduce to the
        // identical canonical row list.
        let mut a = Rref::new(5, 3);
        a.insert(&[2, 1, 0]);
        a.insert(&[0, 3, 1]);
        let mut b = Rref::new(5, 3);
        b.insert(&[2, 4, 1]); // = (2,1,0) + (0,3,1)
        b.insert(&[4, 2, 0]); // = 2*(2,1,0)
        b.insert(&[0, 1, 2]); // = 2*(0,3,1)
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn span_enumeration_counts() {
        let mut r = Rref::new(3, 3);
        r.insert(&[1, 0, 2]);
        r.insert(&[0, 1, 1]);
        let all: BTreeSet<_> = r.enumerate().collect();
        assert_eq!(all.len(), 9); // 3^2 distinct vectors
        for v in &all {
            assert!(r.contains(v));
        }
    }
}
