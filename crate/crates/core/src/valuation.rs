//! Ideal arithmetic in valuation domains whose value group comes from a
//! fixed six-entry catalog: `Z`, `Q`, and the four lexicographically ordered
//! direct sums `Z+Z`, `Q+Q`, `Z+Q`, `Q+Z`.
//!
//! A nonzero proper ideal of a valuation domain is determined by the upward
//! closed set of values its nonzero members take inside the positive cone of
//! the value group. This module represents those upper sets by exact
//! rational cut descriptors:
//!
//! * a **point cut** `{g : g > c}` or `{g : g >= c}` for a point `c` of the
//!   divisible hull (`Q` or `Q^2`), intersected with the positive cone, and
//! * a **row-open cut** `{(a, b) : a > x}` in the rank-two groups, for the
//!   upper sets that contain entire archimedean layers and no point of the
//!   boundary layer (the height-one prime `P = {(a, b) : a > 0}` is the
//!   fundamental example).
//!
//! In groups with integral first coordinate the row-open sets are stored
//! with a half-integer sentinel (`{(a, b) : a >= 1}` is the cut `(1/2, 0)`
//! strict), so every descriptor has one canonical form per denoted set and
//! equality of descriptors is equality of ideals.
//!
//! Ideal multiplication is value-set addition, so the n-th power of an
//! ideal rescales its cut; the radical is read off the archimedean class of
//! the cut; and an ideal `I` with radical `P` satisfies the degree-`n`
//! semiprimary law exactly when `P^n` lands inside `I`. In debug builds
//! every operation is cross-checked against a brute-force oracle on a
//! bounded lattice window; a discrepancy is a hard failure.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::{Error, Result};

/// Exact rational scalar used for cut coordinates.
pub type Rat = Ratio<i64>;

/// Largest permitted magnitude for a cut coordinate (numerator bound after
/// reduction, and denominator bound).
pub const MAX_CUT_MAGNITUDE: i64 = 1_000_000;

/// Largest exponent accepted by [`vd_power`].
pub const MAX_POWER: u32 = 512;

fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// The six catalog value groups. Direct sums carry the lexicographic order
/// with the left coordinate dominant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupTag {
    /// The integers: a discrete rank-one group (the DVR case).
    Z,
    /// The rationals: a dense rank-one group.
    Q,
    /// `Z + Z` lexicographic.
    ZZ,
    /// `Q + Q` lexicographic.
    QQ,
    /// `Z + Q` lexicographic.
    ZQ,
    /// `Q + Z` lexicographic.
    QZ,
}

/// All catalog groups, in display order.
pub const GROUP_TAGS: [GroupTag; 6] = [
    GroupTag::Z,
    GroupTag::Q,
    GroupTag::ZZ,
    GroupTag::QQ,
    GroupTag::ZQ,
    GroupTag::QZ,
];

impl GroupTag {
    /// Rational rank of the group (number of coordinates).
    pub fn rank(self) -> u32 {
        match self {
            GroupTag::Z | GroupTag::Q => 1,
            _ => 2,
        }
    }

    /// Whether the first (dominant) coordinate is divisible (`Q`) rather
    /// than discrete (`Z`).
    pub fn first_divisible(self) -> bool {
        matches!(self, GroupTag::Q | GroupTag::QQ | GroupTag::QZ)
    }

    /// Whether the second coordinate is divisible; meaningful only for the
    /// rank-two groups.
    pub fn second_divisible(self) -> bool {
        matches!(self, GroupTag::QQ | GroupTag::ZQ)
    }

    /// Canonical text form (`"Z"`, `"Q+Z"`, ...).
    pub fn as_str(self) -> &'static str {
        match self {
            GroupTag::Z => "Z",
            GroupTag::Q => "Q",
            GroupTag::ZZ => "Z+Z",
            GroupTag::QQ => "Q+Q",
            GroupTag::ZQ => "Z+Q",
            GroupTag::QZ => "Q+Z",
        }
    }

    /// Parses a group tag; only the six catalog names are accepted.
    pub fn parse(s: &str) -> Result<GroupTag> {
        for g in GROUP_TAGS {
            if g.as_str() == s {
                return Ok(g);
            }
        }
        Err(Error::Invalid(format!(
            "unknown value group {s:?}; the catalog is Z, Q, Z+Z, Q+Q, Z+Q, Q+Z"
        )))
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The shape of the denoted upper set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DescKind {
    /// The zero ideal (empty value set).
    Zero,
    /// The whole ring (improper; accepted for completeness).
    Unit,
    /// Point cut `{g : g > (x, y)}` (strict) or `{g : g >= (x, y)}`,
    /// intersected with the positive cone. `y` is `None` in rank one.
    Cut { x: Rat, y: Option<Rat>, strict: bool },
    /// Row-open cut `{(a, b) : a > x}` intersected with the positive cone;
    /// rank two only.
    RowOpen { x: Rat },
}

/// A canonical ideal descriptor for one of the catalog valuation domains.
///
/// Two descriptors are equal exactly when they denote the same ideal; all
/// constructors canonicalize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ValIdealDesc {
    pub group: GroupTag,
    pub kind: DescKind,
}

fn check_coord(v: Rat) -> Result<()> {
    if v.numer().abs() > MAX_CUT_MAGNITUDE || *v.denom() > MAX_CUT_MAGNITUDE {
        return Err(Error::TooLarge(format!(
            "cut coordinate {v} exceeds the magnitude cap {MAX_CUT_MAGNITUDE}"
        )));
    }
    Ok(())
}

/// Canonical descriptor of the maximal ideal (all positive values).
pub fn vd_maximal(group: GroupTag) -> ValIdealDesc {
    let kind = match group {
        GroupTag::Z => DescKind::Cut { x: rat(1), y: None, strict: false },
        GroupTag::Q => DescKind::Cut { x: rat(0), y: None, strict: true },
        // discrete second coordinate: the least positive element is (0, 1)
        GroupTag::ZZ | GroupTag::QZ => {
            DescKind::Cut { x: rat(0), y: Some(rat(1)), strict: false }
        }
        // dense second coordinate: no least positive element
        GroupTag::QQ | GroupTag::ZQ => {
            DescKind::Cut { x: rat(0), y: Some(rat(0)), strict: true }
        }
    };
    ValIdealDesc { group, kind }
}

/// Canonical descriptor of the height-one prime `P = {(a, b) : a > 0}` of a
/// rank-two catalog group.
pub fn vd_height_one_prime(group: GroupTag) -> Result<ValIdealDesc> {
    if group.rank() != 2 {
        return Err(Error::Invalid(format!(
            "{group} has rank one: its only nonzero prime is the maximal ideal"
        )));
    }
    let kind = if group.first_divisible() {
        DescKind::RowOpen { x: rat(0) }
    } else {
        // rows a >= 1, stored with the half-integer sentinel
        DescKind::RowOpen { x: Ratio::new(1, 2) }
    };
    Ok(ValIdealDesc { group, kind })
}

/// Canonicalizes a raw kind for the given group. Every constructor and
/// every operation funnels through here, so descriptor equality is ideal
/// equality.
fn canon(group: GroupTag, kind: DescKind) -> Result<DescKind> {
    let rank = group.rank();
    match kind {
        DescKind::Zero | DescKind::Unit => Ok(kind),
        DescKind::RowOpen { x } => {
            if rank != 2 {
                return Err(Error::Invalid(format!(
                    "row-open cuts require a rank-two group, not {group}"
                )));
            }
            check_coord(x)?;
            if group.first_divisible() {
                if x < rat(0) {
                    Ok(vd_maximal(group).kind)
                } else {
                    Ok(DescKind::RowOpen { x })
                }
            } else {
                // rows {a > x} = {a >= m} for m = floor(x) + 1
                let m = x.floor().to_integer() + 1;
                if m <= 0 {
                    Ok(vd_maximal(group).kind)
                } else {
                    Ok(DescKind::RowOpen { x: rat(m) - Ratio::new(1, 2) })
                }
            }
        }
        DescKind::Cut { x, y, strict } => {
            check_coord(x)?;
            match rank {
                1 => {
                    if y.is_some() {
                        return Err(Error::Invalid(format!(
                            "{group} has rank one: the cut takes a single coordinate"
                        )));
                    }
                    if group.first_divisible() {
                        if x <= rat(0) {
                            Ok(vd_maximal(group).kind)
                        } else {
                            Ok(DescKind::Cut { x, y: None, strict })
                        }
                    } else {
                        let m = if strict {
                            x.floor().to_integer() + 1
                        } else {
                            x.ceil().to_integer()
                        };
                        Ok(DescKind::Cut { x: rat(m.max(1)), y: None, strict: false })
                    }
                }
                _ => {
                    let y = y.ok_or_else(|| {
                        Error::Invalid(format!(
                            "{group} has rank two: the cut takes two coordinates"
                        ))
                    })?;
                    check_coord(y)?;
                    if !group.first_divisible() && !x.is_integer() {
                        // no group element sits in a fractional row: the set
                        // degenerates to full rows above x
                        return canon(group, DescKind::RowOpen { x });
                    }
                    if group.second_divisible() {
                        // dense second coordinate keeps strictness
                        let below_cone = x < rat(0) || (x == rat(0) && y < rat(0));
                        let at_cone = x == rat(0) && y == rat(0);
                        if below_cone || at_cone {
                            Ok(vd_maximal(group).kind)
                        } else {
                            Ok(DescKind::Cut { x, y: Some(y), strict })
                        }
                    } else {
                        // discrete second coordinate: round to an attained
                        // integral bound and drop strictness
                        let m = if strict {
                            y.floor().to_integer() + 1
                        } else {
                            y.ceil().to_integer()
                        };
                        let y = rat(m);
                        // the least positive element is (0, 1)
                        if x < rat(0) || (x == rat(0) && y <= rat(1)) {
                            Ok(vd_maximal(group).kind)
                        } else {
                            Ok(DescKind::Cut { x, y: Some(y), strict: false })
                        }
                    }
                }
            }
        }
    }
}

/// The zero-ideal descriptor.
pub fn vd_zero(group: GroupTag) -> ValIdealDesc {
    ValIdealDesc { group, kind: DescKind::Zero }
}

/// The unit-ideal (whole ring) descriptor.
pub fn vd_unit(group: GroupTag) -> ValIdealDesc {
    ValIdealDesc { group, kind: DescKind::Unit }
}

/// Point-cut descriptor in a rank-one group.
pub fn vd_cut1(group: GroupTag, x: Rat, strict: bool) -> Result<ValIdealDesc> {
    if group.rank() != 1 {
        return Err(Error::Invalid(format!(
            "{group} has rank two: the cut takes two coordinates"
        )));
    }
    Ok(ValIdealDesc { group, kind: canon(group, DescKind::Cut { x, y: None, strict })? })
}

/// Point-cut descriptor in a rank-two group.
pub fn vd_cut2(group: GroupTag, x: Rat, y: Rat, strict: bool) -> Result<ValIdealDesc> {
    if group.rank() != 2 {
        return Err(Error::Invalid(format!(
            "{group} has rank one: the cut takes a single coordinate"
        )));
    }
    Ok(ValIdealDesc { group, kind: canon(group, DescKind::Cut { x, y: Some(y), strict })? })
}

/// Row-open descriptor `{(a, b) : a > x}` in a rank-two group.
pub fn vd_row_open(group: GroupTag, x: Rat) -> Result<ValIdealDesc> {
    Ok(ValIdealDesc { group, kind: canon(group, DescKind::RowOpen { x })? })
}

fn fmt_rat(r: Rat) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ValIdealDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.group)?;
        match self.kind {
            DescKind::Zero => f.write_str("zero"),
            DescKind::Unit => f.write_str("unit"),
            DescKind::RowOpen { x } => write!(f, "cut={},inf", fmt_rat(x)),
            DescKind::Cut { x, y, strict } => {
                match y {
                    None => write!(f, "cut={}", fmt_rat(x))?,
                    Some(y) => write!(f, "cut={},{}", fmt_rat(x), fmt_rat(y))?,
                }
                if strict {
                    f.write_str(" strict")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("expected a rational like 3 or -1/2, found {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Ratio::new(n, d))
    } else {
        let n: i64 = s.trim().parse().map_err(|_| bad())?;
        Ok(rat(n))
    }
}

/// Parses a descriptor like `"Z+Q cut=1/2,0 strict"`, `"Z cut=3"`,
/// `"Q+Q cut=0,inf"`, `"Z+Z zero"`, or `"Q unit"`.
pub fn vd_parse(s: &str) -> Result<ValIdealDesc> {
    let mut parts = s.split_whitespace();
    let tag = parts
        .next()
        .ok_or_else(|| Error::Parse("empty ideal descriptor".into()))?;
    let group = GroupTag::parse(tag)?;
    let body = parts.next().ok_or_else(|| {
        Error::Parse("descriptor body missing: expected zero, unit, or cut=...".into())
    })?;
    let rest: Vec<&str> = parts.collect();
    let strict = match rest.as_slice() {
        [] => false,
        ["strict"] => true,
        other => {
            return Err(Error::Parse(format!(
                "unexpected trailing words {other:?}; only a final \"strict\" is allowed"
            )))
        }
    };
    match body {
        "zero" | "unit" => {
            if strict {
                return Err(Error::Parse(format!("{body} takes no strictness flag")));
            }
            Ok(if body == "zero" { vd_zero(group) } else { vd_unit(group) })
        }
        b if b.starts_with("cut=") => {
            let coords: Vec<&str> = b[4..].split(',').collect();
            match (group.rank(), coords.as_slice()) {
                (1, [x]) => vd_cut1(group, parse_rat(x)?, strict),
                (2, [x, "inf"]) => {
                    if strict {
                        return Err(Error::Parse(
                            "a row-open cut (second coordinate inf) takes no strictness flag"
                                .into(),
                        ));
                    }
                    vd_row_open(group, parse_rat(x)?)
                }
                (2, [x, y]) => vd_cut2(group, parse_rat(x)?, parse_rat(y)?, strict),
                (r, c) => Err(Error::Parse(format!(
                    "{group} has rank {r} but the cut has {} coordinate(s)",
                    c.len()
                ))),
            }
        }
        other => Err(Error::Parse(format!(
            "unknown descriptor body {other:?}; expected zero, unit, or cut=..."
        ))),
    }
}

// ---------------------------------------------------------------------------
// membership

fn in_cone(rank: u32, gx: Rat, gy: Rat) -> bool {
    if rank == 1 {
        gx > rat(0)
    } else {
        gx > rat(0) || (gx == rat(0) && gy > rat(0))
    }
}

fn member_kind(group: GroupTag, kind: DescKind, gx: Rat, gy: Rat) -> bool {
    let rank = group.rank();
    match kind {
        DescKind::Zero => false,
        DescKind::Unit => {
            if rank == 1 {
                gx >= rat(0)
            } else {
                gx > rat(0) || (gx == rat(0) && gy >= rat(0))
            }
        }
        DescKind::RowOpen { x } => in_cone(rank, gx, gy) && gx > x,
        DescKind::Cut { x, y, strict } => {
            if !in_cone(rank, gx, gy) {
                return false;
            }
            match y {
                None => {
                    if strict {
                        gx > x
                    } else {
                        gx >= x
                    }
                }
                Some(y) => {
                    let above = (gx, gy) > (x, y);
                    if strict {
                        above
                    } else {
                        above || (gx, gy) == (x, y)
                    }
                }
            }
        }
    }
}

/// Whether the group element with the given coordinates has its value in
/// the ideal's value set. Coordinates must respect the group's integrality
/// (`None` second coordinate in rank one).
pub fn vd_member(d: &ValIdealDesc, gx: Rat, gy: Option<Rat>) -> Result<bool> {
    let rank = d.group.rank();
    let gy = if rank == 1 {
        if gy.is_some() {
            return Err(Error::Invalid(format!(
                "{} has rank one: a member point takes a single coordinate",
                d.group
            )));
        }
        rat(0)
    } else {
        match gy {
            Some(v) => v,
            None => {
                return Err(Error::Invalid(format!(
                    "{} has rank two: a member point takes two coordinates",
                    d.group
                )))
            }
        }
    };
    if !d.group.first_divisible() && !gx.is_integer() {
        return Err(Error::Invalid(format!(
            "first coordinate {gx} is not an element of the integral component of {}",
            d.group
        )));
    }
    if rank == 2 && !d.group.second_divisible() && !gy.is_integer() {
        return Err(Error::Invalid(format!(
            "second coordinate {gy} is not an element of the integral component of {}",
            d.group
        )));
    }
    Ok(member_kind(d.group, d.kind, gx, gy))
}

// ---------------------------------------------------------------------------
// containment, powers, radicals

/// Exact containment of denoted ideals (same group required).
pub fn vd_subset(a: &ValIdealDesc, b: &ValIdealDesc) -> Result<bool> {
    if a.group != b.group {
        return Err(Error::Invalid(format!(
            "cannot compare ideals of different value groups {} and {}",
            a.group, b.group
        )));
    }
    let ans = match (a.kind, b.kind) {
        (DescKind::Zero, _) => true,
        (_, DescKind::Unit) => true,
        (DescKind::Unit, k) => k == DescKind::Unit,
        (k, DescKind::Zero) => k == DescKind::Zero,
        (DescKind::Cut { x: x1, y: y1, strict: s1 }, DescKind::Cut { x: x2, y: y2, strict: s2 }) => {
            let p1 = (x1, y1.unwrap_or_else(|| rat(0)));
            let p2 = (x2, y2.unwrap_or_else(|| rat(0)));
            p1 > p2 || (p1 == p2 && (s1 || !s2))
        }
        (DescKind::RowOpen { x: x1 }, DescKind::RowOpen { x: x2 }) => x1 >= x2,
        // every member of the row set has first coordinate > x1
        (DescKind::RowOpen { x: x1 }, DescKind::Cut { x: x2, .. }) => x2 <= x1,
        // the point cut has members with first coordinate exactly x1
        (DescKind::Cut { x: x1, .. }, DescKind::RowOpen { x: x2 }) => x1 > x2,
    };
    #[cfg(debug_assertions)]
    oracle::check_subset(a, b, ans);
    Ok(ans)
}

/// Descriptor of the n-th power of the ideal (value-set n-fold sum),
/// `1 <= n <= MAX_POWER`.
pub fn vd_power(d: &ValIdealDesc, n: u32) -> Result<ValIdealDesc> {
    if n == 0 {
        return Err(Error::Invalid("ideal powers require an exponent n >= 1".into()));
    }
    if n > MAX_POWER {
        return Err(Error::TooLarge(format!(
            "exponent {n} exceeds the cap {MAX_POWER}"
        )));
    }
    let nn = rat(n as i64);
    let kind = match d.kind {
        DescKind::Zero => DescKind::Zero,
        DescKind::Unit => DescKind::Unit,
        DescKind::Cut { x, y, strict } => {
            canon(d.group, DescKind::Cut { x: x * nn, y: y.map(|v| v * nn), strict })?
        }
        DescKind::RowOpen { x } => {
            if d.group.first_divisible() {
                canon(d.group, DescKind::RowOpen { x: x * nn })?
            } else {
                // {a >= m} scales to {a >= n*m}; the stored sentinel is m - 1/2
                let m = x + Ratio::new(1, 2);
                canon(d.group, DescKind::RowOpen { x: m * nn - Ratio::new(1, 2) })?
            }
        }
    };
    let out = ValIdealDesc { group: d.group, kind };
    #[cfg(debug_assertions)]
    oracle::check_power(d, n, &out);
    Ok(out)
}

/// Descriptor of the radical. The radical of a nonzero proper ideal is the
/// prime whose archimedean class matches the cut: the maximal ideal when
/// the cut sits in the dominant layer's boundary, the height-one prime when
/// it sits strictly inside. The zero ideal is its own radical (prime in a
/// domain); the unit ideal is rejected.
pub fn vd_sqrt(d: &ValIdealDesc) -> Result<ValIdealDesc> {
    let out = match d.kind {
        DescKind::Zero => vd_zero(d.group),
        DescKind::Unit => {
            return Err(Error::Invalid(
                "the radical descriptor is defined for proper ideals only".into(),
            ))
        }
        DescKind::Cut { x, .. } => {
            if d.group.rank() == 1 || x == rat(0) {
                vd_maximal(d.group)
            } else {
                vd_height_one_prime(d.group)?
            }
        }
        DescKind::RowOpen { .. } => vd_height_one_prime(d.group)?,
    };
    #[cfg(debug_assertions)]
    oracle::check_sqrt(d, &out);
    Ok(out)
}

/// Whether the descriptor denotes a prime ideal (zero, the height-one
/// prime, or the maximal ideal).
pub fn vd_is_prime(d: &ValIdealDesc) -> Result<bool> {
    if d.kind == DescKind::Unit {
        return Ok(false);
    }
    Ok(vd_sqrt(d)? == *d)
}

/// Degree-`n` semiprimary test: the radical's n-th power must land inside
/// the ideal. The zero ideal is prime, hence passes for every `n`.
pub fn vd_is_n_semiprimary(d: &ValIdealDesc, n: u32) -> Result<bool> {
    if d.kind == DescKind::Unit {
        return Err(Error::Invalid(
            "the semiprimary test is defined for proper ideals only".into(),
        ));
    }
    if d.kind == DescKind::Zero {
        return Ok(true);
    }
    let p = vd_sqrt(d)?;
    let pn = vd_power(&p, n)?;
    vd_subset(&pn, d)
}

/// Least `n <= cap` passing the semiprimary test, or `None`.
///
/// When the radical is idempotent the answer is exact for every `n`, not
/// just up to the cap: an ideal with idempotent radical passes for some `n`
/// exactly when it equals its radical, in which case `n = 1` works.
pub fn vd_least_semiprimary_n(d: &ValIdealDesc, cap: u32) -> Result<Option<u32>> {
    if d.kind == DescKind::Unit {
        return Err(Error::Invalid(
            "the semiprimary test is defined for proper ideals only".into(),
        ));
    }
    if d.kind == DescKind::Zero {
        return Ok(Some(1));
    }
    let p = vd_sqrt(d)?;
    if vd_power(&p, 2)? == p {
        return Ok(if *d == p { Some(1) } else { None });
    }
    for n in 1..=cap.min(MAX_POWER) {
        if vd_subset(&vd_power(&p, n)?, d)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// the catalog table

/// One family row of the catalog classification table.
///
/// The two verdict fields are always equal: in a valuation domain every
/// prime is strongly prime, so the semiprimary and the fraction-field
/// (powerful-semiprimary) versions of the property coincide.
#[derive(Clone, Debug)]
pub struct FamilyRow {
    pub family: &'static str,
    pub representative: ValIdealDesc,
    pub radical: ValIdealDesc,
    pub radical_idempotent: bool,
    /// Whether the ideals of this family pass the semiprimary test for some
    /// degree `n`. With an idempotent radical this is exact for all `n`;
    /// otherwise a degree always exists and `least_n` exhibits it.
    pub semiprimary_for_some_n: bool,
    /// Least passing degree for the representative, capped at 64.
    pub least_n: Option<u32>,
    pub powerful_semiprimary_for_some_n: bool,
}

fn table_row(family: &'static str, rep: ValIdealDesc) -> Result<FamilyRow> {
    let radical = vd_sqrt(&rep)?;
    let radical_idempotent = vd_power(&radical, 2)? == radical;
    let least_n = vd_least_semiprimary_n(&rep, 64)?;
    let semiprimary_for_some_n =
        if radical_idempotent { rep == radical } else { true };
    debug_assert_eq!(semiprimary_for_some_n, least_n.is_some());
    Ok(FamilyRow {
        family,
        representative: rep,
        radical,
        radical_idempotent,
        semiprimary_for_some_n,
        least_n,
        powerful_semiprimary_for_some_n: semiprimary_for_some_n,
    })
}

/// Classification of the standard ideal families of the catalog group:
/// which families are degree-`n` semiprimary for some `n`.
pub fn vd_example_table(group: GroupTag) -> Result<Vec<FamilyRow>> {
    let mut rows = Vec::new();
    rows.push(table_row("the zero ideal", vd_zero(group))?);
    if group.rank() == 1 {
        rows.push(table_row(
            "closed-cut ideals inside the maximal ideal",
            vd_cut1(group, rat(3), false)?,
        )?);
        if group.first_divisible() {
            rows.push(table_row(
                "open-cut ideals inside the maximal ideal",
                vd_cut1(group, rat(3), true)?,
            )?);
        }
    } else {
        let half = Ratio::new(1, 2);
        let below_point = match group {
            GroupTag::ZZ => vd_cut2(group, rat(2), rat(3), false)?,
            GroupTag::ZQ => vd_cut2(group, rat(2), half, false)?,
            GroupTag::QQ => vd_cut2(group, rat(2), rat(0), false)?,
            GroupTag::QZ => vd_cut2(group, rat(2), rat(3), false)?,
            _ => unreachable!(),
        };
        rows.push(table_row(
            "point-cut ideals with radical the height-one prime",
            below_point,
        )?);
        let below_row = if group.first_divisible() {
            vd_row_open(group, rat(2))?
        } else {
            vd_row_open(group, Ratio::new(3, 2))?
        };
        rows.push(table_row(
            "full-row ideals strictly inside the height-one prime",
            below_row,
        )?);
        rows.push(table_row("the height-one prime", vd_height_one_prime(group)?)?);
        let between = if group.second_divisible() {
            vd_cut2(group, rat(0), rat(1), false)?
        } else {
            vd_cut2(group, rat(0), rat(2), false)?
        };
        rows.push(table_row(
            "point-cut ideals strictly between the height-one prime and the maximal ideal",
            between,
        )?);
    }
    rows.push(table_row("the maximal ideal", vd_maximal(group))?);
    Ok(rows)
}

// ---------------------------------------------------------------------------
// windowed brute-force oracle (debug builds)

#[cfg(debug_assertions)]
mod oracle {
    use super::*;
    use alloc::vec;

    // window [-10, 10]; quarter steps on divisible coordinates, unit steps
    // on discrete ones; every grid point is a group element
    fn grid(divisible: bool) -> Vec<Rat> {
        let mut v = Vec::new();
        if divisible {
            for k in -40i64..=40 {
                v.push(Ratio::new(k, 4));
            }
        } else {
            for k in -10i64..=10 {
                v.push(rat(k));
            }
        }
        v
    }

    fn coords_of(kind: DescKind) -> Vec<Rat> {
        match kind {
            DescKind::Zero | DescKind::Unit => Vec::new(),
            DescKind::RowOpen { x } => vec![x],
            DescKind::Cut { x, y, .. } => {
                let mut v = vec![x];
                if let Some(y) = y {
                    v.push(y);
                }
                v
            }
        }
    }

    fn coords_small(kind: DescKind, bound: i64) -> bool {
        coords_of(kind).into_iter().all(|c| {
            c.numer().abs() <= bound * c.denom() && (*c.denom() == 1 || *c.denom() == 2 || *c.denom() == 4)
        })
    }

    // rank-two profile: for each first-coordinate index, the start index of
    // the membership suffix along the second coordinate (len = empty row)
    fn profile2(d: &ValIdealDesc, ga: &[Rat], gb: &[Rat]) -> Vec<usize> {
        let mut out = vec![gb.len(); ga.len()];
        for (ia, &va) in ga.iter().enumerate() {
            for (ib, &vb) in gb.iter().enumerate() {
                if member_kind(d.group, d.kind, va, vb) {
                    out[ia] = ib;
                    break;
                }
            }
        }
        out
    }

    // window-restricted sumset of two profiles (exact min-plus convolution
    // on the grid; thresholds below the window clamp to its start)
    fn minplus2(p: &[usize], q: &[usize], ca: usize, cb: usize, lb: usize) -> Vec<usize> {
        let la = p.len();
        let mut out = vec![lb; la];
        for (i1, &t1) in p.iter().enumerate() {
            if t1 == lb {
                continue;
            }
            for (i2, &t2) in q.iter().enumerate() {
                if t2 == lb {
                    continue;
                }
                let ia = i1 + i2;
                if ia < ca || ia - ca >= la {
                    continue;
                }
                let ia = ia - ca;
                let ib = t1 + t2;
                let ib = if ib < cb { 0 } else { ib - cb };
                if ib >= lb {
                    continue;
                }
                if ib < out[ia] {
                    out[ia] = ib;
                }
            }
        }
        out
    }

    pub(super) fn check_power(d: &ValIdealDesc, n: u32, t: &ValIdealDesc) {
        if n > 4 || !coords_small(d.kind, 2) {
            return;
        }
        match d.group.rank() {
            1 => check_power1(d, n, t),
            _ => check_power2(d, n, t),
        }
    }

    fn check_power1(d: &ValIdealDesc, n: u32, t: &ValIdealDesc) {
        let g = grid(d.group.first_divisible());
        let dense = d.group.first_divisible();
        // scalar profile: least member index
        let scan = |desc: &ValIdealDesc| -> usize {
            g.iter()
                .position(|&v| member_kind(desc.group, desc.kind, v, rat(0)))
                .unwrap_or(g.len())
        };
        let td = scan(t);
        let ts = scan(d);
        let center = g.iter().position(|&v| v == rat(0)).unwrap();
        let oracle = if ts == g.len() {
            g.len()
        } else {
            // n parts, each at least the least member
            let idx = ts * n as usize;
            let idx = if idx < center * (n as usize - 1) {
                0
            } else {
                idx - center * (n as usize - 1)
            };
            idx
        };
        if oracle < g.len() {
            assert!(
                oracle >= td,
                "power oracle found a window sum outside the claimed ideal: {d} ^ {n} = {t}"
            );
        }
        let slack = if dense { n as usize - 1 } else { 0 };
        if oracle > td + slack && td < g.len() {
            panic!("power oracle missed claimed members beyond slack: {d} ^ {n} = {t}");
        }
    }

    fn check_power2(d: &ValIdealDesc, n: u32, t: &ValIdealDesc) {
        let ga = grid(d.group.first_divisible());
        let gb = grid(d.group.second_divisible());
        let ca = ga.iter().position(|&v| v == rat(0)).unwrap();
        let cb = gb.iter().position(|&v| v == rat(0)).unwrap();
        let base = profile2(d, &ga, &gb);
        let mut acc = base.clone();
        for _ in 1..n {
            acc = minplus2(&acc, &base, ca, cb, gb.len());
        }
        let direct = profile2(t, &ga, &gb);
        let abound = match t.kind {
            DescKind::Cut { x, .. } | DescKind::RowOpen { x } => x,
            _ => return,
        };
        let slack_b = if d.group.second_divisible() { n as usize - 1 } else { 0 };
        let slack_a = if d.group.first_divisible() {
            Ratio::new(n as i64, 4)
        } else {
            rat(n as i64)
        };
        for ia in 0..ga.len() {
            assert!(
                acc[ia] >= direct[ia],
                "power oracle found a window sum outside the claimed ideal at row {}: {d} ^ {n} = {t}",
                ga[ia]
            );
            if acc[ia] > direct[ia] + slack_b && direct[ia] < gb.len() {
                let diff = ga[ia] - abound;
                let near = diff <= slack_a && -diff <= slack_a;
                assert!(
                    near,
                    "power oracle missed claimed members beyond slack at row {}: {d} ^ {n} = {t}",
                    ga[ia]
                );
            }
        }
    }

    pub(super) fn check_sqrt(d: &ValIdealDesc, t: &ValIdealDesc) {
        if !coords_small(d.kind, 8) {
            return;
        }
        let rank = d.group.rank();
        let ga = grid(d.group.first_divisible());
        let gb = if rank == 2 {
            grid(d.group.second_divisible())
        } else {
            vec![rat(0)]
        };
        for &va in &ga {
            for &vb in &gb {
                if !in_cone(rank, va, vb) {
                    continue;
                }
                let claimed = member_kind(t.group, t.kind, va, vb);
                // coords <= 8 and the finest grid step is 1/4, so k = 33
                // already clears every cut; 64 leaves margin
                let mut brute = false;
                for k in 1i64..=64 {
                    if member_kind(d.group, d.kind, va * rat(k), vb * rat(k)) {
                        brute = true;
                        break;
                    }
                }
                assert_eq!(
                    claimed, brute,
                    "radical oracle disagrees at ({va}, {vb}): sqrt({d}) = {t}"
                );
            }
        }
    }

    pub(super) fn check_subset(a: &ValIdealDesc, b: &ValIdealDesc, claimed: bool) {
        if !coords_small(a.kind, 8) || !coords_small(b.kind, 8) {
            return;
        }
        let rank = a.group.rank();
        let ga = grid(a.group.first_divisible());
        let gb = if rank == 2 {
            grid(a.group.second_divisible())
        } else {
            vec![rat(0)]
        };
        let mut found_cex = false;
        'outer: for &va in &ga {
            for &vb in &gb {
                if member_kind(a.group, a.kind, va, vb)
                    && !member_kind(b.group, b.kind, va, vb)
                {
                    found_cex = true;
                    break 'outer;
                }
            }
        }
        // a Zero/Unit pair can make both directions vacuous on the window;
        // only the cut shapes guarantee a window witness
        let witnessable = !matches!(a.kind, DescKind::Zero | DescKind::Unit)
            && !matches!(b.kind, DescKind::Unit);
        assert!(
            !(claimed && found_cex),
            "containment oracle found a counterexample to a claimed inclusion {a} in {b}"
        );
        if !claimed && witnessable {
            assert!(
                found_cex,
                "containment oracle could not witness the claimed non-inclusion {a} in {b}"
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn r(n: i64) -> Rat {
        rat(n)
    }

    fn rq(n: i64, d: i64) -> Rat {
        Ratio::new(n, d)
    }

    #[test]
    fn canonical_forms() {
        // rank one, discrete: cuts round to attained integers
        assert_eq!(
            vd_cut1(GroupTag::Z, rq(5, 2), false).unwrap(),
            vd_cut1(GroupTag::Z, r(3), false).unwrap()
        );
        assert_eq!(
            vd_cut1(GroupTag::Z, rq(1, 2), true).unwrap(),
            vd_maximal(GroupTag::Z)
        );
        assert_eq!(vd_cut1(GroupTag::Z, r(-5), false).unwrap(), vd_maximal(GroupTag::Z));
        // rank one, dense: strictness is meaningful above the cone boundary
        assert_ne!(
            vd_cut1(GroupTag::Q, r(1), false).unwrap(),
            vd_cut1(GroupTag::Q, r(1), true).unwrap()
        );
        assert_eq!(vd_cut1(GroupTag::Q, r(0), false).unwrap(), vd_maximal(GroupTag::Q));
        // fractional rows in an integral first coordinate collapse to rows
        assert_eq!(
            vd_cut2(GroupTag::ZQ, rq(1, 2), r(0), true).unwrap(),
            vd_height_one_prime(GroupTag::ZQ).unwrap()
        );
        assert_eq!(
            vd_cut2(GroupTag::ZZ, rq(1, 2), r(0), true).unwrap(),
            vd_height_one_prime(GroupTag::ZZ).unwrap()
        );
        // discrete second coordinates round and drop strictness
        assert_eq!(
            vd_cut2(GroupTag::ZZ, r(2), r(3), true).unwrap(),
            vd_cut2(GroupTag::ZZ, r(2), r(4), false).unwrap()
        );
        // below-cone cuts clamp to the maximal ideal
        assert_eq!(
            vd_cut2(GroupTag::QZ, r(0), r(-7), false).unwrap(),
            vd_maximal(GroupTag::QZ)
        );
        assert_eq!(
            vd_cut2(GroupTag::QQ, r(0), r(0), false).unwrap(),
            vd_maximal(GroupTag::QQ)
        );
        assert_eq!(vd_row_open(GroupTag::QQ, r(-1)).unwrap(), vd_maximal(GroupTag::QQ));
        // rank mismatches are rejected
        assert!(vd_cut1(GroupTag::ZZ, r(1), false).is_err());
        assert!(vd_cut2(GroupTag::Z, r(1), r(1), false).is_err());
        assert!(vd_row_open(GroupTag::Q, r(1)).is_err());
        assert!(vd_cut1(GroupTag::Z, r(MAX_CUT_MAGNITUDE + 1), false).is_err());
    }

    #[test]
    fn power_examples() {
        // DVR: the cube of the maximal ideal
        let m = vd_cut1(GroupTag::Z, r(1), false).unwrap();
        assert_eq!(vd_power(&m, 3).unwrap(), vd_cut1(GroupTag::Z, r(3), false).unwrap());
        // dense rank two: the maximal ideal is idempotent
        let mqq = vd_maximal(GroupTag::QQ);
        assert_eq!(vd_power(&mqq, 2).unwrap(), mqq);
        // mixed group: squaring the height-one prime doubles its row bound
        let p = vd_height_one_prime(GroupTag::ZQ).unwrap();
        let p2 = vd_power(&p, 2).unwrap();
        assert_eq!(p2, vd_row_open(GroupTag::ZQ, rq(3, 2)).unwrap());
        assert!(vd_member(&p2, r(2), Some(r(-7))).unwrap());
        assert!(!vd_member(&p2, r(1), Some(r(100))).unwrap());
        // discrete-over-dense: the maximal ideal is not idempotent
        let mzz = vd_maximal(GroupTag::ZZ);
        assert_eq!(
            vd_power(&mzz, 2).unwrap(),
            vd_cut2(GroupTag::ZZ, r(0), r(2), false).unwrap()
        );
        let mqz = vd_maximal(GroupTag::QZ);
        assert_ne!(vd_power(&mqz, 2).unwrap(), mqz);
        // divisible first coordinate: the height-one prime is idempotent
        let pqz = vd_height_one_prime(GroupTag::QZ).unwrap();
        assert_eq!(vd_power(&pqz, 2).unwrap(), pqz);
        let pzz = vd_height_one_prime(GroupTag::ZZ).unwrap();
        assert_eq!(vd_power(&pzz, 2).unwrap(), vd_row_open(GroupTag::ZZ, rq(3, 2)).unwrap());
        assert!(vd_power(&m, 0).is_err());
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(
            vd_sqrt(&vd_cut1(GroupTag::Z, r(5), false).unwrap()).unwrap(),
            vd_maximal(GroupTag::Z)
        );
        // the canonical form of the half-cut is the maximal ideal itself
        assert_eq!(vd_cut1(GroupTag::Z, rq(1, 2), true).unwrap(), vd_maximal(GroupTag::Z));
        assert_eq!(
            vd_sqrt(&vd_cut2(GroupTag::ZZ, r(2), r(3), false).unwrap()).unwrap(),
            vd_height_one_prime(GroupTag::ZZ).unwrap()
        );
        assert_eq!(
            vd_sqrt(&vd_cut1(GroupTag::Q, r(1), false).unwrap()).unwrap(),
            vd_cut1(GroupTag::Q, r(0), true).unwrap()
        );
        assert_eq!(
            vd_sqrt(&vd_cut2(GroupTag::QQ, r(0), r(5), true).unwrap()).unwrap(),
            vd_maximal(GroupTag::QQ)
        );
        assert_eq!(
            vd_sqrt(&vd_row_open(GroupTag::QQ, r(2)).unwrap()).unwrap(),
            vd_height_one_prime(GroupTag::QQ).unwrap()
        );
        assert_eq!(vd_sqrt(&vd_zero(GroupTag::ZQ)).unwrap(), vd_zero(GroupTag::ZQ));
        assert!(vd_sqrt(&vd_unit(GroupTag::Z)).is_err());
    }

    #[test]
    fn semiprimary_verdicts() {
        // DVR: the k-th power of the maximal ideal needs degree k
        let i = vd_cut1(GroupTag::Z, r(5), false).unwrap();
        assert!(!vd_is_n_semiprimary(&i, 4).unwrap());
        assert!(vd_is_n_semiprimary(&i, 5).unwrap());
        assert_eq!(vd_least_semiprimary_n(&i, 64).unwrap(), Some(5));
        // dense rank one: no proper nonzero ideal below the maximal passes
        let j = vd_cut1(GroupTag::Q, r(1), false).unwrap();
        for n in 1..=6 {
            assert!(!vd_is_n_semiprimary(&j, n).unwrap());
        }
        assert_eq!(vd_least_semiprimary_n(&j, 64).unwrap(), None);
        // mixed group: ideals strictly between the primes never pass
        let between = vd_cut2(GroupTag::ZQ, r(0), r(1), false).unwrap();
        for n in 1..=8 {
            assert!(!vd_is_n_semiprimary(&between, n).unwrap());
        }
        // but ideals inside the height-one prime pass at the row bound
        let below = vd_cut2(GroupTag::ZQ, r(2), rq(1, 2), false).unwrap();
        assert_eq!(vd_least_semiprimary_n(&below, 64).unwrap(), Some(3));
        // and in the flipped group the between-ideals pass instead
        let between_qz = vd_cut2(GroupTag::QZ, r(0), r(2), false).unwrap();
        assert_eq!(vd_least_semiprimary_n(&between_qz, 64).unwrap(), Some(2));
        let below_qz = vd_cut2(GroupTag::QZ, r(1), r(0), false).unwrap();
        assert_eq!(vd_least_semiprimary_n(&below_qz, 64).unwrap(), None);
        // zero passes everywhere; the unit ideal is rejected
        assert!(vd_is_n_semiprimary(&vd_zero(GroupTag::QQ), 1).unwrap());
        assert!(vd_is_n_semiprimary(&vd_unit(GroupTag::QQ), 1).is_err());
    }

    #[test]
    fn idempotency_pattern() {
        for g in GROUP_TAGS {
            let m = vd_maximal(g);
            let m_idem = vd_power(&m, 2).unwrap() == m;
            let dense_top = if g.rank() == 1 {
                g.first_divisible()
            } else {
                g.second_divisible()
            };
            assert_eq!(m_idem, dense_top, "maximal ideal idempotency in {g}");
            if g.rank() == 2 {
                let p = vd_height_one_prime(g).unwrap();
                let p_idem = vd_power(&p, 2).unwrap() == p;
                assert_eq!(p_idem, g.first_divisible(), "prime idempotency in {g}");
            }
        }
    }

    #[test]
    fn example_tables_match_catalog() {
        let verdicts = |g: GroupTag| -> Vec<(bool, Option<u32>)> {
            vd_example_table(g)
                .unwrap()
                .into_iter()
                .map(|row| {
                    assert_eq!(
                        row.semiprimary_for_some_n,
                        row.powerful_semiprimary_for_some_n
                    );
                    (row.semiprimary_for_some_n, row.least_n)
                })
                .collect()
        };
        // discrete rank one: every proper ideal passes at its own degree
        assert_eq!(verdicts(GroupTag::Z), vec![(true, Some(1)), (true, Some(3)), (true, Some(1))]);
        // dense rank one: only the zero and maximal ideals pass
        assert_eq!(
            verdicts(GroupTag::Q),
            vec![(true, Some(1)), (false, None), (false, None), (true, Some(1))]
        );
        // fully discrete rank two: every family passes
        assert_eq!(
            verdicts(GroupTag::ZZ),
            vec![
                (true, Some(1)),
                (true, Some(3)),
                (true, Some(2)),
                (true, Some(1)),
                (true, Some(2)),
                (true, Some(1)),
            ]
        );
        // fully dense rank two: only zero and the two primes pass
        assert_eq!(
            verdicts(GroupTag::QQ),
            vec![
                (true, Some(1)),
                (false, None),
                (false, None),
                (true, Some(1)),
                (false, None),
                (true, Some(1)),
            ]
        );
        // discrete over dense: everything inside the height-one prime
        // passes, nothing strictly between the primes does
        assert_eq!(
            verdicts(GroupTag::ZQ),
            vec![
                (true, Some(1)),
                (true, Some(3)),
                (true, Some(2)),
                (true, Some(1)),
                (false, None),
                (true, Some(1)),
            ]
        );
        // dense over discrete: the between-ideals pass, the ideals strictly
        // inside the height-one prime do not
        assert_eq!(
            verdicts(GroupTag::QZ),
            vec![
                (true, Some(1)),
                (false, None),
                (false, None),
                (true, Some(1)),
                (true, Some(2)),
                (true, Some(1)),
            ]
        );
    }

    #[test]
    fn containment_rules() {
        let p = vd_height_one_prime(GroupTag::ZQ).unwrap();
        let m = vd_maximal(GroupTag::ZQ);
        assert!(vd_subset(&p, &m).unwrap());
        assert!(!vd_subset(&m, &p).unwrap());
        let i = vd_cut2(GroupTag::ZQ, r(2), rq(1, 2), false).unwrap();
        assert!(vd_subset(&i, &p).unwrap());
        assert!(!vd_subset(&p, &i).unwrap());
        assert!(vd_subset(&vd_zero(GroupTag::ZQ), &i).unwrap());
        assert!(vd_subset(&i, &vd_unit(GroupTag::ZQ)).unwrap());
        assert!(!vd_subset(&i, &vd_zero(GroupTag::ZQ)).unwrap());
        // strictness in a dense rank-one group
        let closed = vd_cut1(GroupTag::Q, r(1), false).unwrap();
        let open = vd_cut1(GroupTag::Q, r(1), true).unwrap();
        assert!(vd_subset(&open, &closed).unwrap());
        assert!(!vd_subset(&closed, &open).unwrap());
        // mixed groups are rejected
        assert!(vd_subset(&vd_maximal(GroupTag::Z), &vd_maximal(GroupTag::Q)).is_err());
    }

    #[test]
    fn membership_semantics() {
        let p = vd_height_one_prime(GroupTag::QZ).unwrap();
        assert!(vd_member(&p, rq(1, 4), Some(r(-9))).unwrap());
        assert!(!vd_member(&p, r(0), Some(r(5))).unwrap());
        // integrality of query coordinates is enforced
        assert!(vd_member(&p, r(1), Some(rq(1, 2))).is_err());
        assert!(vd_member(&vd_maximal(GroupTag::Z), rq(1, 2), None).is_err());
        assert!(vd_member(&vd_maximal(GroupTag::Z), r(1), Some(r(1))).is_err());
        assert!(vd_member(&vd_maximal(GroupTag::ZZ), r(1), None).is_err());
        // zero ideal has no values; unit ideal holds the whole nonneg cone
        assert!(!vd_member(&vd_zero(GroupTag::Q), r(1), None).unwrap());
        assert!(vd_member(&vd_unit(GroupTag::Q), r(0), None).unwrap());
    }

    #[test]
    fn parse_display_round_trip() {
        let cases = [
            "Z cut=3",
            "Q cut=1 strict",
            "Z+Q cut=1/2,0 strict",
            "Q+Q cut=0,inf",
            "Z+Z zero",
            "Q unit",
            "Q+Z cut=0,2",
            "Z+Q cut=2,1/2",
        ];
        for s in cases {
            let d = vd_parse(s).unwrap();
            let shown = format!("{d}");
            assert_eq!(vd_parse(&shown).unwrap(), d, "{s} -> {shown}");
        }
        // the sentinel form parses to the height-one prime
        assert_eq!(
            vd_parse("Z+Q cut=1/2,0 strict").unwrap(),
            vd_height_one_prime(GroupTag::ZQ).unwrap()
        );
        assert_eq!(
            vd_parse("Q+Q cut=0,inf").unwrap(),
            vd_height_one_prime(GroupTag::QQ).unwrap()
        );
        assert!(vd_parse("R cut=1").is_err());
        assert!(vd_parse("Z+Z cut=1").is_err());
        assert!(vd_parse("Z cut=1,2").is_err());
        assert!(vd_parse("Z zero strict").is_err());
        assert!(vd_parse("Q+Q cut=0,inf strict").is_err());
        assert!(vd_parse("Z cut=a").is_err());
    }

    #[test]
    fn primality() {
        assert!(vd_is_prime(&vd_zero(GroupTag::QQ)).unwrap());
        assert!(vd_is_prime(&vd_maximal(GroupTag::QQ)).unwrap());
        assert!(vd_is_prime(&vd_height_one_prime(GroupTag::QQ).unwrap()).unwrap());
        assert!(!vd_is_prime(&vd_cut2(GroupTag::QQ, r(2), r(0), false).unwrap()).unwrap());
        assert!(!vd_is_prime(&vd_unit(GroupTag::QQ)).unwrap());
    }

    fn arb_desc() -> impl Strategy<Value = ValIdealDesc> {
        let group = prop::sample::select(GROUP_TAGS.to_vec());
        (group, -8i64..=8, prop::sample::select(vec![1i64, 2, 4]), -8i64..=8, any::<bool>(), 0u32..3)
            .prop_map(|(g, n1, d1, n2, strict, shape)| {
                let x = Ratio::new(n1, d1);
                let y = Ratio::new(n2, d1);
                if g.rank() == 1 {
                    vd_cut1(g, x, strict).unwrap()
                } else {
                    match shape {
                        0 => vd_cut2(g, x, y, strict).unwrap(),
                        1 => vd_row_open(g, x).unwrap(),
                        _ => vd_maximal(g),
                    }
                }
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn power_composes(d in arb_desc(), a in 1u32..=3, b in 1u32..=3) {
            let one = vd_power(&vd_power(&d, a).unwrap(), b).unwrap();
            let two = vd_power(&d, a * b).unwrap();
            prop_assert_eq!(one, two);
        }

        #[test]
        fn powers_descend(d in arb_desc(), a in 1u32..=4) {
            let lo = vd_power(&d, a + 1).unwrap();
            let hi = vd_power(&d, a).unwrap();
            prop_assert!(vd_subset(&lo, &hi).unwrap());
        }

        #[test]
        fn radical_of_power_is_radical(d in arb_desc(), a in 1u32..=4) {
            let direct = vd_sqrt(&d).unwrap();
            let via_power = vd_sqrt(&vd_power(&d, a).unwrap()).unwrap();
            prop_assert_eq!(direct.clone(), via_power);
            // the radical is prime and idempotent under radical
            prop_assert_eq!(vd_sqrt(&direct).unwrap(), direct);
        }
    }
}
