//! File formats and inline spec strings.
//!
//! Everything the binary reads or writes goes through this module: the JSON
//! fixture files describing rings and ideals, the inline construct strings
//! (`zn:12`, `poly:p=2;caps=4,4;extra=X^2*Y^2`, ...), and the inline ideal
//! strings (`gens:X,Y`, `zero`, `nil`).
//!
//! Every fixture kind has a canonical form: parsing a file and serializing
//! the semantic object it denotes yields a unique representation, so
//! parse → serialize → parse is the identity on semantics and the second
//! serialization is byte-identical to the first.

use std::collections::BTreeMap;
use std::rc::Rc;

use semiprimary_core::gf::{is_subfield_mask, mask_elems, mk_gf, span, subfield, Gf};
use semiprimary_core::ideal::{ideal_from_gens, nilradical, zero_ideal, IdealHandle};
use semiprimary_core::monomial::MonomialIdeal;
use semiprimary_core::ring::{mk_idealization, mk_poly_quotient, mk_product, mk_zn, ActionSpec, FiniteRing, ModuleSpec};
use semiprimary_core::series::{mask_basis, series_ideal, series_ring, SeriesIdealSpec, SeriesRingSpec};
use semiprimary_core::valuation::GroupTag;
use semiprimary_core::{Error, Result};

use serde::{Deserialize, Serialize};

// ---------------------------------------------------------------------------
// fixture file schema
// ---------------------------------------------------------------------------

/// One fixture file. The `kind` field selects the variant.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "kind")]
pub enum FixtureFile {
    /// A graded subring of a power-series ring over a finite field: slot
    /// `e` (for `0 <= e < conductor`) constrains the coefficient of `X^e`;
    /// from the conductor on, every coefficient of the field is allowed.
    #[serde(rename = "series-ring")]
    SeriesRing {
        #[serde(skip_serializing_if = "Option::is_none")]
        title: Option<String>,
        /// Coefficient field, e.g. `"F4"`.
        field: String,
        /// Number of constrained exponents.
        conductor: i64,
        /// Map from exponent (as a decimal string) to a slot name:
        /// `"0"`, a subfield name like `"F2"`, `"full"`, or
        /// `"span:t,1+t"`.
        slots: BTreeMap<String, String>,
    },
    /// An ideal of a series ring, given by its own slot table (which may
    /// extend past the ring's conductor).
    #[serde(rename = "series-ideal")]
    SeriesIdeal {
        #[serde(skip_serializing_if = "Option::is_none")]
        title: Option<String>,
        field: String,
        ring_conductor: i64,
        ring_slots: BTreeMap<String, String>,
        ideal_conductor: i64,
        ideal_slots: BTreeMap<String, String>,
    },
    /// A finite commutative ring given by a construct string, with an
    /// optional distinguished ideal given by generator names.
    #[serde(rename = "finite-ring")]
    FiniteRing {
        #[serde(skip_serializing_if = "Option::is_none")]
        title: Option<String>,
        construct: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        ideal: Option<Vec<String>>,
    },
    /// A monomial ideal of the polynomial ring `F_p[X,Y,...]`.
    #[serde(rename = "monomial-ideal")]
    MonomialIdeal {
        #[serde(skip_serializing_if = "Option::is_none")]
        title: Option<String>,
        p: u32,
        nvars: u32,
        gens: Vec<String>,
    },
    /// A valuation domain presented by its value group.
    #[serde(rename = "valuation-group")]
    ValuationGroup {
        #[serde(skip_serializing_if = "Option::is_none")]
        title: Option<String>,
        group: String,
    },
}

/// The semantic object a fixture denotes.
pub enum FixtureContent {
    SeriesRing(Rc<Gf>, SeriesRingSpec),
    SeriesIdeal(Rc<Gf>, SeriesIdealSpec),
    Finite(FiniteRing, Option<IdealHandle>),
    Monomial(u32, MonomialIdeal),
    Group(GroupTag),
}

// ---------------------------------------------------------------------------
// field and slot names
// ---------------------------------------------------------------------------

/// Parses a field name `F<q>` into the field order.
pub fn parse_field(name: &str) -> Result<u32> {
    let digits = name
        .strip_prefix('F')
        .ok_or_else(|| Error::Parse(format!("field name `{name}` must look like F4")))?;
    digits
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("field name `{name}` must look like F4")))
}

pub fn field_name(q: u32) -> String {
    format!("F{q}")
}

/// Parses a slot name into a coefficient mask over `gf`.
///
/// Accepted forms: `0` (only the zero coefficient), `full` (every
/// coefficient), `F<d>` (the subfield of order `d`), and
/// `span:<elem>,<elem>,...` (the additive span of the listed elements).
pub fn parse_slot(gf: &Gf, name: &str) -> Result<u128> {
    let t = name.trim();
    if t == "0" {
        return Ok(1);
    }
    let full: u128 = if gf.q() >= 128 { !0 } else { (1u128 << gf.q()) - 1 };
    if t == "full" {
        return Ok(full);
    }
    if let Some(rest) = t.strip_prefix("span:") {
        let mut gens = Vec::new();
        for part in rest.split(',') {
            gens.push(gf.parse_elem(part)?);
        }
        return Ok(span(gf, &gens));
    }
    if t.starts_with('F') {
        let d = parse_field(t)?;
        let p = gf.p();
        let mut deg = 0u32;
        let mut acc = 1u32;
        while acc < d {
            acc *= p;
            deg += 1;
        }
        if acc != d {
            return Err(Error::Parse(format!(
                "`{t}` is not a power of the characteristic {p}"
            )));
        }
        if deg == 0 {
            // F1 is not a field; reject explicitly.
            return Err(Error::Parse("the slot field must have at least p elements".into()));
        }
        return Ok(subfield(gf, deg)?);
    }
    Err(Error::Parse(format!(
        "unknown slot name `{t}`; use 0, full, F<order>, or span:<elems>"
    )))
}

/// Canonical name for a coefficient mask: `0`, `F<order>` for subfields,
/// or `span:` + a basis.
pub fn slot_name(gf: &Gf, mask: u128) -> String {
    if mask == 1 {
        return "0".into();
    }
    if is_subfield_mask(gf, mask) {
        return format!("F{}", mask_elems(mask).len());
    }
    let basis: Vec<String> = mask_basis(gf, mask)
        .into_iter()
        .map(|e| gf.elem_name(e))
        .collect();
    format!("span:{}", basis.join(","))
}

fn slots_to_map(gf: &Gf, slots: &[u128]) -> BTreeMap<String, String> {
    slots
        .iter()
        .enumerate()
        .map(|(e, &m)| (e.to_string(), slot_name(gf, m)))
        .collect()
}

fn slots_from_map(
    gf: &Gf,
    conductor: i64,
    map: &BTreeMap<String, String>,
    what: &str,
) -> Result<Vec<u128>> {
    if conductor < 0 || conductor > 64 {
        return Err(Error::Parse(format!("{what} conductor must lie in 0..=64")));
    }
    let n = conductor as usize;
    let mut out = vec![0u128; n];
    let mut seen = vec![false; n];
    for (k, v) in map {
        let e: usize = k
            .parse()
            .map_err(|_| Error::Parse(format!("{what} slot key `{k}` is not an exponent")))?;
        if e >= n {
            return Err(Error::Parse(format!(
                "{what} slot key {e} is not below the conductor {conductor}"
            )));
        }
        out[e] = parse_slot(gf, v)?;
        seen[e] = true;
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::Parse(format!(
            "{what} slot table has no entry for exponent {missing}"
        )));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// series fixtures <-> specs
// ---------------------------------------------------------------------------

pub fn series_ring_from_file(
    field: &str,
    conductor: i64,
    slots: &BTreeMap<String, String>,
) -> Result<(Rc<Gf>, SeriesRingSpec)> {
    let q = parse_field(field)?;
    let gf = Rc::new(mk_gf(q)?);
    let masks = slots_from_map(&gf, conductor, slots, "ring")?;
    let spec = series_ring(&gf, &masks)?;
    Ok((gf, spec))
}

pub fn file_from_series_ring(spec: &SeriesRingSpec, title: Option<String>) -> FixtureFile {
    FixtureFile::SeriesRing {
        title,
        field: field_name(spec.gf().q()),
        conductor: spec.conductor(),
        slots: slots_to_map(spec.gf(), spec.slots()),
    }
}

pub fn file_from_series_ideal(spec: &SeriesIdealSpec, title: Option<String>) -> FixtureFile {
    FixtureFile::SeriesIdeal {
        title,
        field: field_name(spec.gf().q()),
        ring_conductor: spec.ring().conductor(),
        ring_slots: slots_to_map(spec.gf(), spec.ring().slots()),
        ideal_conductor: spec.conductor(),
        ideal_slots: slots_to_map(spec.gf(), spec.slots()),
    }
}

// ---------------------------------------------------------------------------
// finite-ring construct strings
// ---------------------------------------------------------------------------

/// Builds a finite ring from a construct string.
///
/// Forms: `zn:<n>`; `product:<n1>,<n2>,...` (product of residue rings);
/// `poly:p=<p>;caps=<c1>,<c2>,...;extra=<poly>;...` (truncated polynomial
/// algebra over `F_p` with optional extra monomial relations); and
/// `idealization:base=zn:<n>;module=<c1>,<c2>,...` (trivial extension of a
/// residue ring by a direct sum of cyclic groups).
pub fn build_finite(construct: &str) -> Result<FiniteRing> {
    let t = construct.trim();
    if let Some(rest) = t.strip_prefix("zn:") {
        let n: u32 = rest
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{rest}` is not a modulus")))?;
        return mk_zn(n);
    }
    if let Some(rest) = t.strip_prefix("product:") {
        let mut factors = Vec::new();
        for part in rest.split(',') {
            let n: u32 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("`{part}` is not a modulus")))?;
            factors.push(mk_zn(n)?);
        }
        let refs: Vec<&FiniteRing> = factors.iter().collect();
        return mk_product(&refs);
    }
    if let Some(rest) = t.strip_prefix("poly:") {
        let mut p: Option<u32> = None;
        let mut caps: Vec<u32> = Vec::new();
        let mut extra: Vec<String> = Vec::new();
        for part in rest.split(';') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("`{part}` is not key=value")))?;
            match key.trim() {
                "p" => {
                    p = Some(value.trim().parse().map_err(|_| {
                        Error::Parse(format!("`{value}` is not a characteristic"))
                    })?)
                }
                "caps" => {
                    for c in value.split(',') {
                        caps.push(c.trim().parse().map_err(|_| {
                            Error::Parse(format!("`{c}` is not an exponent cap"))
                        })?);
                    }
                }
                "extra" => extra.push(value.trim().to_string()),
                other => {
                    return Err(Error::Parse(format!(
                        "unknown poly parameter `{other}`; use p, caps, extra"
                    )))
                }
            }
        }
        let p = p.ok_or_else(|| Error::Parse("poly construct needs p=<prime>".into()))?;
        if caps.is_empty() {
            return Err(Error::Parse("poly construct needs caps=<c1>,...".into()));
        }
        let extra_refs: Vec<&str> = extra.iter().map(|s| s.as_str()).collect();
        return mk_poly_quotient(p, &caps, &extra_refs);
    }
    if let Some(rest) = t.strip_prefix("idealization:") {
        let mut base: Option<String> = None;
        let mut orders: Vec<u32> = Vec::new();
        for part in rest.split(';') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("`{part}` is not key=value")))?;
            match key.trim() {
                "base" => base = Some(value.trim().to_string()),
                "module" => {
                    for c in value.split(',') {
                        orders.push(c.trim().parse().map_err(|_| {
                            Error::Parse(format!("`{c}` is not a cyclic order"))
                        })?);
                    }
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unknown idealization parameter `{other}`; use base, module"
                    )))
                }
            }
        }
        let base = base.ok_or_else(|| Error::Parse("idealization needs base=zn:<n>".into()))?;
        if !base.starts_with("zn:") {
            return Err(Error::Parse(
                "idealization base must be a residue ring zn:<n> (the module action is the \
                 natural one)"
                    .into(),
            ));
        }
        if orders.is_empty() {
            return Err(Error::Parse("idealization needs module=<c1>,...".into()));
        }
        let base_ring = build_finite(&base)?;
        let spec = ModuleSpec { cyclic_orders: orders, action: ActionSpec::Natural };
        return mk_idealization(&base_ring, &spec);
    }
    Err(Error::Parse(format!(
        "unknown construct `{t}`; use zn:, product:, poly:, or idealization:"
    )))
}

/// Parses and re-renders a construct string into its canonical spelling.
pub fn canonical_construct(construct: &str) -> Result<String> {
    let t = construct.trim();
    build_finite(t)?;
    // The canonical form is the trimmed input with canonical spacing: the
    // grammar is already positional, so normalizing whitespace suffices.
    Ok(t.split_whitespace().collect::<Vec<_>>().join(""))
}

/// Parses an inline ideal description for a finite ring: `zero`, `nil`, or
/// `gens:<name>,<name>,...` (`gen:` is accepted as an alias).
pub fn parse_ideal_spec(r: &FiniteRing, s: &str) -> Result<IdealHandle> {
    let t = s.trim();
    if t == "zero" {
        return Ok(zero_ideal(r));
    }
    if t == "nil" {
        return Ok(nilradical(r));
    }
    let rest = t
        .strip_prefix("gens:")
        .or_else(|| t.strip_prefix("gen:"))
        .ok_or_else(|| {
            Error::Parse(format!("unknown ideal `{t}`; use zero, nil, or gens:<elements>"))
        })?;
    let mut gens = Vec::new();
    for part in rest.split(',') {
        gens.push(r.parse_elem(part)?);
    }
    ideal_from_gens(r, &gens)
}

// ---------------------------------------------------------------------------
// fixtures: loading, building, canonicalizing
// ---------------------------------------------------------------------------

/// Builds the semantic object a fixture file denotes.
pub fn build_fixture(file: &FixtureFile) -> Result<FixtureContent> {
    match file {
        FixtureFile::SeriesRing { field, conductor, slots, .. } => {
            let (gf, spec) = series_ring_from_file(field, *conductor, slots)?;
            Ok(FixtureContent::SeriesRing(gf, spec))
        }
        FixtureFile::SeriesIdeal {
            field,
            ring_conductor,
            ring_slots,
            ideal_conductor,
            ideal_slots,
            ..
        } => {
            let (gf, ring) = series_ring_from_file(field, *ring_conductor, ring_slots)?;
            if *ideal_conductor < ring.conductor() {
                return Err(Error::Parse(format!(
                    "ideal conductor {ideal_conductor} is below the ring conductor {}",
                    ring.conductor()
                )));
            }
            let masks = slots_from_map(&gf, *ideal_conductor, ideal_slots, "ideal")?;
            let spec = series_ideal(&ring, &masks)?;
            Ok(FixtureContent::SeriesIdeal(gf, spec))
        }
        FixtureFile::FiniteRing { construct, ideal, .. } => {
            let r = build_finite(construct)?;
            let i = match ideal {
                Some(gens) => {
                    let mut elems = Vec::new();
                    for g in gens {
                        elems.push(r.parse_elem(g)?);
                    }
                    Some(ideal_from_gens(&r, &elems)?)
                }
                None => None,
            };
            Ok(FixtureContent::Finite(r, i))
        }
        FixtureFile::MonomialIdeal { p, nvars, gens, .. } => {
            if !(*p == 2 || *p == 3) {
                return Err(Error::Parse(
                    "monomial fixtures use characteristic 2 or 3".into(),
                ));
            }
            let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
            let ideal = MonomialIdeal::parse(*nvars as usize, &refs)?;
            Ok(FixtureContent::Monomial(*p, ideal))
        }
        FixtureFile::ValuationGroup { group, .. } => {
            Ok(FixtureContent::Group(GroupTag::parse(group)?))
        }
    }
}

fn title_of(file: &FixtureFile) -> Option<String> {
    match file {
        FixtureFile::SeriesRing { title, .. }
        | FixtureFile::SeriesIdeal { title, .. }
        | FixtureFile::FiniteRing { title, .. }
        | FixtureFile::MonomialIdeal { title, .. }
        | FixtureFile::ValuationGroup { title, .. } => title.clone(),
    }
}

/// Rebuilds the canonical file for a fixture: parse it, then serialize the
/// semantic object. Canonicalization is idempotent.
pub fn canonicalize(file: &FixtureFile) -> Result<FixtureFile> {
    let title = title_of(file);
    Ok(match build_fixture(file)? {
        FixtureContent::SeriesRing(_, spec) => file_from_series_ring(&spec, title),
        FixtureContent::SeriesIdeal(_, spec) => file_from_series_ideal(&spec, title),
        FixtureContent::Finite(r, i) => {
            let construct = match file {
                FixtureFile::FiniteRing { construct, .. } => canonical_construct(construct)?,
                _ => unreachable!(),
            };
            let ideal = i.map(|i| {
                semiprimary_core::ideal::generating_set(&r, &i)
                    .map(|gens| gens.into_iter().map(|g| r.elem_name(g)).collect::<Vec<_>>())
            });
            let ideal = match ideal {
                Some(Ok(names)) => Some(names),
                Some(Err(e)) => return Err(e),
                None => None,
            };
            FixtureFile::FiniteRing { title, construct, ideal }
        }
        FixtureContent::Monomial(p, ideal) => FixtureFile::MonomialIdeal {
            title,
            p,
            nvars: ideal.nvars() as u32,
            gens: ideal
                .gens()
                .iter()
                .map(|g| semiprimary_core::monomial::mono_name(g))
                .collect(),
        },
        FixtureContent::Group(tag) => {
            FixtureFile::ValuationGroup { title, group: tag.as_str().to_string() }
        }
    })
}

/// Reads and parses a fixture file.
pub fn load_fixture(path: &str) -> Result<FixtureFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

/// Serializes a fixture in the canonical pretty layout used by the shipped
/// files.
pub fn fixture_to_string(file: &FixtureFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("fixture serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_and_slot_names_round_trip() {
        let g4 = Rc::new(mk_gf(4).unwrap());
        assert_eq!(parse_field("F9").unwrap(), 9);
        assert!(parse_field("9").is_err());

        assert_eq!(parse_slot(&g4, "0").unwrap(), 1);
        assert_eq!(parse_slot(&g4, "full").unwrap(), 0b1111);
        assert_eq!(parse_slot(&g4, "F4").unwrap(), 0b1111);
        assert_eq!(parse_slot(&g4, "F2").unwrap(), 0b11);
        assert!(parse_slot(&g4, "F3").is_err());
        let t_span = parse_slot(&g4, "span:t").unwrap();
        assert_eq!(t_span, 0b0101);

        assert_eq!(slot_name(&g4, 1), "0");
        assert_eq!(slot_name(&g4, 0b11), "F2");
        assert_eq!(slot_name(&g4, 0b1111), "F4");
        assert_eq!(slot_name(&g4, 0b0101), "span:t");
        assert_eq!(parse_slot(&g4, &slot_name(&g4, 0b0101)).unwrap(), 0b0101);
    }

    #[test]
    fn construct_strings_build_and_reject() {
        assert_eq!(build_finite("zn:12").unwrap().order(), 12);
        assert_eq!(build_finite("product:4,2").unwrap().order(), 8);
        let poly = build_finite("poly:p=2;caps=4,4;extra=X^2*Y^2").unwrap();
        assert_eq!(poly.order(), 4096);
        let ideal = build_finite("idealization:base=zn:4;module=2").unwrap();
        assert_eq!(ideal.order(), 8);
        assert!(build_finite("zn:banana").is_err());
        assert!(build_finite("idealization:base=product:2,2;module=2").is_err());
        assert!(build_finite("mystery:1").is_err());
    }

    #[test]
    fn ideal_specs_parse() {
        let r = build_finite("zn:12").unwrap();
        assert_eq!(parse_ideal_spec(&r, "gen:6").unwrap().size(), 2);
        assert_eq!(parse_ideal_spec(&r, "gens:4,6").unwrap().size(), 6);
        assert_eq!(parse_ideal_spec(&r, "zero").unwrap().size(), 1);
        assert_eq!(parse_ideal_spec(&r, "nil").unwrap().size(), 2);
        assert!(parse_ideal_spec(&r, "everything").is_err());
    }

    #[test]
    fn fixture_round_trip_is_canonical() {
        let text = r#"{
            "kind": "series-ring",
            "field": "F2",
            "conductor": 6,
            "slots": {"0":"F2","1":"0","2":"F2","3":"0","4":"full","5":"F2"}
        }"#;
        let file: FixtureFile = serde_json::from_str(text).unwrap();
        let canon = canonicalize(&file).unwrap();
        // Trailing slots that impose no constraint are trimmed away.
        match &canon {
            FixtureFile::SeriesRing { conductor, slots, .. } => {
                assert_eq!(*conductor, 4);
                assert_eq!(slots.len(), 4);
            }
            _ => panic!("kind changed"),
        }
        let again = canonicalize(&canon).unwrap();
        assert_eq!(fixture_to_string(&canon), fixture_to_string(&again));
    }
}
