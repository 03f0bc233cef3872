//! The audit corpus: a deterministic catalog of rings, ideal families,
//! ordered value groups, and monomial ideals over which the audit checks
//! run.
//!
//! Instances are plain data (construction recipes, not live objects) so the
//! runner can ship them across worker threads and rebuild the actual rings
//! locally. Rebuilding is cheap relative to the checks themselves.

use semiprimary_core::gf::mk_gf;
use semiprimary_core::ring::FiniteRing;
use semiprimary_core::series::{series_ring, SeriesRingSpec};
use semiprimary_core::valuation::GroupTag;
use semiprimary_core::{Error, Result};

use crate::format::build_finite;

/// Construction recipe for one corpus member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// A finite commutative ring, by construct string (see `format`).
    Finite { construct: String },
    /// A finitely-truncated power-series subring over `F_q`, by coefficient
    /// slot masks below the conductor.
    Series { q: u32, slots: Vec<u128> },
    /// A rank-one or rank-two ordered value group.
    Group { tag: GroupTag },
    /// A monomial ideal in `F_p[vars]`, by generator strings.
    Monomial { p: u32, nvars: usize, gens: Vec<String> },
    /// The principal-ideal-domain exponent calculators (integers and
    /// univariate polynomials); a single catalog entry.
    Pid,
}

/// One named corpus member.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub shape: Shape,
}

impl Instance {
    fn finite(name: &str, construct: &str) -> Instance {
        Instance {
            name: name.to_string(),
            shape: Shape::Finite { construct: construct.to_string() },
        }
    }

    fn series(name: &str, q: u32, slots: &[u128]) -> Instance {
        Instance { name: name.to_string(), shape: Shape::Series { q, slots: slots.to_vec() } }
    }

    fn group(name: &str, tag: GroupTag) -> Instance {
        Instance { name: name.to_string(), shape: Shape::Group { tag } }
    }

    fn monomial(name: &str, p: u32, nvars: usize, gens: &[&str]) -> Instance {
        Instance {
            name: name.to_string(),
            shape: Shape::Monomial {
                p,
                nvars,
                gens: gens.iter().map(|s| s.to_string()).collect(),
            },
        }
    }

    /// Builds the finite ring for a `Shape::Finite` instance.
    pub fn build_ring(&self) -> Result<FiniteRing> {
        match &self.shape {
            Shape::Finite { construct } => build_finite(construct),
            _ => Err(Error::Invalid(format!("{} is not a finite ring", self.name))),
        }
    }

    /// Builds the series ring for a `Shape::Series` instance.
    pub fn build_series(&self) -> Result<SeriesRingSpec> {
        match &self.shape {
            Shape::Series { q, slots } => {
                let gf = mk_gf(*q)?;
                series_ring(&gf, slots)
            }
            _ => Err(Error::Invalid(format!("{} is not a series ring", self.name))),
        }
    }
}

/// Corpus size tier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Small,
    Default,
    Large,
}

impl Profile {
    pub fn parse(s: &str) -> Result<Profile> {
        match s {
            "small" => Ok(Profile::Small),
            "default" => Ok(Profile::Default),
            "large" => Ok(Profile::Large),
            _ => Err(Error::Parse(format!(
                "unknown profile {s:?}; expected small, default, or large"
            ))),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Profile::Small => "small",
            Profile::Default => "default",
            Profile::Large => "large",
        }
    }
}

// Slot masks used by the series catalog. Subfield masks depend on the
// canonical element indexing of `gf`: the prime field of F4 is {0, 1} and of
// F9 is {0, 1, 2}.
const Z: u128 = 1; // the zero subspace {0}
const F2_IN_F2: u128 = 0b11;
const F3_IN_F3: u128 = 0b111;
const F2_IN_F4: u128 = 0b11;
const F3_IN_F9: u128 = 0b111;
const F4_FULL: u128 = 0b1111;

/// The named series-ring catalog: every entry appears in every profile so
/// that each expected-profile check always has its subject.
fn series_catalog() -> Vec<Instance> {
    vec![
        // Full power-series ring F2[[X]] — the discrete valuation baseline.
        Instance::series("dvr-f2", 2, &[]),
        // F_q + X^2 F_q[[X]]: one missing slot ("cusp").
        Instance::series("cusp-f2", 2, &[F2_IN_F2, Z]),
        Instance::series("cusp-f3", 3, &[F3_IN_F3, Z]),
        // F2 + X^2 F2 + X^4 F2 + ... : even slots only, up to the conductor.
        Instance::series("gapped-f2", 2, &[F2_IN_F2, Z, F2_IN_F2, Z]),
        // F_p + F_p X + X^2 F_{p^2}[[X]]: constants and the linear slot stay
        // in the prime field ("tower").
        Instance::series("tower-f4", 4, &[F2_IN_F4, F2_IN_F4]),
        Instance::series("tower-f9", 9, &[F3_IN_F9, F3_IN_F9]),
        // F_p + X F_{p^2}[[X]]: prime-field constants, full tail.
        Instance::series("pullback-f4", 4, &[F2_IN_F4]),
        Instance::series("pullback-f9", 9, &[F3_IN_F9]),
        // F2 + X^N F2[[X]]: all slots strictly between 0 and N missing.
        Instance::series("depth3-f2", 2, &[F2_IN_F2, Z, Z]),
        Instance::series("depth4-f2", 2, &[F2_IN_F2, Z, Z, Z]),
        // F3 + F3 X^9 + X^12 F3[[X]]: a deep conductor with one island.
        Instance::series(
            "deep-f3",
            3,
            &[F3_IN_F3, Z, Z, Z, Z, Z, Z, Z, Z, F3_IN_F3, Z, Z],
        ),
        // F_p + F_{p^2} X^2 + X^4 F_{p^2}[[X]]: a full middle slot between
        // prime-field constants and the tail ("plateau").
        Instance::series("plateau-f4", 4, &[F2_IN_F4, Z, F4_FULL, Z]),
        Instance::series("plateau-f9", 9, &[F3_IN_F9, Z, 0b111_111_111, Z]),
        // F_p + F_p X^2 + X^3 F_{p^2}[[X]]: a partial slot just below the
        // conductor ("staircase").
        Instance::series("staircase-f4", 4, &[F2_IN_F4, Z, F2_IN_F4]),
        Instance::series("staircase-f9", 9, &[F3_IN_F9, Z, F3_IN_F9]),
    ]
}

fn group_catalog() -> Vec<Instance> {
    vec![
        Instance::group("group-z", GroupTag::Z),
        Instance::group("group-q", GroupTag::Q),
        Instance::group("group-zz", GroupTag::ZZ),
        Instance::group("group-qq", GroupTag::QQ),
        Instance::group("group-zq", GroupTag::ZQ),
        Instance::group("group-qz", GroupTag::QZ),
    ]
}

fn monomial_catalog() -> Vec<Instance> {
    vec![
        Instance::monomial("mono-x2y2", 2, 2, &["X^2", "Y^2"]),
        Instance::monomial("mono-xy-y2", 2, 2, &["X*Y", "Y^2"]),
        Instance::monomial("mono-xy-y3", 2, 2, &["X*Y", "Y^3"]),
        Instance::monomial("mono-xy-y4", 2, 2, &["X*Y", "Y^4"]),
    ]
}

/// Finite rings referenced by name from expected-value checks; present in
/// every profile.
fn named_finite_catalog() -> Vec<Instance> {
    vec![
        // F2[X,Y] / (X^2, Y^2): order 16.
        Instance::finite("quot-f2-2x2", "poly:p=2;caps=2,2"),
        // F2[X,Y] / (X^3, Y^3, X^2 Y^2): order 256.
        Instance::finite("quot-f2-3x3-trunc", "poly:p=2;caps=3,3;extra=X^2*Y^2"),
        // Z/4 x Z/2.
        Instance::finite("prod-4x2", "product:4,2"),
    ]
}

fn idealization_catalog(profile: Profile) -> Vec<Instance> {
    let mut out = vec![
        Instance::finite("ext-z4-m2", "idealization:base=zn:4;module=2"),
        Instance::finite("ext-z3-m3", "idealization:base=zn:3;module=3"),
    ];
    if profile != Profile::Small {
        out.push(Instance::finite("ext-z4-m4", "idealization:base=zn:4;module=4"));
        out.push(Instance::finite("ext-z8-m2", "idealization:base=zn:8;module=2"));
        out.push(Instance::finite("ext-z2-m2x2", "idealization:base=zn:2;module=2,2"));
        out.push(Instance::finite("ext-z6-m6", "idealization:base=zn:6;module=6"));
        out.push(Instance::finite("ext-z9-m3", "idealization:base=zn:9;module=3"));
        out.push(Instance::finite("ext-z4-m2x2", "idealization:base=zn:4;module=2,2"));
        out.push(Instance::finite("ext-z12-m2", "idealization:base=zn:12;module=2"));
    }
    out
}

fn bulk_finite_catalog(profile: Profile) -> Vec<Instance> {
    let mut out = Vec::new();
    let zn_max = match profile {
        Profile::Small => 32,
        _ => 64,
    };
    for n in 2..=zn_max {
        out.push(Instance::finite(&format!("zn-{n}"), &format!("zn:{n}")));
    }
    let products: &[(u32, u32)] = match profile {
        Profile::Small => &[(2, 2)],
        _ => &[
            (2, 2),
            (2, 3),
            (2, 4),
            (3, 3),
            (2, 8),
            (4, 4),
            (3, 9),
            (4, 8),
            (8, 8),
            (2, 64),
            (16, 16),
            (3, 27),
            (5, 25),
            (6, 6),
            (12, 12),
        ],
    };
    for &(a, b) in products {
        out.push(Instance::finite(
            &format!("prod-{a}x{b}"),
            &format!("product:{a},{b}"),
        ));
    }
    if profile != Profile::Small {
        out.push(Instance::finite("quot-f2-3x2", "poly:p=2;caps=3,2"));
        out.push(Instance::finite("quot-f2-2x2x2", "poly:p=2;caps=2,2,2"));
        out.push(Instance::finite("quot-f2-3x3", "poly:p=2;caps=3,3"));
        out.push(Instance::finite("quot-f3-2x2", "poly:p=3;caps=2,2"));
        out.push(Instance::finite("quot-f3-3x2", "poly:p=3;caps=3,2"));
    }
    if profile == Profile::Large {
        // F2[X,Y] / (X^4, Y^4, X^2 Y^2): order 4096.
        out.push(Instance::finite("quot-f2-4x4-trunc", "poly:p=2;caps=4,4;extra=X^2*Y^2"));
        // F3[X,Y] / (X^3, Y^3): order 19683.
        out.push(Instance::finite("quot-f3-3x3", "poly:p=3;caps=3,3"));
    }
    out
}

/// The full instance list for a profile, in a fixed deterministic order.
pub fn corpus(profile: Profile) -> Vec<Instance> {
    let mut out = Vec::new();
    out.extend(bulk_finite_catalog(profile));
    out.extend(named_finite_catalog());
    out.extend(idealization_catalog(profile));
    out.extend(series_catalog());
    out.extend(group_catalog());
    out.extend(monomial_catalog());
    out.push(Instance { name: "pid".to_string(), shape: Shape::Pid });
    out
}

/// Window bounds for series-ring checks, keyed by field size so that the
/// candidate pools stay within the pair-scan budget.
pub fn series_bounds(q: u32) -> semiprimary_core::check::CheckBounds {
    use semiprimary_core::check::CheckBounds;
    let (lo, hi, w) = match q {
        2 => (-6, 6, 4),
        3 => (-4, 4, 3),
        4 => (-4, 4, 2),
        _ => (-3, 3, 2),
    };
    CheckBounds::new(lo, hi, w).expect("static bounds are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes_and_buildability() {
        let small = corpus(Profile::Small);
        let default = corpus(Profile::Default);
        let large = corpus(Profile::Large);
        assert!(small.len() >= 40, "small corpus has {}", small.len());
        assert!(default.len() >= 60, "default corpus has {}", default.len());
        assert_eq!(large.len(), default.len() + 2);

        // Names are unique within each profile.
        for list in [&small, &default, &large] {
            let mut names: Vec<&str> = list.iter().map(|i| i.name.as_str()).collect();
            names.sort_unstable();
            names.dedup();
            assert_eq!(names.len(), list.len());
        }

        // Every named instance of the small profile also exists in the
        // larger profiles (checks keyed by name stay schedulable).
        for inst in &small {
            assert!(
                default.iter().any(|d| d.name == inst.name),
                "{} missing from default",
                inst.name
            );
        }

        // Everything in the default profile builds.
        for inst in &default {
            match &inst.shape {
                Shape::Finite { .. } => {
                    let r = inst.build_ring().unwrap_or_else(|e| {
                        panic!("{} failed to build: {e}", inst.name)
                    });
                    assert!(r.order() >= 2);
                }
                Shape::Series { .. } => {
                    inst.build_series().unwrap_or_else(|e| {
                        panic!("{} failed to build: {e}", inst.name)
                    });
                }
                _ => {}
            }
        }
    }

    #[test]
    fn series_catalog_shapes() {
        let list = series_catalog();
        let find = |n: &str| list.iter().find(|i| i.name == n).unwrap();
        let deep = find("deep-f3").build_series().unwrap();
        assert_eq!(deep.conductor(), 12);
        let pull = find("pullback-f4").build_series().unwrap();
        assert_eq!(pull.conductor(), 1);
        let dvr = find("dvr-f2").build_series().unwrap();
        assert!(dvr.is_full_power_series());
    }
}
