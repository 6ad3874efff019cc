//! Kernel-like and cokernel-like universal properties of a semibiproduct
//! of semigroups, checked against every test semigroup `Z` up to a size
//! bound (one representative per isomorphism class).
//!
//! These are bounded checks: a passing report says nothing about test
//! objects larger than `z_bound`.

use rayon::prelude::*;

use crate::algebra::{enumerate_homomorphisms, FiniteMagma, FiniteMap, Verdict};
use crate::enumeration::{enumerate_structures, Dedup, StructureFilter};
use crate::error::{AlgebraError, Result};
use crate::semibiproduct::Semibiproduct;

/// Largest test-object order accepted.
pub const MAX_Z_BOUND: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UniversalProperty {
    /// Every `f: A → Z` with `f = fsp` factors uniquely as `f̄ p`.
    CokernelLike,
    /// Every `f: Z → A` with `pf = hqf` factors uniquely as `k f̄`.
    KernelLike,
}

impl UniversalProperty {
    pub fn tag(self) -> &'static str {
        match self {
            UniversalProperty::CokernelLike => "cokernel-like",
            UniversalProperty::KernelLike => "kernel-like",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureKind {
    NoFactorization,
    NonUnique,
}

impl FailureKind {
    pub fn tag(self) -> &'static str {
        match self {
            FailureKind::NoFactorization => "no-factorization",
            FailureKind::NonUnique => "non-unique",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalWitness {
    pub z: FiniteMagma,
    pub f: FiniteMap,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalReport {
    pub property: UniversalProperty,
    pub z_bound: usize,
    /// Homomorphisms satisfying the hypothesis that were checked.
    pub tested_homs: usize,
    pub holds: bool,
    pub witness: Option<UniversalWitness>,
}

/// Canonical semigroups of every order `1..=z_bound`.
pub fn test_semigroups(z_bound: usize) -> Result<Vec<FiniteMagma>> {
    if z_bound > MAX_Z_BOUND {
        return Err(AlgebraError::OrderTooLarge {
            requested: z_bound,
            limit: MAX_Z_BOUND,
        });
    }
    let mut out = Vec::new();
    for n in 1..=z_bound {
        out.extend(enumerate_structures(n, StructureFilter::Semigroup, Dedup::Iso)?);
    }
    Ok(out)
}

fn precheck(sb: &Semibiproduct, z_bound: usize) -> Result<Vec<FiniteMagma>> {
    sb.require_semigroups()?;
    sb.require_valid()?;
    if z_bound == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    test_semigroups(z_bound)
}

/// Per-`Z` outcome: number of tested homomorphisms and the first failure.
type ZOutcome = (usize, Option<(FiniteMap, FailureKind)>);

fn assemble(
    property: UniversalProperty,
    z_bound: usize,
    zs: &[FiniteMagma],
    outcomes: Vec<ZOutcome>,
) -> UniversalReport {
    let tested_homs = outcomes.iter().map(|o| o.0).sum();
    let witness = zs
        .iter()
        .zip(outcomes)
        .find_map(|(z, (_, fail))| fail.map(|(f, kind)| UniversalWitness { z: z.clone(), f, kind }));
    UniversalReport {
        property,
        z_bound,
        tested_homs,
        holds: witness.is_none(),
        witness,
    }
}

pub fn cokernel_property(sb: &Semibiproduct, z_bound: usize) -> Result<UniversalReport> {
    let zs = precheck(sb, z_bound)?;
    let sp = sb.s.after(&sb.p)?;
    let outcomes = zs
        .par_iter()
        .map(|z| {
            let homs_b = enumerate_homomorphisms(&sb.b, z);
            let mut tested = 0;
            for f in enumerate_homomorphisms(&sb.a, z) {
                if f.after(&sp).expect("A -> A") != f {
                    continue;
                }
                tested += 1;
                let fbar = f.after(&sb.s).expect("B -> Z");
                if fbar.hom_witness(&sb.b, z).is_some() || fbar.after(&sb.p).expect("A -> Z") != f {
                    return (tested, Some((f, FailureKind::NoFactorization)));
                }
                let factorizations = homs_b
                    .iter()
                    .filter(|g| g.after(&sb.p).expect("A -> Z") == f)
                    .count();
                if factorizations != 1 {
                    return (tested, Some((f, FailureKind::NonUnique)));
                }
            }
            (tested, None)
        })
        .collect();
    Ok(assemble(UniversalProperty::CokernelLike, z_bound, &zs, outcomes))
}

pub fn kernel_property(sb: &Semibiproduct, z_bound: usize) -> Result<UniversalReport> {
    let zs = precheck(sb, z_bound)?;
    let h = sb.p.after(&sb.k)?;
    let hq = h.after(&sb.q)?;
    let kq = sb.k.after(&sb.q)?;
    let outcomes = zs
        .par_iter()
        .map(|z| {
            let homs_x = enumerate_homomorphisms(z, &sb.x);
            let mut tested = 0;
            for f in enumerate_homomorphisms(z, &sb.a) {
                if sb.p.after(&f).expect("Z -> B") != hq.after(&f).expect("Z -> B") {
                    continue;
                }
                tested += 1;
                // the hypothesis forces f = kqf
                if kq.after(&f).expect("Z -> A") != f {
                    return (tested, Some((f, FailureKind::NoFactorization)));
                }
                let fbar = sb.q.after(&f).expect("Z -> X");
                if fbar.hom_witness(z, &sb.x).is_some() {
                    return (tested, Some((f, FailureKind::NoFactorization)));
                }
                let factorizations = homs_x
                    .iter()
                    .filter(|g| sb.k.after(g).expect("Z -> A") == f)
                    .count();
                if factorizations != 1 {
                    return (tested, Some((f, FailureKind::NonUnique)));
                }
            }
            (tested, None)
        })
        .collect();
    Ok(assemble(UniversalProperty::KernelLike, z_bound, &zs, outcomes))
}

fn identity_of(m: &FiniteMagma, name: &'static str) -> Result<usize> {
    m.identity_element().ok_or(AlgebraError::NotUnital(name))
}

/// `pk` is constant at the identity of `B`, `qs` is constant at the
/// identity of `X`, and `q`, `s` preserve identities.
pub fn is_pointed_monoid_case(sb: &Semibiproduct) -> Result<bool> {
    let ex = identity_of(&sb.x, "X")?;
    let ea = identity_of(&sb.a, "A")?;
    let eb = identity_of(&sb.b, "B")?;
    let Semibiproduct { x, b, k, p, q, s, .. } = sb;
    Ok((0..x.order()).all(|u| p.apply(k.apply(u)) == eb)
        && (0..b.order()).all(|v| q.apply(s.apply(v)) == ex)
        && q.apply(ea) == ex
        && s.apply(eb) == ea)
}

/// Which pair of hypothesis sets disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisMismatch {
    pub property: UniversalProperty,
    pub z: FiniteMagma,
    pub f: FiniteMap,
}

/// For a pointed semibiproduct of monoids and every test monoid `Z` up to
/// `z_bound`, checks over identity-preserving homomorphisms that
/// `{f: A → Z | fk = 0} = {f | f = fsp}` and
/// `{f: Z → A | pf = 0} = {f | pf = hqf}`.
pub fn pointed_hypotheses_agree(sb: &Semibiproduct, z_bound: usize) -> Result<Verdict<HypothesisMismatch>> {
    let zs = precheck(sb, z_bound)?;
    if !is_pointed_monoid_case(sb)? {
        return Err(AlgebraError::Invalid("pointed semibiproduct of monoids"));
    }
    let ea = sb.a.identity_element().expect("checked");
    let eb = sb.b.identity_element().expect("checked");
    let sp = sb.s.after(&sb.p)?;
    let hq = sb.p.after(&sb.k)?.after(&sb.q)?;
    for z in zs {
        let Some(ez) = z.identity_element() else {
            continue;
        };
        for f in enumerate_homomorphisms(&sb.a, &z) {
            if f.apply(ea) != ez {
                continue;
            }
            let kills_k = (0..sb.x.order()).all(|u| f.apply(sb.k.apply(u)) == ez);
            if kills_k != (f.after(&sp)? == f) {
                return Ok(Verdict::Fails(HypothesisMismatch {
                    property: UniversalProperty::CokernelLike,
                    z,
                    f,
                }));
            }
        }
        for f in enumerate_homomorphisms(&z, &sb.a) {
            if f.apply(ez) != ea {
                continue;
            }
            let pf = sb.p.after(&f)?;
            let killed = pf.values().iter().all(|&v| v == eb);
            if killed != (pf == hq.after(&f)?) {
                return Ok(Verdict::Fails(HypothesisMismatch {
                    property: UniversalProperty::KernelLike,
                    z,
                    f,
                }));
            }
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn point_is_terminal() {
        let sb = &catalog::printed_case(1)[0];
        let report = cokernel_property(sb, 1).unwrap();
        assert!(report.holds);
        assert_eq!(report.tested_homs, 1);
        assert!(kernel_property(sb, 1).unwrap().holds);
    }

    #[test]
    fn printed_case_one_up_to_three() {
        let sb = &catalog::printed_case(1)[0];
        let co = cokernel_property(sb, 3).unwrap();
        let ker = kernel_property(sb, 3).unwrap();
        assert!(co.holds && ker.holds);
        assert_eq!(co.property.tag(), "cokernel-like");
        assert!(co.tested_homs > 1);
    }

    #[test]
    fn identity_on_idempotent_monoid() {
        let sb = Semibiproduct::identity_on(catalog::order_two_semigroup(1));
        assert!(!is_pointed_monoid_case(&sb).unwrap());
        let ker = kernel_property(&sb, 3).unwrap();
        assert!(ker.holds);
        // h = 1 so pf = hqf holds for every f
        let all: usize = test_semigroups(3)
            .unwrap()
            .iter()
            .map(|z| enumerate_homomorphisms(z, &sb.a).len())
            .sum();
        assert_eq!(ker.tested_homs, all);
    }

    #[test]
    fn group_extensions_are_pointed() {
        let sb = catalog::cyclic_four_over_two();
        assert!(is_pointed_monoid_case(&sb).unwrap());
        assert!(pointed_hypotheses_agree(&sb, 3).unwrap().holds());
        assert!(cokernel_property(&sb, 3).unwrap().holds);
        assert!(kernel_property(&sb, 3).unwrap().holds);
    }

    #[test]
    fn printed_case_one_pointedness() {
        // M1 has identity 2 (1-based); pk = h = (1, 2) is not constant
        let sb = &catalog::printed_case(1)[0];
        assert_eq!(sb.x.identity_element(), Some(1));
        assert!(!is_pointed_monoid_case(sb).unwrap());
    }

    #[test]
    fn non_unital_is_an_error() {
        let sb = &catalog::printed_case(3)[0];
        assert_eq!(is_pointed_monoid_case(sb), Err(AlgebraError::NotUnital("X")));
    }

    #[test]
    fn bound_is_enforced() {
        let sb = &catalog::printed_case(1)[0];
        assert!(matches!(
            cokernel_property(sb, 5),
            Err(AlgebraError::OrderTooLarge { .. })
        ));
    }
}
