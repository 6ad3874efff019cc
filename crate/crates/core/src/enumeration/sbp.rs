use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{apply_permutation, enumerate_homomorphisms, permutations, FiniteMagma, FiniteMap};
use crate::enumeration::structures::{enumerate_structures, Dedup, StructureFilter};
use crate::error::{AlgebraError, Result};
use crate::semibiproduct::Semibiproduct;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DedupMode {
    /// Every labelled solution counts.
    Labelled,
    /// Solutions related by a relabelling of the middle object that fixes
    /// both ends pointwise are identified.
    MiddleIso,
}

impl DedupMode {
    pub fn tag(self) -> &'static str {
        match self {
            DedupMode::Labelled => "labelled",
            DedupMode::MiddleIso => "middle-iso",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "labelled" => Some(DedupMode::Labelled),
            "middle-iso" => Some(DedupMode::MiddleIso),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSpec {
    pub x: FiniteMagma,
    pub b: FiniteMagma,
    pub middle_order: usize,
    pub dedup: DedupMode,
    pub filter: StructureFilter,
}

impl EnumSpec {
    pub fn new(x: FiniteMagma, b: FiniteMagma, middle_order: usize) -> Self {
        EnumSpec {
            x,
            b,
            middle_order,
            dedup: DedupMode::MiddleIso,
            filter: StructureFilter::Semigroup,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SbpEnumeration {
    /// Solutions before deduplication.
    pub labelled_count: usize,
    /// Sorted by `(A table, k, p, q, s)`; under `MiddleIso` each class is
    /// represented by its smallest relabelling.
    pub solutions: Vec<Semibiproduct>,
}

impl SbpEnumeration {
    pub fn count(&self) -> usize {
        self.solutions.len()
    }
}

/// The triple of isomorphisms `X₁ → X₂`, `A₁ → A₂`, `B₁ → B₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndMaps {
    pub f1: FiniteMap,
    pub f2: FiniteMap,
    pub f3: FiniteMap,
}

type SbpKey = (Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>);

fn key(sb: &Semibiproduct) -> SbpKey {
    (
        sb.a.table().to_vec(),
        sb.k.values().to_vec(),
        sb.p.values().to_vec(),
        sb.q.values().to_vec(),
        sb.s.values().to_vec(),
    )
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Transports `sb` along the relabelling `perm` of its middle object.
fn relabel_middle(sb: &Semibiproduct, perm: &[usize]) -> Semibiproduct {
    let n = perm.len();
    let pi = FiniteMap::new(n, perm.to_vec()).expect("permutation");
    let pi_inv = FiniteMap::new(n, invert(perm)).expect("permutation");
    Semibiproduct {
        x: sb.x.clone(),
        a: apply_permutation(&sb.a, perm),
        b: sb.b.clone(),
        k: pi.after(&sb.k).expect("X -> A"),
        p: sb.p.after(&pi_inv).expect("A -> B"),
        q: sb.q.after(&pi_inv).expect("A -> X"),
        s: pi.after(&sb.s).expect("B -> A"),
    }
}

/// The smallest relabelling of `sb` under permutations of the middle
/// object, compared by `(A table, k, p, q, s)`. Two semibiproducts with the
/// same ends are isomorphic with ends fixed iff their canonical forms agree.
pub fn canonical_middle_key(sb: &Semibiproduct) -> Semibiproduct {
    permutations(sb.a.order())
        .map(|perm| relabel_middle(sb, &perm))
        .min_by_key(key)
        .expect("at least one permutation")
}

/// Every valid semibiproduct with middle table `a` and the given ends.
fn solutions_for_middle(x: &FiniteMagma, a: &FiniteMagma, b: &FiniteMagma) -> Vec<Semibiproduct> {
    let (nx, na, nb) = (x.order(), a.order(), b.order());
    let ks: Vec<FiniteMap> = enumerate_homomorphisms(x, a)
        .into_iter()
        .filter(FiniteMap::is_injective)
        .collect();
    let ps: Vec<FiniteMap> = enumerate_homomorphisms(a, b)
        .into_iter()
        .filter(FiniteMap::is_surjective)
        .collect();
    let mut out = Vec::new();
    for k in &ks {
        for p in &ps {
            // qk = 1 fixes q on the image of k; ps = 1 confines s(b) to p⁻¹(b).
            let mut q_choices: Vec<Vec<usize>> = vec![(0..nx).collect(); na];
            for u in 0..nx {
                q_choices[k.apply(u)] = vec![u];
            }
            let s_choices: Vec<Vec<usize>> = (0..nb)
                .map(|v| (0..na).filter(|&e| p.apply(e) == v).collect())
                .collect();
            for s_vals in cartesian(&s_choices) {
                // kq(e) + sp(e) = e constrains each q(e) separately
                let per_point: Vec<Vec<usize>> = (0..na)
                    .map(|e| {
                        let se = s_vals[p.apply(e)];
                        q_choices[e]
                            .iter()
                            .copied()
                            .filter(|&u| a.op(k.apply(u), se) == e)
                            .collect()
                    })
                    .collect();
                for q_vals in cartesian(&per_point) {
                    let sb = Semibiproduct {
                        x: x.clone(),
                        a: a.clone(),
                        b: b.clone(),
                        k: k.clone(),
                        p: p.clone(),
                        q: FiniteMap::new(nx, q_vals).expect("in range"),
                        s: FiniteMap::new(na, s_vals.clone()).expect("in range"),
                    };
                    if sb.is_valid() {
                        out.push(sb);
                    }
                }
            }
        }
    }
    out
}

/// All choice sequences, in lexicographic order.
fn cartesian(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(choices.len())];
    for options in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |&o| {
                    let mut next = prefix.clone();
                    next.push(o);
                    next
                })
            })
            .collect();
    }
    out
}

pub fn enumerate_semibiproducts(spec: &EnumSpec) -> Result<SbpEnumeration> {
    enumerate_semibiproducts_with(spec, Parallelism::Parallel)
}

pub fn enumerate_semibiproducts_with(spec: &EnumSpec, mode: Parallelism) -> Result<SbpEnumeration> {
    if spec.middle_order == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    let middles = enumerate_structures(spec.middle_order, spec.filter, Dedup::None)?;
    let per_middle = |a: &FiniteMagma| solutions_for_middle(&spec.x, a, &spec.b);
    let found: Vec<Semibiproduct> = match mode {
        Parallelism::Sequential => middles.iter().flat_map(per_middle).collect(),
        Parallelism::Parallel => middles.par_iter().flat_map_iter(per_middle).collect(),
    };
    let labelled_count = found.len();
    let canon = |sb: Semibiproduct| match spec.dedup {
        DedupMode::Labelled => sb,
        DedupMode::MiddleIso => canonical_middle_key(&sb),
    };
    let sorted: BTreeMap<SbpKey, Semibiproduct> = match mode {
        Parallelism::Sequential => found.into_iter().map(canon).map(|sb| (key(&sb), sb)).collect(),
        Parallelism::Parallel => found
            .into_par_iter()
            .map(canon)
            .map(|sb| (key(&sb), sb))
            .collect::<Vec<_>>()
            .into_iter()
            .collect(),
    };
    Ok(SbpEnumeration {
        labelled_count,
        solutions: sorted.into_values().collect(),
    })
}

fn is_iso(f: &FiniteMap, m1: &FiniteMagma, m2: &FiniteMagma) -> bool {
    m1.order() == m2.order() && f.is_injective() && f.hom_witness(m1, m2).is_none()
}

/// Searches for isomorphisms `(f1, f2, f3)` commuting with all four maps.
/// Since `f1 = q₂ f2 k₁` and `f3 = p₂ f2 s₁` are forced, the search runs
/// over `f2`; the lexicographically first triple is returned.
pub fn sbp_isomorphic(sb1: &Semibiproduct, sb2: &Semibiproduct, fix_ends: bool) -> Option<EndMaps> {
    let orders = |sb: &Semibiproduct| (sb.x.order(), sb.a.order(), sb.b.order());
    if orders(sb1) != orders(sb2) {
        return None;
    }
    let mut found = Vec::new();
    for perm in permutations(sb1.a.order()) {
        let f2 = FiniteMap::new(sb2.a.order(), perm).expect("permutation");
        if !is_iso(&f2, &sb1.a, &sb2.a) {
            continue;
        }
        let f1 = sb2.q.after(&f2).and_then(|m| m.after(&sb1.k)).expect("X -> X");
        let f3 = sb2.p.after(&f2).and_then(|m| m.after(&sb1.s)).expect("B -> B");
        if fix_ends && !(f1.is_identity() && f3.is_identity()) {
            continue;
        }
        if !is_iso(&f1, &sb1.x, &sb2.x) || !is_iso(&f3, &sb1.b, &sb2.b) {
            continue;
        }
        let commutes = f2.after(&sb1.k) == sb2.k.after(&f1)
            && f3.after(&sb1.p) == sb2.p.after(&f2)
            && f1.after(&sb1.q) == sb2.q.after(&f2)
            && f2.after(&sb1.s) == sb2.s.after(&f3);
        if commutes {
            found.push(EndMaps { f1, f2, f3 });
        }
    }
    found.into_iter().min_by(|l, r| (&l.f1, &l.f2, &l.f3).cmp(&(&r.f1, &r.f2, &r.f3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn spec(i: usize, j: usize, dedup: DedupMode) -> EnumSpec {
        EnumSpec {
            dedup,
            ..EnumSpec::new(catalog::order_two_semigroup(i), catalog::order_two_semigroup(j), 3)
        }
    }

    #[test]
    fn every_solution_is_valid() {
        let e = enumerate_semibiproducts(&spec(1, 1, DedupMode::Labelled)).unwrap();
        assert!(!e.solutions.is_empty());
        assert!(e.solutions.iter().all(Semibiproduct::is_valid));
        assert_eq!(e.labelled_count, e.count());
    }

    #[test]
    fn labelled_dominates_middle_iso() {
        for i in 1..=4 {
            for j in 1..=4 {
                let e = enumerate_semibiproducts(&spec(i, j, DedupMode::MiddleIso)).unwrap();
                assert!(e.labelled_count >= e.count());
            }
        }
    }

    #[test]
    fn sequential_matches_parallel() {
        let s = spec(2, 1, DedupMode::MiddleIso);
        assert_eq!(
            enumerate_semibiproducts_with(&s, Parallelism::Sequential).unwrap(),
            enumerate_semibiproducts_with(&s, Parallelism::Parallel).unwrap()
        );
    }

    #[test]
    fn printed_cases_are_found() {
        for (case, (i, j)) in [(1, (1, 1)), (2, (1, 3)), (3, (2, 1)), (4, (3, 1))] {
            let found = enumerate_semibiproducts(&spec(i, j, DedupMode::MiddleIso)).unwrap();
            for sb in catalog::corrected_case(case) {
                assert!(
                    found.solutions.iter().any(|f| sbp_isomorphic(&sb, f, true).is_some()),
                    "case {case}"
                );
            }
        }
    }

    #[test]
    fn self_iso_is_identity() {
        let sb = &catalog::corrected_case(3)[0];
        let iso = sbp_isomorphic(sb, sb, true).unwrap();
        assert!(iso.f1.is_identity() && iso.f2.is_identity() && iso.f3.is_identity());
    }

    #[test]
    fn case_one_middles_are_not_identified() {
        let cases = catalog::printed_case(1);
        assert!(sbp_isomorphic(&cases[0], &cases[1], true).is_none());
        assert!(sbp_isomorphic(&cases[0], &cases[1], false).is_none());
    }

    #[test]
    fn relabelling_is_recovered() {
        let sb = &catalog::printed_case(1)[1];
        let perm = [2, 0, 1];
        let moved = relabel_middle(sb, &perm);
        assert!(moved.is_valid());
        let iso = sbp_isomorphic(sb, &moved, true).unwrap();
        assert_eq!(iso.f2.values(), &perm);
        assert_eq!(canonical_middle_key(sb), canonical_middle_key(&moved));
    }

    #[test]
    fn bottom_row_is_empty() {
        for j in 1..=4 {
            assert_eq!(enumerate_semibiproducts(&spec(4, j, DedupMode::Labelled)).unwrap().count(), 0);
        }
    }
}
