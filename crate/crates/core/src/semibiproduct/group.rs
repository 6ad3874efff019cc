//! Semibiproducts of groups: extensions with a chosen set-theoretic section.

use crate::algebra::{FiniteMagma, FiniteMap, Verdict};
use crate::error::{AlgebraError, Result};
use crate::semibiproduct::Semibiproduct;

/// Builds the semibiproduct of a surjective group homomorphism `p: A → B`
/// with a section `s`. `X` is the kernel of `p` (elements in increasing
/// label order of `A`), `k` the inclusion, and `q` the unique map with
/// `kq(a) = a - sp(a)`.
pub fn build_group_sbp(
    p: &FiniteMap,
    s: &FiniteMap,
    a: &FiniteMagma,
    b: &FiniteMagma,
) -> Result<Semibiproduct> {
    if !a.is_group() {
        return Err(AlgebraError::NotAGroup("A"));
    }
    if !b.is_group() {
        return Err(AlgebraError::NotAGroup("B"));
    }
    if p.dom() != a.order() || p.cod() != b.order() || s.dom() != b.order() || s.cod() != a.order() {
        return Err(AlgebraError::DimensionMismatch(
            "p must be A -> B and s must be B -> A".into(),
        ));
    }
    if p.hom_witness(a, b).is_some() {
        return Err(AlgebraError::NotAHomomorphism);
    }
    if !p.is_surjective() {
        return Err(AlgebraError::NotSurjective);
    }
    if let Some(e) = (0..b.order()).find(|&e| p.apply(s.apply(e)) != e) {
        return Err(AlgebraError::NotASection(e));
    }
    let eb = b.identity_element().expect("groups are unital");
    let kernel: Vec<usize> = (0..a.order()).filter(|&e| p.apply(e) == eb).collect();
    let x = a.restrict(&kernel).expect("kernels are subgroups");
    let k = FiniteMap::new(a.order(), kernel.clone())?;
    let q_values = (0..a.order())
        .map(|e| {
            let sp = s.apply(p.apply(e));
            let diff = a.op(e, a.inverse(sp).expect("groups have inverses"));
            kernel.iter().position(|&v| v == diff).expect("a - sp(a) lies in the kernel")
        })
        .collect();
    let q = FiniteMap::new(kernel.len(), q_values)?;
    Semibiproduct::new(x, a.clone(), b.clone(), k, p.clone(), q, s.clone())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupReport {
    /// `q(a)` is the one and only `x` with `k(x) + sp(a) = a`.
    pub q_unique: Verdict<usize>,
    /// `h = pk` is constant at the identity of `B`.
    pub h_trivial: Verdict<usize>,
    /// `ρ(x, b) = x` for every `(x, b)`.
    pub rho_trivial: Verdict<(usize, usize)>,
    /// `X × B` with `(x, b) + (x', b') = (x + φ(b, x') + γ(b, b'), b + b')`;
    /// `(x, b)` has label `x * |B| + b`.
    pub factor_product: FiniteMagma,
    /// `(x, b) ↦ k(x) + s(b)` is an isomorphism from `factor_product` onto `A`.
    pub alpha_iso: Verdict<&'static str>,
}

impl GroupReport {
    pub fn all_hold(&self) -> bool {
        self.q_unique.holds() && self.h_trivial.holds() && self.rho_trivial.holds() && self.alpha_iso.holds()
    }
}

pub fn group_checks(sb: &Semibiproduct) -> Result<GroupReport> {
    for (name, m) in [("X", &sb.x), ("A", &sb.a), ("B", &sb.b)] {
        if !m.is_group() {
            return Err(AlgebraError::NotAGroup(name));
        }
    }
    sb.require_valid()?;
    let Semibiproduct { x, a, b, k, p, q, s } = sb;
    let (nx, na, nb) = (x.order(), a.order(), b.order());
    let d = sb.derive_tuple_unchecked();

    let q_unique = Verdict::from_witness((0..na).find(|&e| {
        let sp = s.apply(p.apply(e));
        let solutions: Vec<usize> = (0..nx).filter(|&u| a.op(k.apply(u), sp) == e).collect();
        let expected = a.op(e, a.inverse(sp).expect("group"));
        solutions != [q.apply(e)] || k.apply(q.apply(e)) != expected
    }));
    let eb = b.identity_element().expect("group");
    let h_trivial = Verdict::from_witness((0..nx).find(|&u| d.h.apply(u) != eb));
    let rho_trivial = Verdict::from_witness(
        (0..nx)
            .flat_map(|u| (0..nb).map(move |v| (u, v)))
            .find(|&(u, v)| d.rho.get(u, v) != u),
    );

    let n = nx * nb;
    let factor_product = FiniteMagma::from_fn(n, |l, r| {
        let (u, v) = (l / nb, l % nb);
        let (u2, v2) = (r / nb, r % nb);
        let first = x.op(x.op(u, d.phi_pre.get(v, u2)), d.gamma.get(v, v2));
        first * nb + b.op(v, v2)
    })?;
    let alpha = FiniteMap::from_fn(n, na, |l| sb.alpha(l / nb, l % nb))?;
    let alpha_iso = if n != na || !alpha.is_injective() {
        Verdict::Fails("alpha is not a bijection")
    } else if alpha.hom_witness(&factor_product, a).is_some() {
        Verdict::Fails("alpha does not preserve the operation")
    } else {
        Verdict::Holds
    };

    Ok(GroupReport {
        q_unique,
        h_trivial,
        rho_trivial,
        factor_product,
        alpha_iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn cyclic_four_kernel_and_retraction() {
        let sb = catalog::cyclic_four_over_two();
        assert_eq!(sb.k.values(), &[0, 2]);
        assert_eq!(sb.q.values(), &[0, 0, 1, 1]);
        assert!(sb.is_valid());
        let report = group_checks(&sb).unwrap();
        assert!(report.all_hold());
        let z4 = FiniteMagma::cyclic(4).unwrap();
        assert!(crate::algebra::are_equivalent(&report.factor_product, &z4, false).is_some());
    }

    #[test]
    fn split_klein_is_direct_product() {
        let sb = catalog::klein_over_two(0);
        assert!(sb.s.hom_witness(&sb.b, &sb.a).is_none());
        let d = sb.derive_tuple().unwrap();
        assert!(d.gamma.values().iter().all(|&g| g == 0));
        let report = group_checks(&sb).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.factor_product, sb.x.product(&sb.b));
    }

    #[test]
    fn trivial_quotient() {
        let z3 = FiniteMagma::cyclic(3).unwrap();
        let p = FiniteMap::constant(3, 1, 0).unwrap();
        let s = FiniteMap::new(3, vec![0]).unwrap();
        let sb = build_group_sbp(&p, &s, &z3, &FiniteMagma::trivial()).unwrap();
        assert_eq!(sb.x, z3);
        assert!(sb.k.is_identity());
        assert!(sb.q.is_identity());
    }

    #[test]
    fn symmetric_group_sections() {
        for i in 0..3 {
            let sb = catalog::symmetric_over_sign(i);
            assert!(sb.is_valid());
            let report = group_checks(&sb).unwrap();
            assert!(report.all_hold());
            // the pre-action is conjugation by s(b) restricted to the kernel
            let d = sb.derive_tuple().unwrap();
            for v in 0..2 {
                let g = sb.s.apply(v);
                let g_inv = sb.a.inverse(g).unwrap();
                for u in 0..3 {
                    let conj = sb.a.op(sb.a.op(g, sb.k.apply(u)), g_inv);
                    assert_eq!(sb.k.apply(d.phi_pre.get(v, u)), conj);
                }
            }
        }
    }

    #[test]
    fn construction_errors() {
        let z4 = FiniteMagma::cyclic(4).unwrap();
        let z2 = FiniteMagma::cyclic(2).unwrap();
        let m1 = catalog::order_two_semigroup(1);
        let p = FiniteMap::from_fn(4, 2, |e| e % 2).unwrap();
        let s = FiniteMap::new(4, vec![0, 1]).unwrap();
        assert_eq!(build_group_sbp(&p, &s, &z4, &m1).unwrap_err(), AlgebraError::NotAGroup("B"));
        let bad_s = FiniteMap::new(4, vec![0, 2]).unwrap();
        assert_eq!(build_group_sbp(&p, &bad_s, &z4, &z2).unwrap_err(), AlgebraError::NotASection(1));
        let z2z2 = z2.product(&z2);
        let zero = FiniteMap::constant(4, 2, 0).unwrap();
        assert_eq!(
            build_group_sbp(&zero, &FiniteMap::new(4, vec![0, 0]).unwrap(), &z2z2, &z2).unwrap_err(),
            AlgebraError::NotSurjective
        );
    }
}
