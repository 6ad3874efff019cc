//! The structure theorem for semibiproducts of semigroups, checked item by
//! item by exhaustive quantification.

use crate::action::Pair;
use crate::algebra::{FiniteMagma, FiniteMap};
use crate::error::Result;
use crate::semibiproduct::{PseudoActionData, Semibiproduct};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatteryItem {
    pub item: usize,
    pub statement: &'static str,
    pub holds: bool,
    /// 0-based labels of the first counterexample, when one exists.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatteryReport {
    pub items: Vec<BatteryItem>,
}

impl BatteryReport {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|i| i.holds)
    }

    pub fn item(&self, n: usize) -> &BatteryItem {
        &self.items[n - 1]
    }
}

struct Ctx<'a> {
    sb: &'a Semibiproduct,
    d: PseudoActionData,
}

impl Ctx<'_> {
    fn xadd(&self, u: usize, v: usize) -> usize {
        self.sb.x.op(u, v)
    }

    fn badd(&self, u: usize, v: usize) -> usize {
        self.sb.b.op(u, v)
    }

    fn in_r(&self, (x, b): Pair) -> bool {
        self.d.rho.get(x, b) == x && self.badd(self.d.h.apply(x), b) == b
    }

    /// `(ρ(x + φ(b, x') + γ(b + h(x'), b'), b + b'), b + b')`
    fn r_op(&self, (x, b): Pair, (x2, b2): Pair) -> Pair {
        let d = &self.d;
        let bb = self.badd(b, b2);
        let g = d.gamma.get(self.badd(b, d.h.apply(x2)), b2);
        let sum = self.xadd(self.xadd(x, d.phi_pre.get(b, x2)), g);
        (d.rho.get(sum, bb), bb)
    }
}

fn first<T>(mut it: impl Iterator<Item = T>) -> Option<T> {
    it.next()
}

/// Runs all eleven items. `X`, `A`, `B` must be semigroups and the diagram a
/// valid semibiproduct.
pub fn thm5_battery(sb: &Semibiproduct) -> Result<BatteryReport> {
    sb.require_semigroups()?;
    sb.require_valid()?;
    let ctx = Ctx {
        sb,
        d: sb.derive_tuple_unchecked(),
    };
    let Semibiproduct { x, a, b, k, p, q, s } = sb;
    let (nx, na, nb) = (x.order(), a.order(), b.order());
    let d = &ctx.d;
    let h = &d.h;
    let mut items = Vec::with_capacity(11);
    let mut push = |item: usize, statement: &'static str, witness: Option<Vec<usize>>| {
        items.push(BatteryItem {
            item,
            statement,
            holds: witness.is_none(),
            witness,
        })
    };

    push(
        1,
        "h(x) = h(x) + h(x)",
        first((0..nx).filter(|&e| h.apply(e) != ctx.badd(h.apply(e), h.apply(e)))).map(|e| vec![e]),
    );
    push(
        2,
        "p(a) = hq(a) + p(a)",
        first((0..na).filter(|&e| p.apply(e) != ctx.badd(h.apply(q.apply(e)), p.apply(e)))).map(|e| vec![e]),
    );
    push(
        3,
        "q(a) = rho(q(a), p(a))",
        first((0..na).filter(|&e| q.apply(e) != d.rho.get(q.apply(e), p.apply(e)))).map(|e| vec![e]),
    );
    let item4 = (0..na)
        .flat_map(|u| (0..na).map(move |v| (u, v)))
        .find(|&(u, v)| {
            let (qu, pu, qv, pv) = (q.apply(u), p.apply(u), q.apply(v), p.apply(v));
            let inner = ctx.xadd(
                ctx.xadd(qu, d.phi_pre.get(pu, qv)),
                d.gamma.get(ctx.badd(pu, h.apply(qv)), pv),
            );
            let uv = a.op(u, v);
            a.op(k.apply(inner), s.apply(p.apply(uv))) != uv
        });
    push(
        4,
        "a + a' = k(qa + phi(pa, qa') + gamma(pa + hqa', pa')) + sp(a + a')",
        item4.map(|(u, v)| vec![u, v]),
    );
    let item5 = (0..na)
        .flat_map(|u| (u + 1..na).map(move |v| (u, v)))
        .find(|&(u, v)| sb.beta(u) == sb.beta(v));
    push(5, "<q, p> is injective", item5.map(|(u, v)| vec![u, v]));

    let r: Vec<Pair> = (0..nx)
        .flat_map(|u| (0..nb).map(move |v| (u, v)))
        .filter(|&pair| ctx.in_r(pair))
        .collect();
    let mut image: Vec<Pair> = (0..na).map(|e| sb.beta(e)).collect();
    image.sort_unstable();
    image.dedup();
    let item6 = if image == r {
        None
    } else {
        // first pair in the symmetric difference
        let diff = (0..nx)
            .flat_map(|u| (0..nb).map(move |v| (u, v)))
            .find(|pair| r.contains(pair) != image.contains(pair))
            .expect("sets differ");
        Some(vec![diff.0, diff.1])
    };
    push(6, "image of <q, p> is R", item6);

    let alpha_vals: Vec<usize> = r.iter().map(|&(u, v)| sb.alpha(u, v)).collect();
    let alpha_bijective = alpha_vals.len() == na && {
        let mut seen = vec![false; na];
        alpha_vals.iter().all(|&e| !std::mem::replace(&mut seen[e], true))
    };
    push(
        7,
        "alpha(x, b) = k(x) + s(b) is a bijection R -> A",
        (!alpha_bijective).then(|| vec![r.len(), na]),
    );

    let item8 = r
        .iter()
        .flat_map(|&l| r.iter().map(move |&m| (l, m)))
        .find(|&(l, m)| !ctx.in_r(ctx.r_op(l, m)));
    push(
        8,
        "(x,b) + (x',b') = (rho(x + phi(b,x') + gamma(b + h(x'), b'), b + b'), b + b') is closed on R",
        item8.map(|((u, v), (w, z))| vec![u, v, w, z]),
    );

    if item8.is_some() {
        for (item, statement) in [
            (9, "R is a semigroup"),
            (10, "alpha is a semigroup isomorphism with inverse beta"),
            (11, "the bottom row is a semibiproduct of semigroups"),
        ] {
            push(item, statement, Some(vec![]));
        }
        return Ok(BatteryReport { items });
    }

    let nr = r.len();
    let ridx = |pair: Pair| r.binary_search(&pair).expect("closed");
    let r_magma = FiniteMagma::from_fn(nr, |i, j| ridx(ctx.r_op(r[i], r[j])))?;
    push(
        9,
        "R is a semigroup",
        r_magma.is_associative().into_witness().map(|(i, j, l)| vec![i, j, l]),
    );

    let item10 = if !alpha_bijective {
        Some(vec![])
    } else {
        let hom = (0..nr)
            .flat_map(|i| (0..nr).map(move |j| (i, j)))
            .find(|&(i, j)| alpha_vals[r_magma.op(i, j)] != a.op(alpha_vals[i], alpha_vals[j]));
        let inverse = (0..na).find(|&e| alpha_vals[ridx(sb.beta(e))] != e);
        hom.map(|(i, j)| vec![i, j]).or(inverse.map(|e| vec![e]))
    };
    push(10, "alpha is a semigroup isomorphism with inverse beta", item10);

    let iota_x = FiniteMap::from_fn(nx, nr, |e| ridx((e, h.apply(e))))?;
    let pi_b = FiniteMap::from_fn(nr, nb, |i| r[i].1)?;
    let pi_x = FiniteMap::from_fn(nr, nx, |i| r[i].0)?;
    let iota_b = FiniteMap::from_fn(nb, nr, |e| ridx((d.t.apply(e), e)))?;
    let bottom = Semibiproduct::new(x.clone(), r_magma.clone(), b.clone(), iota_x, pi_b, pi_x, iota_b)?;
    let item11 = match bottom.verify().failing_equation {
        Some(f) => Some(f.witness()),
        None => r_magma.is_associative().into_witness().map(|(i, j, l)| vec![i, j, l]),
    };
    push(11, "the bottom row is a semibiproduct of semigroups", item11);

    Ok(BatteryReport { items })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::error::AlgebraError;

    #[test]
    fn tabulated_cases_pass_everything() {
        for case in 1..=4 {
            for sb in catalog::corrected_case(case) {
                let report = thm5_battery(&sb).unwrap();
                assert_eq!(report.items.len(), 11);
                assert!(report.all_hold(), "case {case}: {report:?}");
            }
        }
    }

    #[test]
    fn trivial_passes() {
        let sb = Semibiproduct::identity_on(FiniteMagma::trivial());
        assert!(thm5_battery(&sb).unwrap().all_hold());
    }

    #[test]
    fn group_case_has_full_r() {
        let sb = catalog::cyclic_four_over_two();
        let report = thm5_battery(&sb).unwrap();
        assert!(report.all_hold());
        let rebuilt = Semibiproduct::from_action(&sb.to_action().unwrap()).unwrap();
        assert_eq!(rebuilt.a.order(), sb.x.order() * sb.b.order());
    }

    #[test]
    fn rejects_magmas() {
        let action = catalog::representable_nonassociative_action();
        let sb = Semibiproduct::from_action(&action).unwrap();
        assert_eq!(thm5_battery(&sb).unwrap_err(), AlgebraError::NotAssociative("A"));
    }
}
