//! Semibiproduct diagrams
//!
//! ```text
//!        k        p
//!     X ───▶ A ───▶ B
//!     X ◀┄┄┄ A ◀┄┄┄ B
//!        q        s
//! ```
//!
//! with `k`, `p` homomorphisms, `q`, `s` plain maps, and
//! `kq(a) + sp(a) = a`, `ps = 1_B`, `qk = 1_X`.

mod battery;
mod formulas;
mod group;

pub use battery::{thm5_battery, BatteryItem, BatteryReport};
pub use formulas::{
    is_unitary_semidirect, monoid_formula_check, pseudo_r, FormulaReport,
};
pub use group::{build_group_sbp, group_checks, GroupReport};

use crate::action::{MagmaAction, Pair, RMagma};
use crate::algebra::{BinaryTable, FiniteMagma, FiniteMap, Verdict};
use crate::error::{AlgebraError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semibiproduct {
    pub x: FiniteMagma,
    pub a: FiniteMagma,
    pub b: FiniteMagma,
    pub k: FiniteMap,
    pub p: FiniteMap,
    pub q: FiniteMap,
    pub s: FiniteMap,
}

/// The first defining equation that fails, with its smallest witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SbpFailure {
    KqSp { a: usize },
    Ps { b: usize },
    Qk { x: usize },
    KHom { x: usize, x2: usize },
    PHom { a: usize, a2: usize },
}

impl SbpFailure {
    pub fn tag(&self) -> &'static str {
        match self {
            SbpFailure::KqSp { .. } => "kq+sp",
            SbpFailure::Ps { .. } => "ps",
            SbpFailure::Qk { .. } => "qk",
            SbpFailure::KHom { .. } => "k-hom",
            SbpFailure::PHom { .. } => "p-hom",
        }
    }

    /// The witness as a flat list of 0-based labels.
    pub fn witness(&self) -> Vec<usize> {
        match *self {
            SbpFailure::KqSp { a } => vec![a],
            SbpFailure::Ps { b } => vec![b],
            SbpFailure::Qk { x } => vec![x],
            SbpFailure::KHom { x, x2 } => vec![x, x2],
            SbpFailure::PHom { a, a2 } => vec![a, a2],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SbpReport {
    pub valid: bool,
    pub failing_equation: Option<SbpFailure>,
}

/// `h = pk`, the correction system `ρ(x, b) = q(k(x) + s(b))`, the
/// pre-action `φ(b, x) = q(s(b) + k(x))`, the factor system
/// `γ(b, b') = q(s(b) + s(b'))`, and `t = qs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoActionData {
    pub h: FiniteMap,
    pub rho: BinaryTable,
    pub phi_pre: BinaryTable,
    pub gamma: BinaryTable,
    pub t: FiniteMap,
}

/// The comparison maps between `A` and the set `R` of the associated
/// action: `α(x, b) = k(x) + s(b)` and `β(a) = (q(a), p(a))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaBeta {
    pub r: RMagma,
    pub alpha: FiniteMap,
    pub beta: FiniteMap,
}

impl Semibiproduct {
    pub fn new(
        x: FiniteMagma,
        a: FiniteMagma,
        b: FiniteMagma,
        k: FiniteMap,
        p: FiniteMap,
        q: FiniteMap,
        s: FiniteMap,
    ) -> Result<Self> {
        let (nx, na, nb) = (x.order(), a.order(), b.order());
        for (name, map, dom, cod) in [
            ("k", &k, nx, na),
            ("p", &p, na, nb),
            ("q", &q, na, nx),
            ("s", &s, nb, na),
        ] {
            if map.dom() != dom || map.cod() != cod {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "{name} is {} -> {}, expected {dom} -> {cod}",
                    map.dom(),
                    map.cod()
                )));
            }
        }
        Ok(Semibiproduct {
            x,
            a,
            b,
            k,
            p,
            q,
            s,
        })
    }

    /// The diagram `A ⇄ A ⇄ A` with all four maps the identity.
    pub fn identity_on(a: FiniteMagma) -> Self {
        let id = FiniteMap::identity(a.order());
        Semibiproduct {
            x: a.clone(),
            a: a.clone(),
            b: a,
            k: id.clone(),
            p: id.clone(),
            q: id.clone(),
            s: id,
        }
    }

    /// Checks `kq + sp = 1_A`, `ps = 1_B`, `qk = 1_X`, then that `k` and `p`
    /// are homomorphisms, reporting the first failure.
    pub fn verify(&self) -> SbpReport {
        let failure = self.first_failure();
        SbpReport {
            valid: failure.is_none(),
            failing_equation: failure,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.first_failure().is_none()
    }

    fn first_failure(&self) -> Option<SbpFailure> {
        let Semibiproduct { x, a, b, k, p, q, s } = self;
        if let Some(e) = (0..a.order()).find(|&e| a.op(k.apply(q.apply(e)), s.apply(p.apply(e))) != e) {
            return Some(SbpFailure::KqSp { a: e });
        }
        if let Some(e) = (0..b.order()).find(|&e| p.apply(s.apply(e)) != e) {
            return Some(SbpFailure::Ps { b: e });
        }
        if let Some(e) = (0..x.order()).find(|&e| q.apply(k.apply(e)) != e) {
            return Some(SbpFailure::Qk { x: e });
        }
        if let Some((u, v)) = k.hom_witness(x, a) {
            return Some(SbpFailure::KHom { x: u, x2: v });
        }
        if let Some((u, v)) = p.hom_witness(a, b) {
            return Some(SbpFailure::PHom { a: u, a2: v });
        }
        None
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(AlgebraError::Invalid("semibiproduct"))
        }
    }

    pub(crate) fn require_semigroups(&self) -> Result<()> {
        for (name, m) in [("X", &self.x), ("A", &self.a), ("B", &self.b)] {
            if !m.is_associative().holds() {
                return Err(AlgebraError::NotAssociative(name));
            }
        }
        Ok(())
    }

    /// `α(x, b) = k(x) + s(b)`.
    #[inline]
    pub fn alpha(&self, x: usize, b: usize) -> usize {
        self.a.op(self.k.apply(x), self.s.apply(b))
    }

    /// `β(a) = (q(a), p(a))`.
    #[inline]
    pub fn beta(&self, a: usize) -> Pair {
        (self.q.apply(a), self.p.apply(a))
    }

    pub fn derive_tuple(&self) -> Result<PseudoActionData> {
        self.require_valid()?;
        Ok(self.derive_tuple_unchecked())
    }

    pub(crate) fn derive_tuple_unchecked(&self) -> PseudoActionData {
        let Semibiproduct { x, a, b, k, p, q, s } = self;
        let (nx, nb) = (x.order(), b.order());
        PseudoActionData {
            h: p.after(k).expect("k: X -> A, p: A -> B"),
            rho: BinaryTable::from_fn(nx, nb, nx, |u, v| q.apply(a.op(k.apply(u), s.apply(v)))),
            phi_pre: BinaryTable::from_fn(nb, nx, nx, |v, u| q.apply(a.op(s.apply(v), k.apply(u)))),
            gamma: BinaryTable::from_fn(nb, nb, nx, |v, w| q.apply(a.op(s.apply(v), s.apply(w)))),
            t: q.after(s).expect("s: B -> A, q: A -> X"),
        }
    }

    /// The associated magma-action: `θ` is the operation of `B`,
    /// `φ(x, b, x', b') = q((k(x) + s(b)) + (k(x') + s(b')))`, `h = pk`,
    /// `t = qs`.
    pub fn to_action(&self) -> Result<MagmaAction> {
        self.require_valid()?;
        let Semibiproduct { a, k, p, q, s, .. } = self;
        MagmaAction::from_fn(
            self.b.clone(),
            p.after(k)?,
            q.after(s)?,
            |x, b, x2, b2| {
                let l = a.op(k.apply(x), s.apply(b));
                let r = a.op(k.apply(x2), s.apply(b2));
                q.apply(a.op(l, r))
            },
        )
    }

    /// The semibiproduct `X ⇄ R ⇄ B` of a magma-action, with `X` carrying
    /// the induced operation `x + x' = φ(x, h(x), x', h(x'))`,
    /// `k = ⟨1, h⟩`, `p = π_B`, `q = π_X`, `s = ⟨t, 1⟩`.
    pub fn from_action(action: &MagmaAction) -> Result<Self> {
        if !action.is_action() {
            return Err(AlgebraError::Invalid("magma-action"));
        }
        let r = action.compute_r()?;
        let (h, t) = (action.h(), action.t());
        let nr = r.len();
        let idx = |pair: Pair| r.index_of(pair).expect("verified action");
        let x = action.derived_ops().xplus;
        let k = FiniteMap::from_fn(x.order(), nr, |e| idx((e, h.apply(e))))?;
        let p = FiniteMap::from_fn(nr, action.b_order(), |i| r.pairs[i].1)?;
        let q = FiniteMap::from_fn(nr, x.order(), |i| r.pairs[i].0)?;
        let s = FiniteMap::from_fn(action.b_order(), nr, |e| idx((t.apply(e), e)))?;
        Semibiproduct::new(x, r.magma, action.theta().clone(), k, p, q, s)
    }

    /// `α: R → A` and `β: A → R`, where `R` is computed from
    /// [`to_action`](Self::to_action).
    pub fn alpha_beta_iso(&self) -> Result<AlphaBeta> {
        let r = self.to_action()?.compute_r()?;
        let alpha = FiniteMap::from_fn(r.len(), self.a.order(), |i| {
            let (x, b) = r.pairs[i];
            self.alpha(x, b)
        })?;
        let mut beta = Vec::with_capacity(self.a.order());
        for e in 0..self.a.order() {
            beta.push(r.index_of(self.beta(e)).ok_or(AlgebraError::Invalid("semibiproduct"))?);
        }
        let beta = FiniteMap::new(r.len(), beta)?;
        Ok(AlphaBeta { r, alpha, beta })
    }
}

impl AlphaBeta {
    /// Checks that `α` and `β` are mutually inverse, that `α` is a magma
    /// isomorphism `R → A`, and that `(1_X, α, 1_B)` is a morphism of
    /// semibiproducts from `rebuilt` (the semibiproduct of the associated
    /// action) onto `original`. The witness names the first failed law.
    pub fn certify(&self, original: &Semibiproduct, rebuilt: &Semibiproduct) -> Verdict<&'static str> {
        let (alpha, beta) = (&self.alpha, &self.beta);
        let checks: [(&'static str, bool); 8] = [
            ("beta after alpha", beta.after(alpha).map(|m| m.is_identity()).unwrap_or(false)),
            ("alpha after beta", alpha.after(beta).map(|m| m.is_identity()).unwrap_or(false)),
            ("alpha hom", alpha.hom_witness(&self.r.magma, &original.a).is_none()),
            ("R table", rebuilt.a == self.r.magma),
            ("alpha k' = k", alpha.after(&rebuilt.k).ok().as_ref() == Some(&original.k)),
            ("p alpha = p'", original.p.after(alpha).ok().as_ref() == Some(&rebuilt.p)),
            ("q alpha = q'", original.q.after(alpha).ok().as_ref() == Some(&rebuilt.q)),
            ("alpha s' = s", alpha.after(&rebuilt.s).ok().as_ref() == Some(&original.s)),
        ];
        Verdict::from_witness(checks.iter().find(|(_, ok)| !ok).map(|(name, _)| *name))
    }
}
