//! Six-tuple magma-actions `(X, B, θ, φ, h, t)`.
//!
//! `X` and `B` are bare carriers; `θ` is a magma on `B`, `φ` a four-argument
//! function `X × B × X × B → X`, and `h: X → B`, `t: B → X` plain maps. The
//! tuple is an action when `h` is compatible with `θ` on the induced
//! operation of `X` and the set
//!
//! ```text
//! R = { (x, b) | φ(x, h(x), t(b), b) = x,  θ(h(x), b) = b }
//! ```
//!
//! contains every `(x, h(x))` and `(t(b), b)` and is closed under
//! `(x, b) + (x', b') = (φ(x, b, x', b'), θ(b, b'))`.

use crate::algebra::{BinaryTable, FiniteMagma, FiniteMap, Verdict};
use crate::error::{AlgebraError, Result};

/// A member of `X × B`.
pub type Pair = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MagmaAction {
    x_order: usize,
    b_order: usize,
    theta: FiniteMagma,
    /// Row-major over `(x, b, x', b')`.
    phi: Vec<usize>,
    h: FiniteMap,
    t: FiniteMap,
}

/// The set `R` with its induced operation; `magma` is indexed by position
/// in `pairs`, which are listed in lexicographic `(x, b)` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMagma {
    pub pairs: Vec<Pair>,
    pub magma: FiniteMagma,
}

impl RMagma {
    pub fn index_of(&self, pair: Pair) -> Option<usize> {
        self.pairs.binary_search(&pair).ok()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: Pair) -> bool {
        self.index_of(pair).is_some()
    }
}

/// Which defining condition of an action failed first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionFailure {
    /// `h(x + x') != θ(h(x), h(x'))`.
    HomCompat { x: usize, x2: usize },
    /// `(x, h(x))` is not in `R`.
    HInR { x: usize },
    /// `(t(b), b)` is not in `R`.
    TInR { b: usize },
    /// `R` is not closed under the induced operation.
    RClosure { left: Pair, right: Pair },
}

impl ActionFailure {
    pub fn tag(&self) -> &'static str {
        match self {
            ActionFailure::HomCompat { .. } => "hom-compat",
            ActionFailure::HInR { .. } => "h-in-R",
            ActionFailure::TInR { .. } => "t-in-R",
            ActionFailure::RClosure { .. } => "R-closure",
        }
    }
}

pub type PairWitness = (Pair, Pair);
pub type TripleWitness = (Pair, Pair, Pair);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionReport {
    pub is_action: bool,
    pub failed_condition: Option<ActionFailure>,
    pub representable: Option<Verdict<PairWitness>>,
    pub associative: Option<Verdict<TripleWitness>>,
}

/// The four partial operations `φ` restricts to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedOps {
    /// `x + x' = φ(x, h(x), x', h(x'))`
    pub xplus: FiniteMagma,
    /// `x^b = φ(x, h(x), t(b), b)`
    pub xpow: BinaryTable,
    /// `b · x = φ(t(b), b, x, h(x))`
    pub bdot: BinaryTable,
    /// `b × b' = φ(t(b), b, t(b'), b')`
    pub btimes: BinaryTable,
}

impl MagmaAction {
    pub fn new(theta: FiniteMagma, phi: Vec<usize>, h: FiniteMap, t: FiniteMap) -> Result<Self> {
        let x_order = h.dom();
        let b_order = theta.order();
        if h.cod() != b_order || t.dom() != b_order || t.cod() != x_order {
            return Err(AlgebraError::DimensionMismatch(format!(
                "h: {} -> {} and t: {} -> {} do not fit |X| = {x_order}, |B| = {b_order}",
                h.dom(),
                h.cod(),
                t.dom(),
                t.cod()
            )));
        }
        let expected = x_order * b_order * x_order * b_order;
        if phi.len() != expected {
            return Err(AlgebraError::DimensionMismatch(format!(
                "phi has {} entries, expected {expected}",
                phi.len()
            )));
        }
        if let Some(i) = phi.iter().position(|&v| v >= x_order) {
            return Err(AlgebraError::MapValueOutOfRange {
                index: i,
                value: phi[i],
                cod: x_order,
            });
        }
        Ok(MagmaAction {
            x_order,
            b_order,
            theta,
            phi,
            h,
            t,
        })
    }

    /// Builds `φ` from a closure over `(x, b, x', b')`.
    pub fn from_fn(
        theta: FiniteMagma,
        h: FiniteMap,
        t: FiniteMap,
        phi: impl Fn(usize, usize, usize, usize) -> usize,
    ) -> Result<Self> {
        let (n, m) = (h.dom(), theta.order());
        let mut table = Vec::with_capacity(n * m * n * m);
        for x in 0..n {
            for b in 0..m {
                for x2 in 0..n {
                    for b2 in 0..m {
                        table.push(phi(x, b, x2, b2));
                    }
                }
            }
        }
        Self::new(theta, table, h, t)
    }

    /// `X = B`, `h = t = 1`, `φ(x, b, x', b') = θ(x, b')`. An action exactly
    /// when every element of `θ` is idempotent.
    pub fn idempotent_diagonal(theta: FiniteMagma) -> Self {
        let n = theta.order();
        let id = FiniteMap::identity(n);
        let op = theta.clone();
        Self::from_fn(theta, id.clone(), id, move |x, _, _, b2| op.op(x, b2))
            .expect("well-formed by construction")
    }

    pub fn x_order(&self) -> usize {
        self.x_order
    }

    pub fn b_order(&self) -> usize {
        self.b_order
    }

    pub fn theta(&self) -> &FiniteMagma {
        &self.theta
    }

    pub fn h(&self) -> &FiniteMap {
        &self.h
    }

    pub fn t(&self) -> &FiniteMap {
        &self.t
    }

    pub fn phi_table(&self) -> &[usize] {
        &self.phi
    }

    #[inline]
    fn phi_index(&self, x: usize, b: usize, x2: usize, b2: usize) -> usize {
        ((x * self.b_order + b) * self.x_order + x2) * self.b_order + b2
    }

    #[inline]
    pub fn phi(&self, x: usize, b: usize, x2: usize, b2: usize) -> usize {
        self.phi[self.phi_index(x, b, x2, b2)]
    }

    /// Overwrites `φ` in place; used by exhaustive searches that sweep the
    /// `φ` table while keeping the other components fixed.
    pub(crate) fn set_phi(&mut self, phi: &[usize]) {
        self.phi.copy_from_slice(phi);
    }

    #[inline]
    fn in_r(&self, x: usize, b: usize) -> bool {
        let hx = self.h.apply(x);
        self.phi(x, hx, self.t.apply(b), b) == x && self.theta.op(hx, b) == b
    }

    #[inline]
    fn r_op(&self, (x, b): Pair, (x2, b2): Pair) -> Pair {
        (self.phi(x, b, x2, b2), self.theta.op(b, b2))
    }

    fn r_pairs(&self) -> Vec<Pair> {
        let mut pairs = Vec::new();
        for x in 0..self.x_order {
            for b in 0..self.b_order {
                if self.in_r(x, b) {
                    pairs.push((x, b));
                }
            }
        }
        pairs
    }

    /// The set `R` and its induced operation.
    pub fn compute_r(&self) -> Result<RMagma> {
        let pairs = self.r_pairs();
        if pairs.is_empty() {
            return Err(AlgebraError::Invalid("magma-action (R is empty)"));
        }
        let n = pairs.len();
        let mut table = Vec::with_capacity(n * n);
        for &l in &pairs {
            for &r in &pairs {
                let sum = self.r_op(l, r);
                match pairs.binary_search(&sum) {
                    Ok(i) => table.push(i),
                    Err(_) => return Err(AlgebraError::NotClosed(l, r, sum)),
                }
            }
        }
        Ok(RMagma {
            pairs,
            magma: FiniteMagma::from_flat(n, table)?,
        })
    }

    /// Checks the defining conditions in order: compatibility of `h`, then
    /// `(x, h(x)) ∈ R`, then `(t(b), b) ∈ R`, then closure of `R`. The first
    /// failure is reported with its smallest witness. On success the
    /// representability and associativity verdicts are filled in.
    pub fn verify(&self) -> ActionReport {
        match self.first_failure() {
            Some(f) => ActionReport {
                is_action: false,
                failed_condition: Some(f),
                representable: None,
                associative: None,
            },
            None => ActionReport {
                is_action: true,
                failed_condition: None,
                representable: Some(self.is_representable()),
                associative: Some(
                    self.is_associative_action()
                        .expect("R is closed on a verified action"),
                ),
            },
        }
    }

    pub fn is_action(&self) -> bool {
        self.first_failure().is_none()
    }

    fn first_failure(&self) -> Option<ActionFailure> {
        let (n, m) = (self.x_order, self.b_order);
        for x in 0..n {
            for x2 in 0..n {
                let (hx, hx2) = (self.h.apply(x), self.h.apply(x2));
                if self.h.apply(self.phi(x, hx, x2, hx2)) != self.theta.op(hx, hx2) {
                    return Some(ActionFailure::HomCompat { x, x2 });
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| !self.in_r(x, self.h.apply(x))) {
            return Some(ActionFailure::HInR { x });
        }
        if let Some(b) = (0..m).find(|&b| !self.in_r(self.t.apply(b), b)) {
            return Some(ActionFailure::TInR { b });
        }
        let pairs = self.r_pairs();
        for &l in &pairs {
            for &r in &pairs {
                let (x, b) = self.r_op(l, r);
                if !self.in_r(x, b) {
                    return Some(ActionFailure::RClosure { left: l, right: r });
                }
            }
        }
        None
    }

    pub fn derived_ops(&self) -> DerivedOps {
        let (n, m) = (self.x_order, self.b_order);
        let (h, t) = (&self.h, &self.t);
        let xplus = FiniteMagma::from_fn(n, |x, x2| self.phi(x, h.apply(x), x2, h.apply(x2)))
            .expect("phi is closed in X");
        DerivedOps {
            xplus,
            xpow: BinaryTable::from_fn(n, m, n, |x, b| self.phi(x, h.apply(x), t.apply(b), b)),
            bdot: BinaryTable::from_fn(m, n, n, |b, x| self.phi(t.apply(b), b, x, h.apply(x))),
            btimes: BinaryTable::from_fn(m, m, n, |b, b2| self.phi(t.apply(b), b, t.apply(b2), b2)),
        }
    }

    /// The right-hand side of the representability identity,
    /// `((x + b·x') + θ(b, h(x')) × b')^θ(b, b')`.
    fn represented_phi(&self, ops: &DerivedOps, (x, b): Pair, (x2, b2): Pair) -> usize {
        let left = ops.xplus.op(x, ops.bdot.get(b, x2));
        let right = ops.btimes.get(self.theta.op(b, self.h.apply(x2)), b2);
        ops.xpow.get(ops.xplus.op(left, right), self.theta.op(b, b2))
    }

    /// Checks that `φ` is recovered from its four restrictions on every
    /// pair of members of `R`.
    pub fn is_representable(&self) -> Verdict<PairWitness> {
        let ops = self.derived_ops();
        let pairs = self.r_pairs();
        for &l in &pairs {
            for &r in &pairs {
                if self.phi(l.0, l.1, r.0, r.1) != self.represented_phi(&ops, l, r) {
                    return Verdict::Fails((l, r));
                }
            }
        }
        Verdict::Holds
    }

    /// Like [`is_representable`](Self::is_representable) but quantified
    /// over all of `X × B`.
    pub fn is_representable_everywhere(&self) -> Verdict<PairWitness> {
        let ops = self.derived_ops();
        let all: Vec<Pair> = (0..self.x_order)
            .flat_map(|x| (0..self.b_order).map(move |b| (x, b)))
            .collect();
        for &l in &all {
            for &r in &all {
                if self.phi(l.0, l.1, r.0, r.1) != self.represented_phi(&ops, l, r) {
                    return Verdict::Fails((l, r));
                }
            }
        }
        Verdict::Holds
    }

    /// Whether `(R, +)` is a semigroup; the witness is the smallest failing
    /// triple of `R` members in `(x, b)` order.
    pub fn is_associative_action(&self) -> Result<Verdict<TripleWitness>> {
        let r = self.compute_r()?;
        Ok(match r.magma.is_associative() {
            Verdict::Holds => Verdict::Holds,
            Verdict::Fails((i, j, k)) => Verdict::Fails((r.pairs[i], r.pairs[j], r.pairs[k])),
        })
    }
}
