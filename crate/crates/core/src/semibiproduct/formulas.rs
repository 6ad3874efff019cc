//! Closed-form descriptions of the middle object: the subset `R ⊆ X × B`
//! of a pseudo-action and the operation formulas used for monoids and
//! semigroups, plus the unitary semidirect-product conditions.

use crate::action::{MagmaAction, Pair, RMagma};
use crate::algebra::{FiniteMagma, Verdict};
use crate::error::{AlgebraError, Result};
use crate::semibiproduct::{PseudoActionData, Semibiproduct};

/// `(x, b) + (x', b') = ((x + b·x' + (b + h(x')) × b')^(b + b'), b + b')`
/// with `x^b = ρ(x, b)`, `b·x = φ(b, x)`, `b × b' = γ(b, b')`.
fn semigroup_formula(x: &FiniteMagma, b: &FiniteMagma, d: &PseudoActionData, (u, v): Pair, (u2, v2): Pair) -> Pair {
    let vv = b.op(v, v2);
    let g = d.gamma.get(b.op(v, d.h.apply(u2)), v2);
    (d.rho.get(x.op(x.op(u, d.phi_pre.get(v, u2)), g), vv), vv)
}

/// The same without the `h` correction: `((x + b·x' + b × b')^(b + b'), b + b')`.
fn monoid_formula(x: &FiniteMagma, b: &FiniteMagma, d: &PseudoActionData, (u, v): Pair, (u2, v2): Pair) -> Pair {
    let vv = b.op(v, v2);
    let g = d.gamma.get(v, v2);
    (d.rho.get(x.op(x.op(u, d.phi_pre.get(v, u2)), g), vv), vv)
}

/// `R = { (x, b) | ρ(x, b) = x, h(x) + b = b }` with the semigroup formula
/// as its operation. Fails with `NotClosed` if the formula leaves `R`.
pub fn pseudo_r(x: &FiniteMagma, b: &FiniteMagma, d: &PseudoActionData) -> Result<RMagma> {
    let pairs: Vec<Pair> = (0..x.order())
        .flat_map(|u| (0..b.order()).map(move |v| (u, v)))
        .filter(|&(u, v)| d.rho.get(u, v) == u && b.op(d.h.apply(u), v) == v)
        .collect();
    if pairs.is_empty() {
        return Err(AlgebraError::Invalid("pseudo-action (R is empty)"));
    }
    let n = pairs.len();
    let mut table = Vec::with_capacity(n * n);
    for &l in &pairs {
        for &r in &pairs {
            let sum = semigroup_formula(x, b, d, l, r);
            table.push(
                pairs
                    .binary_search(&sum)
                    .map_err(|_| AlgebraError::NotClosed(l, r, sum))?,
            );
        }
    }
    Ok(RMagma {
        pairs,
        magma: FiniteMagma::from_flat(n, table)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaReport {
    /// The `h`-corrected formula reproduces `β(α(r) + α(r'))` on `R × R`.
    pub semigroup_formula: Verdict<(Pair, Pair)>,
    /// The uncorrected formula agrees with the corrected one on `R × R`.
    pub monoid_formula: Verdict<(Pair, Pair)>,
}

impl FormulaReport {
    pub fn formulas_agree(&self) -> bool {
        self.monoid_formula.holds()
    }
}

pub fn monoid_formula_check(sb: &Semibiproduct) -> Result<FormulaReport> {
    sb.require_semigroups()?;
    sb.require_valid()?;
    let d = sb.derive_tuple_unchecked();
    let mut r: Vec<Pair> = (0..sb.a.order()).map(|e| sb.beta(e)).collect();
    r.sort_unstable();
    let pairs: Vec<(Pair, Pair)> = r.iter().flat_map(|&l| r.iter().map(move |&m| (l, m))).collect();
    let semigroup = pairs.iter().copied().find(|&(l, m)| {
        let transported = sb.beta(sb.a.op(sb.alpha(l.0, l.1), sb.alpha(m.0, m.1)));
        semigroup_formula(&sb.x, &sb.b, &d, l, m) != transported
    });
    let monoid = pairs
        .iter()
        .copied()
        .find(|&(l, m)| semigroup_formula(&sb.x, &sb.b, &d, l, m) != monoid_formula(&sb.x, &sb.b, &d, l, m));
    Ok(FormulaReport {
        semigroup_formula: Verdict::from_witness(semigroup),
        monoid_formula: Verdict::from_witness(monoid),
    })
}

/// Whether a magma-action describes a semidirect product of unitary
/// magmas, with `0` the identities of `X` (under `x + x'`) and of `θ`:
///
/// ```text
/// h(x) = 0, t(b) = 0, φ(0, 0, x, b) = x, φ(x, b, 0, 0) = x,
/// φ(x, 0, 0, b) = x, φ(0, b, 0, b') = 0
/// ```
pub fn is_unitary_semidirect(action: &MagmaAction) -> Result<bool> {
    if !action.is_action() {
        return Err(AlgebraError::Invalid("magma-action"));
    }
    let ex = action
        .derived_ops()
        .xplus
        .identity_element()
        .ok_or(AlgebraError::NotUnital("X"))?;
    let eb = action
        .theta()
        .identity_element()
        .ok_or(AlgebraError::NotUnital("B"))?;
    let (nx, nb) = (action.x_order(), action.b_order());
    let phi = |x, b, x2, b2| action.phi(x, b, x2, b2);
    let xb = || (0..nx).flat_map(move |u| (0..nb).map(move |v| (u, v)));
    Ok((0..nx).all(|u| action.h().apply(u) == eb)
        && (0..nb).all(|v| action.t().apply(v) == ex)
        && xb().all(|(u, v)| phi(ex, eb, u, v) == u && phi(u, v, ex, eb) == u && phi(u, eb, ex, v) == u)
        && (0..nb).all(|v| (0..nb).all(|v2| phi(ex, v, ex, v2) == ex)))
}
