//! Small named structures: the four order-2 semigroups, a representable
//! but non-associative action, the order-3 semibiproducts with order-2 ends
//! worked out by hand, and a few group extensions.

use crate::action::MagmaAction;
use crate::algebra::{permutations, FiniteMagma, FiniteMap};
use crate::semibiproduct::{build_group_sbp, PseudoActionData, Semibiproduct};
use crate::algebra::BinaryTable;

/// The order-2 semigroups `M1..M4`, one per class up to isomorphism or
/// anti-isomorphism (1-based tables):
///
/// ```text
/// M1 = [1 1; 1 2]   M2 = [1 1; 2 2]   M3 = [1 2; 2 1]   M4 = [1 1; 1 1]
/// ```
pub fn order_two_semigroup(i: usize) -> FiniteMagma {
    let rows: [[usize; 2]; 2] = match i {
        1 => [[1, 1], [1, 2]],
        2 => [[1, 1], [2, 2]],
        3 => [[1, 2], [2, 1]],
        4 => [[1, 1], [1, 1]],
        _ => panic!("order-two semigroups are numbered 1..=4"),
    };
    FiniteMagma::from_rows_one_based(&rows).expect("closed")
}

/// `X = B = {1, 2}`, `θ(1, 2) = 2` and `θ = 1` otherwise, `h = t = 1`,
/// and `φ` as tabulated below (1-based). `R` is all of `X × B` and is not
/// associative, yet `φ` is recovered from its restrictions.
pub fn representable_nonassociative_action() -> MagmaAction {
    // listed with x varying fastest, then b, x', b'
    const PHI: [usize; 16] = [1, 2, 1, 2, 2, 1, 1, 2, 1, 2, 1, 2, 2, 1, 1, 2];
    let theta = FiniteMagma::from_rows_one_based(&[[1, 2], [1, 1]]).expect("closed");
    let one = FiniteMap::constant(2, 2, 0).expect("closed");
    MagmaAction::from_fn(theta, one.clone(), one, |x, b, x2, b2| {
        PHI[x + 2 * b + 4 * x2 + 8 * b2] - 1
    })
    .expect("well-formed")
}

fn sbp(
    x: FiniteMagma,
    b: FiniteMagma,
    a: &[[usize; 3]; 3],
    k: [usize; 2],
    p: [usize; 3],
    q: [usize; 3],
    s: [usize; 2],
) -> Semibiproduct {
    let a = FiniteMagma::from_rows_one_based(a).expect("closed");
    Semibiproduct::new(
        x,
        a,
        b,
        FiniteMap::from_one_based(3, &k).expect("closed"),
        FiniteMap::from_one_based(2, &p).expect("closed"),
        FiniteMap::from_one_based(2, &q).expect("closed"),
        FiniteMap::from_one_based(3, &s).expect("closed"),
    )
    .expect("dimensions fit")
}

const A_COMM: [[usize; 3]; 3] = [[1, 1, 1], [1, 2, 3], [1, 3, 1]];

/// The hand-tabulated order-3 semibiproducts with order-2 ends, exactly as
/// printed:
///
/// 1. `X = B = M1`: two middle tables with shared `k, p, q, s`;
/// 2. `X = M1, B = M3`: two retractions `q`;
/// 3. `X = M2, B = M1`: two sections times two retractions;
/// 4. `X = M3, B = M1`: two retractions `q`.
///
/// Cases 2 and 3 repeat the middle table of case 1, with which the listed
/// maps do not form semibiproducts; see [`corrected_case`].
pub fn printed_case(case: usize) -> Vec<Semibiproduct> {
    tabulated_case(case, &A_COMM, &A_COMM)
}

/// [`printed_case`] with the middle tables of cases 2 and 3 replaced by
/// the unique tables (found by exhaustive search) that make every listed
/// map combination valid. Cases 1 and 4 are unchanged.
pub fn corrected_case(case: usize) -> Vec<Semibiproduct> {
    const A_CASE2: [[usize; 3]; 3] = [[1, 1, 3], [1, 2, 3], [3, 3, 1]];
    const A_CASE3: [[usize; 3]; 3] = [[1, 1, 3], [2, 2, 3], [3, 3, 3]];
    tabulated_case(case, &A_CASE2, &A_CASE3)
}

fn tabulated_case(case: usize, a_case2: &[[usize; 3]; 3], a_case3: &[[usize; 3]; 3]) -> Vec<Semibiproduct> {
    let m = order_two_semigroup;
    const Q1: [usize; 3] = [1, 2, 1];
    const Q2: [usize; 3] = [1, 2, 2];
    match case {
        1 => {
            let a2 = [[1, 1, 1], [1, 2, 3], [3, 3, 3]];
            [A_COMM, a2]
                .iter()
                .map(|a| sbp(m(1), m(1), a, [1, 2], [1, 2, 1], Q2, [3, 2]))
                .collect()
        }
        2 => [Q1, Q2]
            .into_iter()
            .map(|q| sbp(m(1), m(3), a_case2, [1, 2], [1, 1, 2], q, [2, 3]))
            .collect(),
        3 => [[3, 1], [3, 2]]
            .into_iter()
            .flat_map(|s| {
                [Q1, Q2]
                    .into_iter()
                    .map(move |q| sbp(m(2), m(1), a_case3, [1, 2], [2, 2, 1], q, s))
            })
            .collect(),
        4 => {
            let a = [[1, 2, 3], [2, 1, 3], [3, 3, 3]];
            [Q1, Q2]
                .into_iter()
                .map(|q| sbp(m(3), m(1), &a, [1, 2], [2, 2, 1], q, [3, 1]))
                .collect()
        }
        _ => panic!("hand-tabulated cases are numbered 1..=4"),
    }
}

/// `Z4 → Z2` by reduction mod 2 with section `(0, 1)`.
pub fn cyclic_four_over_two() -> Semibiproduct {
    let z4 = FiniteMagma::cyclic(4).expect("n >= 1");
    let z2 = FiniteMagma::cyclic(2).expect("n >= 1");
    let p = FiniteMap::from_fn(4, 2, |e| e % 2).expect("closed");
    let s = FiniteMap::new(4, vec![0, 1]).expect("closed");
    build_group_sbp(&p, &s, &z4, &z2).expect("valid extension")
}

/// `Z2 × Z2 → Z2` by the first projection; `(u, v)` has label `2u + v`.
/// The section sends `1` to `(1, 0)` when `variant = 0` and to `(1, 1)`
/// when `variant = 1`; both are homomorphisms.
pub fn klein_over_two(variant: usize) -> Semibiproduct {
    assert!(variant < 2);
    let z2 = FiniteMagma::cyclic(2).expect("n >= 1");
    let v4 = z2.product(&z2);
    let p = FiniteMap::from_fn(4, 2, |e| e / 2).expect("closed");
    let s = FiniteMap::new(4, vec![0, 2 + variant]).expect("closed");
    build_group_sbp(&p, &s, &v4, &z2).expect("valid extension")
}

/// The symmetric group on three points; permutations are labelled in
/// lexicographic order and composed as functions, `(σ τ)(j) = σ(τ(j))`.
pub fn symmetric_group_three() -> (FiniteMagma, Vec<Vec<usize>>) {
    let perms: Vec<Vec<usize>> = permutations(3).collect();
    let table = FiniteMagma::from_fn(6, |l, r| {
        let composed: Vec<usize> = (0..3).map(|j| perms[l][perms[r][j]]).collect();
        perms.iter().position(|p| *p == composed).expect("closed")
    })
    .expect("closed");
    (table, perms)
}

/// `S3 → Z2` by the sign, with the section sending `1` to the
/// `which`-th transposition (0, 1 or 2).
pub fn symmetric_over_sign(which: usize) -> Semibiproduct {
    let (s3, perms) = symmetric_group_three();
    let z2 = FiniteMagma::cyclic(2).expect("n >= 1");
    let odd = |p: &[usize]| {
        let inversions = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        inversions % 2
    };
    let sign = FiniteMap::from_fn(6, 2, |e| odd(&perms[e])).expect("closed");
    let transpositions: Vec<usize> = (0..6)
        .filter(|&e| odd(&perms[e]) == 1)
        .collect();
    let s = FiniteMap::new(6, vec![0, transpositions[which]]).expect("closed");
    build_group_sbp(&sign, &s, &s3, &z2).expect("valid extension")
}

/// `X ⇄ X × B ⇄ B` for unital magmas; `(x, b)` has label `x * |B| + b`.
pub fn direct_product(x: &FiniteMagma, b: &FiniteMagma) -> Semibiproduct {
    let ex = x.identity_element().expect("X must be unital");
    let eb = b.identity_element().expect("B must be unital");
    let nb = b.order();
    let n = x.order() * nb;
    Semibiproduct::new(
        x.clone(),
        x.product(b),
        b.clone(),
        FiniteMap::from_fn(x.order(), n, |u| u * nb + eb).expect("closed"),
        FiniteMap::from_fn(n, nb, |e| e % nb).expect("closed"),
        FiniteMap::from_fn(n, x.order(), |e| e / nb).expect("closed"),
        FiniteMap::from_fn(nb, n, |v| ex * nb + v).expect("closed"),
    )
    .expect("dimensions fit")
}

/// Choice of `h: ({0,1}, ·) → ({0,1}, ·)` in the multiplicative chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainH {
    One,
    Identity,
    Zero,
}

impl ChainH {
    fn map(self) -> FiniteMap {
        match self {
            ChainH::One => FiniteMap::constant(2, 2, 1),
            ChainH::Identity => Ok(FiniteMap::identity(2)),
            ChainH::Zero => FiniteMap::constant(2, 2, 0),
        }
        .expect("closed")
    }
}

/// `X = B = ({0,1}, ·)` (labels equal the numbers) with trivial correction
/// system, pre-action and factor system: `ρ(x, b) = x`, `φ(b, x) = x`,
/// `γ(b, b') = 1`, and `t = 1`.
pub fn multiplicative_chain(h: ChainH) -> (FiniteMagma, FiniteMagma, PseudoActionData) {
    let mult = FiniteMagma::from_rows(&[[0, 0], [0, 1]]).expect("closed");
    let data = PseudoActionData {
        h: h.map(),
        rho: BinaryTable::from_fn(2, 2, 2, |x, _| x),
        phi_pre: BinaryTable::from_fn(2, 2, 2, |_, x| x),
        gamma: BinaryTable::from_fn(2, 2, 2, |_, _| 1),
        t: FiniteMap::constant(2, 2, 1).expect("closed"),
    };
    (mult.clone(), mult, data)
}

/// The magma-action of [`multiplicative_chain`]: `θ = ·`,
/// `φ(x, b, x', b') = x · x'`, `t = 1`. Valid for `h ∈ {One, Identity}`.
pub fn chain_action(h: ChainH) -> MagmaAction {
    let mult = FiniteMagma::from_rows(&[[0, 0], [0, 1]]).expect("closed");
    let op = mult.clone();
    MagmaAction::from_fn(mult, h.map(), FiniteMap::constant(2, 2, 1).expect("closed"), move |x, _, x2, _| {
        op.op(x, x2)
    })
    .expect("well-formed")
}
