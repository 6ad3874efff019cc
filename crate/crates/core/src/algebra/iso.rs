use itertools::Itertools;

use crate::algebra::FiniteMagma;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

/// Relabels `m` along `perm`: the result satisfies
/// `out.op(perm[a], perm[b]) = perm[m.op(a, b)]`.
pub fn apply_permutation(m: &FiniteMagma, perm: &[usize]) -> FiniteMagma {
    let n = m.order();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[perm[a] * n + perm[b]] = perm[m.op(a, b)];
        }
    }
    FiniteMagma::from_flat(n, table).expect("relabelling preserves closure")
}

/// A bijection between two magmas preserving the operation, or reversing
/// it when `anti` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub permutation: Vec<usize>,
    pub anti: bool,
}

fn preserves(m1: &FiniteMagma, m2: &FiniteMagma, perm: &[usize], anti: bool) -> bool {
    let n = m1.order();
    (0..n).all(|a| {
        (0..n).all(|b| {
            let rhs = if anti {
                m2.op(perm[b], perm[a])
            } else {
                m2.op(perm[a], perm[b])
            };
            perm[m1.op(a, b)] == rhs
        })
    })
}

/// Finds the lexicographically first permutation that is an isomorphism
/// `m1 -> m2` (or, with `allow_anti`, an anti-isomorphism).
pub fn are_equivalent(m1: &FiniteMagma, m2: &FiniteMagma, allow_anti: bool) -> Option<Equivalence> {
    if m1.order() != m2.order() {
        return None;
    }
    for perm in permutations(m1.order()) {
        if preserves(m1, m2, &perm, false) {
            return Some(Equivalence {
                permutation: perm,
                anti: false,
            });
        }
        if allow_anti && preserves(m1, m2, &perm, true) {
            return Some(Equivalence {
                permutation: perm,
                anti: true,
            });
        }
    }
    None
}

/// The lexicographically smallest table among all relabellings of `m`.
pub fn canonical_form(m: &FiniteMagma) -> FiniteMagma {
    permutations(m.order())
        .map(|perm| apply_permutation(m, &perm))
        .min()
        .expect("at least one permutation")
}

/// Canonical form up to isomorphism or anti-isomorphism.
pub fn canonical_form_anti(m: &FiniteMagma) -> FiniteMagma {
    canonical_form(m).min(canonical_form(&m.transpose()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate_maps;

    fn all_order_two() -> Vec<FiniteMagma> {
        enumerate_maps(4, 2)
            .map(|f| FiniteMagma::from_flat(2, f.values().to_vec()).unwrap())
            .collect()
    }

    fn order_two_m(i: usize) -> FiniteMagma {
        let rows: [[[usize; 2]; 2]; 4] = [
            [[1, 1], [1, 2]],
            [[1, 1], [2, 2]],
            [[1, 2], [2, 1]],
            [[1, 1], [1, 1]],
        ];
        FiniteMagma::from_rows_one_based(&rows[i]).unwrap()
    }

    #[test]
    fn self_equivalence_is_identity() {
        for m in all_order_two() {
            let eq = are_equivalent(&m, &m, false).unwrap();
            assert_eq!(eq.permutation, vec![0, 1]);
            assert!(!eq.anti);
        }
    }

    #[test]
    fn commutative_and_noncommutative_are_inequivalent() {
        assert!(are_equivalent(&order_two_m(0), &order_two_m(1), true).is_none());
        assert!(are_equivalent(&order_two_m(0), &FiniteMagma::trivial(), true).is_none());
    }

    #[test]
    fn four_order_two_semigroups_up_to_anti_isomorphism() {
        let semigroups: Vec<_> = all_order_two()
            .into_iter()
            .filter(|m| m.is_associative().holds())
            .collect();
        assert_eq!(semigroups.len(), 8);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(are_equivalent(&order_two_m(i), &order_two_m(j), true).is_some(), i == j);
            }
        }
        for s in &semigroups {
            assert!((0..4).any(|i| are_equivalent(s, &order_two_m(i), true).is_some()));
        }
        let iso_classes: std::collections::BTreeSet<_> =
            semigroups.iter().map(canonical_form).collect();
        let anti_classes: std::collections::BTreeSet<_> =
            semigroups.iter().map(canonical_form_anti).collect();
        assert_eq!(iso_classes.len(), 5);
        assert_eq!(anti_classes.len(), 4);
    }

    #[test]
    fn canonical_form_decides_isomorphism_at_order_two() {
        let all = all_order_two();
        for a in &all {
            assert_eq!(canonical_form(&canonical_form(a)), canonical_form(a));
            for b in &all {
                assert_eq!(
                    canonical_form(a) == canonical_form(b),
                    are_equivalent(a, b, false).is_some()
                );
            }
        }
    }

    #[test]
    fn equivalence_is_transitive_at_order_two() {
        let all = all_order_two();
        for a in &all {
            for b in &all {
                let ab = are_equivalent(a, b, true);
                assert_eq!(ab.is_some(), are_equivalent(b, a, true).is_some());
                for c in &all {
                    if ab.is_some() && are_equivalent(b, c, true).is_some() {
                        assert!(are_equivalent(a, c, true).is_some());
                    }
                }
            }
        }
    }
}
