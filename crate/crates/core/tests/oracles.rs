//! Independent brute-force oracles. Nothing here calls the library's
//! verification or enumeration code; structures are plain nested arrays
//! and every law is checked by direct loops.

use sbp_core::catalog;
use sbp_core::enumeration::{enumerate_semibiproducts, EnumSpec};

type Table = Vec<Vec<usize>>;

fn order_two(i: usize) -> Table {
    match i {
        1 => vec![vec![0, 0], vec![0, 1]],
        2 => vec![vec![0, 0], vec![1, 1]],
        3 => vec![vec![0, 1], vec![1, 0]],
        4 => vec![vec![0, 0], vec![0, 0]],
        _ => unreachable!(),
    }
}

fn all_functions(dom: usize, cod: usize) -> Vec<Vec<usize>> {
    (0..cod.pow(dom as u32))
        .map(|mut c| {
            (0..dom)
                .map(|_| {
                    let v = c % cod;
                    c /= cod;
                    v
                })
                .collect()
        })
        .collect()
}

fn associative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

fn hom(f: &[usize], src: &Table, dst: &Table) -> bool {
    let n = src.len();
    (0..n).all(|a| (0..n).all(|b| f[src[a][b]] == dst[f[a]][f[b]]))
}

fn all_semigroups(n: usize) -> Vec<Table> {
    all_functions(n * n, n)
        .into_iter()
        .map(|flat| flat.chunks(n).map(<[usize]>::to_vec).collect())
        .filter(associative)
        .collect()
}

type Solution = (Table, Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>);

fn labelled_solutions(x: &Table, b: &Table, middles: &[Table]) -> Vec<Solution> {
    let (nx, nb) = (x.len(), b.len());
    let mut out = Vec::new();
    for a in middles {
        let na = a.len();
        let ks: Vec<_> = all_functions(nx, na).into_iter().filter(|k| hom(k, x, a)).collect();
        let ps: Vec<_> = all_functions(na, nb).into_iter().filter(|p| hom(p, a, b)).collect();
        let qs = all_functions(na, nx);
        let ss = all_functions(nb, na);
        for k in &ks {
            for p in &ps {
                for q in &qs {
                    if (0..nx).any(|u| q[k[u]] != u) {
                        continue;
                    }
                    for s in &ss {
                        let ok = (0..nb).all(|v| p[s[v]] == v) && (0..na).all(|e| a[k[q[e]]][s[p[e]]] == e);
                        if ok {
                            out.push((a.clone(), k.clone(), p.clone(), q.clone(), s.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

fn permutations3() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

/// Smallest transport of a solution along a relabelling of the middle.
fn orbit_key(sol: &Solution) -> Solution {
    let (a, k, p, q, s) = sol;
    permutations3()
        .into_iter()
        .map(|pi| {
            let mut inv = [0; 3];
            for (i, &v) in pi.iter().enumerate() {
                inv[v] = i;
            }
            let mut a2 = vec![vec![0; 3]; 3];
            for u in 0..3 {
                for v in 0..3 {
                    a2[pi[u]][pi[v]] = pi[a[u][v]];
                }
            }
            (
                a2,
                k.iter().map(|&e| pi[e]).collect(),
                (0..3).map(|e| p[inv[e]]).collect(),
                (0..3).map(|e| q[inv[e]]).collect(),
                s.iter().map(|&e| pi[e]).collect(),
            )
        })
        .min()
        .expect("nonempty")
}

#[test]
fn table_counts_match_the_oracle() {
    let middles = all_semigroups(3);
    assert_eq!(middles.len(), 113);
    for i in 1..=4 {
        for j in 1..=4 {
            let sols = labelled_solutions(&order_two(i), &order_two(j), &middles);
            let mut classes: Vec<Solution> = sols.iter().map(orbit_key).collect();
            classes.sort();
            classes.dedup();
            let spec = EnumSpec::new(catalog::order_two_semigroup(i), catalog::order_two_semigroup(j), 3);
            let lib = enumerate_semibiproducts(&spec).unwrap();
            assert_eq!(lib.labelled_count, sols.len(), "labelled ({i},{j})");
            assert_eq!(lib.count(), classes.len(), "middle-iso ({i},{j})");
            let lib_keys: Vec<Solution> = lib
                .solutions
                .iter()
                .map(|sb| {
                    (
                        sb.a.rows().map(<[usize]>::to_vec).collect(),
                        sb.k.values().to_vec(),
                        sb.p.values().to_vec(),
                        sb.q.values().to_vec(),
                        sb.s.values().to_vec(),
                    )
                })
                .collect();
            assert_eq!(lib_keys, classes, "representatives ({i},{j})");
        }
    }
}

/// The (X1, B1) entry: six classes, of which the two tabulated ones share
/// `k = (1, 2)`, `p = (1, 2, 1)`, `q = (1, 2, 2)`, `s = (3, 2)`.
#[test]
fn first_entry_has_six_classes() {
    let middles = all_semigroups(3);
    let sols = labelled_solutions(&order_two(1), &order_two(1), &middles);
    let mut classes: Vec<Solution> = sols.iter().map(orbit_key).collect();
    classes.sort();
    classes.dedup();
    assert_eq!(sols.len(), 36);
    assert_eq!(classes.len(), 6);
    let printed = |a: Table| (a, vec![0, 1], vec![0, 1, 0], vec![0, 1, 1], vec![2, 1]);
    for a in [
        vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 0]],
        vec![vec![0, 0, 0], vec![0, 1, 2], vec![2, 2, 2]],
    ] {
        assert!(classes.contains(&orbit_key(&printed(a))));
    }
    // two more with the same maps
    for a in [
        vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 0, 0]],
        vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]],
    ] {
        assert!(sols.contains(&printed(a)));
    }
}

#[test]
fn relabelling_ends_by_an_automorphism_keeps_counts() {
    // the swap is an automorphism of the left-zero semigroup M2
    let swap = [1usize, 0];
    let m2 = order_two(2);
    let swapped: Table = (0..2)
        .map(|u| (0..2).map(|v| swap[m2[swap[u]][swap[v]]]).collect())
        .collect();
    assert_eq!(swapped, m2);
    let middles = all_semigroups(3);
    let sols = labelled_solutions(&m2, &order_two(1), &middles);
    let moved: Vec<Solution> = sols
        .iter()
        .map(|(a, k, p, q, s)| {
            let k2 = (0..2).map(|u| k[swap[u]]).collect();
            let q2 = q.iter().map(|&u| swap[u]).collect();
            (a.clone(), k2, p.clone(), q2, s.clone())
        })
        .collect();
    let mut before: Vec<_> = sols.iter().map(orbit_key).collect();
    let mut after: Vec<_> = moved.iter().map(orbit_key).collect();
    before.sort();
    before.dedup();
    after.sort();
    after.dedup();
    assert_eq!(before.len(), after.len());
    assert_eq!(before.len(), 4);
}

/// Counts the valid six-tuples at |X| = |B| = 1 and 2 x 1 by hand-written
/// conditions.
#[test]
fn small_census_counts_match_the_oracle() {
    use sbp_core::enumeration::action_census;
    // |X| = 2, |B| = 1: θ, h trivial; conditions reduce to φ(x, ·, t, ·) = x
    // and closure, which is automatic since R ⊆ X.
    let mut valid = 0;
    for phi in all_functions(4, 2) {
        for t in 0..2 {
            let f = |x: usize, x2: usize| phi[x * 2 + x2];
            let in_r = |x: usize| f(x, t) == x;
            if (0..2).all(in_r) && in_r(t) {
                valid += 1;
            }
        }
    }
    assert_eq!(action_census(2, 1).unwrap().summary.valid, valid);
    assert_eq!(action_census(1, 1).unwrap().summary.valid, 1);
}
