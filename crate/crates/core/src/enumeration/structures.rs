use std::collections::BTreeSet;

use crate::algebra::{canonical_form, canonical_form_anti, FiniteMagma};
use crate::error::{AlgebraError, Result};

/// Largest order for which all magmas are generated (`3^9` tables).
pub const MAX_MAGMA_ORDER: usize = 3;
/// Largest order for semigroup, monoid and group generation.
pub const MAX_STRUCTURE_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureFilter {
    Magma,
    Semigroup,
    Monoid,
    Group,
}

impl StructureFilter {
    pub fn tag(self) -> &'static str {
        match self {
            StructureFilter::Magma => "magma",
            StructureFilter::Semigroup => "semigroup",
            StructureFilter::Monoid => "monoid",
            StructureFilter::Group => "group",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "magma" => StructureFilter::Magma,
            "semigroup" => StructureFilter::Semigroup,
            "monoid" => StructureFilter::Monoid,
            "group" => StructureFilter::Group,
            _ => return None,
        })
    }

    pub fn accepts(self, m: &FiniteMagma) -> bool {
        match self {
            StructureFilter::Magma => true,
            StructureFilter::Semigroup => m.is_associative().holds(),
            StructureFilter::Monoid => m.is_associative().holds() && m.identity_element().is_some(),
            StructureFilter::Group => m.is_group(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dedup {
    None,
    Iso,
    IsoAnti,
}

impl Dedup {
    pub fn tag(self) -> &'static str {
        match self {
            Dedup::None => "none",
            Dedup::Iso => "iso",
            Dedup::IsoAnti => "iso-anti",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "none" => Dedup::None,
            "iso" => Dedup::Iso,
            "iso-anti" => Dedup::IsoAnti,
            _ => return None,
        })
    }
}

/// All tables of `order` passing `filter`, deduplicated per `dedup`, in
/// increasing lexicographic order. Under `Iso` and `IsoAnti` each class is
/// represented by its canonical (smallest) table.
pub fn enumerate_structures(order: usize, filter: StructureFilter, dedup: Dedup) -> Result<Vec<FiniteMagma>> {
    if order == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    let limit = match filter {
        StructureFilter::Magma => MAX_MAGMA_ORDER,
        _ => MAX_STRUCTURE_ORDER,
    };
    if order > limit {
        return Err(AlgebraError::OrderTooLarge {
            requested: order,
            limit,
        });
    }
    let mut labelled = Vec::new();
    let mut table = vec![usize::MAX; order * order];
    let prune = filter != StructureFilter::Magma;
    fill(order, &mut table, 0, prune, &mut |t| {
        let m = FiniteMagma::from_flat(order, t.to_vec()).expect("entries in range");
        if filter.accepts(&m) {
            labelled.push(m);
        }
    });
    Ok(match dedup {
        Dedup::None => labelled,
        Dedup::Iso => labelled.iter().map(canonical_form).collect::<BTreeSet<_>>().into_iter().collect(),
        Dedup::IsoAnti => labelled
            .iter()
            .map(canonical_form_anti)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
    })
}

/// Fills cells in row-major order, values ascending, so completed tables
/// appear in lexicographic order.
fn fill(n: usize, table: &mut [usize], cell: usize, prune: bool, emit: &mut impl FnMut(&[usize])) {
    if cell == table.len() {
        emit(table);
        return;
    }
    for v in 0..n {
        table[cell] = v;
        if !prune || partial_associative(n, table) {
            fill(n, table, cell + 1, prune, emit);
        }
    }
    table[cell] = usize::MAX;
}

/// No triple whose four products are already assigned breaks associativity.
fn partial_associative(n: usize, t: &[usize]) -> bool {
    let get = |a: usize, b: usize| t[a * n + b];
    for x in 0..n {
        for y in 0..n {
            let xy = get(x, y);
            if xy == usize::MAX {
                continue;
            }
            for z in 0..n {
                let yz = get(y, z);
                if yz == usize::MAX {
                    continue;
                }
                let (l, r) = (get(xy, z), get(x, yz));
                if l != usize::MAX && r != usize::MAX && l != r {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn labelled_counts() {
        let count = |n, f| enumerate_structures(n, f, Dedup::None).unwrap().len();
        assert_eq!(count(1, StructureFilter::Magma), 1);
        assert_eq!(count(2, StructureFilter::Magma), 16);
        assert_eq!(count(2, StructureFilter::Semigroup), 8);
        assert_eq!(count(3, StructureFilter::Semigroup), 113);
        assert_eq!(count(2, StructureFilter::Group), 2);
        assert_eq!(count(3, StructureFilter::Group), 3);
    }

    #[test]
    fn classes_up_to_iso() {
        let count = |n, d| enumerate_structures(n, StructureFilter::Semigroup, d).unwrap().len();
        assert_eq!(count(2, Dedup::Iso), 5);
        assert_eq!(count(2, Dedup::IsoAnti), 4);
        assert_eq!(count(3, Dedup::IsoAnti), 18);
        assert_eq!(count(3, Dedup::Iso), 24);
        assert_eq!(count(4, Dedup::IsoAnti), 126);
    }

    #[test]
    fn order_two_classes_are_the_four_named() {
        let classes = enumerate_structures(2, StructureFilter::Semigroup, Dedup::IsoAnti).unwrap();
        for i in 1..=4 {
            let named = canonical_form_anti(&catalog::order_two_semigroup(i));
            assert!(classes.contains(&named), "M{i}");
        }
    }

    #[test]
    fn output_is_sorted() {
        let all = enumerate_structures(3, StructureFilter::Semigroup, Dedup::None).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn limits() {
        assert!(enumerate_structures(4, StructureFilter::Magma, Dedup::None).is_err());
        assert!(enumerate_structures(5, StructureFilter::Semigroup, Dedup::None).is_err());
        assert_eq!(enumerate_structures(0, StructureFilter::Magma, Dedup::None), Err(AlgebraError::EmptyCarrier));
    }
}
