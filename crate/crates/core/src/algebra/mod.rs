//! Finite structures as Cayley tables, total maps between finite carriers,
//! and the isomorphism machinery shared by every other module.
//!
//! Elements are `0..order`. All witnesses are 0-based and, when a check
//! fails, the lexicographically smallest counterexample is reported.

mod iso;
mod magma;
mod map;
mod table;

pub use iso::{
    apply_permutation, are_equivalent, canonical_form, canonical_form_anti, permutations, Equivalence,
};
pub use magma::{FiniteMagma, StructureClass};
pub use map::{enumerate_homomorphisms, enumerate_maps, FiniteMap, MapIter};
pub use table::BinaryTable;

/// Outcome of a universally quantified check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub(crate) fn from_witness(w: Option<W>) -> Self {
        match w {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }
}
