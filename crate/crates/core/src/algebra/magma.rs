use std::fmt;

use crate::algebra::Verdict;
use crate::error::{AlgebraError, Result};

/// A binary operation on `{0, .., order - 1}` stored as a row-major table:
/// `op(a, b) = table[a * order + b]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteMagma {
    order: usize,
    table: Vec<usize>,
}

/// Structural flags of a magma, all recomputed from its table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StructureClass {
    pub associative: bool,
    pub unital: Option<usize>,
    pub commutative: bool,
    pub group: bool,
}

impl FiniteMagma {
    /// Builds a magma from a flat row-major table.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        if table.len() != order * order {
            return Err(AlgebraError::RowCount {
                rows: table.len() / order,
                order,
            });
        }
        if let Some(i) = table.iter().position(|&v| v >= order) {
            return Err(AlgebraError::EntryOutOfRange {
                row: i / order,
                col: i % order,
                value: table[i],
                order,
            });
        }
        Ok(FiniteMagma { order, table })
    }

    /// Builds a magma from 0-based rows.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(AlgebraError::RowLength {
                    row: i,
                    len: row.len(),
                    order,
                });
            }
            table.extend_from_slice(row);
        }
        Self::from_flat(order, table)
    }

    /// Builds a magma from 1-based rows, the convention of printed tables.
    pub fn from_rows_one_based<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        let mut zero = Vec::with_capacity(order);
        for (i, row) in rows.iter().enumerate() {
            let mut out = Vec::with_capacity(row.as_ref().len());
            for (j, &v) in row.as_ref().iter().enumerate() {
                if v == 0 || v > order {
                    return Err(AlgebraError::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        order,
                    });
                }
                out.push(v - 1);
            }
            zero.push(out);
        }
        Self::from_rows(&zero)
    }

    /// The unique magma on one element.
    pub fn trivial() -> Self {
        FiniteMagma {
            order: 1,
            table: vec![0],
        }
    }

    /// Builds a magma from a closure evaluated on every pair.
    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = (0..order * order).map(|i| op(i / order, i % order)).collect();
        Self::from_flat(order, table)
    }

    /// The cyclic group of the given order under addition mod `order`.
    pub fn cyclic(order: usize) -> Result<Self> {
        Self::from_fn(order, |a, b| (a + b) % order)
    }

    /// Cartesian product with componentwise operation; `(x, y)` has label
    /// `x * other.order() + y`.
    pub fn product(&self, other: &FiniteMagma) -> FiniteMagma {
        let m = other.order;
        let n = self.order * m;
        let table = (0..n * n)
            .map(|i| {
                let (u, v) = (i / n, i % n);
                self.op(u / m, v / m) * m + other.op(u % m, v % m)
            })
            .collect();
        FiniteMagma { order: n, table }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order)
    }

    /// Rows with 1-based entries.
    pub fn rows_one_based(&self) -> Vec<Vec<usize>> {
        self.rows().map(|r| r.iter().map(|v| v + 1).collect()).collect()
    }

    /// The opposite magma, `a *op b = b * a`.
    pub fn transpose(&self) -> FiniteMagma {
        let n = self.order;
        let table = (0..n * n).map(|i| self.op(i % n, i / n)).collect();
        FiniteMagma { order: n, table }
    }

    /// Triple-loop associativity check; the witness is the smallest
    /// `(a, b, c)` with `(a+b)+c != a+(b+c)`.
    pub fn is_associative(&self) -> Verdict<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Verdict::Fails((a, b, c));
                    }
                }
            }
        }
        Verdict::Holds
    }

    pub fn identity_element(&self) -> Option<usize> {
        let n = self.order;
        (0..n).find(|&e| (0..n).all(|a| self.op(e, a) == a && self.op(a, e) == a))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Associative, unital, and every row and column is a permutation.
    pub fn is_group(&self) -> bool {
        self.is_associative().holds()
            && self.identity_element().is_some()
            && self.is_latin_square()
    }

    fn is_latin_square(&self) -> bool {
        let n = self.order;
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                seen[self.op(a, b)] = true;
            }
            if seen.contains(&false) {
                return false;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                seen[self.op(b, a)] = true;
            }
            if seen.contains(&false) {
                return false;
            }
        }
        true
    }

    /// Two-sided inverse of `a` in a unital magma.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        let e = self.identity_element()?;
        (0..self.order).find(|&b| self.op(a, b) == e && self.op(b, a) == e)
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order).all(|a| self.op(a, a) == a)
    }

    pub fn classify(&self) -> StructureClass {
        StructureClass {
            associative: self.is_associative().holds(),
            unital: self.identity_element(),
            commutative: self.is_commutative(),
            group: self.is_group(),
        }
    }

    /// The submagma on `elements` (which must be closed), relabelled by
    /// position in the slice.
    pub fn restrict(&self, elements: &[usize]) -> Option<FiniteMagma> {
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in elements {
            for &b in elements {
                let v = self.op(a, b);
                table.push(elements.iter().position(|&e| e == v)?);
            }
        }
        FiniteMagma::from_flat(n, table).ok()
    }
}

impl fmt::Display for FiniteMagma {
    /// One row per line, 1-based entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
