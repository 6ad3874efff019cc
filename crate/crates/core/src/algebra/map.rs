use crate::algebra::{FiniteMagma, Verdict};
use crate::error::{AlgebraError, Result};

/// A total function `{0..dom} -> {0..cod}` stored as its value table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteMap {
    dom: usize,
    cod: usize,
    values: Vec<usize>,
}

impl FiniteMap {
    pub fn new(cod: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() || cod == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        if let Some(i) = values.iter().position(|&v| v >= cod) {
            return Err(AlgebraError::MapValueOutOfRange {
                index: i,
                value: values[i],
                cod,
            });
        }
        Ok(FiniteMap {
            dom: values.len(),
            cod,
            values,
        })
    }

    pub fn from_one_based(cod: usize, values: &[usize]) -> Result<Self> {
        if let Some(i) = values.iter().position(|&v| v == 0 || v > cod) {
            return Err(AlgebraError::MapValueOutOfRange {
                index: i,
                value: values[i],
                cod,
            });
        }
        Self::new(cod, values.iter().map(|v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        FiniteMap {
            dom: n,
            cod: n,
            values: (0..n).collect(),
        }
    }

    pub fn constant(dom: usize, cod: usize, value: usize) -> Result<Self> {
        Self::new(cod, vec![value; dom])
    }

    pub fn from_fn(dom: usize, cod: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new(cod, (0..dom).map(f).collect())
    }

    #[inline]
    pub fn dom(&self) -> usize {
        self.dom
    }

    #[inline]
    pub fn cod(&self) -> usize {
        self.cod
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.values[a]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.values.iter().map(|v| v + 1).collect()
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &FiniteMap) -> Result<FiniteMap> {
        if first.cod != self.dom {
            return Err(AlgebraError::DimensionMismatch(format!(
                "cannot compose a map into {} elements with a map from {} elements",
                first.cod, self.dom
            )));
        }
        Ok(FiniteMap {
            dom: first.dom,
            cod: self.cod,
            values: first.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.values
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        for &v in &self.values {
            seen[v] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Checks `f(a+b) = f(a)+f(b)`; the witness is the smallest failing pair.
    pub fn is_homomorphism(
        &self,
        src: &FiniteMagma,
        dst: &FiniteMagma,
    ) -> Result<Verdict<(usize, usize)>> {
        if self.dom != src.order() || self.cod != dst.order() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "map {} -> {} checked against magmas of orders {} and {}",
                self.dom,
                self.cod,
                src.order(),
                dst.order()
            )));
        }
        Ok(Verdict::from_witness(self.hom_witness(src, dst)))
    }

    pub(crate) fn hom_witness(&self, src: &FiniteMagma, dst: &FiniteMagma) -> Option<(usize, usize)> {
        let n = self.dom;
        for a in 0..n {
            for b in 0..n {
                if self.values[src.op(a, b)] != dst.op(self.values[a], self.values[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// Lazily yields every map `dom -> cod` in lexicographic order of value
/// sequences.
pub fn enumerate_maps(dom: usize, cod: usize) -> MapIter {
    MapIter {
        dom,
        cod,
        next: (dom >= 1 && cod >= 1).then(|| vec![0; dom]),
    }
}

pub struct MapIter {
    dom: usize,
    cod: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for MapIter {
    type Item = FiniteMap;

    fn next(&mut self) -> Option<FiniteMap> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = self.dom;
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.cod {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(FiniteMap {
            dom: self.dom,
            cod: self.cod,
            values: current,
        })
    }
}

/// All homomorphisms `src -> dst`, in the order of [`enumerate_maps`].
pub fn enumerate_homomorphisms(src: &FiniteMagma, dst: &FiniteMagma) -> Vec<FiniteMap> {
    // Backtracking on the value sequence; a partial map is pruned as soon
    // as some pair of assigned points violates the homomorphism law.
    let n = src.order();
    let mut out = Vec::new();
    let mut values = vec![0usize; n];
    fn consistent(src: &FiniteMagma, dst: &FiniteMagma, values: &[usize], upto: usize) -> bool {
        let i = upto;
        for j in 0..=i {
            for (a, b) in [(i, j), (j, i)] {
                let ab = src.op(a, b);
                if ab <= i && values[ab] != dst.op(values[a], values[b]) {
                    return false;
                }
            }
        }
        // products landing on `i` from earlier pairs
        for a in 0..i {
            for b in 0..i {
                if src.op(a, b) == i && values[i] != dst.op(values[a], values[b]) {
                    return false;
                }
            }
        }
        true
    }
    fn go(
        src: &FiniteMagma,
        dst: &FiniteMagma,
        values: &mut Vec<usize>,
        i: usize,
        out: &mut Vec<FiniteMap>,
    ) {
        if i == values.len() {
            out.push(FiniteMap {
                dom: src.order(),
                cod: dst.order(),
                values: values.clone(),
            });
            return;
        }
        for v in 0..dst.order() {
            values[i] = v;
            if consistent(src, dst, values, i) {
                go(src, dst, values, i + 1, out);
            }
        }
    }
    go(src, dst, &mut values, 0, &mut out);
    out
}
