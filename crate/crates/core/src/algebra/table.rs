/// A total function of two arguments `{0..rows} x {0..cols} -> {0..cod}`,
/// stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryTable {
    rows: usize,
    cols: usize,
    cod: usize,
    values: Vec<usize>,
}

impl BinaryTable {
    pub fn from_fn(rows: usize, cols: usize, cod: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let values = (0..rows * cols)
            .map(|i| {
                let v = f(i / cols, i % cols);
                debug_assert!(v < cod);
                v
            })
            .collect();
        BinaryTable {
            rows,
            cols,
            cod,
            values,
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> usize {
        self.values[r * self.cols + c]
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Rows with 1-based entries.
    pub fn rows_one_based(&self) -> Vec<Vec<usize>> {
        self.values
            .chunks(self.cols)
            .map(|r| r.iter().map(|v| v + 1).collect())
            .collect()
    }
}
