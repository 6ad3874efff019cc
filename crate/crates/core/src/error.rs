use thiserror::Error;

/// Errors raised when constructing or operating on finite structures.
///
/// Element indices carried by variants are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("order must be at least 1")]
    EmptyCarrier,

    #[error("table has {rows} rows but order is {order}")]
    RowCount { rows: usize, order: usize },

    #[error("row {row} has {len} entries but order is {order}")]
    RowLength { row: usize, len: usize, order: usize },

    #[error("entry at ({row}, {col}) is {value}, outside a carrier of order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("map value at {index} is {value}, outside a codomain of order {cod}")]
    MapValueOutOfRange { index: usize, value: usize, cod: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{0} is not associative")]
    NotAssociative(&'static str),

    #[error("{0} is not a group")]
    NotAGroup(&'static str),

    #[error("{0} has no two-sided identity")]
    NotUnital(&'static str),

    #[error("homomorphism is not surjective")]
    NotSurjective,

    #[error("map is not a homomorphism")]
    NotAHomomorphism,

    #[error("section does not satisfy p(s(b)) = b at b = {0}")]
    NotASection(usize),

    #[error("induced operation leaves R: ({0:?}) + ({1:?}) = ({2:?})")]
    NotClosed((usize, usize), (usize, usize), (usize, usize)),

    #[error("input is not a valid {0}")]
    Invalid(&'static str),

    #[error("order {requested} exceeds the supported limit of {limit}")]
    OrderTooLarge { requested: usize, limit: usize },
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
