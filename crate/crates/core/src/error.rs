use thiserror::Error;

/// Errors raised by the toolkit.
///
/// `Parse` covers malformed textual input (polynomials, rationals, files);
/// everything else is a violated precondition of some operation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is singular")]
    Singular,

    #[error("generator {index} is not invertible")]
    NonInvertibleGenerator { index: usize },

    #[error("group closure exceeded the cap of {cap} elements; the generators may span an infinite group")]
    ClosureCapExceeded { cap: usize },

    #[error("subgroup has order {got}, expected {expected}")]
    WrongSubgroupOrder { expected: usize, got: usize },

    #[error("group order {order} is odd")]
    OddGroupOrder { order: usize },

    #[error("group element has odd order {order}")]
    OddOrderElement { order: usize },

    #[error("group is not cyclic")]
    NotCyclic,

    #[error("group is not abelian")]
    NotAbelian,

    #[error("subgroup is not normal in the parent group")]
    NotNormal,

    #[error("elementary abelian 2-rank is {rank}, method requires {required}")]
    RankMismatch { rank: usize, required: usize },

    #[error("polynomial is not invariant under the group")]
    NotInvariant,

    #[error("point is real")]
    RealPoint,

    #[error("no group element conjugates the point to its coordinate-wise conjugate; invariants need not be real there")]
    NoConjugator,

    #[error("evaluation has nonzero imaginary part; expected a real value")]
    NonRealValue,

    #[error("the (-1)-eigenspace of the requested element is trivial; it yields no non-real sample points")]
    NoImaginaryDirections,

    #[error("default module-generator set would have {size} elements, above the cap of {cap}; pass an explicit generator set")]
    GeneratorBoxTooLarge { size: usize, cap: usize },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
