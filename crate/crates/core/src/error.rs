use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at offset {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph has {n} vertices; at most {max} are supported")]
    TooLarge { n: usize, max: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("edge index {index} out of range ({m} edges)")]
    EdgeIndexOutOfRange { index: usize, m: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("cannot split off vertex {v}: degree is {degree}, expected 2")]
    SplitOffDegree { v: usize, degree: usize },

    #[error("cannot split off vertex {v}: neighbors {a} and {b} are already adjacent")]
    SplitOffParallel { v: usize, a: usize, b: usize },

    #[error("coloring does not match graph: {0}")]
    ColoringMismatch(String),

    #[error("not a matching cut: {0}")]
    NotMatchingCut(String),

    #[error("not an MD-coloring: {0}")]
    NotMdColoring(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("{what} is {value}, above the cap of {cap}")]
    SizeCap {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget exhausted; md is in {lower}..={upper}")]
    BudgetExhausted { lower: usize, upper: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
