use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{vertex_count}")]
    EndpointOutOfRange { u: usize, v: usize, vertex_count: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge set is not a spanning tree")]
    NotSpanningTree,
    #[error("root {0} does not have degree 1 in the tree")]
    RootNotLeaf(usize),
    #[error("deleted edge {0} has an endpoint of tree degree other than 1")]
    DeletedEdgeEndpoint(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("{strands} strands do not fit on {vertices} vertices: the complex is empty")]
    EmptyComplex { strands: usize, vertices: usize },
    #[error("vertex order has length {found}, expected {expected}")]
    OrderLength { found: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("graph is not sufficiently subdivided for {strands} strands ({violations} violations)")]
    Insufficient { strands: usize, violations: usize },
    #[error("complex was built over a different graph than the Morse tree")]
    TreeMismatch,
    #[error("Morse matching failed validation: {0}")]
    InvalidMatching(String),
    #[error("classification disagrees with homology: {0}")]
    CrossCheck(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("malformed token `{0}`")]
    Malformed(String),
    #[error("generator {index} out of range (expected {min}..={max})")]
    OutOfRange { index: i64, min: i64, max: i64 },
    #[error("exponent {0} is too large")]
    ExponentTooLarge(i64),
    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("words are over different groups")]
    GroupMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("need at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("expected {expected} images for {strands} strands, got {found}")]
    ImageCount { strands: usize, expected: usize, found: usize },
    #[error("image {0} is over a different defining graph")]
    GraphMismatch(usize),
    #[error("the all-images-equal conclusion needs n > 4, got n = {0}")]
    HypothesisUnmet(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("expected {expected} images, got {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("images act on different strand counts")]
    StrandMismatch,
    #[error("image of g{0} is not a pure braid")]
    NotPure(usize),
    #[error("images of g{i} and g{j} {}", if *.should_commute { "should commute but do not" } else { "commute but should not" })]
    PairFailed { i: usize, j: usize, should_commute: bool },
    #[error("{strands} strands exceed the bound {bound}")]
    BoundExceeded { strands: usize, bound: usize },
}
