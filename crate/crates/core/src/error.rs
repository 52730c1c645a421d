use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error in group spec {spec:?} at offset {offset}: {message}")]
    Syntax {
        spec: String,
        offset: usize,
        message: String,
    },
    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderBound { order: u128, bound: usize },
    #[error("empty generator set")]
    EmptyGenerators,
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: conjugation by element {witness} moves it")]
    NotNormal { witness: usize },
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operands belong to different Burnside rings")]
    MismatchedRing,
    #[error("class set is not closed under subconjugacy: class {missing} lies below class {member}")]
    NotDownwardClosed { member: usize, missing: usize },
    #[error("family restriction is not closed under the A(G)-action: [G/K{ring_class}] maps basis {from} onto basis {to}")]
    ClosureViolation {
        ring_class: usize,
        from: usize,
        to: usize,
    },
    #[error("module basis carries no isotropy labels")]
    Unlabeled,
    #[error("family {inner} is not contained in family {outer}")]
    FamilyNotContained { inner: String, outer: String },
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("pi_0 of the leading smash term of a p-local decomposition is not computed")]
    PLocalPi0,
}

pub type Result<T> = std::result::Result<T, Error>;
