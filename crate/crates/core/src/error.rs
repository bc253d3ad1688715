use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group too large: closure exceeded the cap of {cap} elements")]
    TooLarge { cap: usize },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("index [G:H] = {0} is not prime")]
    IndexNotPrime(usize),
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("character is not irreducible")]
    NotIrreducible,
    #[error("character is not invariant in the overgroup")]
    NotInvariant,
    #[error("invalid normal chain: {0}")]
    BadChain(String),
    #[error("conductor exponent at p = {prime} is not a nonnegative integer: {value}")]
    NonIntegralExponent { prime: u64, value: String },
    #[error("invalid ramification data: {0}")]
    InvalidFiltration(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
