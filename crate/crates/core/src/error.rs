use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse group spec: {0}")]
    ParseSpec(String),
    #[error("group order {0} exceeds supported limit {1}")]
    SizeLimit(usize, usize),
    #[error("subgroup does not belong to the given group")]
    ForeignSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("map is not a homomorphism")]
    NotHomomorphism,
    #[error("cohomology classes live over incompatible groups or moduli")]
    MismatchedParents,
    #[error("no exhaustive mode or catalog entry for H^2 of group of order {0}")]
    NoCohomology(usize),
    #[error("(F, Gamma) is not an exact factorization")]
    NotExactFactorization,
    #[error("structure constants violate a Hopf axiom: {0}")]
    HopfAxiom(String),
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("spectral splitting did not converge to integer block sizes")]
    SpectralSplit,
    #[error("unknown rack catalog entry: {0}")]
    UnknownRack(String),
    #[error("dihedral parameter must be even, got {0}")]
    OddDihedral(usize),
    #[error("invalid expected-values data: {0}")]
    BadExpectedData(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
