use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ill-conditioned rank decision: singular-value gap ratio {ratio:.3e} is below {required:.0e}")]
    IllConditioned { ratio: f64, required: f64 },
    #[error("denominator vanishes modulo the prime {0}")]
    BadPrime(u64),
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),
    #[error("degenerate curve: {0}")]
    Degenerate(String),
    #[error("numeric failure: {0}")]
    NumericFailure(String),
    #[error("torsion search exhausted after {starts} starts for n = {n}")]
    SearchExhausted { n: u32, starts: usize },
    #[error("orbit does not close: cyclic closure residual {0:.3e}")]
    NotTorsion(f64),
    #[error(
        "both orientations leave relation residual above threshold ({forward:.3e}, {reverse:.3e})"
    )]
    OrientationAmbiguous { forward: f64, reverse: f64 },
    #[error("all three determinants vanish")]
    AllZeroDets,
    #[error("cubic fit nullspace has dimension {0}, expected 1")]
    NoUniqueCubic(usize),
    #[error("stabilizer action is not diagonalizable over roots of unity: {0}")]
    NonDiagonalizable(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
