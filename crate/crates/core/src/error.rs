use thiserror::Error;

/// Errors reported by interval construction and the number-theoretic queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Error {
    /// Interval ratios are built from positive integers only.
    #[error("interval components must be positive, got {numerator}/{denominator}")]
    ZeroComponent { numerator: u64, denominator: u64 },

    /// A product or octave shift left the 64-bit range. Never wraps silently.
    #[error("integer overflow while reducing {numerator}/{denominator}")]
    Overflow { numerator: u64, denominator: u64 },

    /// The octave is the fixed point of the Kepler map; the step exponent of
    /// the closed form is undefined there.
    #[error("the octave has no Kepler step witness")]
    OctaveWitness,

    /// Prime factorization is defined for integers >= 2.
    #[error("{0} has no prime factorization, the input must be at least 2")]
    FactorizeRange(u64),

    /// Polygon classification is defined for integers >= 2.
    #[error("polygon classification needs at least 2 vertices, got {0}")]
    PolygonRange(u64),

    /// Operations restricted to Fermat primes reject everything else.
    #[error("{0} is not a Fermat prime")]
    NotFermatPrime(u64),
}
