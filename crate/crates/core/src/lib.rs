//! Exact arithmetic for octave-equivalent rational intervals, the Kepler map,
//! and consonance classification through ruler-and-compass constructibility.
//!
//! Positive rationals modulo powers of two form an abelian group of musical
//! intervals. Iterating the Kepler map [m/n] -> [(n - m)/m] drives every
//! interval to the octave in finitely many steps; an interval counts as
//! consonant when all denominators met along the way are edge counts of
//! constructible polygons. Restricting to the polygons of Euclid's Elements
//! singles out exactly seven consonant intervals, which
//! [`consonance::verify_seven_theorem`] checks by finite enumeration.
//!
//! ```
//! use kepler_core::{classify_interval, ConsonanceClass, Interval};
//!
//! let minor_sixth = Interval::new(5, 8)?;
//! assert_eq!(minor_sixth.kepler_sequences().second, vec![8, 5, 3, 2]);
//! assert_eq!(
//!     classify_interval(minor_sixth),
//!     ConsonanceClass::EuclideanConsonant
//! );
//! # Ok::<(), kepler_core::Error>(())
//! ```

pub mod consonance;
pub mod constructible;
mod error;
pub mod interval;

pub use consonance::{
    classify_interval, enumerate_intervals, fermat_consonance, gaussian_consonants_up_to,
    is_euclidean_consonant, is_gaussian_consonant, seven_consonants, verify_seven_theorem,
    ConsonanceClass, TheoremReport,
};
pub use constructible::{
    classify_polygon, factorize, is_euclidean_number, is_fermat_prime, is_gauss_wantzel, is_prime,
    totient, Factorization, PolygonClass,
};
pub use error::Error;
pub use interval::{Interval, KeplerSequences, KeplerStepWitness};
