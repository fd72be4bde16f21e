//! Consonance classification and the seven-consonants verification.
//!
//! An interval is Euclidean (resp. Gaussian) consonant when every denominator
//! along its Kepler orbit is a Euclidean (resp. Gauss-Wantzel) number. The
//! verifier in [`verify_seven_theorem`] settles the infinite claim "exactly
//! seven Euclidean consonants exist" by reducing it to a finite candidate
//! list and classifying each candidate outright.

use crate::constructible::{is_euclidean_number, is_fermat_prime, is_gauss_wantzel};
use crate::error::Error;
use crate::interval::{gcd, Interval, KeplerSequences};

/// Three-way consonance verdict for a musical interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConsonanceClass {
    /// Every Kepler denominator is a Euclidean number.
    EuclideanConsonant,
    /// Every Kepler denominator is Gauss-Wantzel, but not all are Euclidean.
    GaussianOnlyConsonant,
    /// Some Kepler denominator is not constructible.
    Dissonant,
}

impl ConsonanceClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConsonanceClass::EuclideanConsonant => "euclidean",
            ConsonanceClass::GaussianOnlyConsonant => "gaussian",
            ConsonanceClass::Dissonant => "dissonant",
        }
    }
}

impl std::fmt::Display for ConsonanceClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// True iff every denominator of the Kepler orbit is a Euclidean number.
pub fn is_euclidean_consonant(sigma: Interval) -> bool {
    sigma
        .kepler_sequences()
        .second
        .iter()
        .all(|&n| is_euclidean_number(n))
}

/// True iff every denominator of the Kepler orbit is a Gauss-Wantzel number.
pub fn is_gaussian_consonant(sigma: Interval) -> bool {
    sigma
        .kepler_sequences()
        .second
        .iter()
        .all(|&n| is_gauss_wantzel(n))
}

/// Classifies an interval. Euclidean consonance implies the Gaussian test,
/// so the three verdicts are mutually exclusive and exhaustive.
pub fn classify_interval(sigma: Interval) -> ConsonanceClass {
    if is_euclidean_consonant(sigma) {
        ConsonanceClass::EuclideanConsonant
    } else if is_gaussian_consonant(sigma) {
        ConsonanceClass::GaussianOnlyConsonant
    } else {
        ConsonanceClass::Dissonant
    }
}

/// All canonical intervals with denominator at most `max_n`, ordered by
/// (denominator, numerator). These are the coprime pairs with
/// n/2 <= m < n, the octave included.
pub fn enumerate_intervals(max_n: u64) -> Vec<Interval> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for m in n.div_ceil(2)..n {
            if gcd(m, n) == 1 {
                out.push(Interval::new(m, n).expect("coprime pair in the canonical window"));
            }
        }
    }
    out
}

/// Every interval with denominator at most `max_n` that is consonant at least
/// in the Gaussian sense, with its class, ascending by value.
pub fn gaussian_consonants_up_to(max_n: u64) -> Vec<(Interval, ConsonanceClass)> {
    let mut out: Vec<_> = enumerate_intervals(max_n)
        .into_iter()
        .map(|sigma| (sigma, classify_interval(sigma)))
        .filter(|(_, class)| *class != ConsonanceClass::Dissonant)
        .collect();
    out.sort_by_key(|(sigma, _)| *sigma);
    out
}

/// The seven consonant intervals the verification must recover, ascending by
/// value: octave, major sixth, minor sixth, fifth, fourth, major third,
/// minor third.
pub fn seven_consonants() -> Vec<Interval> {
    [(1, 2), (3, 5), (5, 8), (2, 3), (3, 4), (4, 5), (5, 6)]
        .iter()
        .map(|&(m, n)| Interval::new(m, n).expect("fixed consonant list"))
        .collect()
}

/// Outcome of the exhaustive seven-consonants check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    /// The finite candidate list every Euclidean consonant must belong to.
    pub candidates: Vec<Interval>,
    /// Verdict for each candidate, in candidate order.
    pub verdicts: Vec<(Interval, ConsonanceClass)>,
    /// The candidates found Euclidean consonant, ascending by value.
    pub euclidean_consonants: Vec<Interval>,
    /// True iff the consonant set is exactly [`seven_consonants`].
    pub ok: bool,
}

/// Verifies that exactly seven Euclidean consonants exist.
///
/// A Euclidean consonant needs a Euclidean denominator, and its numerator is
/// the next denominator times a power of two, hence Euclidean as well (1 for
/// the octave). That pins the candidates down to a finite list:
///
/// * odd denominator: n in {3, 5, 15} (the only odd Euclidean numbers) and
///   a Euclidean numerator in the open window (n/2, n) coprime to n;
/// * even denominator: the numerator is odd, so 1 or one of {3, 5, 15}, and
///   n is an even Euclidean number in (m, 2m] coprime to m.
///
/// Classifying each candidate with the full orbit test therefore decides the
/// claim for the entire group, not merely up to a denominator cutoff.
pub fn verify_seven_theorem() -> TheoremReport {
    // Odd Euclidean numbers are of the form 3^l * 5^m, so 15 bounds them.
    let odd_euclidean: Vec<u64> = (3..=15)
        .filter(|&x| x % 2 == 1 && is_euclidean_number(x))
        .collect();

    let mut candidates = Vec::new();
    for &n in &odd_euclidean {
        for m in (n / 2 + 1)..n {
            if is_euclidean_number(m) && gcd(m, n) == 1 {
                candidates.push(Interval::new(m, n).expect("candidate is canonical"));
            }
        }
    }
    for m in std::iter::once(1).chain(odd_euclidean.iter().copied()) {
        for n in (m + 1)..=(2 * m) {
            if n % 2 == 0 && is_euclidean_number(n) && gcd(m, n) == 1 {
                candidates.push(Interval::new(m, n).expect("candidate is canonical"));
            }
        }
    }
    candidates.sort();

    let verdicts: Vec<(Interval, ConsonanceClass)> = candidates
        .iter()
        .map(|&sigma| (sigma, classify_interval(sigma)))
        .collect();
    let euclidean_consonants: Vec<Interval> = verdicts
        .iter()
        .filter(|(_, class)| *class == ConsonanceClass::EuclideanConsonant)
        .map(|&(sigma, _)| sigma)
        .collect();
    let ok = euclidean_consonants == seven_consonants();
    TheoremReport {
        candidates,
        verdicts,
        euclidean_consonants,
        ok,
    }
}

/// The Kepler sequences of [(F-1)/F] for a Fermat prime F.
///
/// F - 1 is the power of two 2^(2^t), so one Kepler step lands on the octave:
/// the denominator track is (F, 2) and the interval is a Gaussian consonant.
pub fn fermat_consonance(f: u64) -> Result<KeplerSequences, Error> {
    if !is_fermat_prime(f) {
        return Err(Error::NotFermatPrime(f));
    }
    Ok(Interval::new(f - 1, f)
        .expect("(F-1)/F is already canonical")
        .kepler_sequences())
}
