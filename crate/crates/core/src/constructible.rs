//! Constructibility of regular polygons by ruler and compass.
//!
//! A regular n-gon is constructible exactly when n is a power of two times a
//! product of distinct Fermat primes (a Gauss-Wantzel number). The subfamily
//! with no Fermat primes beyond 3 and 5 covers the constructions of Euclid's
//! Elements. Both predicates sit on a deterministic primality test and a
//! trial-division factorizer; Euler's totient is kept alongside as an
//! independent oracle, since n is Gauss-Wantzel iff phi(n) is a power of two.

use crate::error::Error;

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(n)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test, exact for every `u64`.
///
/// Miller-Rabin with the fixed witness set {2, 3, ..., 37}, which is known to
/// be sound for all integers below 3.3 * 10^24. No probabilistic error.
pub fn is_prime(x: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if x < 2 {
        return false;
    }
    for p in WITNESSES {
        if x == p {
            return true;
        }
        if x.is_multiple_of(p) {
            return false;
        }
    }
    let s = (x - 1).trailing_zeros();
    let d = (x - 1) >> s;
    'witness: for a in WITNESSES {
        let mut y = pow_mod(a, d, x);
        if y == 1 || y == x - 1 {
            continue;
        }
        for _ in 1..s {
            y = mul_mod(y, y, x);
            if y == x - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back together.
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Complete prime factorization by trial division up to sqrt(x).
///
/// Inputs are desk-scale here (denominators of Kepler orbits, polygon edge
/// counts), so no faster method is warranted.
pub fn factorize(x: u64) -> Result<Factorization, Error> {
    if x < 2 {
        return Err(Error::FactorizeRange(x));
    }
    let mut rest = x;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut d = 3;
    while d <= rest / d {
        push(d, &mut rest);
        d += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// True iff x is a Fermat prime, i.e. a prime of the form 2^(2^t) + 1.
///
/// Checks the shape first, then primality; no lookup table, so a sixth Fermat
/// prime would be accepted should one ever fit in 64 bits.
pub fn is_fermat_prime(x: u64) -> bool {
    if x < 3 {
        return false;
    }
    let e = x - 1;
    if !e.is_power_of_two() {
        return false;
    }
    let t = e.trailing_zeros();
    // The exponent itself must be a power of two; t = 0 would mean x = 2.
    if t == 0 || !t.is_power_of_two() {
        return false;
    }
    is_prime(x)
}

/// True iff the regular x-gon is constructible by ruler and compass:
/// x >= 2 and the odd part of x is a product of distinct Fermat primes
/// (possibly empty, so pure powers of two qualify).
pub fn is_gauss_wantzel(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let odd = x >> x.trailing_zeros();
    if odd == 1 {
        return true;
    }
    factorize(odd)
        .expect("odd part is at least 3 here")
        .factors
        .iter()
        .all(|&(p, e)| e == 1 && is_fermat_prime(p))
}

/// True iff x = 2^k * 3^l * 5^m with l, m in {0, 1}: the edge counts whose
/// polygons are constructed in Euclid's Elements.
pub fn is_euclidean_number(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    matches!(x >> x.trailing_zeros(), 1 | 3 | 5 | 15)
}

/// Euler's totient, computed from the factorization.
pub fn totient(x: u64) -> u64 {
    assert_ne!(x, 0, "totient(0) is undefined");
    if x == 1 {
        return 1;
    }
    factorize(x)
        .expect("x >= 2 here")
        .factors
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Three-way constructibility verdict for the regular x-gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolygonClass {
    /// Constructible with the means of Euclid's Elements (2^k * 3^l * 5^m).
    Euclidean,
    /// Constructible, but only with a Fermat prime beyond 3 and 5.
    GaussWantzelOnly,
    /// Not constructible by ruler and compass.
    NonConstructible,
}

impl PolygonClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            PolygonClass::Euclidean => "euclidean",
            PolygonClass::GaussWantzelOnly => "gauss-wantzel",
            PolygonClass::NonConstructible => "non-constructible",
        }
    }
}

impl std::fmt::Display for PolygonClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies the regular x-gon; x must be at least 2.
pub fn classify_polygon(x: u64) -> Result<PolygonClass, Error> {
    if x < 2 {
        return Err(Error::PolygonRange(x));
    }
    Ok(if is_euclidean_number(x) {
        PolygonClass::Euclidean
    } else if is_gauss_wantzel(x) {
        PolygonClass::GaussWantzelOnly
    } else {
        PolygonClass::NonConstructible
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Known Fermat primes, as a fixture only; the predicate itself never
    /// consults a list.
    const FERMAT_PRIMES: [u64; 5] = [3, 5, 17, 257, 65537];

    #[test]
    fn is_prime_examples() {
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(is_prime(65537));
        assert!(!is_prime(4294967297));
    }

    #[test]
    fn is_prime_agrees_with_trial_division() {
        fn trial(x: u64) -> bool {
            if x < 2 {
                return false;
            }
            let mut d = 2;
            while d <= x / d {
                if x.is_multiple_of(d) {
                    return false;
                }
                d += 1;
            }
            true
        }
        for x in 0..20_000 {
            assert_eq!(is_prime(x), trial(x), "disagreement at {x}");
        }
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(12).unwrap().factors, vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(65537).unwrap().factors, vec![(65537, 1)]);
        assert_eq!(factorize(15).unwrap().factors, vec![(3, 1), (5, 1)]);
        // Euler's factorization of the fifth Fermat number.
        assert_eq!(
            factorize(4294967297).unwrap().factors,
            vec![(641, 1), (6700417, 1)]
        );
        assert_eq!(factorize(0), Err(Error::FactorizeRange(0)));
        assert_eq!(factorize(1), Err(Error::FactorizeRange(1)));
    }

    #[test]
    fn fermat_prime_examples() {
        for f in FERMAT_PRIMES {
            assert!(is_fermat_prime(f), "{f} must be a Fermat prime");
        }
        assert!(!is_fermat_prime(2));
        assert!(!is_fermat_prime(7));
        assert!(!is_fermat_prime(9));
        // Right shape (2^32 + 1) but composite.
        assert!(!is_fermat_prime(4294967297));
    }

    #[test]
    fn gauss_wantzel_examples() {
        assert!(is_gauss_wantzel(17));
        assert!(!is_gauss_wantzel(7));
        assert!(is_gauss_wantzel(15));
        assert!(!is_gauss_wantzel(9));
        // Pure powers of two qualify.
        for x in [2, 4, 8, 16, 1 << 40] {
            assert!(is_gauss_wantzel(x));
        }
        assert!(!is_gauss_wantzel(0));
        assert!(!is_gauss_wantzel(1));
    }

    #[test]
    fn euclidean_number_examples() {
        let first_eleven = [2, 3, 4, 5, 6, 8, 10, 12, 15, 16, 20];
        for x in first_eleven {
            assert!(is_euclidean_number(x), "{x} must be Euclidean");
        }
        assert!(!is_euclidean_number(17));
        assert!(!is_euclidean_number(9));
        assert!(is_euclidean_number(30));
        assert!(!is_euclidean_number(1));
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(17), 16);
        assert_eq!(totient(15), 8);
    }

    #[test]
    fn classify_polygon_examples() {
        assert_eq!(classify_polygon(15), Ok(PolygonClass::Euclidean));
        assert_eq!(classify_polygon(17), Ok(PolygonClass::GaussWantzelOnly));
        assert_eq!(classify_polygon(7), Ok(PolygonClass::NonConstructible));
        assert_eq!(classify_polygon(1), Err(Error::PolygonRange(1)));
        assert_eq!(classify_polygon(0), Err(Error::PolygonRange(0)));
    }

    #[test]
    fn odd_euclidean_numbers_are_3_5_15() {
        let odd: Vec<u64> = (1..=100_000)
            .filter(|x| x % 2 == 1 && is_euclidean_number(*x))
            .collect();
        assert_eq!(odd, vec![3, 5, 15]);
    }
}
