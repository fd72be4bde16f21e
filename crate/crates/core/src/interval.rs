//! Octave-equivalent rational intervals and the Kepler map.
//!
//! Two positive rationals denote the same musical interval when they differ
//! by a power of two, so 3/2, 3/4 and 6/4 are all the perfect fifth. The
//! classes form an abelian group under ratio multiplication; its identity is
//! the octave. Every class has a unique canonical representative m/n with
//! 1/2 <= m/n < 1 and gcd(m, n) = 1, which is what [`Interval`] stores.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// An octave-equivalence class of positive rationals, stored as its canonical
/// representative.
///
/// Invariants: `1/2 <= m/n < 1` and `gcd(m, n) = 1`. Instances exist only
/// through [`Interval::new`], so every value in circulation is canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    m: u64,
    n: u64,
}

impl Interval {
    /// The octave, class of 1/2. Identity of the interval group, unique fixed
    /// point of the Kepler map, and the only interval of height 0.
    pub const OCTAVE: Interval = Interval { m: 1, n: 2 };

    /// Reduces p/q to the canonical representative of its class.
    ///
    /// The ratio may be given in either orientation: `new(3, 2)` and
    /// `new(3, 4)` are the same interval. `new(1, 1)` is the octave.
    pub fn new(p: u64, q: u64) -> Result<Interval, Error> {
        if p == 0 || q == 0 {
            return Err(Error::ZeroComponent {
                numerator: p,
                denominator: q,
            });
        }
        let overflow = Error::Overflow {
            numerator: p,
            denominator: q,
        };
        let g = gcd(p, q);
        let mut m = p / g;
        let mut n = q / g;
        while m >= n {
            n = n.checked_mul(2).ok_or(overflow)?;
        }
        // 2m < n is written m < n - m so the doubling below cannot wrap.
        while m < n - m {
            m *= 2;
        }
        // Scaling by 2 may have reintroduced a common power of two.
        let g = gcd(m, n);
        Ok(Interval { m: m / g, n: n / g })
    }

    /// Numerator of the canonical representative.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Denominator of the canonical representative.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Group product: the class of the product of the two ratios.
    pub fn multiply(self, rhs: Interval) -> Result<Interval, Error> {
        let p = self.m.checked_mul(rhs.m).ok_or(Error::Overflow {
            numerator: self.m,
            denominator: rhs.m,
        })?;
        let q = self.n.checked_mul(rhs.n).ok_or(Error::Overflow {
            numerator: self.n,
            denominator: rhs.n,
        })?;
        Interval::new(p, q)
    }

    /// Group inverse: `a.multiply(a.inverse())` is the octave.
    pub fn inverse(self) -> Result<Interval, Error> {
        Interval::new(self.n, self.m)
    }

    /// One step of the Kepler map, [m/n] -> [(n - m)/m].
    ///
    /// Total on canonical inputs: n - m is positive because m < n, and the
    /// octave maps to itself.
    pub fn kepler_map(self) -> Interval {
        let d = self.n - self.m;
        // 0 < (n - m)/m <= 1 on canonical input.
        debug_assert!(d >= 1 && d <= self.m);
        Interval::new(d, self.m).expect("a Kepler step stays within the 64-bit range")
    }

    /// The 2-adic bookkeeping behind one Kepler step, computed in closed form
    /// without a reduction pass.
    ///
    /// Decomposes m = 2^k * mu with mu odd, finds the unique ell placing
    /// 2^ell * (n - m)/m inside [1/2, 1), and splits k - ell into its positive
    /// parts rho and tau. The step target is then directly
    /// (next_m, next_n) = (2^tau * (n - m), 2^rho * mu), which must agree with
    /// [`Interval::kepler_map`]. Undefined for the octave.
    pub fn kepler_step_witness(self) -> Result<KeplerStepWitness, Error> {
        if self == Interval::OCTAVE {
            return Err(Error::OctaveWitness);
        }
        let d = self.n - self.m;
        let k = self.m.trailing_zeros();
        let mu = self.m >> k;
        let mut ell = 0u32;
        while (u128::from(d) << (ell + 1)) < u128::from(self.m) {
            ell += 1;
        }
        let rho = k.saturating_sub(ell);
        let tau = ell.saturating_sub(k);
        Ok(KeplerStepWitness {
            k,
            mu,
            ell,
            rho,
            tau,
            // 2^rho * mu <= 2^k * mu = m and 2^tau * d <= 2^ell * d < m,
            // so neither shift can overflow.
            next_n: mu << rho,
            next_m: d << tau,
        })
    }

    /// Number of Kepler steps needed to reach the octave. Always finite: the
    /// denominator strictly decreases until it hits 2.
    pub fn height(self) -> u32 {
        let mut cur = self;
        let mut steps = 0;
        while cur != Interval::OCTAVE {
            cur = cur.kepler_map();
            steps += 1;
        }
        steps
    }

    /// The full Kepler orbit of the interval together with the denominator
    /// track, each of length `height + 1`.
    pub fn kepler_sequences(self) -> KeplerSequences {
        let mut first = vec![self];
        let mut cur = self;
        while cur != Interval::OCTAVE {
            cur = cur.kepler_map();
            first.push(cur);
        }
        let second = first.iter().map(|s| s.n).collect();
        KeplerSequences { first, second }
    }

    /// Interval size in cents, 1200 * log2(n/m), in (0, 1200].
    ///
    /// Display only; classification never consults floating point.
    pub fn cents(self) -> f64 {
        1200.0 * (self.n as f64 / self.m as f64).log2()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.m, self.n)
    }
}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interval {
    /// Total order by the real value m/n. Canonical representatives are
    /// unique, so this agrees with structural equality.
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = u128::from(self.m) * u128::from(other.n);
        let rhs = u128::from(other.m) * u128::from(self.n);
        lhs.cmp(&rhs)
    }
}

/// The quantities of one closed-form Kepler step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeplerStepWitness {
    /// 2-adic valuation of m.
    pub k: u32,
    /// Odd part of m, so m = 2^k * mu.
    pub mu: u64,
    /// Unique exponent with 2^ell * (n - m)/m in [1/2, 1).
    pub ell: u32,
    /// max(0, k - ell).
    pub rho: u32,
    /// max(0, ell - k).
    pub tau: u32,
    /// Numerator of the step target, 2^tau * (n - m).
    pub next_m: u64,
    /// Denominator of the step target, 2^rho * mu.
    pub next_n: u64,
}

/// The Kepler orbit (sigma, K(sigma), ..., octave) and its denominators.
///
/// Both lists have length `height + 1`; `second[i]` is the denominator of
/// `first[i]`; the denominators strictly decrease down to the terminal 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeplerSequences {
    pub first: Vec<Interval>,
    pub second: Vec<u64>,
}

impl KeplerSequences {
    /// Height of the starting interval.
    pub fn height(&self) -> u32 {
        (self.first.len() - 1) as u32
    }
}
