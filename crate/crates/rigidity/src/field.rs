//! Prime-field arithmetic and deterministic randomness.
//!
//! All linear algebra in this crate runs over a fixed prime field so that
//! rank computations are exact. The default modulus is the Mersenne prime
//! 2^61 - 1, which admits branch-light reduction; a second 62-bit prime is
//! available for cross-checking results under an independent modulus.

/// The Mersenne prime 2^61 - 1, the default modulus.
pub const MERSENNE61: u64 = (1 << 61) - 1;

/// The largest prime below 2^62, the alternate modulus.
pub const ALT62: u64 = (1 << 62) - 57;

/// A prime field F_p for one of the two supported moduli.
///
/// Elements are plain `u64` values in `[0, p)`. The struct is `Copy` and is
/// threaded explicitly through every operation so that matrices and reports
/// stay self-describing about which modulus produced them.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Field with the default Mersenne modulus 2^61 - 1.
    pub const fn mersenne61() -> Self {
        PrimeField { p: MERSENNE61 }
    }

    /// Field with the alternate 62-bit modulus 2^62 - 57.
    pub const fn alt62() -> Self {
        PrimeField { p: ALT62 }
    }

    /// The modulus p.
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Short stable name, used in reports ("m61" or "alt").
    pub fn name(&self) -> &'static str {
        if self.p == MERSENNE61 {
            "m61"
        } else {
            "alt"
        }
    }

    /// Reduce an arbitrary u64 into `[0, p)`.
    pub fn reduce(&self, x: u64) -> u64 {
        if self.p == MERSENNE61 {
            // Fold the top bits down; one fold plus a conditional subtract
            // suffices for any u64 input.
            let folded = (x & MERSENNE61) + (x >> 61);
            if folded >= MERSENNE61 {
                folded - MERSENNE61
            } else {
                folded
            }
        } else {
            x % self.p
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b; // both < 2^62, no overflow
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let wide = a as u128 * b as u128;
        if self.p == MERSENNE61 {
            // a, b < 2^61 so the product fits 122 bits; two folds reduce it.
            let lo = (wide & MERSENNE61 as u128) as u64;
            let hi = (wide >> 61) as u64;
            self.reduce(lo + self.reduce(hi))
        } else {
            (wide % self.p as u128) as u64
        }
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base = self.reduce(base);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat. Panics on zero: callers pivot on
    /// nonzero entries only.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }
}

const GOLDEN: u64 = 0x9e3779b97f4a7c15;

/// SplitMix64 avalanche finalizer. Bijective on u64; the basis for both the
/// stream generator and seed derivation.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Counter-based SplitMix64 stream.
///
/// Deterministic and platform-stable: every certificate in this crate is
/// reproducible from the recorded seed alone. Streams are split by hashing
/// context (graph fingerprint, dimension, purpose, trial) into the seed, so
/// results never depend on query order.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix64(self.state)
    }

    /// Uniform element of `[0, p)` by rejection on the top bits.
    pub fn next_element(&mut self, field: PrimeField) -> u64 {
        let bits = 64 - field.modulus().leading_zeros();
        let shift = 64 - bits;
        loop {
            let x = self.next_u64() >> shift;
            if x < field.modulus() {
                return x;
            }
        }
    }
}

/// Derive an independent stream seed from a base seed and context labels.
/// Chained avalanche mixing; any change in any label decorrelates the stream.
pub fn derive_seed(base: u64, labels: &[u64]) -> u64 {
    let mut acc = mix64(base ^ GOLDEN);
    for &l in labels {
        acc = mix64(acc ^ l.wrapping_mul(GOLDEN));
    }
    acc
}
