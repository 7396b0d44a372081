//! Field characteristic: zero or a prime.

use std::fmt;

use crate::error::{Error, Result};

/// Characteristic of the coefficient field for a rank computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    /// `0` maps to `Zero`; any other value must be prime.
    pub fn new(value: u64) -> Result<Self> {
        if value == 0 {
            Ok(Self::Zero)
        } else if is_prime(value) {
            Ok(Self::Prime(value))
        } else {
            Err(Error::NotPrime(value))
        }
    }

    pub fn value(&self) -> u64 {
        match self {
            Self::Zero => 0,
            Self::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for `u64`; the witness set 2..=37 decides
/// primality for every 64-bit integer.
pub fn is_prime(value: u64) -> bool {
    if value < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if value == p {
            return true;
        }
        if value.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = value - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, value);
        if x == 1 || x == value - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, value);
            if x == value - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes: Vec<u64> = (0..100).filter(|&v| is_prime(v)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                83, 89, 97
            ]
        );
    }

    #[test]
    fn large_values() {
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u64 * 3));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime(u64::MAX));
    }

    #[test]
    fn construction() {
        assert_eq!(Characteristic::new(0).unwrap(), Characteristic::Zero);
        assert_eq!(Characteristic::new(7).unwrap(), Characteristic::Prime(7));
        assert_eq!(Characteristic::new(4), Err(Error::NotPrime(4)));
        assert_eq!(Characteristic::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Characteristic::Prime(3).value(), 3);
        assert_eq!(Characteristic::Zero.to_string(), "0");
        assert_eq!(Characteristic::Prime(5).to_string(), "5");
    }
}
