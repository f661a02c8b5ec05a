//! Exact scalar arithmetic: arbitrary-precision binomials, base-p digits and
//! the digitwise binomial reduction, and finite fields with Artin-Schreier
//! solving (see [`gf`]).

pub mod gf;

pub use gf::{
    artin_schreier_solve, extend_by_artin_schreier, ArtinSchreierExtension, FieldDescriptor,
    FieldEmbedding, GfElem,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn big_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial `C(a, t) = a(a-1)...(a-t+1)/t!` for integer `a`,
/// possibly negative. Always an integer.
pub fn generalized_binomial(a: i64, t: u64) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..t {
        num *= BigInt::from(a) - BigInt::from(i);
    }
    for i in 1..=t {
        num /= BigInt::from(i);
    }
    num
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Base-p expansion of a nonnegative integer, least significant digit first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitVector {
    pub digits: Vec<u64>,
    pub base: u64,
}

impl DigitVector {
    /// The integer the digits reconstruct to.
    pub fn reconstruct(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.base + d)
    }

    /// Digit at position `e`, zero beyond the expansion.
    pub fn digit(&self, e: usize) -> u64 {
        self.digits.get(e).copied().unwrap_or(0)
    }
}

/// Base-p digits of `d`; empty for `d = 0`, leading digit nonzero otherwise.
pub fn base_p_digits(d: u64, p: u64) -> Result<DigitVector> {
    check_prime(p)?;
    let mut digits = Vec::new();
    let mut d = d;
    while d > 0 {
        digits.push(d % p);
        d /= p;
    }
    Ok(DigitVector { digits, base: p })
}

/// `C(d, k) mod p` by the digitwise product over base-p expansions.
pub fn binom_mod_p(d: u64, k: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    let mut d = d;
    let mut k = k;
    let mut acc = 1u64;
    while k > 0 || d > 0 {
        let (dd, kk) = (d % p, k % p);
        if kk > dd {
            return Ok(0);
        }
        acc = acc * small_binomial_mod(dd, kk, p) % p;
        d /= p;
        k /= p;
    }
    Ok(acc)
}

/// `C(a, b) mod p` for `0 <= b <= a < p`.
fn small_binomial_mod(a: u64, b: u64, p: u64) -> u64 {
    let b = b.min(a - b);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * mod_inverse(den, p) % p
}

/// Inverse of `a` modulo prime `p` via Fermat.
pub fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a % p, p - 2, p)
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Reduce a [`BigInt`] into `[0, p)`.
pub fn bigint_mod_p(v: &BigInt, p: u64) -> u64 {
    use num_integer::Integer;
    let m = v.mod_floor(&BigInt::from(p));
    let digits = m.to_u64_digits().1;
    digits.first().copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_small() {
        assert_eq!(big_binomial(5, 2), BigInt::from(10));
        assert_eq!(big_binomial(7, 4), BigInt::from(35));
        assert_eq!(big_binomial(0, 0), BigInt::from(1));
        assert_eq!(big_binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(generalized_binomial(5, 2), BigInt::from(10));
        assert_eq!(generalized_binomial(-1, 1), BigInt::from(-1));
        assert_eq!(generalized_binomial(-1, 3), BigInt::from(-1));
        assert_eq!(generalized_binomial(-2, 2), BigInt::from(3));
        assert_eq!(generalized_binomial(2, 3), BigInt::from(0));
    }

    #[test]
    fn digits() {
        assert_eq!(base_p_digits(5, 2).unwrap().digits, vec![1, 0, 1]);
        assert_eq!(base_p_digits(0, 7).unwrap().digits, Vec::<u64>::new());
        // oracle: repeated division
        let dv = base_p_digits(35, 3).unwrap();
        assert_eq!(dv.digits, vec![2, 2, 0, 1]);
        assert_eq!(dv.reconstruct(), 35);
        assert!(base_p_digits(4, 4).is_err());
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(binom_mod_p(5, 2, 2).unwrap(), 0);
        assert_eq!(binom_mod_p(5, 1, 2).unwrap(), 1);
        let expect = bigint_mod_p(&big_binomial(35, 4), 3);
        assert_eq!(binom_mod_p(35, 4, 3).unwrap(), expect);
    }

    #[test]
    fn lucas_matches_big_binomial() {
        for p in [2u64, 3, 5, 7] {
            for d in 0..60u64 {
                for k in 0..60u64 {
                    let expect = bigint_mod_p(&big_binomial(d, k), p);
                    assert_eq!(binom_mod_p(d, k, p).unwrap(), expect, "d={d} k={k} p={p}");
                }
            }
        }
    }

    #[test]
    fn digit_statement_small() {
        // C(d, p^e) mod p equals digit s_e of the base-p expansion.
        for p in [2u64, 3] {
            for d in 0..200u64 {
                let dv = base_p_digits(d, p).unwrap();
                for e in 0..5usize {
                    let q = p.pow(e as u32);
                    assert_eq!(binom_mod_p(d, q, p).unwrap(), dv.digit(e) % p);
                }
            }
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
    }
}
