//! Small exact-arithmetic helpers: rationals, binomial coefficients and
//! elementary number theory used across the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::Rat;

/// Exact rational from an integer.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient `C(m, j)` with the convention `C(m, j) = 0` for
/// `j < 0` or `j > m`.
pub fn binom(m: i64, j: i64) -> BigInt {
    if j < 0 || j > m {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(m), BigInt::from(j))
}

/// `C(m, j)` as a rational.
pub fn binom_rat(m: i64, j: i64) -> Rat {
    BigRational::from_integer(binom(m, j))
}

/// Exact factorial.
pub fn factorial(m: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=m {
        acc *= BigInt::from(i);
    }
    acc
}

/// The sign `sigma_n = (-1)^(n-1)` raised to an integer power `e`.
pub fn sigma_pow(n: u64, e: i64) -> Rat {
    if (n - 1) % 2 == 1 && e % 2 != 0 {
        -rat(1)
    } else {
        rat(1)
    }
}

/// Deterministic primality test by trial division; fine for the word-sized
/// inputs used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Euler's totient by trial factorization.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            phi -= phi / p;
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

/// Möbius function by trial factorization.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut m = n;
    let mut factors = 0;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if m > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Floor of a rational times an integer: `floor(a * x)`.
pub fn floor_mul(a: u64, x: &Rat) -> BigInt {
    (x * rat(a as i64)).floor().to_integer()
}

/// p-adic valuation of a nonzero big integer.
pub fn valuation(mut m: BigInt, p: u64) -> u32 {
    assert!(!m.is_zero());
    let p = BigInt::from(p);
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// True when `p` does not divide the denominator of `x`.
pub fn denominator_coprime_to(x: &Rat, p: u64) -> bool {
    !(x.denom() % BigInt::from(p)).is_zero()
}

/// Harmonic number `H_m = 1 + 1/2 + ... + 1/m` as an exact rational.
pub fn harmonic_number(m: u64) -> Rat {
    let mut acc = Rat::zero();
    for k in 1..=m {
        acc += ratio(1, k as i64);
    }
    acc
}

/// Canonical rendering of a rational: `p` when integral, else `p/q`.
pub fn render_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Renders `x` with non-integral values parenthesized, for use as a leading
/// coefficient in polynomial output.
pub fn render_coeff(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("({}/{})", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }

    #[test]
    fn totient_small() {
        let expected = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &phi) in expected.iter().enumerate() {
            assert_eq!(totient(i as u64 + 1), phi);
        }
    }

    #[test]
    fn mobius_small() {
        let expected = [1i64, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &mu) in expected.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1), mu);
        }
    }

    #[test]
    fn primes_small() {
        let primes: Vec<u64> = (0..=30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn sigma_parity() {
        assert_eq!(sigma_pow(1, 1), rat(1));
        assert_eq!(sigma_pow(2, 1), rat(-1));
        assert_eq!(sigma_pow(2, 2), rat(1));
        assert_eq!(sigma_pow(7, 3), rat(1));
        assert_eq!(sigma_pow(4, -1), rat(-1));
    }

    #[test]
    fn harmonic_h4() {
        assert_eq!(harmonic_number(4), ratio(25, 12));
    }

    #[test]
    fn valuation_basic() {
        assert_eq!(valuation(BigInt::from(250), 5), 3);
        assert_eq!(valuation(BigInt::from(625), 5), 4);
        assert_eq!(valuation(BigInt::from(7), 5), 0);
    }
}
