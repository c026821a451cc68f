//! Cyclotomic polynomials and the congruence predicate modulo
//! `Phi_n(q)^k`.
//!
//! `Phi_n(q)` is the minimal polynomial of a primitive n-th root of unity,
//! the q-analogue of a prime. A congruence `A(q) ≡ B(q) (mod Phi_n(q)^k)`
//! between rational functions means: the denominators of `A` and `B` are
//! coprime to `Phi_n(q)`, and `Phi_n(q)^k` divides the numerator of `A - B`.
//! When a denominator shares a factor with `Phi_n` the congruence is
//! ill-posed — a distinct outcome from merely failing, reported as
//! [`Error::DenominatorNotCoprime`].

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};
use std::time::Instant;

use crate::arith::divisors;
use crate::poly::{Poly, RationalFunction};
use crate::report::CongruenceReport;
use crate::{Error, Result};

fn cache() -> &'static RwLock<HashMap<u32, Poly>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial, exact, monic and integral; results are
/// memoized.
///
/// Computed by the recursion `Phi_n = (q^n - 1) / prod_{d|n, d<n} Phi_d`,
/// which reuses the cache; the Möbius product formula serves as an
/// independent oracle in the tests. Concurrent queries may compute the same
/// polynomial twice but always return identical values.
pub fn cyclotomic(n: u32) -> Poly {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().read().expect("cyclotomic cache poisoned").get(&n) {
        return p.clone();
    }
    let phi = if n == 1 {
        Poly::from_int_coeffs(&[-1, 1])
    } else {
        let mut divisor_product = Poly::one();
        for d in divisors(n as u64) {
            if (d as u32) < n {
                divisor_product = &divisor_product * &cyclotomic(d as u32);
            }
        }
        Poly::q_pow_minus_one(n as usize)
            .exact_div(&divisor_product)
            .expect("prod_{d|n} Phi_d divides q^n - 1")
    };
    cache()
        .write()
        .expect("cyclotomic cache poisoned")
        .insert(n, phi.clone());
    phi
}

/// The modulus `Phi_n(q)^k` with its ingredients cached.
#[derive(Debug, Clone)]
pub struct CycloModulus {
    n: u32,
    k: u32,
    phi: Poly,
    phi_pow: Poly,
}

impl CycloModulus {
    pub fn new(n: u32, k: u32) -> Self {
        assert!(n >= 1 && k >= 1, "modulus requires n >= 1 and k >= 1");
        let phi = cyclotomic(n);
        let phi_pow = phi.pow(k);
        CycloModulus { n, k, phi, phi_pow }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn phi(&self) -> &Poly {
        &self.phi
    }

    pub fn phi_pow(&self) -> &Poly {
        &self.phi_pow
    }
}

/// Canonical representative of `p` modulo `Phi_n(q)^k`; the result has
/// degree below `k * totient(n)`.
pub fn reduce_mod(p: &Poly, modulus: &CycloModulus) -> Poly {
    p.divrem(modulus.phi_pow())
        .expect("modulus is nonzero")
        .1
}

/// Tests `a ≡ b (mod Phi_n(q)^k)` for rational functions.
///
/// Divisibility is decided by exact division of the difference numerator,
/// never by numeric evaluation. The returned report carries the reduced
/// difference numerator as `remainder` (zero iff the congruence holds) and
/// always records `n` and `k` in its params.
pub fn congruent(
    a: &RationalFunction,
    b: &RationalFunction,
    modulus: &CycloModulus,
) -> Result<CongruenceReport> {
    let start = Instant::now();
    let diff = a - b;
    if !diff.den().is_one() {
        let shared = diff.den().gcd(modulus.phi());
        if !shared.is_constant() {
            return Err(Error::DenominatorNotCoprime { n: modulus.n });
        }
    }
    let remainder = reduce_mod(diff.num(), modulus);
    Ok(CongruenceReport::new("congruent")
        .with_param("n", modulus.n as i64)
        .with_param("k", modulus.k as i64)
        .with_remainder(remainder)
        .with_elapsed(start.elapsed()))
}
