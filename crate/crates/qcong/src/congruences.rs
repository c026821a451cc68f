//! Right-hand-side builders and verifiers for the q-binomial congruence
//! families.
//!
//! With `C = binom`, `[..]_q` the Gaussian binomial, `sigma_n = (-1)^(n-1)`
//! and `H_{n-1}(q) = sum_{k<n} q^k/(1-q^k)`, the verified congruences are:
//!
//! - `straub2` (mod `Phi_n^3`):
//!   `[an,bn]_q ≡ [a,b]_{q^(n^2)} - b(a-b)C(a,b) (n^2-1)/24 (q^n-1)^2`
//! - `monomial3` (mod `Phi_n^2`):
//!   `[an,bn]_q sigma_n^b q^C(bn,2) ≡ C(a-1,b) + C(a-1,a-b) sigma_n^a q^C(an,2)`
//! - `andrews4` (mod `Phi_n^2`):
//!   `[an,bn]_q ≡ sigma_n^(b(a-b)) q^(b(a-b)C(n,2)) [a,b]_{q^n}`
//! - `pan5` (mod `Phi_n^3`): the previous plus
//!   `a b(a-b) C(a,b) (n^2-1)/24 (q^n-1)^2`
//! - `theorem1` / `theorem2` (mod `Phi_n^4`): the harmonic-sum refinements
//!   of `straub2` and `pan5`,
//! - the q-harmonic congruences for `H_{n-1}` mod `Phi_n^2` and `Phi_n^3`,
//! - the classical integer congruences `C(ap,bp) ≡ C(a,b) (mod p^3)` and its
//!   `p^4` refinement with the harmonic-number correction.
//!
//! Left- and right-hand sides are assembled as [`RationalFunction`] values
//! even when polynomial, so a single code path feeds the congruence
//! predicate.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{
    self, binom, binom_rat, harmonic_number, is_prime, rat, ratio, sigma_pow, valuation,
};
use crate::cyclo::{congruent, CycloModulus};
use crate::poly::{Poly, Rat, RationalFunction};
use crate::qcalc::q_binomial;
use crate::report::CongruenceReport;
use crate::{Error, Result};

/// The four named q-congruence families of fixed modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnownCongruence {
    /// Mod `Phi^3` with the `(n^2-1)/24` correction on the `q^(n^2)` base.
    Straub2,
    /// Mod `Phi^2` with a two-monomial right-hand side.
    Monomial3,
    /// Mod `Phi^2` with the monomial-weighted `q^n` base.
    Andrews4,
    /// Mod `Phi^3` extending `andrews4` with the `(n^2-1)/24` correction.
    Pan5,
}

impl KnownCongruence {
    pub const ALL: [KnownCongruence; 4] = [
        KnownCongruence::Straub2,
        KnownCongruence::Monomial3,
        KnownCongruence::Andrews4,
        KnownCongruence::Pan5,
    ];

    pub fn id(self) -> &'static str {
        match self {
            KnownCongruence::Straub2 => "straub2",
            KnownCongruence::Monomial3 => "monomial3",
            KnownCongruence::Andrews4 => "andrews4",
            KnownCongruence::Pan5 => "pan5",
        }
    }

    /// Power of `Phi_n` in the stated modulus.
    pub fn modulus_power(self) -> u32 {
        match self {
            KnownCongruence::Straub2 | KnownCongruence::Pan5 => 3,
            KnownCongruence::Monomial3 | KnownCongruence::Andrews4 => 2,
        }
    }
}

/// The q-harmonic sum `H_{n-1}(q) = sum_{k=1}^{n-1} q^k/(1-q^k)`, normalized;
/// its denominator is coprime to `Phi_n`.
pub fn harmonic_sum(n: u32) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for k in 1..n as usize {
        let term =
            RationalFunction::new(Poly::monomial(Rat::one(), k), Poly::one_minus_q_pow(k))
                .expect("denominator nonzero");
        acc = &acc + &term;
    }
    acc
}

/// The sum `S_{n-1}(q) = (1/2) sum_{k=1}^{n-1} k q^k ((k+1)q^k + k - 1) /
/// (1-q^k)^3`, normalized; denominator coprime to `Phi_n`.
pub fn s_sum(n: u32) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for k in 1..n as u64 {
        // summand numerator: k(k+1)/2 q^(2k) + k(k-1)/2 q^k
        let num = &Poly::monomial(ratio((k * (k + 1)) as i64, 2), 2 * k as usize)
            + &Poly::monomial(ratio((k * (k - 1)) as i64, 2), k as usize);
        let den = Poly::one_minus_q_pow(k as usize).pow(3);
        let term = RationalFunction::new(num, den).expect("denominator nonzero");
        acc = &acc + &term;
    }
    acc
}

/// `(q^n - 1)^e` as a rational function.
fn q_pow_shift(n: u32, e: u32) -> RationalFunction {
    RationalFunction::from_poly(Poly::q_pow_minus_one(n as usize).pow(e))
}

/// Left-hand side shared by most families: the plain Gaussian binomial
/// `[an choose bn]_q`.
pub fn qbin_lhs(a: u64, b: u64, n: u32) -> RationalFunction {
    RationalFunction::from_poly(q_binomial(a * n as u64, (b * n as u64) as i64))
}

/// Left-hand side of the two-monomial congruence:
/// `[an choose bn]_q sigma_n^b q^C(bn,2)`.
pub fn monomial_lhs(a: u64, b: u64, n: u32) -> RationalFunction {
    let bn = b * n as u64;
    let weight = Poly::monomial(
        sigma_pow(n as u64, b as i64),
        (bn * bn.saturating_sub(1) / 2) as usize,
    );
    RationalFunction::from_poly(&q_binomial(a * n as u64, bn as i64) * &weight)
}

/// RHS of the mod-`Phi^3` congruence on the `q^(n^2)` base:
/// `[a,b]_{q^(n^2)} - b(a-b)C(a,b) (n^2-1)/24 (q^n-1)^2`.
pub fn straub_rhs(a: u64, b: u64, n: u32) -> RationalFunction {
    let nn = n as i64;
    let base = RationalFunction::from_poly(
        q_binomial(a, b as i64).subst_power((n as usize) * (n as usize)),
    );
    let coeff =
        binom_rat(a as i64, b as i64) * rat((b * (a - b)) as i64) * ratio(nn * nn - 1, 24);
    let correction = &RationalFunction::from_rat(coeff) * &q_pow_shift(n, 2);
    &base - &correction
}

/// RHS of the two-monomial mod-`Phi^2` congruence:
/// `C(a-1,b) + C(a-1,a-b) sigma_n^a q^C(an,2)`.
pub fn monomial_rhs(a: u64, b: u64, n: u32) -> RationalFunction {
    let an = a * n as u64;
    let first = Poly::constant(binom_rat(a as i64 - 1, b as i64));
    let second = Poly::monomial(
        binom_rat(a as i64 - 1, (a - b) as i64) * sigma_pow(n as u64, a as i64),
        (an * an.saturating_sub(1) / 2) as usize,
    );
    RationalFunction::from_poly(&first + &second)
}

/// RHS of the monomial-weighted mod-`Phi^2` congruence:
/// `sigma_n^(b(a-b)) q^(b(a-b)C(n,2)) [a,b]_{q^n}`.
pub fn andrews_rhs(a: u64, b: u64, n: u32) -> RationalFunction {
    let c2 = (b * (a - b)) as i64;
    let weight = Poly::monomial(
        sigma_pow(n as u64, c2),
        (c2 as usize) * (n as usize) * (n as usize - 1) / 2,
    );
    RationalFunction::from_poly(&q_binomial(a, b as i64).subst_power(n as usize) * &weight)
}

/// RHS of the mod-`Phi^3` congruence on the `q^n` base: `andrews_rhs` plus
/// `a b(a-b) C(a,b) (n^2-1)/24 (q^n-1)^2`.
pub fn pan_rhs(a: u64, b: u64, n: u32) -> RationalFunction {
    let nn = n as i64;
    let coeff = binom_rat(a as i64, b as i64)
        * rat((a * b * (a - b)) as i64)
        * ratio(nn * nn - 1, 24);
    let correction = &RationalFunction::from_rat(coeff) * &q_pow_shift(n, 2);
    &andrews_rhs(a, b, n) + &correction
}

/// RHS of the mod-`Phi^4` refinement on the `q^(n^2)` base:
///
/// `[a,b]_{q^(n^2)} - b(a-b)C(a,b)(q^n-1) ( a H_{n-1} + a(n-1)/2
///   + (a+1)(n^2-1)/24 (q^n-1) + (b(a-b)n-a-2)(n^2-1)/48 (q^n-1)^2 )`.
pub fn theorem1_rhs(a: u64, b: u64, n: u32) -> RationalFunction {
    let nn = n as i64;
    let base = RationalFunction::from_poly(
        q_binomial(a, b as i64).subst_power((n as usize) * (n as usize)),
    );
    let h = harmonic_sum(n);
    let mut bracket = &RationalFunction::from_rat(rat(a as i64)) * &h;
    bracket = &bracket + &RationalFunction::from_rat(ratio(a as i64 * (nn - 1), 2));
    bracket = &bracket
        + &(&RationalFunction::from_rat(ratio((a as i64 + 1) * (nn * nn - 1), 24))
            * &q_pow_shift(n, 1));
    let c = (b * (a - b)) as i64 * nn - a as i64 - 2;
    bracket = &bracket
        + &(&RationalFunction::from_rat(ratio(c * (nn * nn - 1), 48)) * &q_pow_shift(n, 2));
    let outer = binom_rat(a as i64, b as i64) * rat((b * (a - b)) as i64);
    let correction = &(&RationalFunction::from_rat(outer) * &q_pow_shift(n, 1)) * &bracket;
    &base - &correction
}

/// RHS of the mod-`Phi^4` refinement on the `q^n` base:
///
/// `sigma_n^(b(a-b)) q^(b(a-b)C(n,2)) [a,b]_{q^n} - a b(a-b)C(a,b)(q^n-1)
///   ( H_{n-1} + (n-1)/2 - (b(a-b)n-1)(n^2-1)/48 (q^n-1)^2 )`.
pub fn theorem2_rhs(a: u64, b: u64, n: u32) -> RationalFunction {
    let nn = n as i64;
    let h = harmonic_sum(n);
    let mut bracket = &h + &RationalFunction::from_rat(ratio(nn - 1, 2));
    let c = (b * (a - b)) as i64 * nn - 1;
    bracket = &bracket
        - &(&RationalFunction::from_rat(ratio(c * (nn * nn - 1), 48)) * &q_pow_shift(n, 2));
    let outer = binom_rat(a as i64, b as i64) * rat((a * b * (a - b)) as i64);
    let correction = &(&RationalFunction::from_rat(outer) * &q_pow_shift(n, 1)) * &bracket;
    &andrews_rhs(a, b, n) - &correction
}

/// RHS of the q-harmonic congruence for `H_{n-1}` modulo `Phi_n^k`,
/// `k` in `{2, 3}`:
///
/// `-(n-1)/2 - (n^2-1)/24 (q^n-1)` and, for `k = 3`, additionally
/// `+ (n-1)(n^2-1)/(48n) (q^n-1)^2 + (q^n-1)^2/n^2 S_{n-1}(q)`.
pub fn harmonic_rhs(n: u32, k: u32) -> RationalFunction {
    assert!(k == 2 || k == 3, "harmonic congruence has k in {{2,3}}");
    let nn = n as i64;
    let mut rhs = RationalFunction::from_rat(ratio(-(nn - 1), 2));
    rhs = &rhs - &(&RationalFunction::from_rat(ratio(nn * nn - 1, 24)) * &q_pow_shift(n, 1));
    if k == 3 {
        rhs = &rhs
            + &(&RationalFunction::from_rat(ratio((nn - 1) * (nn * nn - 1), 48 * nn))
                * &q_pow_shift(n, 2));
        let s_term =
            &(&RationalFunction::from_rat(ratio(1, nn * nn)) * &q_pow_shift(n, 2)) * &s_sum(n);
        rhs = &rhs + &s_term;
    }
    rhs
}

fn check_pair(a: u64, b: u64) -> Result<()> {
    if b > a {
        return Err(Error::InvalidParams(format!(
            "need 0 <= b <= a, got a={a} b={b}"
        )));
    }
    Ok(())
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParams(
            "n >= 2 required (use the permissive variant to explore n = 1)".to_string(),
        ));
    }
    Ok(())
}

fn finish(report: CongruenceReport, family: &str, a: u64, b: u64, start: Instant) -> CongruenceReport {
    report
        .with_family(family)
        .with_param("a", a as i64)
        .with_param("b", b as i64)
        .with_elapsed(start.elapsed())
}

/// Verifies one of the four named congruences at its stated modulus.
pub fn verify_known_congruence(
    family: KnownCongruence,
    a: u64,
    b: u64,
    n: u32,
) -> Result<CongruenceReport> {
    check_n(n)?;
    verify_known_congruence_any_n(family, a, b, n)
}

/// Exploratory variant without the `n >= 2` gate; for `n = 1` the outcome is
/// reported without any claim attached.
pub fn verify_known_congruence_any_n(
    family: KnownCongruence,
    a: u64,
    b: u64,
    n: u32,
) -> Result<CongruenceReport> {
    check_pair(a, b)?;
    let start = Instant::now();
    let modulus = CycloModulus::new(n, family.modulus_power());
    let (lhs, rhs) = known_congruence_sides(family, a, b, n);
    let report = congruent(&lhs, &rhs, &modulus)?;
    Ok(finish(report, family.id(), a, b, start))
}

/// The exact left- and right-hand sides of a named congruence; exposed so
/// tests can reduce, mutate and re-expand them independently.
pub fn known_congruence_sides(
    family: KnownCongruence,
    a: u64,
    b: u64,
    n: u32,
) -> (RationalFunction, RationalFunction) {
    match family {
        KnownCongruence::Straub2 => (qbin_lhs(a, b, n), straub_rhs(a, b, n)),
        KnownCongruence::Monomial3 => (monomial_lhs(a, b, n), monomial_rhs(a, b, n)),
        KnownCongruence::Andrews4 => (qbin_lhs(a, b, n), andrews_rhs(a, b, n)),
        KnownCongruence::Pan5 => (qbin_lhs(a, b, n), pan_rhs(a, b, n)),
    }
}

/// Verifies the mod-`Phi_n^4` congruence on the `q^(n^2)` base for `n > 1`.
pub fn verify_theorem1(a: u64, b: u64, n: u32) -> Result<CongruenceReport> {
    check_n(n)?;
    verify_theorem1_any_n(a, b, n)
}

/// Exploratory variant allowing `n = 1` (where both sides coincide
/// trivially).
pub fn verify_theorem1_any_n(a: u64, b: u64, n: u32) -> Result<CongruenceReport> {
    check_pair(a, b)?;
    let start = Instant::now();
    let modulus = CycloModulus::new(n, 4);
    let report = congruent(&qbin_lhs(a, b, n), &theorem1_rhs(a, b, n), &modulus)?;
    Ok(finish(report, "theorem1", a, b, start))
}

/// Verifies the mod-`Phi_n^4` congruence on the `q^n` base for `n > 1`.
pub fn verify_theorem2(a: u64, b: u64, n: u32) -> Result<CongruenceReport> {
    check_n(n)?;
    verify_theorem2_any_n(a, b, n)
}

/// Exploratory variant allowing `n = 1`.
pub fn verify_theorem2_any_n(a: u64, b: u64, n: u32) -> Result<CongruenceReport> {
    check_pair(a, b)?;
    let start = Instant::now();
    let modulus = CycloModulus::new(n, 4);
    let report = congruent(&qbin_lhs(a, b, n), &theorem2_rhs(a, b, n), &modulus)?;
    Ok(finish(report, "theorem2", a, b, start))
}

/// Verifies the q-harmonic congruence `H_{n-1} ≡ harmonic_rhs(n, k)` modulo
/// `Phi_n^k`, `k` in `{2, 3}`.
pub fn verify_harmonic_congruence(n: u32, k: u32) -> Result<CongruenceReport> {
    check_n(n)?;
    if k != 2 && k != 3 {
        return Err(Error::InvalidParams(format!(
            "harmonic congruence modulus power must be 2 or 3, got {k}"
        )));
    }
    let start = Instant::now();
    let modulus = CycloModulus::new(n, k);
    let report = congruent(&harmonic_sum(n), &harmonic_rhs(n, k), &modulus)?;
    Ok(report.with_family("harmonic").with_elapsed(start.elapsed()))
}

/// Verifies the classical integer congruences underlying the q-analogues:
/// level 3 is `p^3 | C(ap,bp) - C(a,b)`; level 4 checks that
/// `C(ap,bp) - C(a,b) - a b(a-b) C(a,b) p H_{p-1}` is a rational whose
/// numerator is divisible by `p^4` (its denominator is coprime to `p`).
pub fn verify_classical_integer(a: u64, b: u64, p: u64, level: u32) -> Result<CongruenceReport> {
    check_pair(a, b)?;
    if level != 3 && level != 4 {
        return Err(Error::InvalidParams(format!(
            "classical congruence level must be 3 or 4, got {level}"
        )));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::PrimeTooSmall(p));
    }
    let start = Instant::now();
    let remainder = if level == 3 {
        let diff = binom((a * p) as i64, (b * p) as i64) - binom(a as i64, b as i64);
        let modulus = BigInt::from(p).pow(3);
        Poly::constant(Rat::from_integer(num_integer::Integer::mod_floor(
            &diff, &modulus,
        )))
    } else {
        let residual = classical_level4_residual(a, b, p);
        debug_assert!(arith::denominator_coprime_to(&residual, p));
        if residual.is_zero() || valuation(residual.numer().clone(), p) >= 4 {
            Poly::zero()
        } else {
            Poly::constant(residual)
        }
    };
    Ok(CongruenceReport::new("classical")
        .with_param("a", a as i64)
        .with_param("b", b as i64)
        .with_param("n", p as i64)
        .with_param("k", level as i64)
        .with_remainder(remainder)
        .with_elapsed(start.elapsed()))
}

/// Exact value of `C(ap,bp) - C(a,b) - a b(a-b) C(a,b) p H_{p-1}` used by
/// the level-4 classical congruence; exposed for the worked examples.
pub fn classical_level4_residual(a: u64, b: u64, p: u64) -> Rat {
    let diff = binom((a * p) as i64, (b * p) as i64) - binom(a as i64, b as i64);
    let correction = rat((a * b * (a - b)) as i64)
        * binom_rat(a as i64, b as i64)
        * rat(p as i64)
        * harmonic_number(p - 1);
    Rat::from_integer(diff) - correction
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::reduce_mod;

    #[test]
    fn harmonic_sum_small() {
        assert!(harmonic_sum(1).is_zero());
        // H_1 = q/(1-q), monic-normalized
        let h2 = harmonic_sum(2);
        assert_eq!(h2.num(), &Poly::from_int_coeffs(&[0, -1]));
        assert_eq!(h2.den(), &Poly::from_int_coeffs(&[-1, 1]));
        // H_2 = (q + 2q^2)/(1 - q^2) up to normalization
        let h3 = harmonic_sum(3);
        let expected = RationalFunction::new(
            Poly::from_int_coeffs(&[0, 1, 2]),
            Poly::from_int_coeffs(&[1, 0, -1]),
        )
        .unwrap();
        assert_eq!(h3, expected);
    }

    #[test]
    fn s_sum_small() {
        assert!(s_sum(1).is_zero());
        // S_1 = q^2/(1-q)^3, by substituting k = 1 into the summand
        let expected = RationalFunction::new(
            Poly::from_int_coeffs(&[0, 0, 1]),
            Poly::one_minus_q_pow(1).pow(3),
        )
        .unwrap();
        assert_eq!(s_sum(2), expected);
        // S_2 adds the k = 2 term (3q^4 + q^2)/(1-q^2)^3
        let term2 = RationalFunction::new(
            Poly::from_int_coeffs(&[0, 0, 1, 0, 3]),
            Poly::one_minus_q_pow(2).pow(3),
        )
        .unwrap();
        assert_eq!(s_sum(3), &expected + &term2);
    }

    #[test]
    fn known_congruences_hold() {
        for (family, a, b, n) in [
            (KnownCongruence::Straub2, 2, 1, 3),
            (KnownCongruence::Monomial3, 2, 1, 2),
            (KnownCongruence::Andrews4, 3, 1, 4),
            (KnownCongruence::Pan5, 3, 1, 5),
        ] {
            let r = verify_known_congruence(family, a, b, n).unwrap();
            assert!(r.holds, "{} ({a},{b},{n})", family.id());
        }
    }

    #[test]
    fn monomial3_hand_check_at_minus_one() {
        // At n = 2 both sides specialize to 2 at q = -1.
        let (lhs, rhs) = known_congruence_sides(KnownCongruence::Monomial3, 2, 1, 2);
        assert_eq!(lhs.eval(&rat(-1)).unwrap(), rat(2));
        assert_eq!(rhs.eval(&rat(-1)).unwrap(), rat(2));
    }

    #[test]
    fn pan5_mutated_fails() {
        // negative control: delete the (n^2-1)/24 correction term
        let lhs = qbin_lhs(3, 1, 5);
        let mutated = andrews_rhs(3, 1, 5);
        let modulus = CycloModulus::new(5, 3);
        assert!(!congruent(&lhs, &mutated, &modulus).unwrap().holds);
    }

    #[test]
    fn theorems_hold_small() {
        assert!(verify_theorem1(2, 1, 5).unwrap().holds);
        assert!(verify_theorem1(4, 2, 3).unwrap().holds);
        assert!(verify_theorem1(3, 0, 4).unwrap().holds);
        assert!(verify_theorem2(2, 1, 5).unwrap().holds);
        assert!(verify_theorem2(3, 1, 4).unwrap().holds);
        assert!(verify_theorem2(3, 3, 4).unwrap().holds);
    }

    #[test]
    fn theorem_verifiers_gate_n1() {
        assert!(verify_theorem1(2, 1, 1).is_err());
        assert!(verify_theorem1_any_n(2, 1, 1).unwrap().holds);
        assert!(verify_theorem2(2, 1, 1).is_err());
    }

    #[test]
    fn harmonic_congruences_hold() {
        assert!(verify_harmonic_congruence(5, 2).unwrap().holds);
        assert!(verify_harmonic_congruence(5, 3).unwrap().holds);
        assert!(verify_harmonic_congruence(2, 3).unwrap().holds);
    }

    #[test]
    fn classical_worked_case() {
        // C(10,5) - C(2,1) = 250 = 2 * 5^3
        let r = verify_classical_integer(2, 1, 5, 3).unwrap();
        assert!(r.holds);
        assert_eq!(binom(10, 5) - binom(2, 1), BigInt::from(250));
        // level 4: 252 - 2 - 5*4*(25/12) = 625/3 with 625 = 5^4
        assert_eq!(classical_level4_residual(2, 1, 5), ratio(625, 3));
        assert!(verify_classical_integer(2, 1, 5, 4).unwrap().holds);
    }

    #[test]
    fn classical_gates() {
        assert!(matches!(
            verify_classical_integer(2, 1, 3, 3),
            Err(Error::PrimeTooSmall(3))
        ));
        assert!(matches!(
            verify_classical_integer(2, 1, 9, 3),
            Err(Error::NotPrime(9))
        ));
    }

    #[test]
    fn theorem1_remainder_vanishes_at_lower_powers() {
        // holding mod Phi^4 implies vanishing after reduction mod Phi^3..Phi^1
        let diff = &qbin_lhs(2, 1, 3) - &theorem1_rhs(2, 1, 3);
        for k in 1..=4 {
            let m = CycloModulus::new(3, k);
            assert!(reduce_mod(diff.num(), &m).is_zero(), "k={k}");
        }
    }

    #[test]
    fn q_to_one_specialization() {
        // The (q^n-1) factor cancels the pole of H_{n-1} at q = 1, so
        // LHS - RHS is regular there, and its value is exactly the residual
        // of the classical level-4 congruence with n in the role of p.
        for (a, b, n) in [(3u64, 1u64, 4u32), (2, 1, 5), (4, 2, 3)] {
            let diff = &qbin_lhs(a, b, n) - &theorem1_rhs(a, b, n);
            assert!(!diff.den().eval(&rat(1)).is_zero(), "regular at q=1");
            let classical = binom_rat((a * n as u64) as i64, (b * n as u64) as i64)
                - binom_rat(a as i64, b as i64)
                - rat((a * b * (a - b)) as i64)
                    * binom_rat(a as i64, b as i64)
                    * rat(n as i64)
                    * harmonic_number(n as u64 - 1);
            assert_eq!(diff.eval(&rat(1)).unwrap(), classical, "({a},{b},{n})");
        }
    }
}
