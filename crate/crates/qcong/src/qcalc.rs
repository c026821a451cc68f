//! q-numbers, q-factorials, Gaussian binomial coefficients, and q-Pochhammer
//! symbols in an auxiliary variable `x`.
//!
//! The basic objects are `[a] = (1 - q^a)/(1 - q) = 1 + q + ... + q^(a-1)`,
//! `[a]! = [1][2]...[a]`, and the q-binomial `[a]! / ([b]! [a-b]!)`, all of
//! them integral polynomials. The q-binomial is built by iterated exact
//! division of the product formula, so integrality is a runtime check; the
//! Pascal-type recurrence serves as the oracle in the tests.

use std::time::Instant;

use num_traits::One;

use crate::arith::{binom_rat, rat};
use crate::cyclo::{congruent, CycloModulus};
use crate::poly::{Poly, Rat, RationalFunction};
use crate::report::CongruenceReport;
use crate::Result;

/// The q-number `[a] = 1 + q + ... + q^(a-1)` (zero for `a = 0`).
pub fn q_number(a: u64) -> Poly {
    Poly::new(vec![Rat::one(); a as usize])
}

/// The q-factorial `[a]! = [1][2]...[a]`, an integral polynomial of degree
/// `a(a-1)/2`.
pub fn q_factorial(a: u64) -> Poly {
    // [i] = (1 - q^i)/(1 - q): multiply by the two-term factor and divide by
    // 1 - q once per step, keeping every operation linear in the degree.
    let one_minus_q = Poly::one_minus_q_pow(1);
    let mut acc = Poly::one();
    for i in 1..=a {
        acc = &acc * &Poly::one_minus_q_pow(i as usize);
        acc = acc.exact_div(&one_minus_q).expect("[i] divides exactly");
    }
    acc
}

/// The Gaussian binomial `[a choose b]_q`, with the convention that it is
/// zero for `b < 0` or `b > a`. Integral of degree `b(a-b)`, palindromic,
/// and specializing to `C(a, b)` at `q = 1`.
pub fn q_binomial(a: u64, b: i64) -> Poly {
    if b < 0 || b as u64 > a {
        return Poly::zero();
    }
    let b = b as u64;
    // prod_{j=1..b} (1 - q^(a-b+j)) / (1 - q^j); after each step the value
    // is the Gaussian binomial [a-b+j choose j], so every division is exact.
    let mut acc = Poly::one();
    for j in 1..=b {
        acc = &acc * &Poly::one_minus_q_pow((a - b + j) as usize);
        acc = acc
            .exact_div(&Poly::one_minus_q_pow(j as usize))
            .expect("Gaussian binomial steps divide exactly");
    }
    acc
}

/// The sign `sigma_n = (-1)^(n-1)`.
pub fn sign_sigma(n: u64) -> i32 {
    assert!(n >= 1);
    if (n - 1) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Polynomial in `x` whose coefficients are polynomials in `q`.
///
/// The trailing coefficient is nonzero unless the whole value is zero; all
/// arithmetic is exact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XPoly {
    coeffs: Vec<Poly>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly {
            coeffs: vec![Poly::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `x`, `None` for zero.
    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^j` as a polynomial in `q`.
    pub fn coeff(&self, j: usize) -> Poly {
        self.coeffs.get(j).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &XPoly) -> XPoly {
        let mut out = vec![Poly::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        XPoly::new(out)
    }

    pub fn sub(&self, rhs: &XPoly) -> XPoly {
        let mut out = vec![Poly::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] = &out[i] - c;
        }
        XPoly::new(out)
    }

    pub fn mul(&self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![Poly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        XPoly::new(out)
    }
}

/// The q-Pochhammer symbol `(x; q)_N = prod_{l=0..N-1} (1 - x q^l)` expanded
/// as a polynomial in `x` of degree `N`.
pub fn q_pochhammer_x(n: u64) -> XPoly {
    let mut coeffs = vec![Poly::one()];
    for l in 0..n {
        let factor = Poly::monomial(Rat::one(), l as usize);
        let mut next = vec![Poly::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j] = &next[j] + c;
            next[j + 1] = &next[j + 1] - &(c * &factor);
        }
        coeffs = next;
    }
    XPoly::new(coeffs)
}

/// Checks the q-binomial theorem
/// `(x; q)_N = sum_k [N choose k]_q (-x)^k q^C(k,2)` as an exact identity of
/// `XPoly` values; the report's remainder is the first differing
/// `x`-coefficient.
pub fn check_q_binomial_theorem(n: u64) -> CongruenceReport {
    let start = Instant::now();
    let lhs = q_pochhammer_x(n);
    let rhs = q_binomial_theorem_rhs(n);
    let diff = lhs.sub(&rhs);
    let remainder = diff
        .coeffs()
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .unwrap_or_else(Poly::zero);
    CongruenceReport::new("q_binomial_theorem")
        .with_param("N", n as i64)
        .with_param("n", n as i64)
        .with_param("k", 0)
        .with_remainder(remainder)
        .with_elapsed(start.elapsed())
}

/// The right-hand side of the q-binomial theorem,
/// `sum_k [N choose k]_q (-1)^k q^C(k,2) x^k`.
pub fn q_binomial_theorem_rhs(n: u64) -> XPoly {
    let coeffs = (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            let exp = (k * k.saturating_sub(1) / 2) as usize;
            &q_binomial(n, k as i64).scale(&sign) * &Poly::monomial(Rat::one(), exp)
        })
        .collect();
    XPoly::new(coeffs)
}

/// Verifies the q-Lucas congruence
/// `[an choose bn]_q ≡ C(a, b) (mod Phi_n(q))`.
pub fn check_q_lucas(a: u64, b: u64, n: u32) -> Result<CongruenceReport> {
    if b > a {
        return Err(crate::Error::InvalidParams(format!(
            "q-Lucas requires 0 <= b <= a, got a={a} b={b}"
        )));
    }
    if n < 2 {
        return Err(crate::Error::InvalidParams(
            "q-Lucas requires n >= 2".to_string(),
        ));
    }
    let start = Instant::now();
    let lhs = RationalFunction::from_poly(q_binomial(a * n as u64, (b * n as u64) as i64));
    let rhs = RationalFunction::from_rat(binom_rat(a as i64, b as i64));
    let modulus = CycloModulus::new(n, 1);
    let report = congruent(&lhs, &rhs, &modulus)?;
    Ok(report
        .with_family("qlucas")
        .with_param("a", a as i64)
        .with_param("b", b as i64)
        .with_elapsed(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_int_coeffs(cs)
    }

    /// Pascal-type recurrence [m k] = [m-1 k-1] + q^k [m-1 k], the
    /// independent oracle for the product-formula construction.
    fn q_binomial_pascal(a: u64, b: i64) -> Poly {
        if b < 0 || b as u64 > a {
            return Poly::zero();
        }
        let mut row: Vec<Poly> = vec![Poly::one()];
        for m in 1..=a as usize {
            let mut next = Vec::with_capacity(m + 1);
            for k in 0..=m {
                let left = if k == 0 {
                    Poly::zero()
                } else {
                    row[k - 1].clone()
                };
                let right = if k == m {
                    Poly::zero()
                } else {
                    &row[k] * &Poly::monomial(Rat::one(), k)
                };
                next.push(&left + &right);
            }
            row = next;
        }
        row[b as usize].clone()
    }

    #[test]
    fn q_factorial_small() {
        assert_eq!(q_factorial(0), Poly::one());
        assert_eq!(q_factorial(1), Poly::one());
        // [3]! = (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3 (schoolbook oracle)
        assert_eq!(
            q_factorial(3),
            &q_number(2) * &q_number(3)
        );
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_binomial_small() {
        assert_eq!(q_binomial(2, 1), p(&[1, 1]));
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(3, 5), Poly::zero());
        assert_eq!(q_binomial(3, -1), Poly::zero());
        assert_eq!(q_binomial(5, 0), Poly::one());
    }

    #[test]
    fn q_binomial_matches_pascal_oracle() {
        for a in 0..=12u64 {
            for b in 0..=a as i64 {
                assert_eq!(
                    q_binomial(a, b),
                    q_binomial_pascal(a, b),
                    "[{a} choose {b}]_q"
                );
            }
        }
    }

    #[test]
    fn q_binomial_is_factorial_quotient() {
        for (a, b) in [(5u64, 2u64), (7, 3), (9, 4)] {
            let quotient = q_factorial(a)
                .exact_div(&(&q_factorial(b) * &q_factorial(a - b)))
                .unwrap();
            assert_eq!(q_binomial(a, b as i64), quotient);
        }
    }

    #[test]
    fn q_binomial_integral_palindromic_specializes() {
        for a in 0..=40u64 {
            for b in 0..=a {
                let qb = q_binomial(a, b as i64);
                assert!(qb.is_integral(), "[{a},{b}]_q integral");
                let deg = (b * (a - b)) as usize;
                assert_eq!(qb.degree(), Some(deg), "[{a},{b}]_q degree");
                for i in 0..=deg {
                    assert_eq!(qb.coeff(i), qb.coeff(deg - i), "palindromy [{a},{b}]");
                }
                assert_eq!(
                    qb.eval(&rat(1)),
                    binom_rat(a as i64, b as i64),
                    "value at q=1"
                );
            }
        }
    }

    #[test]
    fn sign_sigma_parity() {
        assert_eq!(sign_sigma(1), 1);
        assert_eq!(sign_sigma(2), -1);
        assert_eq!(sign_sigma(7), 1);
    }

    #[test]
    fn pochhammer_small() {
        assert_eq!(q_pochhammer_x(0), XPoly::one());
        assert_eq!(
            q_pochhammer_x(1),
            XPoly::new(vec![Poly::one(), p(&[-1])])
        );
        // (x;q)_2 = 1 - (1+q)x + q x^2
        assert_eq!(
            q_pochhammer_x(2),
            XPoly::new(vec![Poly::one(), p(&[-1, -1]), p(&[0, 1])])
        );
    }

    #[test]
    fn q_binomial_theorem_holds_up_to_30() {
        for n in 0..=30 {
            assert!(check_q_binomial_theorem(n).holds, "N={n}");
        }
    }

    #[test]
    fn q_binomial_theorem_mutated_fails() {
        // negative control: drop the q^C(k,2) factor at N=3
        let lhs = q_pochhammer_x(3);
        let mutated = XPoly::new(
            (0..=3)
                .map(|k| {
                    let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
                    q_binomial(3, k as i64).scale(&sign)
                })
                .collect(),
        );
        assert_ne!(lhs, mutated);
    }

    #[test]
    fn q_lucas_small_cases() {
        let r = check_q_lucas(3, 1, 4).unwrap();
        assert!(r.holds);
        let r = check_q_lucas(4, 0, 6).unwrap();
        assert!(r.holds);
        let r = check_q_lucas(2, 1, 2).unwrap();
        assert!(r.holds);
        assert!(check_q_lucas(2, 3, 4).is_err());
    }

    #[test]
    fn xpoly_arith() {
        let a = XPoly::new(vec![Poly::one(), p(&[0, 1])]); // 1 + q x
        let b = XPoly::new(vec![p(&[1, 1])]); // (1+q)
        let prod = a.mul(&b);
        assert_eq!(prod.coeff(0), p(&[1, 1]));
        assert_eq!(prod.coeff(1), p(&[0, 1, 1]));
        assert!(a.sub(&a).is_zero());
        let half = XPoly::new(vec![Poly::constant(ratio(1, 2))]);
        assert_eq!(half.add(&half), XPoly::one());
    }
}
