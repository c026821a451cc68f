//! Dense univariate polynomials in `q` over exact rationals, and normalized
//! rational functions.
//!
//! Everything in the crate is dense or near-dense at the scale it is used
//! (Gaussian binomials, cyclotomic powers, harmonic-sum numerators), so the
//! representation is a plain coefficient vector with the trailing
//! coefficient nonzero. Coefficients are `BigRational` throughout: constants
//! like `(n^2-1)/24` force rational intermediates even when the end results
//! are integral, and [`Poly::is_integral`] recovers the integer subcase.
//!
//! Multiplication is schoolbook below [`KARATSUBA_THRESHOLD`] coefficients
//! and Karatsuba above it; the two routes produce identical output and the
//! threshold only affects speed (see `examples/mul_benchmark.rs`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::render_coeff;
use crate::{Error, Result};

/// Exact rational scalar used for all coefficients.
pub type Rat = BigRational;

/// Coefficient count below which multiplication stays schoolbook. Chosen by
/// the micro-benchmark in `examples/mul_benchmark.rs`; correctness does not
/// depend on the value.
pub const KARATSUBA_THRESHOLD: usize = 32;

/// Dense polynomial in `q` with exact rational coefficients.
///
/// Invariants: the highest-index coefficient is nonzero; the zero polynomial
/// is the empty vector, with degree `None`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Builds a polynomial from coefficients (index i = coefficient of q^i),
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c * q^exp`.
    pub fn monomial(c: Rat, exp: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); exp + 1];
        coeffs[exp] = c;
        Poly { coeffs }
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_int_coeffs(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| crate::arith::rat(c)).collect())
    }

    /// `1 - q^m`.
    pub fn one_minus_q_pow(m: usize) -> Self {
        &Poly::one() - &Poly::monomial(Rat::one(), m)
    }

    /// `q^m - 1`.
    pub fn q_pow_minus_one(m: usize) -> Self {
        &Poly::monomial(Rat::one(), m) - &Poly::one()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True iff every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitution `q -> q^m` for `m >= 1`: relocates coefficient `i` to
    /// index `m*i`.
    pub fn subst_power(&self, m: usize) -> Self {
        assert!(m >= 1, "subst_power requires m >= 1");
        if m == 1 || self.is_zero() {
            return self.clone();
        }
        let deg = self.coeffs.len() - 1;
        let mut coeffs = vec![Rat::zero(); deg * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * m] = c.clone();
            }
        }
        Poly { coeffs }
    }

    /// Plain O(n*m) product. Exposed (alongside [`Poly::karatsuba_mul`]) for
    /// the equivalence tests and the threshold micro-benchmark.
    pub fn schoolbook_mul(&self, other: &Poly) -> Poly {
        Poly::new(schoolbook(&self.coeffs, &other.coeffs))
    }

    /// Subquadratic product; splits recursively until operands drop below
    /// [`KARATSUBA_THRESHOLD`].
    pub fn karatsuba_mul(&self, other: &Poly) -> Poly {
        Poly::new(mul_slices(
            &self.coeffs,
            &other.coeffs,
            KARATSUBA_THRESHOLD,
        ))
    }

    pub(crate) fn mul_with_threshold(&self, other: &Poly, threshold: usize) -> Poly {
        Poly::new(mul_slices(&self.coeffs, &other.coeffs, threshold))
    }

    /// Euclidean division: returns `(quot, rem)` with
    /// `self = div * quot + rem` and `deg rem < deg div`.
    pub fn divrem(&self, div: &Poly) -> Result<(Poly, Poly)> {
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = div.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = div.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let f = &rem[k] * &lead_inv;
            for (j, dc) in div.coeffs.iter().enumerate().take(dd) {
                if !dc.is_zero() {
                    let delta = &f * dc;
                    rem[k - dd + j] -= delta;
                }
            }
            rem[k] = Rat::zero();
            quot[k - dd] = f;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Division that must be exact; signals [`Error::NotDivisible`] when the
    /// remainder is nonzero.
    pub fn exact_div(&self, div: &Poly) -> Result<Poly> {
        let (quot, rem) = self.divrem(div)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Greatest common divisor in `Q[q]`, canonicalized as a primitive
    /// integer polynomial with positive leading coefficient.
    ///
    /// Primitive Euclidean algorithm on primitive parts, with a modular
    /// coprimality probe up front: when the images modulo a word-sized prime
    /// are already coprime, the gcd over `Q` is 1 and the remainder sequence
    /// can be skipped entirely. That is the common case in rational-function
    /// normalization.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        let a = to_primitive_int(&self.coeffs);
        let b = to_primitive_int(&other.coeffs);
        if coprime_mod_prime(&a, &b) {
            return Poly::one();
        }
        let g = primitive_prs(a, b);
        Poly::new(g.into_iter().map(Rat::from_integer).collect())
    }

    /// The primitive-integer, positive-leading canonical associate.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let ints = to_primitive_int(&self.coeffs);
        Poly::new(ints.into_iter().map(Rat::from_integer).collect())
    }

    /// Extended Euclid over `Q[q]`: returns `(g, u, v)` with
    /// `u*self + v*other = g` and `g` monic (or zero). Only used at the small
    /// degrees of number-field arithmetic.
    pub fn extended_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::one();
        let mut s1 = Poly::zero();
        let mut t0 = Poly::zero();
        let mut t1 = Poly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead_inv = r0.leading().unwrap().recip();
        (
            r0.scale(&lead_inv),
            s0.scale(&lead_inv),
            t0.scale(&lead_inv),
        )
    }

    /// Renders with descending powers and explicit signs; non-integral
    /// coefficients appear parenthesized as `(p/q)`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (pos, (i, c)) in self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
            let mag = c.abs();
            if pos == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_str = render_coeff(&mag);
            if i == 0 {
                out.push_str(&coeff_str);
            } else {
                if !mag.is_one() {
                    out.push_str(&coeff_str);
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut coeffs = vec![Rat::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut coeffs = vec![Rat::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Poly::new(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::new(mul_slices(
            &self.coeffs,
            &rhs.coeffs,
            KARATSUBA_THRESHOLD,
        ))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

fn schoolbook(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Iterate the shorter operand on the outside and skip its zeros; factors
    // like 1 - q^m then cost O(len) instead of O(len * m).
    let (outer, inner) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut acc = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, oc) in outer.iter().enumerate() {
        if oc.is_zero() {
            continue;
        }
        for (j, ic) in inner.iter().enumerate() {
            if !ic.is_zero() {
                acc[i + j] += oc * ic;
            }
        }
    }
    acc
}

fn add_slices(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn mul_slices(a: &[Rat], b: &[Rat], threshold: usize) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < threshold {
        return schoolbook(a, b);
    }
    let m = a.len().max(b.len()).div_ceil(2);
    let (a0, a1) = a.split_at(a.len().min(m));
    let (b0, b1) = b.split_at(b.len().min(m));
    let z0 = mul_slices(a0, b0, threshold);
    let z2 = mul_slices(a1, b1, threshold);
    let mut z1 = mul_slices(&add_slices(a0, a1), &add_slices(b0, b1), threshold);
    for (i, c) in z0.iter().enumerate() {
        z1[i] -= c;
    }
    for (i, c) in z2.iter().enumerate() {
        z1[i] -= c;
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, c) in z0.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in z1.into_iter().enumerate() {
        if !c.is_zero() {
            out[i + m] += c;
        }
    }
    for (i, c) in z2.into_iter().enumerate() {
        if !c.is_zero() {
            out[i + 2 * m] += c;
        }
    }
    out
}

/// Clears denominators and divides out the integer content; the result is
/// primitive with positive leading coefficient.
fn to_primitive_int(coeffs: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if ints.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    for c in ints.iter_mut() {
        *c = &*c / &content;
    }
    ints
}

const PROBE_PRIMES: [u64; 3] = [1_000_000_007, 1_000_000_009, 998_244_353];

/// Sound one-sided coprimality test: if the reductions mod `p` are coprime
/// (and `p` divides neither leading coefficient), the inputs are coprime
/// over `Q`.
fn coprime_mod_prime(a: &[BigInt], b: &[BigInt]) -> bool {
    for &p in &PROBE_PRIMES {
        let am = reduce_mod_p(a, p);
        let bm = reduce_mod_p(b, p);
        if am.len() != a.len() || bm.len() != b.len() {
            continue; // p divides a leading coefficient; unusable prime
        }
        return gcd_mod_p(am, bm, p).len() == 1;
    }
    false
}

fn reduce_mod_p(a: &[BigInt], p: u64) -> Vec<u64> {
    let pp = BigInt::from(p);
    let mut out: Vec<u64> = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(&pp);
            let (_, digits) = r.to_u64_digits();
            digits.first().copied().unwrap_or(0)
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let db = b.len() - 1;
        let lead_inv = mod_inverse(b[db], p);
        while a.len() > db {
            let da = a.len() - 1;
            let f = mulmod(a[da], lead_inv, p);
            if f != 0 {
                for j in 0..=db {
                    let sub = mulmod(f, b[j], p);
                    a[da - db + j] = (a[da - db + j] + p - sub) % p;
                }
            }
            while a.last() == Some(&0) {
                a.pop();
            }
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Primitive polynomial remainder sequence over the integers.
fn primitive_prs(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return b;
        }
        a = b;
        b = primitive_int(r);
    }
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for j in 0..=db {
            let sub = &lr * &b[j];
            r[dr - db + j] -= sub;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    r
}

fn primitive_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    for c in v.iter_mut() {
        *c = &*c / &content;
    }
    v
}

/// Quotient of two polynomials, kept normalized: the denominator is monic
/// and coprime to the numerator. Equality is decided representation-wise,
/// which the invariants make canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Builds and fully normalizes `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        Ok(Self::monicized(num, den))
    }

    /// Wraps parts already known to be coprime with nonzero denominator.
    pub(crate) fn from_coprime(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        debug_assert!(num.gcd(&den).is_one() || num.is_zero());
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Poly::one(),
            };
        }
        Self::monicized(num, den)
    }

    fn monicized(num: Poly, den: Poly) -> Self {
        let lead = den.leading().expect("nonzero denominator");
        if lead.is_one() {
            return RationalFunction { num, den };
        }
        let inv = lead.recip();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// The monomial `q^e`, allowing negative exponents.
    pub fn monomial(e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(Poly::monomial(Rat::one(), e as usize))
        } else {
            RationalFunction {
                num: Poly::one(),
                den: Poly::monomial(Rat::one(), (-e) as usize),
            }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Substitution `q -> q^m`; normalization is preserved (a Bezout
    /// relation for the parts substitutes to one for the images).
    pub fn subst_power(&self, m: usize) -> Self {
        RationalFunction {
            num: self.num.subst_power(m),
            den: self.den.subst_power(m),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::monicized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.num.render(var)
        } else {
            format!("({})/({})", self.num.render(var), self.den.render(var))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({})", self)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    /// Fraction addition with the small-gcd scheme: for reduced inputs
    /// `p1/d1 + p2/d2` with `g = gcd(d1, d2)`, the only common factors of
    /// the raw numerator and denominator divide `g`, so one gcd against `g`
    /// finishes the reduction.
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return RationalFunction::from_coprime(num, den);
        }
        let d1g = self.den.exact_div(&g).expect("gcd divides");
        let d2g = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d2g) + &(&rhs.num * &d1g);
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let h = num.gcd(&g);
        if h.is_one() {
            RationalFunction::from_coprime(num, &self.den * &d2g)
        } else {
            RationalFunction::from_coprime(
                num.exact_div(&h).expect("gcd divides"),
                &self.den.exact_div(&h).expect("gcd divides") * &d2g,
            )
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    /// Cross-cancelling product: `gcd(p1, d2)` and `gcd(p2, d1)` are removed
    /// before multiplying, so the result of reduced inputs is reduced.
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.exact_div(&g1).expect("gcd divides")
        };
        let n2 = if g2.is_one() {
            rhs.num.clone()
        } else {
            rhs.num.exact_div(&g2).expect("gcd divides")
        };
        let d1 = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.exact_div(&g2).expect("gcd divides")
        };
        let d2 = if g1.is_one() {
            rhs.den.clone()
        } else {
            rhs.den.exact_div(&g1).expect("gcd divides")
        };
        RationalFunction::from_coprime(&n1 * &n2, &d1 * &d2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn p(cs: &[i64]) -> Poly {
        Poly::from_int_coeffs(cs)
    }

    #[test]
    fn add_cancellation() {
        // (1+q) + (1-q) = 2
        let sum = &p(&[1, 1]) + &p(&[1, -1]);
        assert_eq!(sum, p(&[2]));
    }

    #[test]
    fn mul_square() {
        // (1+q)^2 = 1 + 2q + q^2
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
    }

    #[test]
    fn mul_schoolbook_oracle() {
        // (1+q+q^2)(1+q) by explicit convolution: 1 + 2q + 2q^2 + q^3
        assert_eq!(&p(&[1, 1, 1]) * &p(&[1, 1]), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn divrem_exact_factorization() {
        let (quot, rem) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(quot, p(&[1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn divrem_with_remainder() {
        // (q^2+1) = (q+1)(q-1) + 2, long-division oracle
        let (quot, rem) = p(&[1, 0, 1]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!(quot, p(&[-1, 1]));
        assert_eq!(rem, p(&[2]));
    }

    #[test]
    fn exact_div_detects_nonzero_remainder() {
        assert_eq!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn divide_by_zero_rejected() {
        assert_eq!(p(&[1]).divrem(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn subst_power_monomial_relocation() {
        assert_eq!(p(&[1, 1]).subst_power(3), p(&[1, 0, 0, 1]));
        assert_eq!(p(&[3, 0, 2]).subst_power(1), p(&[3, 0, 2]));
        // [2]_q under q -> q^2 equals [2]_{q^2} built directly
        assert_eq!(p(&[1, 1]).subst_power(2), p(&[1, 0, 1]));
    }

    #[test]
    fn degree_and_zero_sentinel() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
        assert_eq!(p(&[0, 0, 5]).degree(), Some(2));
        assert!(Poly::new(vec![Rat::zero(); 4]).is_zero());
    }

    #[test]
    fn integrality_flag() {
        assert!(p(&[1, -2, 3]).is_integral());
        assert!(!Poly::constant(ratio(1, 2)).is_integral());
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let a = Poly::new((0..70).map(|i| ratio(i * i - 31, 1 + (i % 7))).collect());
        let b = Poly::new((0..55).map(|i| ratio(17 - 3 * i, 2 + (i % 5))).collect());
        let fast = a.karatsuba_mul(&b);
        let slow = a.schoolbook_mul(&b);
        assert_eq!(fast, slow);
        // straddle a tiny threshold to force deep recursion
        assert_eq!(a.mul_with_threshold(&b, 2), slow);
    }

    #[test]
    fn gcd_common_factor() {
        // gcd((q-1)(q+2), (q-1)(q+3)) = q - 1
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime_and_scaling() {
        let a = p(&[1, 0, 1]);
        let b = p(&[1, 1]);
        assert!(a.gcd(&b).is_one());
        // content and sign are canonicalized away
        let c = p(&[-2, 2]).scale(&ratio(1, 3));
        assert_eq!(c.gcd(&p(&[-4, 4])), p(&[-1, 1]));
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = p(&[1, 0, 1]); // q^2 + 1
        let b = p(&[1, 1]); // q + 1
        let (g, u, v) = a.extended_gcd(&b);
        assert!(g.is_one());
        assert_eq!(&(&u * &a) + &(&v * &b), Poly::one());
    }

    #[test]
    fn rational_function_identity_and_normalization() {
        // q/(1-q) + 0 = q/(1-q)
        let h = RationalFunction::new(p(&[0, 1]), p(&[1, -1])).unwrap();
        assert_eq!(&h + &RationalFunction::zero(), h);
        assert!(h.den().is_monic());
        // q/(1-q) normalizes to (-q)/(q-1)
        assert_eq!(h.num(), &p(&[0, -1]));
        assert_eq!(h.den(), &p(&[-1, 1]));
    }

    #[test]
    fn rational_function_common_denominator_sum() {
        // q/(1-q) + q^2/(1-q^2) = (q+2q^2)/(1-q^2)
        let a = RationalFunction::new(p(&[0, 1]), p(&[1, -1])).unwrap();
        let b = RationalFunction::new(p(&[0, 0, 1]), p(&[1, 0, -1])).unwrap();
        let sum = &a + &b;
        let expected = RationalFunction::new(p(&[0, 1, 2]), p(&[1, 0, -1])).unwrap();
        assert_eq!(sum, expected);
    }

    #[test]
    fn rational_function_reciprocal_monic() {
        let one = RationalFunction::one();
        let f = RationalFunction::from_poly(p(&[1, 1]));
        let r = one.div(&f).unwrap();
        assert_eq!(r.num(), &Poly::one());
        assert_eq!(r.den(), &p(&[1, 1]));
        assert!(f.div(&RationalFunction::zero()).is_err());
    }

    #[test]
    fn rational_function_normalization_idempotent() {
        let f = RationalFunction::new(p(&[0, 2, 2]), p(&[4, 0, -4])).unwrap();
        let renorm = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, renorm);
    }

    #[test]
    fn render_canonical() {
        assert_eq!(p(&[1, -1, 1]).render("q"), "q^2 - q + 1");
        assert_eq!(p(&[1, 1, 2, 1, 1]).render("q"), "q^4 + q^3 + 2q^2 + q + 1");
        assert_eq!(Poly::zero().render("q"), "0");
        assert_eq!(Poly::constant(ratio(-1, 2)).render("q"), "-(1/2)");
        assert_eq!(
            Poly::new(vec![rat(0), ratio(3, 2)]).render("q"),
            "(3/2)q"
        );
    }
}
