//! Exact arithmetic and verification for q-binomial congruences modulo
//! powers of cyclotomic polynomials.
//!
//! The Gaussian binomial coefficient `[an choose bn]_q` satisfies a family of
//! congruences modulo `Phi_n(q)^k` (for `k` up to 4) that refine the classical
//! Wolstenholme–Ljunggren congruence `C(ap,bp) ≡ C(a,b) (mod p^3)` and its
//! `p^4` extension. This crate provides the machinery to state and check all
//! of them with exact rational arithmetic — no floating point anywhere:
//!
//! - [`poly`]: dense polynomials over `Q` and normalized rational functions;
//! - [`cyclo`]: cyclotomic polynomials `Phi_n(q)` and the congruence
//!   predicate for rational functions modulo `Phi_n(q)^k`;
//! - [`qcalc`]: q-numbers, q-factorials, Gaussian binomials, q-Pochhammer
//!   symbols and the q-binomial theorem;
//! - [`congruences`]: builders and verifiers for the congruence families
//!   (Straub's mod-`Phi^3` congruence, the two-monomial mod-`Phi^2`
//!   congruence, Andrews' and Pan's congruences, the mod-`Phi^4` theorems,
//!   q-harmonic congruences, and the classical integer congruences);
//! - [`rootexpand`]: exact arithmetic in `Q(zeta_n)`, truncated radial
//!   expansions at `q = zeta(1-eps)`, and the expansion lemmas behind the
//!   congruences;
//! - [`factratio`]: q-analogues of Chebyshev–Landau factorial ratios, the
//!   Landau integrality criterion, and the generalized congruences;
//! - [`cli`]: the `qcong` command-line front end (verify / sweep / expand /
//!   info).
//!
//! Everything is immutable and side-effect free; values can be shared freely
//! across threads. See the `examples/` directory for runnable walkthroughs of
//! each capability.

pub mod arith;
pub mod cli;
pub mod congruences;
pub mod cyclo;
pub mod factratio;
pub mod poly;
pub mod qcalc;
pub mod report;
pub mod rootexpand;

pub use poly::{Poly, Rat, RationalFunction};
pub use report::CongruenceReport;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Division by the zero polynomial or zero rational function.
    #[error("division by zero")]
    DivisionByZero,
    /// `exact_div` was called on a pair with nonzero remainder.
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    /// The congruence predicate is ill-posed: a denominator shares a factor
    /// with `Phi_n(q)`. Distinct from the congruence merely failing.
    #[error("denominator not coprime to Phi_{n}(q); congruence ill-posed")]
    DenominatorNotCoprime { n: u32 },
    /// A series denominator vanishes at the expansion point (its constant
    /// term is zero), i.e. `Phi_n` divides it.
    #[error("denominator vanishes at the root of unity")]
    DenominatorVanishes,
    /// Inversion of zero in `Q(zeta_n)` or in a series ring.
    #[error("inverse of zero")]
    ZeroInverse,
    /// A parameter that must be prime is not.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// The congruence requires a prime larger than 3.
    #[error("prime {0} too small; need p > 3")]
    PrimeTooSmall(u64),
    /// A factorial-ratio spec with unequal parameter sums.
    #[error("factorial ratio spec is not balanced")]
    NotBalanced,
    /// A factorial-ratio spec that fails the Landau integrality criterion
    /// where an integral one is required.
    #[error("factorial ratio spec is not integral")]
    NotIntegral,
    /// Residue-class indices violating the side conditions of a summation
    /// formula (e.g. `k ≡ 0 (mod n)` where `k` must be nonzero).
    #[error("invalid residue class: {0}")]
    InvalidResidueClass(String),
    /// Any other parameter violation.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
