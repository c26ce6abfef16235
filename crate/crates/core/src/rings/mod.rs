//! Exact arithmetic in `Z[τ]` and `Z[i]`, their residue rings, and
//! quadratic characters.

pub mod arith;
mod finite;
mod gauss;
mod parse;
mod quad;

use alloc::string::String;

pub use finite::{Elem, RingKind, RingSpec, MAX_MODULUS};
pub use gauss::{pair_from_ihat, principal_ihat, solve_ihat, GaussInt, Ideal};
pub use parse::{parse_gauss, parse_ideal, parse_quad};
pub use quad::{split_prime_over, QuadInt, TauPrimeClass, TauPrimeKind};

/// Errors from ring construction and arithmetic queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    /// `|N(π)|` is not 5, a prime `≡ ±1 mod 5`, or the square of a prime
    /// `≡ ±2 mod 5`.
    #[error("{0} is not a prime of Z[t]")]
    NotPrime(QuadInt),
    /// A rational prime was required.
    #[error("{0} is not a rational prime")]
    NotRationalPrime(u64),
    /// `GF(p²) = Z[τ]/(p)` needs `p` inert.
    #[error("{0} is not inert in Z[t] (need p = 2 or p = ±2 mod 5)")]
    NotInert(u64),
    /// Quadratic characters are only defined in odd characteristic.
    #[error("odd residue characteristic required")]
    OddCharRequired,
    /// The ring is not a field.
    #[error("{0} is not a field")]
    NotAField(String),
    /// Ideal with `gcd(b, c) ≠ 1` or a degenerate modulus.
    #[error("bad ideal {0}")]
    BadIdeal(Ideal),
    /// `î² ≢ −1 (mod m)`, so no pair `(b, c)` exists.
    #[error("no pair (b, c) for m = {m}, i-hat = {ihat}")]
    NoPair {
        /// The modulus.
        m: u64,
        /// The offered square root of −1.
        ihat: u64,
    },
    /// The residue ring would be too large for the packed element encoding.
    #[error("modulus {0} outside the supported range 2..={max}", max = MAX_MODULUS)]
    ModulusOutOfRange(u64),
    /// Text did not parse.
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// Rational Legendre symbol `(a/p)` for an odd prime `p`, by Euler's
/// criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8, RingError> {
    if p == 2 || !arith::is_prime(p) {
        return Err(RingError::NotRationalPrime(p));
    }
    let r = arith::modulo(a, p);
    if r == 0 {
        return Ok(0);
    }
    Ok(if arith::mod_pow(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// Legendre symbol over `Z[τ]`: `+1` iff `α` is a nonzero square modulo the
/// prime `π`, computed by the Euler criterion in `Z[τ]/(π)`.
pub fn legendre_tau(alpha: QuadInt, pi: QuadInt) -> Result<i8, RingError> {
    let ring = RingSpec::tau_residue(pi)?;
    if ring.characteristic() == 2 {
        return Err(RingError::OddCharRequired);
    }
    let a = ring.reduce_quad(alpha).expect("residue rings of Z[t] carry a tau image");
    ring.quadratic_character(a)
}
