//! Gaussian integers `Z[i]` and the two ideal families used for reduction.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::arith::{gcd, isqrt, mod_inv, modulo};
use super::RingError;

/// An element `a + bi` of `Z[i]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GaussInt {
    /// Real part.
    pub a: i64,
    /// Imaginary part.
    pub b: i64,
}

impl GaussInt {
    /// `0`.
    pub const ZERO: Self = Self::new(0, 0);
    /// `1`.
    pub const ONE: Self = Self::new(1, 0);
    /// `i`.
    pub const I: Self = Self::new(0, 1);

    /// `a + bi`.
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// Whether this is zero.
    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Complex conjugate.
    pub fn conj(self) -> Self {
        Self::new(self.a, -self.b)
    }

    /// `a² + b²`.
    pub fn norm(self) -> i64 {
        self.a * self.a + self.b * self.b
    }

    /// Whether `self = u · other` for a unit `u ∈ {±1, ±i}`.
    pub fn associates(self, other: Self) -> bool {
        let mut u = Self::ONE;
        for _ in 0..4 {
            if u * other == self {
                return true;
            }
            u = u * Self::I;
        }
        false
    }
}

impl Add for GaussInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for GaussInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for GaussInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for GaussInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.a * rhs.a - self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )
    }
}

impl From<i64> for GaussInt {
    fn from(a: i64) -> Self {
        Self::new(a, 0)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}*i"),
            (a, b) if b < 0 => write!(f, "{a}-{}*i", -b),
            (a, b) => write!(f, "{a}+{b}*i"),
        }
    }
}

/// An ideal of `Z[i]` used as a reduction modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Ideal {
    /// `J = mZ[i]`; the residue ring is `Z_m[i]`.
    Full(u32),
    /// `J = (b + ci)Z[i]` with `gcd(b, c) = 1`; the residue ring is `Z_m`,
    /// `m = b² + c²`.
    Principal(i64, i64),
}

impl Ideal {
    /// Checks the ideal is one this crate can reduce by.
    pub fn validate(self) -> Result<Self, RingError> {
        match self {
            Ideal::Full(m) if m >= 2 => Ok(self),
            Ideal::Principal(b, c) if gcd(b, c) == 1 && b * b + c * c >= 2 => Ok(self),
            _ => Err(RingError::BadIdeal(self)),
        }
    }

    /// The rational integer `m` with `Z[i]/J` built over `Z_m`.
    pub fn modulus(self) -> u64 {
        match self {
            Ideal::Full(m) => m as u64,
            Ideal::Principal(b, c) => (b * b + c * c) as u64,
        }
    }

    /// Whether `x ∈ J`.
    pub fn contains(self, x: GaussInt) -> bool {
        match self {
            Ideal::Full(m) => x.a % m as i64 == 0 && x.b % m as i64 == 0,
            Ideal::Principal(b, c) => {
                // x / (b + ci) = x (b − ci) / m
                let g = GaussInt::new(b, c);
                let p = x * g.conj();
                let m = g.norm();
                p.a % m == 0 && p.b % m == 0
            }
        }
    }

    /// Whether complex conjugation maps `J` onto itself.
    pub fn is_self_conjugate(self) -> bool {
        match self {
            Ideal::Full(_) => true,
            Ideal::Principal(b, c) => {
                let g = GaussInt::new(b, c);
                g.conj().associates(g)
            }
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ideal::Full(m) => write!(f, "full:{m}"),
            Ideal::Principal(b, c) => write!(f, "principal:{b},{c}"),
        }
    }
}

/// All `î ∈ [0, m)` with `î² ≡ −1 (mod m)`, by exhaustive search.
pub fn solve_ihat(m: u64) -> Vec<u64> {
    if m < 3 {
        return Vec::new();
    }
    (0..m)
        .filter(|&x| (x as u128 * x as u128 + 1).is_multiple_of(m as u128))
        .collect()
}

/// The unique positive pair `(b, c)` with `m = b² + c²`, `gcd(b, c) = 1` and
/// `b ≡ −î c (mod m)`.
pub fn pair_from_ihat(m: u64, ihat: u64) -> Result<(i64, i64), RingError> {
    if m < 2 || !(ihat as u128 * ihat as u128 + 1).is_multiple_of(m as u128) {
        return Err(RingError::NoPair { m, ihat });
    }
    let mi = m as i64;
    for c in 1..=isqrt(m) as i64 {
        let b = modulo(-(ihat as i64) * c, m) as i64;
        if b > 0 && b * b + c * c == mi && gcd(b, c) == 1 {
            return Ok((b, c));
        }
    }
    Err(RingError::NoPair { m, ihat })
}

/// The image `î` of `i` under `Z[i] → Z[i]/(b + ci) ≅ Z_m`, i.e. the
/// solution of `b + cî ≡ 0 (mod m)`.
pub fn principal_ihat(b: i64, c: i64) -> Result<u64, RingError> {
    let ideal = Ideal::Principal(b, c).validate()?;
    let m = ideal.modulus();
    let cinv = mod_inv(c, m).ok_or(RingError::BadIdeal(ideal))?;
    let bc = (b as i128 * cinv as i128).rem_euclid(m as i128) as i64;
    Ok(modulo(-bc, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ihat_solutions() {
        assert_eq!(solve_ihat(5), [2, 3]);
        assert_eq!(solve_ihat(65), [8, 18, 47, 57]);
        assert!(solve_ihat(7).is_empty());
        assert!(solve_ihat(4 * 5).is_empty());
        assert_eq!(solve_ihat(10), [3, 7]);
    }

    #[test]
    fn pairs_from_ihat() {
        assert_eq!(pair_from_ihat(65, 8).unwrap(), (1, 8));
        assert_eq!(pair_from_ihat(65, 18).unwrap(), (4, 7));
        assert_eq!(pair_from_ihat(5, 2).unwrap(), (1, 2));
        assert!(pair_from_ihat(65, 3).is_err());
        for m in [5u64, 13, 17, 25, 29, 65, 85, 145] {
            for ihat in solve_ihat(m) {
                let (b, c) = pair_from_ihat(m, ihat).unwrap();
                assert_eq!((b * b + c * c) as u64, m);
                assert_eq!(gcd(b, c), 1);
                assert_eq!(modulo(b + ihat as i64 * c, m), 0);
                assert_eq!(principal_ihat(b, c).unwrap(), ihat);
            }
        }
    }

    #[test]
    fn principal_images() {
        assert_eq!(principal_ihat(1, 2).unwrap(), 2);
        assert_eq!(principal_ihat(1, 8).unwrap(), 8);
        assert_eq!(principal_ihat(1, 4).unwrap(), 4);
        assert!(principal_ihat(2, 4).is_err());
    }

    #[test]
    fn self_conjugacy() {
        assert!(Ideal::Full(3).is_self_conjugate());
        assert!(!Ideal::Principal(1, 2).is_self_conjugate());
        assert!(Ideal::Principal(1, 1).is_self_conjugate());
        assert!(Ideal::Principal(1, 0).is_self_conjugate());
    }

    #[test]
    fn membership() {
        let j = Ideal::Principal(1, 8);
        assert!(j.contains(GaussInt::new(1, 8)));
        assert!(j.contains(GaussInt::new(-8, 1)));
        assert!(!j.contains(GaussInt::new(4, 7)));
        assert!(Ideal::Full(3).contains(GaussInt::new(3, -6)));
        assert!(!Ideal::Full(3).contains(GaussInt::new(3, 1)));
    }

    #[test]
    fn gaussian_arithmetic() {
        assert_eq!(GaussInt::I * GaussInt::I, -GaussInt::ONE);
        let w = GaussInt::new(4, 7);
        assert_eq!((w * w.conj()).a, w.norm());
        assert!(GaussInt::new(1, -1).associates(GaussInt::new(1, 1)));
    }
}
