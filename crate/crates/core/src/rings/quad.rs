//! The golden-ratio ring `Z[τ]`, `τ² = τ + 1`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::arith::{gcd, is_prime, isqrt};
use super::RingError;

/// An element `a + bτ` of `Z[τ]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuadInt {
    /// Rational part.
    pub a: i64,
    /// Coefficient of `τ`.
    pub b: i64,
}

impl QuadInt {
    /// `0`.
    pub const ZERO: Self = Self::new(0, 0);
    /// `1`.
    pub const ONE: Self = Self::new(1, 0);
    /// The golden ratio `τ`.
    pub const TAU: Self = Self::new(0, 1);
    /// `√5 = 2τ − 1`, the ramified prime.
    pub const SQRT5: Self = Self::new(-1, 2);
    /// `δ = −(2 + 5τ)`, the discriminant prime of `[3,5,3]` (norm −11).
    pub const DELTA: Self = Self::new(-2, -5);
    /// `δ′ = −7 + 5τ`, the conjugate of [`QuadInt::DELTA`].
    pub const DELTA_CONJ: Self = Self::new(-7, 5);
    /// `λ = −(3 + 7τ)`, the discriminant prime of `[5,3,5]` (norm −19).
    pub const LAMBDA: Self = Self::new(-3, -7);

    /// `a + bτ`.
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// The rational integer `a`.
    pub const fn from_int(a: i64) -> Self {
        Self { a, b: 0 }
    }

    /// Whether `b = 0`.
    pub fn is_rational(self) -> bool {
        self.b == 0
    }

    /// Whether this is zero.
    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Galois conjugate `(a + b) − bτ`.
    pub fn conj(self) -> Self {
        Self::new(self.a + self.b, -self.b)
    }

    /// Norm `z z′ = a² + ab − b²`.
    pub fn norm(self) -> i64 {
        let (a, b) = (self.a, self.b);
        a.checked_mul(a)
            .and_then(|aa| a.checked_mul(b).and_then(|ab| aa.checked_add(ab)))
            .and_then(|s| b.checked_mul(b).and_then(|bb| s.checked_sub(bb)))
            .expect("Z[τ] norm overflow")
    }

    /// Units are exactly the elements of norm ±1.
    pub fn is_unit(self) -> bool {
        self.norm().abs() == 1
    }

    /// `self / other` if the quotient lies in `Z[τ]`.
    pub fn div_exact(self, other: Self) -> Option<Self> {
        let n = other.norm();
        if n == 0 {
            return None;
        }
        let num = self * other.conj();
        if num.a % n == 0 && num.b % n == 0 {
            Some(Self::new(num.a / n, num.b / n))
        } else {
            None
        }
    }

    /// Whether `self = u · other` for some unit `u`.
    pub fn associates(self, other: Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.norm().abs() == other.norm().abs()
            && self.div_exact(other).is_some_and(QuadInt::is_unit)
    }

    /// `τ^k` for any integer `k` (`τ⁻¹ = τ − 1`).
    pub fn tau_pow(k: i32) -> Self {
        let base = if k >= 0 { Self::TAU } else { Self::new(-1, 1) };
        base.pow(k.unsigned_abs())
    }

    /// `self^k`.
    pub fn pow(self, mut k: u32) -> Self {
        let mut result = Self::ONE;
        let mut base = self;
        while k > 0 {
            if k & 1 == 1 {
                result = result * base;
            }
            k >>= 1;
            if k > 0 {
                base = base * base;
            }
        }
        result
    }

    /// Gcd of the two integer coordinates.
    pub fn content(self) -> i64 {
        gcd(self.a, self.b)
    }

    /// Exact comparison of the real numbers `a + bτ` under the embedding
    /// `τ ↦ (1 + √5)/2`.
    pub fn real_cmp(self, other: Self) -> Ordering {
        (self - other).real_sign()
    }

    fn real_sign(self) -> Ordering {
        // 2(a + bτ) = (2a + b) + b√5
        let x = 2 * self.a as i128 + self.b as i128;
        let y = self.b as i128;
        match (x.cmp(&0), y.cmp(&0)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (sx, sy) if sx == sy => sx,
            (Ordering::Greater, _) => (x * x).cmp(&(5 * y * y)),
            (Ordering::Less, _) => (5 * y * y).cmp(&(x * x)),
        }
    }

    /// The larger of two elements as real numbers.
    pub fn real_max(self, other: Self) -> Self {
        if self.real_cmp(other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    /// Validates that `self` is prime in `Z[τ]` and classifies it.
    pub fn classify_prime(self) -> Result<TauPrimeClass, RingError> {
        let n = self.norm().unsigned_abs();
        if n == 5 {
            return Ok(TauPrimeClass {
                kind: TauPrimeKind::Ramified,
                residue_order: 5,
                residue_char: 5,
            });
        }
        if is_prime(n) && (n % 5 == 1 || n % 5 == 4) {
            return Ok(TauPrimeClass {
                kind: TauPrimeKind::Split,
                residue_order: n,
                residue_char: n,
            });
        }
        let p = isqrt(n);
        if p * p == n && is_prime(p) && (p % 5 == 2 || p % 5 == 3) {
            return Ok(TauPrimeClass {
                kind: TauPrimeKind::Inert,
                residue_order: n,
                residue_char: p,
            });
        }
        Err(RingError::NotPrime(self))
    }
}

impl Add for QuadInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for QuadInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for QuadInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for QuadInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + bτ)(c + dτ) = (ac + bd) + (ad + bc + bd)τ
        let m = |x: i64, y: i64| x.checked_mul(y).expect("Z[τ] product overflow");
        let bd = m(self.b, rhs.b);
        Self::new(
            m(self.a, rhs.a) + bd,
            m(self.a, rhs.b) + m(self.b, rhs.a) + bd,
        )
    }
}

impl From<i64> for QuadInt {
    fn from(a: i64) -> Self {
        Self::from_int(a)
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "t"),
            (0, -1) => write!(f, "-t"),
            (0, b) => write!(f, "{b}*t"),
            (a, 1) => write!(f, "{a}+t"),
            (a, -1) => write!(f, "{a}-t"),
            (a, b) if b < 0 => write!(f, "{a}-{}*t", -b),
            (a, b) => write!(f, "{a}+{b}*t"),
        }
    }
}

/// How a prime of `Z[τ]` sits over the rational primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum TauPrimeKind {
    /// `√5`, residue field `GF(5)`.
    Ramified,
    /// A rational prime `p ≡ ±2 mod 5`, residue field `GF(p²)`.
    Inert,
    /// A prime of norm `±q`, `q ≡ ±1 mod 5`, residue field `GF(q)`.
    Split,
}

/// Classification of a prime `π ∈ Z[τ]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TauPrimeClass {
    /// Ramified, inert or split.
    pub kind: TauPrimeKind,
    /// Order of the residue field `Z[τ]/(π)`.
    pub residue_order: u64,
    /// Characteristic of the residue field.
    pub residue_char: u64,
}

/// Finds a prime `a + bτ` of norm `±q` for a rational prime `q ≡ ±1 mod 5`.
///
/// The search returns the element with the smallest `|a| + |b|`, ties broken
/// by `(a, b)`, so the result is deterministic.
pub fn split_prime_over(q: u64) -> Option<QuadInt> {
    if !(is_prime(q) && (q % 5 == 1 || q % 5 == 4)) {
        return None;
    }
    let q = q as i64;
    for radius in 1..=(2 * q) {
        for a in -radius..=radius {
            let r = radius - a.abs();
            for b in [r, -r] {
                let z = QuadInt::new(a, b);
                if z.norm().abs() == q {
                    return Some(z);
                }
                if r == 0 {
                    break;
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn conjugation_examples() {
        assert_eq!(QuadInt::TAU.conj(), QuadInt::new(1, -1));
        assert_eq!(QuadInt::SQRT5.conj(), -QuadInt::SQRT5);
        assert_eq!(QuadInt::new(2, 5).conj(), QuadInt::new(7, -5));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(QuadInt::DELTA.norm(), -11);
        assert_eq!(QuadInt::LAMBDA.norm(), -19);
        assert_eq!(QuadInt::TAU.norm(), -1);
        assert_eq!(QuadInt::DELTA.conj(), QuadInt::DELTA_CONJ);
    }

    #[test]
    fn units_and_associates() {
        assert!(QuadInt::TAU.pow(3).is_unit());
        assert!(!QuadInt::from_int(2).is_unit());
        assert!(QuadInt::SQRT5.associates(-QuadInt::SQRT5));
        assert!(QuadInt::DELTA.associates(QuadInt::DELTA * QuadInt::tau_pow(-3)));
        assert!(!QuadInt::DELTA.associates(QuadInt::DELTA_CONJ));
        assert_eq!(QuadInt::tau_pow(-1) * QuadInt::TAU, QuadInt::ONE);
        assert_eq!(QuadInt::tau_pow(2), QuadInt::new(1, 1));
    }

    #[test]
    fn classification_examples() {
        let c = QuadInt::SQRT5.classify_prime().unwrap();
        assert_eq!((c.kind, c.residue_order), (TauPrimeKind::Ramified, 5));
        let c = QuadInt::from_int(3).classify_prime().unwrap();
        assert_eq!((c.kind, c.residue_order, c.residue_char), (TauPrimeKind::Inert, 9, 3));
        let c = QuadInt::DELTA.classify_prime().unwrap();
        assert_eq!((c.kind, c.residue_order), (TauPrimeKind::Split, 11));
        assert!(QuadInt::from_int(5).classify_prime().is_err());
        assert!(QuadInt::from_int(11).classify_prime().is_err());
        assert!(QuadInt::from_int(6).classify_prime().is_err());
    }

    #[test]
    fn real_order() {
        let t2 = QuadInt::tau_pow(2);
        assert_eq!(t2.real_cmp(QuadInt::ONE), Ordering::Greater);
        assert_eq!(QuadInt::tau_pow(-2).real_cmp(QuadInt::ONE), Ordering::Less);
        assert_eq!(QuadInt::SQRT5.real_cmp(QuadInt::from_int(2)), Ordering::Greater);
        assert_eq!(QuadInt::SQRT5.real_cmp(QuadInt::from_int(3)), Ordering::Less);
        assert_eq!(QuadInt::new(4, -2).real_cmp(QuadInt::ONE), Ordering::Less);
        assert_eq!(QuadInt::new(4, -1).real_cmp(QuadInt::from_int(2)), Ordering::Greater);
    }

    #[test]
    fn split_primes_found() {
        for q in [11u64, 19, 29, 31, 41, 59, 61, 71, 79, 89] {
            let pi = split_prime_over(q).unwrap();
            assert_eq!(pi.norm().unsigned_abs(), q);
        }
        assert_eq!(split_prime_over(13), None);
    }

    fn small() -> impl Strategy<Value = QuadInt> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| QuadInt::new(a, b))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(z in small(), w in small()) {
            prop_assert_eq!((z * w).norm(), z.norm() * w.norm());
        }

        #[test]
        fn conjugation_is_an_involutive_automorphism(z in small(), w in small()) {
            prop_assert_eq!(z.conj().conj(), z);
            prop_assert_eq!((z + w).conj(), z.conj() + w.conj());
            prop_assert_eq!((z * w).conj(), z.conj() * w.conj());
            prop_assert_eq!(z * z.conj(), QuadInt::from_int(z.norm()));
        }

        #[test]
        fn exact_division_inverts_multiplication(z in small(), w in small()) {
            prop_assume!(!w.is_zero());
            prop_assert_eq!((z * w).div_exact(w), Some(z));
        }
    }
}
