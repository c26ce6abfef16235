//! Concrete finite coefficient rings with exact arithmetic.
//!
//! Every ring is either `Z_n` or a quadratic extension `Z_n[x]/(x² − sx − t)`.
//! That covers `Z_d`, `GF(p)`, `GF(p²) = Z[τ]/(p)`, the residue fields of
//! `Z[τ]` and both residue rings of `Z[i]` used here.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::arith::{is_prime, mod_inv, modulo};
use super::gauss::{principal_ihat, GaussInt, Ideal};
use super::quad::{QuadInt, TauPrimeKind};
use super::RingError;

/// Largest supported modulus; keeps products of residues inside `u64`.
pub const MAX_MODULUS: u32 = u16::MAX as u32;

/// An element of a [`RingSpec`], stored as a canonical pair `a + b·x` with
/// `0 ≤ a, b < n` packed into one word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    /// The zero element of any ring.
    pub const ZERO: Elem = Elem(0);

    #[inline]
    fn pack(a: u64, b: u64) -> Self {
        Elem((a as u32) | ((b as u32) << 16))
    }

    /// Coefficient of `1`.
    #[inline]
    pub fn re(self) -> u32 {
        self.0 & 0xFFFF
    }

    /// Coefficient of the extension generator.
    #[inline]
    pub fn ext(self) -> u32 {
        self.0 >> 16
    }
}

/// What a ring is the residue ring of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum RingKind {
    /// `Z_d` for any `d ≥ 2`.
    IntegersMod(u32),
    /// `GF(p)`.
    PrimeField(u32),
    /// `GF(p²) = Z[τ]/(p)` for `p = 2` or `p ≡ ±2 mod 5`, basis `{1, θ}`,
    /// `θ² = θ + 1`.
    QuadField(u32),
    /// `Z[τ]/(π)` for a prime `π`.
    TauResidue(QuadInt),
    /// `Z[i]/J`.
    GaussResidue(Ideal),
}

/// A finite commutative ring with identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    kind: RingKind,
    modulus: u32,
    /// `x² = s·x + t` when the ring is a quadratic extension of `Z_n`.
    ext: Option<(u32, u32)>,
    tau: Option<Elem>,
    i: Option<Elem>,
    field: bool,
}

impl RingSpec {
    fn base(kind: RingKind, modulus: u64, field: bool) -> Result<Self, RingError> {
        if !(2..=MAX_MODULUS as u64).contains(&modulus) {
            return Err(RingError::ModulusOutOfRange(modulus));
        }
        Ok(Self {
            kind,
            modulus: modulus as u32,
            ext: None,
            tau: None,
            i: None,
            field,
        })
    }

    /// `Z_d`.
    pub fn integers_mod(d: u32) -> Result<Self, RingError> {
        Self::base(RingKind::IntegersMod(d), d as u64, is_prime(d as u64))
    }

    /// `GF(p)`.
    pub fn prime_field(p: u32) -> Result<Self, RingError> {
        if !is_prime(p as u64) {
            return Err(RingError::NotRationalPrime(p as u64));
        }
        Self::base(RingKind::PrimeField(p), p as u64, true)
    }

    /// `Z_d` when `d` is composite, `GF(d)` when it is prime.
    pub fn for_modulus(d: u32) -> Result<Self, RingError> {
        if is_prime(d as u64) {
            Self::prime_field(d)
        } else {
            Self::integers_mod(d)
        }
    }

    /// `GF(p²)` as `Z[τ]/(p)`; requires `p = 2` or `p ≡ ±2 mod 5` so that
    /// `x² − x − 1` is irreducible.
    pub fn quad_field(p: u32) -> Result<Self, RingError> {
        if !(is_prime(p as u64) && (p == 2 || p % 5 == 2 || p % 5 == 3)) {
            return Err(RingError::NotInert(p as u64));
        }
        let mut r = Self::base(RingKind::QuadField(p), p as u64, true)?;
        r.ext = Some((1, 1));
        r.tau = Some(Elem::pack(0, 1));
        Ok(r)
    }

    /// The residue field `Z[τ]/(π)`, of order `|N(π)|`.
    pub fn tau_residue(pi: QuadInt) -> Result<Self, RingError> {
        let class = pi.classify_prime()?;
        let kind = RingKind::TauResidue(pi);
        match class.kind {
            TauPrimeKind::Inert => {
                let mut r = Self::quad_field(class.residue_char as u32)?;
                r.kind = kind;
                Ok(r)
            }
            TauPrimeKind::Ramified | TauPrimeKind::Split => {
                let q = class.residue_order;
                let mut r = Self::base(kind, q, true)?;
                // a + bτ ≡ 0  ⇒  τ ≡ −a/b
                let binv = mod_inv(pi.b, q).ok_or(RingError::NotPrime(pi))?;
                let t = modulo(-(pi.a as i128 * binv as i128).rem_euclid(q as i128) as i64, q);
                r.tau = Some(Elem::pack(t, 0));
                Ok(r)
            }
        }
    }

    /// `Z[i]/J`: `Z_m[i]` for `J = mZ[i]`, `Z_m` with `i ↦ î` for a principal
    /// `J = (b + ci)`.
    pub fn gauss_residue(ideal: Ideal) -> Result<Self, RingError> {
        let ideal = ideal.validate()?;
        let m = ideal.modulus();
        match ideal {
            Ideal::Full(_) => {
                let field = is_prime(m) && m % 4 == 3;
                let mut r = Self::base(RingKind::GaussResidue(ideal), m, field)?;
                r.ext = Some((0, (m - 1) as u32));
                r.i = Some(Elem::pack(0, 1));
                Ok(r)
            }
            Ideal::Principal(b, c) => {
                let ihat = principal_ihat(b, c)?;
                let mut r = Self::base(RingKind::GaussResidue(ideal), m, is_prime(m))?;
                r.i = Some(Elem::pack(ihat, 0));
                Ok(r)
            }
        }
    }

    /// What this ring is a residue ring of.
    pub fn kind(&self) -> RingKind {
        self.kind
    }

    /// The rational modulus `n` of the base `Z_n`.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Characteristic (equal to the modulus).
    pub fn characteristic(&self) -> u64 {
        self.modulus as u64
    }

    /// `1` for `Z_n`, `2` for a quadratic extension.
    pub fn degree(&self) -> u32 {
        if self.ext.is_some() {
            2
        } else {
            1
        }
    }

    /// Number of elements.
    pub fn order(&self) -> u64 {
        (self.modulus as u64).pow(self.degree())
    }

    /// Whether every nonzero element is invertible.
    pub fn is_field(&self) -> bool {
        self.field
    }

    /// Image of `τ`, when the ring is a residue ring of `Z[τ]`.
    pub fn tau_image(&self) -> Option<Elem> {
        self.tau
    }

    /// Image of `i`, when the ring is a residue ring of `Z[i]`.
    pub fn i_image(&self) -> Option<Elem> {
        self.i
    }

    /// `0`.
    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    /// `1`.
    pub fn one(&self) -> Elem {
        Elem::pack(1, 0)
    }

    /// The image of a rational integer.
    pub fn from_int(&self, a: i64) -> Elem {
        Elem::pack(modulo(a, self.modulus as u64), 0)
    }

    /// `a + b·x` with both coefficients reduced; `b` must be zero for `Z_n`.
    pub fn elem(&self, a: i64, b: i64) -> Elem {
        let n = self.modulus as u64;
        debug_assert!(self.ext.is_some() || modulo(b, n) == 0);
        Elem::pack(modulo(a, n), modulo(b, n))
    }

    /// Coefficients `(a, b)` of `a + b·x`.
    pub fn coords(&self, e: Elem) -> (u32, u32) {
        (e.re(), e.ext())
    }

    /// Canonical index `a + b·n` in `[0, order)`.
    #[inline]
    pub fn index(&self, e: Elem) -> u32 {
        e.re() + e.ext() * self.modulus
    }

    /// Inverse of [`RingSpec::index`].
    #[inline]
    pub fn from_index(&self, idx: u32) -> Elem {
        Elem::pack((idx % self.modulus) as u64, (idx / self.modulus) as u64)
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order() as u32).map(move |k| self.from_index(k))
    }

    /// All invertible elements in canonical index order.
    pub fn units(&self) -> Vec<Elem> {
        self.elements().filter(|&e| self.is_unit(e)).collect()
    }

    /// `x + y`.
    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        let n = self.modulus;
        let a = x.re() + y.re();
        let b = x.ext() + y.ext();
        Elem::pack(
            (if a >= n { a - n } else { a }) as u64,
            (if b >= n { b - n } else { b }) as u64,
        )
    }

    /// `−x`.
    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        let n = self.modulus;
        let f = |v: u32| if v == 0 { 0 } else { (n - v) as u64 };
        Elem::pack(f(x.re()), f(x.ext()))
    }

    /// `x − y`.
    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    /// `x · y`.
    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        let n = self.modulus as u64;
        let (a1, b1) = (x.re() as u64, x.ext() as u64);
        let (a2, b2) = (y.re() as u64, y.ext() as u64);
        match self.ext {
            None => Elem::pack(a1 * a2 % n, 0),
            Some((s, t)) => {
                // (a1 + b1x)(a2 + b2x) = a1a2 + t·b1b2 + (a1b2 + a2b1 + s·b1b2)x
                let bb = b1 * b2 % n;
                let re = (a1 * a2 + t as u64 * bb) % n;
                let im = (a1 * b2 + a2 * b1 + s as u64 * bb) % n;
                Elem::pack(re, im)
            }
        }
    }

    /// `x^k`.
    pub fn pow(&self, x: Elem, mut k: u64) -> Elem {
        let mut result = self.one();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    /// `x⁻¹`, if it exists.
    pub fn inv(&self, x: Elem) -> Option<Elem> {
        let n = self.modulus as u64;
        match self.ext {
            None => mod_inv(x.re() as i64, n).map(|v| Elem::pack(v, 0)),
            Some((s, t)) => {
                // (a + bx)((a + bs) − bx) = a² + abs − b²t
                let (a, b) = (x.re() as u64, x.ext() as u64);
                let conj = Elem::pack((a + b * s as u64) % n, (n - b) % n);
                let nrm = (a * a % n + a * b % n * s as u64 % n + (n - b * b % n * t as u64 % n)) % n;
                let ninv = mod_inv(nrm as i64, n)?;
                Some(self.mul(conj, Elem::pack(ninv, 0)))
            }
        }
    }

    /// Whether `x` is invertible.
    pub fn is_unit(&self, x: Elem) -> bool {
        self.inv(x).is_some()
    }

    /// The nontrivial automorphism `x ↦ s − x` of a quadratic extension
    /// (`i ↦ −i`, `θ ↦ 1 − θ`); the identity on `Z_n`.
    pub fn conjugate(&self, e: Elem) -> Elem {
        match self.ext {
            None => e,
            Some((s, _)) => {
                let n = self.modulus as u64;
                let (a, b) = (e.re() as u64, e.ext() as u64);
                Elem::pack((a + b * s as u64) % n, (n - b) % n)
            }
        }
    }

    /// Image of `a + bτ`, if the ring receives `Z[τ]`.
    pub fn reduce_quad(&self, z: QuadInt) -> Option<Elem> {
        if z.is_rational() {
            return Some(self.from_int(z.a));
        }
        let t = self.tau?;
        Some(self.add(self.from_int(z.a), self.mul(self.from_int(z.b), t)))
    }

    /// Image of `a + bi`, if the ring receives `Z[i]`.
    pub fn reduce_gauss(&self, z: GaussInt) -> Option<Elem> {
        if z.b == 0 {
            return Some(self.from_int(z.a));
        }
        let i = self.i?;
        Some(self.add(self.from_int(z.a), self.mul(self.from_int(z.b), i)))
    }

    /// Quadratic character by the Euler criterion: `+1` for a nonzero square,
    /// `−1` for a non-square, `0` for zero.
    pub fn quadratic_character(&self, x: Elem) -> Result<i8, RingError> {
        if !self.field {
            return Err(RingError::NotAField(self.description()));
        }
        if self.modulus == 2 {
            return Err(RingError::OddCharRequired);
        }
        if x == Elem::ZERO {
            return Ok(0);
        }
        let e = self.pow(x, (self.order() - 1) / 2);
        if e == self.one() {
            Ok(1)
        } else {
            debug_assert_eq!(e, self.neg(self.one()));
            Ok(-1)
        }
    }

    /// Some square root of `x`, by exhaustive search.
    pub fn sqrt(&self, x: Elem) -> Option<Elem> {
        self.elements().find(|&y| self.mul(y, y) == x)
    }

    /// Human-readable description, e.g. `GF(11) = Z[t]/(-7+5*t), t -> 8`.
    pub fn description(&self) -> String {
        alloc::format!("{self}")
    }

    /// Renders an element, using `t` or `i` for the extension generator.
    pub fn format_elem(&self, e: Elem) -> String {
        let var = match self.kind {
            RingKind::GaussResidue(_) => "i",
            RingKind::IntegersMod(_) | RingKind::PrimeField(_) => "x",
            _ => "t",
        };
        match (e.re(), e.ext()) {
            (a, 0) => alloc::format!("{a}"),
            (0, b) => alloc::format!("{b}*{var}"),
            (a, b) => alloc::format!("{a}+{b}*{var}"),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.modulus;
        match self.kind {
            RingKind::IntegersMod(d) => write!(f, "Z_{d}"),
            RingKind::PrimeField(p) => write!(f, "GF({p})"),
            RingKind::QuadField(p) => write!(f, "GF({}) = Z[t]/({p})", self.order()),
            RingKind::TauResidue(pi) => {
                write!(f, "GF({}) = Z[t]/({pi})", self.order())?;
                if self.ext.is_none() {
                    write!(f, ", t -> {}", self.tau.map_or(0, |t| t.re()))?;
                }
                Ok(())
            }
            RingKind::GaussResidue(Ideal::Full(m)) => write!(f, "Z_{m}[i]"),
            RingKind::GaussResidue(j) => {
                write!(f, "Z_{n} = Z[i]/({j}), i -> {}", self.i.map_or(0, |i| i.re()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_ring_axioms(r: &RingSpec) {
        let els: Vec<Elem> = r.elements().collect();
        assert_eq!(els.len() as u64, r.order());
        for &x in &els {
            assert_eq!(r.add(x, r.neg(x)), Elem::ZERO);
            assert_eq!(r.mul(x, r.one()), x);
            if let Some(y) = r.inv(x) {
                assert_eq!(r.mul(x, y), r.one());
            }
            for &y in &els {
                assert_eq!(r.add(x, y), r.add(y, x));
                assert_eq!(r.mul(x, y), r.mul(y, x));
            }
        }
        // associativity and distributivity on a stride through the ring
        let step = (els.len() / 23).max(1);
        for &x in els.iter().step_by(step) {
            for &y in els.iter().step_by(step) {
                for &z in els.iter().step_by(step) {
                    assert_eq!(r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z)));
                    assert_eq!(r.add(r.add(x, y), z), r.add(x, r.add(y, z)));
                    assert_eq!(r.mul(x, r.add(y, z)), r.add(r.mul(x, y), r.mul(x, z)));
                }
            }
        }
        if r.is_field() {
            assert_eq!(r.units().len() as u64, r.order() - 1);
        }
    }

    #[test]
    fn ring_axioms_on_all_small_rings() {
        let mut rings = Vec::new();
        for d in 2..=12 {
            rings.push(RingSpec::integers_mod(d).unwrap());
        }
        for p in [2, 3, 7] {
            rings.push(RingSpec::quad_field(p).unwrap());
        }
        for pi in [QuadInt::SQRT5, QuadInt::DELTA, QuadInt::DELTA_CONJ, QuadInt::LAMBDA, QuadInt::from_int(2)] {
            rings.push(RingSpec::tau_residue(pi).unwrap());
        }
        for j in [Ideal::Full(3), Ideal::Full(4), Ideal::Full(7), Ideal::Full(11), Ideal::Principal(1, 2), Ideal::Principal(1, 4)] {
            rings.push(RingSpec::gauss_residue(j).unwrap());
        }
        for r in &rings {
            assert!(r.order() <= 121);
            check_ring_axioms(r);
        }
    }

    #[test]
    fn tau_residue_examples() {
        let r = RingSpec::tau_residue(QuadInt::from_int(2)).unwrap();
        assert_eq!(r.order(), 4);
        let r = RingSpec::tau_residue(QuadInt::SQRT5).unwrap();
        assert_eq!(r.order(), 5);
        let r = RingSpec::tau_residue(QuadInt::DELTA).unwrap();
        assert_eq!(r.order(), 11);
        assert_eq!(r.tau_image(), Some(r.from_int(4)));
        let r = RingSpec::tau_residue(QuadInt::DELTA_CONJ).unwrap();
        assert_eq!(r.tau_image(), Some(r.from_int(8)));
        assert!(RingSpec::tau_residue(QuadInt::from_int(11)).is_err());
    }

    #[test]
    fn tau_image_is_golden() {
        for pi in [QuadInt::SQRT5, QuadInt::DELTA, QuadInt::LAMBDA, QuadInt::from_int(3), QuadInt::from_int(2), QuadInt::new(5, 2)] {
            let r = RingSpec::tau_residue(pi).unwrap();
            let t = r.tau_image().unwrap();
            assert_eq!(r.mul(t, t), r.add(t, r.one()), "{pi}");
            assert_eq!(r.reduce_quad(pi), Some(Elem::ZERO), "{pi}");
        }
    }

    #[test]
    fn gauss_residue_examples() {
        let r = RingSpec::gauss_residue(Ideal::Full(3)).unwrap();
        assert_eq!(r.order(), 9);
        assert!(r.is_field());
        let r = RingSpec::gauss_residue(Ideal::Principal(1, 2)).unwrap();
        assert_eq!((r.order(), r.i_image()), (5, Some(r.from_int(2))));
        let r = RingSpec::gauss_residue(Ideal::Principal(1, 8)).unwrap();
        assert_eq!((r.order(), r.i_image()), (65, Some(r.from_int(8))));
        assert!(RingSpec::gauss_residue(Ideal::Principal(2, 4)).is_err());
        for j in [Ideal::Full(5), Ideal::Full(6), Ideal::Principal(4, 7), Ideal::Principal(1, 1)] {
            let r = RingSpec::gauss_residue(j).unwrap();
            let i = r.i_image().unwrap();
            assert_eq!(r.mul(i, i), r.neg(r.one()));
        }
    }

    #[test]
    fn conjugation_of_extensions() {
        let r = RingSpec::gauss_residue(Ideal::Full(7)).unwrap();
        let i = r.i_image().unwrap();
        assert_eq!(r.conjugate(i), r.neg(i));
        let r = RingSpec::quad_field(3).unwrap();
        let t = r.tau_image().unwrap();
        assert_eq!(r.conjugate(t), r.sub(r.one(), t));
    }

    #[test]
    fn euler_criterion_matches_enumeration() {
        for r in [
            RingSpec::prime_field(11).unwrap(),
            RingSpec::quad_field(3).unwrap(),
            RingSpec::quad_field(7).unwrap(),
            RingSpec::gauss_residue(Ideal::Full(3)).unwrap(),
        ] {
            let squares: Vec<Elem> = r.elements().map(|x| r.mul(x, x)).collect();
            for x in r.elements() {
                let expect = if x == Elem::ZERO {
                    0
                } else if squares.contains(&x) {
                    1
                } else {
                    -1
                };
                assert_eq!(r.quadratic_character(x).unwrap(), expect);
            }
        }
        assert!(RingSpec::quad_field(2).unwrap().quadratic_character(Elem::ZERO).is_err());
        assert!(RingSpec::integers_mod(9).unwrap().quadratic_character(Elem::ZERO).is_err());
    }
}
