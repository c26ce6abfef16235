//! Quadratic-space invariants of reduced forms, orthogonal group orders,
//! order-based group identification, and the `ε` rules for `[3,5,3]`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{self, bilinear, Matrix};
use crate::rings::{legendre, Elem, QuadInt, RingError, RingSpec, TauPrimeKind};

/// Errors from form analysis and the order tables.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrthoError {
    /// Symmetric bilinear machinery needs odd characteristic.
    #[error("form analysis is not available in characteristic 2")]
    Char2Unsupported,
    /// Form analysis needs a field.
    #[error("form analysis needs a field, got {0}")]
    NotAField(String),
    /// The root has norm zero.
    #[error("root is isotropic")]
    IsotropicRoot,
    /// No order formula for this (kind, n).
    #[error("no order formula for {0}")]
    Unsupported(String),
    /// `ε` is undefined at the discriminant prime.
    #[error("{0} divides the discriminant")]
    DiscriminantPrime(QuadInt),
    /// Inputs do not satisfy any case of the intersection theorem.
    #[error("hypotheses of the intersection theorem are not met")]
    HypothesisNotMet,
    /// Ring-level failure.
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Square class of a field element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SquareClass {
    /// A nonzero square.
    Square,
    /// A non-square.
    Nonsquare,
    /// Zero.
    Zero,
}

impl SquareClass {
    fn of(ring: &RingSpec, x: Elem) -> Result<Self, RingError> {
        Ok(match ring.quadratic_character(x)? {
            1 => SquareClass::Square,
            -1 => SquareClass::Nonsquare,
            _ => SquareClass::Zero,
        })
    }
}

/// Witt type of a quadratic space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Epsilon {
    /// Even rank, Witt index `n/2`.
    Plus,
    /// Even rank, Witt index `n/2 − 1`.
    Minus,
    /// Odd rank.
    Zero,
    /// Singular form.
    Undefined,
}

impl Epsilon {
    /// `+1`, `−1` or `0`; `None` when undefined.
    pub fn value(self) -> Option<i8> {
        match self {
            Epsilon::Plus => Some(1),
            Epsilon::Minus => Some(-1),
            Epsilon::Zero => Some(0),
            Epsilon::Undefined => None,
        }
    }
}

/// Invariants of a symmetric bilinear form over a finite field of odd
/// characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FormAnalysis {
    /// Dimension `n`.
    pub n: usize,
    /// Order of the field.
    pub q: u64,
    /// Rank of the form.
    pub rank: usize,
    /// Radical basis, one vector per free coordinate (that coordinate `= 1`),
    /// entries as canonical ring indices.
    pub radical: Vec<Vec<u32>>,
    /// Square class of `det B`, `Zero` iff singular.
    pub disc_class: SquareClass,
    /// Witt type.
    pub epsilon: Epsilon,
    /// Witt index of the non-singular part.
    pub witt_index: usize,
}

impl FormAnalysis {
    /// Radical vectors as ring elements.
    pub fn radical_vectors(&self, ring: &RingSpec) -> Vec<Vec<Elem>> {
        self.radical.iter().map(|v| v.iter().map(|&x| ring.from_index(x)).collect()).collect()
    }

    /// Whether the radical is nonzero.
    pub fn is_singular(&self) -> bool {
        !self.radical.is_empty()
    }
}

fn require_odd_field(ring: &RingSpec) -> Result<(), OrthoError> {
    if ring.characteristic() == 2 {
        return Err(OrthoError::Char2Unsupported);
    }
    if !ring.is_field() {
        return Err(OrthoError::NotAField(ring.description()));
    }
    Ok(())
}

/// Analyses the form with Gram matrix `B2 = 2B` (same radical and Witt
/// index as `B`; the discriminant is taken of `B = B2/2`).
pub fn analyze_form(b2: &Matrix, ring: &RingSpec) -> Result<FormAnalysis, OrthoError> {
    require_odd_field(ring)?;
    let n = b2.dim();
    let radical = matrix::null_space(b2, ring);
    let rank = n - radical.len();
    let two_inv_n = ring.pow(ring.inv(ring.from_int(2)).expect("odd characteristic"), n as u64);
    let det_b = ring.mul(b2.det(ring), two_inv_n);
    let disc_class = SquareClass::of(ring, det_b)?;
    let epsilon = if !radical.is_empty() {
        Epsilon::Undefined
    } else if n % 2 == 1 {
        Epsilon::Zero
    } else {
        let sign = if (n / 2) % 2 == 1 { ring.neg(ring.one()) } else { ring.one() };
        match ring.quadratic_character(ring.mul(det_b, sign))? {
            1 => Epsilon::Plus,
            _ => Epsilon::Minus,
        }
    };
    // Witt index of the non-singular quotient V / rad.
    let nondeg = nonsingular_part(b2, &radical, ring);
    let witt_index = witt_index(&nondeg, ring);
    Ok(FormAnalysis {
        n,
        q: ring.order(),
        rank,
        radical: radical.iter().map(|v| v.iter().map(|&x| ring.index(x)).collect()).collect(),
        disc_class,
        epsilon,
        witt_index,
    })
}

/// The form restricted to a complement of the radical.
fn nonsingular_part(form: &Matrix, radical: &[Vec<Elem>], ring: &RingSpec) -> Matrix {
    if radical.is_empty() {
        return form.clone();
    }
    let n = form.dim();
    let basis = matrix::complete_basis(radical, n, ring);
    restrict(form, &basis[..n - radical.len()], ring)
}

/// `Uᵀ · form · U` for the columns `U`.
fn restrict(form: &Matrix, basis: &[Vec<Elem>], ring: &RingSpec) -> Matrix {
    let k = basis.len();
    let mut out = Matrix::zero(k);
    for i in 0..k {
        for j in 0..k {
            out.set(i, j, bilinear(form, &basis[i], &basis[j], ring));
        }
    }
    out
}

/// An orthogonal basis (columns) and the diagonal values, by symmetric
/// Gram–Schmidt. Odd characteristic, non-singular form.
pub fn diagonalize(form: &Matrix, ring: &RingSpec) -> (Vec<Vec<Elem>>, Vec<Elem>) {
    let n = form.dim();
    let mut rest: Vec<Vec<Elem>> = (0..n)
        .map(|k| {
            let mut e = vec![ring.zero(); n];
            e[k] = ring.one();
            e
        })
        .collect();
    let mut basis = Vec::new();
    let mut diag = Vec::new();
    while !rest.is_empty() {
        let q = |v: &[Elem]| bilinear(form, v, v, ring);
        let pick = rest.iter().position(|v| q(v) != Elem::ZERO);
        let u = match pick {
            Some(p) => rest.remove(p),
            None => {
                // every remaining vector is isotropic: u = v_i + v_j has
                // Q(u) = 2B(v_i, v_j), nonzero for some pair unless the rest is radical
                let mut found = None;
                'outer: for i in 0..rest.len() {
                    for j in i + 1..rest.len() {
                        if bilinear(form, &rest[i], &rest[j], ring) != Elem::ZERO {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                let Some((i, j)) = found else { break };
                let s: Vec<Elem> = rest[i].iter().zip(&rest[j]).map(|(&a, &b)| ring.add(a, b)).collect();
                rest.remove(i);
                s
            }
        };
        let qu = q(&u);
        let qu_inv = ring.inv(qu).expect("field");
        for v in rest.iter_mut() {
            let c = ring.mul(bilinear(form, &u, v, ring), qu_inv);
            for (x, &y) in v.iter_mut().zip(&u) {
                *x = ring.sub(*x, ring.mul(c, y));
            }
        }
        basis.push(u);
        diag.push(qu);
    }
    (basis, diag)
}

/// Witt index by repeatedly splitting off hyperbolic planes spanned by an
/// explicit isotropic vector and a partner. The form must be non-singular.
pub fn witt_index(form: &Matrix, ring: &RingSpec) -> usize {
    let m = form.dim();
    if m < 2 {
        return 0;
    }
    let (basis, diag) = diagonalize(form, ring);
    let Some(v) = isotropic_vector(&basis, &diag, ring) else {
        return 0;
    };
    let bv = form.apply(&v, ring);
    let w0 = (0..m)
        .map(|k| {
            let mut e = vec![ring.zero(); m];
            e[k] = ring.one();
            e
        })
        .find(|e| matrix::dot(&bv, e, ring) != Elem::ZERO)
        .expect("non-singular form");
    // scale so B(v, w) = 1, then w ← w − (Q(w)/2)v is isotropic
    let s = ring.inv(matrix::dot(&bv, &w0, ring)).expect("field");
    let w: Vec<Elem> = w0.iter().map(|&x| ring.mul(x, s)).collect();
    let half_qw = ring.mul(bilinear(form, &w, &w, ring), ring.inv(ring.from_int(2)).expect("odd"));
    let w: Vec<Elem> = w.iter().zip(&v).map(|(&x, &y)| ring.sub(x, ring.mul(half_qw, y))).collect();
    debug_assert_eq!(bilinear(form, &w, &w, ring), Elem::ZERO);
    // complement = null space of the 2 × m matrix [vᵀB; wᵀB]
    let bw = form.apply(&w, ring);
    let mut rows = vec![bv, bw];
    rows.resize(m, vec![ring.zero(); m]);
    let cons: Vec<Elem> = rows.into_iter().flatten().collect();
    let comp = matrix::null_space(&Matrix::from_entries(m, &cons), ring);
    1 + witt_index(&restrict(form, &comp, ring), ring)
}

/// A nonzero isotropic vector in the span of the first (at most three)
/// diagonal basis vectors, by search.
fn isotropic_vector(basis: &[Vec<Elem>], diag: &[Elem], ring: &RingSpec) -> Option<Vec<Elem>> {
    let m = basis.len();
    let combine = |c: &[Elem]| -> Vec<Elem> {
        let mut v = vec![ring.zero(); basis[0].len()];
        for (k, &ck) in c.iter().enumerate() {
            for (x, &b) in v.iter_mut().zip(&basis[k]) {
                *x = ring.add(*x, ring.mul(ck, b));
            }
        }
        v
    };
    let q = |c: &[Elem]| c.iter().zip(diag).fold(ring.zero(), |acc, (&x, &d)| ring.add(acc, ring.mul(d, ring.mul(x, x))));
    let elems: Vec<Elem> = ring.elements().collect();
    if m == 2 {
        return elems.iter().map(|&x| [x, ring.one()]).find(|c| q(c) == Elem::ZERO).map(|c| combine(&c));
    }
    for &x in &elems {
        for &y in &elems {
            let c = [x, y, ring.one()];
            if q(&c) == Elem::ZERO {
                return Some(combine(&c));
            }
        }
    }
    None
}

/// Spinor class of the reflection in the root `b`: the square class of
/// `b·b = bᵀB2b/2`.
pub fn spinor_class(b: &[Elem], b2: &Matrix, ring: &RingSpec) -> Result<SquareClass, OrthoError> {
    require_odd_field(ring)?;
    let half = ring.inv(ring.from_int(2)).expect("odd characteristic");
    let nrm = ring.mul(bilinear(b2, b, b, ring), half);
    match SquareClass::of(ring, nrm)? {
        SquareClass::Zero => Err(OrthoError::IsotropicRoot),
        c => Ok(c),
    }
}

/// Which group a label names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum LabelKind {
    /// Full orthogonal group `O(n,q,ε)`.
    O,
    /// Reflection subgroup with square spinor norms.
    O1,
    /// Reflection subgroup with non-square spinor norms.
    O2,
    /// Isometries of a corank-1 space fixing the radical pointwise.
    OHat,
    /// The `O₁`-analogue of [`LabelKind::OHat`].
    OHat1,
    /// A finite Coxeter group matched by order.
    Spherical,
    /// `PSL₂(q)`.
    LinearFractional,
    /// No candidate matched.
    Unidentified,
}

/// A group identification with its predicted order and the competing
/// candidates.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GroupLabel {
    /// Family.
    pub kind: LabelKind,
    /// Printable name, e.g. `O1(4,11,-1)`, `S5`, `PSL2(11)`.
    pub name: String,
    /// Dimension, for orthogonal kinds.
    pub n: Option<usize>,
    /// Field order, for orthogonal and linear-fractional kinds.
    pub q: Option<u64>,
    /// `ε`, for orthogonal kinds.
    pub epsilon: Option<i8>,
    /// Order predicted by the formula or table.
    pub predicted_order: u64,
    /// Every name whose order matched.
    pub candidates: Vec<String>,
}

impl GroupLabel {
    /// The unidentified label for a group of the given order.
    pub fn unidentified(order: u64) -> Self {
        Self {
            kind: LabelKind::Unidentified,
            name: String::from("unidentified"),
            n: None,
            q: None,
            epsilon: None,
            predicted_order: order,
            candidates: Vec::new(),
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn orth_name(kind: LabelKind, n: usize, q: u64, eps: i8) -> String {
    let k = match kind {
        LabelKind::O => "O",
        LabelKind::O1 => "O1",
        LabelKind::O2 => "O2",
        LabelKind::OHat => "OHat",
        LabelKind::OHat1 => "OHat1",
        _ => "?",
    };
    format!("{k}({n},{q},{eps})")
}

/// Order of an orthogonal group over `GF(q)`.
///
/// `O(2,q,ε) = 2(q−ε)`, `O(3,q) = 2q(q²−1)`, `O(4,q,ε) = 2q²(q²−ε)(q²−1)`;
/// `O₁` and `O₂` have index 2. For a corank-1 space of dimension `n`,
/// `Ô = q^{n−1}·|O(n−1)|` and `Ô₁ = q^{n−1}·|O₁(n−1)|`.
pub fn order_formula(kind: LabelKind, n: usize, q: u64, eps: i8) -> Result<u64, OrthoError> {
    let unsupported = || OrthoError::Unsupported(format!("{kind:?} n={n} q={q} eps={eps}"));
    // u128 intermediates; a result beyond u64 is reported as unsupported
    let full = |n: usize, eps: i8| -> Option<u128> {
        let e = eps as i128;
        let qi = q as i128;
        let v = match n {
            1 => 2,
            2 if e != 0 => 2 * (qi - e),
            3 => 2 * qi * (qi * qi - 1),
            4 if e != 0 => 2 * qi.checked_mul(qi)?.checked_mul(qi * qi - e)?.checked_mul(qi * qi - 1)?,
            _ => return None,
        };
        u128::try_from(v).ok()
    };
    let lift = |o: u128, k: u32| (q as u128).checked_pow(k)?.checked_mul(o);
    let v = match kind {
        LabelKind::O => full(n, eps),
        LabelKind::O1 | LabelKind::O2 => full(n, eps).map(|o| o / 2),
        LabelKind::OHat => full(n - 1, eps).and_then(|o| lift(o, n as u32 - 1)),
        LabelKind::OHat1 => full(n - 1, eps).and_then(|o| lift(o, n as u32 - 1)).map(|o| o / 2),
        _ => None,
    };
    let v = v.and_then(|o| u64::try_from(o).ok());
    v.ok_or_else(unsupported)
}

/// `|PSL₂(q)| = q(q²−1)/gcd(2, q−1)`.
pub fn psl2_order(q: u64) -> u64 {
    let q = q as u128;
    let v = q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 };
    u64::try_from(v).unwrap_or(u64::MAX)
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Finite irreducible Coxeter groups of rank `n` with their orders.
pub fn spherical_orders(n: usize) -> Vec<(String, u64)> {
    let k = n as u64;
    let mut v = vec![(format!("S{}", n + 1), factorial(k + 1))];
    if n >= 2 {
        v.push((format!("B{n}"), (1u64 << n) * factorial(k)));
    }
    if n >= 4 {
        v.push((format!("D{n}"), (1u64 << (n - 1)) * factorial(k)));
    }
    match n {
        2 => v.extend([(String::from("G2"), 12), (String::from("H2"), 10)]),
        3 => v.push((String::from("H3"), 120)),
        4 => v.extend([(String::from("F4"), 1152), (String::from("H4"), 14400)]),
        6 => v.push((String::from("E6"), 51840)),
        7 => v.push((String::from("E7"), 2903040)),
        8 => v.push((String::from("E8"), 696729600)),
        _ => {}
    }
    v
}

/// What is known about a group being identified.
#[derive(Clone, Debug)]
pub struct IdentifyContext<'a> {
    /// Dimension of the natural module.
    pub n: usize,
    /// Order of the coefficient field (or ring).
    pub q: u64,
    /// Characteristic of the coefficient ring.
    pub characteristic: u64,
    /// Form analysis, when available (odd characteristic).
    pub form: Option<&'a FormAnalysis>,
    /// Whether every generating reflection has square spinor class.
    pub roots_square: Option<bool>,
}

/// Matches `order` against orthogonal, spherical and `PSL₂` orders.
///
/// Orthogonal labels win when the form is non-singular; all matches are
/// listed in `candidates`. Returns [`LabelKind::Unidentified`] rather than
/// guessing.
pub fn identify_group(order: u64, ctx: &IdentifyContext<'_>) -> GroupLabel {
    let mut found: Vec<(LabelKind, String, Option<usize>, Option<u64>, Option<i8>, u64)> = Vec::new();
    let (n, q) = (ctx.n, ctx.q);
    let mut push_orth = |kind: LabelKind, nn: usize, eps: i8| {
        if let Ok(o) = order_formula(kind, nn, q, eps) {
            if o == order {
                found.push((kind, orth_name(kind, nn, q, eps), Some(nn), Some(q), Some(eps), o));
            }
        }
    };
    if ctx.characteristic == 2 {
        for eps in [1, -1] {
            push_orth(LabelKind::O, n, eps);
        }
    } else if let Some(fa) = ctx.form {
        match (fa.is_singular(), fa.epsilon.value()) {
            (false, Some(eps)) => {
                if ctx.roots_square != Some(true) {
                    push_orth(LabelKind::O, n, eps);
                }
                push_orth(LabelKind::O1, n, eps);
            }
            (true, _) if fa.radical.len() == 1 => {
                let m = n - 1;
                let eps = if m % 2 == 1 { 0 } else if fa.witt_index == m / 2 { 1 } else { -1 };
                push_orth(LabelKind::OHat, n, eps);
                push_orth(LabelKind::OHat1, n, eps);
            }
            _ => {}
        }
    }
    for (name, o) in spherical_orders(n) {
        if o == order {
            found.push((LabelKind::Spherical, name, None, None, None, o));
        }
    }
    for qq in [q, q * q] {
        if qq > 3 && psl2_order(qq) == order {
            found.push((LabelKind::LinearFractional, format!("PSL2({qq})"), None, Some(qq), None, order));
        }
    }
    let candidates: Vec<String> = found.iter().map(|f| f.1.clone()).collect();
    match found.into_iter().next() {
        Some((kind, name, n, q, epsilon, predicted_order)) => {
            GroupLabel { kind, name, n, q, epsilon, predicted_order, candidates }
        }
        None => GroupLabel::unidentified(order),
    }
}

/// The `PSL₂` label for a quotient or Möbius image of the given order,
/// trying the listed field orders.
pub fn identify_psl2(order: u64, field_orders: &[u64]) -> GroupLabel {
    let mut label = GroupLabel::unidentified(order);
    for &q in field_orders {
        if q > 3 && psl2_order(q) == order {
            let name = format!("PSL2({q})");
            label.candidates.push(name.clone());
            if label.kind == LabelKind::Unidentified {
                label = GroupLabel {
                    kind: LabelKind::LinearFractional,
                    name,
                    n: None,
                    q: Some(q),
                    epsilon: None,
                    predicted_order: order,
                    candidates: label.candidates,
                };
            }
        }
    }
    label
}

/// `ε` for `[3,5,3]` at the prime `π`: the mod-55 rule `(p/11)` for inert
/// `p`, `−1` at `√5`, and `(b(5a−2b)/q)` for split `π = a+bτ` of norm `±q`.
pub fn epsilon_353(pi: QuadInt) -> Result<i8, OrthoError> {
    let class = pi.classify_prime()?;
    if class.residue_char == 2 {
        return Err(OrthoError::Char2Unsupported);
    }
    Ok(match class.kind {
        TauPrimeKind::Ramified => -1,
        TauPrimeKind::Inert => legendre(class.residue_char as i64, 11)?,
        TauPrimeKind::Split => {
            if pi.associates(QuadInt::DELTA) {
                return Err(OrthoError::DiscriminantPrime(pi));
            }
            let (a, b) = (pi.a, pi.b);
            let q = class.residue_order;
            legendre(b, q)? * legendre(5 * a - 2 * b, q)?
        }
    })
}

/// The mod-55 congruence table for inert `p` (including `p = 2`).
pub fn epsilon_353_table(p: u64) -> Option<i8> {
    const PLUS: [u64; 10] = [3, 12, 23, 27, 37, 38, 42, 47, 48, 53];
    const MINUS: [u64; 10] = [2, 7, 8, 13, 17, 18, 28, 32, 43, 52];
    let r = p % 55;
    if PLUS.contains(&r) {
        Some(1)
    } else if MINUS.contains(&r) {
        Some(-1)
    } else {
        None
    }
}

/// `ε(π)·ε(π′) = (q/11)` for a split `q ≠ 11`: `+1` means `π` and `π′` give
/// the same `ε`, `−1` opposite ones.
pub fn epsilon_conjugate_product(q: u64) -> Result<i8, OrthoError> {
    if q == 11 || !(q % 5 == 1 || q % 5 == 4) {
        return Err(OrthoError::Unsupported(format!("q = {q} is not a split prime other than 11")));
    }
    Ok(legendre(q as i64, 11)?)
}

/// Which of `V`, `V₀`, `V_{n−1}` and `V_{0,n−1}` are singular, and how the
/// two maximal parabolic images were identified.
///
/// The theorem behind [`predict_intersection`] also assumes a
/// crystallographic diagram, a generic prime and a square label among the
/// middle nodes; checking those is the caller's job.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntersectionShape {
    /// `V` singular.
    pub v_singular: bool,
    /// `V₀` singular.
    pub v0_singular: bool,
    /// `V_{n−1}` singular.
    pub vlast_singular: bool,
    /// `V_{0,n−1}` singular.
    pub v0last_singular: bool,
    /// Kind of `G₀`.
    pub g0: LabelKind,
    /// Kind of `G_{n−1}`.
    pub glast: LabelKind,
    /// Whether `G_{0,n−1} = O₁(V_{0,n−1})`.
    pub g0last_is_o1: bool,
    /// Whether `G = O₁(V)`.
    pub g_is_o1: bool,
}

/// What the intersection `G₀ ∩ G_{n−1}` is predicted to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntersectionPrediction {
    /// `O(V_{0,n−1})`.
    O,
    /// `O₁(V_{0,n−1})`.
    O1,
    /// `Ô(V_{0,n−1})`.
    OHat,
    /// `Ô₁(V_{0,n−1})`.
    OHat1,
    /// Exactly `G_{0,n−1}`.
    Parabolic,
}

/// The three-case intersection theorem as a predictor:
///
/// * (a) `V₀`, `V_{n−1}`, `V_{0,n−1}` non-singular: both full `O` gives
///   `O(V_{0,n−1})`; otherwise (some `O₁`) gives `O₁(V_{0,n−1})`.
/// * (b) `V_{0,n−1}` singular, `V₀`, `V_{n−1}` non-singular: both `O`
///   gives `Ô`; otherwise `Ô₁`.
/// * (c) `V₀` or `V_{n−1}` singular: `G_{0,n−1}`, provided
///   `G = O₁(V)` whenever `G_{0,n−1} = O₁(V_{0,n−1})`.
pub fn predict_intersection(s: &IntersectionShape) -> Result<IntersectionPrediction, OrthoError> {
    let orth = |k: LabelKind| matches!(k, LabelKind::O | LabelKind::O1 | LabelKind::OHat | LabelKind::OHat1);
    let both_full = matches!(s.g0, LabelKind::O | LabelKind::OHat) && matches!(s.glast, LabelKind::O | LabelKind::OHat);
    if s.v0_singular || s.vlast_singular {
        if s.v_singular || s.v0last_singular || (s.g0last_is_o1 && !s.g_is_o1) {
            return Err(OrthoError::HypothesisNotMet);
        }
        return Ok(IntersectionPrediction::Parabolic);
    }
    if !(orth(s.g0) && orth(s.glast)) || (s.v0last_singular && s.v_singular) {
        return Err(OrthoError::HypothesisNotMet);
    }
    Ok(match (s.v0last_singular, both_full) {
        (false, true) => IntersectionPrediction::O,
        (false, false) => IntersectionPrediction::O1,
        (true, true) => IntersectionPrediction::OHat,
        (true, false) => IntersectionPrediction::OHat1,
    })
}
