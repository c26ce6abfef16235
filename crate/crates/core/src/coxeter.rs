//! String diagrams, basic systems, Cartan data and reflection generators.
//!
//! A diagram `[p₁,…,p_{n−1}]` carries node labels `2t_i² = b_i·b_i` over
//! `Z` or `Z[τ]`. Adjacent labels differ by a fixed ratio per period:
//!
//! | period | ratio       | branches |
//! |--------|-------------|----------|
//! | 3      | 1           | 1        |
//! | 4      | 2           | 1        |
//! | 5      | τ²          | 1        |
//! | 6      | 3           | 1        |
//! | ∞      | 4           | 1        |
//! | ∞      | 1           | 2        |

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::matrix::{DomainMatrix, Matrix};
use crate::rings::{arith, parse_quad, QuadInt, RingSpec};

/// Errors from diagram parsing and reduction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    /// The symbol did not parse.
    #[error("bad Coxeter symbol {0:?}")]
    BadSymbol(String),
    /// Explicit labels break the allowed ratios.
    #[error("labels violate the basic-system ratios: {0}")]
    LabelViolation(String),
    /// The coefficient domain does not map into the ring.
    #[error("{0} does not receive the coefficient domain of the diagram")]
    NoEmbedding(String),
    /// Genericity is only defined for crystallographic diagrams.
    #[error("genericity is not defined for diagrams over Z[t]; use special-prime flags")]
    NotApplicable,
}

/// The period of a product `r_i r_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Period {
    /// A finite period.
    Finite(u32),
    /// `∞`.
    Infinite,
}

impl Period {
    /// The finite value, if any.
    pub fn finite(self) -> Option<u32> {
        match self {
            Period::Finite(p) => Some(p),
            Period::Infinite => None,
        }
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Period::Finite(p) => write!(f, "{p}"),
            Period::Infinite => f.write_str("oo"),
        }
    }
}

/// A branch between nodes `i` and `i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Branch {
    /// Period `p_{i,i+1}`.
    pub period: Period,
    /// Multiplicity `λ ∈ {0, 1, 2}`.
    pub multiplicity: u8,
}

/// A string diagram with a basic system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Diagram {
    labels: Vec<QuadInt>,
    branches: Vec<Branch>,
}

/// Cartan integers and the doubled Gram matrix of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    /// `m_ij`, with `r_i(b_j) = b_j + m_ij b_i`.
    pub m: DomainMatrix<QuadInt>,
    /// `B2 = 2·Gram`, integral over the domain.
    pub b2: DomainMatrix<QuadInt>,
}

/// Reduced generators together with a collapse flag.
#[derive(Clone, Debug)]
pub struct Reduced {
    /// Entrywise images of the generators.
    pub generators: Vec<Matrix>,
    /// Whether some generator became the identity.
    pub collapsed: bool,
}

/// Flags replacing genericity for primes of `Z[τ]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SpecialPrimeFlags {
    /// Residue characteristic 2: form analysis is skipped.
    pub char2: bool,
    /// `π` divides the discriminant: the form is singular.
    pub divides_disc: bool,
}

const TAU2: QuadInt = QuadInt::new(1, 1);

fn ratio_for(p: Period, mult: u8) -> Option<QuadInt> {
    Some(match (p, mult) {
        (Period::Finite(2), 0) => return None,
        (Period::Finite(3), 1) => QuadInt::ONE,
        (Period::Finite(4), 1) => QuadInt::from_int(2),
        (Period::Finite(5), 1) => TAU2,
        (Period::Finite(6), 1) => QuadInt::from_int(3),
        (Period::Infinite, 1) => QuadInt::from_int(4),
        (Period::Infinite, 2) => QuadInt::ONE,
        _ => return None,
    })
}

impl Diagram {
    /// Builds a diagram from explicit labels and branches, checking ratios
    /// and canonically rescaling.
    pub fn new(labels: Vec<QuadInt>, branches: Vec<Branch>) -> Result<Self, CoxeterError> {
        if labels.len() != branches.len() + 1 || labels.is_empty() {
            return Err(CoxeterError::LabelViolation(format!(
                "{} labels for {} branches",
                labels.len(),
                branches.len()
            )));
        }
        for (k, b) in branches.iter().enumerate() {
            let (s, t) = (labels[k], labels[k + 1]);
            if s.real_cmp(QuadInt::ZERO) != Ordering::Greater || t.real_cmp(QuadInt::ZERO) != Ordering::Greater {
                return Err(CoxeterError::LabelViolation(format!("labels must be positive, got {s}, {t}")));
            }
            if b.multiplicity == 0 {
                if b.period != Period::Finite(2) {
                    return Err(CoxeterError::LabelViolation(format!("branch {k} has no edge but period {}", b.period)));
                }
                continue;
            }
            let r = ratio_for(b.period, b.multiplicity).ok_or_else(|| {
                CoxeterError::LabelViolation(format!("period {} with {} branches", b.period, b.multiplicity))
            })?;
            let (lo, hi) = if s.real_cmp(t) == Ordering::Greater { (t, s) } else { (s, t) };
            if lo * r != hi {
                return Err(CoxeterError::LabelViolation(format!(
                    "nodes {k},{} labelled {s}, {t} need ratio {r} for period {}",
                    k + 1,
                    b.period
                )));
            }
        }
        Ok(Self { labels: canonical_labels(labels), branches })
    }

    /// Rank `n`.
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Node labels `2t_i²`.
    pub fn labels(&self) -> &[QuadInt] {
        &self.labels
    }

    /// Branches between consecutive nodes.
    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    /// Period `p_ij` for any pair.
    pub fn period(&self, i: usize, j: usize) -> Period {
        match i.abs_diff(j) {
            0 => Period::Finite(1),
            1 => self.branches[i.min(j)].period,
            _ => Period::Finite(2),
        }
    }

    /// Branch multiplicity `λ_ij` for any pair.
    pub fn multiplicity(&self, i: usize, j: usize) -> u8 {
        if i.abs_diff(j) == 1 {
            self.branches[i.min(j)].multiplicity
        } else {
            0
        }
    }

    /// The periods as a list, e.g. `[3, 5, 3]`.
    pub fn periods(&self) -> Vec<Period> {
        self.branches.iter().map(|b| b.period).collect()
    }

    /// Whether the coefficient domain is `Z[τ]` rather than `Z`.
    pub fn is_golden(&self) -> bool {
        self.labels.iter().any(|l| !l.is_rational())
            || self.branches.iter().any(|b| b.period == Period::Finite(5))
    }

    /// The symbol, e.g. `[3,oo]`.
    pub fn symbol(&self) -> String {
        let ps: Vec<String> = self.branches.iter().map(|b| b.period.to_string()).collect();
        format!("[{}]", ps.join(","))
    }

    /// Whether the symbol reads the same reversed.
    pub fn is_palindromic(&self) -> bool {
        let ps = self.periods();
        ps.iter().eq(ps.iter().rev())
    }

    /// The sub-diagram on consecutive nodes `range`.
    pub fn sub(&self, range: core::ops::Range<usize>) -> Diagram {
        let labels = self.labels[range.clone()].to_vec();
        let branches = self.branches[range.start..range.end.saturating_sub(1)].to_vec();
        Diagram { labels: canonical_labels(labels), branches }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "{} labels={}", self.symbol(), ls.join(","))
    }
}

/// Divides out rational content, then (over `Z[τ]`) the largest even power
/// of `τ` below the smallest label when that label is a unit.
fn canonical_labels(mut labels: Vec<QuadInt>) -> Vec<QuadInt> {
    let g = labels.iter().fold(0i64, |g, l| arith::gcd(g, l.content()));
    if g > 1 {
        for l in labels.iter_mut() {
            *l = QuadInt::new(l.a / g, l.b / g);
        }
    }
    let min = labels.iter().copied().fold(labels[0], |m, l| if l.real_cmp(m) == Ordering::Less { l } else { m });
    if min.is_unit() && min != QuadInt::ONE {
        // min = τ^k with k ∈ Z (it is positive); find k.
        let k = (-40..=40).find(|&k| QuadInt::tau_pow(k) == min);
        if let Some(k) = k {
            let even = k - k.rem_euclid(2);
            let u = QuadInt::tau_pow(-even);
            for l in labels.iter_mut() {
                *l = *l * u;
            }
        }
    }
    labels
}

fn parse_period(tok: &str) -> Option<Period> {
    match tok {
        "oo" | "∞" | "inf" => Some(Period::Infinite),
        t => match t.parse::<u32>().ok()? {
            p @ 2..=6 => Some(Period::Finite(p)),
            _ => None,
        },
    }
}

/// Parses `"[3,5,3]"`, `"[3,oo]"` or `"[4,3] labels=1,2,2"`.
///
/// Without labels the default basic system is used: ascending ratios for
/// periods 3, 4, 6, ∞ (single branch, ratio 4); for period 5 the ratio `τ²`
/// ascends in the first half of the string and descends in the second, so
/// `[3,5,3]` gets `(1,1,τ²,τ²)` and `[5,3,5]` gets `(1,τ²,τ²,1)`. With
/// explicit labels an ∞-branch between equal labels is a double branch.
pub fn parse_symbol(text: &str) -> Result<Diagram, CoxeterError> {
    let bad = || CoxeterError::BadSymbol(text.to_string());
    let t = text.trim();
    let (sym, rest) = match t.find(']') {
        Some(k) => (&t[..=k], t[k + 1..].trim()),
        None => return Err(bad()),
    };
    let inner = sym.strip_prefix('[').ok_or_else(bad)?.trim_end_matches(']').trim();
    let periods: Vec<Period> = if inner.is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(|s| parse_period(s.trim())).collect::<Option<_>>().ok_or_else(bad)?
    };
    let rest = rest.trim_start_matches([',', ';']).trim();
    if rest.is_empty() {
        return Ok(default_diagram(&periods));
    }
    let list = rest.strip_prefix("labels=").ok_or_else(bad)?;
    let labels: Vec<QuadInt> = list
        .split(',')
        .map(|s| parse_quad(s.trim()))
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    if labels.len() != periods.len() + 1 {
        return Err(CoxeterError::LabelViolation(format!(
            "{} labels for rank {}",
            labels.len(),
            periods.len() + 1
        )));
    }
    let branches = periods
        .iter()
        .enumerate()
        .map(|(k, &p)| {
            let mult = match p {
                Period::Finite(2) => 0,
                Period::Infinite if labels[k] == labels[k + 1] => 2,
                _ => 1,
            };
            Branch { period: p, multiplicity: mult }
        })
        .collect();
    Diagram::new(labels, branches)
}

/// How one branch is oriented when building labels left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Orientation {
    Ascending,
    Descending,
    Double,
}

fn build(periods: &[Period], orient: &[Orientation]) -> Diagram {
    let mut labels = vec![QuadInt::ONE];
    let mut branches = Vec::new();
    for (k, &p) in periods.iter().enumerate() {
        let mult = match (p, orient[k]) {
            (Period::Finite(2), _) => 0,
            (_, Orientation::Double) => 2,
            _ => 1,
        };
        let r = ratio_for(p, mult).unwrap_or(QuadInt::ONE);
        let last = labels[k];
        match orient[k] {
            Orientation::Descending => {
                for l in labels.iter_mut() {
                    *l = *l * r;
                }
                labels.push(last);
            }
            _ => labels.push(last * r),
        }
        branches.push(Branch { period: p, multiplicity: mult });
    }
    Diagram { labels: canonical_labels(labels), branches }
}

fn default_diagram(periods: &[Period]) -> Diagram {
    let n = periods.len() + 1;
    let orient: Vec<Orientation> = periods
        .iter()
        .enumerate()
        .map(|(k, &p)| {
            if p == Period::Finite(5) && 2 * k > n - 2 {
                Orientation::Descending
            } else {
                Orientation::Ascending
            }
        })
        .collect();
    build(periods, &orient)
}

/// All basic systems reachable by inverting branch ratios and, on
/// ∞-branches, switching between the ratio-4 and double-branch forms.
pub fn basic_system_variants(d: &Diagram) -> Vec<Diagram> {
    let periods = d.periods();
    let choices: Vec<Vec<Orientation>> = periods
        .iter()
        .map(|&p| match p {
            Period::Finite(2) | Period::Finite(3) => vec![Orientation::Ascending],
            Period::Infinite => vec![Orientation::Ascending, Orientation::Descending, Orientation::Double],
            _ => vec![Orientation::Ascending, Orientation::Descending],
        })
        .collect();
    let mut out: Vec<Diagram> = Vec::new();
    let mut idx = vec![0usize; periods.len()];
    loop {
        let orient: Vec<Orientation> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        let dd = build(&periods, &orient);
        if !out.contains(&dd) {
            out.push(dd);
        }
        // odometer
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    out
}

/// Cartan integers `m_ij = λ_ij·max(1, label_j/label_i)` and
/// `B2 = 2·Gram` with `B2_ii = 2·label_i`, `B2_ij = −λ_ij·max(label_i, label_j)`.
pub fn cartan_data(d: &Diagram) -> CartanData {
    let n = d.rank();
    let l = &d.labels;
    let mut m = DomainMatrix::identity(n);
    let mut b2 = DomainMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                m.set(i, i, QuadInt::from_int(-2));
                b2.set(i, i, l[i] * QuadInt::from_int(2));
                continue;
            }
            let lam = QuadInt::from_int(d.multiplicity(i, j) as i64);
            let ratio = if l[j].real_cmp(l[i]) == Ordering::Greater {
                l[j].div_exact(l[i]).expect("label ratios are exact by construction")
            } else {
                QuadInt::ONE
            };
            m.set(i, j, lam * ratio);
            b2.set(i, j, -(lam * l[i].real_max(l[j])));
        }
    }
    CartanData { m, b2 }
}

/// `r_i` acting on columns: the identity except row `i`, which is
/// `(m_i0, …, −1, …, m_i,n−1)`.
pub fn reflection_generators(d: &Diagram) -> Vec<DomainMatrix<QuadInt>> {
    let c = cartan_data(d);
    let n = d.rank();
    (0..n)
        .map(|i| {
            let mut r = DomainMatrix::identity(n);
            for j in 0..n {
                r.set(i, j, if i == j { QuadInt::from_int(-1) } else { c.m.get(i, j) });
            }
            r
        })
        .collect()
}

/// Reduces domain matrices entrywise into `ring`.
pub fn reduce_matrices(gens: &[DomainMatrix<QuadInt>], ring: &RingSpec) -> Result<Vec<Matrix>, CoxeterError> {
    gens.iter()
        .map(|g| g.reduce(|z| ring.reduce_quad(z)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| CoxeterError::NoEmbedding(ring.description()))
}

/// Reduces generators and records whether any collapsed to the identity.
pub fn reduce_generators(gens: &[DomainMatrix<QuadInt>], ring: &RingSpec) -> Result<Reduced, CoxeterError> {
    let generators = reduce_matrices(gens, ring)?;
    let collapsed = generators.iter().any(|g| g.is_identity(ring));
    Ok(Reduced { generators, collapsed })
}

/// `det(B2)` over the domain.
pub fn gram_determinant(d: &Diagram) -> QuadInt {
    cartan_data(d).b2.det()
}

/// The discriminant `det(B) = det(B2)/2ⁿ` modulo squares.
///
/// Over `Z` this is the signed square-free part. Over `Z[τ]` rational
/// square content and factors `5 = (√5)²` are removed, and among the
/// associates `τ^{2k}·z` the representative with coordinates of equal sign
/// and least `|a| + |b|` is returned.
pub fn discriminant(d: &Diagram) -> QuadInt {
    let det = gram_determinant(d);
    // 2ⁿ and 2⁻ⁿ lie in the same square class.
    let mut z = det * QuadInt::from_int(1i64 << (d.rank() % 2));
    if z.is_zero() {
        return z;
    }
    if z.is_rational() && !d.is_golden() {
        return QuadInt::from_int(squarefree_part(z.a));
    }
    loop {
        let c = z.content();
        let sq = arith::factorize(c.unsigned_abs())
            .into_iter()
            .map(|(p, e)| p.pow(e / 2 * 2))
            .product::<u64>() as i64;
        if sq > 1 {
            z = QuadInt::new(z.a / sq, z.b / sq);
            continue;
        }
        match z.div_exact(QuadInt::from_int(5)) {
            Some(w) => z = w,
            None => break,
        }
    }
    let mut best = z;
    for k in -12..=12 {
        let w = z * QuadInt::tau_pow(2 * k);
        let same_sign = w.a.signum() * w.b.signum() >= 0;
        let cost = |v: QuadInt| v.a.unsigned_abs() + v.b.unsigned_abs();
        let best_same = best.a.signum() * best.b.signum() >= 0;
        if (same_sign && !best_same) || (same_sign == best_same && cost(w) < cost(best)) {
            best = w;
        }
    }
    best
}

fn squarefree_part(x: i64) -> i64 {
    let core: i64 = arith::factorize(x.unsigned_abs())
        .into_iter()
        .filter(|&(_, e)| e % 2 == 1)
        .map(|(p, _)| p as i64)
        .product();
    x.signum() * core
}

/// Genericity for a crystallographic diagram at a rational prime `p`:
/// `p ≥ 5`, or `p = 3` with no period 6.
pub fn is_generic(d: &Diagram, p: u64) -> Result<bool, CoxeterError> {
    if d.is_golden() {
        return Err(CoxeterError::NotApplicable);
    }
    Ok(p >= 5 || (p == 3 && !d.periods().contains(&Period::Finite(6))))
}

/// Special-prime flags for a diagram over `Z[τ]` at the prime `π`.
pub fn special_prime_flags(d: &Diagram, pi: QuadInt) -> Result<SpecialPrimeFlags, crate::rings::RingError> {
    let class = pi.classify_prime()?;
    let ring = RingSpec::tau_residue(pi)?;
    let det = gram_determinant(d);
    let divides_disc = ring.reduce_quad(det).expect("tau residue") == ring.zero();
    Ok(SpecialPrimeFlags { char2: class.residue_char == 2, divides_disc })
}
