//! String C-group certification, polytope data, self-duality, the
//! singular-prime quotient pipeline, and rotation-group chirality.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{self, CoxeterError, Diagram, Period};
use crate::groupkit::{self, intersection_order, GroupError, MatrixGroup};
use crate::matrix::{DomainMatrix, Matrix};
use crate::ortho::{self, FormAnalysis, GroupLabel, IdentifyContext, OrthoError, SquareClass};
use crate::rings::{self, QuadInt, RingError, RingKind, RingSpec};

/// Errors from the certification pipelines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CGroupError {
    /// Enumeration failed.
    #[error(transparent)]
    Group(#[from] GroupError),
    /// Diagram or reduction failure.
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    /// Form analysis failure.
    #[error(transparent)]
    Ortho(#[from] OrthoError),
    /// Ring construction failure.
    #[error(transparent)]
    Ring(#[from] RingError),
    /// A report was requested for a group that is not a string C-group.
    #[error("not a string C-group: {0:?} vs {1:?}")]
    NotCGroup(Vec<usize>, Vec<usize>),
    /// The quotient pipeline needs a one-dimensional radical.
    #[error("radical has dimension {0}, expected 1")]
    NotCorankOne(usize),
    /// The rotation generators break a defining relation.
    #[error("relation fails: {0}")]
    RelationFailure(String),
    /// A generator is trivial or not an involution.
    #[error("generator {0} is trivial or not an involution")]
    NotInvolution(usize),
}

/// Outcome of the intersection-condition check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Diagnostics {
    /// First failing pair `(I, J)`, if any.
    pub failed: Option<(Vec<usize>, Vec<usize>)>,
    /// Number of intersections compared.
    pub checked: usize,
}

fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Lazily built standard subgroups `⟨r_i : i ∈ I⟩`, keyed by bitmask.
pub struct Parabolics<'a> {
    group: &'a MatrixGroup,
    budget: usize,
    cache: BTreeMap<u32, MatrixGroup>,
}

impl<'a> Parabolics<'a> {
    /// A cache over `group`'s generators.
    pub fn new(group: &'a MatrixGroup, budget: usize) -> Self {
        Self { group, budget, cache: BTreeMap::new() }
    }

    fn full(&self) -> u32 {
        (1u32 << self.group.generators().len()) - 1
    }

    /// `⟨r_i : i ∈ mask⟩`.
    pub fn get(&mut self, mask: u32) -> Result<&MatrixGroup, GroupError> {
        if mask == self.full() {
            return Ok(self.group);
        }
        if !self.cache.contains_key(&mask) {
            let g = self.group.subgroup(&bits(mask), self.budget)?;
            self.cache.insert(mask, g);
        }
        Ok(&self.cache[&mask])
    }

    /// `|⟨I⟩|`.
    pub fn order(&mut self, mask: u32) -> Result<usize, GroupError> {
        self.get(mask).map(MatrixGroup::order)
    }

    /// Whether `⟨I⟩ ∩ ⟨J⟩ = ⟨I ∩ J⟩` (compared by order, since `⊇` always holds).
    pub fn condition(&mut self, i: u32, j: u32) -> Result<bool, GroupError> {
        let meet = self.order(i & j)?;
        self.get(i)?;
        self.get(j)?;
        let a = if i == self.full() { self.group } else { &self.cache[&i] };
        let b = if j == self.full() { self.group } else { &self.cache[&j] };
        Ok(intersection_order(a, b) == meet)
    }
}

fn check_involutions(g: &MatrixGroup) -> Result<(), CGroupError> {
    for (k, r) in g.generators().iter().enumerate() {
        if !g.is_identity(&g.mul(r, r)) || g.is_identity(r) {
            return Err(CGroupError::NotInvolution(k));
        }
    }
    Ok(())
}

/// Whether `group` with its distinguished involutory generators is a
/// string C-group, by the inductive criterion: `G` is one iff `G₀` and
/// `G_{n−1}` are and `G₀ ∩ G_{n−1} = G_{0,n−1}` (rank 2: `⟨r₀⟩ ∩ ⟨r₁⟩ = 1`).
pub fn verify_string_cgroup(group: &MatrixGroup, budget: usize) -> Result<(bool, Diagnostics), CGroupError> {
    check_involutions(group)?;
    let n = group.generators().len();
    let mut p = Parabolics::new(group, budget);
    let mut diag = Diagnostics::default();
    let ok = inductive(&mut p, 0, n, &mut diag)?;
    Ok((ok, diag))
}

fn range_mask(lo: usize, hi: usize) -> u32 {
    (lo..hi).fold(0, |m, i| m | 1 << i)
}

fn inductive(p: &mut Parabolics<'_>, lo: usize, hi: usize, diag: &mut Diagnostics) -> Result<bool, GroupError> {
    if hi - lo < 2 {
        return Ok(true);
    }
    if hi - lo > 2 && !(inductive(p, lo + 1, hi, diag)? && inductive(p, lo, hi - 1, diag)?) {
        return Ok(false);
    }
    let (i, j) = (range_mask(lo + 1, hi), range_mask(lo, hi - 1));
    diag.checked += 1;
    let ok = p.condition(i, j)?;
    if !ok && diag.failed.is_none() {
        diag.failed = Some((bits(i), bits(j)));
    }
    Ok(ok)
}

/// The intersection condition checked literally for every pair `(I, J)`.
pub fn verify_string_cgroup_brute(group: &MatrixGroup, budget: usize) -> Result<(bool, Diagnostics), CGroupError> {
    check_involutions(group)?;
    let n = group.generators().len();
    let mut p = Parabolics::new(group, budget);
    let mut diag = Diagnostics::default();
    for i in 0..1u32 << n {
        for j in i + 1..1u32 << n {
            if i & j == i || i & j == j {
                continue; // nested pairs hold trivially
            }
            diag.checked += 1;
            if !p.condition(i, j)? {
                diag.failed = Some((bits(i), bits(j)));
                return Ok((false, diag));
            }
        }
    }
    Ok((true, diag))
}

/// Periods of `r_{j−1} r_j`.
pub fn schlafli(group: &MatrixGroup) -> Vec<u64> {
    let g = group.generators();
    (1..g.len()).map(|j| group.element_order(&group.mul(&g[j - 1], &g[j]))).collect()
}

/// `f_i = |G| / |G_i|`, `G_i` omitting generator `i`.
pub fn f_vector(group: &MatrixGroup, budget: usize) -> Result<Vec<u64>, GroupError> {
    let n = group.generators().len();
    (0..n)
        .map(|i| {
            let idx: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            Ok((group.order() / group.subgroup(&idx, budget)?.order()) as u64)
        })
        .collect()
}

/// Whether `r_i ↦ images[i]` extends to an automorphism of `group`.
///
/// Elements are visited in closure order, each reached from an earlier one
/// by a generator, so `φ(g·s_i) = φ(g)·images[i]` defines `φ` on the whole
/// Cayley graph; it is a homomorphism iff no edge conflicts and an
/// automorphism iff it is also injective.
pub fn extends_to_automorphism(group: &MatrixGroup, images: &[Matrix]) -> bool {
    let n = group.order();
    let gens = group.generators();
    if images.len() != gens.len() || images.iter().any(|m| !group.contains(m)) {
        return false;
    }
    let mut phi = vec![u32::MAX; n];
    phi[0] = 0;
    for k in 0..n {
        let gk = group.element(k);
        let pk = group.element(phi[k] as usize);
        for (s, t) in gens.iter().zip(images) {
            let h = group.index_of(&group.mul(&gk, s)).expect("closed");
            let Some(v) = group.index_of(&group.mul(&pk, t)) else { return false };
            if phi[h] == u32::MAX {
                phi[h] = v as u32;
            } else if phi[h] != v as u32 {
                return false;
            }
        }
    }
    let mut seen = vec![false; n];
    phi.iter().all(|&v| !core::mem::replace(&mut seen[v as usize], true))
}

/// How self-duality was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SelfDuality {
    /// A given matrix conjugates `r_i` to `r_{n−1−i}`.
    ExplicitMap,
    /// `r_i ↦ r_{n−1−i}` extends to an automorphism.
    Automorphism,
    /// The Schläfli symbol is not palindromic.
    NotPalindromic,
    /// No automorphism reverses the generators.
    NoAutomorphism,
    /// Not attempted (group too large, no explicit map).
    Untested,
}

impl SelfDuality {
    /// `Some(true/false)` when decided.
    pub fn verdict(self) -> Option<bool> {
        match self {
            SelfDuality::ExplicitMap | SelfDuality::Automorphism => Some(true),
            SelfDuality::NotPalindromic | SelfDuality::NoAutomorphism => Some(false),
            SelfDuality::Untested => None,
        }
    }
}

/// Largest group searched for a duality automorphism.
pub const SELF_DUAL_CAP: usize = 2_000_000;

/// Self-duality: first the explicit map (if any), then the automorphism
/// `r_i ↦ r_{n−1−i}` when the group is small enough.
pub fn self_dual_check(group: &MatrixGroup, explicit: Option<&Matrix>) -> SelfDuality {
    let s = schlafli(group);
    if !s.iter().eq(s.iter().rev()) {
        return SelfDuality::NotPalindromic;
    }
    let gens = group.generators();
    let n = gens.len();
    let ring = group.ring();
    if let Some(g) = explicit {
        if let Some(g_inv) = g.inverse(ring) {
            let ok = (0..n).all(|i| {
                let c = g.mul(&gens[i], ring).mul(&g_inv, ring);
                group.encode(&c) == group.encode(&gens[n - 1 - i])
            });
            if ok {
                return SelfDuality::ExplicitMap;
            }
        }
    }
    if group.order() > SELF_DUAL_CAP {
        return SelfDuality::Untested;
    }
    let rev: Vec<Matrix> = gens.iter().rev().cloned().collect();
    if extends_to_automorphism(group, &rev) {
        SelfDuality::Automorphism
    } else {
        SelfDuality::NoAutomorphism
    }
}

/// The map `(b₀,b₁,b₂,b₃) ↦ (τ⁻¹b₃, τ⁻¹b₂, τb₁, τb₀)` over `Z[τ]`,
/// exchanging `r_i` and `r_{3−i}` in `[3,5,3]`.
pub fn duality_map_353() -> DomainMatrix<QuadInt> {
    let t = QuadInt::TAU;
    let ti = QuadInt::tau_pow(-1);
    let z = QuadInt::ZERO;
    // column j is the image of b_j
    DomainMatrix::from_rows(vec![
        vec![z, z, z, t],
        vec![z, z, t, z],
        vec![z, ti, z, z],
        vec![ti, z, z, z],
    ])
}

/// Chiral or directly regular.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum RotationKind {
    /// No involutory automorphism `ρ` exists.
    Chiral,
    /// The rotation group admits `ρ`.
    DirectlyRegular,
}

/// Result of [`verify_rotation_group`].
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RotationVerdict {
    /// Intersection condition (rank 4: `⟨σ₁⟩∩⟨σ₂⟩ = ⟨σ₂⟩∩⟨σ₃⟩ = 1` and
    /// `⟨σ₁,σ₂⟩∩⟨σ₂,σ₃⟩ = ⟨σ₂⟩`; rank 3: `⟨σ₁⟩∩⟨σ₂⟩ = 1`).
    pub intersection_ok: bool,
    /// Chiral or directly regular.
    pub kind: RotationKind,
    /// Orders of the `σ_i`.
    pub periods: Vec<u64>,
    /// Face counts `|Γ| / |Γ_i|`.
    pub f_vector: Vec<u64>,
    /// `2|Γ|`.
    pub flag_count: u64,
}

/// Checks the rotation-group relations and intersection condition and
/// decides chirality by looking for `ρ` with `ρ(σ₁) = σ₁⁻¹`,
/// `ρ(σ₂) = σ₁²σ₂` and `ρ(σ_j) = σ_j` for `j ≥ 3`.
pub fn verify_rotation_group(group: &MatrixGroup, periods: &[u64], budget: usize) -> Result<RotationVerdict, CGroupError> {
    let s = group.generators();
    let r = s.len();
    if !(2..=3).contains(&r) || periods.len() != r {
        return Err(CGroupError::RelationFailure(format!("need 2 or 3 rotation generators, got {r}")));
    }
    let id = |m: &Matrix| group.is_identity(m);
    let pow = |m: &Matrix, k: u64| (0..k).fold(Matrix::identity(group.ring(), group.dim()), |acc, _| group.mul(&acc, m));
    let actual: Vec<u64> = s.iter().map(|m| group.element_order(m)).collect();
    for i in 0..r {
        if !id(&pow(&s[i], periods[i])) {
            return Err(CGroupError::RelationFailure(format!("sigma{}^{} != 1", i + 1, periods[i])));
        }
        let mut prod = s[i].clone();
        for j in i + 1..r {
            prod = group.mul(&prod, &s[j]);
            if !id(&group.mul(&prod, &prod)) {
                return Err(CGroupError::RelationFailure(format!("(sigma{}..sigma{})^2 != 1", i + 1, j + 1)));
            }
        }
    }
    let sub = |gens: &[Matrix]| group.subgroup_from(gens, budget);
    let one = |a: &MatrixGroup, b: &MatrixGroup| intersection_order(a, b) == 1;
    let c1 = sub(&s[0..1])?;
    let c2 = sub(&s[1..2])?;
    let intersection_ok = if r == 2 {
        one(&c1, &c2)
    } else {
        let c3 = sub(&s[2..3])?;
        let g12 = sub(&s[0..2])?;
        let g23 = sub(&s[1..3])?;
        one(&c1, &c2) && one(&c2, &c3) && intersection_order(&g12, &g23) == c2.order()
    };
    let s1_inv = pow(&s[0], actual[0] - 1);
    let mut images = vec![s1_inv, group.mul(&group.mul(&s[0], &s[0]), &s[1])];
    images.extend(s[2..].iter().cloned());
    let kind = if extends_to_automorphism(group, &images) {
        RotationKind::DirectlyRegular
    } else {
        RotationKind::Chiral
    };
    let order = group.order() as u64;
    let f_vector = if r == 2 {
        // vertices ⟨σ₂⟩, edges ⟨σ₁σ₂⟩, faces ⟨σ₁⟩
        let e = group.mul(&s[0], &s[1]);
        [&s[1..2], core::slice::from_ref(&e), &s[0..1]]
            .iter()
            .map(|g| Ok(order / sub(g)?.order() as u64))
            .collect::<Result<Vec<_>, GroupError>>()?
    } else {
        let s12 = group.mul(&s[0], &s[1]);
        let s23 = group.mul(&s[1], &s[2]);
        let stabs: [Vec<Matrix>; 4] = [
            vec![s[1].clone(), s[2].clone()],
            vec![s12, s[2].clone()],
            vec![s[0].clone(), s23],
            vec![s[0].clone(), s[1].clone()],
        ];
        stabs
            .iter()
            .map(|g| Ok(order / sub(g)?.order() as u64))
            .collect::<Result<Vec<_>, GroupError>>()?
    };
    Ok(RotationVerdict { intersection_ok, kind, periods: actual, f_vector, flag_count: 2 * order })
}

/// Everything reported for one reduced group.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PolytopeReport {
    /// Group symbol, e.g. `[3,5,3]`.
    pub group_symbol: String,
    /// Modulus as given.
    pub modulus: String,
    /// Coefficient ring.
    pub ring: String,
    /// Element budget used.
    pub budget: usize,
    /// Order of the enumerated group (image group for quotients).
    pub order: u64,
    /// String C-group verdict.
    pub is_cgroup: bool,
    /// Periods of consecutive generator products.
    pub schlafli: Vec<u64>,
    /// Face counts.
    pub f_vector: Vec<u64>,
    /// Number of flags.
    pub flag_count: u64,
    /// Self-duality verdict (`None` = untested).
    pub self_dual: Option<bool>,
    /// How self-duality was decided.
    pub self_duality: Option<SelfDuality>,
    /// Identification.
    pub group_label: GroupLabel,
    /// Form invariants (odd characteristic).
    pub form: Option<FormAnalysis>,
    /// `ε` by the congruence/Legendre rules (golden-ratio diagrams).
    pub epsilon_legendre: Option<i8>,
    /// Whether every generator has square spinor class.
    pub roots_square: Option<bool>,
    /// Order of the full reduced group, when different from `order`.
    pub full_order: Option<u64>,
    /// Kernel of the passage to the quotient image.
    pub kernel_order: Option<u64>,
    /// Extra element periods, e.g. `r0r1r2`.
    pub periods: BTreeMap<String, u64>,
    /// Chiral or directly regular (rotation groups).
    pub kind: Option<RotationKind>,
    /// Facet parameters `(b, c)` for toroidal facets.
    pub facet: Option<(i64, i64)>,
    /// Order of the scalar subgroup factored out.
    pub scalar_group_order: Option<u64>,
    /// Result of the intersection check.
    pub diagnostics: Diagnostics,
    /// Free-form notes.
    pub notes: Vec<String>,
}

impl PolytopeReport {
    fn skeleton(symbol: &str, modulus: &str, ring: &RingSpec, budget: usize, order: u64) -> Self {
        Self {
            group_symbol: symbol.to_string(),
            modulus: modulus.to_string(),
            ring: ring.description(),
            budget,
            order,
            is_cgroup: false,
            schlafli: Vec::new(),
            f_vector: Vec::new(),
            flag_count: order,
            self_dual: None,
            self_duality: None,
            group_label: GroupLabel::unidentified(order),
            form: None,
            epsilon_legendre: None,
            roots_square: None,
            full_order: None,
            kernel_order: None,
            periods: BTreeMap::new(),
            kind: None,
            facet: None,
            scalar_group_order: None,
            diagnostics: Diagnostics::default(),
            notes: Vec::new(),
        }
    }
}

/// Builds a report for a group already known to be a string C-group.
pub fn polytope_report(
    group: &MatrixGroup,
    symbol: &str,
    modulus: &str,
    label: GroupLabel,
    budget: usize,
) -> Result<PolytopeReport, CGroupError> {
    let (ok, diagnostics) = verify_string_cgroup(group, budget)?;
    if !ok {
        let (i, j) = diagnostics.failed.unwrap_or_default();
        return Err(CGroupError::NotCGroup(i, j));
    }
    let mut rep = PolytopeReport::skeleton(symbol, modulus, group.ring(), budget, group.order() as u64);
    rep.is_cgroup = true;
    rep.diagnostics = diagnostics;
    rep.schlafli = schlafli(group);
    rep.f_vector = f_vector(group, budget)?;
    rep.group_label = label;
    Ok(rep)
}

/// The residue ring for a modulus given as text: a prime or element of
/// `Z[τ]` for golden-ratio diagrams, an integer `d ≥ 2` otherwise.
pub fn ring_for(d: &Diagram, modulus: &str) -> Result<(RingSpec, Option<QuadInt>), CGroupError> {
    if d.is_golden() {
        let pi = rings::parse_quad(modulus)?;
        Ok((RingSpec::tau_residue(pi)?, Some(pi)))
    } else {
        let m: u32 = modulus.trim().parse().map_err(|_| RingError::Parse(modulus.to_string()))?;
        Ok((RingSpec::for_modulus(m)?, None))
    }
}

/// Options for [`reflection_pipeline`].
#[derive(Clone, Copy, Debug)]
pub struct PipelineOptions {
    /// Element budget.
    pub budget: usize,
    /// Also run the brute-force intersection check when `|G|` is at most
    /// this.
    pub brute_force_limit: usize,
    /// Try self-duality.
    pub self_duality: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self { budget: groupkit::DEFAULT_BUDGET, brute_force_limit: 20_000, self_duality: true }
    }
}

fn is_353(d: &Diagram) -> bool {
    d.periods() == [Period::Finite(3), Period::Finite(5), Period::Finite(3)]
}

/// Reduces a diagram's reflection group, enumerates it, certifies the
/// C-group property and fills in a full report.
pub fn reflection_pipeline(d: &Diagram, modulus: &str, opts: PipelineOptions) -> Result<PolytopeReport, CGroupError> {
    let (ring, pi) = ring_for(d, modulus)?;
    let gens = coxeter::reduce_generators(&coxeter::reflection_generators(d), &ring)?;
    let group = MatrixGroup::closure(&gens.generators, &ring, opts.budget)?;
    let mut rep = PolytopeReport::skeleton(&d.symbol(), modulus, &ring, opts.budget, group.order() as u64);
    if gens.collapsed {
        rep.notes.push(String::from("a generator collapsed to the identity"));
    }
    let (ok, diag) = match verify_string_cgroup(&group, opts.budget) {
        Err(CGroupError::NotInvolution(k)) => {
            rep.notes.push(format!("generator {k} is trivial or not an involution"));
            (false, Diagnostics::default())
        }
        other => other?,
    };
    if diag.checked > 0 && group.order() <= opts.brute_force_limit {
        let (brute, _) = verify_string_cgroup_brute(&group, opts.budget)?;
        if brute != ok {
            rep.notes.push(format!("inductive check {ok} disagrees with brute force {brute}"));
        }
    }
    rep.is_cgroup = ok;
    rep.diagnostics = diag;
    rep.schlafli = schlafli(&group);
    rep.f_vector = f_vector(&group, opts.budget)?;
    // form data
    let b2 = coxeter::reduce_matrices(&[coxeter::cartan_data(d).b2], &ring)?.remove(0);
    let odd_field = ring.characteristic() != 2 && ring.is_field();
    if odd_field {
        let fa = ortho::analyze_form(&b2, &ring)?;
        let n = d.rank();
        let roots: Result<Vec<SquareClass>, _> = (0..n)
            .map(|i| {
                let mut e = vec![ring.zero(); n];
                e[i] = ring.one();
                ortho::spinor_class(&e, &b2, &ring)
            })
            .collect();
        rep.roots_square = roots.ok().map(|v| v.iter().all(|&c| c == SquareClass::Square));
        rep.form = Some(fa);
    }
    let field = ring.is_field();
    if field {
        let ctx = IdentifyContext {
            n: d.rank(),
            q: ring.order(),
            characteristic: ring.characteristic(),
            form: rep.form.as_ref(),
            roots_square: rep.roots_square,
        };
        rep.group_label = ortho::identify_group(group.order() as u64, &ctx);
    }
    if let (Some(pi), true) = (pi, is_353(d)) {
        rep.epsilon_legendre = ortho::epsilon_353(pi).ok();
    }
    if opts.self_duality && ok {
        let explicit = if is_353(d) { duality_map_353().reduce(|z| ring.reduce_quad(z)) } else { None };
        let sd = self_dual_check(&group, explicit.as_ref());
        rep.self_dual = sd.verdict();
        rep.self_duality = Some(sd);
    }
    Ok(rep)
}

/// The singular-prime pipeline: pass to the action on `V / rad(V)` modulo
/// scalars, certify the image and report kernel and periods.
pub fn hemi_quotient_pipeline(d: &Diagram, modulus: &str, budget: usize) -> Result<PolytopeReport, CGroupError> {
    let (ring, _) = ring_for(d, modulus)?;
    let b2 = coxeter::reduce_matrices(&[coxeter::cartan_data(d).b2], &ring)?.remove(0);
    let fa = ortho::analyze_form(&b2, &ring)?;
    if fa.radical.len() != 1 {
        return Err(CGroupError::NotCorankOne(fa.radical.len()));
    }
    let gens = coxeter::reduce_matrices(&coxeter::reflection_generators(d), &ring)?;
    let quo = groupkit::quotient_by_radical_action(&gens, &ring, &fa.radical_vectors(&ring), budget)?;
    let image = &quo.image;
    let (ok, diag) = verify_string_cgroup(image, budget)?;
    let mut rep = PolytopeReport::skeleton(&d.symbol(), modulus, &ring, budget, image.order() as u64);
    rep.is_cgroup = ok;
    rep.diagnostics = diag;
    rep.schlafli = schlafli(image);
    rep.f_vector = f_vector(image, budget)?;
    rep.full_order = quo.full_order.map(|o| o as u64);
    rep.kernel_order = quo.kernel_order.map(|o| o as u64);
    rep.scalar_group_order = image.scalars().map(|s| s.len() as u64);
    if quo.full_order.is_none() {
        rep.notes.push(format!("full closure exceeded the budget of {budget}; kernel order unknown"));
    }
    let g = image.generators();
    let n = g.len();
    let prod = |idx: &[usize]| idx.iter().skip(1).fold(g[idx[0]].clone(), |acc, &i| image.mul(&acc, &g[i]));
    if n >= 3 {
        let first: Vec<usize> = (0..n - 1).collect();
        let last: Vec<usize> = (1..n).collect();
        let name = |ix: &[usize]| ix.iter().map(|i| format!("r{i}")).collect::<String>();
        rep.periods.insert(name(&first), image.element_order(&prod(&first)));
        rep.periods.insert(name(&last), image.element_order(&prod(&last)));
    }
    let q = ring.order();
    rep.group_label = ortho::identify_psl2(image.order() as u64, &[q, q * q]);
    rep.form = Some(fa);
    if ok {
        let sd = self_dual_check(image, None);
        rep.self_dual = sd.verdict();
        rep.self_duality = Some(sd);
    }
    Ok(rep)
}

/// Whether the ring is a residue ring of `Z[i]` by a self-conjugate ideal.
pub fn conjugation_available(ring: &RingSpec) -> bool {
    matches!(ring.kind(), RingKind::GaussResidue(j) if j.is_self_conjugate())
}
