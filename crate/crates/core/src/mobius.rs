//! Möbius rotation groups over the Gaussian integers: `[4,4,3]⁺` reduced
//! modulo ideals of `Z[i]`, with toroidal facet parameters and chirality.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::cgroup::{self, CGroupError, PolytopeReport, RotationKind};
use crate::groupkit::{self, MatrixGroup};
use crate::matrix::{DomainMatrix, Matrix};
use crate::ortho::{self, GroupLabel, LabelKind};
use crate::rings::arith::{factorize, isqrt};
use crate::rings::{GaussInt, Ideal, RingError, RingSpec};

/// Rotation generators of a Möbius group and the ideal they are reduced by.
#[derive(Clone, Debug)]
pub struct MobiusSpec {
    /// Type symbol, `[4,4,3]` for the built-in data.
    pub type_symbol: String,
    /// Reduction ideal.
    pub ideal: Ideal,
    /// `Z[i]/J`.
    pub ring: RingSpec,
    /// Periods of `σ₁, σ₂, σ₃`.
    pub periods: Vec<u64>,
    /// The reduced generators.
    pub generators: Vec<Matrix>,
}

impl MobiusSpec {
    /// The built-in `[4,4,3]` data reduced modulo `ideal`.
    pub fn new_443(ideal: Ideal) -> Result<Self, CGroupError> {
        Self::with_generators("[4,4,3]", ideal, &mobius_generators_443(), &[4, 4, 3])
    }

    /// Arbitrary rotation generators over `Z[i]`, for types whose matrices
    /// are supplied externally.
    pub fn with_generators(
        symbol: &str,
        ideal: Ideal,
        gens: &[DomainMatrix<GaussInt>],
        periods: &[u64],
    ) -> Result<Self, CGroupError> {
        let ring = RingSpec::gauss_residue(ideal)?;
        if ring.order() < 3 {
            return Err(RingError::BadIdeal(ideal).into());
        }
        let generators = gens
            .iter()
            .map(|g| g.reduce(|z| ring.reduce_gauss(z)))
            .collect::<Option<Vec<_>>>()
            .ok_or(RingError::BadIdeal(ideal))?;
        Ok(Self { type_symbol: symbol.to_string(), ideal, ring, periods: periods.to_vec(), generators })
    }
}

/// `s₁ = [[−i,0],[0,1]]`, `s₂ = [[−i,i],[0,1]]`, `s₃ = [[1,−1],[1,0]]`,
/// the matrices of `σ₁ = −iz`, `σ₂ = −iz + i`, `σ₃ = 1 − 1/z`.
pub fn mobius_generators_443() -> [DomainMatrix<GaussInt>; 3] {
    let g = GaussInt::new;
    let (z, one, mi, i) = (g(0, 0), g(1, 0), g(0, -1), g(0, 1));
    [
        DomainMatrix::from_rows(vec![vec![mi, z], vec![z, one]]),
        DomainMatrix::from_rows(vec![vec![mi, i], vec![z, one]]),
        DomainMatrix::from_rows(vec![vec![one, -one], vec![one, z]]),
    ]
}

/// `[[1, −(b+ci)], [0, 1]]`, the image of `(σ₁⁻¹σ₂)^b (σ₁σ₂⁻¹)^c`.
pub fn toroidal_relation_matrix(b: i64, c: i64) -> DomainMatrix<GaussInt> {
    let g = GaussInt::new;
    DomainMatrix::from_rows(vec![vec![g(1, 0), -g(b, c)], vec![g(0, 0), g(1, 0)]])
}

/// Facet suffix `(b, c)` of `{4,4}_(b,c)`: the nonzero `b + ci ∈ J` of least
/// norm, taken in the quadrant `b > 0, c ≥ 0` (one representative per
/// class of associates), ties going to the larger `b`.
pub fn facet_parameters(ideal: Ideal) -> (i64, i64) {
    let m = ideal.modulus() as i64;
    let r = isqrt(m as u64) as i64;
    let mut best: Option<(i64, i64)> = None;
    for b in 1..=r.max(1) {
        for c in 0..=r {
            if !ideal.contains(GaussInt::new(b, c)) {
                continue;
            }
            let better = match best {
                None => true,
                Some((bb, bc)) => {
                    let (n, bn) = (b * b + c * c, bb * bb + bc * bc);
                    n < bn || (n == bn && b > bb)
                }
            };
            if better {
                best = Some((b, c));
            }
        }
    }
    best.unwrap_or((m, 0))
}

fn prime_power(q: u64) -> bool {
    factorize(q).len() == 1
}

/// Order-matches a projective rotation group against `PSL₂(q)` and
/// `PSL₂(q).2` for `q ∈ {m², m}` (prime powers only).
pub fn mobius_label(order: u64, ideal: Ideal) -> GroupLabel {
    let m = ideal.modulus();
    let qs: Vec<u64> = [m * m, m].into_iter().filter(|&q| prime_power(q)).collect();
    let mut label = ortho::identify_psl2(order, &qs);
    if label.kind == LabelKind::Unidentified {
        for &q in &qs {
            if q > 3 && 2 * ortho::psl2_order(q) == order {
                label.candidates.push(format!("PSL2({q}).2"));
                if label.kind == LabelKind::Unidentified {
                    label.kind = LabelKind::LinearFractional;
                    label.name = format!("PSL2({q}).2");
                    label.q = Some(q);
                }
            }
        }
    }
    label
}

/// Whether `i ↦ −i` maps `σ₁, σ₂, σ₃` to `σ₁⁻¹, σ₁²σ₂, σ₃` in `group`
/// (only meaningful for self-conjugate ideals).
pub fn conjugation_realizes_rho(group: &MatrixGroup) -> bool {
    let ring = group.ring();
    if !cgroup::conjugation_available(ring) {
        return false;
    }
    let s = group.generators();
    let conj: Vec<Matrix> = s.iter().map(|m| m.map(|e| ring.conjugate(e))).collect();
    let s1_inv = groupkit::matrix_order(&s[0], ring, 1 << 20);
    let want = [
        s[0].pow(s1_inv - 1, ring),
        group.mul(&group.mul(&s[0], &s[0]), &s[1]),
        s[2].clone(),
    ];
    conj.iter().zip(&want).all(|(a, b)| group.encode(a) == group.encode(b))
}

/// Reduces, projectivizes, checks the rotation relations and intersection
/// condition, and reports chirality and the toroidal facet type.
pub fn build_mobius_polytope(ideal: Ideal, budget: usize) -> Result<PolytopeReport, CGroupError> {
    build_from_spec(&MobiusSpec::new_443(ideal)?, budget)
}

/// [`build_mobius_polytope`] for arbitrary injected generators.
pub fn build_from_spec(spec: &MobiusSpec, budget: usize) -> Result<PolytopeReport, CGroupError> {
    let group = groupkit::projectivize(&spec.generators, &spec.ring, budget)?;
    let verdict = cgroup::verify_rotation_group(&group, &spec.periods, budget)?;
    let order = group.order() as u64;
    let facet = facet_parameters(spec.ideal);
    let mut rep = PolytopeReport {
        group_symbol: format!("{}+", spec.type_symbol),
        modulus: spec.ideal.to_string(),
        ring: spec.ring.description(),
        budget,
        order,
        is_cgroup: false,
        schlafli: verdict.periods.clone(),
        f_vector: verdict.f_vector.clone(),
        flag_count: verdict.flag_count,
        self_dual: None,
        self_duality: None,
        group_label: mobius_label(order, spec.ideal),
        form: None,
        epsilon_legendre: None,
        roots_square: None,
        full_order: None,
        kernel_order: None,
        periods: Default::default(),
        kind: Some(verdict.kind),
        facet: Some(facet),
        scalar_group_order: group.scalars().map(|s| s.len() as u64),
        diagnostics: Default::default(),
        notes: Vec::new(),
    };
    if !verdict.intersection_ok {
        rep.notes.push(String::from("rotation-group intersection condition fails"));
    }
    rep.notes.push(format!("mirror facet pair ({}, {})", facet.1, facet.0));
    if verdict.kind == RotationKind::DirectlyRegular && conjugation_realizes_rho(&group) {
        rep.notes.push(String::from("rho realized by i -> -i"));
    }
    Ok(rep)
}
