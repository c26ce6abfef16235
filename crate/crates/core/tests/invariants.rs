//! Cross-module invariants on desk-scale instances.

use modpoly_core::cgroup::{self, f_vector, reflection_pipeline, PipelineOptions};
use modpoly_core::coxeter::{self, parse_symbol};
use modpoly_core::groupkit::{self, intersection_order, MatrixGroup, Side, DEFAULT_BUDGET};
use modpoly_core::ortho::{
    self, analyze_form, identify_group, order_formula, predict_intersection, IdentifyContext, IntersectionPrediction,
    IntersectionShape, LabelKind, SquareClass,
};
use modpoly_core::{Matrix, QuadInt, RingSpec};

struct Instance {
    group: MatrixGroup,
    b2: Matrix,
    ring: RingSpec,
}

fn instance(sym: &str, modulus: &str) -> Instance {
    let d = parse_symbol(sym).unwrap();
    let (ring, _) = cgroup::ring_for(&d, modulus).unwrap();
    let gens = coxeter::reduce_matrices(&coxeter::reflection_generators(&d), &ring).unwrap();
    let b2 = coxeter::reduce_matrices(&[coxeter::cartan_data(&d).b2], &ring).unwrap().remove(0);
    let group = MatrixGroup::closure(&gens, &ring, DEFAULT_BUDGET).unwrap();
    Instance { group, b2, ring }
}

const ODD: [(&str, &str); 17] = [
    ("[3,5,3]", "sqrt5"),
    ("[3,5,3]", "3"),
    ("[3,oo]", "5"),
    ("[3,oo]", "7"),
    ("[3,3,oo]", "5"),
    ("[6,3,6]", "3"),
    ("[6,3,6]", "5"),
    ("[4,3,4]", "5"),
    ("[3,4,3]", "5"),
    ("[3,4,3]", "7"),
    ("[3,3,oo]", "7"),
    ("[4,3,oo]", "5"),
    ("[3,6,3]", "5"),
    ("[3,4,4]", "5"),
    ("[3,4,4]", "7"),
    ("[4,4,4]", "5"),
    ("[3,4,6]", "5"),
];

/// `None` when some root is isotropic and has no spinor class.
fn square_roots(inst: &Instance, idx: &[usize]) -> Option<bool> {
    let n = inst.b2.dim();
    let mut all = true;
    for &i in idx {
        let mut e = vec![inst.ring.zero(); n];
        e[i] = inst.ring.one();
        all &= ortho::spinor_class(&e, &inst.b2, &inst.ring).ok()? == SquareClass::Square;
    }
    Some(all)
}

/// The label of `⟨r_i : i ∈ idx⟩` acting on the span of its roots.
fn sub_label(inst: &Instance, idx: &[usize], order: usize) -> (LabelKind, bool) {
    let form = inst.b2.principal_submatrix(idx);
    let fa = analyze_form(&form, &inst.ring).unwrap();
    let ctx = IdentifyContext {
        n: idx.len(),
        q: inst.ring.order(),
        characteristic: inst.ring.characteristic(),
        form: Some(&fa),
        roots_square: square_roots(inst, idx),
    };
    (identify_group(order as u64, &ctx).kind, fa.is_singular())
}

#[test]
fn intersection_predictor_matches_enumeration() {
    let mut compared = 0;
    for (sym, m) in ODD {
        // hypotheses the shape cannot express: crystallographic, generic,
        // a square label among the middle nodes
        let d = parse_symbol(sym).unwrap();
        if d.is_golden() || !coxeter::is_generic(&d, m.parse().unwrap()).unwrap() {
            continue;
        }
        let labels = d.labels();
        let square = |l: &QuadInt| {
            let r = (l.a as f64).sqrt().round() as i64;
            l.b == 0 && r * r == l.a
        };
        if !labels[1..labels.len() - 1].iter().any(square) {
            continue;
        }
        let inst = instance(sym, m);
        let n = inst.b2.dim();
        let first: Vec<usize> = (1..n).collect();
        let last: Vec<usize> = (0..n - 1).collect();
        let mid: Vec<usize> = (1..n - 1).collect();
        let g0 = inst.group.subgroup(&first, DEFAULT_BUDGET).unwrap();
        let gl = inst.group.subgroup(&last, DEFAULT_BUDGET).unwrap();
        let gm = inst.group.subgroup(&mid, DEFAULT_BUDGET).unwrap();
        let (k0, s0) = sub_label(&inst, &first, g0.order());
        let (kl, sl) = sub_label(&inst, &last, gl.order());
        let mid_form = analyze_form(&inst.b2.principal_submatrix(&mid), &inst.ring).unwrap();
        let q = inst.ring.order();
        let mid_eps = mid_form.epsilon.value().unwrap_or(0);
        let (kg, _) = sub_label(&inst, &(0..n).collect::<Vec<_>>(), inst.group.order());
        let shape = IntersectionShape {
            v_singular: analyze_form(&inst.b2, &inst.ring).unwrap().is_singular(),
            v0_singular: s0,
            vlast_singular: sl,
            v0last_singular: mid_form.is_singular(),
            g0: k0,
            glast: kl,
            g0last_is_o1: order_formula(LabelKind::O1, n - 2, q, mid_eps).ok() == Some(gm.order() as u64),
            g_is_o1: kg == LabelKind::O1,
        };
        let Ok(pred) = predict_intersection(&shape) else { continue };
        let want = match pred {
            IntersectionPrediction::Parabolic => Some(gm.order() as u64),
            IntersectionPrediction::O => order_formula(LabelKind::O, n - 2, q, mid_eps).ok(),
            IntersectionPrediction::O1 => order_formula(LabelKind::O1, n - 2, q, mid_eps).ok(),
            IntersectionPrediction::OHat => order_formula(LabelKind::OHat, n - 2, q, 0).ok(),
            IntersectionPrediction::OHat1 => order_formula(LabelKind::OHat1, n - 2, q, 0).ok(),
        };
        let Some(want) = want else { continue };
        assert_eq!(intersection_order(&g0, &gl) as u64, want, "{sym} mod {m}: {pred:?} from {shape:?}");
        compared += 1;
    }
    assert!(compared >= 4, "only {compared} instances met the hypotheses");
}

#[test]
fn spinor_parity_is_a_homomorphism() {
    // label each element by the parity of nonsquare-class generators in any
    // word for it; well-definedness on the Cayley graph means a
    // homomorphism G → Z/2
    let mut checked = 0;
    for (sym, m) in ODD {
        let inst = instance(sym, m);
        let g = &inst.group;
        let Some(odd) = (0..g.generators().len()).map(|i| square_roots(&inst, &[i]).map(|s| !s)).collect::<Option<Vec<bool>>>()
        else {
            continue;
        };
        let mut parity = vec![None; g.order()];
        parity[0] = Some(false);
        for k in 0..g.order() {
            let pk = parity[k].unwrap();
            let x = g.element(k);
            for (s, &o) in g.generators().iter().zip(&odd) {
                let h = g.index_of(&g.mul(&x, s)).unwrap();
                let v = pk ^ o;
                assert!(*parity[h].get_or_insert(v) == v, "{sym} mod {m}: spinor parity not well defined");
            }
        }
        let index = if odd.iter().any(|&o| o) { 2 } else { 1 };
        let kernel = parity.iter().filter(|p| **p == Some(false)).count();
        assert_eq!(kernel * index, g.order(), "{sym} mod {m}");
        checked += 1;
    }
    assert!(checked >= 8, "only {checked} instances had anisotropic roots");
}

#[test]
fn orthogonal_formulas_halve() {
    for q in [3u64, 5, 7, 9, 11, 25, 49, 121] {
        for eps in [1i8, -1] {
            let o = order_formula(LabelKind::O, 4, q, eps).unwrap();
            assert_eq!(o, 2 * order_formula(LabelKind::O1, 4, q, eps).unwrap());
        }
        assert_eq!(order_formula(LabelKind::O, 3, q, 0).unwrap(), 2 * order_formula(LabelKind::O1, 3, q, 0).unwrap());
    }
}

#[test]
fn report_identities() {
    for (sym, m) in ODD.iter().chain(&[("[3,5,3]", "2"), ("[3,3,oo]", "3")]) {
        let d = parse_symbol(sym).unwrap();
        let r = reflection_pipeline(&d, m, PipelineOptions::default()).unwrap();
        if r.self_dual == Some(true) {
            assert!(r.f_vector.iter().eq(r.f_vector.iter().rev()), "{sym} mod {m}");
            assert!(r.schlafli.iter().eq(r.schlafli.iter().rev()), "{sym} mod {m}");
        }
        let inst = instance(sym, m);
        let n = d.rank();
        let f = f_vector(&inst.group, DEFAULT_BUDGET).unwrap();
        assert_eq!(f, r.f_vector);
        for (i, fi) in f.iter().enumerate() {
            let idx: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            let gi = inst.group.subgroup(&idx, DEFAULT_BUDGET).unwrap();
            assert_eq!(fi * gi.order() as u64, r.order, "{sym} mod {m}");
        }
        // every enumerated element preserves the form
        if inst.ring.characteristic() != 2 || inst.group.order() <= 20_000 {
            assert!(inst.group.elements().all(|x| x.preserves_form(&inst.b2, &inst.ring)), "{sym} mod {m}");
        }
    }
}

#[test]
fn orbits_divide_the_order() {
    for (sym, m) in ODD {
        let inst = instance(sym, m);
        let n = inst.b2.dim();
        for i in 0..n {
            let mut e = vec![inst.ring.zero(); n];
            e[i] = inst.ring.one();
            for side in [Side::Left, Side::Right] {
                let orb = groupkit::orbit(&e, inst.group.generators(), &inst.ring, side);
                assert_eq!(inst.group.order() % orb.len(), 0, "{sym} mod {m}, root {i}");
            }
        }
    }
}

#[test]
fn intersect_is_idempotent_and_commutative() {
    let inst = instance("[3,3,oo]", "5");
    let g = &inst.group;
    let a = g.subgroup(&[0, 1, 2], DEFAULT_BUDGET).unwrap();
    let b = g.subgroup(&[1, 2, 3], DEFAULT_BUDGET).unwrap();
    let ab = groupkit::intersect(&a, &b).unwrap();
    let ba = groupkit::intersect(&b, &a).unwrap();
    assert_eq!(ab.sorted_encodings(), ba.sorted_encodings());
    assert_eq!(groupkit::intersect(&a, &a).unwrap().sorted_encodings(), a.sorted_encodings());
    assert!(ab.elements().all(|x| a.contains(&x) && b.contains(&x)));
}
