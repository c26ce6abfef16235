//! End-to-end acceptance checks. Runs without the libtest harness so each
//! criterion prints exactly one PASS/FAIL line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use modpoly_core::cgroup::{
    self, hemi_quotient_pipeline, reflection_pipeline, verify_string_cgroup, verify_string_cgroup_brute,
    PipelineOptions, RotationKind, SelfDuality,
};
use modpoly_core::coxeter::{self, parse_symbol};
use modpoly_core::groupkit::{intersection_order, MatrixGroup, DEFAULT_BUDGET};
use modpoly_core::mobius::{self, build_mobius_polytope, facet_parameters, toroidal_relation_matrix};
use modpoly_core::ortho::{self, LabelKind};
use modpoly_core::rings::{self, split_prime_over, QuadInt, RingSpec};
use modpoly_core::{DomainMatrix, GaussInt, Ideal, PolytopeReport};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn opts(budget: usize) -> PipelineOptions {
    PipelineOptions { budget, ..PipelineOptions::default() }
}

fn run(sym: &str, modulus: &str, budget: usize) -> Result<PolytopeReport, String> {
    let d = parse_symbol(sym).map_err(|e| e.to_string())?;
    reflection_pipeline(&d, modulus, opts(budget)).map_err(|e| format!("{sym} mod {modulus}: {e}"))
}

fn group(sym: &str, modulus: &str) -> MatrixGroup {
    let d = parse_symbol(sym).unwrap();
    let (ring, _) = cgroup::ring_for(&d, modulus).unwrap();
    let gens = coxeter::reduce_matrices(&coxeter::reflection_generators(&d), &ring).unwrap();
    MatrixGroup::closure(&gens, &ring, DEFAULT_BUDGET).unwrap()
}

fn c1_mod2() -> Outcome {
    let r = run("[3,5,3]", "2", DEFAULT_BUDGET)?;
    ensure!(r.order == 8160, "order {}", r.order);
    ensure!(r.group_label.name == "O(4,4,-1)", "label {}", r.group_label);
    ensure!(r.is_cgroup, "not a C-group: {:?}", r.diagnostics);
    ensure!(r.f_vector[0] == 68 && r.f_vector[3] == 68, "f-vector {:?}", r.f_vector);
    Ok(format!("order 8160, {}, f = {:?}", r.group_label, r.f_vector))
}

fn c2_sqrt5() -> Outcome {
    let r = run("[3,5,3]", "sqrt5", DEFAULT_BUDGET)?;
    ensure!(r.order == 15600, "order {}", r.order);
    let form = r.form.as_ref().and_then(|f| f.epsilon.value());
    ensure!(form == Some(-1), "form epsilon {form:?}");
    ensure!(r.epsilon_legendre == Some(-1), "legendre epsilon {:?}", r.epsilon_legendre);
    Ok(format!("order 15600, eps form {form:?} legendre {:?}", r.epsilon_legendre))
}

fn c3_mod3() -> Outcome {
    let r = run("[3,5,3]", "3", DEFAULT_BUDGET)?;
    let q: u64 = 9;
    let formula = q * q * (q * q - 1) * (q * q - 1);
    ensure!(r.order == 518_400 && r.order == formula, "order {}", r.order);
    ensure!(ortho::epsilon_353_table(3) == Some(1), "mod-55 table");
    ensure!(r.form.as_ref().and_then(|f| f.epsilon.value()) == Some(1), "form epsilon");
    ensure!(r.is_cgroup, "not a C-group: {:?}", r.diagnostics);
    Ok(format!("order {}, {}, eps +1", r.order, r.group_label))
}

fn c4_delta_conj(r: &PolytopeReport) -> Outcome {
    ensure!(r.order == 1_771_440, "order {}", r.order);
    ensure!(r.group_label.name == "O1(4,11,-1)", "label {}", r.group_label);
    Ok(format!("order 1771440, {}", r.group_label))
}

fn c5_delta() -> Outcome {
    let d = parse_symbol("[3,5,3]").unwrap();
    let r = hemi_quotient_pipeline(&d, "delta", DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let form = r.form.as_ref().unwrap();
    ensure!(form.radical == vec![vec![7, 3, 2, 1]], "radical {:?}", form.radical);
    ensure!(r.order == 660, "quotient {}", r.order);
    ensure!(r.kernel_order == Some(2662), "kernel {:?}", r.kernel_order);
    let full = ortho::order_formula(LabelKind::OHat1, 4, 11, -1).map_err(|e| e.to_string())?;
    ensure!(r.full_order == Some(1_756_920) && full == 1_756_920 && 2662 * 660 == full, "full {:?}", r.full_order);
    ensure!(r.is_cgroup, "quotient not a C-group");
    ensure!(r.f_vector == [11, 55, 55, 11], "f-vector {:?}", r.f_vector);
    ensure!(r.periods.values().all(|&p| p == 5) && r.periods.len() == 2, "periods {:?}", r.periods);
    Ok(format!("660 x 2662 = 1756920, f = {:?}, {}", r.f_vector, r.group_label))
}

fn c6_lambda() -> Outcome {
    let d = parse_symbol("[5,3,5]").unwrap();
    let r = hemi_quotient_pipeline(&d, "lambda", 1_000_000).map_err(|e| e.to_string())?;
    ensure!(r.order == 3420, "quotient {}", r.order);
    ensure!(r.is_cgroup, "not a C-group");
    ensure!(r.f_vector == [57, 171, 171, 57], "f-vector {:?}", r.f_vector);
    ensure!(r.schlafli == [5, 3, 5], "type {:?}", r.schlafli);
    ensure!(r.periods.values().all(|&p| p == 5), "periods {:?}", r.periods);
    ensure!(r.full_order.is_none(), "full closure unexpectedly fit the budget");
    Ok(format!("3420, f = {:?}, {}, full closure over budget", r.f_vector, r.group_label))
}

fn c7_epsilon_sweep() -> Outcome {
    let (mut inert, mut split) = (0, 0);
    for p in (3..200u64).filter(|&p| rings::arith::is_prime(p)) {
        if p % 5 == 2 || p % 5 == 3 {
            let e = ortho::epsilon_353(QuadInt::from_int(p as i64)).map_err(|e| e.to_string())?;
            ensure!(Some(e) == ortho::epsilon_353_table(p), "inert {p}: {e}");
            inert += 1;
        } else if p != 5 && p != 11 {
            let pi = split_prime_over(p).ok_or(format!("no split prime over {p}"))?;
            let a = ortho::epsilon_353(pi).map_err(|e| e.to_string())?;
            let b = ortho::epsilon_353(pi.conj()).map_err(|e| e.to_string())?;
            let l = rings::legendre(p as i64, 11).map_err(|e| e.to_string())?;
            ensure!(a * b == l, "split {p}: {a}*{b} vs {l}");
            split += 1;
        }
    }
    // p = 2 is inert; its table entry is the ε of O(4,4,−1)
    ensure!(ortho::epsilon_353_table(2) == Some(-1), "p = 2");
    Ok(format!("{} inert (incl. 2), {split} split primes", inert + 1))
}

fn c8_self_dual(delta_conj: &PolytopeReport) -> Outcome {
    let mut seen = Vec::new();
    for m in ["2", "sqrt5"] {
        let r = run("[3,5,3]", m, DEFAULT_BUDGET)?;
        seen.push((m.to_string(), r.self_duality));
    }
    seen.push(("delta'".into(), delta_conj.self_duality));
    for (m, sd) in &seen {
        ensure!(*sd == Some(SelfDuality::ExplicitMap), "mod {m}: {sd:?}");
    }
    Ok("explicit map g r_i g = r_(3-i) for 2, sqrt5, delta'".into())
}

fn c9_spot_checks() -> Outcome {
    let r = run("[3,oo]", "5", DEFAULT_BUDGET)?;
    ensure!(r.order == 120 && r.schlafli == [3, 5] && r.f_vector == [12, 30, 20], "[3,oo] mod 5: {} {:?} {:?}", r.order, r.schlafli, r.f_vector);
    let r = run("[3,oo]", "7", DEFAULT_BUDGET)?;
    ensure!(r.order == 336 && r.schlafli == [3, 7], "[3,oo] mod 7: {} {:?}", r.order, r.schlafli);
    let r = run("[3,3,oo]", "3", DEFAULT_BUDGET)?;
    ensure!(r.order == 120 && r.group_label.candidates.iter().any(|c| c == "S5"), "[3,3,oo] mod 3: {} {:?}", r.order, r.group_label);
    let r = run("[3,3,oo]", "5", DEFAULT_BUDGET)?;
    ensure!(r.order == 14400 && r.f_vector == [120, 720, 1200, 600], "[3,3,oo] mod 5: {} {:?}", r.order, r.f_vector);
    let r = run("[6,3,6]", "3", DEFAULT_BUDGET)?;
    ensure!(r.is_cgroup, "[6,3,6] mod 3 not a C-group: {:?}", r.diagnostics);
    let r = run("[6,3,6]", "5", DEFAULT_BUDGET)?;
    ensure!(!r.is_cgroup, "[6,3,6] mod 5 is a C-group");
    Ok(format!("[6,3,6] mod 5 fails at {:?}", r.diagnostics.failed))
}

fn c10_mobius() -> Outcome {
    let g = GaussInt::new;
    let expected = [
        [[g(0, -1), g(0, 0)], [g(0, 0), g(1, 0)]],
        [[g(0, -1), g(0, 1)], [g(0, 0), g(1, 0)]],
        [[g(1, 0), g(-1, 0)], [g(1, 0), g(0, 0)]],
    ];
    for (s, e) in mobius::mobius_generators_443().iter().zip(expected) {
        ensure!(*s == DomainMatrix::from_rows(e.iter().map(|r| r.to_vec()).collect()), "generator {s:?}");
    }
    for (b, c) in [(1i64, 0i64), (0, 1), (3, 0), (1, 8), (4, 7)] {
        let t = toroidal_relation_matrix(b, c);
        ensure!(t == DomainMatrix::from_rows(vec![vec![g(1, 0), g(-b, -c)], vec![g(0, 0), g(1, 0)]]), "toroidal ({b},{c})");
    }
    let r = build_mobius_polytope(Ideal::Full(3), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure!(r.order == 360 && r.kind == Some(RotationKind::DirectlyRegular) && r.facet == Some((3, 0)), "Full(3): {} {:?} {:?}", r.order, r.kind, r.facet);
    ensure!(facet_parameters(Ideal::Principal(1, 8)) == (1, 8), "Principal(1,8)");
    ensure!(facet_parameters(Ideal::Principal(4, 7)) == (4, 7), "Principal(4,7)");
    let r = build_mobius_polytope(Ideal::Principal(1, 4), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure!(r.order == 2448 && r.kind == Some(RotationKind::Chiral), "Principal(1,4): {} {:?}", r.order, r.kind);
    Ok(format!("Full(3) 360 regular, Principal(1,4) 2448 chiral ({})", r.group_label))
}

fn c11_properties() -> Outcome {
    let instances = [
        ("[3,5,3]", "2"),
        ("[3,5,3]", "sqrt5"),
        ("[3,oo]", "5"),
        ("[3,oo]", "7"),
        ("[3,3,oo]", "3"),
        ("[3,3,oo]", "5"),
        ("[6,3,6]", "3"),
        ("[6,3,6]", "5"),
    ];
    let mut checked = 0;
    for (sym, m) in instances {
        let d = parse_symbol(sym).unwrap();
        let g = group(sym, m);
        let ring = g.ring().clone();
        let n = g.generators().len();
        // Lagrange over every standard subgroup and pairwise intersection
        let subs: Vec<MatrixGroup> = (1u32..1 << n)
            .map(|mask| g.subgroup(&(0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>(), DEFAULT_BUDGET).unwrap())
            .collect();
        for a in &subs {
            ensure!(g.order().is_multiple_of(a.order()), "{sym} mod {m}: Lagrange");
            for b in &subs {
                ensure!(a.order() % intersection_order(a, b) == 0, "{sym} mod {m}: Lagrange on intersection");
            }
        }
        // form preservation by every element
        let b2 = coxeter::reduce_matrices(&[coxeter::cartan_data(&d).b2], &ring).unwrap().remove(0);
        if g.order() <= 20_000 {
            ensure!(g.elements().all(|x| x.preserves_form(&b2, &ring)), "{sym} mod {m}: form");
        }
        // inductive vs brute force
        if g.order() <= 20_000 {
            let a = verify_string_cgroup(&g, DEFAULT_BUDGET).unwrap().0;
            let b = verify_string_cgroup_brute(&g, DEFAULT_BUDGET).unwrap().0;
            ensure!(a == b, "{sym} mod {m}: inductive {a} vs brute {b}");
        }
        // determinism under generator permutation
        let mut rev = g.generators().to_vec();
        rev.reverse();
        let h = MatrixGroup::closure(&rev, &ring, DEFAULT_BUDGET).unwrap();
        ensure!(h.sorted_encodings() == g.sorted_encodings(), "{sym} mod {m}: permutation");
        checked += 1;
    }
    // Legendre multiplicativity and Euler's criterion
    for p in [3u64, 7, 11, 13, 19, 29, 31, 97] {
        for a in 1..p as i64 {
            let la = rings::legendre(a, p).unwrap();
            let euler = rings::arith::mod_pow(a as u64, (p - 1) / 2, p);
            ensure!((la == 1 && euler == 1) || (la == -1 && euler == p - 1), "Euler {a} mod {p}");
            for b in 1..p as i64 {
                ensure!(rings::legendre(a * b, p).unwrap() == la * rings::legendre(b, p).unwrap(), "multiplicativity");
            }
        }
    }
    for pi in [QuadInt::DELTA, QuadInt::DELTA_CONJ, QuadInt::LAMBDA, QuadInt::from_int(3), QuadInt::from_int(7)] {
        let ring = RingSpec::tau_residue(pi).unwrap();
        let half = (ring.order() - 1) / 2;
        for a in -6..6 {
            for b in -6..6 {
                let z = QuadInt::new(a, b);
                let e = ring.reduce_quad(z).unwrap();
                if e == ring.zero() {
                    continue;
                }
                let l = rings::legendre_tau(z, pi).unwrap();
                let euler = ring.pow(e, half);
                ensure!(euler == if l == 1 { ring.one() } else { ring.from_int(-1) }, "Euler over Z[tau] at {pi:?}");
            }
        }
    }
    Ok(format!("{checked} group instances, rational and golden Legendre symbols"))
}

fn main() -> ExitCode {
    let mut failures = 0;
    let mut report = |k: usize, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let out = f();
        let dt: Duration = t.elapsed();
        match out {
            Ok(msg) => println!("PASS [{k:2}] {name}: {msg} ({:.1}s)", dt.as_secs_f64()),
            Err(msg) => {
                failures += 1;
                println!("FAIL [{k:2}] {name}: {msg} ({:.1}s)", dt.as_secs_f64());
            }
        }
    };
    report(1, "[3,5,3] mod 2", &mut c1_mod2);
    report(2, "[3,5,3] mod sqrt5", &mut c2_sqrt5);
    report(3, "[3,5,3] mod 3", &mut c3_mod3);
    let delta_conj = run("[3,5,3]", "delta'", 2_000_000);
    report(4, "[3,5,3] mod delta'", &mut || delta_conj.clone().and_then(|r| c4_delta_conj(&r)));
    report(5, "[3,5,3] mod delta (11-cell)", &mut c5_delta);
    report(6, "[5,3,5] mod lambda (57-cell)", &mut c6_lambda);
    report(7, "epsilon sweep p < 200", &mut c7_epsilon_sweep);
    report(8, "self-duality of [3,5,3]", &mut || delta_conj.clone().and_then(|r| c8_self_dual(&r)));
    report(9, "rank-3/4 spot checks", &mut c9_spot_checks);
    report(10, "Mobius [4,4,3]+", &mut c10_mobius);
    report(11, "property suites", &mut c11_properties);
    println!("{} of 11 acceptance criteria passed", 11 - failures);
    if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
