//! Prime sweeps: one row per prime, computed in parallel and emitted in
//! modulus order.

use anyhow::{anyhow, Result};
use modpoly_core::cgroup::{self, PipelineOptions};
use modpoly_core::coxeter;
use modpoly_core::groupkit::GroupError;
use modpoly_core::ortho::{self, LabelKind};
use modpoly_core::rings::arith::is_prime;
use modpoly_core::rings::split_prime_over;
use modpoly_core::{parse_symbol, CGroupError, Diagram};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{AtlasJob, Format, Splitting};
use crate::output::{table, Sink};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AtlasRow {
    pub group: String,
    pub modulus: String,
    /// `inert`, `split`, `ramified` over `Z[τ]`, or `rational`.
    pub prime: &'static str,
    pub q: u64,
    pub eps_form: Option<i8>,
    pub eps_legendre: Option<i8>,
    pub eps_table: Option<i8>,
    /// `ε(π)·ε(π′)` for split primes.
    pub eps_pair_product: Option<i8>,
    /// Order of the O₁-type group the form predicts (Ô₁ when singular).
    pub formula_order: Option<u64>,
    pub order: Option<u64>,
    pub budget: usize,
    /// `ok`, `exceeded` or `skipped`.
    pub budget_status: &'static str,
    pub is_cgroup: Option<bool>,
    pub label: Option<String>,
    pub error: Option<String>,
}

/// Parses `lo..hi`.
pub fn parse_range(s: &str) -> Result<(u64, u64)> {
    let (a, b) = s.split_once("..").ok_or_else(|| anyhow!("range must look like lo..hi, got {s:?}"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

/// The moduli swept for `d` over the rational primes in `[lo, hi)`.
pub fn moduli(d: &Diagram, lo: u64, hi: u64, splitting: Splitting) -> Vec<(String, &'static str)> {
    let mut out = Vec::new();
    for p in (lo..hi).filter(|&p| is_prime(p)) {
        if !d.is_golden() {
            out.push((p.to_string(), "rational"));
            continue;
        }
        let kind = match p % 5 {
            0 => "ramified",
            2 | 3 => "inert",
            _ => "split",
        };
        let wanted = match splitting {
            Splitting::All => true,
            Splitting::Inert => kind == "inert",
            Splitting::Split => kind == "split",
        };
        if !wanted {
            continue;
        }
        match kind {
            "ramified" => out.push(("sqrt5".to_string(), kind)),
            "inert" => out.push((p.to_string(), kind)),
            _ => {
                let pi = split_prime_over(p).expect("p = ±1 mod 5 splits");
                out.push((pi.to_string(), kind));
                out.push((pi.conj().to_string(), kind));
            }
        }
    }
    out
}

fn is_353(d: &Diagram) -> bool {
    d.symbol() == "[3,5,3]"
}

fn row(d: &Diagram, modulus: &str, prime: &'static str, job: &AtlasJob) -> AtlasRow {
    let budget = job.common.budget;
    let mut r = AtlasRow {
        group: d.symbol(),
        modulus: modulus.to_string(),
        prime,
        q: 0,
        eps_form: None,
        eps_legendre: None,
        eps_table: None,
        eps_pair_product: None,
        formula_order: None,
        order: None,
        budget,
        budget_status: "skipped",
        is_cgroup: None,
        label: None,
        error: None,
    };
    if let Err(e) = fill(d, modulus, job, &mut r) {
        r.error = Some(e.to_string());
    }
    r
}

fn fill(d: &Diagram, modulus: &str, job: &AtlasJob, r: &mut AtlasRow) -> Result<(), CGroupError> {
    let (ring, pi) = cgroup::ring_for(d, modulus)?;
    r.q = ring.order();
    if is_353(d) {
        if let Some(pi) = pi {
            r.eps_legendre = ortho::epsilon_353(pi).ok();
            if pi.is_rational() {
                r.eps_table = ortho::epsilon_353_table(ring.characteristic());
            }
            if r.prime == "split" {
                let other = ortho::epsilon_353(pi.conj()).ok();
                r.eps_pair_product = r.eps_legendre.zip(other).map(|(a, b)| a * b);
            }
        }
    }
    let n = d.rank();
    if ring.characteristic() != 2 && ring.is_field() {
        let b2 = coxeter::reduce_matrices(&[coxeter::cartan_data(d).b2], &ring)?.remove(0);
        let fa = ortho::analyze_form(&b2, &ring)?;
        r.eps_form = fa.epsilon.value();
        r.formula_order = if !fa.is_singular() {
            fa.epsilon.value().and_then(|e| ortho::order_formula(LabelKind::O1, n, r.q, e).ok())
        } else if fa.radical.len() == 1 {
            let m = n - 1;
            let e = if m % 2 == 1 { 0 } else if fa.witt_index == m / 2 { 1 } else { -1 };
            ortho::order_formula(LabelKind::OHat1, n, r.q, e).ok()
        } else {
            None
        };
    }
    let fits = r.formula_order.is_none_or(|o| o <= job.common.budget as u64);
    if job.no_closure || !fits {
        return Ok(());
    }
    let opts = PipelineOptions { budget: job.common.budget, brute_force_limit: 0, self_duality: false };
    match cgroup::reflection_pipeline(d, modulus, opts) {
        Ok(rep) => {
            r.order = Some(rep.order);
            r.budget_status = "ok";
            r.is_cgroup = Some(rep.is_cgroup);
            r.label = Some(rep.group_label.name);
        }
        Err(CGroupError::Group(GroupError::BudgetExceeded { .. })) => r.budget_status = "exceeded",
        Err(e) => return Err(e),
    }
    Ok(())
}

/// Runs the sweep. Row errors are recorded in the row; only a bad symbol or
/// range is fatal.
pub fn run_atlas(job: &AtlasJob) -> Result<Vec<AtlasRow>> {
    let d = parse_symbol(&job.group).map_err(CGroupError::from)?;
    let (lo, hi) = parse_range(&job.primes).map_err(|e| CGroupError::Ring(modpoly_core::rings::RingError::Parse(e.to_string())))?;
    let ms = moduli(&d, lo, hi, job.splitting);
    Ok(ms.par_iter().map(|(m, kind)| row(&d, m, kind, job)).collect())
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

pub fn write_atlas(rows: &[AtlasRow], format: Format, sink: &mut Sink) -> Result<()> {
    match format {
        Format::Jsonl => {
            for r in rows {
                sink.line(&serde_json::to_string(r)?)?;
            }
        }
        Format::Table => {
            let header = [
                "modulus", "prime", "q", "eps_form", "eps_legendre", "eps_table", "eps_pair", "formula_order", "order",
                "status", "c-group", "label", "error",
            ];
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.modulus.clone(),
                        r.prime.to_string(),
                        r.q.to_string(),
                        cell(&r.eps_form),
                        cell(&r.eps_legendre),
                        cell(&r.eps_table),
                        cell(&r.eps_pair_product),
                        cell(&r.formula_order),
                        cell(&r.order),
                        r.budget_status.to_string(),
                        cell(&r.is_cgroup),
                        cell(&r.label),
                        cell(&r.error),
                    ]
                })
                .collect();
            sink.write(&table(&header, &body))?;
        }
    }
    Ok(())
}
