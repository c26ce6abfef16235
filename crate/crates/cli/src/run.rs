//! Job execution. Every number printed comes straight from a library call.

use std::fmt::Write as _;
use std::fs;

use anyhow::{bail, Context, Result};
use modpoly_core::cgroup::{self, PipelineOptions};
use modpoly_core::coxeter::{self, CoxeterError};
use modpoly_core::groupkit::GroupError;
use modpoly_core::mobius;
use modpoly_core::rings::{self, RingError};
use modpoly_core::{parse_symbol, CGroupError, MatrixGroup, PolytopeReport};

use crate::args::{Format, GroupJob, MobiusJob, VerifyJob};
use crate::output::{self, Sink};

/// A verification job found a mismatch.
#[derive(Debug)]
pub struct VerifyFailed(pub String);

impl std::fmt::Display for VerifyFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "verification failed: {}", self.0)
    }
}

impl std::error::Error for VerifyFailed {}

/// Process exit code for an error: 2 parse, 3 budget, 4 verification, 1
/// anything else.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<VerifyFailed>() {
            return 4;
        }
        if let Some(e) = cause.downcast_ref::<CGroupError>() {
            return match e {
                CGroupError::Group(g) => group_code(g),
                CGroupError::Coxeter(c) => coxeter_code(c),
                CGroupError::Ring(r) => ring_code(r),
                CGroupError::Ortho(modpoly_core::ortho::OrthoError::Ring(r)) => ring_code(r),
                _ => 1,
            };
        }
        if let Some(g) = cause.downcast_ref::<GroupError>() {
            return group_code(g);
        }
        if let Some(c) = cause.downcast_ref::<CoxeterError>() {
            return coxeter_code(c);
        }
        if let Some(r) = cause.downcast_ref::<RingError>() {
            return ring_code(r);
        }
    }
    1
}

fn group_code(e: &GroupError) -> u8 {
    match e {
        GroupError::BudgetExceeded { .. } => 3,
        _ => 1,
    }
}

fn coxeter_code(e: &CoxeterError) -> u8 {
    match e {
        CoxeterError::BadSymbol(_) | CoxeterError::LabelViolation(_) => 2,
        _ => 1,
    }
}

fn ring_code(e: &RingError) -> u8 {
    match e {
        RingError::Parse(_) | RingError::BadIdeal(_) | RingError::ModulusOutOfRange(_) | RingError::NotPrime(_) => 2,
        _ => 1,
    }
}

fn report_line(rep: &PolytopeReport) -> Result<String> {
    Ok(serde_json::to_string(rep)?)
}

fn emit(reports: &[PolytopeReport], format: Format, sink: &mut Sink) -> Result<()> {
    match format {
        Format::Jsonl => {
            for r in reports {
                sink.line(&report_line(r)?)?;
            }
        }
        Format::Table => sink.write(&output::report_table(reports))?,
    }
    Ok(())
}

fn dump_elements(job: &GroupJob, modulus: &str) -> Result<()> {
    let Some(path) = &job.dump_elements else { return Ok(()) };
    let d = parse_symbol(&job.group).map_err(CGroupError::from)?;
    let (ring, _) = cgroup::ring_for(&d, modulus)?;
    let gens = coxeter::reduce_matrices(&coxeter::reflection_generators(&d), &ring).map_err(CGroupError::from)?;
    let g = MatrixGroup::closure(&gens, &ring, job.common.budget).map_err(CGroupError::from)?;
    let mut text = String::new();
    for e in g.sorted_encodings() {
        for b in e {
            write!(text, "{b:02x}")?;
        }
        text.push('\n');
    }
    let path = if job.moduli.len() > 1 { path.with_extension(format!("{}.hex", sanitize(modulus))) } else { path.clone() };
    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
}

fn sanitize(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect()
}

fn group_reports(job: &GroupJob, hemi: bool, sink: &mut Sink) -> Result<Vec<PolytopeReport>> {
    let d = parse_symbol(&job.group).map_err(CGroupError::from)?;
    let opts = PipelineOptions { budget: job.common.budget, ..PipelineOptions::default() };
    let mut out = Vec::new();
    for m in &job.moduli {
        let rep = if hemi {
            cgroup::hemi_quotient_pipeline(&d, m, job.common.budget)
        } else {
            cgroup::reflection_pipeline(&d, m, opts)
        };
        match rep {
            Ok(r) => {
                dump_elements(job, m)?;
                out.push(r);
            }
            Err(e) => {
                // keep what was computed before failing
                emit(&out, job.common.format, sink)?;
                return Err(anyhow::Error::new(e).context(format!("{} mod {m}", job.group)));
            }
        }
    }
    Ok(out)
}

/// `reduce` and `hemi`.
pub fn run_group(job: &GroupJob, hemi: bool) -> Result<()> {
    let mut sink = Sink::open(job.common.out.as_deref())?;
    let reports = group_reports(job, hemi, &mut sink)?;
    emit(&reports, job.common.format, &mut sink)?;
    sink.finish()
}

/// `verify`: the reports must match the fixture, or without one, every
/// group must be a string C-group.
pub fn run_verify(job: &VerifyJob) -> Result<()> {
    let mut sink = Sink::open(job.job.common.out.as_deref())?;
    let reports = group_reports(&job.job, false, &mut sink)?;
    emit(&reports, job.job.common.format, &mut sink)?;
    sink.finish()?;
    if let Some(path) = &job.fixture {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let want: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if want.len() != reports.len() {
            bail!(VerifyFailed(format!("fixture has {} lines, got {} reports", want.len(), reports.len())));
        }
        for (k, (w, r)) in want.iter().zip(&reports).enumerate() {
            if *w != report_line(r)? {
                bail!(VerifyFailed(format!("line {} ({} mod {}) differs from the fixture", k + 1, r.group_symbol, r.modulus)));
            }
        }
    } else if let Some(r) = reports.iter().find(|r| !r.is_cgroup) {
        bail!(VerifyFailed(format!(
            "{} mod {} is not a string C-group (fails at {:?})",
            r.group_symbol, r.modulus, r.diagnostics.failed
        )));
    }
    Ok(())
}

/// `mobius`.
pub fn run_mobius(job: &MobiusJob) -> Result<()> {
    let mut sink = Sink::open(job.common.out.as_deref())?;
    let mut reports = Vec::new();
    for text in &job.ideals {
        let ideal = rings::parse_ideal(text)?;
        match mobius::build_mobius_polytope(ideal, job.common.budget) {
            Ok(r) => reports.push(r),
            Err(e) => {
                emit(&reports, job.common.format, &mut sink)?;
                return Err(anyhow::Error::new(e).context(format!("[4,4,3]+ mod {text}")));
            }
        }
    }
    emit(&reports, job.common.format, &mut sink)?;
    sink.finish()
}
