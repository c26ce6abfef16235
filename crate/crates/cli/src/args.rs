//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Reduce Coxeter and Möbius groups modulo primes and ideals, and certify
/// the results as string C-groups or rotation groups.
#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(name = "modpoly", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Enumerate the reduced reflection group and report it.
    Reduce(GroupJob),
    /// Like `reduce`, but fail (exit 4) unless every group is a C-group or
    /// matches the given fixture.
    Verify(VerifyJob),
    /// Pass to the action on `V / rad` at a discriminant prime.
    Hemi(GroupJob),
    /// Build `[4,4,3]⁺` modulo ideals of `Z[i]`.
    Mobius(MobiusJob),
    /// Sweep a range of primes, one row each.
    Atlas(AtlasJob),
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct Common {
    /// Element budget for every closure.
    #[arg(long, default_value_t = modpoly_core::DEFAULT_BUDGET)]
    pub budget: usize,
    /// Output file (default stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    pub format: Format,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct GroupJob {
    /// Coxeter symbol, e.g. `[3,5,3]` or `[3,oo]`.
    #[arg(long)]
    pub group: String,
    /// Modulus: an integer, or for golden-ratio groups an element of Z[t]
    /// (`-7+5*t`, `sqrt5`, `delta`, `delta'`, `lambda`). Repeatable.
    #[arg(long = "mod", required = true, allow_hyphen_values = true)]
    pub moduli: Vec<String>,
    /// Write the sorted element encodings (hex, one per line) here.
    #[arg(long)]
    pub dump_elements: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct VerifyJob {
    #[command(flatten)]
    pub job: GroupJob,
    /// JSON-lines fixture the reports must reproduce byte for byte.
    #[arg(long)]
    pub fixture: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct MobiusJob {
    /// `full:m` or `principal:b,c`. Repeatable.
    #[arg(long = "ideal", required = true)]
    pub ideals: Vec<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct AtlasJob {
    /// Coxeter symbol.
    #[arg(long)]
    pub group: String,
    /// Rational primes `lo..hi` (half-open) to sweep.
    #[arg(long, default_value = "2..55")]
    pub primes: String,
    /// Which primes of Z[t] to include.
    #[arg(long, value_enum, default_value_t = Splitting::All)]
    pub splitting: Splitting,
    /// Only evaluate formulas; never enumerate.
    #[arg(long)]
    pub no_closure: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Jsonl,
    Table,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Splitting {
    All,
    Inert,
    Split,
}

impl Common {
    fn push_args(&self, v: &mut Vec<String>) {
        v.extend(["--budget".into(), self.budget.to_string()]);
        if let Some(p) = &self.out {
            v.extend(["--out".into(), p.display().to_string()]);
        }
        let f = self.format.to_possible_value().expect("no skipped variants");
        v.extend(["--format".into(), f.get_name().to_string()]);
    }
}

impl GroupJob {
    fn push_args(&self, v: &mut Vec<String>) {
        v.extend(["--group".into(), self.group.clone()]);
        for m in &self.moduli {
            v.extend(["--mod".into(), m.clone()]);
        }
        if let Some(p) = &self.dump_elements {
            v.extend(["--dump-elements".into(), p.display().to_string()]);
        }
        self.common.push_args(v);
    }
}

impl Cli {
    /// The argument vector that parses back to `self`.
    pub fn to_args(&self) -> Vec<String> {
        let mut v = vec!["modpoly".to_string()];
        match &self.command {
            Command::Reduce(j) => {
                v.push("reduce".into());
                j.push_args(&mut v);
            }
            Command::Hemi(j) => {
                v.push("hemi".into());
                j.push_args(&mut v);
            }
            Command::Verify(j) => {
                v.push("verify".into());
                j.job.push_args(&mut v);
                if let Some(p) = &j.fixture {
                    v.extend(["--fixture".into(), p.display().to_string()]);
                }
            }
            Command::Mobius(j) => {
                v.push("mobius".into());
                for i in &j.ideals {
                    v.extend(["--ideal".into(), i.clone()]);
                }
                j.common.push_args(&mut v);
            }
            Command::Atlas(j) => {
                v.push("atlas".into());
                v.extend(["--group".into(), j.group.clone(), "--primes".into(), j.primes.clone()]);
                let s = j.splitting.to_possible_value().expect("no skipped variants");
                v.extend(["--splitting".into(), s.get_name().to_string()]);
                if j.no_closure {
                    v.push("--no-closure".into());
                }
                j.common.push_args(&mut v);
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for line in [
            "modpoly reduce --group [3,5,3] --mod 2 --mod -7+5*t",
            "modpoly verify --group [6,3,6] --mod 3 --fixture f.jsonl --format table",
            "modpoly hemi --group [5,3,5] --mod lambda --budget 1000",
            "modpoly mobius --ideal full:3 --ideal principal:1,4 --out x.jsonl",
            "modpoly atlas --group [3,5,3] --primes 2..30 --splitting split --no-closure",
        ] {
            let cli = Cli::try_parse_from(line.split(' ')).unwrap();
            let again = Cli::try_parse_from(cli.to_args()).unwrap();
            assert_eq!(cli, again, "{line}");
        }
    }
}
