//! Output sinks and plain-text tables.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use modpoly_core::PolytopeReport;

/// Stdout or a file.
pub struct Sink {
    inner: Box<dyn Write>,
}

impl Sink {
    pub fn open(path: Option<&Path>) -> Result<Self> {
        let inner: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Self { inner })
    }

    pub fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.inner, "{s}")?;
        Ok(())
    }

    pub fn write(&mut self, s: &str) -> Result<()> {
        self.inner.write_all(s.as_bytes())?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.inner.flush()?;
        Ok(())
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut push = |cells: Vec<&str>| {
        let line: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    push(header.to_vec());
    for r in rows {
        push(r.iter().map(String::as_str).collect());
    }
    out
}

pub fn report_table(reports: &[PolytopeReport]) -> String {
    let header = ["group", "modulus", "order", "label", "c-group", "type", "f-vector", "self-dual", "kind", "facet"];
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.group_symbol.clone(),
                r.modulus.clone(),
                r.order.to_string(),
                r.group_label.name.clone(),
                if r.kind.is_some() { "-".to_string() } else { r.is_cgroup.to_string() },
                format!("{{{}}}", join(&r.schlafli)),
                format!("({})", join(&r.f_vector)),
                opt(r.self_dual),
                opt(r.kind.map(|k| serde_json::to_value(k).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default())),
                opt(r.facet.map(|(b, c)| format!("({b},{c})"))),
            ]
        })
        .collect();
    table(&header, &rows)
}
