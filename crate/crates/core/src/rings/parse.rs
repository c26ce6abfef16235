//! Textual grammar for ring elements and ideals.
//!
//! * `Z[τ]`: `a+b*t`, with `t2` / `t^k` for powers of `τ` and the aliases
//!   `sqrt5`, `delta`, `delta'`, `lambda`.
//! * `Z[i]`: `a+b*i`.
//! * ideals: `full:m` or `principal:b,c`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::gauss::{GaussInt, Ideal};
use super::quad::QuadInt;
use super::RingError;

fn err(s: &str) -> RingError {
    RingError::Parse(s.to_string())
}

/// Splits `"3-2*t+t2"` into signed terms `["3", "-2*t", "+t2"]`.
fn terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        let starts_term = (ch == '+' || ch == '-')
            && !cur.is_empty()
            && !matches!(prev, Some('^') | Some('*'));
        if starts_term {
            out.push(core::mem::take(&mut cur));
        }
        cur.push(ch);
        prev = Some(ch);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Parses `[±][coef][*]var[^k|k]` into `(coefficient, power)`.
fn term(t: &str, var: char) -> Option<(i64, u32)> {
    let (sign, body) = match t.as_bytes().first()? {
        b'+' => (1, &t[1..]),
        b'-' => (-1, &t[1..]),
        _ => (1, t),
    };
    if body.is_empty() {
        return None;
    }
    let Some(pos) = body.find(var) else {
        return body.parse::<i64>().ok().map(|c| (sign * c, 0));
    };
    let coef = body[..pos].trim_end_matches('*');
    let coef = if coef.is_empty() { 1 } else { coef.parse::<i64>().ok()? };
    let exp = body[pos + 1..].trim_start_matches('^');
    let exp = if exp.is_empty() { 1 } else { exp.parse::<u32>().ok()? };
    Some((sign * coef, exp))
}

/// Parses an element of `Z[τ]`.
pub fn parse_quad(text: &str) -> Result<QuadInt, RingError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let named = match s.to_ascii_lowercase().as_str() {
        "sqrt5" => Some(QuadInt::SQRT5),
        "delta" => Some(QuadInt::DELTA),
        "delta'" | "delta_conj" | "deltaconj" => Some(QuadInt::DELTA_CONJ),
        "lambda" => Some(QuadInt::LAMBDA),
        "lambda'" | "lambda_conj" => Some(QuadInt::LAMBDA.conj()),
        _ => None,
    };
    if let Some(z) = named {
        return Ok(z);
    }
    let s = s.replace("tau", "t");
    let ts = terms(&s);
    if ts.is_empty() {
        return Err(err(text));
    }
    ts.iter().try_fold(QuadInt::ZERO, |acc, t| {
        let (c, k) = term(t, 't').ok_or_else(|| err(text))?;
        Ok(acc + QuadInt::from_int(c) * QuadInt::tau_pow(k as i32))
    })
}

/// Parses an element of `Z[i]`.
pub fn parse_gauss(text: &str) -> Result<GaussInt, RingError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let ts = terms(&s);
    if ts.is_empty() {
        return Err(err(text));
    }
    ts.iter().try_fold(GaussInt::ZERO, |acc, t| {
        let (c, k) = term(t, 'i').ok_or_else(|| err(text))?;
        let mut p = GaussInt::ONE;
        for _ in 0..k {
            p = p * GaussInt::I;
        }
        Ok(acc + GaussInt::new(c, 0) * p)
    })
}

/// Parses `full:m` or `principal:b,c`.
pub fn parse_ideal(text: &str) -> Result<Ideal, RingError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (head, rest) = s.split_once(':').ok_or_else(|| err(text))?;
    let ideal = match head.to_ascii_lowercase().as_str() {
        "full" => Ideal::Full(rest.parse().map_err(|_| err(text))?),
        "principal" => {
            let (b, c) = rest.split_once(',').ok_or_else(|| err(text))?;
            Ideal::Principal(
                b.parse().map_err(|_| err(text))?,
                c.parse().map_err(|_| err(text))?,
            )
        }
        _ => return Err(err(text)),
    };
    ideal.validate()
}
