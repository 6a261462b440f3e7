//! Field description files.
//!
//! ```text
//! 3
//! 2
//! poly 1 0 1
//! ```
//!
//! The third line is either `poly` with n+1 ascending coefficients or `table`
//! followed by n³ entries (which may continue over later lines).

use num_bigint::BigUint;

use super::{Definition, ExplicitField};
use crate::error::{Error, Result};

fn parse_big(tok: &str) -> Result<BigUint> {
    tok.parse().map_err(|_| Error::Parse(format!("not a decimal integer: {tok:?}")))
}

/// Parses a field description from the front of `lines`, consuming only what
/// it needs. Blank lines and `#` comments are skipped.
pub fn parse_field<'a, I>(lines: &mut std::iter::Peekable<I>) -> Result<ExplicitField>
where
    I: Iterator<Item = &'a str>,
{
    let mut next = || -> Result<&'a str> {
        loop {
            let l = lines.next().ok_or_else(|| Error::Parse("unexpected end of field description".into()))?;
            let l = l.trim();
            if !l.is_empty() && !l.starts_with('#') {
                return Ok(l);
            }
        }
    };
    let p = parse_big(next()?)?;
    let n: usize = next()?.parse().map_err(|_| Error::Parse("degree must be a positive integer".into()))?;
    let head = next()?;
    let mut toks = head.split_whitespace();
    let kind = toks.next().unwrap_or("");
    let mut values: Vec<BigUint> = toks.map(parse_big).collect::<Result<_>>()?;
    match kind {
        "poly" => {
            if values.len() != n + 1 {
                return Err(Error::Parse(format!("poly needs {} coefficients, found {}", n + 1, values.len())));
            }
            ExplicitField::new(p, n, Definition::Polynomial(values))
        }
        "table" => {
            while values.len() < n * n * n {
                let more = next()?;
                for t in more.split_whitespace() {
                    values.push(parse_big(t)?);
                }
            }
            if values.len() != n * n * n {
                return Err(Error::Parse(format!("table needs {} entries, found {}", n * n * n, values.len())));
            }
            ExplicitField::new(p, n, Definition::Table(values))
        }
        other => Err(Error::Parse(format!("expected `poly` or `table`, found {other:?}"))),
    }
}

pub fn parse_field_str(text: &str) -> Result<ExplicitField> {
    parse_field(&mut text.lines().peekable())
}

pub fn format_field(f: &ExplicitField) -> String {
    let join = |v: &[BigUint]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
    match f.definition() {
        Definition::Polynomial(m) => format!("{}\n{}\npoly {}\n", f.characteristic(), f.degree(), join(m)),
        Definition::Table(t) => format!("{}\n{}\ntable {}\n", f.characteristic(), f.degree(), join(t)),
    }
}
