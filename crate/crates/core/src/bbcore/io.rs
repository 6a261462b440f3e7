//! Generator files: a field description, then `dim d`, `quotient 0|1`, then
//! one matrix per line with row-major entries `c0:c1:...:c_{n-1}`.

use std::sync::Arc;

use num_bigint::BigUint;

use super::matrix::{bb_matrix, Matrix, MatrixGroup};
use super::BlackBox;
use crate::error::{Error, Result};
use crate::ffield::io::{format_field, parse_field};
use crate::ffield::{ExplicitField, FieldElement};

#[derive(Clone, Debug)]
pub struct GeneratorFile {
    pub field: Arc<ExplicitField>,
    pub dim: usize,
    pub quotient: bool,
    pub gens: Vec<Matrix>,
}

impl GeneratorFile {
    pub fn into_box(&self, seed: u64) -> Result<(BlackBox, Arc<MatrixGroup>)> {
        bb_matrix(self.field.clone(), self.dim, &self.gens, self.quotient, seed)
    }
}

fn parse_entry(f: &ExplicitField, tok: &str) -> Result<FieldElement> {
    let coeffs = tok.split(':').map(|c| c.parse::<BigUint>().map_err(|_| Error::Parse(format!("bad entry {tok:?}")))).collect::<Result<Vec<_>>>()?;
    f.element(coeffs).map_err(|_| Error::Parse(format!("entry {tok:?} is not a field element")))
}

fn keyword<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str> {
    let line = line.ok_or_else(|| Error::Parse(format!("missing `{key}` line")))?;
    line.trim().strip_prefix(key).map(str::trim).ok_or_else(|| Error::Parse(format!("expected `{key}`, found {line:?}")))
}

pub fn parse_generators(text: &str) -> Result<GeneratorFile> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.trim().starts_with('#')).peekable();
    let field = Arc::new(parse_field(&mut lines)?);
    let dim: usize = keyword(lines.next(), "dim")?.parse().map_err(|_| Error::Parse("bad dim".into()))?;
    if dim == 0 {
        return Err(Error::InvalidDimension);
    }
    let quotient = match keyword(lines.next(), "quotient")? {
        "0" => false,
        "1" => true,
        other => return Err(Error::Parse(format!("quotient must be 0 or 1, found {other:?}"))),
    };
    let mut gens = Vec::new();
    for line in lines {
        let entries = line.split_whitespace().map(|t| parse_entry(&field, t)).collect::<Result<Vec<_>>>()?;
        if entries.len() != dim * dim {
            return Err(Error::Parse(format!("matrix needs {} entries, found {}", dim * dim, entries.len())));
        }
        gens.push(Matrix { dim, entries });
    }
    Ok(GeneratorFile { field, dim, quotient, gens })
}

pub fn format_generators(g: &GeneratorFile) -> String {
    let mut out = format_field(&g.field);
    out.push_str(&format!("dim {}\nquotient {}\n", g.dim, u8::from(g.quotient)));
    for m in &g.gens {
        let row: Vec<String> = m.entries.iter().map(|e| e.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const PSL2_9: &str = "3\n2\npoly 2 2 1\ndim 2\nquotient 1\n1:0 1:0 0:0 1:0\n1:0 0:0 1:0 1:0\n";

    #[test]
    fn parse_and_roundtrip() {
        let g = parse_generators(PSL2_9).unwrap();
        assert_eq!(g.dim, 2);
        assert!(g.quotient);
        assert_eq!(g.gens.len(), 2);
        let again = parse_generators(&format_generators(&g)).unwrap();
        assert_eq!(again.gens, g.gens);
        let (bb, _) = g.into_box(1).unwrap();
        assert_eq!(bb.string_len(), 4 * 2);
    }

    #[test]
    fn malformed_files() {
        assert!(parse_generators("3\n2\npoly 2 2 1\ndim 2\nquotient 2\n").is_err());
        assert!(parse_generators("3\n2\npoly 2 2 1\ndim 2\nquotient 0\n1:0 1:0 0:0\n").is_err());
        assert!(parse_generators("3\n2\npoly 2 2 1\ndim 2\nquotient 0\n1:0 1:0 0:0 7:0\n").is_err());
        assert!(parse_generators("3\n2\npoly 2 2 1\nquotient 0\n").is_err());
    }
}
