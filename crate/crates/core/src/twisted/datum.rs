//! Curtis–Tits data: root SL₂ subgroups with their tori and Weyl elements.
//!
//! File format, one header line then four lines per node:
//!
//! ```text
//! rank R q Q
//! K <hex> <hex> ...
//! Tsplit <hex> order <factored>
//! Ttwist <hex> order <factored>
//! W <hex>
//! ```

use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::bbcore::{BlackBox, GroupString};
use crate::cyclic::{order_exact, FactoredInteger};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatumNode {
    pub k_gens: Vec<GroupString>,
    pub t_split: GroupString,
    pub split_order: FactoredInteger,
    pub t_twisted: GroupString,
    pub twisted_order: FactoredInteger,
    pub w: GroupString,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurtisTitsDatum {
    pub nodes: Vec<DatumNode>,
    /// Size of the field the ambient group is defined over.
    pub q: BigUint,
}

impl CurtisTitsDatum {
    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    /// Oracle checks: w inverts the split torus and both declared orders are exact.
    pub fn validate(&self, x: &BlackBox) -> Result<()> {
        if self.nodes.is_empty() {
            return Err(Error::InvalidDatum("rank 0".into()));
        }
        for (i, n) in self.nodes.iter().enumerate() {
            for s in n.k_gens.iter().chain([&n.t_split, &n.t_twisted, &n.w]) {
                x.check(s)?;
            }
            if !x.eq(&x.conj(&n.t_split, &n.w), &x.inv(&n.t_split)) {
                return Err(Error::InvalidDatum(format!("node {i}: w does not invert the split torus")));
            }
            for (t, o, name) in [(&n.t_split, &n.split_order, "split"), (&n.t_twisted, &n.twisted_order, "twisted")] {
                let exact = order_exact(x, t, o).map_err(|_| Error::InvalidDatum(format!("node {i}: {name} torus order does not annihilate")))?;
                if &exact != o.value() {
                    return Err(Error::InvalidDatum(format!("node {i}: {name} torus has order {exact}, declared {}", o.value())));
                }
            }
        }
        Ok(())
    }
}

pub fn format_datum(d: &CurtisTitsDatum) -> String {
    let mut out = format!("rank {} q {}\n", d.rank(), d.q);
    for n in &d.nodes {
        out.push('K');
        for g in &n.k_gens {
            let _ = write!(out, " {}", g.to_hex());
        }
        let _ = writeln!(out, "\nTsplit {} order {}", n.t_split.to_hex(), n.split_order);
        let _ = writeln!(out, "Ttwist {} order {}", n.t_twisted.to_hex(), n.twisted_order);
        let _ = writeln!(out, "W {}", n.w.to_hex());
    }
    out
}

fn tokens<'a>(line: Option<&'a str>, key: &str) -> Result<Vec<&'a str>> {
    let line = line.ok_or_else(|| Error::Parse(format!("missing `{key}` line")))?;
    let mut it = line.split_whitespace();
    if it.next() != Some(key) {
        return Err(Error::Parse(format!("expected `{key}`, found {line:?}")));
    }
    Ok(it.collect())
}

fn torus(line: Option<&str>, key: &str) -> Result<(GroupString, FactoredInteger)> {
    match tokens(line, key)?.as_slice() {
        [hex, "order", o] => Ok((GroupString::from_hex(hex)?, o.parse()?)),
        other => Err(Error::Parse(format!("malformed `{key}` line: {other:?}"))),
    }
}

pub fn parse_datum(text: &str) -> Result<CurtisTitsDatum> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let (rank, q) = match tokens(lines.next(), "rank")?.as_slice() {
        [r, "q", q] => (r.parse::<usize>().map_err(|_| Error::Parse("bad rank".into()))?, q.parse::<BigUint>().map_err(|_| Error::Parse("bad q".into()))?),
        other => return Err(Error::Parse(format!("malformed header: {other:?}"))),
    };
    let mut nodes = Vec::with_capacity(rank);
    for _ in 0..rank {
        let k_gens = tokens(lines.next(), "K")?.into_iter().map(GroupString::from_hex).collect::<Result<Vec<_>>>()?;
        let (t_split, split_order) = torus(lines.next(), "Tsplit")?;
        let (t_twisted, twisted_order) = torus(lines.next(), "Ttwist")?;
        let w = match tokens(lines.next(), "W")?.as_slice() {
            [hex] => GroupString::from_hex(hex)?,
            other => return Err(Error::Parse(format!("malformed `W` line: {other:?}"))),
        };
        nodes.push(DatumNode { k_gens, t_split, split_order, t_twisted, twisted_order, w });
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing line {extra:?}")));
    }
    Ok(CurtisTitsDatum { nodes, q })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let node = DatumNode {
            k_gens: vec![GroupString(vec![1, 2]), GroupString(vec![3, 4])],
            t_split: GroupString(vec![5, 6]),
            split_order: "2^3·3".parse().unwrap(),
            t_twisted: GroupString(vec![7, 8]),
            twisted_order: FactoredInteger::from_u64(26),
            w: GroupString(vec![9, 10]),
        };
        let d = CurtisTitsDatum { nodes: vec![node.clone(), node], q: BigUint::from(25u32) };
        let text = format_datum(&d);
        assert_eq!(parse_datum(&text).unwrap(), d);
        assert!(parse_datum("rank 1 q 5\nK 00\n").is_err());
        assert!(parse_datum(&format!("{text}W 00\n")).is_err());
    }
}
