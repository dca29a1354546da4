//! Code bundle text format.
//!
//! Header `n k field group element basis`, then the generator rows, a blank
//! line, then the check rows, all space-separated scalars. Output is
//! deterministic; `parse_bundle` round-trips `write_bundle` bit-exactly.

use crate::error::{Error, Result};
use crate::groupring::RingSpec;
use crate::groups::GroupSpec;
use crate::rgmatrix::FieldMatrix;

use super::LinearCode;

pub fn write_bundle(code: &LinearCode) -> String {
    let prov = code.provenance();
    let basis = match &prov.basis {
        Some(b) => b.to_compact_text(),
        None => "-".to_string(),
    };
    let mut out = format!(
        "{} {} {} {} {} {}\n",
        code.n(),
        code.k(),
        prov.element.ring(),
        prov.element.group().spec(),
        prov.element.to_compact_text(),
        basis
    );
    write_rows(&mut out, code.generator());
    out.push('\n');
    write_rows(&mut out, code.check());
    out
}

fn write_rows(out: &mut String, m: &FieldMatrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// A bundle read back from text.
#[derive(Debug, Clone)]
pub struct ParsedBundle {
    pub n: usize,
    pub k: usize,
    pub ring: RingSpec,
    pub group: GroupSpec,
    pub element_text: String,
    pub basis: Option<Vec<usize>>,
    pub generator: FieldMatrix,
    pub check: FieldMatrix,
}

pub fn parse_bundle(text: &str) -> Result<ParsedBundle> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::InvalidArgument("empty bundle".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 6 {
        return Err(Error::InvalidArgument(format!(
            "bundle header needs 6 fields, found {}",
            fields.len()
        )));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| Error::InvalidArgument("bad n in bundle header".into()))?;
    let k: usize = fields[1]
        .parse()
        .map_err(|_| Error::InvalidArgument("bad k in bundle header".into()))?;
    let ring = RingSpec::parse(fields[2])?;
    let group = GroupSpec::parse(fields[3])?;
    let element_text = fields[4].to_string();
    let basis = if fields[5] == "-" {
        None
    } else {
        let mut idx = Vec::new();
        for part in fields[5].split(',') {
            idx.push(
                part.parse::<usize>()
                    .map_err(|_| Error::InvalidArgument("bad basis index in bundle".into()))?,
            );
        }
        Some(idx)
    };
    let p = match ring {
        RingSpec::Gf(p) => p,
        RingSpec::Integers => {
            return Err(Error::UnsupportedOverIntegers("bundle parsing"));
        }
    };
    let mut generator_rows = Vec::with_capacity(k);
    for _ in 0..k {
        generator_rows.push(parse_row(lines.next(), n)?);
    }
    match lines.next() {
        Some(l) if l.trim().is_empty() => {}
        _ => return Err(Error::InvalidArgument("expected blank line after generator".into())),
    }
    let mut check_rows = Vec::with_capacity(n - k);
    for _ in 0..n - k {
        check_rows.push(parse_row(lines.next(), n)?);
    }
    Ok(ParsedBundle {
        n,
        k,
        ring,
        group,
        element_text,
        basis,
        generator: FieldMatrix::from_rows(p, &generator_rows, n),
        check: FieldMatrix::from_rows(p, &check_rows, n),
    })
}

fn parse_row(line: Option<&str>, n: usize) -> Result<Vec<u16>> {
    let line = line.ok_or_else(|| Error::InvalidArgument("bundle truncated".into()))?;
    let vals: std::result::Result<Vec<u16>, _> =
        line.split_whitespace().map(|t| t.parse::<u16>()).collect();
    let vals = vals.map_err(|_| Error::InvalidArgument("bad scalar in bundle row".into()))?;
    if vals.len() != n {
        return Err(Error::InvalidArgument(format!(
            "bundle row has {} entries, expected {n}",
            vals.len()
        )));
    }
    Ok(vals)
}
