//! alist export for sparse GF(2) check matrices (MacKay format).
//!
//! Line 1: `N M` (columns, rows); line 2: max column/row weights; lines
//! 3-4: per-column and per-row weights; then one line per column listing
//! 1-based row indices, then one line per row listing 1-based column
//! indices, both zero-padded to the maximum weight.

use crate::error::{Error, Result};
use crate::rgmatrix::FieldMatrix;

pub fn write_alist(m: &FieldMatrix) -> Result<String> {
    if m.p() != 2 {
        return Err(Error::InvalidArgument("alist export is defined for GF(2) matrices".into()));
    }
    let rows = m.rows();
    let cols = m.cols();
    let col_adj: Vec<Vec<usize>> = (0..cols)
        .map(|j| (0..rows).filter(|&i| m.get(i, j) != 0).map(|i| i + 1).collect())
        .collect();
    let row_adj: Vec<Vec<usize>> = (0..rows)
        .map(|i| (0..cols).filter(|&j| m.get(i, j) != 0).map(|j| j + 1).collect())
        .collect();
    let cmax = col_adj.iter().map(Vec::len).max().unwrap_or(0);
    let rmax = row_adj.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    out.push_str(&format!("{cols} {rows}\n"));
    out.push_str(&format!("{cmax} {rmax}\n"));
    out.push_str(&join(col_adj.iter().map(Vec::len)));
    out.push('\n');
    out.push_str(&join(row_adj.iter().map(Vec::len)));
    out.push('\n');
    for adj in &col_adj {
        out.push_str(&padded(adj, cmax));
        out.push('\n');
    }
    for adj in &row_adj {
        out.push_str(&padded(adj, rmax));
        out.push('\n');
    }
    Ok(out)
}

fn join(values: impl Iterator<Item = usize>) -> String {
    values.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn padded(adj: &[usize], width: usize) -> String {
    let mut items: Vec<String> = adj.iter().map(|v| v.to_string()).collect();
    items.resize(width, "0".to_string());
    items.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_small_matrix() {
        // H = [1 1 0 1; 0 1 1 0]
        let mut m = FieldMatrix::zeros(2, 2, 4);
        for (i, j) in [(0, 0), (0, 1), (0, 3), (1, 1), (1, 2)] {
            m.set(i, j, 1);
        }
        let text = write_alist(&m).unwrap();
        let expect = "4 2\n2 3\n1 2 1 1\n3 2\n1 0\n1 2\n2 0\n1 0\n1 2 4\n2 3 0\n";
        assert_eq!(text, expect);
    }

    #[test]
    fn rejects_odd_fields() {
        let m = FieldMatrix::zeros(3, 2, 2);
        assert!(write_alist(&m).is_err());
    }
}
