#![allow(dead_code)]

use lrzeta::{Exponent, Partition, SkewShape, Tableau};

/// Skew shapes with `1..=max` boxes in which every row and every column of
/// the outer shape keeps at least one box.
pub fn small_skew_shapes(max: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 1..=2 * max {
        for outer in Partition::all_of(n) {
            let oc = outer.conjugate();
            for k in n.saturating_sub(max)..n {
                for inner in Partition::all_of(k) {
                    if !outer.contains(&inner) {
                        continue;
                    }
                    let ic = inner.conjugate();
                    let rows_ok = (1..=outer.length()).all(|i| inner.row(i) < outer.row(i));
                    let cols_ok = (1..=oc.length()).all(|j| ic.row(j) < oc.row(j));
                    if rows_ok && cols_ok {
                        out.push(SkewShape::new(outer.clone(), inner).unwrap());
                    }
                }
            }
        }
    }
    out
}

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn skew(s: &str) -> SkewShape {
    s.parse().unwrap()
}

/// Fills the boxes of `shape` in row-major order.
pub fn fill(shape: &SkewShape, vals: &[Exponent]) -> Tableau<Exponent> {
    assert_eq!(shape.size(), vals.len());
    Tableau::from_cells(shape.cells().zip(vals.iter().copied())).unwrap()
}

pub fn by_cell(cells: impl Iterator<Item = (usize, usize)>, mut f: impl FnMut((usize, usize)) -> Exponent) -> Tableau<Exponent> {
    Tableau::from_cells(cells.map(|c| (c, f(c)))).unwrap()
}
