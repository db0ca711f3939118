//! Partitions, skew shapes and general cell diagrams.
//!
//! Coordinates are 1-based `(row, col)` pairs with rows growing downwards,
//! matching the English convention for Young diagrams.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, WingCondition};

/// A box of a diagram, `(row, col)`, both 1-based.
pub type Cell = (usize, usize);

/// An integer partition, stored without trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// True when the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    pub fn diagram(&self) -> Diagram {
        Diagram {
            cells: self.cells().collect(),
        }
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                rec(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Parses comma lists such as `6,3,3,1,1`; `()` and the empty string give
/// the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn normal(shape: Partition) -> Self {
        SkewShape {
            outer: shape,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_normal(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.outer
            .cells()
            .filter(|&(i, j)| j > self.inner.row(i))
    }

    pub fn diagram(&self) -> Diagram {
        Diagram {
            cells: self.cells().collect(),
        }
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Corners of the inner shape, top to bottom.
    pub fn inside_corners(&self) -> Vec<Cell> {
        let inner = &self.inner;
        (1..=inner.length())
            .filter(|&i| inner.row(i + 1) < inner.row(i))
            .map(|i| (i, inner.row(i)))
            .collect()
    }

    /// Recovers a skew shape whose cells are exactly those of `d`, using the
    /// smallest outer shape. Returns `None` when no such shape exists.
    pub fn from_diagram(d: &Diagram) -> Option<SkewShape> {
        let Some(rows) = d.max_row() else {
            return Some(SkewShape::normal(Partition::empty()));
        };
        let mut outer = vec![0usize; rows];
        let mut inner = vec![0usize; rows];
        let mut running = 0;
        for r in (1..=rows).rev() {
            let row: Vec<usize> = d.row_cols(r).collect();
            if let (Some(&lo), Some(&hi)) = (row.first(), row.last()) {
                if hi - lo + 1 != row.len() {
                    return None;
                }
                running = running.max(hi);
                outer[r - 1] = running;
                inner[r - 1] = lo - 1;
            } else {
                outer[r - 1] = running;
                inner[r - 1] = running;
            }
        }
        let outer = Partition::new(outer).ok()?;
        let inner = Partition::new(inner).ok()?;
        let shape = SkewShape::new(outer, inner).ok()?;
        (shape.diagram().cells == d.cells).then_some(shape)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Parses `outer/inner` with comma-separated parts, e.g. `3,2,1/1`.
impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::normal(s.parse()?)),
        }
    }
}

/// A finite set of cells. Cells are kept in row-major order; two diagrams
/// compare equal when they coincide after translating both so that their
/// top-most row and left-most column are 1.
#[derive(Clone, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Cell>", into = "Vec<Cell>")]
pub struct Diagram {
    cells: BTreeSet<Cell>,
}

impl Diagram {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if let Some(&bad) = cells.iter().find(|&&(r, c)| r == 0 || c == 0) {
            return Err(Error::InvalidCell(bad));
        }
        Ok(Diagram { cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn cell_set(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn min_row(&self) -> Option<usize> {
        self.cells.first().map(|c| c.0)
    }

    pub fn max_row(&self) -> Option<usize> {
        self.cells.last().map(|c| c.0)
    }

    pub fn min_col(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.1).min()
    }

    pub fn max_col(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.1).max()
    }

    /// Columns occupied in row `r`, ascending.
    pub fn row_cols(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.cells.range((r, 0)..=(r, usize::MAX)).map(|c| c.1)
    }

    /// Rows occupied in column `c`, ascending.
    pub fn col_rows(&self, c: usize) -> Vec<usize> {
        self.cells
            .iter()
            .filter(|cell| cell.1 == c)
            .map(|cell| cell.0)
            .collect()
    }

    /// A cell is a corner when neither the box below nor the box to its
    /// right belongs to the diagram.
    pub fn is_corner(&self, (r, c): Cell) -> bool {
        self.contains((r, c)) && !self.contains((r + 1, c)) && !self.contains((r, c + 1))
    }

    pub fn corners(&self) -> Vec<Cell> {
        self.cells().filter(|&c| self.is_corner(c)).collect()
    }

    /// True when every row and every column is a single run of cells.
    pub fn is_contiguous(&self) -> bool {
        let contiguous = |v: &[usize]| v.windows(2).all(|w| w[1] == w[0] + 1);
        let rows: BTreeSet<usize> = self.cells.iter().map(|c| c.0).collect();
        let cols: BTreeSet<usize> = self.cells.iter().map(|c| c.1).collect();
        rows.iter()
            .all(|&r| contiguous(&self.row_cols(r).collect::<Vec<_>>()))
            && cols.iter().all(|&c| contiguous(&self.col_rows(c)))
    }

    /// Shifts every cell by `(dr, dc)`; fails if a coordinate leaves the
    /// positive quadrant.
    pub fn translate(&self, dr: isize, dc: isize) -> Result<Diagram> {
        let cells = self
            .cells
            .iter()
            .map(|&c| shift(c, dr, dc))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(Diagram { cells })
    }

    /// The translate whose top row and left column are both 1.
    pub fn normalized(&self) -> Diagram {
        match (self.min_row(), self.min_col()) {
            (Some(r), Some(c)) => self
                .translate(1 - r as isize, 1 - c as isize)
                .expect("normalizing keeps coordinates positive"),
            _ => Diagram::default(),
        }
    }

    pub fn transpose(&self) -> Diagram {
        Diagram {
            cells: self.cells.iter().map(|&(r, c)| (c, r)).collect(),
        }
    }
}

pub(crate) fn shift((r, c): Cell, dr: isize, dc: isize) -> Result<Cell> {
    let r2 = r as isize + dr;
    let c2 = c as isize + dc;
    if r2 < 1 || c2 < 1 {
        return Err(Error::InvalidCell((r2.max(0) as usize, c2.max(0) as usize)));
    }
    Ok((r2 as usize, c2 as usize))
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.normalized().cells == other.normalized().cells
    }
}

impl Eq for Diagram {}

impl Hash for Diagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normalized().cells.hash(state);
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.cells.iter()).finish()
    }
}

impl TryFrom<Vec<Cell>> for Diagram {
    type Error = Error;

    fn try_from(cells: Vec<Cell>) -> Result<Self> {
        Diagram::new(cells)
    }
}

impl From<Diagram> for Vec<Cell> {
    fn from(d: Diagram) -> Self {
        d.cells.into_iter().collect()
    }
}

impl From<&Partition> for Diagram {
    fn from(p: &Partition) -> Self {
        p.diagram()
    }
}

impl From<&SkewShape> for Diagram {
    fn from(s: &SkewShape) -> Self {
        s.diagram()
    }
}

/// Right arm, left arm and body of a skew shape.
///
/// The right arm is the tail `(1, m + μ_1) ..= (1, λ_1)` of the first row with
/// `m = min(λ_2, Σ_{i≥2} (λ_i - μ_i))`; the left arm is the tail of the first
/// column defined by the conjugate formula. Arms are clipped to the cells of
/// the shape, so a one-box shape has both arms equal to that box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArmBodySplit {
    pub right_arm: Vec<Cell>,
    pub left_arm: Vec<Cell>,
    pub body: Vec<Cell>,
    pub m: usize,
    pub n: usize,
}

impl ArmBodySplit {
    pub fn is_arm(&self, cell: Cell) -> bool {
        self.right_arm.contains(&cell) || self.left_arm.contains(&cell)
    }
}

fn arm_offset(outer: &Partition, inner: &Partition) -> usize {
    let tail: usize = (2..=outer.length())
        .map(|i| outer.row(i) - inner.row(i))
        .sum();
    outer.row(2).min(tail)
}

pub fn arm_body(shape: &SkewShape) -> ArmBodySplit {
    let (outer, inner) = (shape.outer(), shape.inner());
    let (outer_t, inner_t) = (outer.conjugate(), inner.conjugate());
    let m = arm_offset(outer, inner);
    let n = arm_offset(&outer_t, &inner_t);

    let right_start = (m + inner.row(1)).max(inner.row(1) + 1);
    let right_arm: Vec<Cell> = (right_start..=outer.row(1)).map(|j| (1, j)).collect();
    let left_start = (n + inner_t.row(1)).max(inner_t.row(1) + 1);
    let left_arm: Vec<Cell> = (left_start..=outer_t.row(1)).map(|i| (i, 1)).collect();

    let body = shape
        .cells()
        .filter(|c| !right_arm.contains(c) && !left_arm.contains(c))
        .collect();
    ArmBodySplit {
        right_arm,
        left_arm,
        body,
        m,
        n,
    }
}

/// The skew shape `μ ∗ ν`: a `μ_1 × ν'_1` block of removed boxes with `μ`
/// hung below it and `ν` placed to its right.
pub fn star_shape(mu: &Partition, nu: &Partition) -> SkewShape {
    let width = mu.row(1);
    let height = nu.length();
    let mut outer: Vec<usize> = nu.parts().iter().map(|&p| width + p).collect();
    outer.extend_from_slice(mu.parts());
    let inner = vec![width; height];
    SkewShape::new(
        Partition::new(outer).expect("star outer shape is a partition"),
        Partition::new(inner).expect("rectangle is a partition"),
    )
    .expect("rectangle lies inside the star outer shape")
}

/// Offsets `(rows, cols)` by which the boxes of `μ` and of `ν` are shifted
/// inside `μ ∗ ν`: a box `(i, j)` of `μ` lands at `(i + ν'_1, j)` and a box
/// `(i, j)` of `ν` at `(i, j + μ_1)`.
pub fn star_offsets(mu: &Partition, nu: &Partition) -> (usize, usize) {
    (nu.length(), mu.row(1))
}

/// Placement of the three pieces of a winged diagram. A cell `(r, c)` of a
/// piece lands at `(r + dr, c + dc)` with that piece's offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WingedLayout {
    pub diagram: Diagram,
    pub alpha_offset: (isize, isize),
    pub delta_offset: (isize, isize),
    pub beta_offset: (isize, isize),
}

fn violated(condition: WingCondition, detail: String) -> Error {
    Error::WingConditionViolated { condition, detail }
}

/// Length of the run of consecutive values at the start of `v`.
fn leading_run(v: &[usize]) -> usize {
    if v.is_empty() {
        return 0;
    }
    1 + v.windows(2).take_while(|w| w[1] == w[0] + 1).count()
}

/// Glues `alpha` to the lower part of the left column of `delta` along `l0`
/// boxes and `beta` onto the right part of its top row along `l1` boxes.
pub fn winged_layout(
    alpha: &Diagram,
    l0: usize,
    delta: &Diagram,
    l1: usize,
    beta: &Diagram,
) -> Result<WingedLayout> {
    if l0 == 0 && !alpha.is_empty() {
        return Err(Error::DetachedWing { side: "left" });
    }
    if l1 == 0 && !beta.is_empty() {
        return Err(Error::DetachedWing { side: "right" });
    }

    // [W1]: highest run of the right-most column of alpha.
    let alpha_anchor = if l0 > 0 {
        let col = alpha.max_col().unwrap_or(0);
        let rows = alpha.col_rows(col);
        if leading_run(&rows) < l0 {
            return Err(violated(
                WingCondition::W1,
                format!("left wing has {} contiguous boxes in its right-most column, need {l0}", leading_run(&rows)),
            ));
        }
        Some((rows[0], col))
    } else {
        None
    };

    // [W2]: left run of the bottom row of beta.
    let beta_anchor = if l1 > 0 {
        let row = beta.max_row().unwrap_or(0);
        let cols: Vec<usize> = beta.row_cols(row).collect();
        if leading_run(&cols) < l1 {
            return Err(violated(
                WingCondition::W2,
                format!("right wing has {} contiguous boxes in its bottom row, need {l1}", leading_run(&cols)),
            ));
        }
        Some((row, cols[0]))
    } else {
        None
    };

    // [W3]: lowest run of delta's left column and right run of its top row.
    let mut alpha_offset = (0isize, 0isize);
    if let Some((a_row, a_col)) = alpha_anchor {
        let col = delta.min_col().unwrap_or(0);
        let mut rows = delta.col_rows(col);
        rows.reverse();
        let run = 1 + rows.windows(2).take_while(|w| w[1] + 1 == w[0]).count();
        if rows.is_empty() || run < l0 {
            return Err(violated(
                WingCondition::W3,
                format!("central diagram has fewer than {l0} contiguous boxes at the bottom of its left-most column"),
            ));
        }
        let bottom = rows[0];
        alpha_offset = (
            (bottom + 1 - l0) as isize - a_row as isize,
            col as isize - 1 - a_col as isize,
        );
    }
    let mut beta_offset = (0isize, 0isize);
    if let Some((b_row, b_col)) = beta_anchor {
        let row = delta.min_row().unwrap_or(0);
        let mut cols: Vec<usize> = delta.row_cols(row).collect();
        cols.reverse();
        let run = 1 + cols.windows(2).take_while(|w| w[1] + 1 == w[0]).count();
        if cols.is_empty() || run < l1 {
            return Err(violated(
                WingCondition::W3,
                format!("central diagram has fewer than {l1} contiguous boxes at the right of its top row"),
            ));
        }
        let right = cols[0];
        beta_offset = (
            row as isize - 1 - b_row as isize,
            (right + 1 - l1) as isize - b_col as isize,
        );
    }

    // Collect shifted cells in signed coordinates, then normalize.
    let mut all: Vec<(isize, isize)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (piece, (dr, dc)) in [
        (delta, (0, 0)),
        (alpha, alpha_offset),
        (beta, beta_offset),
    ] {
        for (r, c) in piece.cells() {
            let p = (r as isize + dr, c as isize + dc);
            if !seen.insert(p) {
                return Err(Error::WingOverlap((r, c)));
            }
            all.push(p);
        }
    }
    let min_r = all.iter().map(|p| p.0).min().unwrap_or(1);
    let min_c = all.iter().map(|p| p.1).min().unwrap_or(1);
    let (sr, sc) = (1 - min_r, 1 - min_c);
    let cells = all
        .iter()
        .map(|&(r, c)| ((r + sr) as usize, (c + sc) as usize));
    Ok(WingedLayout {
        diagram: Diagram::new(cells)?,
        alpha_offset: (alpha_offset.0 + sr, alpha_offset.1 + sc),
        delta_offset: (sr, sc),
        beta_offset: (beta_offset.0 + sr, beta_offset.1 + sc),
    })
}

/// The winged diagram `[α |_{l0} δ |_{l1} β]`, normalized to start at `(1, 1)`.
pub fn winged_shape(
    alpha: &Diagram,
    l0: usize,
    delta: &Diagram,
    l1: usize,
    beta: &Diagram,
) -> Result<Diagram> {
    winged_layout(alpha, l0, delta, l1, beta).map(|l| l.diagram)
}

/// Whether the left arm has at least `l0` boxes and the right arm at least
/// `l1` boxes.
pub fn check_w4(shape: &SkewShape, l0: usize, l1: usize) -> bool {
    let split = arm_body(shape);
    l0 <= split.left_arm.len() && l1 <= split.right_arm.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[6, 3, 3, 1, 1]).conjugate(), p(&[5, 3, 3, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn conjugate_by_column_count() {
        // Independent route: count cells per column of the diagram.
        for n in 0..=9 {
            for lam in Partition::all_of(n) {
                let d = lam.diagram();
                let cols: Vec<usize> = (1..=lam.row(1)).map(|c| d.col_rows(c).len()).collect();
                assert_eq!(lam.conjugate(), p(&cols));
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        let q = p(&[3, 1, 0, 0]);
        assert_eq!(q.parts(), &[3, 1]);
        assert_eq!(q.length(), 2);
        assert_eq!(q.weight(), 4);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn parse_and_display() {
        let s: SkewShape = "3,2,1/1".parse().unwrap();
        assert_eq!(s, skew(&[3, 2, 1], &[1]));
        assert_eq!(s.to_string(), "(3,2,1)/(1)");
        assert!("2/3".parse::<SkewShape>().is_err());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn arm_body_example() {
        let split = arm_body(&skew(&[6, 3, 3, 1, 1], &[2, 1]));
        assert_eq!(split.m, 3);
        assert_eq!(split.right_arm, vec![(1, 5), (1, 6)]);
        assert_eq!(split.n, 3);
        assert_eq!(split.left_arm, vec![(5, 1)]);
        assert_eq!(split.body.len(), 14 - 3 - 3);
    }

    #[test]
    fn arm_body_single_box() {
        let split = arm_body(&SkewShape::normal(p(&[1])));
        assert_eq!(split.m, 0);
        assert_eq!(split.right_arm, vec![(1, 1)]);
        assert_eq!(split.left_arm, vec![(1, 1)]);
        assert!(split.body.is_empty());
    }

    #[test]
    fn arm_body_expansion_example() {
        let split = arm_body(&skew(&[7, 3, 1, 1], &[2, 1]));
        assert_eq!(split.right_arm, vec![(1, 5), (1, 6), (1, 7)]);
        assert_eq!(split.left_arm, vec![(4, 1)]);
        assert_eq!(split.body, vec![(1, 3), (1, 4), (2, 2), (2, 3), (3, 1)]);
    }

    #[test]
    fn arm_sizes_match_formula_when_offsets_positive() {
        for n in 1..=7 {
            for lam in Partition::all_of(n) {
                for k in 0..n {
                    for mu in Partition::all_of(k).into_iter().filter(|m| lam.contains(m)) {
                        let shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
                        let split = arm_body(&shape);
                        let lt = lam.conjugate();
                        let mt = mu.conjugate();
                        if split.m > 0 {
                            let expect = (lam.row(1) + 1).saturating_sub(split.m + mu.row(1));
                            assert_eq!(split.right_arm.len(), expect, "{shape}");
                        }
                        if split.n > 0 {
                            let expect = (lt.row(1) + 1).saturating_sub(split.n + mt.row(1));
                            assert_eq!(split.left_arm.len(), expect, "{shape}");
                        }
                        let mut union: BTreeSet<Cell> = split.body.iter().copied().collect();
                        union.extend(split.right_arm.iter().copied());
                        union.extend(split.left_arm.iter().copied());
                        assert_eq!(&union, shape.diagram().cell_set());
                    }
                }
            }
        }
    }

    #[test]
    fn star_examples() {
        assert_eq!(star_shape(&p(&[2, 1]), &p(&[3, 2])), skew(&[5, 4, 2, 1], &[2, 2]));
        assert_eq!(star_shape(&Partition::empty(), &p(&[3, 2])), skew(&[3, 2], &[]));
        assert_eq!(
            star_shape(&p(&[2, 2, 1, 1]), &p(&[5, 2])),
            skew(&[7, 4, 2, 2, 1, 1], &[2, 2])
        );
        assert_eq!(star_shape(&p(&[2, 1]), &Partition::empty()), skew(&[2, 1], &[]));
    }

    #[test]
    fn star_transposes_to_conjugate_star() {
        for a in 0..=4 {
            for b in 0..=4 {
                for mu in Partition::all_of(a) {
                    for nu in Partition::all_of(b) {
                        let s = star_shape(&mu, &nu);
                        assert_eq!(s.size(), a + b);
                        let t = star_shape(&nu.conjugate(), &mu.conjugate());
                        assert_eq!(s.diagram().transpose().cell_set(), t.diagram().cell_set());
                        assert!(s.diagram().is_contiguous());
                    }
                }
            }
        }
    }

    #[test]
    fn winged_picture() {
        let alpha = p(&[2, 2, 1]).diagram();
        let beta = skew(&[4, 3, 3], &[2, 1]).diagram();
        let delta = p(&[4, 4, 2]).diagram();
        let d = winged_shape(&alpha, 1, &delta, 2, &beta).unwrap();
        let rows: Vec<Vec<usize>> = (1..=8).map(|r| d.row_cols(r).collect()).collect();
        assert_eq!(
            rows,
            vec![
                vec![7, 8],
                vec![6, 7],
                vec![5, 6, 7],
                vec![3, 4, 5, 6],
                vec![3, 4, 5, 6],
                vec![1, 2, 3, 4],
                vec![1, 2],
                vec![1],
            ]
        );
        assert!(d.is_contiguous());
    }

    #[test]
    fn winged_without_wings_is_delta() {
        let delta = p(&[3, 1]).diagram();
        let d = winged_shape(&Diagram::default(), 0, &delta, 0, &Diagram::default()).unwrap();
        assert_eq!(d, delta);
        assert_eq!(d.cell_set(), delta.cell_set());
    }

    #[test]
    fn winged_small() {
        let one = p(&[1]).diagram();
        let d = winged_shape(&one, 1, &p(&[2, 1]).diagram(), 1, &one).unwrap();
        assert_eq!(d.len(), 5);
        assert!(d.is_contiguous());
        let cells: Vec<Cell> = d.cells().collect();
        assert_eq!(cells, vec![(1, 3), (2, 2), (2, 3), (3, 1), (3, 2)]);
    }

    #[test]
    fn winged_condition_errors() {
        let one = p(&[1]).diagram();
        let delta = p(&[2, 1]).diagram();
        let err = winged_shape(&one, 2, &delta, 0, &Diagram::default()).unwrap_err();
        assert!(matches!(err, Error::WingConditionViolated { condition: WingCondition::W1, .. }));
        let err = winged_shape(&Diagram::default(), 0, &delta, 2, &one).unwrap_err();
        assert!(matches!(err, Error::WingConditionViolated { condition: WingCondition::W2, .. }));
        let tall = p(&[1, 1, 1]).diagram();
        let err = winged_shape(&tall, 3, &delta, 0, &Diagram::default()).unwrap_err();
        assert!(matches!(err, Error::WingConditionViolated { condition: WingCondition::W3, .. }));
        let err = winged_shape(&one, 0, &delta, 0, &Diagram::default()).unwrap_err();
        assert!(matches!(err, Error::DetachedWing { .. }));
    }

    #[test]
    fn w4_examples() {
        assert!(check_w4(&skew(&[5, 2, 1, 1], &[2, 1]), 1, 2));
        assert!(check_w4(&skew(&[4, 2, 1], &[1]), 0, 0));
        assert!(!check_w4(&skew(&[2, 1], &[]), 3, 0));
    }

    #[test]
    fn corners_and_skew_recovery() {
        let s = skew(&[4, 3, 3, 2], &[3, 1]);
        assert_eq!(s.inside_corners(), vec![(1, 3), (2, 1)]);
        assert_eq!(SkewShape::from_diagram(&s.diagram()), Some(s.clone()));
        assert_eq!(p(&[3, 1]).diagram().corners(), vec![(1, 3), (2, 1)]);
        let gap = Diagram::new([(1, 1), (1, 3)]).unwrap();
        assert_eq!(SkewShape::from_diagram(&gap), None);
    }

    #[test]
    fn diagram_equality_is_translation_invariant() {
        let a = skew(&[3], &[2]).diagram();
        assert_eq!(a, p(&[1]).diagram());
        assert_ne!(a.cell_set(), p(&[1]).diagram().cell_set());
    }
}
