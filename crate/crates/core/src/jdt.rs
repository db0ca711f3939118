//! Jeu de taquin: elementary slides, slides from inside corners, and
//! rectification with cell tracking.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::knuth::{label_off, phi_t};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tableaux::{is_ssyt, Tableau};

/// Which inside corner a rectification slides into next.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CornerPolicy {
    /// The corner in the lowest row of the inner shape.
    #[default]
    BottomRight,
    /// The corner in the highest row of the inner shape.
    TopLeft,
}

/// A rectified tableau together with the bijection from source cells to
/// the cells of the rectified shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectResult<T> {
    pub rectified: Tableau<T>,
    pub rho: BTreeMap<Cell, Cell>,
}

impl<T> RectResult<T> {
    pub fn shape(&self) -> Partition {
        normal_shape(&self.rectified)
    }
}

impl<T: Serialize> Serialize for RectResult<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rho: Vec<(Cell, Cell)> = self.rho.iter().map(|(&a, &b)| (a, b)).collect();
        let mut st = s.serialize_struct("RectResult", 2)?;
        st.serialize_field("rectified", &self.rectified)?;
        st.serialize_field("rho", &rho)?;
        st.end()
    }
}

fn normal_shape<T>(t: &Tableau<T>) -> Partition {
    let mut rows = Vec::new();
    for (r, _) in t.cells() {
        if rows.len() < r {
            rows.resize(r, 0);
        }
        rows[r - 1] += 1;
    }
    Partition::new(rows).expect("rectified tableaux have normal shape")
}

/// Moves the hole at `hole` one step: down when the entry below is at most
/// the entry to the right (or there is no right neighbour), otherwise right.
/// Returns the new tableau and the new hole position.
pub fn elementary_slide<T: Ord + Clone>(t: &Tableau<T>, hole: Cell) -> Result<(Tableau<T>, Cell)> {
    let mut out = t.clone();
    let next = step(&mut out, hole, |x, y| x <= y).ok_or(Error::NoNeighbor(hole))?;
    Ok((out, next))
}

fn step<T, F>(t: &mut Tableau<T>, (r, c): Cell, le: F) -> Option<Cell>
where
    F: Fn(&T, &T) -> bool,
{
    let down = (r + 1, c);
    let right = (r, c + 1);
    let target = match (t.get(down), t.get(right)) {
        (Some(a), Some(b)) => {
            if le(a, b) {
                down
            } else {
                right
            }
        }
        (Some(_), None) => down,
        (None, Some(_)) => right,
        (None, None) => return None,
    };
    let v = t.remove(target).expect("target cell is occupied");
    t.insert((r, c), v);
    Some(target)
}

fn inner_shape<T>(t: &Tableau<T>) -> Result<SkewShape> {
    SkewShape::from_diagram(&t.diagram()).ok_or(Error::NotSkew)
}

/// Slides into the inside corner `corner` until the hole reaches an
/// outside corner. Returns the new tableau and the path of the hole,
/// starting at `corner`.
pub fn slide<T: Ord + Clone>(t: &Tableau<T>, corner: Cell) -> Result<(Tableau<T>, Vec<Cell>)> {
    let shape = inner_shape(t)?;
    if !shape.inside_corners().contains(&corner) {
        return Err(Error::NotInsideCorner(corner));
    }
    let mut out = t.clone();
    let mut path = vec![corner];
    let mut hole = corner;
    while let Some(next) = step(&mut out, hole, |x, y| x <= y) {
        path.push(next);
        hole = next;
    }
    Ok((out, path))
}

fn pick(corners: &[Cell], policy: CornerPolicy) -> Option<Cell> {
    match policy {
        CornerPolicy::BottomRight => corners.last().copied(),
        CornerPolicy::TopLeft => corners.first().copied(),
    }
}

/// Inside corners of a tableau's inner shape, without re-deriving the shape
/// from scratch: `inner[i]` is the number of vacated cells in row `i + 1`.
fn corners_of(inner: &[usize]) -> Vec<Cell> {
    (0..inner.len())
        .filter(|&i| inner[i] > 0 && inner.get(i + 1).copied().unwrap_or(0) < inner[i])
        .map(|i| (i + 1, inner[i]))
        .collect()
}

/// Rectifies a semistandard skew tableau by repeated slides, tracking where
/// each source cell ends up.
pub fn rectify_with<T: Ord + Clone>(t: &Tableau<T>, policy: CornerPolicy) -> Result<RectResult<T>> {
    if !is_ssyt(t) {
        return Err(Error::NotSemistandard);
    }
    let shape = inner_shape(t)?;
    let mut tracked: Tableau<(T, Cell)> =
        Tableau::from_cells(t.iter().map(|(c, e)| (c, (e.clone(), c)))).expect("cells are positive");
    let mut inner: Vec<usize> = shape.inner().parts().to_vec();
    while let Some(corner) = pick(&corners_of(&inner), policy) {
        let mut hole = corner;
        while let Some(next) = step(&mut tracked, hole, |x, y| x.0 <= y.0) {
            hole = next;
        }
        inner[corner.0 - 1] -= 1;
        while inner.last() == Some(&0) {
            inner.pop();
        }
    }
    let rho = tracked.iter().map(|(dst, (_, src))| (*src, dst)).collect();
    Ok(RectResult {
        rectified: tracked.map(|(e, _)| e.clone()),
        rho,
    })
}

/// Rectifies a tableau of natural numbers. The cell bijection is computed on
/// the labeled lift, where all entries are distinct.
pub fn rectify(t: &Tableau<u32>) -> Result<RectResult<u32>> {
    let lifted = phi_t(t)?;
    let r = rectify_with(&lifted, CornerPolicy::default())?;
    Ok(RectResult {
        rectified: label_off(&r.rectified),
        rho: r.rho,
    })
}

/// Moves the entries of `v` along `rho`: the cell `rho(c)` receives the
/// entry of `v` at `c`.
pub fn transport_exponents<E: Clone, T>(v: &Tableau<E>, rect: &RectResult<T>) -> Result<Tableau<E>> {
    if v.len() != rect.rho.len() || v.cells().any(|c| !rect.rho.contains_key(&c)) {
        return Err(Error::ShapeMismatch(
            "exponent tableau and rectification have different source cells".into(),
        ));
    }
    Tableau::from_cells(v.iter().map(|(c, e)| (rect.rho[&c], e.clone())))
}

/// Where the arm cells of `shape` land after rectification to shape `nu`:
/// `(1, j)` of the right arm goes to `(1, j - λ_1 + ν_1)` and `(i, 1)` of the
/// left arm to `(i - λ'_1 + ν'_1, 1)`.
pub fn predicted_arm_positions(shape: &SkewShape, nu: &Partition) -> Vec<(Cell, Cell)> {
    let split = crate::shapes::arm_body(shape);
    let (lam1, nu1) = (shape.outer().row(1), nu.row(1));
    let (lam1t, nu1t) = (shape.outer().conjugate().row(1), nu.length());
    let mut out = Vec::new();
    for &(i, j) in &split.right_arm {
        out.push(((i, j), (1, (j + nu1).wrapping_sub(lam1))));
    }
    for &(i, j) in &split.left_arm {
        out.push(((i, j), ((i + nu1t).wrapping_sub(lam1t), 1)));
    }
    out
}
