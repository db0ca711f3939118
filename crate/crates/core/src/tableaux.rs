//! Tableaux over ordered alphabets, the semistandard predicate, and
//! enumeration of semistandard fillings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::knuth::Word;
use crate::shapes::{shift, Cell, Diagram};

/// A labeled natural number `k_l`. Ordered lexicographically by `(k, l)`, so
/// `1_1 < 1_2 < 2_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct Labeled {
    pub value: u32,
    pub label: u32,
}

impl Labeled {
    pub fn new(value: u32, label: u32) -> Self {
        Labeled { value, label }
    }
}

impl From<(u32, u32)> for Labeled {
    fn from((value, label): (u32, u32)) -> Self {
        Labeled { value, label }
    }
}

impl From<Labeled> for (u32, u32) {
    fn from(l: Labeled) -> Self {
        (l.value, l.label)
    }
}

impl fmt::Display for Labeled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.label)
    }
}

/// A filling of a finite cell set. Every cell of the diagram carries exactly
/// one entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau<T> {
    entries: BTreeMap<Cell, T>,
}

impl<T> Default for Tableau<T> {
    fn default() -> Self {
        Tableau {
            entries: BTreeMap::new(),
        }
    }
}

impl<T> Tableau<T> {
    pub fn new(entries: BTreeMap<Cell, T>) -> Result<Self> {
        if let Some(&bad) = entries.keys().find(|&&(r, c)| r == 0 || c == 0) {
            return Err(Error::InvalidCell(bad));
        }
        Ok(Tableau { entries })
    }

    pub fn from_cells(cells: impl IntoIterator<Item = (Cell, T)>) -> Result<Self> {
        Tableau::new(cells.into_iter().collect())
    }

    /// Builds a tableau from rows, top row first; `None` marks a cell
    /// outside the diagram.
    pub fn from_rows(rows: Vec<Vec<Option<T>>>) -> Self {
        let entries = rows
            .into_iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.into_iter()
                    .enumerate()
                    .filter_map(move |(j, e)| e.map(|e| ((i + 1, j + 1), e)))
            })
            .collect();
        Tableau { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<&T> {
        self.entries.get(&cell)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.entries.contains_key(&cell)
    }

    /// Entries in row-major order of their cells.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, &T)> {
        self.entries.iter().map(|(&c, e)| (c, e))
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.entries.keys().copied()
    }

    pub fn values(&self) -> impl Iterator<Item = &T> {
        self.entries.values()
    }

    pub fn entries(&self) -> &BTreeMap<Cell, T> {
        &self.entries
    }

    pub fn into_entries(self) -> BTreeMap<Cell, T> {
        self.entries
    }

    pub fn diagram(&self) -> Diagram {
        Diagram::new(self.cells()).expect("tableau cells are positive")
    }

    pub fn insert(&mut self, cell: Cell, value: T) -> Option<T> {
        self.entries.insert(cell, value)
    }

    pub fn remove(&mut self, cell: Cell) -> Option<T> {
        self.entries.remove(&cell)
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Tableau<U> {
        Tableau {
            entries: self.entries.iter().map(|(&c, e)| (c, f(e))).collect(),
        }
    }

    pub fn translate(&self, dr: isize, dc: isize) -> Result<Tableau<T>>
    where
        T: Clone,
    {
        let entries = self
            .entries
            .iter()
            .map(|(&c, e)| shift(c, dr, dc).map(|c| (c, e.clone())))
            .collect::<Result<_>>()?;
        Ok(Tableau { entries })
    }

    pub fn transpose(&self) -> Tableau<T>
    where
        T: Clone,
    {
        Tableau {
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), e)| ((c, r), e.clone()))
                .collect(),
        }
    }

    /// Rows from the first row down to the last occupied one, each padded
    /// with `None` on the left up to its first cell.
    pub fn rows(&self) -> Vec<Vec<Option<&T>>> {
        let last = self.entries.keys().map(|c| c.0).max().unwrap_or(0);
        (1..=last)
            .map(|r| {
                let width = self
                    .entries
                    .range((r, 0)..=(r, usize::MAX))
                    .next_back()
                    .map(|(c, _)| c.1)
                    .unwrap_or(0);
                (1..=width).map(|c| self.entries.get(&(r, c))).collect()
            })
            .collect()
    }

    /// Entry multiset as value -> multiplicity.
    pub fn content(&self) -> BTreeMap<T, usize>
    where
        T: Ord + Clone,
    {
        let mut out = BTreeMap::new();
        for e in self.entries.values() {
            *out.entry(e.clone()).or_insert(0) += 1;
        }
        out
    }
}

impl<T: fmt::Display> fmt::Display for Tableau<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                match e {
                    Some(e) => write!(f, "{e}")?,
                    None => write!(f, ".")?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TableauOut<'a, T> {
    shape: Vec<Cell>,
    rows: Vec<Vec<Option<&'a T>>>,
}

#[derive(Deserialize)]
struct TableauIn<T> {
    #[serde(default)]
    shape: Option<Vec<Cell>>,
    rows: Vec<Vec<Option<T>>>,
}

impl<T: Serialize> Serialize for Tableau<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauOut {
            shape: self.cells().collect(),
            rows: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Tableau<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TableauIn::<T>::deserialize(d)?;
        let t = Tableau::from_rows(raw.rows);
        if let Some(shape) = raw.shape {
            let given: BTreeSet<Cell> = shape.into_iter().collect();
            let filled: BTreeSet<Cell> = t.cells().collect();
            if let Some(c) = given.symmetric_difference(&filled).next() {
                return Err(D::Error::custom(format!(
                    "cell ({}, {}) is in exactly one of `shape` and `rows`",
                    c.0, c.1
                )));
            }
        }
        Ok(t)
    }
}

/// Rows weakly increase to the right and columns strictly increase
/// downwards, checked on adjacent pairs.
pub fn is_ssyt<T: Ord>(t: &Tableau<T>) -> bool {
    t.iter().all(|((r, c), e)| {
        t.get((r, c + 1)).is_none_or(|right| e <= right)
            && t.get((r + 1, c)).is_none_or(|below| e < below)
    })
}

/// Rows read left to right, from the bottom row to the top.
pub fn row_word<T: Clone>(t: &Tableau<T>) -> Word<T> {
    let mut rows: Vec<Vec<T>> = Vec::new();
    let mut current = None;
    for ((r, _), e) in t.iter() {
        if current != Some(r) {
            rows.push(Vec::new());
            current = Some(r);
        }
        rows.last_mut().expect("row was pushed").push(e.clone());
    }
    Word(rows.into_iter().rev().flatten().collect())
}

/// Backtracking search over the entry vectors (row-major cell order) of the
/// semistandard fillings of a diagram.
///
/// Cells are filled in row-major order, so the left and upper neighbours of a
/// cell are always assigned first. The upper bound of a cell is reduced by
/// the number of cells directly beneath it in an unbroken run.
#[derive(Clone, Debug)]
pub struct SsytEntries {
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    below: Vec<u32>,
    max: u32,
    remaining: Option<Vec<usize>>,
    vals: Vec<u32>,
    started: bool,
    done: bool,
}

impl SsytEntries {
    pub fn new(d: &Diagram, max_entry: u32) -> Self {
        Self::build(d, max_entry, None)
    }

    /// Fillings whose entry multiset is `content` (value -> multiplicity).
    pub fn with_content(d: &Diagram, content: &BTreeMap<u32, usize>) -> Self {
        let max = content.keys().next_back().copied().unwrap_or(0);
        let mut remaining = vec![0usize; max as usize + 1];
        for (&v, &k) in content {
            remaining[v as usize] = k;
        }
        let total: usize = content.values().sum();
        let mut it = Self::build(d, max, Some(remaining));
        if total != d.len() || content.contains_key(&0) {
            it.done = true;
        }
        it
    }

    fn build(d: &Diagram, max: u32, remaining: Option<Vec<usize>>) -> Self {
        let cells: Vec<Cell> = d.cells().collect();
        let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let left = cells
            .iter()
            .map(|&(r, c)| index.get(&(r, c.wrapping_sub(1))).copied())
            .collect();
        let up = cells
            .iter()
            .map(|&(r, c)| index.get(&(r.wrapping_sub(1), c)).copied())
            .collect();
        let below = cells
            .iter()
            .map(|&(r, c)| (1..).take_while(|k| d.contains((r + k, c))).count() as u32)
            .collect();
        SsytEntries {
            cells,
            left,
            up,
            below,
            max,
            remaining,
            vals: Vec::new(),
            started: false,
            done: false,
        }
    }

    /// Cells in the order matching the yielded entry vectors.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    fn lower(&self, p: usize) -> u32 {
        let mut lb = 1;
        if let Some(l) = self.left[p] {
            lb = lb.max(self.vals[l]);
        }
        if let Some(u) = self.up[p] {
            lb = lb.max(self.vals[u] + 1);
        }
        lb
    }

    fn available(&self, v: u32) -> bool {
        self.remaining
            .as_ref()
            .is_none_or(|rem| rem[v as usize] > 0)
    }

    fn push(&mut self, v: u32) {
        if let Some(rem) = self.remaining.as_mut() {
            rem[v as usize] -= 1;
        }
        self.vals.push(v);
    }

    fn pop(&mut self) -> u32 {
        let v = self.vals.pop().expect("pop on non-empty prefix");
        if let Some(rem) = self.remaining.as_mut() {
            rem[v as usize] += 1;
        }
        v
    }
}

impl Iterator for SsytEntries {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let n = self.cells.len();
        let mut candidate = if self.started {
            if n == 0 {
                self.done = true;
                return None;
            }
            self.pop() + 1
        } else {
            self.started = true;
            if n == 0 {
                return Some(Vec::new());
            }
            0
        };
        loop {
            let p = self.vals.len();
            let start = candidate.max(self.lower(p));
            let upper = self.max.saturating_sub(self.below[p]);
            match (start..=upper).find(|&v| self.available(v)) {
                Some(v) => {
                    self.push(v);
                    if self.vals.len() == n {
                        return Some(self.vals.clone());
                    }
                    candidate = 0;
                }
                None => {
                    if p == 0 {
                        self.done = true;
                        return None;
                    }
                    candidate = self.pop() + 1;
                }
            }
        }
    }
}

fn assemble(cells: &[Cell], vals: Vec<u32>) -> Tableau<u32> {
    Tableau {
        entries: cells.iter().copied().zip(vals).collect(),
    }
}

/// All semistandard tableaux of shape `d` with entries in `1..=max_entry`,
/// ordered lexicographically by their row-major entry vectors.
pub fn enumerate_ssyt(d: &Diagram, max_entry: u32) -> impl Iterator<Item = Tableau<u32>> {
    let it = SsytEntries::new(d, max_entry);
    let cells = it.cells().to_vec();
    it.map(move |v| assemble(&cells, v))
}

/// All semistandard tableaux of shape `d` whose entries, as a multiset, equal
/// `content`.
pub fn enumerate_ssyt_with_content(
    d: &Diagram,
    content: &[u32],
) -> impl Iterator<Item = Tableau<u32>> {
    let mut counts = BTreeMap::new();
    for &v in content {
        *counts.entry(v).or_insert(0usize) += 1;
    }
    let it = SsytEntries::with_content(d, &counts);
    let cells = it.cells().to_vec();
    it.map(move |v| assemble(&cells, v))
}
