//! Words, Knuth moves, Schensted insertion and the labeling maps.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::{is_ssyt, row_word, Labeled, Tableau};

/// A finite word over an ordered alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word<T>(pub Vec<T>);

impl<T> Word<T> {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<T: Clone> Word<T> {
    /// Juxtaposition `self · other`.
    pub fn concat(&self, other: &Word<T>) -> Word<T> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl<T> From<Vec<T>> for Word<T> {
    fn from(v: Vec<T>) -> Self {
        Word(v)
    }
}

/// Words obtained from `w` by one elementary Knuth move, in either
/// direction: `bca <-> bac` when `a < b <= c`, and `acb <-> cab` when
/// `a <= b < c`.
pub fn knuth_moves<T: Ord + Clone>(w: &Word<T>) -> BTreeSet<Word<T>> {
    let mut out = BTreeSet::new();
    let v = &w.0;
    for i in 0..v.len().saturating_sub(2) {
        let (x, y, z) = (&v[i], &v[i + 1], &v[i + 2]);
        // bca -> bac and bac -> bca swap the last two letters.
        if (z < x && x <= y) || (y < x && x <= z) {
            let mut u = v.clone();
            u.swap(i + 1, i + 2);
            out.insert(Word(u));
        }
        // acb -> cab and cab -> acb swap the first two letters.
        if (x <= z && z < y) || (y <= z && z < x) {
            let mut u = v.clone();
            u.swap(i, i + 1);
            out.insert(Word(u));
        }
    }
    out
}

/// Row-inserts `x`, bumping the leftmost entry strictly greater than the
/// inserted letter at each row.
fn row_insert<T: Ord>(rows: &mut Vec<Vec<T>>, mut x: T) {
    for row in rows.iter_mut() {
        match row.iter().position(|y| *y > x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return;
            }
        }
    }
    rows.push(vec![x]);
}

/// The normal-shape semistandard tableau Knuth equivalent to `w`, built by
/// Schensted row insertion.
pub fn p_tableau<T: Ord + Clone>(w: &Word<T>) -> Tableau<T> {
    let mut rows: Vec<Vec<T>> = Vec::new();
    for x in &w.0 {
        row_insert(&mut rows, x.clone());
    }
    Tableau::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(Some).collect())
            .collect(),
    )
}

/// Whether two words are Knuth equivalent, decided by comparing insertion
/// tableaux.
pub fn knuth_equivalent<T: Ord + Clone>(a: &Word<T>, b: &Word<T>) -> bool {
    p_tableau(a) == p_tableau(b)
}

/// Labels each letter `k` with its occurrence index among the letters equal
/// to `k`, scanning left to right.
pub fn phi_w(w: &Word<u32>) -> Word<Labeled> {
    let mut seen: BTreeMap<u32, u32> = BTreeMap::new();
    Word(
        w.0.iter()
            .map(|&k| {
                let l = seen.entry(k).or_insert(0);
                *l += 1;
                Labeled::new(k, *l)
            })
            .collect(),
    )
}

/// Labels the entries of a semistandard tableau in row-word order: bottom
/// row to top, left to right within each row.
pub fn phi_t(t: &Tableau<u32>) -> Result<Tableau<Labeled>> {
    if !is_ssyt(t) {
        return Err(Error::NotSemistandard);
    }
    let labels = phi_w(&row_word(t)).0;
    let mut cells: Vec<_> = t.cells().collect();
    // Row-word order visits rows bottom-up.
    cells.sort_by_key(|&(r, c)| (std::cmp::Reverse(r), c));
    Ok(Tableau::from_cells(cells.into_iter().zip(labels)).expect("cells come from a tableau"))
}

pub fn label_off_word(w: &Word<Labeled>) -> Word<u32> {
    Word(w.0.iter().map(|l| l.value).collect())
}

pub fn label_off(t: &Tableau<Labeled>) -> Tableau<u32> {
    t.map(|l| l.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::VecDeque;

    fn w(s: &str) -> Word<u32> {
        Word(s.chars().map(|c| c.to_digit(10).unwrap()).collect())
    }

    fn knuth_class(start: &Word<u32>) -> BTreeSet<Word<u32>> {
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(x) = queue.pop_front() {
            for y in knuth_moves(&x) {
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    fn all_words(len: usize, alphabet: u32) -> Vec<Word<u32>> {
        let mut out = vec![Word(Vec::new())];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (1..=alphabet).map(move |a| {
                        let mut u = v.0.clone();
                        u.push(a);
                        Word(u)
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn elementary_moves() {
        assert!(knuth_moves(&w("231")).contains(&w("213")));
        assert!(knuth_moves(&w("213")).contains(&w("231")));
        assert!(knuth_moves(&w("151324")).contains(&w("153124")));
        assert!(knuth_moves(&Word::<u32>(vec![])).is_empty());
    }

    #[test]
    fn moves_are_symmetric() {
        for len in 0..=5 {
            for x in all_words(len, 3) {
                for y in knuth_moves(&x) {
                    assert!(knuth_moves(&y).contains(&x), "{x:?} -> {y:?}");
                }
            }
        }
    }

    #[test]
    fn insertion_examples() {
        let m = Tableau::from_rows(vec![
            vec![Some(1), Some(1), Some(1)],
            vec![Some(2), Some(3), Some(4)],
            vec![Some(3)],
        ]);
        assert_eq!(p_tableau(&row_word(&m)), m);
        let expect = Tableau::from_rows(vec![vec![Some(1), Some(2)], vec![Some(2), Some(3)]]);
        assert_eq!(p_tableau(&w("2132")), expect);
    }

    #[test]
    fn insertion_decides_bfs_classes() {
        for len in 0..=5 {
            let words = all_words(len, 3);
            let mut classes: BTreeMap<Word<u32>, Tableau<u32>> = BTreeMap::new();
            for x in &words {
                if classes.contains_key(x) {
                    continue;
                }
                let p = p_tableau(x);
                for y in knuth_class(x) {
                    assert_eq!(p_tableau(&y), p);
                    classes.insert(y, p.clone());
                }
            }
            let distinct: BTreeSet<_> = classes.values().collect();
            let by_p: BTreeSet<_> = words.iter().map(p_tableau).collect();
            assert_eq!(distinct.len(), by_p.len(), "length {len}");
        }
    }

    #[test]
    fn labeling_examples() {
        let lw = phi_w(&w("3234111"));
        let pairs: Vec<(u32, u32)> = lw.0.iter().map(|&l| l.into()).collect();
        assert_eq!(pairs, vec![(3, 1), (2, 1), (3, 2), (4, 1), (1, 1), (1, 2), (1, 3)]);
        assert!(phi_w(&Word(vec![])).is_empty());
        let ones: Vec<(u32, u32)> = phi_w(&w("111")).0.iter().map(|&l| l.into()).collect();
        assert_eq!(ones, vec![(1, 1), (1, 2), (1, 3)]);

        let l = Tableau::from_rows(vec![
            vec![Some(1), Some(1), Some(1)],
            vec![Some(2), Some(3), Some(4)],
            vec![Some(3)],
        ]);
        let lab = |k, l| Some(Labeled::new(k, l));
        assert_eq!(
            phi_t(&l).unwrap(),
            Tableau::from_rows(vec![
                vec![lab(1, 1), lab(1, 2), lab(1, 3)],
                vec![lab(2, 1), lab(3, 2), lab(4, 1)],
                vec![lab(3, 1)],
            ])
        );
        let skew = Tableau::from_rows(vec![vec![None, Some(2)], vec![Some(1), Some(3)], vec![Some(2)]]);
        assert_eq!(
            phi_t(&skew).unwrap(),
            Tableau::from_rows(vec![
                vec![None, lab(2, 2)],
                vec![lab(1, 1), lab(3, 1)],
                vec![lab(2, 1)],
            ])
        );
        assert_eq!(phi_t(&Tableau::from_rows(vec![vec![Some(5)]])).unwrap().get((1, 1)), Some(&Labeled::new(5, 1)));
        let bad = Tableau::from_rows(vec![vec![Some(2), Some(1)]]);
        assert_eq!(phi_t(&bad), Err(Error::NotSemistandard));
    }

    proptest! {
        #[test]
        fn labeling_off_inverts(v in proptest::collection::vec(1u32..5, 0..8)) {
            let x = Word(v);
            prop_assert_eq!(label_off_word(&phi_w(&x)), x);
        }

        #[test]
        fn insertion_is_semistandard_and_equivalent(v in proptest::collection::vec(1u32..5, 0..7)) {
            let x = Word(v);
            let p = p_tableau(&x);
            prop_assert!(is_ssyt(&p));
            prop_assert!(knuth_class(&x).contains(&row_word(&p)));
        }
    }
}
