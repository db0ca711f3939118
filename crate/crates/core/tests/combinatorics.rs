mod common;

use common::{p, small_skew_shapes};
use lrzeta::jdt::transport_exponents;
use lrzeta::knuth::{knuth_equivalent, label_off, label_off_word};
use lrzeta::lr::{count_ssyt, lr_table};
use lrzeta::tableaux::row_word;
use lrzeta::{
    arm_body, enumerate_ssyt, is_ssyt, lr_coeff_rect, lr_expand, p_tableau, phi_t, phi_w, rectify, Partition,
    SkewShape, Tableau, Word,
};
use num_bigint::BigUint;
use proptest::prelude::*;

/// A random semistandard tableau on one of the small shapes, with entries
/// bounded by `n` or by the tallest column if that is larger.
fn tableau() -> impl Strategy<Value = Tableau<u32>> {
    let shapes = small_skew_shapes(6);
    (0..shapes.len(), 1u32..=4, any::<prop::sample::Index>()).prop_map(move |(i, n, k)| {
        let d = shapes[i].diagram();
        let tallest = d.cells().map(|c| d.col_rows(c.1).len()).max().unwrap_or(1);
        let all: Vec<_> = enumerate_ssyt(&d, n.max(tallest as u32)).collect();
        all[k.index(all.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rectification_invariants(l in tableau()) {
        let r = rectify(&l).unwrap();
        prop_assert!(is_ssyt(&r.rectified));
        prop_assert_eq!(r.rectified.content(), l.content());
        prop_assert_eq!(&r.rectified, &p_tableau(&row_word(&l)));
        prop_assert!(knuth_equivalent(&row_word(&l), &row_word(&r.rectified)));
        let ids = Tableau::from_cells(l.cells().map(|c| (c, c))).unwrap();
        let moved = transport_exponents(&ids, &r).unwrap();
        prop_assert_eq!(moved.len(), l.len());
        prop_assert_eq!(moved.diagram(), r.rectified.diagram());
    }

    #[test]
    fn labeling_round_trips(l in tableau()) {
        let lifted = phi_t(&l).unwrap();
        prop_assert_eq!(label_off(&lifted), l.clone());
        prop_assert_eq!(row_word(&lifted), phi_w(&row_word(&l)));
        prop_assert_eq!(label_off_word(&phi_w(&row_word(&l))), row_word(&l));
    }

    #[test]
    fn insertion_is_semistandard(w in prop::collection::vec(1u32..=5, 0..10)) {
        let t = p_tableau(&Word(w.clone()));
        prop_assert!(is_ssyt(&t));
        prop_assert_eq!(t.len(), w.len());
        prop_assert_eq!(&p_tableau(&row_word(&t)), &t);
    }
}

#[test]
fn lr_symmetries() {
    for total in 1..=6 {
        for a in 0..=total {
            for mu in Partition::all_of(a) {
                for nu in Partition::all_of(total - a) {
                    let t = lr_table(&mu, &nu);
                    let swapped = lr_table(&nu, &mu);
                    let conj = lr_table(&mu.conjugate(), &nu.conjugate());
                    for e in &t.entries {
                        assert_eq!(swapped.coeff(&e.lambda), e.coeff, "{}: {mu} {nu}", e.lambda);
                        assert_eq!(conj.coeff(&e.lambda.conjugate()), e.coeff);
                    }
                    assert_eq!(t.entries.len(), swapped.entries.len());
                }
            }
        }
    }
}

/// The number of tableaux of a skew shape equals the weighted count over
/// its expansion.
#[test]
fn expansion_counts_tableaux() {
    for shape in small_skew_shapes(6) {
        let e = lr_expand(&shape);
        for n in 1..=3 {
            let lhs = BigUint::from(count_ssyt(&shape.diagram(), n));
            let rhs: BigUint = e
                .entries
                .iter()
                .map(|x| &x.coeff * BigUint::from(count_ssyt(&x.nu.diagram(), n)))
                .sum();
            assert_eq!(lhs, rhs, "{shape} N={n}");
        }
    }
}

#[test]
fn skew_expansion_matches_coefficients() {
    let shape: SkewShape = "5,3,2/2,1".parse().unwrap();
    let e = lr_expand(&shape);
    for nu in Partition::all_of(shape.size()) {
        assert_eq!(e.coeff(&nu), lr_coeff_rect(shape.outer(), shape.inner(), &nu).unwrap());
    }
}

#[test]
fn arm_sizes_on_examples() {
    let cases = [
        ("6,3,3,1,1/2,1", 2, 1),
        ("7,3,1,1/2,1", 3, 1),
        ("5,2,1,1/2,1", 2, 1),
        ("1", 1, 1),
    ];
    for (s, right, left) in cases {
        let split = arm_body(&s.parse().unwrap());
        assert_eq!(split.right_arm.len(), right, "{s}");
        assert_eq!(split.left_arm.len(), left, "{s}");
    }
    assert_eq!(lr_table(&p("1"), &p("1")).entries.len(), 2);
}
