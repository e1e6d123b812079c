mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use hopfpoly::polynomials::{
    faulhaber_poly, faulhaber_value, lagrange_interpolate, rat_frac, FaulhaberIndex, Rational, RationalPolynomial,
};
use hopfpoly::setcomb::{
    coloring_to_decomposition, constrained_sign_sum, enumerate_colorings, enumerate_compositions, refines,
    Decomposition, GroundSet, VertexSet,
};

#[test]
fn colorings_and_decompositions_are_inverse() {
    for k in 0..=4 {
        let ground = GroundSet::numbered(k);
        for n in 0..=3u32 {
            let all: Vec<_> = enumerate_colorings(&ground, n).collect();
            assert_eq!(all.len(), (n as usize).pow(k as u32));
            let distinct: BTreeSet<Vec<u32>> = all.iter().map(|c| c.colors().to_vec()).collect();
            assert_eq!(distinct.len(), all.len());
            let mut decompositions = BTreeSet::new();
            for c in &all {
                let d = coloring_to_decomposition(c);
                assert_eq!(d.len(), n as usize);
                assert_eq!(d.to_coloring().colors(), c.colors());
                decompositions.insert(d.parts().to_vec());
            }
            // every length-n decomposition arises exactly once
            assert_eq!(decompositions.len(), all.len());
            for parts in &decompositions {
                let d = Decomposition::new(ground.clone(), parts.clone()).unwrap();
                assert_eq!(coloring_to_decomposition(&d.to_coloring()), d);
            }
        }
    }
}

#[test]
fn sign_sum_identity() {
    // the ground elements are the blocks the arcs connect
    for k in 1..=4 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let ground = GroundSet::numbered(k);
        let labels: Vec<String> = ground.labels().map(String::from).collect();
        for p in enumerate_compositions(&ground) {
            assert_eq!(constrained_sign_sum(&p, &[] as &[(&str, &str)]).unwrap(), sign);
            for a in &labels {
                for b in labels.iter().filter(|b| *b != a) {
                    let index = |l: &String| p.part_of(ground.index_of(l).unwrap()).unwrap();
                    let expected = if index(b) < index(a) { 0 } else { sign };
                    assert_eq!(constrained_sign_sum(&p, &[(a, b)]).unwrap(), expected, "{p:?} {a}->{b}");
                }
            }
        }
    }
}

#[test]
fn refinement_is_a_preorder() {
    let all = enumerate_compositions(&GroundSet::numbered(3));
    assert_eq!(all.len(), 13);
    for p in &all {
        assert!(refines(p, p).unwrap());
    }
    for a in &all {
        for b in &all {
            if !refines(a, b).unwrap() {
                continue;
            }
            for c in &all {
                if refines(b, c).unwrap() {
                    assert!(refines(a, c).unwrap(), "{a:?} {b:?} {c:?}");
                }
            }
        }
    }
}

#[test]
fn faulhaber_polynomials_agree_with_sums() {
    let mut stack: Vec<Vec<u32>> = (1..8).map(|p| vec![p]).collect();
    let mut count = 0;
    while let Some(p) = stack.pop() {
        let d: u32 = p.iter().map(|x| x + 1).sum();
        for next in 1..=8u32.saturating_sub(d + 1) {
            let mut q = p.clone();
            q.push(next);
            stack.push(q);
        }
        let idx = FaulhaberIndex::new(p).unwrap();
        let poly = faulhaber_poly(&idx);
        for n in 0..=10 {
            assert_eq!(poly.eval_int(n), faulhaber_value(&idx, n), "{:?} at {n}", idx.exponents());
        }
        count += 1;
    }
    assert_eq!(count, 33);
}

#[test]
fn stirling_recurrence_oracle() {
    // the oracle itself: c(4, 2) = 11, c(5, 1) = 24
    assert_eq!(common::unsigned_stirling(4, 2), 11.into());
    assert_eq!(common::unsigned_stirling(5, 1), 24.into());
    for k in 1..=5usize {
        let idx = FaulhaberIndex::new(vec![1; k]).unwrap();
        for n in 0..=8usize {
            let expected = if k > n { 0.into() } else { common::unsigned_stirling(n, n - k) };
            assert_eq!(faulhaber_value(&idx, n as i64), Rational::from_integer(expected));
        }
    }
}

#[test]
fn vertex_set_subsets() {
    let s = VertexSet::from_indices([0, 2, 3]);
    assert_eq!(s.nonempty_subsets().count(), 7);
    assert!(s.nonempty_subsets().all(|t| t.is_subset(s) && !t.is_empty()));
}

proptest! {
    #[test]
    fn interpolation_round_trip(coeffs in proptest::collection::vec((-20i64..=20, 1i64..=6), 0..=7)) {
        let p = RationalPolynomial::new(coeffs.iter().map(|&(a, b)| rat_frac(a, b)).collect());
        let samples = coeffs.len().max(1) as i64;
        let points: Vec<(i64, Rational)> = (0..samples).map(|n| (n - 2, p.eval_int(n - 2))).collect();
        prop_assert_eq!(lagrange_interpolate(&points).unwrap(), p);
    }
}
