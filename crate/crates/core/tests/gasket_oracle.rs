//! Gasket generation checked against independent enumerations.

mod common;

use inversive::apollonian::{generate, seed_from_curvatures, GenerationLimits, DEDUP_QUANTUM};
use inversive::descartes::tangency_residual;
use inversive::minkowski::{inner, verify_generalized};

fn classic_gasket(depth: u32) -> inversive::apollonian::Gasket {
    let seed = seed_from_curvatures(&[-1.0, 2.0, 2.0, 3.0]).unwrap();
    generate(&seed, GenerationLimits::depth(depth)).unwrap()
}

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}

#[test]
fn curvatures_match_integer_recurrence() {
    let g = classic_gasket(6);
    let oracle = common::integer_tree_curvatures([3, 2, 2, -1], 6);
    for (depth, expected) in oracle.into_iter().enumerate() {
        let got: Vec<f64> =
            g.disks().iter().filter(|d| d.depth == depth as u32).map(|d| d.vector.beta).collect();
        for k in &got {
            assert!((k - k.round()).abs() <= 1e-6, "depth {depth}: {k}");
        }
        let got = sorted(got.iter().map(|k| k.round() as i64).collect());
        assert_eq!(got, sorted(expected), "depth {depth}");
    }
}

#[test]
fn integrality_through_depth_eight() {
    let g = classic_gasket(8);
    assert!(g.disks().iter().all(|d| (d.vector.beta - d.vector.beta.round()).abs() <= 1e-6));
}

#[test]
fn depth_one_new_curvatures() {
    let oracle = common::integer_tree_curvatures([-1, 2, 2, 3], 1);
    assert_eq!(sorted(oracle[1].clone()), vec![3, 6, 6, 15]);
}

#[test]
fn quadruple_census_by_enumeration() {
    let g = classic_gasket(4);
    let raw = common::integer_tree_curvatures([-1, 2, 2, 3], 4);
    for d in 1..=4u32 {
        assert_eq!(raw[d as usize].len(), 4 * 3usize.pow(d - 1));
        assert_eq!(g.quadruple_count_at_depth(d), 4 * 3usize.pow(d - 1));
    }
}

#[test]
fn dedup_agrees_with_all_pairs_oracle() {
    for depth in 0..=4 {
        let g = classic_gasket(depth);
        let raw = common::raw_tree(*g.seed().members(), depth);
        let vectors: Vec<_> = raw.iter().map(|(v, _)| *v).collect();
        assert_eq!(common::brute_force_distinct(&vectors, DEDUP_QUANTUM), g.len(), "depth {depth}");
    }
    // The strip seed has a halfplane pair; duplicates appear there only if
    // the walk revisits a disk.
    let strip = seed_from_curvatures(&[0.0, 0.0, 1.0, 1.0]).unwrap();
    for depth in 0..=4 {
        let g = generate(&strip, GenerationLimits::depth(depth)).unwrap();
        let raw = common::raw_tree(*strip.members(), depth);
        let vectors: Vec<_> = raw.iter().map(|(v, _)| *v).collect();
        assert_eq!(common::brute_force_distinct(&vectors, DEDUP_QUANTUM), g.len(), "strip depth {depth}");
    }
}

#[test]
fn generated_disks_never_overlap() {
    let g = classic_gasket(3);
    let positive: Vec<_> = g.disks().iter().filter(|d| d.vector.beta > 0.0).collect();
    for (i, a) in positive.iter().enumerate() {
        for b in &positive[i + 1..] {
            let p = inner(&a.vector, &b.vector);
            let tangent = (p - 1.0).abs() <= 1e-6;
            assert!(tangent || p > 1.0, "overlap: product {p}");
        }
    }
}

#[test]
fn generation_is_deterministic() {
    let a = classic_gasket(5);
    let b = classic_gasket(5);
    assert_eq!(a.disks(), b.disks());
    assert_eq!(a.quadruples(), b.quadruples());
}

#[test]
fn every_quadruple_satisfies_generalized_identity() {
    let g = classic_gasket(6);
    for id in 0..g.quadruples().len() {
        let vs = g.quadruple_vectors(id);
        assert!(verify_generalized(&vs).unwrap() <= 1e-7, "quadruple {id}");
        assert!(tangency_residual(&vs) <= 1e-6);
    }
}

#[test]
fn curvature_cap_matches_filtered_enumeration() {
    let cap = 100.0;
    let g = generate(
        &seed_from_curvatures(&[-1.0, 2.0, 2.0, 3.0]).unwrap(),
        GenerationLimits::default().with_max_curvature(cap),
    )
    .unwrap();
    // Reflection never shrinks curvature along a branch, so the capped
    // gasket is the integer tree pruned at the cap.
    let mut expected = vec![-1i64, 2, 2, 3];
    let mut frontier = vec![([-1i64, 2, 2, 3], None::<usize>)];
    while let Some((q, skip)) = frontier.pop() {
        for i in (0..4).filter(|&i| Some(i) != skip) {
            let mut child = q;
            child[i] = 2 * (q.iter().sum::<i64>() - q[i]) - q[i];
            if child[i] as f64 <= cap {
                expected.push(child[i]);
                frontier.push((child, Some(i)));
            }
        }
    }
    let got: Vec<i64> = g.disks().iter().map(|d| d.vector.beta.round() as i64).collect();
    assert_eq!(sorted(got), sorted(expected));
}
