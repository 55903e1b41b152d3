use std::collections::BTreeSet;

use divgraph::graph::{build_b, build_d, build_gamma, components, size_set, GraphKind, UGraph, Vertex};
use divgraph::{class_size_sym, class_sizes_alt, enumerate_cycle_types, CycleType, FactoredNat, Group};
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

/// p(n) by Euler's pentagonal number recurrence.
fn partition_numbers(max: usize) -> Vec<u64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut total = 0i64;
        for k in 1.. {
            let k = k as i64;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                total += sign * p[n - g2];
            }
        }
        p[n] = total;
    }
    p.into_iter().map(|x| x as u64).collect()
}

#[test]
fn partition_counts_match_pentagonal_recurrence() {
    let p = partition_numbers(30);
    for n in 1..=30u32 {
        let types = enumerate_cycle_types(n).unwrap();
        assert_eq!(types.len() as u64, p[n as usize], "n = {n}");
        assert!(types.windows(2).all(|w| w[0] < w[1]), "n = {n} not strictly ascending");
        assert!(types[0].is_identity());
    }
}

fn cycle_type() -> impl Strategy<Value = CycleType> {
    (1u32..=20).prop_flat_map(|n| {
        let types = enumerate_cycle_types(n).unwrap();
        let len = types.len();
        (0..len).prop_map(move |i| types[i].clone())
    })
}

proptest! {
    #[test]
    fn power_composes(ct in cycle_type(), a in 1u32..=30, b in 1u32..=30) {
        prop_assert_eq!(&ct.power(1).unwrap(), &ct);
        let stepwise = ct.power(a).unwrap().power(b).unwrap();
        prop_assert_eq!(stepwise, ct.power(a * b).unwrap());
        prop_assert_eq!(ct.power(a).unwrap().n(), ct.n());
    }

    #[test]
    fn splitting_structure(ct in cycle_type()) {
        if !ct.is_even() {
            prop_assert!(ct.splits_in_alternating().is_err());
            return Ok(());
        }
        let s = class_size_sym(&ct).unwrap();
        let a = class_sizes_alt(&ct).unwrap();
        let total = a.sizes().iter().fold(BigUint::zero(), |acc, x| acc + x.to_biguint());
        if a.is_split() {
            prop_assert!(ct.splits_in_alternating().unwrap());
            prop_assert!(ct.lengths().all(|l| l % 2 == 1));
            prop_assert_eq!(a.sizes().len(), 2);
            prop_assert_eq!(total, s.to_biguint());
        } else {
            prop_assert!(!ct.splits_in_alternating().unwrap());
            prop_assert_eq!(total, s.to_biguint());
        }
    }

    #[test]
    fn display_round_trips(ct in cycle_type()) {
        let text = ct.to_string();
        prop_assert_eq!(text.parse::<CycleType>().unwrap(), ct);
    }
}

const SMALL_PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

fn factored_value() -> impl Strategy<Value = FactoredNat> {
    proptest::collection::vec(0u32..=6, SMALL_PRIMES.len()).prop_map(|exps| {
        FactoredNat::from_factors(SMALL_PRIMES.iter().copied().zip(exps).filter(|&(_, e)| e > 0)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn divides_agrees_with_remainder(a in factored_value(), b in factored_value()) {
        let (x, y) = (a.to_biguint(), b.to_biguint());
        prop_assert_eq!(divgraph::divides(&a, &b), (&y % &x).is_zero());
        let product = &a * &b;
        prop_assert!(divgraph::divides(&a, &product));
        prop_assert_eq!(product.checked_div(&b).unwrap(), a);
    }
}

#[test]
fn divisibility_edges_are_common_divisor_edges() {
    for group in [Group::Symmetric, Group::Alternating] {
        for n in 1..=20 {
            let set = size_set(n, group).unwrap();
            let d = build_d(&set).unwrap();
            let g = build_gamma(&set).unwrap();
            assert_eq!(d.vertex_count(), g.vertex_count());
            for (a, b) in d.edges() {
                assert!(g.has_edge(a, b), "{group:?} n={n}: {a}-{b}");
            }
        }
    }
}

#[test]
fn bipartite_graph_is_bipartite() {
    for group in [Group::Symmetric, Group::Alternating] {
        for n in 1..=18 {
            let set = size_set(n, group).unwrap();
            let b = build_b(&set).unwrap();
            assert_eq!(b.kind(), GraphKind::B);
            for (x, y) in b.edges() {
                let kinds = (&b.vertices()[x], &b.vertices()[y]);
                assert!(matches!(kinds, (Vertex::Prime(_), Vertex::Size(_)) | (Vertex::Size(_), Vertex::Prime(_))));
            }
        }
    }
}

#[test]
fn vertex_count_is_number_of_distinct_nontrivial_sizes() {
    for n in 1..=20 {
        let mut distinct = BTreeSet::new();
        for ct in enumerate_cycle_types(n).unwrap() {
            let s = class_size_sym(&ct).unwrap().to_biguint();
            if s != BigUint::from(1u32) {
                distinct.insert(s);
            }
        }
        let g = build_d(&size_set(n, Group::Symmetric).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), distinct.len(), "n = {n}");
    }
}

fn random_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=200).prop_flat_map(|n| {
        let edges = proptest::collection::vec((0..n, 0..n), 0..(3 * n));
        (Just(n), edges)
    })
}

fn labelled(n: usize, edges: &[(usize, usize)], relabel: &[usize]) -> UGraph {
    let vertices = (0..n).map(|i| Vertex::Prime(relabel[i] as u64)).collect();
    UGraph::from_edges(GraphKind::D, vertices, edges.iter().copied().filter(|(a, b)| a != b)).unwrap()
}

fn floyd_warshall_diameters(n: usize, edges: &[(usize, usize)]) -> (Vec<BTreeSet<usize>>, u32) {
    const INF: u32 = u32::MAX / 2;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(a, b) in edges {
        if a != b {
            d[a][b] = 1;
            d[b][a] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    let mut comps: Vec<BTreeSet<usize>> = Vec::new();
    let mut diameter = 0;
    for row in &d {
        let reach: BTreeSet<usize> = (0..n).filter(|&j| row[j] < INF).collect();
        diameter = diameter.max(reach.iter().map(|&j| row[j]).max().unwrap());
        if !comps.contains(&reach) {
            comps.push(reach);
        }
    }
    comps.sort();
    (comps, diameter)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bfs_diameter_matches_floyd_warshall((n, edges) in random_graph()) {
        let identity: Vec<usize> = (0..n).collect();
        let g = labelled(n, &edges, &identity);
        let report = components(&g);
        let (expected_comps, expected_diam) = floyd_warshall_diameters(n, &edges);
        let mut got: Vec<BTreeSet<usize>> = report
            .components
            .iter()
            .map(|c| c.iter().map(|v| match v { Vertex::Prime(p) => *p as usize, Vertex::Size(_) => unreachable!() }).collect())
            .collect();
        got.sort();
        prop_assert_eq!(got, expected_comps);
        prop_assert_eq!(report.overall_diameter(), Some(expected_diam));
    }

    #[test]
    fn components_invariant_under_relabelling((n, edges) in random_graph(), seed in any::<u64>()) {
        let identity: Vec<usize> = (0..n).collect();
        let mut relabel = identity.clone();
        // Fisher-Yates driven by a tiny LCG so the permutation is reproducible from `seed`.
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            relabel.swap(i, (state >> 33) as usize % (i + 1));
        }
        let a = components(&labelled(n, &edges, &identity));
        let b = components(&labelled(n, &edges, &relabel));
        let image = |v: &Vertex| match v { Vertex::Prime(p) => Vertex::Prime(relabel[*p as usize] as u64), other => other.clone() };
        let mut mapped: Vec<(BTreeSet<Vertex>, u32)> = a
            .components
            .iter()
            .zip(a.diameters.as_ref().unwrap())
            .map(|(c, &d)| (c.iter().map(image).collect(), d))
            .collect();
        let mut direct: Vec<(BTreeSet<Vertex>, u32)> = b
            .components
            .iter()
            .zip(b.diameters.as_ref().unwrap())
            .map(|(c, &d)| (c.iter().cloned().collect(), d))
            .collect();
        mapped.sort();
        direct.sort();
        prop_assert_eq!(mapped, direct);
    }
}
