//! Catalog counts against independent enumerations.

#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::BTreeSet;

use itdom_core::graph::{canonical_graph6, enumerate_connected_graphs, parse_graph6};
use itdom_core::Graph;

const ATLAS: &str = include_str!("fixtures/atlas_connected_le7.g6");

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partitions(n: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for k in (1..=max.min(n)).rev() {
        cur.push(k);
        partitions(n - k, k, cur, out);
        cur.pop();
    }
}

/// Unlabelled graphs on `n` vertices by Burnside's lemma over cycle types
/// of the symmetric group acting on vertex pairs.
fn unlabelled_graphs(n: u64) -> u128 {
    let fact: u128 = (1..=n as u128).product();
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    let mut total: u128 = 0;
    for p in parts {
        let mut cycles: u64 = p.iter().map(|&k| k / 2).sum();
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                cycles += gcd(p[i], p[j]);
            }
        }
        // Centralizer size: prod k^{m_k} m_k!.
        let mut z: u128 = 1;
        let mut k = 0;
        while k < p.len() {
            let mut m = 0;
            while k + m < p.len() && p[k + m] == p[k] {
                m += 1;
            }
            for i in 1..=m as u128 {
                z *= p[k] as u128 * i;
            }
            k += m;
        }
        total += (fact / z) << cycles;
    }
    total / fact
}

/// Connected counts from all-graph counts by the inverse Euler transform.
fn connected_counts(max: usize) -> Vec<i128> {
    let a: Vec<i128> = (0..=max as u64)
        .map(|n| {
            if n == 0 {
                0
            } else {
                unlabelled_graphs(n) as i128
            }
        })
        .collect();
    let mut c = vec![0i128; max + 1];
    let mut b = vec![0i128; max + 1];
    for n in 1..=max {
        // a_n = (1/n) sum_{k=1..n} b_k a_{n-k} with a_0 = 1, b_k = sum_{d|k} d c_d.
        let a_at = |i: usize| if i == 0 { 1 } else { a[i] };
        let mut s = n as i128 * a_at(n);
        for k in 1..n {
            s -= b[k] * a_at(n - k);
        }
        b[n] = s;
        let mut rest = b[n];
        for d in 1..n {
            if n % d == 0 {
                rest -= d as i128 * c[d];
            }
        }
        c[n] = rest / n as i128;
    }
    c
}

#[test]
fn burnside_counts_match_known_totals() {
    let all: Vec<u128> = (1..=7).map(unlabelled_graphs).collect();
    assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn catalog_sizes_match_counting_oracle() {
    let expected = connected_counts(7);
    let mut total = 0;
    for n in 1..=7 {
        let cat = enumerate_connected_graphs(n).unwrap();
        assert_eq!(cat.len() as i128, expected[n], "order {n}");
        total += cat.len();
    }
    assert_eq!(total, 996);
}

#[test]
fn catalog_matches_labelled_sweep_up_to_six() {
    for n in 1..=6 {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut classes = BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            if g.is_connected() {
                classes.insert(canonical_graph6(&g).unwrap());
            }
        }
        let cat: BTreeSet<String> = enumerate_connected_graphs(n)
            .unwrap()
            .into_iter()
            .map(|e| e.graph6)
            .collect();
        assert_eq!(classes, cat, "order {n}");
    }
}

#[test]
fn catalog_matches_external_atlas() {
    let mut atlas = BTreeSet::new();
    for line in ATLAS.lines() {
        let g = parse_graph6(line).unwrap();
        assert!(g.is_connected());
        assert!(
            atlas.insert(canonical_graph6(&g).unwrap()),
            "duplicate {line}"
        );
    }
    let ours: BTreeSet<String> = (1..=7)
        .flat_map(|n| enumerate_connected_graphs(n).unwrap())
        .map(|e| e.graph6)
        .collect();
    assert_eq!(atlas.len(), 996);
    assert_eq!(ours, atlas);
}

#[test]
fn catalog_is_sorted_canonical_and_deterministic() {
    for n in 1..=6 {
        let a = enumerate_connected_graphs(n).unwrap();
        let b = enumerate_connected_graphs(n).unwrap();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0].graph6 < w[1].graph6));
        for e in &a {
            assert_eq!(canonical_graph6(&e.graph).unwrap(), e.graph6);
            assert_eq!(e.order, n);
        }
    }
}

#[test]
fn catalog_order_out_of_range() {
    assert!(enumerate_connected_graphs(0).is_err());
    assert!(enumerate_connected_graphs(8).is_err());
}
