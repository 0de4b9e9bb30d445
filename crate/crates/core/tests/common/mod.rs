#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use circulant_mdd::{CirculantNetwork, Octant, Sign};
use proptest::prelude::*;

/// Valid networks with `n` in `lo..=hi` and `r` steps.
pub fn network(lo: u64, hi: u64, r: usize) -> impl Strategy<Value = CirculantNetwork> {
    (lo..=hi)
        .prop_flat_map(move |n| (Just(n), proptest::collection::vec(1..n, r)))
        .prop_filter_map("invalid network", |(n, s)| {
            CirculantNetwork::new(n, &s.iter().map(|&x| x as i64).collect::<Vec<_>>()).ok()
        })
}

pub fn steps_i64(net: &CirculantNetwork) -> Vec<i64> {
    net.steps().iter().map(|&s| s as i64).collect()
}

/// Breadth-first search on the digraph itself.
pub fn bfs_dist(net: &CirculantNetwork) -> Vec<u32> {
    let n = net.n() as usize;
    let mut dist = vec![u32::MAX; n];
    dist[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &s in net.steps() {
            let u = (v + s as usize) % n;
            if dist[u] == u32::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Every vector of `N^r` with coordinate sum `d`.
pub fn compositions(r: usize, d: u32) -> Vec<Vec<u32>> {
    if r == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in compositions(r - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn vertex(net: &CirculantNetwork, a: &[u32]) -> u64 {
    a.iter()
        .zip(net.steps())
        .map(|(&x, &s)| x as u128 * s as u128)
        .sum::<u128>() as u64
        % net.n()
}

pub fn in_l0(net: &CirculantNetwork, a: &[i64]) -> bool {
    let n = net.n() as i128;
    a.iter().sum::<i64>() == 0
        && a.iter().zip(net.steps()).map(|(&x, &s)| x as i128 * s as i128).sum::<i128>().rem_euclid(n) == 0
}

pub fn signs(oct: &Octant) -> Vec<i64> {
    oct.signs().iter().map(|s| if *s == Sign::Neg { -1 } else { 1 }).collect()
}

/// Lattice points of `S^ε` for three steps with `0 < ‖a‖₁ <= bound`, by a plain scan.
pub fn octant_points(net: &CirculantNetwork, oct: &Octant, bound: i64) -> Vec<Vec<i64>> {
    let sg = signs(oct);
    let half = bound / 2;
    let mut pts = Vec::new();
    for x in -half..=half {
        for y in -half..=half {
            let a = vec![x, y, -x - y];
            let norm: i64 = a.iter().map(|v| v.abs()).sum();
            if norm > 0 && norm <= bound && a.iter().zip(&sg).all(|(v, g)| v * g >= 0) && in_l0(net, &a) {
                pts.push(a);
            }
        }
    }
    pts.sort();
    pts
}

/// The octant's Hilbert basis straight from the definition, searching up to
/// the two minimal boundary points.
pub fn hilbert_by_definition(net: &CirculantNetwork, oct: &Octant) -> Vec<Vec<i64>> {
    let sg = signs(oct);
    let Some(j) = (0..3).find(|&i| sg.iter().filter(|&&h| h == sg[i]).count() == 1) else {
        return Vec::new();
    };
    let mut bound = 0;
    for k in (0..3).filter(|&k| k != j) {
        let mut d = [0i64; 3];
        d[j] = sg[j];
        d[k] = sg[k];
        let c = (1..=net.n() as i64)
            .find(|&c| in_l0(net, &d.iter().map(|x| x * c).collect::<Vec<_>>()))
            .unwrap();
        bound += 2 * c;
    }
    let pts = octant_points(net, oct, bound);
    let set: BTreeSet<&Vec<i64>> = pts.iter().collect();
    pts.iter()
        .filter(|a| {
            !pts.iter().any(|b| {
                let c: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                c.iter().any(|&v| v != 0) && set.contains(&c)
            })
        })
        .cloned()
        .collect()
}
