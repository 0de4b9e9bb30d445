//! Circulant digraphs `C_n(s_1, …, s_r)`, routing vectors and distance tables.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, gcd_u64};
use crate::error::{Error, Result};

/// The digraph on `Z_n` with an arc `i -> i + s` for every step `s`.
///
/// Steps are kept reduced mod `n` in the order they were given; routing
/// vectors use the same coordinate order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CirculantNetwork {
    n: u64,
    steps: Vec<u64>,
}

impl CirculantNetwork {
    pub fn new(n: u64, steps: &[i64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        if steps.is_empty() {
            return Err(Error::EmptySteps);
        }
        let reduced: Vec<u64> = steps
            .iter()
            .map(|&s| s.rem_euclid(n as i64) as u64)
            .collect();
        for (i, &s) in reduced.iter().enumerate() {
            if s == 0 {
                return Err(Error::ZeroStep { index: i });
            }
            if let Some(j) = reduced[..i].iter().position(|&t| t == s) {
                return Err(Error::DuplicateStep { first: j, second: i });
            }
        }
        let g = reduced.iter().fold(n, |g, &s| gcd_u64(g, s));
        if g != 1 {
            return Err(Error::Disconnected { gcd: g });
        }
        Ok(CirculantNetwork { n, steps: reduced })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn steps(&self) -> &[u64] {
        &self.steps
    }

    /// Number of steps `r`.
    pub fn arity(&self) -> usize {
        self.steps.len()
    }

    pub fn vertex_of(&self, a: &PathVector) -> Result<u64> {
        self.check_arity(a.len())?;
        Ok(self.vertex_unchecked(a.coords()))
    }

    pub(crate) fn vertex_unchecked(&self, a: &[u32]) -> u64 {
        let n = self.n as u128;
        let v: u128 = a
            .iter()
            .zip(&self.steps)
            .map(|(&x, &s)| x as u128 * s as u128 % n)
            .sum();
        (v % n) as u64
    }

    /// `Σ a_i s_i mod n` for an arbitrary integer vector.
    pub fn residue(&self, a: &[i64]) -> u64 {
        let n = self.n as i128;
        let v: i128 = a
            .iter()
            .zip(&self.steps)
            .map(|(&x, &s)| x as i128 * s as i128)
            .sum();
        v.rem_euclid(n) as u64
    }

    /// Membership in the full lattice `{a : Σ a_i s_i ≡ 0 mod n}`.
    pub fn lattice_contains(&self, a: &[i64]) -> Result<bool> {
        self.check_arity(a.len())?;
        Ok(self.residue(a) == 0)
    }

    pub(crate) fn check_arity(&self, found: usize) -> Result<()> {
        if found != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found });
        }
        Ok(())
    }
}

impl fmt::Display for CirculantNetwork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}(", self.n)?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// A routing: `a_i` arcs of step `s_i`. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathVector(Vec<u32>);

impl PathVector {
    pub fn new(coords: Vec<u32>) -> Self {
        PathVector(coords)
    }

    pub fn zero(r: usize) -> Self {
        PathVector(vec![0; r])
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Path length in arcs.
    pub fn norm(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn plus_unit(&self, j: usize) -> Self {
        let mut c = self.0.clone();
        c[j] += 1;
        PathVector(c)
    }

    /// `self - e_j`, if that stays non-negative.
    pub fn minus_unit(&self, j: usize) -> Option<Self> {
        if self.0[j] == 0 {
            return None;
        }
        let mut c = self.0.clone();
        c[j] -= 1;
        Some(PathVector(c))
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x as i64).collect()
    }

    /// Coordinate-wise `self <= other`.
    pub fn le(&self, other: &PathVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl From<Vec<u32>> for PathVector {
    fn from(v: Vec<u32>) -> Self {
        PathVector(v)
    }
}

/// Distances from vertex 0 together with every minimal routing per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    network: CirculantNetwork,
    dist: Vec<u32>,
    paths: Vec<Vec<PathVector>>,
}

impl DistanceTable {
    /// Builds the table level by level: every minimal routing of length
    /// `d + 1` extends one of length `d` by a single arc.
    pub fn new(net: &CirculantNetwork) -> Self {
        let n = net.n() as usize;
        let r = net.arity();
        const UNSET: u32 = u32::MAX;
        let mut dist = vec![UNSET; n];
        let mut paths: Vec<Vec<PathVector>> = vec![Vec::new(); n];
        dist[0] = 0;
        paths[0].push(PathVector::zero(r));
        let mut frontier: Vec<usize> = vec![0];
        let mut level = 0u32;
        let mut reached = 1usize;
        while reached < n {
            level += 1;
            let mut next: std::collections::BTreeMap<usize, BTreeSet<PathVector>> =
                Default::default();
            for &v in &frontier {
                for a in &paths[v] {
                    for (j, &s) in net.steps().iter().enumerate() {
                        let w = ((v as u64 + s) % net.n()) as usize;
                        if dist[w] == UNSET || dist[w] == level {
                            dist[w] = level;
                            next.entry(w).or_default().insert(a.plus_unit(j));
                        }
                    }
                }
            }
            frontier.clear();
            for (w, set) in next {
                reached += 1;
                paths[w] = set.into_iter().collect();
                frontier.push(w);
            }
        }
        DistanceTable { network: net.clone(), dist, paths }
    }

    pub fn network(&self) -> &CirculantNetwork {
        &self.network
    }

    pub fn dist(&self) -> &[u32] {
        &self.dist
    }

    /// The lexicographically sorted minimal routings to `vertex`.
    pub fn paths(&self, vertex: u64) -> &[PathVector] {
        &self.paths[vertex as usize]
    }

    pub fn all_paths(&self) -> &[Vec<PathVector>] {
        &self.paths
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Whether `a` is a minimal routing to its own vertex.
    pub fn is_minimal(&self, a: &PathVector) -> bool {
        let v = self.network.vertex_unchecked(a.coords()) as usize;
        a.norm() == self.dist[v] as u64
    }

    /// `Π |P_i|`, the number of maps satisfying the minimality condition alone.
    pub fn routing_choice_count(&self) -> BigUint {
        self.paths
            .iter()
            .fold(BigUint::from(1u32), |acc, p| acc * BigUint::from(p.len()))
    }

    /// Vertices sorted by `(distance, id)`.
    pub fn vertex_order(&self) -> Vec<u64> {
        let mut order: Vec<u64> = (0..self.network.n()).collect();
        order.sort_by_key(|&v| (self.dist[v as usize], v));
        order
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetworkStats {
    pub diameter: u32,
    pub average_distance: Ratio<u64>,
    /// `binomial(diameter + r, r)`, an upper bound for `n`.
    pub volume_bound: BigUint,
}

pub fn network_stats(table: &DistanceTable) -> NetworkStats {
    let net = table.network();
    let total: u64 = table.dist().iter().map(|&d| d as u64).sum();
    let diameter = table.diameter();
    let r = net.arity() as u64;
    NetworkStats {
        diameter,
        average_distance: Ratio::new(total, net.n()),
        volume_bound: binomial(diameter as u64 + r, r),
    }
}
