//! Minimum distance diagrams: construction from weights, validation,
//! staircases and the uniqueness criterion.

use std::collections::BTreeSet;

use crate::arith::split_signs;
use crate::error::{Error, Result};
use crate::lattice::{HomogeneousLattice, SignConstraint};
use crate::network::{CirculantNetwork, DistanceTable, PathVector};
use crate::weight::{int_dot, WeightVector};

/// A map `D: Z_n -> N^r` choosing a minimal routing per vertex such that its
/// image is down-closed. `cells[i] = D(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mdd {
    network: CirculantNetwork,
    cells: Vec<PathVector>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TiePolicy {
    /// Fail with [`Error::WeightTie`] when the weight does not single out a routing.
    #[default]
    Error,
    /// Break ties lexicographically (smallest coordinate tuple wins).
    Lex,
}

impl Mdd {
    pub(crate) fn from_parts(network: CirculantNetwork, cells: Vec<PathVector>) -> Self {
        Mdd { network, cells }
    }

    /// Checks both defining conditions and reports the first violation:
    /// per vertex in order, routing then minimality, then down-closure.
    pub fn validate(table: &DistanceTable, cells: Vec<PathVector>) -> Result<Mdd> {
        let net = table.network();
        if cells.len() as u64 != net.n() {
            return Err(Error::CellCount { expected: net.n() as usize, found: cells.len() });
        }
        for (i, a) in cells.iter().enumerate() {
            net.check_arity(a.len())?;
            let vertex = i as u64;
            if net.vertex_unchecked(a.coords()) != vertex {
                return Err(Error::WrongVertex { vertex });
            }
            if a.norm() != table.dist()[i] as u64 {
                return Err(Error::NotMinimal { vertex });
            }
        }
        let mdd = Mdd { network: net.clone(), cells };
        for (i, a) in mdd.cells.iter().enumerate() {
            for j in 0..a.len() {
                if let Some(b) = a.minus_unit(j) {
                    if !mdd.contains(&b) {
                        return Err(Error::NotDownClosed { vertex: i as u64, coord: j });
                    }
                }
            }
        }
        Ok(mdd)
    }

    pub fn network(&self) -> &CirculantNetwork {
        &self.network
    }

    pub fn cells(&self) -> &[PathVector] {
        &self.cells
    }

    pub fn cell(&self, vertex: u64) -> &PathVector {
        &self.cells[vertex as usize]
    }

    /// Whether `a` belongs to the image.
    pub fn contains(&self, a: &PathVector) -> bool {
        a.len() == self.network.arity()
            && self.cells[self.network.vertex_unchecked(a.coords()) as usize] == *a
    }

    pub fn staircase(&self) -> Staircase {
        staircase_generators(self)
    }
}

/// `D_w(i)`: the minimal routing to `i` of least weight.
pub fn build_coherent_mdd(table: &DistanceTable, w: &WeightVector, tie: TiePolicy) -> Result<Mdd> {
    let net = table.network();
    net.check_arity(w.arity())?;
    let wi = w.scaled_integers();
    let mut cells = Vec::with_capacity(net.n() as usize);
    for (i, paths) in table.all_paths().iter().enumerate() {
        // paths are sorted, so the first minimum is the lexicographic one.
        let mut best = &paths[0];
        let mut best_w = int_dot(&wi, best);
        let mut tied = false;
        for p in &paths[1..] {
            let pw = int_dot(&wi, p);
            match pw.cmp(&best_w) {
                std::cmp::Ordering::Less => {
                    best = p;
                    best_w = pw;
                    tied = false;
                }
                std::cmp::Ordering::Equal => tied = true,
                std::cmp::Ordering::Greater => {}
            }
        }
        if tied && tie == TiePolicy::Error {
            return Err(Error::WeightTie { vertex: i as u64 });
        }
        cells.push(best.clone());
    }
    Ok(Mdd { network: net.clone(), cells })
}

/// The graded-lexicographic MDD: the lexicographically smallest minimal
/// routing per vertex.
pub fn lex_mdd(table: &DistanceTable) -> Mdd {
    Mdd {
        network: table.network().clone(),
        cells: table.all_paths().iter().map(|p| p[0].clone()).collect(),
    }
}

/// Minimal generators of the monomial ideal `N^r \ image`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    /// An antichain, sorted lexicographically.
    pub generators: Vec<PathVector>,
}

impl Staircase {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

pub fn staircase_generators(mdd: &Mdd) -> Staircase {
    let r = mdd.network.arity();
    let mut gens = BTreeSet::new();
    // Every generator g has some g_j > 0 with g - e_j in the image.
    for a in &mdd.cells {
        for j in 0..r {
            let g = a.plus_unit(j);
            if mdd.contains(&g) {
                continue;
            }
            let minimal = (0..r).all(|k| g.minus_unit(k).is_none_or(|b| mdd.contains(&b)));
            if minimal {
                gens.insert(g);
            }
        }
    }
    Staircase { generators: gens.into_iter().collect() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleLoopShape {
    Rectangle,
    LShape,
}

pub fn classify_double_loop_shape(mdd: &Mdd) -> Result<DoubleLoopShape> {
    let r = mdd.network.arity();
    if r != 2 {
        return Err(Error::UnsupportedArity { op: "classify_double_loop_shape", r });
    }
    match staircase_generators(mdd).len() {
        2 => Ok(DoubleLoopShape::Rectangle),
        3 => Ok(DoubleLoopShape::LShape),
        k => Err(Error::UnexpectedShape(k)),
    }
}

/// Whether the network has a single MDD: no image point `a` and non-zero
/// `b ∈ L0` with `a + b >= 0`.
pub fn is_unique_mdd(table: &DistanceTable) -> Result<bool> {
    let net = table.network();
    let lat = HomogeneousLattice::of(net)?;
    let mdd = lex_mdd(table);
    // a + b >= 0 needs ‖b₋‖ <= ‖a‖ <= diameter, and ‖b‖ = 2‖b₋‖.
    let bound = 2 * table.diameter() as u64;
    let free = vec![SignConstraint::Free; net.arity()];
    // The image is down-closed, so some a >= b₋ exists iff b₋ is in it.
    let unique = lat.points_bounded(&free, bound).iter().all(|b| {
        let (_, minus) = split_signs(b);
        !mdd.contains(&PathVector::new(minus))
    });
    Ok(unique)
}
